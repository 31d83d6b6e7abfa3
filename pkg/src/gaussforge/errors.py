"""Exception hierarchy shared by all gaussforge modules."""


class GaussForgeError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(GaussForgeError):
    """A diagram or input file violates a structural invariant."""


class DegenerateHeight(ValidationError):
    """Two passes of one crossing sit at the same height."""


class NonTransverse(ValidationError):
    """Two passes of one crossing have parallel tangents (mod pi)."""


class ParamCollision(ValidationError):
    """A requested strand parameter collides with an existing one."""


class NonIntegerInvariant(GaussForgeError):
    """The half-integer correction sum failed to produce an integer."""


class NotATriple(GaussForgeError):
    """Triple-point classification was asked of a non-triple crossing."""


class NonGenericOffsets(GaussForgeError):
    """A resolution offset assignment produced coincident parameters."""


class ScaleOverflow(GaussForgeError):
    """No admissible resolution scale preserves the parameter order."""


class DegenerateProjection(GaussForgeError):
    """The planar projection fails a genericity threshold."""


class SnapAmbiguity(GaussForgeError):
    """A crossing cluster is too spread out to snap confidently."""


class IsotopyViolation(GaussForgeError):
    """A perturbation could drag one strand through another."""


class GenerationExhausted(GaussForgeError):
    """Random link generation gave up after too many rejections."""


class SizeLimit(GaussForgeError):
    """An oracle input exceeds its configured crossing budget."""


class NonzeroPairwiseLinking(GaussForgeError):
    """mu123 oracle input has a nonvanishing pairwise linking number."""


class IntersectingInputs(GaussForgeError):
    """The two polygons handed to the linking integral intersect."""


class UnknownEntry(GaussForgeError, KeyError):
    """Requested corpus entry does not exist."""
