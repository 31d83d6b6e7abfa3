"""Exact combinatorial core: Gauss diagrams with multiple crossings.

A diagram is a set of transverse crossings, each crossing a bundle of
``m >= 2`` passes.  Every unordered pair of passes inside a crossing
yields one signed, oriented chord (under-pass -> over-pass), and all
invariant formulas are signed counts of chord pairs.  Parameters and
heights are exact rationals so orderings and shared-pass identity are
decided without tolerances; only tangent angles are floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import (
    DegenerateHeight,
    NonIntegerInvariant,
    NonTransverse,
    ParamCollision,
    ValidationError,
)

LONG_KNOT = "long_knot"
LONG_LINK3 = "long_link3"

KNOT_PATTERN_KEYS = ("X", "X1p", "X2p", "X3p")
LINK_PATTERN_KEYS = ("Xc1", "Xc2", "Xc3", "Xc1p", "Xc2p", "Xc3p")

#: Angles closer than this to a multiple of pi count as parallel.
ANGLE_TOL = 1e-9


@dataclass(frozen=True, order=True)
class StrandPoint:
    """A point on strand ``strand`` at exact parameter ``param``."""

    strand: int
    param: Fraction


@dataclass(frozen=True)
class Pass:
    """One strand traversal through a crossing.

    ``angle`` is the planar tangent direction (radians, in the direction
    of increasing parameter); ``height`` is the vertical coordinate at
    the crossing point.
    """

    point: StrandPoint
    angle: float
    height: Fraction


@dataclass(frozen=True)
class Crossing:
    id: str
    passes: tuple[Pass, ...]

    @property
    def multiplicity(self) -> int:
        return len(self.passes)


@dataclass(frozen=True)
class PassRef:
    """Reference to a pass as (crossing id, index into its pass list)."""

    crossing: str
    index: int


@dataclass(frozen=True)
class Chord:
    """An oriented signed chord from the under-pass to the over-pass."""

    under: PassRef
    over: PassRef
    sign: int


@dataclass(frozen=True)
class GaussDiagram:
    kind: str
    crossings: tuple[Crossing, ...]
    chords: tuple[Chord, ...]

    def crossing(self, crossing_id: str) -> Crossing:
        for c in self.crossings:
            if c.id == crossing_id:
                return c
        raise KeyError(crossing_id)

    def pass_at(self, ref: PassRef) -> Pass:
        return self.crossing(ref.crossing).passes[ref.index]


@dataclass(frozen=True)
class PatternCounts:
    """The signed pair counts, keyed per diagram kind.

    Knot keys: ``X``, ``X1p``, ``X2p``, ``X3p``.
    Link keys: ``Xc1..3`` and ``Xc1p..3p``.
    """

    counts: Mapping[str, int]

    def __getitem__(self, key: str) -> int:
        return self.counts[key]


def crossing_sign(angle_over: float, angle_under: float) -> int:
    """Sign of the frame (over tangent, under tangent).

    +1 iff det(v_over, v_under) > 0, i.e. sin(angle_under - angle_over) > 0.
    """
    s = math.sin(angle_under - angle_over)
    if abs(s) < ANGLE_TOL:
        raise NonTransverse(
            f"tangents at angles {angle_over} and {angle_under} are parallel"
        )
    return 1 if s > 0 else -1


def derive_chords(crossing: Crossing) -> list[Chord]:
    """One chord per unordered pass pair, arrow from lower to higher pass."""
    chords = []
    m = len(crossing.passes)
    for i in range(m):
        for j in range(i + 1, m):
            pi, pj = crossing.passes[i], crossing.passes[j]
            if pi.height == pj.height:
                raise DegenerateHeight(
                    f"crossing {crossing.id}: passes {i} and {j} share height"
                )
            if pi.height < pj.height:
                under, over = PassRef(crossing.id, i), PassRef(crossing.id, j)
                sign = crossing_sign(pj.angle, pi.angle)
            else:
                under, over = PassRef(crossing.id, j), PassRef(crossing.id, i)
                sign = crossing_sign(pi.angle, pj.angle)
            chords.append(Chord(under, over, sign))
    return chords


def _validate_crossing(crossing: Crossing, kind: str) -> None:
    m = len(crossing.passes)
    if m < 2:
        raise ValidationError(f"crossing {crossing.id}: needs >= 2 passes, got {m}")
    n_strands = 1 if kind == LONG_KNOT else 3
    for p in crossing.passes:
        if not 0 <= p.point.strand < n_strands:
            raise ValidationError(
                f"crossing {crossing.id}: strand {p.point.strand} out of range"
                f" for kind {kind}"
            )
    for i in range(m):
        for j in range(i + 1, m):
            pi, pj = crossing.passes[i], crossing.passes[j]
            if pi.height == pj.height:
                raise DegenerateHeight(
                    f"crossing {crossing.id}: passes {i} and {j} share height"
                )
            d = (pi.angle - pj.angle) % math.pi
            if min(d, math.pi - d) < ANGLE_TOL:
                raise NonTransverse(
                    f"crossing {crossing.id}: passes {i} and {j} are tangent"
                )


def build_diagram(kind: str, crossings: Iterable[Crossing]) -> GaussDiagram:
    """Validate the crossings and return a diagram with derived chords."""
    if kind not in (LONG_KNOT, LONG_LINK3):
        raise ValidationError(f"unknown diagram kind {kind!r}")
    crossings = tuple(crossings)
    seen_ids: set[str] = set()
    seen_params: set[StrandPoint] = set()
    for c in crossings:
        if c.id in seen_ids:
            raise ValidationError(f"duplicate crossing id {c.id!r}")
        seen_ids.add(c.id)
        _validate_crossing(c, kind)
        for p in c.passes:
            if p.point in seen_params:
                raise ValidationError(
                    f"duplicate parameter {p.point.param} on strand"
                    f" {p.point.strand}"
                )
            seen_params.add(p.point)
    chords = tuple(ch for c in crossings for ch in derive_chords(c))
    return GaussDiagram(kind, crossings, chords)


@dataclass(frozen=True)
class _Arrow:
    """Chord with resolved endpoints, used by the pattern matchers."""

    tail: StrandPoint  # under-pass
    head: StrandPoint  # over-pass
    sign: int


def _arrows(diagram: GaussDiagram) -> list[_Arrow]:
    out = []
    for ch in diagram.chords:
        out.append(
            _Arrow(
                diagram.pass_at(ch.under).point,
                diagram.pass_at(ch.over).point,
                ch.sign,
            )
        )
    return out


def match_knot_pattern(a: _Arrow, b: _Arrow) -> str | None:
    """Classify an unordered chord pair of a long-knot diagram.

    Returns one of ``X``, ``X1p``, ``X2p``, ``X3p`` or None.  Matching is
    purely order-based on the four (or three) strand parameters.
    """
    pts = {a.tail, a.head, b.tail, b.head}
    if len(pts) == 4:
        p1, p2, p3, p4 = sorted(pts)
        for first, second in ((a, b), (b, a)):
            if (
                first.tail == p1
                and first.head == p3
                and second.tail == p4
                and second.head == p2
            ):
                return "X"
        return None
    if len(pts) == 3:
        lo, mid, hi = sorted(pts)
        for first, second in ((a, b), (b, a)):
            # shared at the leftmost point: first = lo->mid, second = hi->lo
            if (
                first.tail == lo
                and first.head == mid
                and second.tail == hi
                and second.head == lo
            ):
                return "X1p"
            # both heads at the middle point: lo->mid and hi->mid
            if (
                first.tail == lo
                and first.head == mid
                and second.tail == hi
                and second.head == mid
            ):
                return "X2p"
            # shared at the rightmost point: lo->hi and hi->mid
            if (
                first.tail == lo
                and first.head == hi
                and second.tail == hi
                and second.head == mid
            ):
                return "X3p"
    return None


def match_link_pattern(a: _Arrow, b: _Arrow) -> str | None:
    """Classify an unordered chord pair of a 3-component link diagram.

    The plain patterns pair a (1->2), (3->1)-style chord duo along one
    component; the primed variants are their degenerations where the two
    endpoints on that component collapse to one shared pass.
    """
    for first, second in ((a, b), (b, a)):
        # Xc1: first = a(1)->p(2), second = q(3)->b(1), a <= b on strand 1.
        if (
            first.tail.strand == 0
            and first.head.strand == 1
            and second.tail.strand == 2
            and second.head.strand == 0
        ):
            if first.tail.param < second.head.param:
                return "Xc1"
            if first.tail == second.head:
                return "Xc1p"
        # Xc2: first = p(1)->b(2), second = q(3)->a(2), a <= b on strand 2.
        # The strand-3 chord lands first, mirroring the knot pattern where
        # the right-hand chord's head precedes the left-hand chord's head.
        if (
            first.tail.strand == 0
            and first.head.strand == 1
            and second.tail.strand == 2
            and second.head.strand == 1
        ):
            if second.head.param < first.head.param:
                return "Xc2"
            if first.head == second.head:
                return "Xc2p"
        # Xc3: first = p(1)->a(3), second = b(3)->q(2), a <= b on strand 3.
        if (
            first.tail.strand == 0
            and first.head.strand == 2
            and second.tail.strand == 2
            and second.head.strand == 1
        ):
            if first.head.param < second.tail.param:
                return "Xc3"
            if first.head == second.tail:
                return "Xc3p"
    return None


def _count_patterns(diagram: GaussDiagram, keys, matcher) -> PatternCounts:
    counts = {k: 0 for k in keys}
    arrows = _arrows(diagram)
    n = len(arrows)
    for i in range(n):
        for j in range(i + 1, n):
            key = matcher(arrows[i], arrows[j])
            if key is not None:
                counts[key] += arrows[i].sign * arrows[j].sign
    return PatternCounts(counts)


def count_knot_patterns(diagram: GaussDiagram) -> PatternCounts:
    """Signed counts of the interleaved pair and its three degenerations."""
    if diagram.kind != LONG_KNOT:
        raise ValidationError("count_knot_patterns needs a long_knot diagram")
    return _count_patterns(diagram, KNOT_PATTERN_KEYS, match_knot_pattern)


def count_link_patterns(diagram: GaussDiagram) -> PatternCounts:
    """Signed counts of the six 3-strand patterns."""
    if diagram.kind != LONG_LINK3:
        raise ValidationError("count_link_patterns needs a long_link3 diagram")
    return _count_patterns(diagram, LINK_PATTERN_KEYS, match_link_pattern)


def _as_integer(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise NonIntegerInvariant(f"{what} evaluated to non-integer {value}")
    return int(value)


def casson(diagram: GaussDiagram) -> int:
    """Casson invariant of a long-knot diagram.

    The interleaved-pair count plus half the sum of the three shared-pass
    corrections; the half-sum is always integral on consistent input.
    """
    counts = count_knot_patterns(diagram)
    total = Fraction(counts["X"]) + Fraction(
        counts["X1p"] + counts["X2p"] + counts["X3p"], 2
    )
    return _as_integer(total, "casson")


def mu123(diagram: GaussDiagram) -> int:
    """Milnor triple linking number of a 3-component long-link diagram."""
    counts = count_link_patterns(diagram)
    total = Fraction(counts["Xc1"] + counts["Xc2"] + counts["Xc3"]) + Fraction(
        counts["Xc1p"] + counts["Xc2p"] + counts["Xc3p"], 2
    )
    return _as_integer(total, "mu123")


def linking(diagram: GaussDiagram, i: int, j: int) -> int:
    """Sum of signs of chords with under-pass on strand i, over on strand j.

    For long links this equals the linking number of components i and j.
    """
    if i == j:
        raise ValidationError("linking needs two distinct component indices")
    total = 0
    for ch in diagram.chords:
        if (
            diagram.pass_at(ch.under).point.strand == i
            and diagram.pass_at(ch.over).point.strand == j
        ):
            total += ch.sign
    return total


def mirror(diagram: GaussDiagram) -> GaussDiagram:
    """Negate every height: over/under swap, so every chord reverses and
    flips sign."""
    crossings = tuple(
        Crossing(c.id, tuple(Pass(p.point, p.angle, -p.height) for p in c.passes))
        for c in diagram.crossings
    )
    return build_diagram(diagram.kind, crossings)


def insert_kink(
    diagram: GaussDiagram,
    strand: int,
    location_param: Fraction,
    sign: int,
) -> GaussDiagram:
    """Add one isolated double crossing with parameter-adjacent passes.

    The two new passes occupy the open gap between ``location_param`` and
    the next existing parameter on the strand, so no other pass separates
    them and no pattern count can change.
    """
    if sign not in (1, -1):
        raise ValidationError("kink sign must be +1 or -1")
    location_param = Fraction(location_param)
    params = sorted(
        p.point.param
        for c in diagram.crossings
        for p in c.passes
        if p.point.strand == strand
    )
    if location_param in params:
        raise ParamCollision(f"parameter {location_param} already in use")
    above = [q for q in params if q > location_param]
    gap = (above[0] - location_param) if above else Fraction(1)
    second = location_param + gap / 2
    # sign = +1 iff sin(under_angle - over_angle) > 0; the lower pass
    # (smaller height) is the under one.
    if sign > 0:
        angles = (1.0, 0.25)
    else:
        angles = (0.25, 1.0)
    kink = Crossing(
        _fresh_id(diagram, "kink"),
        (
            Pass(StrandPoint(strand, location_param), angles[0], Fraction(0)),
            Pass(StrandPoint(strand, second), angles[1], Fraction(1)),
        ),
    )
    return build_diagram(diagram.kind, diagram.crossings + (kink,))


def _fresh_id(diagram: GaussDiagram, stem: str) -> str:
    existing = {c.id for c in diagram.crossings}
    if stem not in existing:
        return stem
    k = 1
    while f"{stem}{k}" in existing:
        k += 1
    return f"{stem}{k}"
