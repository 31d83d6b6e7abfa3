"""Splitting multiple crossings into double crossings.

Each pass of an m-fold crossing is modelled as a planar line through the
crossing point, displaced by a small normal offset.  Pairwise
intersections of the displaced lines become the m(m-1)/2 replacement
double crossings; heights and tangent angles (hence arrows and signs)
are inherited from the original passes.  The invariant formulas must be
blind to the choice of offsets, which is the central consistency
property this package tests.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .core import Crossing, GaussDiagram, Pass, StrandPoint, build_diagram, derive_chords
from .errors import NonGenericOffsets, NotATriple, ScaleOverflow

LEFT = "<-"
RIGHT = "->"


@dataclass(frozen=True)
class TriplePointType:
    """Direction of the extreme-parameter chord plus the three signs.

    ``signs`` = (s1, s2, s3) with s1 the sign of the chord between the
    parameter-extreme passes, s2 of the chord between the two earliest
    passes, s3 of the chord between the two latest ones.
    """

    direction: str
    signs: tuple[int, int, int]


@dataclass(frozen=True)
class OffsetAssignment:
    """Exact normal displacement for each pass of one crossing."""

    offsets: tuple[Fraction, ...]

    @staticmethod
    def of(*values) -> "OffsetAssignment":
        return OffsetAssignment(tuple(Fraction(v) for v in values))


def classify_triple(crossing: Crossing) -> TriplePointType:
    """Type of a 3-fold crossing, derived from its chords."""
    if crossing.multiplicity != 3:
        raise NotATriple(
            f"crossing {crossing.id} has multiplicity {crossing.multiplicity}"
        )
    order = sorted(range(3), key=lambda i: crossing.passes[i].point.param)
    first, mid, last = order
    chords = {}
    for ch in derive_chords(crossing):
        key = frozenset((ch.under.index, ch.over.index))
        chords[key] = ch
    extreme = chords[frozenset((first, last))]
    direction = LEFT if extreme.under.index == last else RIGHT
    s1 = extreme.sign
    s2 = chords[frozenset((first, mid))].sign
    s3 = chords[frozenset((mid, last))].sign
    return TriplePointType(direction, (s1, s2, s3))


def _intersection_param(
    theta_k: float, theta_l: float, delta_k: Fraction, delta_l: Fraction
) -> Fraction:
    """Parameter along pass k of its intersection with pass l.

    Pass k is the line t * u(theta_k) + delta_k * n(theta_k) with
    u = (cos, sin) and n = (-sin, cos).
    """
    d = theta_k - theta_l
    t = (float(delta_l) - float(delta_k) * math.cos(d)) / math.sin(d)
    return Fraction(t)


def resolve_crossing(
    diagram: GaussDiagram, crossing_id: str, offsets: OffsetAssignment
) -> GaussDiagram:
    """Replace one m-fold crossing by m(m-1)/2 double crossings."""
    crossing = diagram.crossing(crossing_id)
    m = crossing.multiplicity
    if len(offsets.offsets) != m:
        raise NonGenericOffsets(
            f"need {m} offsets for crossing {crossing_id},"
            f" got {len(offsets.offsets)}"
        )

    # t[k][l]: parameter along pass k of the intersection with pass l.
    t: list[dict[int, Fraction]] = [dict() for _ in range(m)]
    for k in range(m):
        for l in range(m):
            if k == l:
                continue
            t[k][l] = _intersection_param(
                crossing.passes[k].angle,
                crossing.passes[l].angle,
                offsets.offsets[k],
                offsets.offsets[l],
            )
        if len(set(t[k].values())) != m - 1:
            raise NonGenericOffsets(
                f"coincident intersection parameters along pass {k}"
                f" of crossing {crossing_id}"
            )

    scale = _admissible_scale(diagram, crossing, t)

    new_crossings = []
    for k in range(m):
        for l in range(k + 1, m):
            pk, pl = crossing.passes[k], crossing.passes[l]
            new_crossings.append(
                Crossing(
                    f"{crossing_id}.{k}-{l}",
                    (
                        Pass(
                            StrandPoint(
                                pk.point.strand, pk.point.param + scale * t[k][l]
                            ),
                            pk.angle,
                            pk.height,
                        ),
                        Pass(
                            StrandPoint(
                                pl.point.strand, pl.point.param + scale * t[l][k]
                            ),
                            pl.angle,
                            pl.height,
                        ),
                    ),
                )
            )
    kept = tuple(c for c in diagram.crossings if c.id != crossing_id)
    return build_diagram(diagram.kind, kept + tuple(new_crossings))


def _admissible_scale(
    diagram: GaussDiagram, crossing: Crossing, t: list[dict[int, Fraction]]
) -> Fraction:
    """A scale keeping every new parameter inside its pass's free gap."""
    per_strand: dict[int, list[Fraction]] = {}
    for c in diagram.crossings:
        for p in c.passes:
            per_strand.setdefault(p.point.strand, []).append(p.point.param)
    scale = Fraction(1)
    for k, pk in enumerate(crossing.passes):
        reach = max(abs(v) for v in t[k].values())
        if reach == 0:
            continue
        gap = min(
            (
                abs(q - pk.point.param)
                for q in per_strand[pk.point.strand]
                if q != pk.point.param
            ),
            default=Fraction(1),
        )
        if gap == 0:
            raise ScaleOverflow(
                f"pass at {pk.point.param} has no free gap on its strand"
            )
        scale = min(scale, gap / (3 * reach))
    return scale


def resolve_crossing_seeded(
    diagram: GaussDiagram, crossing_id: str, seed: int = 0
) -> GaussDiagram:
    """resolve_crossing with pseudo-random generic offsets from a seed."""
    rng = random.Random(seed)
    m = diagram.crossing(crossing_id).multiplicity
    for _ in range(32):
        offsets = OffsetAssignment(
            tuple(Fraction(rng.randint(-(10**6), 10**6), 10**7) for _ in range(m))
        )
        try:
            return resolve_crossing(diagram, crossing_id, offsets)
        except NonGenericOffsets:
            continue
    raise NonGenericOffsets(f"no generic offsets found for crossing {crossing_id}")


def resolve_all(diagram: GaussDiagram, seed: int = 0) -> GaussDiagram:
    """Resolve every crossing of multiplicity >= 3 with seeded offsets."""
    out = diagram
    for n, crossing in enumerate(diagram.crossings):
        if crossing.multiplicity < 3:
            continue
        out = resolve_crossing_seeded(out, crossing.id, seed + 1000003 * n)
    return out
