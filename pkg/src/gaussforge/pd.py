"""Closed planar diagrams as PD codes.

Arcs are the edges of the 4-valent diagram graph: every strand passage
through a crossing ends one arc and starts the next.  A crossing stores
its four incident arcs counterclockwise starting from the incoming
under-arc; with the crossing sign that fixes which over slot is incoming
(positive: over runs d -> b, negative: b -> d).

Text format, one crossing per line::

    X a b c d +

Components are recovered by walking successor arcs and are ordered by
their smallest arc label.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import LONG_KNOT, GaussDiagram
from .errors import ValidationError


@dataclass(frozen=True)
class PDCrossing:
    a: int
    b: int
    c: int
    d: int
    sign: int

    @property
    def under_in(self) -> int:
        return self.a

    @property
    def under_out(self) -> int:
        return self.c

    @property
    def over_in(self) -> int:
        return self.d if self.sign > 0 else self.b

    @property
    def over_out(self) -> int:
        return self.b if self.sign > 0 else self.d


@dataclass(frozen=True)
class ClosedDiagram:
    """PD crossings plus the arc cycle of every component."""

    crossings: tuple[PDCrossing, ...]
    components: tuple[tuple[int, ...], ...]

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)


@dataclass(frozen=True)
class Visit:
    """One passage of a component through a crossing."""

    crossing: int  # index into ClosedDiagram.crossings
    over: bool
    in_arc: int
    out_arc: int


def _successors(crossings: tuple[PDCrossing, ...]) -> dict[int, tuple[int, int, bool]]:
    """Map incoming arc -> (crossing index, outgoing arc, passes over)."""
    succ: dict[int, tuple[int, int, bool]] = {}
    for idx, x in enumerate(crossings):
        for in_arc, out_arc, over in (
            (x.under_in, x.under_out, False),
            (x.over_in, x.over_out, True),
        ):
            if in_arc in succ:
                raise ValidationError(f"arc {in_arc} is incoming at two crossings")
            succ[in_arc] = (idx, out_arc, over)
    return succ


def closed_diagram(crossings, components=None) -> ClosedDiagram:
    """Build a validated ClosedDiagram.

    Component cycles are derived from the crossings when not given.
    An explicit ``components`` may additionally contain empty cycles for
    crossing-free circles, which the arc data alone cannot represent.
    """
    crossings = tuple(crossings)
    for x in crossings:
        if x.sign not in (1, -1):
            raise ValidationError(f"bad crossing sign {x.sign}")
    succ = _successors(crossings)
    outgoing = sorted(out for _, out, _ in succ.values())
    if outgoing != sorted(succ):
        raise ValidationError("arcs do not pair up into closed cycles")
    remaining = set(succ)
    derived = []
    while remaining:
        start = min(remaining)
        cycle = []
        arc = start
        while True:
            cycle.append(arc)
            remaining.discard(arc)
            arc = succ[arc][1]
            if arc == start:
                break
            if arc not in remaining:
                raise ValidationError(f"arc {arc} revisited before cycle closed")
        derived.append(tuple(cycle))
    derived.sort(key=min)
    if components is None:
        return ClosedDiagram(crossings, tuple(derived))
    components = tuple(tuple(c) for c in components)
    given = sorted((c for c in components if c), key=min)
    rotated = []
    for cycle in given:
        k = cycle.index(min(cycle))
        rotated.append(cycle[k:] + cycle[:k])
    if rotated != derived:
        raise ValidationError("given component cycles disagree with crossings")
    return ClosedDiagram(crossings, components)


def visits(diagram: ClosedDiagram) -> list[list[Visit]]:
    """Per component, the crossing passages in traversal order."""
    succ = _successors(diagram.crossings)
    out = []
    for cycle in diagram.components:
        comp = []
        for arc in cycle:
            idx, out_arc, over = succ[arc]
            comp.append(Visit(idx, over, arc, out_arc))
        out.append(comp)
    return out


def parse_pd(text: str) -> ClosedDiagram:
    """Parse the one-crossing-per-line text format."""
    crossings = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 6 or parts[0] != "X":
            raise ValidationError(f"line {lineno}: expected 'X a b c d +|-'")
        try:
            a, b, c, d = (int(p) for p in parts[1:5])
        except ValueError as exc:
            raise ValidationError(f"line {lineno}: bad arc label") from exc
        if parts[5] not in ("+", "-"):
            raise ValidationError(f"line {lineno}: sign must be + or -")
        crossings.append(PDCrossing(a, b, c, d, 1 if parts[5] == "+" else -1))
    return closed_diagram(crossings)


def emit_pd(diagram: ClosedDiagram) -> str:
    lines = [
        f"X {x.a} {x.b} {x.c} {x.d} {'+' if x.sign > 0 else '-'}"
        for x in diagram.crossings
    ]
    return "\n".join(lines) + "\n"


def close_diagram(diagram: GaussDiagram) -> ClosedDiagram:
    """Closure of a long knot or link diagram with only double crossings.

    The closing arcs connect each strand's outgoing tail to its incoming
    tail around the diagram's disk.  With the fixed tail slopes the six
    long-link ends interleave as R3 R2 R1 L1 L2 L3 around the boundary
    circle, so the closing arcs nest and the closure adds no crossings;
    the PD code is read off the per-strand parameter order.
    """
    if any(c.multiplicity != 2 for c in diagram.crossings):
        raise ValidationError(
            "close_diagram needs double crossings only; resolve first"
        )
    n_strands = 1 if diagram.kind == LONG_KNOT else 3
    role: dict[tuple[str, int], bool] = {}  # (crossing id, pass index) -> over?
    sign: dict[str, int] = {}
    for ch in diagram.chords:
        role[(ch.under.crossing, ch.under.index)] = False
        role[(ch.over.crossing, ch.over.index)] = True
        sign[ch.under.crossing] = ch.sign
    slot_arcs: dict[str, dict[str, int]] = {}
    components = []
    next_arc = 1
    for s in range(n_strands):
        order = sorted(
            (
                (c.id, i)
                for c in diagram.crossings
                for i, p in enumerate(c.passes)
                if p.point.strand == s
            ),
            key=lambda ref: diagram.crossing(ref[0]).passes[ref[1]].point.param,
        )
        n = len(order)
        base = next_arc
        next_arc += n
        components.append(tuple(range(base, base + n)))
        for pos, ref in enumerate(order):
            in_arc = base + pos
            out_arc = base + (pos + 1) % n
            slots = slot_arcs.setdefault(ref[0], {})
            if role[ref]:
                slots["over_in"], slots["over_out"] = in_arc, out_arc
            else:
                slots["under_in"], slots["under_out"] = in_arc, out_arc
    crossings = []
    for c in diagram.crossings:
        s = sign[c.id]
        slots = slot_arcs[c.id]
        if s > 0:
            b, d = slots["over_out"], slots["over_in"]
        else:
            b, d = slots["over_in"], slots["over_out"]
        crossings.append(
            PDCrossing(slots["under_in"], b, slots["under_out"], d, s)
        )
    return closed_diagram(crossings, tuple(components))
