"""Polygonal 3-space links: projection, crossing extraction, generators.

The projection direction is fixed to N = (0, 0, 1): planar positions are
the xy coordinates and heights are z.  Long components must start and
end on the prescribed tail rays y = (1 - i)|x| (component i, 0-based)
with |x| >= 1, which guarantees that the closing arcs of the diagram
closure nest without extra crossings.  Inputs whose projection is
degenerate for this direction must be rotated by the caller; no
re-projection search is attempted.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .core import (
    LONG_KNOT,
    LONG_LINK3,
    Crossing,
    GaussDiagram,
    Pass,
    StrandPoint,
    build_diagram,
)
from .errors import (
    DegenerateProjection,
    GenerationExhausted,
    IsotopyViolation,
    SnapAmbiguity,
    ValidationError,
)
from .oracles import _segment_distance

RAIL_TOL = 1e-9


@dataclass(frozen=True)
class PolyLink:
    """Polygonal link: one float (n, 3) vertex array per component."""

    components: tuple[np.ndarray, ...]
    closure: str  # "long" | "closed"


@dataclass(frozen=True)
class GenericityReport:
    min_crossing_angle: float
    min_height_gap: float
    min_cluster_separation: float


@dataclass(frozen=True)
class Extraction:
    diagram: GaussDiagram
    report: GenericityReport


def _rail_slope(index: int) -> float:
    return float(1 - index)


def poly_link(components, closure: str) -> PolyLink:
    """Validate and build a PolyLink."""
    if closure not in ("long", "closed"):
        raise ValidationError(f"closure must be 'long' or 'closed', got {closure!r}")
    comps = []
    for ci, verts in enumerate(components):
        arr = np.asarray(verts, dtype=float)
        if arr.ndim != 2 or arr.shape[1] != 3:
            raise ValidationError(f"component {ci} is not a list of 3D points")
        need = 2 if closure == "long" else 3
        if len(arr) < need:
            raise ValidationError(f"component {ci} has fewer than {need} vertices")
        deltas = np.linalg.norm(np.diff(arr, axis=0), axis=1)
        if closure == "closed":
            deltas = np.append(deltas, np.linalg.norm(arr[0] - arr[-1]))
        if np.any(deltas == 0):
            raise ValidationError(f"component {ci} repeats consecutive vertices")
        comps.append(arr)
    if closure == "long":
        if len(comps) not in (1, 3):
            raise ValidationError(
                f"long links need 1 or 3 components, got {len(comps)}"
            )
        scale = max(1.0, bounding_diameter(comps))
        for ci, arr in enumerate(comps):
            slope = _rail_slope(ci)
            for which, v in (("first", arr[0]), ("last", arr[-1])):
                x, y, z = v
                ok = (
                    abs(x) >= 1.0 - RAIL_TOL * scale
                    and abs(y - slope * abs(x)) <= RAIL_TOL * scale
                    and abs(z) <= RAIL_TOL * scale
                )
                if not ok:
                    raise ValidationError(
                        f"component {ci} {which} vertex {tuple(v)} is not on"
                        f" its tail ray y = {slope}|x|, |x| >= 1"
                    )
            if arr[0][0] > 0 or arr[-1][0] < 0:
                raise ValidationError(
                    f"component {ci} must run from the x<0 ray to the x>0 ray"
                )
    return PolyLink(tuple(comps), closure)


def bounding_diameter(comps) -> float:
    pts = np.vstack(comps)
    return float(np.linalg.norm(pts.max(axis=0) - pts.min(axis=0)))


def project(link: PolyLink):
    """Planar vertex positions and heights, vertex-aligned per component."""
    return [(arr[:, :2].copy(), arr[:, 2].copy()) for arr in link.components]


@dataclass
class _Hit:
    comp: int
    seg: int
    arclen: float
    point: np.ndarray
    height: float
    angle: float
    pair: int  # intersection event id shared by the two partner hits


def _segments(link: PolyLink):
    """Per component: vertex array (closed components repeat the start)."""
    out = []
    for arr in link.components:
        if link.closure == "closed":
            arr = np.vstack([arr, arr[:1]])
        out.append(arr)
    return out


def _adjacent(link: PolyLink, comp_len: int, si: int, sj: int) -> bool:
    if abs(si - sj) <= 1:
        return True
    return link.closure == "closed" and abs(si - sj) == comp_len - 1


def _collect_hits(link: PolyLink, snap_eps: float) -> list[_Hit]:
    polys = _segments(link)
    cum = []
    for arr in polys:
        lens = np.linalg.norm(np.diff(arr, axis=0), axis=1)
        cum.append(np.concatenate([[0.0], np.cumsum(lens)]))
    hits: list[_Hit] = []
    pair_id = 0
    for ci in range(len(polys)):
        for cj in range(ci, len(polys)):
            a, b = polys[ci], polys[cj]
            for si in range(len(a) - 1):
                sj_start = si + 1 if ci == cj else 0
                for sj in range(sj_start, len(b) - 1):
                    if ci == cj and _adjacent(link, len(a) - 1, si, sj):
                        continue
                    hit = _intersect_pair(
                        ci, si, a, cum[ci], cj, sj, b, cum[cj], pair_id, snap_eps
                    )
                    if hit is not None:
                        hits.extend(hit)
                        pair_id += 1
    return hits


def _intersect_pair(ci, si, a, cum_i, cj, sj, b, cum_j, pair_id, snap_eps):
    p, p2 = a[si, :2], a[si + 1, :2]
    q, q2 = b[sj, :2], b[sj + 1, :2]
    u, v = p2 - p, q2 - q
    den = float(u[0] * v[1] - u[1] * v[0])
    lu, lv = float(np.linalg.norm(u)), float(np.linalg.norm(v))
    if abs(den) <= 1e-12 * lu * lv:
        # parallel: degenerate only if the segments actually overlap
        w = q - p
        off = abs(float(w[0] * u[1] - w[1] * u[0])) / lu
        if off <= snap_eps:
            t0 = float(np.dot(w, u)) / (lu * lu)
            t1 = float(np.dot(q2 - p, u)) / (lu * lu)
            if max(min(t0, t1), 0.0) <= min(max(t0, t1), 1.0):
                raise DegenerateProjection(
                    f"overlapping parallel segments: component {ci} segment"
                    f" {si} and component {cj} segment {sj}"
                )
        return None
    w = q - p
    t = float(w[0] * v[1] - w[1] * v[0]) / den
    s = float(w[0] * u[1] - w[1] * u[0]) / den
    guard = 1e-12
    for val, name, c_, s_ in ((t, "t", ci, si), (s, "s", cj, sj)):
        if -guard <= val <= guard or 1 - guard <= val <= 1 + guard:
            raise DegenerateProjection(
                f"crossing lands on a vertex of component {c_} segment {s_}"
            )
    if not (0.0 < t < 1.0 and 0.0 < s < 1.0):
        return None
    pt = p + t * u
    zi = a[si, 2] + t * (a[si + 1, 2] - a[si, 2])
    zj = b[sj, 2] + s * (b[sj + 1, 2] - b[sj, 2])
    li = cum_i[si] + t * (cum_i[si + 1] - cum_i[si])
    lj = cum_j[sj] + s * (cum_j[sj + 1] - cum_j[sj])
    return [
        _Hit(ci, si, li, pt, zi, math.atan2(u[1], u[0]), pair_id),
        _Hit(cj, sj, lj, pt, zj, math.atan2(v[1], v[0]), pair_id),
    ]


def _cluster(hits: list[_Hit], snap_eps: float) -> list[list[int]]:
    n = len(hits)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if np.linalg.norm(hits[i].point - hits[j].point) <= snap_eps:
                parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return list(groups.values())


def _group_passes(link, hits, members) -> list[list[int]]:
    """Split a cluster's hits into strand traversals via segment adjacency."""
    comp_lens = [
        len(arr) - (0 if link.closure == "long" else 0) - 1
        for arr in _segments(link)
    ]
    ms = sorted(members, key=lambda i: (hits[i].comp, hits[i].seg))
    passes: list[list[int]] = []
    for i in ms:
        placed = False
        for grp in passes:
            h0 = hits[grp[0]]
            if hits[i].comp == h0.comp and any(
                _adjacent(link, comp_lens[h0.comp] + 1, hits[i].seg, hits[g].seg)
                or hits[i].seg == hits[g].seg
                for g in grp
            ):
                grp.append(i)
                placed = True
                break
        if not placed:
            passes.append([i])
    return passes


def extract_diagram(
    link: PolyLink,
    snap_eps: float | None = None,
    min_angle: float = 1e-6,
    min_height_gap: float | None = None,
) -> Extraction:
    """Gauss diagram of a long polygonal link, with a genericity report.

    Planar segment intersections within snap_eps of each other are merged
    into one crossing with one pass per strand traversal.
    """
    if link.closure != "long":
        raise ValidationError(
            "extract_diagram ingests long links; closed polylines serve"
            " the linking-integral oracle"
        )
    diam = bounding_diameter(link.components)
    if snap_eps is None:
        snap_eps = 1e-6 * diam
    if min_height_gap is None:
        min_height_gap = 1e-9 * diam

    hits = _collect_hits(link, snap_eps)
    clusters = _cluster(hits, snap_eps)

    crossing_data = []
    min_ang = math.inf
    min_gap = math.inf
    for members in clusters:
        pts = np.array([hits[i].point for i in members])
        center = pts.mean(axis=0)
        diam_c = max(
            (
                float(np.linalg.norm(pts[i] - pts[j]))
                for i in range(len(pts))
                for j in range(i + 1, len(pts))
            ),
            default=0.0,
        )
        if diam_c > snap_eps:
            raise SnapAmbiguity(
                f"crossing cluster near {tuple(center)} has diameter"
                f" {diam_c:.3g}, beyond snap_eps {snap_eps:.3g}"
            )
        groups = _group_passes(link, hits, members)
        m = len(groups)
        pair_ids = {hits[i].pair for i in members}
        if m < 2 or len(members) != m * (m - 1) or len(pair_ids) * 2 != len(members):
            raise SnapAmbiguity(
                f"cluster near {tuple(center)} mixes {len(members)} hits"
                f" into {m} traversals; expected a clean {m}-fold crossing"
            )
        passes = []
        for grp in groups:
            rep = min(grp, key=lambda i: float(np.linalg.norm(hits[i].point - center)))
            passes.append(
                (
                    hits[rep].comp,
                    float(np.mean([hits[i].arclen for i in grp])),
                    hits[rep].angle,
                    float(np.mean([hits[i].height for i in grp])),
                )
            )
        for i in range(m):
            for j in range(i + 1, m):
                d = abs(passes[i][2] - passes[j][2]) % math.pi
                ang = min(d, math.pi - d)
                gap = abs(passes[i][3] - passes[j][3])
                min_ang = min(min_ang, ang)
                min_gap = min(min_gap, gap)
                if ang < min_angle:
                    raise DegenerateProjection(
                        f"near-tangent traversals (angle {ang:.3g}) at"
                        f" crossing near {tuple(center)}"
                    )
                if gap < min_height_gap:
                    raise DegenerateProjection(
                        f"height gap {gap:.3g} below threshold at crossing"
                        f" near {tuple(center)}"
                    )
        crossing_data.append((center, passes))

    min_sep = math.inf
    for i in range(len(crossing_data)):
        for j in range(i + 1, len(crossing_data)):
            sep = float(np.linalg.norm(crossing_data[i][0] - crossing_data[j][0]))
            min_sep = min(min_sep, sep)
    if min_sep <= 10 * snap_eps:
        raise SnapAmbiguity(
            f"distinct crossing clusters only {min_sep:.3g} apart"
            f" (ambiguity band up to {10 * snap_eps:.3g})"
        )

    # exact parameters by rank within each strand
    all_passes = []
    for idx, (center, passes) in enumerate(crossing_data):
        for k, p in enumerate(passes):
            all_passes.append((p[0], p[1], idx, k))
    rank: dict[tuple[int, int], Fraction] = {}
    by_strand: dict[int, list] = {}
    for strand, arclen, idx, k in all_passes:
        by_strand.setdefault(strand, []).append((arclen, idx, k))
    for strand, items in by_strand.items():
        items.sort()
        for r, (_, idx, k) in enumerate(items):
            rank[(idx, k)] = Fraction(r + 1)

    order = sorted(
        range(len(crossing_data)),
        key=lambda idx: (
            min(p[0] for p in crossing_data[idx][1]),
            min(float(rank[(idx, k)]) for k in range(len(crossing_data[idx][1]))),
        ),
    )
    crossings = []
    for new_id, idx in enumerate(order):
        _, passes = crossing_data[idx]
        crossings.append(
            Crossing(
                f"x{new_id}",
                tuple(
                    Pass(
                        StrandPoint(p[0], rank[(idx, k)]),
                        p[2],
                        Fraction(p[3]).limit_denominator(10**12),
                    )
                    for k, p in enumerate(passes)
                ),
            )
        )
    kind = LONG_KNOT if len(link.components) == 1 else LONG_LINK3
    diagram = build_diagram(kind, tuple(crossings))
    report = GenericityReport(min_ang, min_gap, min_sep)
    return Extraction(diagram, report)


def perturb(link: PolyLink, magnitude: float, seed: int = 0) -> PolyLink:
    """Jitter interior vertices, refusing moves that could cross strands.

    The check is conservative: any pair of non-adjacent segments closer
    in 3-space than the largest possible joint displacement is rejected.
    """
    if magnitude < 0:
        raise ValidationError("magnitude must be nonnegative")
    if magnitude > 0:
        bound = 2.0 * magnitude * math.sqrt(3.0)
        polys = _segments(link)
        for ci in range(len(polys)):
            for cj in range(ci, len(polys)):
                a, b = polys[ci], polys[cj]
                for si in range(len(a) - 1):
                    sj_start = si + 1 if ci == cj else 0
                    for sj in range(sj_start, len(b) - 1):
                        if ci == cj and _adjacent(link, len(a) - 1, si, sj):
                            continue
                        d = _segment_distance(a[si], a[si + 1], b[sj], b[sj + 1])
                        if d <= bound:
                            raise IsotopyViolation(
                                f"segments {ci}:{si} and {cj}:{sj} are only"
                                f" {d:.3g} apart; jitter up to {bound:.3g}"
                                " could cross them"
                            )
    rng = random.Random(seed)
    comps = []
    for arr in link.components:
        arr = arr.copy()
        lo = 1 if link.closure == "long" else 0
        hi = len(arr) - 1 if link.closure == "long" else len(arr)
        for i in range(lo, hi):
            arr[i] += np.array(
                [rng.uniform(-magnitude, magnitude) for _ in range(3)]
            )
        comps.append(arr)
    return PolyLink(tuple(comps), link.closure)


def random_long_link(
    seed: int,
    components: int = 1,
    segments_per_component: int = 8,
    max_crossings: int | None = None,
    retries: int = 200,
) -> PolyLink:
    """Seeded random PL long knot or 3-component link with a clean diagram.

    Candidates are resampled until extract_diagram succeeds at default
    tolerances (and, optionally, stays under a crossing budget).
    """
    if components not in (1, 3):
        raise ValidationError("components must be 1 or 3")
    if segments_per_component < 2:
        raise ValidationError("need at least 2 segments per component")
    rng = random.Random(seed)
    for _ in range(retries):
        comps = []
        for ci in range(components):
            slope = _rail_slope(ci)
            verts = [(-1.0, slope, 0.0)]
            for _ in range(segments_per_component - 1):
                verts.append(
                    (
                        rng.uniform(-0.9, 0.9),
                        rng.uniform(-1.0, 1.0),
                        rng.uniform(-1.0, 1.0),
                    )
                )
            verts.append((1.0, slope, 0.0))
            comps.append(verts)
        try:
            link = poly_link(comps, "long")
            extraction = extract_diagram(link)
        except (ValidationError, DegenerateProjection, SnapAmbiguity):
            continue
        if max_crossings is not None:
            n = sum(
                c.multiplicity * (c.multiplicity - 1) // 2
                for c in extraction.diagram.crossings
            )
            if n > max_crossings:
                continue
        return link
    raise GenerationExhausted(
        f"no viable link after {retries} samples (seed {seed})"
    )


def close_link(link: PolyLink) -> list[np.ndarray]:
    """Closed polygon per component, routed far below the link body.

    Each closing path drops from the outgoing tail end to depth
    -(3 + component index), runs back under everything, and rises to the
    incoming tail end, adding no crossings above any body strand.
    """
    if link.closure == "closed":
        return [arr.copy() for arr in link.components]
    out = []
    for ci, arr in enumerate(link.components):
        depth = -(3.0 + ci + bounding_diameter(link.components))
        start, end = arr[0], arr[-1]
        closure = np.array(
            [
                [end[0], end[1], depth],
                [start[0], start[1], depth],
            ]
        )
        out.append(np.vstack([arr, closure]))
    return out
