"""Independent ground-truth computations.

Three oracles cross-check the pattern-pairing engine through entirely
different mathematics: a skein-relation recursion for the Conway
polynomial (whose z^2 coefficient is the Casson invariant), a Magnus
expansion of a longitude for the triple linking number, and an exact
solid-angle evaluation of the Gauss integral for pairwise linking.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    IntersectingInputs,
    NonzeroPairwiseLinking,
    SizeLimit,
    ValidationError,
)
from .pd import ClosedDiagram, visits

# ---------------------------------------------------------------------------
# Conway polynomial via the skein relation


@dataclass(frozen=True)
class ConwayPoly:
    """Integer coefficients of powers of z, constant term first."""

    coeffs: tuple[int, ...]

    def coeff(self, power: int) -> int:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return 0

    def __str__(self) -> str:
        if not any(self.coeffs):
            return "0"
        parts = []
        for p, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if p == 0:
                parts.append(str(c))
            else:
                z = "z" if p == 1 else f"z^{p}"
                if c == 1:
                    parts.append(z)
                elif c == -1:
                    parts.append(f"-{z}")
                else:
                    parts.append(f"{c}{z}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out


def _first_bad(comps, signs):
    """First crossing met on the under strand before its over strand.

    A diagram with no such crossing is descending, hence an unlink or
    unknot, and the recursion bottoms out.
    """
    seen = set()
    for ci, comp in enumerate(comps):
        for vi, (c, over) in enumerate(comp):
            if c in seen:
                continue
            seen.add(c)
            if not over:
                return ci, vi, c
    return None


def _locate(comps, c, skip):
    for ci, comp in enumerate(comps):
        for vi, (cc, _) in enumerate(comp):
            if cc == c and (ci, vi) != skip:
                return ci, vi
    raise AssertionError(f"crossing {c} seen only once")


def _smooth(comps, ci, vi, cj, vj):
    """Oriented smoothing removing crossing visits (ci,vi) and (cj,vj)."""
    if ci == cj:
        comp = comps[ci]
        i, j = sorted((vi, vj))
        a = comp[i + 1 : j]
        b = comp[j + 1 :] + comp[:i]
        rest = comps[:ci] + comps[ci + 1 :]
        return rest + (a, b)
    a, b = comps[ci], comps[cj]
    merged = a[:vi] + b[vj + 1 :] + b[:vj] + a[vi + 1 :]
    rest = tuple(c for k, c in enumerate(comps) if k not in (ci, cj))
    return rest + (merged,)


def _poly_add(p: dict, q: dict, factor: int, shift: int) -> dict:
    out = dict(p)
    for k, v in q.items():
        out[k + shift] = out.get(k + shift, 0) + factor * v
    return {k: v for k, v in out.items() if v}


def _nabla(comps, signs, memo) -> dict:
    key = (comps, tuple(sorted(signs.items())))
    if key in memo:
        return memo[key]
    bad = _first_bad(comps, signs)
    if bad is None:
        result = {0: 1} if len(comps) == 1 else {}
        memo[key] = result
        return result
    ci, vi, c = bad
    cj, vj = _locate(comps, c, (ci, vi))

    switched = tuple(
        tuple((cc, not over if cc == c else over) for cc, over in comp)
        for comp in comps
    )
    sw_signs = dict(signs)
    sw_signs[c] = -signs[c]
    sw = _nabla(switched, sw_signs, memo)

    smoothed = _smooth(comps, ci, vi, cj, vj)
    sm_signs = {k: v for k, v in signs.items() if k != c}
    sm = _nabla(smoothed, sm_signs, memo)

    # nabla(L+) - nabla(L-) = z * nabla(L0)
    result = _poly_add(sw, sm, signs[c], 1)
    memo[key] = result
    return result


def conway(d: ClosedDiagram, size_limit: int = 12) -> ConwayPoly:
    """Conway polynomial by switching toward descending diagrams."""
    if d.n_crossings > size_limit:
        raise SizeLimit(
            f"{d.n_crossings} crossings exceeds the skein budget {size_limit}"
        )
    if d.n_crossings == 0:
        value = 1 if len(d.components) <= 1 else 0
        return ConwayPoly((value,))
    comps = tuple(
        tuple((v.crossing, v.over) for v in comp) for comp in visits(d)
    )
    signs = {i: x.sign for i, x in enumerate(d.crossings)}
    poly = _nabla(comps, signs, {})
    top = max(poly, default=0)
    return ConwayPoly(tuple(poly.get(k, 0) for k in range(top + 1)))


def casson_oracle(d: ClosedDiagram, size_limit: int = 12) -> int:
    """Coefficient of z^2 of the Conway polynomial."""
    return conway(d, size_limit).coeff(2)


# ---------------------------------------------------------------------------
# Magnus expansion for the triple linking number
#
# Formal power series in noncommuting X_0, X_1, X_2 truncated at total
# degree 2, stored as {word tuple: int} with words of length <= 2.


def _series_one():
    return {(): 1}


def _series_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for wa, ca in a.items():
        for wb, cb in b.items():
            w = wa + wb
            if len(w) > 2:
                continue
            out[w] = out.get(w, 0) + ca * cb
    return {w: c for w, c in out.items() if c}


def _series_inv(a: dict) -> dict:
    if a.get((), 0) != 1:
        raise AssertionError("inverting a series with constant term != 1")
    rest = {w: c for w, c in a.items() if w}
    # (1 + r)^-1 = 1 - r + r^2 truncated at degree 2
    out = _series_one()
    out = _poly_dict_sub(out, rest)
    return _poly_dict_add(out, _series_mul(rest, rest))


def _poly_dict_add(a: dict, b: dict) -> dict:
    out = dict(a)
    for w, c in b.items():
        out[w] = out.get(w, 0) + c
    return {w: c for w, c in out.items() if c}


def _poly_dict_sub(a: dict, b: dict) -> dict:
    out = dict(a)
    for w, c in b.items():
        out[w] = out.get(w, 0) - c
    return {w: c for w, c in out.items() if c}


def _arc_components(d: ClosedDiagram) -> dict[int, int]:
    comp_of = {}
    for ci, cycle in enumerate(d.components):
        for arc in cycle:
            comp_of[arc] = ci
    return comp_of


def _pairwise_linking(d: ClosedDiagram) -> dict[tuple[int, int], int]:
    comp_of = _arc_components(d)
    twice: dict[tuple[int, int], int] = {}
    for x in d.crossings:
        i, j = comp_of[x.under_in], comp_of[x.over_in]
        if i == j:
            continue
        key = (min(i, j), max(i, j))
        twice[key] = twice.get(key, 0) + x.sign
    return {key: v // 2 for key, v in twice.items()}


def magnus_mu123(d: ClosedDiagram, size_limit: int = 64) -> int:
    """Triple linking number from the Magnus expansion of a longitude.

    Every Wirtinger meridian of component k is a conjugate of one base
    meridian, expanded as a series 1 + X_k + (degree-2 terms); the
    longitude of the third component is the product of the over-meridian
    series met along it, and the invariant is the X_0 X_1 coefficient.
    """
    if len(d.components) != 3:
        raise ValidationError(
            f"mu123 oracle needs 3 components, got {len(d.components)}"
        )
    if d.n_crossings > size_limit:
        raise SizeLimit(
            f"{d.n_crossings} crossings exceeds the oracle budget {size_limit}"
        )
    lk = _pairwise_linking(d)
    bad = {key: v for key, v in lk.items() if v}
    if bad:
        raise NonzeroPairwiseLinking(
            "pairwise linking numbers must vanish, got "
            + ", ".join(f"lk{key}={v}" for key, v in sorted(bad.items()))
        )

    comp_of = _arc_components(d)
    all_visits = visits(d)

    # Wirtinger arcs: maximal runs of PD arcs broken only at under-visits.
    warc_of_arc: dict[int, int] = {}
    warc_comp: list[int] = []
    chains: list[list[tuple[int, int]]] = []  # per comp: (warc, under-visit idx)
    for ci, comp in enumerate(all_visits):
        cycle = d.components[ci]
        unders = [k for k, v in enumerate(comp) if not v.over]
        if not unders:
            w = len(warc_comp)
            warc_comp.append(ci)
            for arc in cycle:
                warc_of_arc[arc] = w
            chains.append([])
            continue
        n = len(comp)
        start = (unders[-1] + 1) % n
        chain = []
        w = len(warc_comp)
        warc_comp.append(ci)
        for step in range(n):
            k = (start + step) % n
            warc_of_arc[cycle[k]] = w
            if not comp[k].over:
                chain.append((w, k))
                if step != n - 1:
                    w = len(warc_comp)
                    warc_comp.append(ci)
        chains.append(chain)

    # Propagate meridian series along each component's under-visit chain.
    # The conjugating over-meridian only enters through its degree-1 part,
    # which is X of its component, so a single pass is exact at degree 2.
    series: dict[int, dict] = {}
    for ci, chain in enumerate(chains):
        if not chain:
            continue
        first_w = chain[0][0]
        cur = _poly_dict_add(_series_one(), {(ci,): 1})
        series[first_w] = cur
        for idx, (w, k) in enumerate(chain):
            v = all_visits[ci][k]
            x = d.crossings[v.crossing]
            over_comp = comp_of[x.over_in]
            eps = -x.sign
            # m_in = o^sign m_out o^-sign, so the outgoing meridian is
            # m_out = m_in + eps [X_a, X_c] at degree 2 with eps = -sign
            comm = {
                (over_comp, ci): eps,
                (ci, over_comp): -eps,
            }
            cur = _poly_dict_add(cur, comm)
            if idx + 1 < len(chain):
                series[chain[idx + 1][0]] = cur
    for w, ci in enumerate(warc_comp):
        series.setdefault(w, _poly_dict_add(_series_one(), {(ci,): 1}))

    # Longitude of the third component: product of over-meridians met
    # while passing under, with exponent the crossing sign.
    longitude = _series_one()
    for v in all_visits[2]:
        if v.over:
            continue
        x = d.crossings[v.crossing]
        over = series[warc_of_arc[x.over_in]]
        factor = over if x.sign > 0 else _series_inv(over)
        longitude = _series_mul(longitude, factor)
    return longitude.get((0, 1), 0)


# ---------------------------------------------------------------------------
# Gauss linking integral for polygonal curves


def _triangle_solid_angle(r1, r2, r3) -> float:
    """Signed solid angle of the spherical triangle spanned by r1, r2, r3."""
    n1, n2, n3 = np.linalg.norm(r1), np.linalg.norm(r2), np.linalg.norm(r3)
    numer = float(np.dot(r1, np.cross(r2, r3)))
    denom = (
        n1 * n2 * n3
        + float(np.dot(r1, r2)) * n3
        + float(np.dot(r1, r3)) * n2
        + float(np.dot(r2, r3)) * n1
    )
    return 2.0 * math.atan2(numer, denom)


def _point_segment_distance(p, q1, q2) -> float:
    v = q2 - q1
    vv = float(np.dot(v, v))
    t = float(np.dot(p - q1, v)) / vv if vv > 0 else 0.0
    t = min(1.0, max(0.0, t))
    return float(np.linalg.norm(p - q1 - t * v))


def _segment_distance(p1, p2, q1, q2) -> float:
    """Minimal distance between segments p1p2 and q1q2.

    The minimum is attained either at the interior-interior critical
    point (when it lies inside both ranges) or at an endpoint against
    the opposite segment.
    """
    best = min(
        _point_segment_distance(p1, q1, q2),
        _point_segment_distance(p2, q1, q2),
        _point_segment_distance(q1, p1, p2),
        _point_segment_distance(q2, p1, p2),
    )
    u, v, w = p2 - p1, q2 - q1, p1 - q1
    a, b, c = float(np.dot(u, u)), float(np.dot(u, v)), float(np.dot(v, v))
    d, e = float(np.dot(u, w)), float(np.dot(v, w))
    den = a * c - b * b
    if den > 1e-13 * max(a * c, 1.0):
        s = (b * e - c * d) / den
        t = (a * e - b * d) / den
        if 0.0 <= s <= 1.0 and 0.0 <= t <= 1.0:
            best = min(best, float(np.linalg.norm(w + s * u - t * v)))
    return best


def gauss_linking_integral(a, b) -> float:
    """Linking number of two disjoint closed polygons, as a real number.

    Sums the signed solid angles of the spherical quadrilaterals swept by
    the unit direction vector over each segment pair, divided by 4 pi.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.ndim != 2 or a.shape[1] != 3 or len(a) < 3:
        raise ValidationError("first polygon needs at least 3 vertices in R^3")
    if b.ndim != 2 or b.shape[1] != 3 or len(b) < 3:
        raise ValidationError("second polygon needs at least 3 vertices in R^3")
    total = 0.0
    na, nb = len(a), len(b)
    for i in range(na):
        p1, p2 = a[i], a[(i + 1) % na]
        for j in range(nb):
            q1, q2 = b[j], b[(j + 1) % nb]
            if _segment_distance(p1, p2, q1, q2) < 1e-9:
                raise IntersectingInputs(
                    f"segments {i} and {j} come within 1e-9 of touching"
                )
            r00 = q1 - p1
            r01 = q2 - p1
            r11 = q2 - p2
            r10 = q1 - p2
            # orientation chosen so a positive crossing (det rule on the
            # projected tangents) contributes positively
            omega = _triangle_solid_angle(r00, r11, r01) + _triangle_solid_angle(
                r00, r10, r11
            )
            total += omega
    return total / (4.0 * math.pi)
