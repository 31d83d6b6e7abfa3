"""Shared builders for diagrams used across the test suite."""

import math
import random
from fractions import Fraction

import pytest

from gaussforge.core import (
    LONG_KNOT,
    LONG_LINK3,
    Crossing,
    Pass,
    StrandPoint,
    build_diagram,
)

F = Fraction


def knot_chords(chords):
    """Long-knot diagram from (under_param, over_param, sign) triples."""
    cs = []
    for i, (u, o, s) in enumerate(chords):
        au = math.pi / 2 if s > 0 else -math.pi / 2
        cs.append(
            Crossing(
                f"c{i}",
                (
                    Pass(StrandPoint(0, F(u)), au, F(0)),
                    Pass(StrandPoint(0, F(o)), 0.0, F(1)),
                ),
            )
        )
    return build_diagram(LONG_KNOT, tuple(cs))


def link_chords(chords, extra=()):
    """3-component diagram from (s_under, p_under, s_over, p_over, sign)."""
    cs = []
    for i, (su, pu, so, po, s) in enumerate(chords):
        au = math.pi / 2 if s > 0 else -math.pi / 2
        cs.append(
            Crossing(
                f"c{i}",
                (
                    Pass(StrandPoint(su, F(pu)), au, F(0)),
                    Pass(StrandPoint(so, F(po)), 0.0, F(1)),
                ),
            )
        )
    return build_diagram(LONG_LINK3, tuple(cs) + tuple(extra))


def braid_long_link(word):
    """3-component long link from a pure braid word.

    ``word`` is a sequence of (i, sign) with i in {1, 2} naming the
    generator on strand positions i-1, i.  A positive generator takes the
    left strand over the right one.  The net permutation must be the
    identity so the positions match the component labels at both ends.
    """
    perm = [0, 1, 2]  # position -> component
    chords = []
    for step, (i, s) in enumerate(word, start=1):
        left, right = perm[i - 1], perm[i]
        if s > 0:
            under, over = right, left
        else:
            under, over = left, right
        chords.append((under, step, over, step, s))
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
    if perm != [0, 1, 2]:
        raise ValueError(f"braid word is not pure: final permutation {perm}")
    return link_chords(chords)


# Pure braid generators A_ij on 3 strands, as sigma words.
PURE_GENS = {
    (0, 1): ((1, 1), (1, 1)),
    (1, 2): ((2, 1), (2, 1)),
    (0, 2): ((2, 1), (1, 1), (1, 1), (2, -1)),
}


def pure_braid_word(pairs):
    """Sigma word for a product of A_ij^e factors given as (i, j, e)."""
    word = []
    for i, j, e in pairs:
        gen = PURE_GENS[(i, j)]
        if e > 0:
            word.extend(gen * e)
        else:
            word.extend(tuple((g, -s) for g, s in reversed(gen)) * (-e))
    return word


def random_lk_zero_braid(rng, length=6):
    """Random pure braid word whose pairwise linking numbers all vanish."""
    pairs = [(0, 1), (0, 2), (1, 2)]
    net = {p: 0 for p in pairs}
    factors = []
    for _ in range(length):
        p = rng.choice(pairs)
        e = rng.choice((1, -1))
        net[p] += e
        factors.append((p[0], p[1], e))
    for p in pairs:
        if net[p]:
            factors.append((p[0], p[1], -net[p]))
    return pure_braid_word(factors)


def _random_crossing(rng, cid, strands, multiplicity, next_param):
    """One crossing with random angles and heights on random strands."""
    passes = []
    heights = rng.sample(range(-50, 50), multiplicity)
    while True:
        angles = [rng.uniform(-math.pi, math.pi) for _ in range(multiplicity)]
        ok = True
        for i in range(multiplicity):
            for j in range(i + 1, multiplicity):
                d = (angles[i] - angles[j]) % math.pi
                if min(d, math.pi - d) < 1e-3:
                    ok = False
        if ok:
            break
    for k in range(multiplicity):
        strand = rng.choice(strands)
        param = next_param[strand]
        next_param[strand] += 1
        passes.append(
            Pass(StrandPoint(strand, F(param)), angles[k], F(heights[k]))
        )
    return Crossing(cid, tuple(passes))


def random_diagram(rng, kind=LONG_KNOT, doubles=4, multis=1, max_multiplicity=5):
    """Random (generally non-realizable) diagram with optional multi points.

    Parameters are assigned in increasing order per strand, then shuffled
    by interleaving crossings in random order, which keeps them distinct.
    """
    strands = [0] if kind == LONG_KNOT else [0, 1, 2]
    next_param = {s: 0 for s in strands}
    specs = [2] * doubles + [
        rng.randint(3, max_multiplicity) for _ in range(multis)
    ]
    rng.shuffle(specs)
    crossings = []
    for n, m in enumerate(specs):
        crossings.append(_random_crossing(rng, f"r{n}", strands, m, next_param))
    return build_diagram(kind, tuple(crossings))


@pytest.fixture
def rng():
    return random.Random(20260824)
