"""Core diagram construction, signs, pattern counts and invariants."""

import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import knot_chords, link_chords, random_diagram
from gaussforge.core import (
    LONG_KNOT,
    LONG_LINK3,
    Crossing,
    Pass,
    StrandPoint,
    build_diagram,
    casson,
    count_knot_patterns,
    count_link_patterns,
    crossing_sign,
    insert_kink,
    linking,
    mirror,
    mu123,
)
from gaussforge.errors import (
    DegenerateHeight,
    NonTransverse,
    ParamCollision,
    ValidationError,
)

F = Fraction


def test_crossing_sign_convention():
    # +1 iff sin(angle_under - angle_over) > 0
    assert crossing_sign(0.0, math.pi / 2) == 1
    assert crossing_sign(0.0, -math.pi / 2) == -1
    assert crossing_sign(math.pi / 2, 0.0) == -1


def test_crossing_sign_rejects_parallel():
    with pytest.raises(NonTransverse):
        crossing_sign(0.3, 0.3)
    with pytest.raises(NonTransverse):
        crossing_sign(0.3, 0.3 + math.pi)


def test_chords_derived_from_heights():
    d = knot_chords([(1, 2, 1)])
    (ch,) = d.chords
    assert d.pass_at(ch.under).height < d.pass_at(ch.over).height
    assert ch.sign == 1


def test_triple_crossing_yields_three_chords():
    d = build_diagram(
        LONG_KNOT,
        (
            Crossing(
                "t",
                (
                    Pass(StrandPoint(0, F(1)), 0.0, F(0)),
                    Pass(StrandPoint(0, F(2)), 1.0, F(1)),
                    Pass(StrandPoint(0, F(3)), 2.0, F(2)),
                ),
            ),
        ),
    )
    assert len(d.chords) == 3


def test_validation_errors():
    with pytest.raises(ValidationError):
        build_diagram("circle", ())
    with pytest.raises(ValidationError):
        # single-pass crossing
        build_diagram(
            LONG_KNOT,
            (Crossing("a", (Pass(StrandPoint(0, F(1)), 0.0, F(0)),)),),
        )
    with pytest.raises(DegenerateHeight):
        build_diagram(
            LONG_KNOT,
            (
                Crossing(
                    "a",
                    (
                        Pass(StrandPoint(0, F(1)), 0.0, F(0)),
                        Pass(StrandPoint(0, F(2)), 1.0, F(0)),
                    ),
                ),
            ),
        )
    with pytest.raises(ValidationError):
        # strand out of range for a knot
        build_diagram(
            LONG_KNOT,
            (
                Crossing(
                    "a",
                    (
                        Pass(StrandPoint(1, F(1)), 0.0, F(0)),
                        Pass(StrandPoint(0, F(2)), 1.0, F(1)),
                    ),
                ),
            ),
        )
    with pytest.raises(ValidationError):
        # duplicate parameter on one strand
        knot_chords([(1, 2, 1), (1, 3, 1)])


def test_empty_diagram_invariants():
    assert casson(build_diagram(LONG_KNOT, ())) == 0
    assert mu123(build_diagram(LONG_LINK3, ())) == 0


def test_trefoil_and_figure_eight():
    assert casson(knot_chords([(4, 1, 1), (2, 5, 1), (6, 3, 1)])) == 1
    assert casson(knot_chords([(4, 1, 1), (8, 5, 1), (6, 3, -1), (2, 7, -1)])) == -1


def test_mirror_flips_chords_and_preserves_casson():
    tref = knot_chords([(4, 1, 1), (2, 5, 1), (6, 3, 1)])
    m = mirror(tref)
    for ch, mch in zip(tref.chords, m.chords):
        assert mch.sign == -ch.sign
        assert mch.under == ch.over and mch.over == ch.under
    assert casson(m) == casson(tref)


def test_kink_neutrality():
    tref = knot_chords([(4, 1, 1), (2, 5, 1), (6, 3, 1)])
    for sign in (1, -1):
        for loc in (F(0), F(3, 2), F(100)):
            assert casson(insert_kink(tref, 0, loc, sign)) == 1
    with pytest.raises(ParamCollision):
        insert_kink(tref, 0, F(4), 1)


def test_linking_counts():
    hopf = link_chords([(0, 1, 1, 1, 1), (1, 2, 0, 2, 1)])
    assert linking(hopf, 0, 1) == 1
    assert linking(hopf, 1, 0) == 1
    assert linking(hopf, 0, 2) == 0
    with pytest.raises(ValidationError):
        linking(hopf, 1, 1)


def test_kind_checks():
    hopf = link_chords([(0, 1, 1, 1, 1), (1, 2, 0, 2, 1)])
    with pytest.raises(ValidationError):
        casson(hopf)
    with pytest.raises(ValidationError):
        mu123(knot_chords([(1, 2, 1)]))
    with pytest.raises(ValidationError):
        count_knot_patterns(hopf)
    with pytest.raises(ValidationError):
        count_link_patterns(knot_chords([(1, 2, 1)]))


def test_double_only_diagrams_have_no_primed_counts():
    rng = random.Random(7)
    for _ in range(20):
        d = random_diagram(rng, doubles=6, multis=0)
        c = count_knot_patterns(d).counts
        assert c["X1p"] == c["X2p"] == c["X3p"] == 0


@given(st.integers(min_value=0, max_value=2**32 - 1))
def test_casson_is_integral_on_random_diagrams(seed):
    rng = random.Random(seed)
    d = random_diagram(rng, doubles=rng.randint(0, 4), multis=rng.randint(0, 2))
    assert isinstance(casson(d), int)


@given(st.integers(min_value=0, max_value=2**32 - 1))
def test_mu123_is_integral_on_random_diagrams(seed):
    rng = random.Random(seed)
    d = random_diagram(
        rng, kind=LONG_LINK3, doubles=rng.randint(0, 4), multis=rng.randint(0, 2)
    )
    assert isinstance(mu123(d), int)
