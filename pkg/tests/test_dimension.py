import random

import pytest

from unproj import (
    GF,
    QQ,
    GradedPolyRing,
    Ideal,
    UnitIdealError,
    codimension,
    dimension,
    is_regular_sequence,
    parse_poly,
)
from unproj.dimension import min_support_cover

from helpers import random_polynomial


def test_min_support_cover_basics():
    assert min_support_cover([{0}]) == 1
    assert min_support_cover([{0, 1}]) == 1
    assert min_support_cover([{0}, {1}, {2}]) == 3
    assert min_support_cover([{0, 1}, {1, 2}, {0, 2}]) == 2
    with pytest.raises(ValueError):
        min_support_cover([set()])


def test_zero_ideal_dimension():
    R = GradedPolyRing(QQ, [(f"x{i}", 1) for i in range(5)])
    assert dimension(Ideal(R, [])) == 5


def test_coordinate_ideals_twelve_variables(fp):
    names = [f"c{i}" for i in range(1, 7)] + [f"x{i}" for i in range(1, 7)]
    R = GradedPolyRing(fp, [(n, 1) for n in names])
    J1 = Ideal(R, [R.var("x1"), R.var("x3"), R.var("x5")])
    J2 = Ideal(R, [R.var("x1"), R.var("x4"), R.var("x6")])
    assert dimension(J1) == 9
    assert dimension(J1 + J2) == 7
    assert codimension(J1) == 3


def test_unit_ideal_rejected():
    R = GradedPolyRing(QQ, [("x", 1)])
    with pytest.raises(UnitIdealError):
        dimension(Ideal(R, [R.one()]))


def test_dimension_invariant_under_order_choice():
    rng = random.Random(2718)
    ring = GradedPolyRing(GF(32003), [(n, 1) for n in ("a", "b", "c", "d")])
    for _ in range(12):
        gens = [
            random_polynomial(rng, ring, rng.randrange(1, 4), 3)
            for _ in range(rng.randrange(1, 4))
        ]
        gens = [g for g in gens if not g.is_zero()]
        if not gens:
            continue
        ideal = Ideal(ring, gens)
        d_grevlex = dimension(ideal, ring.order("grevlex"))
        d_lex = dimension(Ideal(ring, gens), ring.order("lex"))
        assert d_grevlex == d_lex
        # Krull bound: the codimension never exceeds the generator count
        assert ring.nvars - d_grevlex <= len(gens)


def test_regular_sequences():
    R = GradedPolyRing(QQ, [("x1", 1), ("x2", 1), ("x3", 1)])
    assert is_regular_sequence([R.var("x1"), R.var("x2")])
    assert not is_regular_sequence([R.var("x1"), R.var("x1")])
    assert not is_regular_sequence([R.var("x1"), R.var("x2"), R.var("x3"), R.var("x1")])
    with pytest.raises(ValueError):
        is_regular_sequence([R.zero()])
    with pytest.raises(ValueError):
        is_regular_sequence([parse_poly("x1 + x2*x3", R)])
