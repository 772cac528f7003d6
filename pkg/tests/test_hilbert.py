import random

import pytest

from unproj import (
    GF,
    QQ,
    GradedPolyRing,
    HilbertSeries,
    Ideal,
    UnitIdealError,
    hilbert_series,
    parse_poly,
)
from unproj.hilbert import numerator_of_monomial_ideal

from helpers import quotient_dimension, random_polynomial


def test_regular_sequence_of_two_quadrics():
    # frozen expectation: a length-2 regular sequence of degree-2 monomials
    # has numerator (1 - t^2)^2 = 1 - 2t^2 + t^4
    R = GradedPolyRing(QQ, [(f"x{i}", 1) for i in range(1, 7)])
    I = Ideal(R, [parse_poly("x1*x2", R), parse_poly("x3*x4", R)])
    hs = hilbert_series(I)
    assert hs.numerator == (1, 0, -2, 0, 1)
    assert hs.denominator_weights == (1,) * 6
    # independent confirmation: direct graded dimension counts through t^8
    expansion = hs.expand(8)
    for d in range(9):
        assert expansion[d] == quotient_dimension(list(I.generators), d)


def test_zero_and_unit():
    R = GradedPolyRing(QQ, [("x", 1), ("y", 2)])
    hs = hilbert_series(Ideal(R, []))
    assert hs.numerator == (1,)
    assert hs.denominator_weights == (1, 2)
    assert hs.expand(6) == [1, 1, 2, 2, 3, 3, 4]
    with pytest.raises(UnitIdealError):
        hilbert_series(Ideal(R, [R.one()]))


def test_non_homogeneous_rejected():
    R = GradedPolyRing(QQ, [("x", 1), ("y", 2)])
    with pytest.raises(ValueError):
        hilbert_series(Ideal(R, [parse_poly("x + y", R)]))


def test_numerator_invariant_under_order_and_permutation():
    rng = random.Random(664)
    ring = GradedPolyRing(GF(32003), [("a", 1), ("b", 1), ("c", 2)])
    for _ in range(10):
        gens = [
            random_polynomial(rng, ring, rng.randrange(2, 5), 3)
            for _ in range(rng.randrange(1, 4))
        ]
        gens = [g for g in gens if not g.is_zero()]
        if not gens:
            continue
        h1 = hilbert_series(Ideal(ring, gens), ring.order("grevlex"))
        h2 = hilbert_series(Ideal(ring, gens), ring.order("lex"))
        h3 = hilbert_series(Ideal(ring, list(reversed(gens))))
        assert h1 == h2 == h3


def test_expansion_matches_span_dimensions_on_small_instances():
    rng = random.Random(31415)
    for nvars, weights in ((3, (1, 1, 1)), (4, (1, 2, 1, 2)), (5, (1, 1, 1, 2, 3))):
        ring = GradedPolyRing(
            GF(32003), [(f"v{i}", w) for i, w in enumerate(weights)]
        )
        for _ in range(6):
            gens = [
                random_polynomial(rng, ring, rng.randrange(2, 5), 3)
                for _ in range(rng.randrange(1, 4))
            ]
            gens = [g for g in gens if not g.is_zero()]
            if not gens:
                continue
            expansion = hilbert_series(Ideal(ring, gens)).expand(8)
            for d in range(9):
                assert expansion[d] == quotient_dimension(gens, d), (weights, d)


def test_weighted_denominator_and_expansion():
    R = GradedPolyRing(QQ, [("u", 1), ("v", 2), ("w", 3)])
    hs = hilbert_series(Ideal(R, [R.var("v")]))
    assert hs.numerator == (1, 0, -1)
    assert hs.denominator_weights == (1, 2, 3)
    # quotient is k[u, w]: dimensions count monomials u^a w^b with a + 3b = d
    assert hs.expand(9) == [1, 1, 1, 2, 2, 2, 3, 3, 3, 4]


def test_palindromic():
    assert HilbertSeries((1, 0, -2, 0, 1), (1, 1)).is_palindromic()
    assert not HilbertSeries((1, -1, 0), (1, 1)).is_palindromic()
    assert HilbertSeries((1,), (1,)).is_palindromic()


def test_numerator_recursion_on_monomial_ideal_directly():
    # staircase in two variables: (x^2, xy) has numerator 1 - t^2 - t^2 + t^3
    gens = [(2, 0), (1, 1)]
    num = numerator_of_monomial_ideal(gens, (1, 1))
    assert num == {0: 1, 2: -2, 3: 1}
    with pytest.raises(UnitIdealError):
        numerator_of_monomial_ideal([(0, 0)], (1, 1))
