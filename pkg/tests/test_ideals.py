import pytest

from unproj import (
    GF,
    QQ,
    GradedPolyRing,
    Ideal,
    is_regular_sequence,
    minimal_generators,
    parse_poly,
)


@pytest.fixture
def R():
    return GradedPolyRing(QQ, [(f"x{i}", 1) for i in range(1, 5)])


def test_ideal_validates_generators(R):
    with pytest.raises(ValueError):
        Ideal(R, [R.zero()])
    other = GradedPolyRing(QQ, [("y", 1)])
    with pytest.raises(ValueError):
        Ideal(R, [other.var("y")])


def test_groebner_basis_cached_per_order(R):
    ideal = Ideal(R, [parse_poly("x1^2 - x2", R)])
    gb1 = ideal.groebner_basis()
    assert ideal.groebner_basis() is gb1
    gb_lex = ideal.groebner_basis("lex")
    assert gb_lex is not gb1
    assert gb_lex.order.kind == "lex"


def test_contains_and_equals(R):
    I = Ideal(R, [parse_poly("x1 - x2", R), parse_poly("x2^2", R)])
    assert I.contains(parse_poly("x1^2", R))
    assert not I.contains(R.var("x3"))
    J = Ideal(R, [parse_poly("x2 - x1", R), parse_poly("x1^2", R)])
    assert I.equals(J)
    assert not I.equals(Ideal(R, [R.var("x1")]))


def test_minimal_generators_basics(R, base):
    x1 = R.var("x1")
    assert minimal_generators(Ideal(R, [x1, x1 * R.var("x2")])) == [x1]
    # duplicates collapse to one copy
    assert len(minimal_generators(Ideal(R, [x1, x1]))) == 1
    data = base.data
    assert len(minimal_generators(data.I)) == 2
    with pytest.raises(ValueError):
        minimal_generators(Ideal(R, [parse_poly("x1 + x2^2", R)]))


def test_minimal_generators_drop_order_is_degree_stable(R):
    # the quadric is redundant; the two linear forms stay regardless of
    # their input position
    gens = [parse_poly("x1*x2", R), R.var("x1"), R.var("x2")]
    survivors = minimal_generators(Ideal(R, gens))
    assert sorted(str(g) for g in survivors) == ["x1", "x2"]


def test_is_regular_sequence_on_base_pair(base):
    data = base.data
    assert is_regular_sequence([data.f, data.g])
    assert not is_regular_sequence([data.f, data.f])
    assert is_regular_sequence([])


def test_unit_basis_flag():
    S = GradedPolyRing(GF(7), [("x", 1)])
    gb = Ideal(S, [S.one()]).groebner_basis()
    assert gb.is_unit
    gb2 = Ideal(S, [S.var("x")]).groebner_basis()
    assert not gb2.is_unit
