import random
from fractions import Fraction

import pytest

from unproj import GF, QQ, field_from_name
from unproj.fields import PrimeField, is_prime


def test_prime_validation():
    GF(32003)
    GF(5)
    with pytest.raises(ValueError):
        GF(32004)
    with pytest.raises(ValueError):
        GF(2**31 + 11)
    with pytest.raises(ValueError):
        GF(1)


def test_is_prime_small():
    primes = [p for p in range(2, 60) if is_prime(p)]
    assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]


def test_gf_coerce_and_lift():
    F = GF(7)
    assert F.coerce(10) == 3
    assert F.coerce(-1) == 6
    assert F.coerce(Fraction(1, 2)) == 4  # 2 * 4 = 8 = 1 mod 7
    assert F.lift(6) == -1
    assert F.lift(3) == 3
    with pytest.raises(ZeroDivisionError):
        F.coerce(Fraction(1, 7))


def test_field_equality():
    assert GF(7) == GF(7)
    assert GF(7) != GF(11)
    assert QQ == QQ
    assert field_from_name("Fp:32003") == GF(32003)
    assert field_from_name("QQ") == QQ
    with pytest.raises(ValueError):
        field_from_name("Fp:abc")
    with pytest.raises(ValueError):
        field_from_name("GF(7)")


@pytest.mark.parametrize("field", [QQ, GF(32003), GF(101)])
def test_field_axioms_on_seeded_triples(field):
    rng = random.Random(20240601)

    def draw():
        if isinstance(field, PrimeField):
            return rng.randrange(field.p)
        return Fraction(rng.randrange(-30, 31), rng.randrange(1, 12))

    for _ in range(1000):
        a, b, c = draw(), draw(), draw()
        assert field.add(field.add(a, b), c) == field.add(a, field.add(b, c))
        assert field.mul(field.mul(a, b), c) == field.mul(a, field.mul(b, c))
        assert field.mul(a, field.add(b, c)) == field.add(field.mul(a, b), field.mul(a, c))
        assert field.add(a, b) == field.add(b, a)
        assert field.mul(a, b) == field.mul(b, a)
        if not field.is_zero(a):
            assert field.mul(a, field.inv(a)) == field.one


def test_inverse_of_zero_rejected():
    with pytest.raises(ZeroDivisionError):
        GF(13).inv(0)
    with pytest.raises(ZeroDivisionError):
        QQ.inv(Fraction(0))
