"""Exact coefficient fields: arbitrary-precision rationals and prime fields.

Rational elements are ``fractions.Fraction`` values (always reduced, positive
denominator).  Prime-field elements are plain ints in ``[0, p)``; the modulus
must be an odd prime below 2**31 so that products of two residues fit in a
signed 64-bit integer.
"""

from __future__ import annotations

from fractions import Fraction

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for every n below 3.3e24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class RationalField:
    """The rationals; a stateless singleton is exported as ``QQ``."""

    name = "QQ"
    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        raise TypeError(f"cannot coerce {value!r} into QQ")

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero in QQ")
        return 1 / a

    def div(self, a, b):
        return a / self.coerce(b) if not isinstance(b, Fraction) else a / b

    def is_zero(self, a):
        return not a

    def format(self, a) -> str:
        return str(a)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """Integers mod an odd prime p < 2**31, residues kept in [0, p)."""

    characteristic: int

    def __init__(self, p: int):
        if not isinstance(p, int) or p < 3 or p >= 2**31:
            raise ValueError(f"prime-field modulus must be an odd prime below 2**31, got {p}")
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.name = f"Fp:{p}"
        self.zero = 0
        self.one = 1

    def coerce(self, value):
        if isinstance(value, int):
            return value % self.p
        if isinstance(value, Fraction):
            den = value.denominator % self.p
            if den == 0:
                raise ZeroDivisionError(f"denominator of {value} vanishes mod {self.p}")
            return value.numerator % self.p * self.inv(den) % self.p
        raise TypeError(f"cannot coerce {value!r} into GF({self.p})")

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"inverse of zero in GF({self.p})")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def is_zero(self, a):
        return a % self.p == 0

    def lift(self, a) -> int:
        """Balanced integer representative in (-p/2, p/2]."""
        a %= self.p
        return a if a <= self.p // 2 else a - self.p

    def format(self, a) -> str:
        return str(self.lift(a))

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()

#: Conventional verification prime: fits in 31 bits, residue products fit in 64.
VERIFICATION_PRIME = 32003


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_name(name: str):
    """Parse a field descriptor: "QQ" or "Fp:<prime>"."""
    if name == "QQ":
        return QQ
    if name.startswith("Fp:"):
        try:
            p = int(name[3:])
        except ValueError:
            raise ValueError(f"bad field descriptor {name!r}") from None
        return PrimeField(p)
    raise ValueError(f"bad field descriptor {name!r}")
