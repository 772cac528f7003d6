"""Weighted-graded polynomial rings, monomial orders and sparse polynomials.

Monomials are exponent tuples, one entry per ring variable.  A ring's
variable order is part of its identity: it is the tie-break sequence for
both supported monomial orders.  Polynomials are immutable sparse term maps
and never store zero coefficients.
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence

_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")

#: Exponents are validated against this bound; the constructions in this
#: package never exceed double-digit degrees.
MAX_EXPONENT = 1 << 20


class MonomialOrder:
    """A total multiplicative monomial order on a fixed ring.

    kind "lex" compares exponents along the ring's variable sequence;
    kind "grevlex" compares weighted degree first, then reverse
    lexicographically on the variable sequence (for all weights 1 this is
    standard graded reverse lex).  Sort keys are additive:
    key(m1*m2) = key_mul(key(m1), key(m2)).
    """

    KINDS = ("lex", "grevlex")

    def __init__(self, ring: GradedPolyRing, kind: str):
        if kind not in self.KINDS:
            raise ValueError(f"unknown monomial order {kind!r}")
        self.ring = ring
        self.kind = kind
        self._weights = ring.weights

    def key(self, exps):
        if self.kind == "lex":
            return exps
        w = self._weights
        return (sum(e * wt for e, wt in zip(exps, w)), tuple(-e for e in reversed(exps)))

    def key_mul(self, k1, k2):
        if self.kind == "lex":
            return tuple(a + b for a, b in zip(k1, k2))
        return (k1[0] + k2[0], tuple(a + b for a, b in zip(k1[1], k2[1])))

    def key_div(self, k1, k2):
        if self.kind == "lex":
            return tuple(a - b for a, b in zip(k1, k2))
        return (k1[0] - k2[0], tuple(a - b for a, b in zip(k1[1], k2[1])))

    def compare(self, a, b) -> int:
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def sorted_exps(self, exps: Iterable, reverse: bool = True):
        return sorted(exps, key=self.key, reverse=reverse)

    def __eq__(self, other):
        return (
            isinstance(other, MonomialOrder)
            and other.kind == self.kind
            and other.ring == self.ring
        )

    def __hash__(self):
        return hash((self.kind, self.ring))

    def __repr__(self):
        return f"MonomialOrder({self.kind}, {self.ring!r})"


class GradedPolyRing:
    """Polynomial ring with named variables carrying positive integer weights."""

    def __init__(self, field, variables: Sequence[tuple[str, int]]):
        names = tuple(n for n, _ in variables)
        weights = tuple(w for _, w in variables)
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        for n in names:
            if not _NAME_RE.match(n):
                raise ValueError(f"bad variable name {n!r}")
        for w in weights:
            if not isinstance(w, int) or w < 1:
                raise ValueError(f"variable weights must be positive integers, got {w!r}")
        self.field = field
        self.names = names
        self.weights = weights
        self._index = {n: i for i, n in enumerate(names)}
        self._orders: dict[str, MonomialOrder] = {}

    @property
    def nvars(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown variable {name!r} in {self!r}") from None

    def order(self, kind: str = "grevlex") -> MonomialOrder:
        if kind not in self._orders:
            self._orders[kind] = MonomialOrder(self, kind)
        return self._orders[kind]

    def weighted_degree_of(self, exps) -> int:
        return sum(e * w for e, w in zip(exps, self.weights))

    # --- element constructors ---------------------------------------

    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    def one(self) -> Polynomial:
        return self.const(1)

    def const(self, c) -> Polynomial:
        c = self.field.coerce(c)
        if self.field.is_zero(c):
            return Polynomial(self, {})
        return Polynomial(self, {(0,) * self.nvars: c})

    def var(self, name: str) -> Polynomial:
        i = self.index(name)
        exps = tuple(1 if j == i else 0 for j in range(self.nvars))
        return Polynomial(self, {exps: self.field.one})

    def gens(self) -> tuple[Polynomial, ...]:
        return tuple(self.var(n) for n in self.names)

    def monomial(self, exps, coeff=1) -> Polynomial:
        exps = tuple(exps)
        self._check_exps(exps)
        c = self.field.coerce(coeff)
        if self.field.is_zero(c):
            return Polynomial(self, {})
        return Polynomial(self, {exps: c})

    def from_terms(self, terms) -> Polynomial:
        """Build a polynomial from an {exponents: coefficient} mapping."""
        clean = {}
        for exps, c in dict(terms).items():
            exps = tuple(exps)
            self._check_exps(exps)
            c = self.field.coerce(c)
            if not self.field.is_zero(c):
                clean[exps] = c
        return Polynomial(self, clean)

    def _check_exps(self, exps):
        if len(exps) != self.nvars:
            raise ValueError(f"expected {self.nvars} exponents, got {len(exps)}")
        for e in exps:
            if not isinstance(e, int) or e < 0 or e > MAX_EXPONENT:
                raise ValueError(f"exponent {e!r} out of range")

    # --- derived rings ------------------------------------------------

    def extend(self, variables: Sequence[tuple[str, int]]) -> GradedPolyRing:
        """Same field, extra variables appended after the existing ones."""
        return GradedPolyRing(self.field, list(zip(self.names, self.weights)) + list(variables))

    def with_weights(self, weights: Sequence[int]) -> GradedPolyRing:
        return GradedPolyRing(self.field, list(zip(self.names, weights)))

    def with_field(self, field) -> GradedPolyRing:
        return GradedPolyRing(field, list(zip(self.names, self.weights)))

    def inclusion_exps(self, sub: GradedPolyRing) -> tuple[int, ...]:
        """Positions of `sub`'s variables inside this ring (names must exist)."""
        return tuple(self.index(n) for n in sub.names)

    def __eq__(self, other):
        return (
            isinstance(other, GradedPolyRing)
            and other.field == self.field
            and other.names == self.names
            and other.weights == self.weights
        )

    def __hash__(self):
        return hash((self.field, self.names, self.weights))

    def __repr__(self):
        vs = ", ".join(
            n if w == 1 else f"{n}({w})" for n, w in zip(self.names, self.weights)
        )
        return f"{self.field.name}[{vs}]"


def monomials_of_weighted_degree(ring: GradedPolyRing, degree: int) -> list[tuple[int, ...]]:
    """All exponent tuples of the given weighted degree, descending grevlex."""
    n = ring.nvars
    out: list[tuple[int, ...]] = []

    def walk(i, exps, remaining):
        if i == n:
            if remaining == 0:
                out.append(tuple(exps))
            return
        w = ring.weights[i]
        for e in range(remaining // w + 1):
            exps.append(e)
            walk(i + 1, exps, remaining - e * w)
            exps.pop()

    walk(0, [], degree)
    out.sort(key=ring.order("grevlex").key, reverse=True)
    return out


class Polynomial:
    """Sparse polynomial: immutable map from exponent tuple to nonzero coefficient."""

    __slots__ = ("ring", "terms", "_sorted")

    def __init__(self, ring: GradedPolyRing, terms: dict):
        self.ring = ring
        self.terms = terms
        self._sorted: dict[str, list] = {}

    # --- basic queries -------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def max_degree(self):
        """Largest weighted degree among terms; None for the zero polynomial."""
        if not self.terms:
            return None
        wd = self.ring.weighted_degree_of
        return max(wd(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        if not self.terms:
            return True
        wd = self.ring.weighted_degree_of
        it = iter(self.terms)
        d = wd(next(it))
        return all(wd(e) == d for e in it)

    def homogeneous_degree(self):
        """Common weighted degree of all terms, or None if zero or mixed."""
        if not self.terms:
            return None
        wd = self.ring.weighted_degree_of
        it = iter(self.terms)
        d = wd(next(it))
        for e in it:
            if wd(e) != d:
                return None
        return d

    def sorted_terms(self, order: MonomialOrder, reverse: bool = True):
        """Terms as (exps, coeff) pairs, leading term first when reverse."""
        cached = self._sorted.get(order.kind)
        if cached is None:
            cached = sorted(self.terms.items(), key=lambda t: order.key(t[0]))
            self._sorted[order.kind] = cached
        return list(reversed(cached)) if reverse else list(cached)

    def leading_term(self, order: MonomialOrder):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exps = max(self.terms, key=order.key)
        return exps, self.terms[exps]

    def support_vars(self) -> frozenset[int]:
        out = set()
        for e in self.terms:
            out.update(i for i, x in enumerate(e) if x)
        return frozenset(out)

    # --- arithmetic -----------------------------------------------------

    def _coerce_other(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError(f"ring mismatch: {self.ring!r} vs {other.ring!r}")
            return other
        return None

    def __add__(self, other):
        g = self._coerce_other(other)
        if g is None:
            g = self.ring.const(other)
        field = self.ring.field
        out = dict(self.terms)
        for e, c in g.terms.items():
            s = field.add(out.get(e, field.zero), c)
            if field.is_zero(s):
                out.pop(e, None)
            else:
                out[e] = s
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        field = self.ring.field
        return Polynomial(self.ring, {e: field.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        g = self._coerce_other(other)
        if g is None:
            g = self.ring.const(other)
        return self + (-g)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        g = self._coerce_other(other)
        if g is None:
            return self.scale(other)
        field = self.ring.field
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in g.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = field.mul(c1, c2)
                s = field.add(out.get(e, field.zero), c)
                if field.is_zero(s):
                    out.pop(e, None)
                else:
                    out[e] = s
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def scale(self, c) -> Polynomial:
        field = self.ring.field
        c = field.coerce(c)
        if field.is_zero(c):
            return Polynomial(self.ring, {})
        return Polynomial(self.ring, {e: field.mul(v, c) for e, v in self.terms.items()})

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers must be non-negative integers")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def monic(self, order: MonomialOrder) -> Polynomial:
        if not self.terms:
            return self
        _, lc = self.leading_term(order)
        return self.scale(self.ring.field.inv(lc))

    # --- structural ------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, int):
            return self == self.ring.const(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __repr__(self):
        from .parsing import format_poly

        return format_poly(self)
