"""Ideals with cached reduced Groebner bases, plus graded generator queries."""

from __future__ import annotations

from . import engine
from .ring import GradedPolyRing, MonomialOrder, Polynomial


class GroebnerBasis:
    """A reduced basis frozen together with the order that produced it."""

    def __init__(self, order: MonomialOrder, elements):
        self.order = order
        self.elements = tuple(elements)

    @property
    def is_unit(self) -> bool:
        return len(self.elements) == 1 and not any(
            any(e) for e in self.elements[0].terms
        )

    def leading_exponents(self):
        return [g.leading_term(self.order)[0] for g in self.elements]

    def normal_form(self, f: Polynomial) -> Polynomial:
        return engine.normal_form(f, self.elements, self.order)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return f"GroebnerBasis({self.order.kind}, {len(self.elements)} elements)"


class Ideal:
    """Generator list over a ring; the reduced basis is cached per order kind."""

    def __init__(self, ring: GradedPolyRing, generators):
        gens = tuple(generators)
        for g in gens:
            if not isinstance(g, Polynomial) or g.ring != ring:
                raise ValueError("generators must be polynomials of the ideal's ring")
            if g.is_zero():
                raise ValueError("zero generator")
        self.ring = ring
        self.generators = gens
        self._gb_cache: dict[str, GroebnerBasis] = {}

    def groebner_basis(self, order: MonomialOrder | None = None) -> GroebnerBasis:
        if order is None:
            order = self.ring.order("grevlex")
        elif isinstance(order, str):
            order = self.ring.order(order)
        cached = self._gb_cache.get(order.kind)
        if cached is None:
            elems = engine.groebner_basis(self.generators, order)
            cached = GroebnerBasis(order, elems)
            self._gb_cache[order.kind] = cached
        return cached

    def normal_form(self, f: Polynomial, order=None) -> Polynomial:
        return self.groebner_basis(order).normal_form(f)

    def contains(self, f: Polynomial, order=None) -> bool:
        if f.is_zero():
            return True
        return self.normal_form(f, order).is_zero()

    def contains_ideal(self, other: "Ideal") -> bool:
        return all(self.contains(g) for g in other.generators)

    def equals(self, other: "Ideal") -> bool:
        return self.contains_ideal(other) and other.contains_ideal(self)

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)

    def __add__(self, other: "Ideal") -> "Ideal":
        if other.ring != self.ring:
            raise ValueError("cannot add ideals over different rings")
        return Ideal(self.ring, self.generators + other.generators)

    def __repr__(self):
        return f"Ideal({self.ring!r}, {len(self.generators)} generators)"


def minimal_generators(ideal: Ideal) -> list[Polynomial]:
    """Subset of the generators that still generates, with nothing removable.

    Generators are visited in ascending degree; one is dropped when it lies in
    the ideal of all the others still present.  Membership of a degree-d
    element needs the basis only through degree d, so each test runs a
    degree-truncated completion.  By graded Nakayama the surviving count does
    not depend on the drop order.
    """
    order = ideal.ring.order("grevlex")
    degrees = []
    for g in ideal.generators:
        d = g.homogeneous_degree()
        if d is None:
            raise ValueError("minimal generator count requires homogeneous generators")
        degrees.append(d)
    work = [g for _, _, g in sorted(
        ((d, i, g) for i, (d, g) in enumerate(zip(degrees, ideal.generators))),
        key=lambda t: (t[0], t[1]),
    )]
    i = 0
    while i < len(work):
        g = work[i]
        others = work[:i] + work[i + 1 :]
        if not others:
            break
        bound = g.homogeneous_degree()
        basis = engine.groebner_basis(others, order, degree_bound=bound)
        if engine.normal_form(g, basis, order).is_zero():
            del work[i]
        else:
            i += 1
    return work


def is_regular_sequence(polys) -> bool:
    """True when the ideal's codimension equals the number of elements."""
    from .dimension import codimension

    polys = list(polys)
    if not polys:
        return True
    ring = polys[0].ring
    for f in polys:
        if f.is_zero() or not f.is_homogeneous():
            raise ValueError("regular sequence test requires nonzero homogeneous input")
    if len(polys) > ring.nvars:
        return False
    return codimension(Ideal(ring, polys)) == len(polys)
