"""Independent oracles used across the test suite.

These deliberately avoid the Groebner engine: ideal membership and graded
dimensions are decided by exact linear algebra on spans of shifted
generators, and products are expanded by a naive double loop.
"""

from __future__ import annotations

import random

from unproj import GradedPolyRing, Polynomial, monomials_of_weighted_degree
from unproj.fields import PrimeField


def naive_product(f: Polynomial, g: Polynomial) -> Polynomial:
    """Term-by-term double-loop expansion."""
    ring = f.ring
    field = ring.field
    acc: dict = {}
    for e1, c1 in f.terms.items():
        for e2, c2 in g.terms.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            acc[e] = field.add(acc.get(e, field.zero), field.mul(c1, c2))
    return ring.from_terms(acc)


def _row_reduce(rows, field):
    """In-place Gaussian elimination; returns the list of pivot columns."""
    pivots = []
    r = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = None
        for i in range(r, len(rows)):
            if not field.is_zero(rows[i][col]):
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = field.inv(rows[r][col])
        rows[r] = [field.mul(v, inv) for v in rows[r]]
        for i in range(len(rows)):
            if i != r and not field.is_zero(rows[i][col]):
                factor = rows[i][col]
                rows[i] = [
                    field.sub(a, field.mul(factor, b)) for a, b in zip(rows[i], rows[r])
                ]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return pivots


def graded_piece_span(generators, degree: int):
    """Row vectors spanning the degree-d piece of the ideal, with the basis."""
    ring = generators[0].ring
    field = ring.field
    basis = monomials_of_weighted_degree(ring, degree)
    index = {m: i for i, m in enumerate(basis)}
    rows = []
    for g in generators:
        d = g.homogeneous_degree()
        if d is None or d > degree:
            continue
        for shift in monomials_of_weighted_degree(ring, degree - d):
            row = [field.zero] * len(basis)
            for e, c in g.terms.items():
                m = tuple(a + b for a, b in zip(e, shift))
                row[index[m]] = field.add(row[index[m]], c)
            rows.append(row)
    return rows, basis, index


def span_ideal_dimension(generators, degree: int) -> int:
    """dim_k of the degree-d piece of the ideal."""
    rows, _, _ = graded_piece_span(generators, degree)
    if not rows:
        return 0
    return len(_row_reduce(rows, generators[0].ring.field))


def span_membership(f: Polynomial, generators, degree: int | None = None) -> bool:
    """Is the homogeneous f in the ideal?  Decided inside its graded piece."""
    if f.is_zero():
        return True
    ring = f.ring
    field = ring.field
    d = f.homogeneous_degree()
    assert d is not None, "oracle handles homogeneous elements only"
    rows, basis, index = graded_piece_span(generators, d)
    frow = [field.zero] * len(basis)
    for e, c in f.terms.items():
        frow[index[e]] = c
    without = len(_row_reduce([list(r) for r in rows], field)) if rows else 0
    with_f = len(_row_reduce([list(r) for r in rows] + [frow], field))
    return with_f == without


def quotient_dimension(generators, degree: int) -> int:
    """dim_k (R/I)_d = number of monomials minus the ideal piece's rank."""
    ring = generators[0].ring
    total = len(monomials_of_weighted_degree(ring, degree))
    return total - span_ideal_dimension(generators, degree)


def random_polynomial(rng: random.Random, ring: GradedPolyRing, degree: int,
                      terms: int) -> Polynomial:
    """Random homogeneous polynomial with up to `terms` monomials."""
    pool = monomials_of_weighted_degree(ring, degree)
    field = ring.field
    acc: dict = {}
    for m in rng.sample(pool, min(terms, len(pool))):
        if isinstance(field, PrimeField):
            acc[m] = rng.randrange(1, field.p)
        else:
            acc[m] = rng.choice([v for v in range(-9, 10) if v])
    return ring.from_terms(acc)
