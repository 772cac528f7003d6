"""Krull dimension of graded quotients, computed on the initial ideal.

dim R/I equals dim R/in(I); for a monomial ideal the dimension is
``nvars - c`` where ``c`` is the minimum number of variables meeting the
support of every minimal generator.  The minimum cover is found by
branch and bound, which is exact and comfortable at the sizes here
(at most 16 variables).
"""

from __future__ import annotations


class UnitIdealError(ValueError):
    """Raised when an operation requires a proper ideal but got (1)."""


def min_support_cover(supports) -> int:
    """Size of a smallest variable set meeting every support set."""
    sets = [frozenset(s) for s in supports]
    if any(not s for s in sets):
        raise ValueError("empty support (constant generator)")
    # inclusion-minimal supports suffice: a hitter of a subset hits its supersets
    sets = sorted(set(sets), key=len)
    minimal = []
    for s in sets:
        if not any(t <= s for t in minimal):
            minimal.append(s)

    def greedy_upper(remaining):
        cover = 0
        remaining = list(remaining)
        while remaining:
            counts: dict[int, int] = {}
            for s in remaining:
                for v in s:
                    counts[v] = counts.get(v, 0) + 1
            best = max(sorted(counts), key=lambda v: counts[v])
            remaining = [s for s in remaining if best not in s]
            cover += 1
        return cover

    def disjoint_lower(remaining):
        used: set[int] = set()
        count = 0
        for s in remaining:
            if not (s & used):
                used |= s
                count += 1
        return count

    best = greedy_upper(minimal)

    def search(remaining, chosen):
        nonlocal best
        if not remaining:
            best = min(best, chosen)
            return
        if chosen + disjoint_lower(remaining) >= best:
            return
        pivot = min(remaining, key=len)
        for v in sorted(pivot):
            search([s for s in remaining if v not in s], chosen + 1)

    search(minimal, 0)
    return best


def dimension_of_monomial_quotient(lead_exps, nvars: int) -> int:
    """dim of R/(monomials) given exponent rows of the generators."""
    supports = []
    for e in lead_exps:
        s = frozenset(i for i, x in enumerate(e) if x)
        if not s:
            raise UnitIdealError("dimension of the unit ideal is undefined")
        supports.append(s)
    if not supports:
        return nvars
    return nvars - min_support_cover(supports)


def dimension(ideal, order=None) -> int:
    """Krull dimension of R/I."""
    gb = ideal.groebner_basis(order)
    if gb.is_unit:
        raise UnitIdealError("dimension of the unit ideal is undefined")
    return dimension_of_monomial_quotient(gb.leading_exponents(), ideal.ring.nvars)


def codimension(ideal, order=None) -> int:
    return ideal.ring.nvars - dimension(ideal, order)
