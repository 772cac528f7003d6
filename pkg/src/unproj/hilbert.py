"""Weighted Hilbert series of graded quotients.

The series of R/I is reported as an integer numerator over the full
denominator ``prod(1 - t^w)`` taken over all ambient variable weights; no
cancellation is performed.  The numerator is computed from the initial
ideal by pivot splitting on a most-shared variable,

    N(L) = N(L + (v)) + t^w(v) * N(L : v),

with memoization, connected-component factoring and the disjoint-support
product rule as base case.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dimension import UnitIdealError


def _poly_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for da, ca in a.items():
        for db, cb in b.items():
            d = da + db
            v = out.get(d, 0) + ca * cb
            if v:
                out[d] = v
            else:
                out.pop(d, None)
    return out


def _minimalize(gens):
    gens = sorted(set(gens), key=sum)
    out = []
    for g in gens:
        if not any(all(x <= y for x, y in zip(m, g)) for m in out):
            out.append(g)
    return out


def _components(gens):
    parent = list(range(len(gens)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    by_var: dict[int, int] = {}
    for gi, g in enumerate(gens):
        for v, e in enumerate(g):
            if e:
                if v in by_var:
                    ra, rb = find(by_var[v]), find(gi)
                    parent[ra] = rb
                else:
                    by_var[v] = gi
    groups: dict[int, list] = {}
    for gi in range(len(gens)):
        groups.setdefault(find(gi), []).append(gens[gi])
    return list(groups.values())


def numerator_of_monomial_ideal(gens, weights) -> dict[int, int]:
    """Hilbert numerator of R/(gens) as a {power: coeff} map."""
    memo: dict = {}

    def wdeg(e):
        return sum(x * w for x, w in zip(e, weights))

    def rec(gens):
        gens = _minimalize(gens)
        if any(not any(e) for e in gens):
            raise UnitIdealError("Hilbert series of the unit ideal is undefined")
        if not gens:
            return {0: 1}
        key = frozenset(gens)
        hit = memo.get(key)
        if hit is not None:
            return hit
        comps = _components(gens)
        if len(comps) > 1:
            result = {0: 1}
            for comp in comps:
                result = _poly_mul(result, rec(comp))
        else:
            counts: dict[int, int] = {}
            for g in gens:
                for v, e in enumerate(g):
                    if e:
                        counts[v] = counts.get(v, 0) + 1
            freq = max(counts.values())
            if freq == 1:
                # single generator (a connected component with disjoint
                # supports is a singleton)
                result = {0: 1}
                for g in gens:
                    result = _poly_mul(result, {0: 1, wdeg(g): -1})
            else:
                v = min(u for u, c in counts.items() if c == freq)
                plus = [g for g in gens if not g[v]]
                ev = tuple(1 if i == v else 0 for i in range(len(weights)))
                plus.append(ev)
                colon = [
                    tuple(x - 1 if i == v and x else x for i, x in enumerate(g))
                    for g in gens
                ]
                result = dict(rec(plus))
                wv = weights[v]
                for d, c in rec(colon).items():
                    u = result.get(d + wv, 0) + c
                    if u:
                        result[d + wv] = u
                    else:
                        result.pop(d + wv, None)
        memo[key] = result
        return result

    return rec(list(gens))


@dataclass(frozen=True)
class HilbertSeries:
    """Integer numerator over the fixed denominator prod(1 - t^w)."""

    numerator: tuple[int, ...]  # coefficient list, index = power of t
    denominator_weights: tuple[int, ...]  # sorted ambient weights

    @staticmethod
    def from_parts(numerator: dict[int, int], weights) -> "HilbertSeries":
        if numerator:
            top = max(numerator)
            coeffs = tuple(numerator.get(i, 0) for i in range(top + 1))
        else:
            coeffs = (0,)
        return HilbertSeries(coeffs, tuple(sorted(weights)))

    @property
    def numerator_degree(self) -> int:
        d = len(self.numerator) - 1
        while d > 0 and self.numerator[d] == 0:
            d -= 1
        return d

    def numerator_pairs(self):
        return [(c, i) for i, c in enumerate(self.numerator) if c]

    def is_palindromic(self) -> bool:
        d = self.numerator_degree
        return all(self.numerator[i] == self.numerator[d - i] for i in range(d + 1))

    def expand(self, through_degree: int) -> list[int]:
        """Power series coefficients of the full series up to a degree."""
        s = [0] * (through_degree + 1)
        for i, c in enumerate(self.numerator):
            if i <= through_degree:
                s[i] = c
        for w in self.denominator_weights:
            for k in range(w, through_degree + 1):
                s[k] += s[k - w]
        return s

    def numerator_at_one(self) -> int:
        return sum(self.numerator)


def hilbert_series(ideal, order=None) -> HilbertSeries:
    """Hilbert series of R/I for a homogeneous ideal I."""
    ring = ideal.ring
    for g in ideal.generators:
        if not g.is_homogeneous():
            raise ValueError("Hilbert series requires homogeneous generators")
    gb = ideal.groebner_basis(order)
    if gb.is_unit:
        raise UnitIdealError("Hilbert series of the unit ideal is undefined")
    num = numerator_of_monomial_ideal(gb.leading_exponents(), ring.weights)
    return HilbertSeries.from_parts(num, ring.weights)
