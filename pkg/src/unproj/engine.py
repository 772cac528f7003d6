"""Buchberger engine with Gebauer-Moeller pair pruning.

Strategy notes:

- pair selection is the normal strategy: minimal weighted degree of the pair
  lcm, ties broken by the monomial order on the lcm, then pair indices;
- the Gebauer-Moeller update implements both classic pruning criteria
  (coprime leading terms, chain criterion);
- prime-field runs are dispatched to packed integer-array kernels
  (``unproj.fastgb``); rational runs stay in this module and work
  fraction-free on primitive integer polynomials, except in
  representation-tracking mode which uses plain field arithmetic;
- ``degree_bound`` restricts the computation to S-pairs of lcm degree at
  most the bound.  For homogeneous input the result is a basis valid
  through that degree (sufficient for graded membership tests at or below
  it); the option is meaningless for inhomogeneous input.

Internally a polynomial is a list of ``(sort_key, exponents, coeff)``
triples in strictly descending key order.
"""

from __future__ import annotations

from fractions import Fraction
from heapq import heappop, heappush
from math import gcd

from .fields import PrimeField, RationalField
from .ring import MonomialOrder, Polynomial


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm_exp(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _coprime(a, b) -> bool:
    return not any(x and y for x, y in zip(a, b))


def _prep(poly: Polynomial, order: MonomialOrder):
    key = order.key
    return sorted(((key(e), e, c) for e, c in poly.terms.items()), reverse=True)


def _to_poly(ring, terms) -> Polynomial:
    return Polynomial(ring, {e: c for _, e, c in terms})


class _FieldMode:
    """Coefficient handling in plain field arithmetic; basis elements monic."""

    fraction_free = False

    def __init__(self, field):
        self.field = field

    def normalize(self, terms):
        """Monic rescale; returns (terms, scalar s) with new = s * old."""
        if not terms:
            return terms, self.field.one
        s = self.field.inv(terms[0][2])
        if s == self.field.one:
            return terms, s
        mul = self.field.mul
        return [(k, e, mul(c, s)) for k, e, c in terms], s

    def axpy(self, order, work, start, q, dkey, dexp, b_terms):
        """work[start:] - q * x^d * b, streams merged.

        Returns (terms, scale) where the result equals
        scale * work[start:] - q * x^d * b; scale is 1 here.
        """
        field = self.field
        mul, sub, neg, is_zero = field.mul, field.sub, field.neg, field.is_zero
        key_mul = order.key_mul
        out = []
        i, j, nw, nb = start, 0, len(work), len(b_terms)
        while i < nw and j < nb:
            bk = key_mul(b_terms[j][0], dkey)
            wk = work[i][0]
            if wk > bk:
                out.append(work[i])
                i += 1
            elif wk < bk:
                c = neg(mul(q, b_terms[j][2]))
                be = tuple(a + d for a, d in zip(b_terms[j][1], dexp))
                out.append((bk, be, c))
                j += 1
            else:
                c = sub(work[i][2], mul(q, b_terms[j][2]))
                if not is_zero(c):
                    out.append((wk, work[i][1], c))
                i += 1
                j += 1
        out.extend(work[i:])
        while j < nb:
            bk = key_mul(b_terms[j][0], dkey)
            be = tuple(a + d for a, d in zip(b_terms[j][1], dexp))
            out.append((bk, be, neg(mul(q, b_terms[j][2]))))
            j += 1
        return out, self.field.one


class _IntMode:
    """Fraction-free handling for QQ: integer coefficients, primitive content."""

    fraction_free = True
    field = None  # coefficients are plain ints here

    @staticmethod
    def clear_denominators(terms):
        """Scale to integer coefficients; returns (terms, applied multiplier)."""
        lcm_den = 1
        for _, _, c in terms:
            lcm_den = lcm_den * c.denominator // gcd(lcm_den, c.denominator)
        return [(k, e, int(c * lcm_den)) for k, e, c in terms], lcm_den

    @staticmethod
    def strip_content(terms, fix_sign=True):
        """Divide by the integer content; returns (terms, removed content)."""
        if not terms:
            return terms, 1
        g = 0
        for _, _, c in terms:
            g = gcd(g, c)
            if g == 1:
                break
        if fix_sign and terms[0][2] < 0:
            g = -g
        if g == 1:
            return terms, 1
        return [(k, e, c // g) for k, e, c in terms], g

    def normalize(self, terms):
        terms, content = self.strip_content(terms)
        return terms, Fraction(1, content)

    def axpy(self, order, work, start, q, dkey, dexp, b_terms):
        """lb * work[start:] - q * x^d * b where lb is b's leading coefficient."""
        lb = b_terms[0][2]
        key_mul = order.key_mul
        out = []
        i, j, nw, nb = start, 0, len(work), len(b_terms)
        while i < nw and j < nb:
            bk = key_mul(b_terms[j][0], dkey)
            wk = work[i][0]
            if wk > bk:
                out.append((wk, work[i][1], work[i][2] * lb))
                i += 1
            elif wk < bk:
                be = tuple(a + d for a, d in zip(b_terms[j][1], dexp))
                out.append((bk, be, -q * b_terms[j][2]))
                j += 1
            else:
                c = work[i][2] * lb - q * b_terms[j][2]
                if c:
                    out.append((wk, work[i][1], c))
                i += 1
                j += 1
        for t in range(i, nw):
            out.append((work[t][0], work[t][1], work[t][2] * lb))
        while j < nb:
            bk = key_mul(b_terms[j][0], dkey)
            be = tuple(a + d for a, d in zip(b_terms[j][1], dexp))
            out.append((bk, be, -q * b_terms[j][2]))
            j += 1
        return out, lb


def _nf_terms(order, mode, fterms, basis_terms, basis_lms, skip=-1, on_reduce=None):
    """Full normal form of a term list against a basis (divisors in list order).

    Returns (remainder, multiplier) with multiplier * f - remainder in
    (basis); the multiplier is 1 in field mode and a positive Fraction in
    fraction-free mode.
    """
    work = list(fterms)
    done = 0
    mult = Fraction(1) if mode.fraction_free else 1
    nb = len(basis_terms)
    while done < len(work):
        e0 = work[done][1]
        hit = -1
        for bi in range(nb):
            if bi == skip:
                continue
            if _divides(basis_lms[bi], e0):
                hit = bi
                break
        if hit < 0:
            done += 1
            continue
        q = work[done][2]
        blm = basis_lms[hit]
        dexp = tuple(a - b for a, b in zip(e0, blm))
        dkey = order.key(dexp)
        tail, scale = mode.axpy(order, work, done, q, dkey, dexp, basis_terms[hit])
        if mode.fraction_free:
            if scale != 1:
                work = [(k, e, c * scale) for k, e, c in work[:done]] + tail
                mult *= scale
            else:
                work = work[:done] + tail
            work, content = _IntMode.strip_content(work, fix_sign=False)
            if content != 1:
                mult /= content
        else:
            work = work[:done] + tail
        if on_reduce is not None:
            on_reduce(hit, q, dexp, scale)
    return work, mult


class _GenericBasis:
    """Buchberger working state over term lists; optionally tracks cofactors."""

    def __init__(self, order: MonomialOrder, gens: list[Polynomial], track: bool):
        self.order = order
        self.ring = order.ring
        field = self.ring.field
        self.track = track
        if isinstance(field, RationalField) and not track:
            self.mode = _IntMode()
        else:
            self.mode = _FieldMode(field)
        self.elems: list = []
        self.lm_exps: list = []
        self.reps: list = []
        self.unit_index = None
        self._n_gens = len(gens)
        for gi, g in enumerate(gens):
            terms = _prep(g, order)
            if self.mode.fraction_free:
                terms, _ = _IntMode.clear_denominators(terms)
            terms, scale = self.mode.normalize(terms)
            rep = None
            if track:
                zero_exp = (0,) * self.ring.nvars
                rep = [dict() for _ in range(self._n_gens)]
                rep[gi][zero_exp] = scale
            self._append(terms, rep)

    def _append(self, terms, rep):
        self.elems.append(terms)
        self.lm_exps.append(terms[0][1])
        self.reps.append(rep)
        if not any(terms[0][1]):
            self.unit_index = len(self.elems) - 1

    # --- cofactor bookkeeping (field mode only) ------------------------

    def _rep_axpy(self, rep, q, dexp, other_rep):
        """rep -= q * x^dexp * other_rep, per input generator."""
        field = self.mode.field
        for target, src in zip(rep, other_rep):
            for e, c in src.items():
                shifted = tuple(a + d for a, d in zip(e, dexp))
                v = field.sub(target.get(shifted, field.zero), field.mul(q, c))
                if field.is_zero(v):
                    target.pop(shifted, None)
                else:
                    target[shifted] = v

    def _rep_scale(self, rep, s):
        field = self.mode.field
        if s == field.one:
            return
        for target in rep:
            for e in list(target):
                target[e] = field.mul(target[e], s)

    # --- S-pair processing ---------------------------------------------

    def reduce_pair(self, i, j) -> str:
        order = self.order
        fi, fj = self.elems[i], self.elems[j]
        li, lj = self.lm_exps[i], self.lm_exps[j]
        lcm = _lcm_exp(li, lj)
        di = tuple(a - b for a, b in zip(lcm, li))
        dj = tuple(a - b for a, b in zip(lcm, lj))
        ki, kj = order.key(di), order.key(dj)
        key_mul = order.key_mul
        shift_i = [
            (key_mul(k, ki), tuple(a + d for a, d in zip(e, di)), c) for k, e, c in fi
        ]
        q0 = shift_i[0][2]
        tail, scale = self.mode.axpy(order, shift_i, 0, q0, kj, dj, fj)
        rep = None
        on_reduce = None
        if self.track:
            field = self.mode.field
            rep = [dict() for _ in range(self._n_gens)]
            self._rep_axpy(rep, field.neg(field.one), di, self.reps[i])  # += x^di * rep_i
            self._rep_axpy(rep, q0, dj, self.reps[j])

            def on_reduce(hit, q, dexp, _scale):
                self._rep_axpy(rep, q, dexp, self.reps[hit])

        if self.mode.fraction_free:
            tail, _ = _IntMode.strip_content(tail)
        remainder, _ = _nf_terms(
            order, self.mode, tail, self.elems, self.lm_exps, on_reduce=on_reduce
        )
        if not remainder:
            return "zero"
        remainder, rscale = self.mode.normalize(remainder)
        if rep is not None:
            self._rep_scale(rep, rscale)
        self._append(remainder, rep)
        return "unit" if self.unit_index is not None else "added"

    # --- reduced basis ----------------------------------------------------

    def finalize(self):
        order, ring = self.order, self.ring
        key = order.key
        if self.unit_index is not None:
            u = self.unit_index
            if not self.track:
                return [ring.one()]
            rep = self.reps[u]
            self._rep_scale(rep, self.ring.field.inv(self.elems[u][0][2]))
            return [ring.one()], [[Polynomial(ring, dict(r)) for r in rep]]
        idx = sorted(range(len(self.elems)), key=lambda i: key(self.lm_exps[i]))
        kept = []
        for i in idx:
            if not any(_divides(self.lm_exps[j], self.lm_exps[i]) for j in kept):
                kept.append(i)
        sub_terms = [self.elems[i] for i in kept]
        sub_lms = [self.lm_exps[i] for i in kept]
        sub_reps = [self.reps[i] for i in kept]
        # tail interreduction: leading monomials are pairwise non-divisible,
        # so one pass against the snapshot yields the unique reduced basis
        out_terms = []
        for pos in range(len(kept)):
            on_reduce = None
            if self.track:
                rep = sub_reps[pos]

                def on_reduce(hit, q, dexp, _scale, rep=rep):
                    self._rep_axpy(rep, q, dexp, sub_reps[hit])

            reduced, _ = _nf_terms(
                order, self.mode, sub_terms[pos], sub_terms, sub_lms, skip=pos,
                on_reduce=on_reduce,
            )
            out_terms.append(reduced)
        polys = []
        reps_out = []
        for pos, terms in enumerate(out_terms):
            if self.mode.fraction_free:
                lc = terms[0][2]
                polys.append(Polynomial(ring, {e: Fraction(c, lc) for _, e, c in terms}))
            else:
                polys.append(_to_poly(ring, terms))
                if self.track:
                    reps_out.append([Polynomial(ring, dict(r)) for r in sub_reps[pos]])
        if self.track:
            return polys, reps_out
        return polys


def _gm_update(t, lms, alive, heap, lcms, deg_of, key_of):
    """Gebauer-Moeller pair-set update after appending basis element t."""
    lt = lms[t]
    cand = [(i, _lcm_exp(lms[i], lt)) for i in range(t)]
    dropped = [False] * len(cand)
    for idx, (i, l) in enumerate(cand):
        if _coprime(lms[i], lt):
            continue  # retained as a pruner through this phase, never scheduled
        for idx2, (_, l2) in enumerate(cand):
            if idx2 == idx or (idx2 < idx and dropped[idx2]):
                continue
            if _divides(l2, l):
                dropped[idx] = True
                break
    for pair in list(alive):
        i, j = pair
        lij = lcms[pair]
        if (
            _divides(lt, lij)
            and lij != _lcm_exp(lms[i], lt)
            and lij != _lcm_exp(lms[j], lt)
        ):
            alive.discard(pair)
    for idx, (i, l) in enumerate(cand):
        if dropped[idx] or _coprime(lms[i], lt):
            continue
        pair = (i, t)
        alive.add(pair)
        lcms[pair] = l
        heappush(heap, (deg_of(l), key_of(l), i, t))


def _run_buchberger(basis, weights, degree_bound):
    lms = basis.lm_exps
    if basis.unit_index is not None:
        return
    heap: list = []
    alive: set = set()
    lcms: dict = {}
    key_of = basis.order.key

    def deg_of(e):
        return sum(x * w for x, w in zip(e, weights))

    for t in range(len(lms)):
        _gm_update(t, lms, alive, heap, lcms, deg_of, key_of)
    while heap:
        d, _, i, j = heappop(heap)
        if (i, j) not in alive:
            continue
        alive.discard((i, j))
        if degree_bound is not None and d > degree_bound:
            break  # heap pops in ascending degree; everything left exceeds too
        status = basis.reduce_pair(i, j)
        if status == "unit":
            return
        if status == "added":
            _gm_update(len(lms) - 1, lms, alive, heap, lcms, deg_of, key_of)


def groebner_basis(
    gens,
    order: MonomialOrder,
    *,
    degree_bound: int | None = None,
    lane: str = "auto",
    track: bool = False,
):
    """Reduced Groebner basis of the ideal generated by `gens`.

    With ``track=True`` (generic lane only) returns ``(basis, reps)`` where
    ``basis[k] == sum(reps[k][i] * gens[i])`` exactly.
    """
    ring = order.ring
    gens = list(gens)
    for g in gens:
        if g.ring != ring:
            raise ValueError("generator ring does not match the order's ring")
    nz = [g for g in gens if not g.is_zero()]
    if not nz:
        return ([], []) if track else []
    if track:
        if lane == "packed":
            raise ValueError("representation tracking requires the generic lane")
        if len(nz) != len(gens):
            # cofactor positions must stay aligned with the caller's list
            raise ValueError("tracking over zero generators is not supported")
        lane = "generic"
    if lane == "auto":
        lane = "generic"
        if isinstance(ring.field, PrimeField):
            from . import fastgb

            if fastgb.available():
                lane = "packed"
    if lane == "packed":
        from . import fastgb

        return fastgb.groebner_packed(nz, order, degree_bound)
    if lane != "generic":
        raise ValueError(f"unknown engine lane {lane!r}")
    basis = _GenericBasis(order, nz, track)
    _run_buchberger(basis, ring.weights, degree_bound)
    return basis.finalize()


def normal_form(f: Polynomial, divisors, order: MonomialOrder, *, track: bool = False):
    """Remainder of f on division by `divisors`, tried in list order.

    The remainder has no term divisible by any leading monomial of the
    divisors and satisfies f - r in (divisors).  With ``track=True`` returns
    ``(r, quotients)`` with ``f == sum(q*d) + r`` exactly.
    """
    ring = f.ring
    divisors = list(divisors)
    for d in divisors:
        if d.ring != ring:
            raise ValueError("divisor ring mismatch")
        if d.is_zero():
            raise ValueError("zero divisor in normal form")
    field = ring.field
    if not track and isinstance(field, PrimeField):
        from . import fastgb

        if fastgb.available():
            return fastgb.normal_form_packed(f, divisors, order)
    if isinstance(field, RationalField) and not track:
        mode = _IntMode()
        basis_terms = []
        for d in divisors:
            t, _ = _IntMode.clear_denominators(_prep(d, order))
            t, _ = _IntMode.strip_content(t)
            basis_terms.append(t)
        fterms, fmult = _IntMode.clear_denominators(_prep(f, order))
        scales = None
    else:
        mode = _FieldMode(field)
        basis_terms = []
        scales = []
        for d in divisors:
            t, s = mode.normalize(_prep(d, order))
            basis_terms.append(t)
            scales.append(s)
        fterms, fmult = _prep(f, order), 1
    basis_lms = [t[0][1] for t in basis_terms]
    quotients = None
    on_reduce = None
    if track:
        quotients = [dict() for _ in divisors]

        def on_reduce(hit, q, dexp, _scale):
            # divisor `hit` was rescaled monic; fold that scale into the quotient
            c = field.mul(q, scales[hit])
            s = field.add(quotients[hit].get(dexp, field.zero), c)
            if field.is_zero(s):
                quotients[hit].pop(dexp, None)
            else:
                quotients[hit][dexp] = s

    rem, mult = _nf_terms(order, mode, fterms, basis_terms, basis_lms, on_reduce=on_reduce)
    if mode.fraction_free:
        total = mult * fmult
        result = Polynomial(ring, {e: Fraction(c) / total for _, e, c in rem})
    else:
        result = _to_poly(ring, rem)
    if track:
        return result, [Polynomial(ring, q) for q in quotients]
    return result
