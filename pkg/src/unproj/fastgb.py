"""Prime-field Groebner lane over packed integer arrays.

Thin driver around the kernels in :mod:`unproj.kernels`.  Pair management
reuses the Gebauer-Moeller logic from :mod:`unproj.engine`; only polynomial
storage and reduction run on packed arrays.  Output is identical to the
generic lane (the reduced basis is unique).
"""

from __future__ import annotations

import numpy as np

from . import kernels
from .engine import _lcm_exp, _run_buchberger
from .fields import PrimeField
from .ring import MonomialOrder, Polynomial

_KIND_CODE = {"lex": 0, "grevlex": 1}


def available() -> bool:
    return True  # the numpy backend needs nothing beyond numpy itself


def _pack(poly: Polynomial, order: MonomialOrder):
    terms = poly.sorted_terms(order, reverse=True)
    n = poly.ring.nvars
    exps = np.array([e for e, _ in terms], dtype=np.int64).reshape(len(terms), n)
    coeffs = np.array([c for _, c in terms], dtype=np.int64)
    return exps, coeffs


def _unpack(ring, exps, coeffs) -> Polynomial:
    return Polynomial(
        ring, {tuple(map(int, e)): int(c) for e, c in zip(exps.tolist(), coeffs.tolist())}
    )


class _FlatBasis:
    """Growable flat storage consumed by the kernels."""

    def __init__(self, n: int):
        self.n = n
        self._rows = 0
        self._bex = np.empty((256, n), np.int64)
        self._bco = np.empty(256, np.int64)
        self._boff = [0]
        self._blm = np.empty((32, n), np.int64)
        self._bdeg = np.empty(32, np.int64)
        self.count = 0

    def append(self, exps, coeffs, lead_degree):
        m = exps.shape[0]
        while self._rows + m > self._bex.shape[0]:
            self._bex = np.concatenate((self._bex, np.empty_like(self._bex)))
            self._bco = np.concatenate((self._bco, np.empty_like(self._bco)))
        self._bex[self._rows : self._rows + m] = exps
        self._bco[self._rows : self._rows + m] = coeffs
        self._rows += m
        self._boff.append(self._rows)
        if self.count == self._blm.shape[0]:
            self._blm = np.concatenate((self._blm, np.empty_like(self._blm)))
            self._bdeg = np.concatenate((self._bdeg, np.empty_like(self._bdeg)))
        self._blm[self.count] = exps[0]
        self._bdeg[self.count] = lead_degree
        self.count += 1

    def views(self):
        return (
            self._bex[: self._rows],
            self._bco[: self._rows],
            np.array(self._boff, np.int64),
            self._blm[: self.count],
            self._bdeg[: self.count],
        )


class _PackedBasis:
    """Buchberger working state on packed arrays (prime fields only)."""

    def __init__(self, order: MonomialOrder, gens: list[Polynomial]):
        ring = order.ring
        if not isinstance(ring.field, PrimeField):
            raise TypeError("packed lane requires a prime field")
        self.order = order
        self.ring = ring
        self.p = ring.field.p
        self.kind = _KIND_CODE[order.kind]
        self.weights = np.array(ring.weights, np.int64)
        self.elems: list = []
        self.lm_exps: list = []
        self.unit_index = None
        self.flat = _FlatBasis(ring.nvars)
        for g in gens:
            exps, coeffs = _pack(g, order)
            self._append(exps, coeffs)

    def _append(self, exps, coeffs):
        lc = int(coeffs[0])
        if lc != 1:
            coeffs = coeffs * pow(lc, self.p - 2, self.p) % self.p
        lead = tuple(map(int, exps[0]))
        self.elems.append((exps, coeffs))
        self.lm_exps.append(lead)
        self.flat.append(exps, coeffs, self.ring.weighted_degree_of(lead))
        if not any(lead):
            self.unit_index = len(self.elems) - 1

    def reduce_pair(self, i, j) -> str:
        li, lj = self.lm_exps[i], self.lm_exps[j]
        lcm = _lcm_exp(li, lj)
        di = np.array([a - b for a, b in zip(lcm, li)], np.int64)
        dj = np.array([a - b for a, b in zip(lcm, lj)], np.int64)
        fe, fc = self.elems[i]
        ge, gc = self.elems[j]
        se, sc = kernels.combine(
            fe, fc, di, 1, ge, gc, dj, self.p - 1, self.p, self.kind, self.weights
        )
        if not len(sc):
            return "zero"
        bex, bco, boff, blm, bdeg = self.flat.views()
        re, rc = kernels.normal_form(
            se, sc, bex, bco, boff, blm, bdeg, self.p, self.kind, self.weights, -1
        )
        if not len(rc):
            return "zero"
        self._append(re, rc)
        return "unit" if self.unit_index is not None else "added"

    def finalize(self):
        order, ring = self.order, self.ring
        if self.unit_index is not None:
            return [ring.one()]
        key = order.key
        idx = sorted(range(len(self.elems)), key=lambda i: key(self.lm_exps[i]))
        kept = []
        for i in idx:
            lm = self.lm_exps[i]
            if not any(all(x <= y for x, y in zip(self.lm_exps[j], lm)) for j in kept):
                kept.append(i)
        snap = _FlatBasis(ring.nvars)
        for i in kept:
            exps, coeffs = self.elems[i]
            snap.append(exps, coeffs, self.ring.weighted_degree_of(self.lm_exps[i]))
        bex, bco, boff, blm, bdeg = snap.views()
        out = []
        for pos, i in enumerate(kept):
            exps, coeffs = self.elems[i]
            re, rc = kernels.normal_form(
                exps, coeffs, bex, bco, boff, blm, bdeg, self.p, self.kind,
                self.weights, pos,
            )
            out.append(_unpack(ring, re, rc))
        return out


def groebner_packed(gens, order: MonomialOrder, degree_bound=None):
    basis = _PackedBasis(order, gens)
    _run_buchberger(basis, order.ring.weights, degree_bound)
    return basis.finalize()


def normal_form_packed(f: Polynomial, divisors, order: MonomialOrder) -> Polynomial:
    ring = f.ring
    flat = _FlatBasis(ring.nvars)
    p = ring.field.p
    for d in divisors:
        exps, coeffs = _pack(d, order)
        lc = int(coeffs[0])
        if lc != 1:
            coeffs = coeffs * pow(lc, p - 2, p) % p
        flat.append(exps, coeffs, ring.weighted_degree_of(tuple(map(int, exps[0]))))
    fe, fc = _pack(f, order)
    bex, bco, boff, blm, bdeg = flat.views()
    re, rc = kernels.normal_form(
        fe, fc, bex, bco, boff, blm, bdeg, p, _KIND_CODE[order.kind],
        np.array(ring.weights, np.int64), -1,
    )
    return _unpack(ring, re, rc)
