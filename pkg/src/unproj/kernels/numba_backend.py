"""JIT-compiled packed kernels.  See the package docstring for the layout."""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def _cmp_rows(kind, weights, A, ia, B, ib):
    """Compare monomial rows: 1 if A[ia] > B[ib], -1 if smaller, 0 if equal."""
    n = A.shape[1]
    if kind == 1:
        da = np.int64(0)
        db = np.int64(0)
        for k in range(n):
            da += A[ia, k] * weights[k]
            db += B[ib, k] * weights[k]
        if da != db:
            return 1 if da > db else -1
        for k in range(n - 1, -1, -1):
            d = A[ia, k] - B[ib, k]
            if d != 0:
                return -1 if d > 0 else 1
        return 0
    for k in range(n):
        d = A[ia, k] - B[ib, k]
        if d != 0:
            return 1 if d > 0 else -1
    return 0


@njit(cache=True)
def combine(fe, fc, se, cf, ge, gc, sg, cg, p, kind, weights):
    """cf * x^se * f + cg * x^sg * g mod p, result sorted descending."""
    mf = fe.shape[0]
    mg = ge.shape[0]
    n = fe.shape[1]
    FE = fe + se
    GE = ge + sg
    he = np.empty((mf + mg, n), np.int64)
    hc = np.empty(mf + mg, np.int64)
    i = 0
    j = 0
    k = 0
    while i < mf and j < mg:
        c = _cmp_rows(kind, weights, FE, i, GE, j)
        if c > 0:
            v = cf * fc[i] % p
            if v:
                he[k] = FE[i]
                hc[k] = v
                k += 1
            i += 1
        elif c < 0:
            v = cg * gc[j] % p
            if v:
                he[k] = GE[j]
                hc[k] = v
                k += 1
            j += 1
        else:
            v = (cf * fc[i] + cg * gc[j]) % p
            if v:
                he[k] = FE[i]
                hc[k] = v
                k += 1
            i += 1
            j += 1
    while i < mf:
        v = cf * fc[i] % p
        if v:
            he[k] = FE[i]
            hc[k] = v
            k += 1
        i += 1
    while j < mg:
        v = cg * gc[j] % p
        if v:
            he[k] = GE[j]
            hc[k] = v
            k += 1
        j += 1
    return he[:k].copy(), hc[:k].copy()


@njit(cache=True)
def normal_form(fe, fc, bex, bco, boff, blm, bdeg, p, kind, weights, skip):
    """Full reduction of f against monic basis elements, tried in index order."""
    n = fe.shape[1]
    nb = blm.shape[0]
    we = fe.copy()
    wc = fc.copy()
    cap = 16 + fe.shape[0]
    re = np.empty((cap, n), np.int64)
    rc = np.empty(cap, np.int64)
    rk = 0
    start = 0
    while start < we.shape[0]:
        dlead = np.int64(0)
        for t in range(n):
            dlead += we[start, t] * weights[t]
        hit = -1
        for b in range(nb):
            if b == skip or bdeg[b] > dlead:
                continue
            ok = True
            for t in range(n):
                if blm[b, t] > we[start, t]:
                    ok = False
                    break
            if ok:
                hit = b
                break
        if hit < 0:
            if rk == cap:
                cap *= 2
                re2 = np.empty((cap, n), np.int64)
                rc2 = np.empty(cap, np.int64)
                re2[:rk] = re[:rk]
                rc2[:rk] = rc[:rk]
                re = re2
                rc = rc2
            re[rk] = we[start]
            rc[rk] = wc[start]
            rk += 1
            start += 1
            continue
        delta = we[start] - blm[hit]
        zero = np.zeros(n, np.int64)
        o0 = boff[hit]
        o1 = boff[hit + 1]
        we, wc = combine(
            we[start:], wc[start:], zero, 1,
            bex[o0:o1], bco[o0:o1], delta, (p - wc[start]) % p,
            p, kind, weights,
        )
        start = 0
    return re[:rk].copy(), rc[:rk].copy()
