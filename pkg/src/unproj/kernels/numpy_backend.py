"""Vectorized numpy fallback for the packed kernels.

Semantically identical to ``numba_backend``: same inputs, same outputs,
same divisor-selection rule.  Merges are done with lexsort over the order's
key columns instead of explicit two-pointer loops.
"""

from __future__ import annotations

import numpy as np


def _key_columns(E, kind, weights):
    """Sort keys for np.lexsort, least significant first, ascending order."""
    if kind == 1:
        deg = E @ weights
        cols = [-E[:, k] for k in range(E.shape[1])]  # -e_0 least significant
        cols.append(deg)  # weighted degree most significant
        return cols
    # lex: e_0 most significant
    return [E[:, k] for k in range(E.shape[1] - 1, -1, -1)]


def _sort_desc(E, C, kind, weights):
    idx = np.lexsort(_key_columns(E, kind, weights))[::-1]
    return E[idx], C[idx]


def combine(fe, fc, se, cf, ge, gc, sg, cg, p, kind, weights):
    """cf * x^se * f + cg * x^sg * g mod p, result sorted descending."""
    E = np.vstack((fe + se, ge + sg))
    C = np.concatenate((cf * fc % p, cg * gc % p))
    if not len(C):
        return E, C
    E, C = _sort_desc(E, C, kind, weights)
    boundary = np.empty(len(E), dtype=bool)
    boundary[0] = True
    np.any(E[1:] != E[:-1], axis=1, out=boundary[1:])
    starts = np.nonzero(boundary)[0]
    sums = np.add.reduceat(C, starts) % p
    keep = sums != 0
    return np.ascontiguousarray(E[starts[keep]]), sums[keep]


def normal_form(fe, fc, bex, bco, boff, blm, bdeg, p, kind, weights, skip):
    """Full reduction of f against monic basis elements, tried in index order."""
    n = fe.shape[1]
    we = fe.copy()
    wc = fc.copy()
    rem_e = []
    rem_c = []
    skip_mask = np.ones(blm.shape[0], dtype=bool)
    if 0 <= skip < blm.shape[0]:
        skip_mask[skip] = False
    zero = np.zeros(n, np.int64)
    start = 0
    while start < we.shape[0]:
        lead = we[start]
        dlead = int(lead @ weights)
        mask = skip_mask & (bdeg <= dlead) & np.all(blm <= lead, axis=1)
        hits = np.nonzero(mask)[0]
        if not len(hits):
            rem_e.append(lead)
            rem_c.append(wc[start])
            start += 1
            continue
        hit = int(hits[0])
        o0, o1 = int(boff[hit]), int(boff[hit + 1])
        we, wc = combine(
            we[start:], wc[start:], zero, 1,
            bex[o0:o1], bco[o0:o1], lead - blm[hit], (p - int(wc[start])) % p,
            p, kind, weights,
        )
        start = 0
    if rem_e:
        return np.array(rem_e, np.int64), np.array(rem_c, np.int64)
    return np.empty((0, n), np.int64), np.empty(0, np.int64)
