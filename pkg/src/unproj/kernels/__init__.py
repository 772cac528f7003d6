"""Packed prime-field polynomial kernels with selectable backend.

Packed layout: a polynomial is a pair ``(exps, coeffs)`` where ``exps`` is an
``int64`` array of shape ``(terms, nvars)`` holding exponent rows in strictly
descending monomial order and ``coeffs`` is an ``int64`` array of residues in
``[1, p)``.  A basis is flattened into ``(bex, bco, boff)`` with ``boff``
giving per-element row offsets, plus leading rows ``blm`` and leading weighted
degrees ``bdeg``.

Order codes: 0 = lex on the ring's variable sequence, 1 = weighted degree
then reverse lex.

Two interchangeable backends implement ``combine`` and ``normal_form``:
``numba_backend`` (JIT-compiled loops, the default) and ``numpy_backend``
(pure vectorized numpy).  Selection: set ``UNPROJ_KERNELS=numpy`` or
``UNPROJ_KERNELS=numba``; unset picks numba when importable and falls back
to numpy otherwise.
"""

from __future__ import annotations

import os

_requested = os.environ.get("UNPROJ_KERNELS", "").strip().lower()
if _requested not in ("", "numba", "numpy"):
    raise RuntimeError(
        f"UNPROJ_KERNELS must be 'numba' or 'numpy', got {_requested!r}"
    )

if _requested == "numpy":
    from . import numpy_backend as _impl

    BACKEND = "numpy"
else:
    try:
        from . import numba_backend as _impl

        BACKEND = "numba"
    except ImportError:
        if _requested == "numba":
            raise
        from . import numpy_backend as _impl

        BACKEND = "numpy"

combine = _impl.combine
normal_form = _impl.normal_form


def backend_name() -> str:
    return BACKEND
