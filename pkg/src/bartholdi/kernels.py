"""Backend selection for the brute-force kernels.

The compiled Cython module is used when it was built and imports cleanly;
otherwise the pure-Python twin is used. Setting ``BARTHOLDI_PURE_PYTHON=1``
forces the fallback.
"""

import os

from . import _pykernels

MAX_COMPILED_MINOR_ARCS = 0
_ck = None
if os.environ.get("BARTHOLDI_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _ck

        MAX_COMPILED_MINOR_ARCS = _ck.MAX_MINOR_ARCS
    except ImportError:
        _ck = None

BACKEND = "cython" if _ck is not None else "python"


def semi_principal_minor_sums(T, m, backend=None):
    impl = _pick(backend)
    if impl is _ck and 2 * m > MAX_COMPILED_MINOR_ARCS:
        impl = _pykernels
    return impl.semi_principal_minor_sums(T, m)


def closed_walk_bump_counts(tails, heads, m, k, backend=None):
    return _pick(backend).closed_walk_bump_counts(tails, heads, m, k)


def _pick(backend):
    if backend is None:
        backend = BACKEND
    if backend == "python":
        return _pykernels
    if backend == "cython":
        if _ck is None:
            raise RuntimeError("compiled kernels are not available")
        return _ck
    raise ValueError(f"unknown backend {backend!r}")
