"""Backend selection for the hot loops.

The compiled extension is used when it imports; otherwise the pure-Python
module is used. Setting ``SHIFTSG_PURE_PYTHON=1`` forces the fallback.
``BACKEND`` names the active implementation.
"""

import os

import numpy as np

from . import _pykernels

if os.environ.get("SHIFTSG_PURE_PYTHON"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl
    except ImportError:  # extension not built
        _impl = _pykernels

BACKEND = "cython" if _impl is not _pykernels else "python"
INF = _pykernels.INF

round_robin_pass = _impl.round_robin_pass


def new_weights(modulus):
    w = np.full(modulus, INF, dtype=np.int64)
    w[0] = 0
    return w


def finalize_weights(w):
    """Replace the unreached sentinel by -1."""
    w[w >= INF] = -1
    return w


def apery_weights(gens, modulus, impl=None):
    """Least element of <gens> in each residue class mod ``modulus`` (-1 when
    the class is not reached)."""
    impl = impl or _impl
    w = new_weights(modulus)
    for a in gens:
        impl.round_robin_pass(w, int(a))
    return finalize_weights(w)


def maximal_classes(w, gens, impl=None):
    impl = impl or _impl
    return list(impl.maximal_classes(w, [int(g) for g in gens]))


def min_lengths(coins, upto, impl=None):
    impl = impl or _impl
    return np.asarray(impl.min_lengths(list(coins), int(upto)), dtype=np.int64)


def trace_holes(w, pf, frobenius, impl=None):
    impl = impl or _impl
    return list(impl.trace_holes(w, list(pf), int(frobenius)))
