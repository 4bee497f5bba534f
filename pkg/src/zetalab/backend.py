"""Backend selection: compiled Cython core when available, numpy fallback.

Set ``ZETALAB_PURE=1`` in the environment to force the pure-Python engine
(useful for the benchmark comparison and for debugging).
"""

import os

import numpy as np

from . import _engine_py
from ._rs_data import RS_CHEB

USING_COMPILED = False
_impl = _engine_py

if os.environ.get("ZETALAB_PURE", "0") != "1":
    try:
        from . import _kernels

        _pad = max(len(c) for c in RS_CHEB)
        _kernels.load_tables(
            [np.pad(c, (0, _pad - len(c))) for c in RS_CHEB]
        )
        _impl = _kernels
        USING_COMPILED = True
    except ImportError:
        pass


def z_many(ts, threads=0):
    ts = np.ascontiguousarray(ts, dtype=np.float64)
    return _impl.z_many(ts, threads)


def divisor_prefix_at(queries):
    qs = np.ascontiguousarray(queries, dtype=np.int64)
    if np.any(np.diff(qs) < 0):
        raise ValueError("queries must be ascending")
    return _impl.divisor_prefix_at(qs)


def divisor_sieve(n_max):
    return _impl.divisor_sieve(int(n_max))


def prime_pi_at(queries):
    qs = np.ascontiguousarray(queries, dtype=np.int64)
    if np.any(np.diff(qs) < 0):
        raise ValueError("queries must be ascending")
    return _impl.prime_pi_at(qs)


# always available from the pure engine (cheap, or oracle-grade paths)
theta_series = _engine_py.theta_series
theta_exact = _engine_py.theta_exact
em_zeta_line = _engine_py.em_zeta_line
