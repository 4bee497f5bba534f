"""Pure-numpy evaluation engine (fallback when the compiled core is absent).

Provides the same numerical surface as ``zetalab._kernels``:

* ``z_many`` -- Riemann-Siegel Z(t) with error estimates, vectorized.
* ``em_zeta_line`` -- complex zeta(1/2+it) by Euler-Maclaurin summation.
* ``theta_series`` / ``theta_exact`` -- the Riemann-Siegel phase.
* exact divisor / prime-counting helpers.

Heights below ``RS_CUTOFF`` are evaluated by Euler-Maclaurin (absolute error
near 1e-13), heights above by the Riemann-Siegel main sum plus six extracted
correction terms (absolute error ~1e-9 at t=1000, falling fast with t).
"""

import math
from fractions import Fraction

import numpy as np
from numpy.polynomial.chebyshev import chebval
from scipy.special import loggamma

from ._rs_data import RS_CHEB
from .constants import RS_CUTOFF, TWO_PI

# B_{2k}/(2k)! for the Euler-Maclaurin tail, exact then rounded once.
_BERN2K = [
    Fraction(1, 6), Fraction(-1, 30), Fraction(1, 42), Fraction(-1, 30),
    Fraction(5, 66), Fraction(-691, 2730), Fraction(7, 6),
    Fraction(-3617, 510), Fraction(43867, 798), Fraction(-174611, 330),
    Fraction(854513, 138), Fraction(-236364091, 2730),
]
_EM_COEF = np.array(
    [float(b / Fraction(math.factorial(2 * k + 2))) for k, b in enumerate(_BERN2K)]
)

_CHUNK_ELEMS = 4_000_000


def theta_series(t):
    """Riemann-Siegel theta by its asymptotic series (t >= 1).

    Absolute error is ~1e-4 at t=1 and below 1e-11 for t >= 10.
    """
    t = np.asarray(t, dtype=float)
    lt = np.log(t / TWO_PI)
    t2 = t * t
    corr = (1.0 / 48.0 + (7.0 / 5760.0 + (31.0 / 80640.0
            + 127.0 / 430080.0 / t2) / t2) / t2) / t
    return 0.5 * t * lt - 0.5 * t - math.pi / 8.0 + corr


def theta_exact(t):
    """theta via the log-Gamma function; valid for all t >= 0."""
    t = np.asarray(t, dtype=float)
    return (loggamma(0.25 + 0.5j * t).imag - 0.5 * t * math.log(math.pi))


def _theta_for(t):
    t = np.asarray(t, dtype=float)
    out = np.empty_like(t)
    small = t < 10.0
    if np.any(small):
        out[small] = theta_exact(t[small])
    big = ~small
    if np.any(big):
        out[big] = theta_series(t[big])
    return out


def em_zeta_line(ts, n_terms=None):
    """zeta(1/2 + i t) by Euler-Maclaurin, vectorized over ts (t >= 0).

    Uses N ~ t summation terms, so cost grows linearly with height; intended
    for t below ``RS_CUTOFF`` and for oracle-style cross checks.
    """
    ts = np.atleast_1d(np.asarray(ts, dtype=float))
    out = np.empty(ts.shape, dtype=complex)
    order = np.argsort(ts, kind="stable")
    sorted_t = ts[order]
    pos = 0
    n = sorted_t.size
    while pos < n:
        nmax = int(max(sorted_t[pos], 32.0)) + 1
        take = max(1, min(n - pos, int(max(1, _CHUNK_ELEMS // (2 * nmax)))))
        # keep chunk N within 2x of the first element's N
        hi = pos + take
        while hi > pos + 1 and int(max(sorted_t[hi - 1], 32.0)) + 1 > 2 * nmax:
            hi -= 1
        chunk = sorted_t[pos:hi]
        out[order[pos:hi]] = _em_chunk(chunk, n_terms)
        pos = hi
    return out


def _em_chunk(ts, n_terms):
    s = 0.5 + 1j * ts
    if n_terms is None:
        N = np.maximum(32, np.ceil(ts).astype(np.int64) + 1)
    else:
        N = np.full(ts.shape, n_terms, dtype=np.int64)
    nmax = int(N.max())
    n = np.arange(1, nmax + 1, dtype=float)
    # n^{-s} = exp(-0.5 ln n) * exp(-i t ln n), masked beyond N-1
    ln_n = np.log(n)
    amp = n ** -0.5
    phase = np.exp(-1j * np.outer(ts, ln_n))
    mask = n[None, :] <= (N[:, None] - 1)
    partial = (phase * amp[None, :] * mask).sum(axis=1)
    Nf = N.astype(float)
    lnN = np.log(Nf)
    N_ms = np.exp(-s * lnN)           # N^{-s}
    total = partial + 0.5 * N_ms + N_ms * Nf / (s - 1.0)
    # tail: sum_k B_{2k}/(2k)! * (s)_{2k-1} * N^{-s-2k+1}
    rising = s.copy()                  # (s)_{1}
    npow = N_ms * Nf                   # N^{-s+1}
    for k in range(1, len(_EM_COEF) + 1):
        npow = npow / (Nf * Nf)        # N^{-s-2k+1}
        if k > 1:
            rising = rising * (s + (2 * k - 3)) * (s + (2 * k - 2))
        total = total + _EM_COEF[k - 1] * rising * npow
    return total


def _rs_chunk(ts):
    tau = np.sqrt(ts / TWO_PI)
    N = np.floor(tau).astype(np.int64)
    p = tau - N
    th = theta_series(ts)
    nmax = int(N.max())
    n = np.arange(1, nmax + 1, dtype=float)
    ln_n = np.log(n)
    amp = n ** -0.5
    args = th[:, None] - np.outer(ts, ln_n)
    mask = n[None, :] <= N[:, None]
    main = 2.0 * (np.cos(args) * amp[None, :] * mask).sum(axis=1)
    x = 2.0 * p - 1.0
    corr = np.zeros_like(ts)
    tpow = np.ones_like(ts)
    for c in RS_CHEB:
        corr += chebval(x, c) * tpow
        tpow /= tau
    sign = np.where(N % 2 == 1, 1.0, -1.0)   # (-1)^(N-1)
    z = main + sign * corr / np.sqrt(tau)
    # truncation after C_5 plus phase rounding (args ~ t*ln n in double)
    err = 10.0 * tau ** (-0.5 - len(RS_CHEB)) + 2e-15 * ts
    return z, err


def z_many(ts, threads=0):
    """Z(t) and an absolute-error estimate for each t (t >= 10, any order)."""
    ts = np.atleast_1d(np.asarray(ts, dtype=float))
    z = np.empty(ts.shape)
    err = np.empty(ts.shape)
    low = ts < RS_CUTOFF
    if np.any(low):
        tl = ts[low]
        zeta = em_zeta_line(tl)
        th = _theta_for(tl)
        z[low] = (np.exp(1j * th) * zeta).real
        err[low] = 2e-15 * np.maximum(tl, 32.0)
    high = ~low
    if np.any(high):
        th_idx = np.nonzero(high)[0]
        sorted_idx = th_idx[np.argsort(ts[th_idx], kind="stable")]
        pos = 0
        while pos < sorted_idx.size:
            t0 = ts[sorted_idx[pos]]
            nmax = int(math.sqrt(t0 / TWO_PI)) + 1
            take = max(1, min(sorted_idx.size - pos,
                              _CHUNK_ELEMS // max(nmax, 1)))
            sel = sorted_idx[pos:pos + take]
            z[sel], err[sel] = _rs_chunk(ts[sel])
            pos += take
    return z, err


# ---------------------------------------------------------------------------
# exact integer-side helpers


def divisor_sieve(n_max):
    """d(n) for n = 1..n_max as int32 (index 0 unused)."""
    d = np.zeros(n_max + 1, dtype=np.int32)
    for k in range(1, n_max + 1):
        d[k::k] += 1
    return d


def divisor_prefix_at(queries):
    """Exact D(N) at each (sorted, int64) query via the direct divisor sum.

    O(N) per query; the compiled backend replaces this with a segmented
    increment sieve when large queries are involved.
    """
    out = np.empty(len(queries), dtype=np.int64)
    for i, q in enumerate(queries):
        q = int(q)
        total = 0
        step = 1 << 22
        for lo in range(1, q + 1, step):
            n = np.arange(lo, min(q, lo + step - 1) + 1, dtype=np.int64)
            total += int(np.sum(q // n))
        out[i] = total
    return out


def prime_sieve(n_max):
    """Boolean primality array for 0..n_max."""
    is_p = np.ones(n_max + 1, dtype=bool)
    is_p[:2] = False
    for p in range(2, int(n_max ** 0.5) + 1):
        if is_p[p]:
            is_p[p * p::p] = False
    return is_p


def prime_pi_at(queries):
    """Exact pi(N) at each int64 query."""
    queries = np.asarray(queries, dtype=np.int64)
    n_max = int(queries.max())
    is_p = prime_sieve(n_max)
    cum = np.cumsum(is_p)
    return cum[queries]
