# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled evaluation core: Riemann-Siegel / Euler-Maclaurin Z(t) and the
segmented integer sieves.  Mirrors zetalab._engine_py; tables for the
Riemann-Siegel correction terms are injected once via ``load_tables``.
"""

from libc.math cimport cos, sin, log, sqrt, floor, exp, pi, fabs
from libc.stdlib cimport malloc, free

import numpy as np
cimport numpy as cnp
from cython.parallel cimport prange
cimport openmp

cnp.import_array()

cdef double TWO_PI = 2.0 * pi
cdef double RS_CUTOFF = 1000.0

# Chebyshev tables, set by load_tables()
cdef int N_CK = 0
cdef int CK_LEN = 0
cdef double *CK_DATA = NULL

# B_{2k}/(2k)! for the Euler-Maclaurin tail
cdef double[12] EM_COEF
_em_exact = [
    1.0 / 12.0, -1.0 / 720.0, 1.0 / 30240.0, -1.0 / 1209600.0,
    1.0 / 47900160.0, -691.0 / 1307674368000.0, 1.0 / 74724249600.0,
    -3617.0 / 10670622842880000.0, 43867.0 / 5109094217170944000.0,
    -174611.0 / 802857662698291200000.0, 854513.0 / 14101100039391805440000.0,
    -236364091.0 / 1693824136731743669452800000.0,
]
cdef int _i
for _i in range(12):
    EM_COEF[_i] = _em_exact[_i]


def load_tables(cheb):
    """Install the Riemann-Siegel correction Chebyshev tables (list of 1-D
    float arrays, all padded to equal length by the caller)."""
    global N_CK, CK_LEN, CK_DATA
    arr = np.ascontiguousarray(np.vstack(cheb), dtype=np.float64)
    N_CK = arr.shape[0]
    CK_LEN = arr.shape[1]
    if CK_DATA != NULL:
        free(CK_DATA)
    CK_DATA = <double *> malloc(N_CK * CK_LEN * sizeof(double))
    cdef double[:, ::1] v = arr
    cdef int i, j
    for i in range(N_CK):
        for j in range(CK_LEN):
            CK_DATA[i * CK_LEN + j] = v[i, j]


cdef inline double _clenshaw(const double *c, int n, double x) noexcept nogil:
    cdef double b0 = 0.0, b1 = 0.0, b2
    cdef double x2 = 2.0 * x
    cdef int k
    for k in range(n - 1, -1, -1):
        b2 = b1
        b1 = b0
        b0 = x2 * b1 - b2 + c[k]
    return b0 - x * b1


cdef inline double _theta(double t) noexcept nogil:
    cdef double t2 = t * t
    cdef double corr = (1.0 / 48.0 + (7.0 / 5760.0 + (31.0 / 80640.0
                        + 127.0 / 430080.0 / t2) / t2) / t2) / t
    return 0.5 * t * log(t / TWO_PI) - 0.5 * t - pi / 8.0 + corr


cdef inline double _z_rs(double t, double *err) noexcept nogil:
    cdef double tau = sqrt(t / TWO_PI)
    cdef long N = <long> floor(tau)
    cdef double p = tau - N
    cdef double th = _theta(t)
    cdef double s = 0.0
    cdef long n
    for n in range(1, N + 1):
        s += cos(th - t * log(<double> n)) / sqrt(<double> n)
    s *= 2.0
    cdef double x = 2.0 * p - 1.0
    cdef double corr = 0.0, tpow = 1.0
    cdef int k
    for k in range(N_CK):
        corr += _clenshaw(CK_DATA + k * CK_LEN, CK_LEN, x) * tpow
        tpow /= tau
    cdef double sign = 1.0 if (N % 2 == 1) else -1.0
    err[0] = 10.0 * tau ** (-0.5 - N_CK) + 2e-15 * t
    return s + sign * corr / sqrt(tau)


cdef inline double _z_em(double t, double *err) noexcept nogil:
    """Z(t) via Euler-Maclaurin zeta(1/2+it); valid for 2 <= t < RS_CUTOFF."""
    cdef long N = <long> t + 1
    if N < 32:
        N = 32
    cdef double re = 0.0, im = 0.0, a, ln_n
    cdef long n
    for n in range(1, N):
        ln_n = log(<double> n)
        a = 1.0 / sqrt(<double> n)
        re += a * cos(t * ln_n)
        im -= a * sin(t * ln_n)
    # + N^{-s}/2 + N^{1-s}/(s-1), s = 1/2 + it
    cdef double lnN = log(<double> N)
    cdef double am = 1.0 / sqrt(<double> N)
    cdef double cr = am * cos(t * lnN), ci = -am * sin(t * lnN)   # N^{-s}
    re += 0.5 * cr
    im += 0.5 * ci
    # N^{1-s}/(s-1):  N^{1-s} = N * N^{-s};  s-1 = -1/2 + it
    cdef double nr = N * cr, ni = N * ci
    cdef double dr = -0.5, di = t
    cdef double den = dr * dr + di * di
    re += (nr * dr + ni * di) / den
    im += (ni * dr - nr * di) / den
    # tail sum_k EM_COEF[k-1] * (s)_{2k-1} * N^{-s-2k+1}
    cdef double rr = 0.5, ri = t          # rising factorial (s)_1 = s
    cdef double pr = nr, pi_ = ni         # N^{-s+1}
    cdef double N2 = (<double> N) * (<double> N)
    cdef int k
    cdef double t1r, t1i, ar, ai, br, bi
    for k in range(1, 13):
        pr /= N2
        pi_ /= N2
        if k > 1:
            ar = 0.5 + (2 * k - 3)
            br = 0.5 + (2 * k - 2)
            # rising *= (s + 2k-3)(s + 2k-2)
            t1r = rr * ar - ri * t
            t1i = rr * t + ri * ar
            rr = t1r * br - t1i * t
            ri = t1r * t + t1i * br
        re += EM_COEF[k - 1] * (rr * pr - ri * pi_)
        im += EM_COEF[k - 1] * (rr * pi_ + ri * pr)
    cdef double th = _theta(t)
    err[0] = 2e-15 * (<double> N)
    return re * cos(th) - im * sin(th)


def z_many(double[::1] ts, int threads=0):
    """Z(t) and absolute error estimate for each t >= 10."""
    cdef Py_ssize_t n = ts.shape[0]
    z_arr = np.empty(n, dtype=np.float64)
    e_arr = np.empty(n, dtype=np.float64)
    cdef double[::1] z = z_arr
    cdef double[::1] e = e_arr
    cdef Py_ssize_t i
    cdef double err
    if threads > 0:
        openmp.omp_set_num_threads(threads)
    for i in prange(n, nogil=True, schedule="guided"):
        if ts[i] >= RS_CUTOFF:
            z[i] = _z_rs(ts[i], &err)
        else:
            z[i] = _z_em(ts[i], &err)
        e[i] = err
    return z_arr, e_arr


# ---------------------------------------------------------------------------
# segmented integer sieves


def divisor_prefix_at(long long[::1] queries):
    """Exact D(N) at ascending int64 queries via a segmented increment sieve.

    Total work ~ N_max * ln(N_max) increments; memory one block of int32.
    """
    cdef Py_ssize_t nq = queries.shape[0]
    out_arr = np.zeros(nq, dtype=np.int64)
    cdef long long[::1] out = out_arr
    if nq == 0:
        return out_arr
    cdef long long nmax = queries[nq - 1]
    # L1-sized increment window; divisors larger than the block are
    # enumerated via their small cofactor q = n/dd.  Next-multiple arrays
    # avoid per-block integer divisions, which dominate otherwise.
    cdef long long block = 1 << 14
    if block > nmax:
        block = nmax
    cdef long long ncof = nmax // (block + 1) + 2
    cdef int *d = <int *> malloc(block * sizeof(int))
    cdef long long *nxt = <long long *> malloc((block + 1) * sizeof(long long))
    cdef long long *nxtq = <long long *> malloc((ncof + 1) * sizeof(long long))
    if d == NULL or nxt == NULL or nxtq == NULL:
        raise MemoryError
    cdef long long lo, hi, dd, q, m, qmax
    cdef long long running = 0
    cdef Py_ssize_t qi = 0
    cdef long long j
    try:
        for dd in range(1, block + 1):
            nxt[dd] = dd
        for q in range(1, ncof + 1):
            nxtq[q] = q * (block + 1)
        lo = 1
        while lo <= nmax and qi < nq:
            hi = lo + block - 1
            if hi > nmax:
                hi = nmax
            for j in range(hi - lo + 1):
                d[j] = 0
            for dd in range(1, block + 1):
                if dd > hi:
                    break
                m = nxt[dd]
                while m <= hi:
                    d[m - lo] += 1
                    m += dd
                nxt[dd] = m
            qmax = hi // (block + 1)
            for q in range(1, qmax + 1):
                m = nxtq[q]
                while m <= hi:
                    d[m - lo] += 1
                    m += q
                nxtq[q] = m
            for j in range(lo, hi + 1):
                running += d[j - lo]
                while qi < nq and queries[qi] == j:
                    out[qi] = running
                    qi += 1
            lo = hi + 1
    finally:
        free(d)
        free(nxt)
        free(nxtq)
    return out_arr


def divisor_sieve(long long n_max):
    """d(n) for n = 1..n_max as int32 (index 0 unused)."""
    d_arr = np.zeros(n_max + 1, dtype=np.int32)
    cdef int[::1] d = d_arr
    cdef long long k, m
    for k in range(1, n_max + 1):
        for m in range(k, n_max + 1, k):
            d[m] += 1
    return d_arr


def prime_pi_at(long long[::1] queries):
    """Exact pi(N) at ascending int64 queries; segmented bitset sieve."""
    cdef Py_ssize_t nq = queries.shape[0]
    out_arr = np.zeros(nq, dtype=np.int64)
    cdef long long[::1] out = out_arr
    if nq == 0:
        return out_arr
    cdef long long nmax = queries[nq - 1]
    if nmax < 2:
        return out_arr
    cdef long long root = <long long> sqrt(<double> nmax) + 1
    base = np.nonzero(_bool_sieve(root))[0].astype(np.int64)
    cdef long long[::1] bp = base
    cdef Py_ssize_t nb = bp.shape[0]
    cdef long long block = 1 << 22
    cdef unsigned char *mark = <unsigned char *> malloc(block)
    if mark == NULL:
        raise MemoryError
    cdef long long lo, hi, p, first, m, j
    cdef long long running = 0
    cdef Py_ssize_t qi = 0, bi
    try:
        lo = 2
        while lo <= nmax and qi < nq:
            hi = lo + block - 1
            if hi > nmax:
                hi = nmax
            for j in range(hi - lo + 1):
                mark[j] = 1
            for bi in range(nb):
                p = bp[bi]
                if p * p > hi:
                    break
                first = ((lo + p - 1) // p) * p
                if first < p * p:
                    first = p * p
                for m in range(first, hi + 1, p):
                    mark[m - lo] = 0
            for j in range(lo, hi + 1):
                running += mark[j - lo]
                while qi < nq and queries[qi] == j:
                    out[qi] = running
                    qi += 1
            lo = hi + 1
    finally:
        free(mark)
    # queries below 2
    for qi in range(nq):
        if queries[qi] < 2:
            out[qi] = 0
    return out_arr


def _bool_sieve(long long n_max):
    is_p_arr = np.ones(n_max + 1, dtype=np.uint8)
    cdef unsigned char[::1] is_p = is_p_arr
    is_p[0] = 0
    if n_max >= 1:
        is_p[1] = 0
    cdef long long p, m
    p = 2
    while p * p <= n_max:
        if is_p[p]:
            for m in range(p * p, n_max + 1, p):
                is_p[m] = 0
        p += 1
    return is_p_arr.view(np.bool_)
