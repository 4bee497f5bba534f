"""Exact integer-side objects: divisor sieves, the Dirichlet summatory D(x),
its error term Delta(x), prime counting, the Euler prime-counting
representation of zeta(s), and exact Fermat-rational arithmetic.

Everything here is exact integer or big-integer work except delta_error and
euler_pi_representation, which combine exact counts with floating-point
closed forms.
"""

import csv
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import backend
from .constants import EULER_GAMMA
from .errors import DomainError, ToleranceError

# memory budgets for materialized tables (documented):
#   d(n) as int32 costs 4 bytes/entry, so 1e8 entries = 400 MB; the pure
#   fallback sieve is O(n log n) python-loop-free but still capped lower.
SIEVE_BUDGET_COMPILED = 100_000_000
SIEVE_BUDGET_PURE = 10_000_000
PRIME_BUDGET = 100_000_000


@dataclass
class DivisorTable:
    n_max: int
    d_values: np.ndarray          # d(n) at index n, int32, index 0 unused
    _prefix: np.ndarray = None

    @property
    def d_prefix(self):
        """D(N) = sum of d(n) for n <= N, as int64 (index N)."""
        if self._prefix is None:
            self._prefix = np.cumsum(self.d_values, dtype=np.int64)
        return self._prefix

    def export_csv(self, path, limit=None):
        n_hi = min(self.n_max, limit or self.n_max)
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["n", "d", "D"])
            pref = self.d_prefix
            for n in range(1, n_hi + 1):
                w.writerow([n, int(self.d_values[n]), int(pref[n])])


def sieve_divisors(n_max):
    """DivisorTable for 1..n_max by incrementing multiples."""
    budget = SIEVE_BUDGET_COMPILED if backend.USING_COMPILED else SIEVE_BUDGET_PURE
    if not (1 <= n_max <= budget):
        raise DomainError(
            f"sieve_divisors budget is 1..{budget} on this backend, "
            f"got {n_max}")
    return DivisorTable(n_max=int(n_max),
                        d_values=backend.divisor_sieve(int(n_max)))


def divisor_summatory(x):
    """Exact D(floor(x)) by the hyperbola identity, O(sqrt(N)) time."""
    if x < 1:
        raise DomainError(f"divisor_summatory requires x >= 1, got {x}")
    N = int(math.floor(x))
    root = math.isqrt(N)
    n = np.arange(1, root + 1, dtype=np.int64)
    return int(2 * int(np.sum(N // n)) - root * root)


def divisor_summatory_many(xs):
    """Exact D at many points (ascending not required); hyperbola per point."""
    return np.array([divisor_summatory(float(x)) for x in xs], dtype=np.int64)


def delta_error(x):
    """Delta(x) = D(x) - x*ln(x) - (2c-1)*x, c = Euler's constant."""
    if x < 2:
        raise DomainError(f"delta_error requires x >= 2, got {x}")
    d = divisor_summatory(x)
    return d - x * math.log(x) - (2.0 * EULER_GAMMA - 1.0) * x


# ---------------------------------------------------------------------------
# primes


_PRIME_CACHE = {"limit": 0, "primes": np.empty(0, dtype=np.int64)}


def _primes_upto(limit):
    limit = int(limit)
    if limit > _PRIME_CACHE["limit"]:
        grow = max(limit, 2 * _PRIME_CACHE["limit"], 1 << 16)
        if backend.USING_COMPILED:
            from . import _kernels
            mask = _kernels._bool_sieve(grow)
        else:
            from ._engine_py import prime_sieve
            mask = prime_sieve(grow)
        _PRIME_CACHE["primes"] = np.nonzero(mask)[0].astype(np.int64)
        _PRIME_CACHE["limit"] = grow
    return _PRIME_CACHE["primes"]


def prime_count(x):
    """Exact pi(floor(x)) for 2 <= x <= 1e8, from a cached sieve."""
    if not (2 <= x <= PRIME_BUDGET):
        raise DomainError(f"prime_count supports 2 <= x <= {PRIME_BUDGET}")
    n = int(math.floor(x))
    primes = _primes_upto(n)
    return int(np.searchsorted(primes, n, side="right"))


def euler_pi_representation(s, tol=1e-6):
    """zeta(s) reconstructed from exact prime counts via

        zeta(s) = exp( s * int_2^inf pi(x) / (x*(x^s-1)) dx ).

    pi is piecewise constant, so the integral up to the cutoff is an exact
    sum of closed-form pieces between consecutive primes:
        int dx / (x*(x^s-1)) = (1/s) * ln(1 - x^(-s)) + const.
    The tail beyond the cutoff uses the pi(x) ~ x/(ln x - 1) model with an
    uncertainty bound; the bound exceeding tol raises ToleranceError.
    """
    if not (1.5 <= s <= 6.0):
        raise DomainError(f"euler_pi_representation requires 1.5 <= s <= 6")
    x_cut = 50_000_000 if s < 1.8 else 20_000_000
    primes = _primes_upto(x_cut).astype(float)
    primes = primes[primes <= x_cut]
    # on [p_k, p_{k+1}): pi = k+1; antiderivative F(x) = (1/s) ln(1-x^(-s))
    edges = np.concatenate([primes, [float(x_cut)]])
    F = np.log(1.0 - edges ** (-s)) / s
    counts = np.arange(1, primes.size + 1, dtype=float)
    integral = float(np.sum(counts * np.diff(F)))
    # tail: substitute u = x_cut/x, integrand s/((ln x - 1)(x^s - 1))/u
    gx, gw = np.polynomial.legendre.leggauss(64)
    u = 0.5 * (gx + 1.0)
    xs = x_cut / u
    tail_f = s / ((np.log(xs) - 1.0) * (xs ** s - 1.0) * u)
    tail = 0.5 * float(np.dot(gw, tail_f))
    # model uncertainty: difference against the cruder pi(x) ~ x/ln(x)
    alt_f = s / (np.log(xs) * (xs ** s - 1.0) * u)
    bound = abs(tail - 0.5 * float(np.dot(gw, alt_f)))
    if bound > tol:
        raise ToleranceError(
            f"prime tail bound {bound:.2e} exceeds tol={tol} at s={s}",
            achieved=bound)
    return math.exp(s * (integral + tail))


# ---------------------------------------------------------------------------
# Fermat rationals


@dataclass(frozen=True)
class FermatRational:
    x: int
    y: int
    z: int
    n: int
    numerator: int                # x^n + y^n
    denominator: int              # z^n
    gap_lower_bound: Fraction     # exact |q - 1|; >= 1/z^n whenever q != 1

    @property
    def q(self):
        return Fraction(self.numerator, self.denominator)

    @property
    def is_one(self):
        return self.numerator == self.denominator


def fermat_rational(x, y, z, n):
    """Exact big-integer Fermat rational q = (x^n + y^n) / z^n, n >= 3."""
    if n < 3:
        raise DomainError(
            f"Fermat-rational class requires exponent n >= 3, got n={n}")
    if min(x, y, z) < 1:
        raise DomainError("x, y, z must be positive integers")
    num = x ** n + y ** n
    den = z ** n
    gap = abs(Fraction(num, den) - 1)
    return FermatRational(x=x, y=y, z=z, n=n, numerator=num,
                          denominator=den, gap_lower_bound=gap)


def fermat_exhaustive_scan(z_max=50, n_min=3, n_max=7):
    """Exact search for q = 1 with x, y < z <= z_max, n_min <= n <= n_max.

    Returns the list of solutions found (empty, by Fermat-Wiles, at any
    scale this scan can reach).
    """
    hits = []
    for n in range(n_min, n_max + 1):
        powers = [k ** n for k in range(z_max + 1)]
        for z in range(2, z_max + 1):
            zn = powers[z]
            for x in range(1, z):
                xn = powers[x]
                if xn * 2 > zn:
                    break
                rest = zn - xn
                for y in range(x, z):
                    if powers[y] == rest:
                        hits.append((x, y, z, n))
                    elif powers[y] > rest:
                        break
    return hits
