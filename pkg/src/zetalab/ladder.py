"""Jacob's ladder phi1, its iterates, and the gap diagnostics.

phi1(T) is defined operationally as the unique y > e with

    h(y) = y*ln(y) + (c - ln(2*pi))*y + c0 = J(T),

where J is the cumulative critical-line integral carried by a ZetaGrid and
c is Euler's constant.  Since h is strictly increasing for y > e, phi1 is a
monotone inversion: one J lookup followed by a Newton solve on the closed
form.  The reverse iterate T1 with phi1(T1) = T inverts J itself at the
target h(T); both directions therefore share the same cached grid and their
round trip cancels exactly up to solver tolerance.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from . import backend
from .constants import EULER_GAMMA, LN_2PI, ONE_MINUS_C
from .errors import DomainError, ZetalabError


@dataclass(frozen=True)
class LadderConstants:
    c: float = EULER_GAMMA
    c0: float = 0.0
    one_minus_c: float = ONE_MINUS_C


@dataclass
class LadderTable:
    base_T: float
    forward: list = field(default_factory=list)    # phi1^0(T) .. phi1^k(T)
    reverse: list = field(default_factory=list)    # T-hat^0 .. T-hat^r
    solver_tol: float = 1e-10
    k: int = 0


def _h(y, c0=0.0):
    """y*ln(y) + (c - ln 2pi)*y + c0; strictly increasing for y > e."""
    return y * math.log(y) + (EULER_GAMMA - LN_2PI) * y + c0


def _h_prime(y):
    return math.log(y) + 1.0 + EULER_GAMMA - LN_2PI


def _invert_h(target, c0=0.0, guess=None):
    """The unique y > e with h(y) = target, by Newton with damping."""
    y = guess if guess and guess > math.e else max(2.0 * math.e, target)
    for _ in range(80):
        step = (_h(y, c0) - target) / _h_prime(y)
        y_new = y - step
        while y_new <= math.e:
            step *= 0.5
            y_new = y - step
        y = y_new
        if abs(step) <= 1e-13 * y:
            break
    if abs(_h(y, c0) - target) > 1e-9 * max(1.0, abs(target)):
        raise ZetalabError(f"h-inversion failed to converge at target={target}")
    return y


def phi1(grid, T, c0=0.0):
    """Jacob's ladder value phi1(T) for 100 <= T <= grid.t_max.

    Relative residual of the defining equation is driven below 1e-10.
    """
    if not (100.0 <= T <= grid.t_max):
        raise DomainError(f"phi1 requires 100 <= T <= {grid.t_max}, got {T}")
    j = grid.j_integral(T)
    y = _invert_h(j, c0, guess=T - ONE_MINUS_C * T / math.log(T))
    if abs(_h(y, c0) - j) > 1e-10 * max(1.0, j):
        raise ZetalabError(f"phi1 residual too large at T={T}")
    return y


def reverse_iterate(grid, T, r, c0=0.0, auto_extend=True):
    """LadderTable with the reverse iterates T = T-hat^0 < ... < T-hat^r.

    Each T-hat^j solves phi1(T-hat^j) = T-hat^(j-1), i.e. J(T-hat^j) =
    h(T-hat^(j-1)); the grid auto-extends when the next iterate would fall
    beyond its range (unless disabled).
    """
    if T < 100.0:
        raise DomainError(f"reverse_iterate requires T >= 100, got {T}")
    if not (1 <= r <= 10):
        raise DomainError(f"iteration depth r must be in 1..10, got {r}")
    seq = [float(T)]
    for _ in range(r):
        prev = seq[-1]
        target = _h(prev, c0)
        if target > grid.cumulative[-1]:
            if not auto_extend:
                raise DomainError(
                    f"grid exhausted at t_max={grid.t_max} while inverting "
                    f"J for T-hat above {prev} (auto-extension disabled)")
            # gap law scale: next iterate sits ~ (1-c)*T/ln(T) above
            guess = prev * (1.0 + 1.5 * ONE_MINUS_C / math.log(prev))
            grid.extend_to(max(guess, grid.t_max * 1.02))
        nxt = grid.inverse_j(target)
        if nxt <= prev:
            raise ZetalabError(f"reverse iterate failed to increase at {prev}")
        seq.append(nxt)
    return LadderTable(base_T=float(T), reverse=seq, forward=[float(T)], k=r)


def forward_iterate(grid, T, k, c0=0.0):
    """LadderTable with phi1^0(T) .. phi1^k(T), strictly decreasing."""
    if k < 1:
        raise DomainError(f"iteration depth k must be >= 1, got {k}")
    seq = [float(T)]
    for _ in range(k):
        cur = seq[-1]
        if cur < 100.0:
            raise DomainError(
                f"forward iterate fell below the supported range at {cur}")
        seq.append(phi1(grid, cur, c0))
    return LadderTable(base_T=float(T), forward=seq, reverse=[float(T)], k=k)


def z_tilde_sq(grid, t, c0=0.0):
    """Squared ladder derivative surrogate:

        Z~^2(t) = |zeta(1/2+it)|^2 / (ln(phi1(t)) + 1 + c - ln(2*pi)),

    obtained by implicit differentiation of the defining equation
    (J'(t) = |zeta|^2 = phi1'(t) * h'(phi1(t)))."""
    y = phi1(grid, t, c0)
    z, _ = backend.z_many(np.array([float(t)]))
    return float(z[0] ** 2) / _h_prime(y)


def gap_diagnostics(grid, T, r, c0=0.0):
    """Ratios testing the prime-counting gap law of the reverse iterates.

    Returns rows (j, T-hat^(j-1), T-hat^j, gap_ratio) with
    gap_ratio = (T-hat^j - T-hat^(j-1)) / ((1-c)*pi(T-hat^j)), plus a final
    row ("phi1", phi1(T), T, complement_ratio) with
    complement_ratio = (phi1(T) + (1-c)*pi(T)) / T.
    """
    from .arithmetic import prime_count
    table = reverse_iterate(grid, T, r, c0)
    rows = []
    for j in range(1, r + 1):
        lo, hi = table.reverse[j - 1], table.reverse[j]
        ratio = (hi - lo) / (ONE_MINUS_C * prime_count(hi))
        rows.append((j, lo, hi, ratio))
    y = phi1(grid, T, c0)
    comp = (y + ONE_MINUS_C * prime_count(T)) / T
    rows.append(("phi1", y, float(T), comp))
    return rows
