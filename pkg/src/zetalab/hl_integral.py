"""Cumulative integral J(T) = int_0^T |zeta(1/2+it)|^2 dt on a persistent grid.

The grid stores nodes every 0.5 in t from t=10 upward; the [0, 10] head is a
fixed high-precision constant.  Each half-unit panel is integrated by
composite Simpson at step h and h/2 with Richardson extrapolation, where h
follows the local oscillation rate of |zeta|^2 (step policy h ~ gamma /
theta'(t)).  Panels whose h vs h/2 discrepancy exceeds the grid tolerance are
recomputed at a finer step; persistent refusal raises ToleranceError.

Grids serialize to a small versioned binary cache (interleaved little-endian
float64 records) plus a JSON metadata sidecar, and extend deterministically:
building to T directly or by extension yields bit-identical nodes.
"""

import json
import math
import os
import struct

import numpy as np

from . import backend
from ._rs_data import J_HEAD
from .constants import EULER_GAMMA, LN_2PI, TWO_PI
from .errors import CacheError, DomainError, ToleranceError

T_START = 10.0
NODE_SPACING = 0.5
BLOCK_UNITS = 8192.0            # nodes are built in fixed absolute blocks
CACHE_MAGIC = b"ZGRD"
CACHE_VERSION = 1
_HEADER = struct.Struct("<4sIddQ")


def _gamma_for(tol):
    """Step-policy coefficient: h = gamma/theta'(t) per panel.

    Calibrated so the Richardson-extrapolated Simpson error on an
    oscillation of rate 2*theta' stays near the requested local tolerance.
    """
    return min(0.45, 0.31 * (tol / 1e-6) ** (1.0 / 6.0))


def _theta_prime(t):
    return 0.5 * np.log(np.asarray(t, dtype=float) / TWO_PI)


def _panel_subdiv(t0, gamma):
    """Simpson subinterval count per half-unit panel (multiple of 4)."""
    h = gamma / np.maximum(_theta_prime(t0), 0.05)
    m = np.ceil(NODE_SPACING / h).astype(np.int64)
    return np.maximum(8, ((m + 3) // 4) * 4)


def _simpson_weights(m, h):
    w = np.full(m + 1, 2.0)
    w[1::2] = 4.0
    w[0] = w[m] = 1.0
    return w * (h / 3.0)


def _integrate_panels(starts, span, m_values, threads=0):
    """Richardson-extrapolated Simpson on panels [s, s+span).

    Returns (values, error_estimates, f_at_start).  Panels are grouped by
    subdivision count so each group is one batched |zeta|^2 evaluation.
    """
    vals = np.empty(starts.size)
    errs = np.empty(starts.size)
    f0 = np.empty(starts.size)
    for m in np.unique(m_values):
        sel = np.nonzero(m_values == m)[0]
        h = span / m
        offs = np.arange(m + 1) * h
        pts = starts[sel][:, None] + offs[None, :]
        from .zeta_critical import zsq_many
        y = zsq_many(pts.ravel(), threads).reshape(pts.shape)
        fine = y @ _simpson_weights(int(m), h)
        coarse = y[:, ::2] @ _simpson_weights(int(m) // 2, 2.0 * h)
        diff = (fine - coarse) / 15.0
        vals[sel] = fine + diff
        errs[sel] = np.abs(diff)
        f0[sel] = y[:, 0]
    return vals, errs, f0


def _build_panels(t_lo, t_hi, tol, threads=0):
    """Panel integrals and start-point samples on [t_lo, t_hi).

    Deterministic for fixed (t_lo, t_hi, tol): refinement decisions depend
    only on computed values, never on block grouping.
    """
    gamma = _gamma_for(tol)
    n = int(round((t_hi - t_lo) / NODE_SPACING))
    starts = t_lo + NODE_SPACING * np.arange(n)
    m_values = _panel_subdiv(starts, gamma)
    vals, errs, f0 = _integrate_panels(starts, NODE_SPACING, m_values, threads)
    # local scale: panel value, floored by the typical mean of |zeta|^2
    scale = np.abs(vals) + 0.05 * np.log(np.maximum(starts, 20.0))
    for _ in range(2):
        bad = np.nonzero(errs > tol * scale)[0]
        if bad.size == 0:
            break
        m_values = m_values.copy()
        m_values[bad] *= 4
        v, e, f = _integrate_panels(starts[bad], NODE_SPACING,
                                    m_values[bad], threads)
        vals[bad], errs[bad], f0[bad] = v, e, f
    else:
        bad = np.nonzero(errs > tol * scale)[0]
        if bad.size:
            raise ToleranceError(
                f"panel at t={starts[bad[0]]} did not reach tol={tol}",
                achieved=float(np.max(errs[bad] / scale[bad])))
    return starts, vals, f0


class ZetaGrid:
    """Cached |zeta(1/2+it)|^2 samples with the running integral J(t).

    Attributes: ``ts`` (node heights, ascending, spacing 0.5 from t=10),
    ``modulus_sq`` (integrand at nodes), ``cumulative`` (J at nodes,
    nondecreasing), ``tol``, ``head`` (J(10) constant), ``version``.
    """

    def __init__(self, ts, modulus_sq, cumulative, tol, threads=0):
        self.ts = ts
        self.modulus_sq = modulus_sq
        self.cumulative = cumulative
        self.tol = tol
        self.threads = threads
        self.head = J_HEAD
        self.version = CACHE_VERSION
        self.step_policy = (
            "half-unit Simpson panels, substep gamma/theta'(t), "
            f"gamma={_gamma_for(tol):.4f}, Richardson h vs h/2")

    @property
    def t_min(self):
        return T_START

    @property
    def t_max(self):
        return float(self.ts[-1])

    # -- construction -------------------------------------------------------

    @classmethod
    def build(cls, t_max, tol, threads=0):
        if t_max < 100.0:
            raise DomainError(f"build_grid requires t_max >= 100, got {t_max}")
        if not (1e-10 <= tol <= 1e-3):
            raise DomainError(f"tol {tol} outside [1e-10, 1e-3]")
        grid = cls(np.array([T_START]), None, np.array([J_HEAD]), tol, threads)
        grid.modulus_sq = np.array(
            [float(backend.z_many(np.array([T_START]))[0][0] ** 2)])
        grid.extend_to(t_max)
        return grid

    def extend_to(self, t_max):
        """Append nodes up to at least t_max (in place, single writer)."""
        target = T_START + NODE_SPACING * math.ceil(
            (t_max - T_START) / NODE_SPACING)
        if target <= self.t_max:
            return self
        new_ts = [self.ts]
        new_mod = [self.modulus_sq]
        new_cum = [self.cumulative]
        carry = float(self.cumulative[-1])
        lo = self.t_max
        while lo < target:
            # absolute block boundaries keep extension deterministic
            hi = min(target,
                     T_START + BLOCK_UNITS * (math.floor((lo - T_START) / BLOCK_UNITS) + 1))
            starts, vals, f0 = _build_panels(lo, hi, self.tol, self.threads)
            # sequential accumulation keeps extension bit-consistent with a
            # single-call build (same addition order either way)
            cum = np.cumsum(np.concatenate([[carry], vals]))[1:]
            carry = float(cum[-1])
            new_ts.append(starts[1:])
            new_mod.append(f0[1:])
            new_cum.append(cum[:-1])
            new_ts.append(np.array([hi]))
            new_cum.append(np.array([carry]))
            zlast, _ = backend.z_many(np.array([hi]), self.threads)
            new_mod.append(zlast ** 2)
            lo = hi
        self.ts = np.concatenate(new_ts)
        self.modulus_sq = np.concatenate(new_mod)
        self.cumulative = np.concatenate(new_cum)
        return self

    # -- queries ------------------------------------------------------------

    def _check_range(self, T):
        if not (T_START <= T <= self.t_max):
            raise DomainError(
                f"T={T} outside grid range [{T_START}, {self.t_max}]")

    def j_integral(self, T):
        """J(T) = int_0^T |zeta(1/2+it)|^2 dt by node lookup plus a local
        Simpson panel from the node just below T."""
        self._check_range(T)
        idx = int((T - T_START) / NODE_SPACING)
        idx = min(idx, self.ts.size - 1)
        t0 = self.ts[idx]
        base = float(self.cumulative[idx])
        if T == t0:
            return base
        span = T - t0
        gamma = _gamma_for(self.tol)
        m = int(_panel_subdiv(np.array([t0]), gamma)[0])
        vals, _, _ = _integrate_panels(
            np.array([t0]), span, np.array([m]), self.threads)
        return base + float(vals[0])

    def j_segment(self, T1, T2):
        """J(T2) - J(T1) for 10 <= T1 <= T2 <= t_max."""
        if T1 > T2:
            raise DomainError(f"segment needs T1 <= T2, got {T1} > {T2}")
        if T1 == T2:
            return 0.0
        return self.j_integral(T2) - self.j_integral(T1)

    def inverse_j(self, target):
        """The height u with J(u) = target (monotone inversion)."""
        if target < self.head:
            raise DomainError("target below J(10); height not supported")
        if target > self.cumulative[-1]:
            raise DomainError("target beyond grid range")
        idx = int(np.searchsorted(self.cumulative, target, side="right")) - 1
        idx = max(0, min(idx, self.ts.size - 2))
        from scipy.optimize import brentq
        lo, hi = float(self.ts[idx]), float(self.ts[idx + 1])
        flo = float(self.cumulative[idx]) - target
        fhi = float(self.cumulative[idx + 1]) - target
        if flo == 0.0:
            return lo
        if fhi == 0.0:
            return hi
        return float(brentq(lambda u: self.j_integral(u) - target, lo, hi,
                            xtol=1e-10, rtol=1e-14))

    # -- persistence --------------------------------------------------------

    def save(self, path):
        records = np.empty((self.ts.size, 3))
        records[:, 0] = self.ts
        records[:, 1] = self.modulus_sq
        records[:, 2] = self.cumulative
        header = _HEADER.pack(CACHE_MAGIC, CACHE_VERSION, self.t_max,
                              self.tol, self.ts.size)
        import fcntl
        lock_path = str(path) + ".lock"
        with open(lock_path, "w") as lock:
            fcntl.flock(lock, fcntl.LOCK_EX)
            try:
                tmp = str(path) + ".tmp"
                with open(tmp, "wb") as fh:
                    fh.write(header)
                    records.astype("<f8").tofile(fh)
                os.replace(tmp, path)
                meta = {
                    "version": CACHE_VERSION,
                    "t_max": self.t_max,
                    "tol": self.tol,
                    "node_count": int(self.ts.size),
                    "node_spacing": NODE_SPACING,
                    "block_units": BLOCK_UNITS,
                    "head_constant": self.head,
                    "step_policy": self.step_policy,
                }
                with open(str(path) + ".json", "w") as fh:
                    json.dump(meta, fh, indent=2, sort_keys=True)
                    fh.write("\n")
            finally:
                fcntl.flock(lock, fcntl.LOCK_UN)

    @classmethod
    def load(cls, path, threads=0):
        if not os.path.exists(path):
            raise CacheError(f"grid cache not found: {path}")
        with open(path, "rb") as fh:
            raw = fh.read(_HEADER.size)
            if len(raw) < _HEADER.size:
                raise CacheError(f"grid cache truncated: {path}")
            magic, version, t_max, tol, count = _HEADER.unpack(raw)
            if magic != CACHE_MAGIC:
                raise CacheError(f"bad cache magic in {path}")
            if version != CACHE_VERSION:
                raise CacheError(
                    f"cache version {version} unsupported (want {CACHE_VERSION})")
            records = np.fromfile(fh, dtype="<f8")
        if records.size != 3 * count:
            raise CacheError(f"grid cache corrupt: {path}")
        records = records.reshape(count, 3)
        grid = cls(records[:, 0].copy(), records[:, 1].copy(),
                   records[:, 2].copy(), tol, threads)
        if abs(grid.t_max - t_max) > 1e-9:
            raise CacheError(f"cache header t_max disagrees with data: {path}")
        return grid


def build_grid(t_max, tol, threads=0, cache_path=None):
    """Build (or reuse) a ZetaGrid covering [10, t_max] at local tolerance tol.

    With ``cache_path``, an existing compatible cache (same or tighter tol,
    any coverage) is loaded and extended as needed, then saved back.
    """
    if cache_path and os.path.exists(cache_path):
        grid = ZetaGrid.load(cache_path, threads)
        if grid.tol <= tol:
            if grid.t_max < t_max:
                grid.extend_to(t_max)
                grid.save(cache_path)
            return grid
    grid = ZetaGrid.build(t_max, tol, threads)
    if cache_path:
        grid.save(cache_path)
    return grid


# ---------------------------------------------------------------------------
# comparison against the mean-value asymptotic


from dataclasses import dataclass


@dataclass(frozen=True)
class HliComparison:
    T: float
    j_value: float
    main_term: float        # T ln T - (1 + ln 2pi - 2c) T
    remainder: float
    exponent_witness: float


def main_term(T):
    """T ln T - (1 + ln 2pi - 2c) T with c = Euler's constant."""
    return T * math.log(T) - (1.0 + LN_2PI - 2.0 * EULER_GAMMA) * T


def hli_compare(grid, T, delta=0.05):
    """Compare J(T) with its asymptotic main term; witness |R|/T^(1/3+delta)."""
    if not (100.0 <= T <= grid.t_max):
        raise DomainError(f"hli_compare needs 100 <= T <= {grid.t_max}")
    if not (0.0 < delta <= 0.2):
        raise DomainError(f"delta {delta} outside (0, 0.2]")
    j = grid.j_integral(T)
    mt = main_term(T)
    r = j - mt
    return HliComparison(T=T, j_value=j, main_term=mt, remainder=r,
                         exponent_witness=abs(r) / T ** (1.0 / 3.0 + delta))
