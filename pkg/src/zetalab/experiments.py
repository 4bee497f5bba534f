"""Finite-scale convergence experiments for the ladder-windowed functionals.

Each operation produces a ConvergenceReport whose rows track one functional
along an ascending tau schedule against its limit target.  Verdicts are
trends, never limits: trend_ok means the deviation magnitude is already
below the configured floor or has been nonincreasing across the final
checkpoints.  Fermat-rational conditions additionally carry an exact
big-integer verdict that does not depend on floating point.
"""

import csv
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
from scipy.special import gamma as gamma_fn

from .arithmetic import FermatRational, divisor_summatory, fermat_rational
from .constants import ONE_MINUS_C, T0_DEFAULT
from .errors import DomainError, ZetalabError
from .ladder import phi1, reverse_iterate
from .zeta_critical import S1Table

MAX_GRID_HEIGHT = 5.0e6          # desk-scale feasibility ceiling


@dataclass(frozen=True)
class Row:
    tau: float
    value: float
    target: float
    deviation: float             # value/target - 1 (or value when target=0)
    error_scale: float


@dataclass
class ConvergenceReport:
    experiment_id: str
    parameter_set: dict
    rows: list = field(default_factory=list)
    verdict: str = "inconclusive"
    exact_verdict: dict = None

    def to_csv(self, path):
        params = ";".join(f"{k}={v}" for k, v in sorted(self.parameter_set.items()))
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["experiment_id", "params", "tau", "value", "target",
                        "deviation", "error_scale"])
            for r in self.rows:
                w.writerow([self.experiment_id, params, repr(r.tau),
                            repr(r.value), repr(r.target), repr(r.deviation),
                            repr(r.error_scale)])

    def to_json(self, path=None):
        doc = {
            "experiment_id": self.experiment_id,
            "parameter_set": {k: str(v) for k, v in sorted(self.parameter_set.items())},
            "rows": [
                {"tau": r.tau, "value": r.value, "target": r.target,
                 "deviation": r.deviation, "error_scale": r.error_scale}
                for r in self.rows
            ],
            "verdict": self.verdict,
        }
        if self.exact_verdict is not None:
            doc["exact_verdict"] = self.exact_verdict
        text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
        if path:
            with open(path, "w") as fh:
                fh.write(text)
        return text


def _finish(report, floor=0.05):
    """Assign the trend verdict from the final deviation checkpoints."""
    devs = [abs(r.deviation) for r in report.rows]
    if not devs:
        report.verdict = "inconclusive"
    elif devs[-1] <= floor:
        report.verdict = "trend_ok"
    elif len(devs) < 3:
        report.verdict = "inconclusive"
    else:
        tail = devs[-3:]
        report.verdict = ("trend_ok" if tail[0] >= tail[1] >= tail[2]
                          else "trend_violated")
    return report


def _check_ascending(taus):
    taus = [float(t) for t in taus]
    if any(b <= a for a, b in zip(taus, taus[1:])):
        raise DomainError("tau schedule must be strictly ascending")
    return taus


def _as_target(x):
    if isinstance(x, FermatRational):
        return float(Fraction(x.numerator, x.denominator))
    if isinstance(x, Fraction):
        return float(x)
    return float(x)


# ---------------------------------------------------------------------------
# increment functionals over reverse-iterate windows


def exp_linear_increment(grid, T_list, r=1, c0=0.0):
    """Segment integrals of |zeta|^2 between consecutive reverse iterates
    against the linear prediction (1-c) * T-hat^(r-1)."""
    if r < 1:
        raise DomainError(f"iterate order r must be >= 1, got {r}")
    T_list = _check_ascending(T_list)
    report = ConvergenceReport("linear_increment", {"r": r})
    for T in T_list:
        tab = reverse_iterate(grid, T, r, c0)
        lo, hi = tab.reverse[r - 1], tab.reverse[r]
        value = grid.j_segment(lo, hi)
        target = ONE_MINUS_C * lo
        report.rows.append(Row(tau=T, value=value, target=target,
                               deviation=value / target - 1.0,
                               error_scale=1.0 / math.log(T)))
    return _finish(report)


def exp_divisor_increment(grid, T_list, r=1, c0=0.0, bound_const=20.0):
    """Divisor-summatory increments D(T-hat^r) - D(T-hat^(r-1)) against the
    matching |zeta|^2 segment; the difference is reported on the T/ln T
    scale, whose boundedness is the tested property."""
    if r < 1:
        raise DomainError(f"iterate order r must be >= 1, got {r}")
    T_list = _check_ascending(T_list)
    report = ConvergenceReport("divisor_increment", {"r": r})
    for T in T_list:
        tab = reverse_iterate(grid, T, r, c0)
        lo, hi = tab.reverse[r - 1], tab.reverse[r]
        d_inc = divisor_summatory(hi) - divisor_summatory(lo)
        seg = grid.j_segment(lo, hi)
        ratio = abs(d_inc - seg) * math.log(T) / T
        report.rows.append(Row(tau=T, value=ratio, target=0.0,
                               deviation=ratio,
                               error_scale=1.0 / math.log(T)))
    devs = [r_.value for r_ in report.rows]
    report.verdict = "trend_ok" if max(devs) < bound_const else "trend_violated"
    report.parameter_set["bound_const"] = bound_const
    return report


# ---------------------------------------------------------------------------
# scaled functionals with target x


def _guard_tau(x, tau, T0=T0_DEFAULT):
    floor = ONE_MINUS_C * T0 / x
    if tau <= floor:
        raise DomainError(
            f"tau={tau} below the domain floor (1-c)*T0/x = {floor:.6g}")


def scaled_zeta_value(grid, x, tau, c0=0.0):
    """(1/tau) * int over [x*tau/(1-c), its reverse iterate] of |zeta|^2."""
    u = x * tau / ONE_MINUS_C
    if u > MAX_GRID_HEIGHT:
        raise DomainError(f"window start {u:.3g} beyond desk scale")
    tab = reverse_iterate(grid, u, 1, c0)
    return grid.j_segment(tab.reverse[0], tab.reverse[1]) / tau


def scaled_divisor_value(grid, x, tau, c0=0.0):
    """(1/tau) * (D(reverse iterate) - D(x*tau/(1-c)))."""
    u = x * tau / ONE_MINUS_C
    if u > MAX_GRID_HEIGHT:
        raise DomainError(f"window start {u:.3g} beyond desk scale")
    tab = reverse_iterate(grid, u, 1, c0)
    return (divisor_summatory(tab.reverse[1]) - divisor_summatory(u)) / tau


def exp_scaled_zeta_functional(grid, x, tau_list, c0=0.0, floor=0.05):
    """Finite-tau rows of the scaled |zeta|^2 window functional, target x."""
    x_t = _as_target(x)
    if x_t <= 0:
        raise DomainError(f"x must be positive, got {x_t}")
    tau_list = _check_ascending(tau_list)
    report = ConvergenceReport("scaled_zeta_functional", {"x": x})
    for tau in tau_list:
        _guard_tau(x_t, tau)
        value = scaled_zeta_value(grid, x_t, tau, c0)
        report.rows.append(Row(tau=tau, value=value, target=x_t,
                               deviation=value / x_t - 1.0,
                               error_scale=1.0 / math.log(tau)))
    return _finish(report, floor)


def exp_scaled_divisor_functional(grid, x, tau_list, c0=0.0, floor=0.05):
    """Finite-tau rows of the scaled divisor-increment functional, target x."""
    x_t = _as_target(x)
    if x_t <= 0:
        raise DomainError(f"x must be positive, got {x_t}")
    tau_list = _check_ascending(tau_list)
    report = ConvergenceReport("scaled_divisor_functional", {"x": x})
    for tau in tau_list:
        _guard_tau(x_t, tau)
        value = scaled_divisor_value(grid, x_t, tau, c0)
        report.rows.append(Row(tau=tau, value=value, target=x_t,
                               deviation=value / x_t - 1.0,
                               error_scale=1.0 / math.log(tau)))
    return _finish(report, floor)


def exp_log_functional(grid, x, tau_list, use_divisor=False, c0=0.0,
                       floor=0.05):
    """Logarithmic window functional: (1/ln tau) * ln F over the window
    [tau^x, its reverse iterate], F the |zeta|^2 segment or D increment."""
    x_t = _as_target(x)
    if x_t <= 0:
        raise DomainError(f"x must be positive, got {x_t}")
    tau_list = _check_ascending(tau_list)
    report = ConvergenceReport(
        "log_functional", {"x": x, "use_divisor": use_divisor})
    for tau in tau_list:
        if tau < max(T0_DEFAULT ** (1.0 / x_t), T0_DEFAULT):
            raise DomainError(
                f"tau={tau} below the domain floor max(T0^(1/x), T0)")
        u = tau ** x_t
        if u > MAX_GRID_HEIGHT:
            raise DomainError(
                f"window start tau^x = {u:.3g} is desk-scale infeasible")
        tab = reverse_iterate(grid, u, 1, c0)
        if use_divisor:
            F = float(divisor_summatory(tab.reverse[1]) - divisor_summatory(u))
        else:
            F = grid.j_segment(tab.reverse[0], tab.reverse[1])
        value = math.log(F) / math.log(tau)
        report.rows.append(Row(tau=tau, value=value, target=x_t,
                               deviation=value / x_t - 1.0,
                               error_scale=1.0 / math.log(tau)))
    return _finish(report, floor)


# ---------------------------------------------------------------------------
# S1-moment functionals


@dataclass(frozen=True)
class SigmaEstimate:
    l: int
    sigma_hat: float
    residual_spread: float
    per_tau: tuple = ()


def _window_moment(s1_table, a, b, l, spacing=0.05):
    """Trapezoid integral of |S1|^(2l) over [a, b]."""
    n = max(8, int(math.ceil((b - a) / spacing)))
    ts = np.linspace(a, b, n + 1)
    vals = np.abs(s1_table.s1_many(ts)) ** (2 * l)
    return float(np.trapezoid(vals, ts))


def estimate_sigma(grid, l, tau_list, c0=0.0, s1_table=None, threads=0):
    """Fit sigma so that sigma*(J(tau)-J(phi1(tau))) + (1-c)*I_l(tau)
    matches (1-c)*sigma*tau, where I_l integrates |S1|^(2l) over the
    ladder window; least squares across the tau schedule."""
    if not (1 <= l <= 3):
        raise DomainError(f"S1 moment order l must be 1..3, got {l}")
    tau_list = _check_ascending(tau_list)
    if s1_table is None:
        s1_table = S1Table(max(tau_list) + 1.0, threads=threads)
    a_vals, b_vals = [], []
    for tau in tau_list:
        y = phi1(grid, tau, c0)
        dj = grid.j_segment(y, tau)
        i_l = _window_moment(s1_table, y, tau, l)
        a_vals.append(ONE_MINUS_C * tau - dj)
        b_vals.append(ONE_MINUS_C * i_l)
    a_vals = np.array(a_vals)
    b_vals = np.array(b_vals)
    denom = float(np.dot(a_vals, a_vals))
    if denom <= 0:
        raise ZetalabError("sigma fit ill-conditioned: degenerate windows")
    sigma_hat = float(np.dot(a_vals, b_vals)) / denom
    per_tau = tuple(float(b / a) for a, b in zip(a_vals, b_vals))
    if sigma_hat <= 0:
        raise ZetalabError("sigma fit produced a nonpositive estimate")
    spread = max(abs(s - sigma_hat) for s in per_tau) / sigma_hat
    return SigmaEstimate(l=l, sigma_hat=sigma_hat, residual_spread=spread,
                         per_tau=per_tau)


def exp_s1_functional(grid, x, l, rho_list, sigma, c0=0.0, s1_table=None,
                      floor=0.05, threads=0):
    """Rows of (1/rho) * int over [phi1(u), u] of sigma*|zeta|^2 +
    (1-c)*|S1|^(2l), with u = x*rho/((1-c)*sigma); target x."""
    x_t = _as_target(x)
    if x_t <= 0:
        raise DomainError(f"x must be positive, got {x_t}")
    if not (1 <= l <= 3):
        raise DomainError(f"S1 moment order l must be 1..3, got {l}")
    rho_list = _check_ascending(rho_list)
    u_max = x_t * max(rho_list) / (ONE_MINUS_C * sigma)
    if u_max > MAX_GRID_HEIGHT:
        raise DomainError(f"window start {u_max:.3g} beyond desk scale")
    if s1_table is None:
        s1_table = S1Table(u_max + 1.0, threads=threads)
    report = ConvergenceReport(
        "s1_functional", {"x": x, "l": l, "sigma": sigma})
    for rho in rho_list:
        floor_rho = ONE_MINUS_C * sigma * T0_DEFAULT / x_t
        if rho <= floor_rho:
            raise DomainError(
                f"rho={rho} below the domain floor (1-c)*sigma*T0/x")
        u = x_t * rho / (ONE_MINUS_C * sigma)
        y = phi1(grid, u, c0)
        value = (sigma * grid.j_segment(y, u)
                 + ONE_MINUS_C * _window_moment(s1_table, y, u, l)) / rho
        report.rows.append(Row(tau=rho, value=value, target=x_t,
                               deviation=value / x_t - 1.0,
                               error_scale=1.0 / math.log(rho) ** 2))
    return _finish(report, floor)


# ---------------------------------------------------------------------------
# Fermat-rational conditions


def fermat_condition_check(grid, fr, tau_list, functional="zeta_linear",
                           c0=0.0, sigma=None, s1_table=None, threads=0):
    """Numeric convergence toward q = (x^n + y^n)/z^n plus the exact verdict.

    The numeric side illustrates; the big-integer side decides q != 1.  When
    the exact gap |q-1| is below the numeric resolution at the largest tau,
    the verdict label is "exact-only separation".
    """
    if not isinstance(fr, FermatRational):
        fr = fermat_rational(*fr)
    q = Fraction(fr.numerator, fr.denominator)
    if functional == "zeta_linear":
        report = exp_scaled_zeta_functional(grid, q, tau_list, c0)
    elif functional == "D_linear":
        report = exp_scaled_divisor_functional(grid, q, tau_list, c0)
    elif functional == "zeta_log":
        report = exp_log_functional(grid, q, tau_list, use_divisor=False, c0=c0)
    elif functional == "D_log":
        report = exp_log_functional(grid, q, tau_list, use_divisor=True, c0=c0)
    elif functional == "s1":
        if sigma is None:
            est = estimate_sigma(grid, 1, tau_list, c0, s1_table, threads)
            sigma = est.sigma_hat
        report = exp_s1_functional(grid, q, 1, tau_list, sigma, c0,
                                   s1_table, threads=threads)
    else:
        raise DomainError(f"unknown functional {functional!r}")
    report.experiment_id = f"fermat_{functional}"
    report.parameter_set.update({"fr": f"({fr.x},{fr.y},{fr.z},{fr.n})"})
    gap = fr.gap_lower_bound
    last = report.rows[-1]
    resolution = last.error_scale * float(q)
    numeric_sep = abs(last.value - 1.0) > float(gap) / 2.0
    if fr.is_one:
        label = "exact equality (would contradict Fermat-Wiles)"
    elif float(gap) < resolution:
        label = "exact-only separation"
    elif numeric_sep:
        label = "exact and numeric separation"
    else:
        label = "numeric inconclusive, exact decisive"
    report.exact_verdict = {
        "q": f"{fr.numerator}/{fr.denominator}",
        "q_equals_one": fr.is_one,
        "exact_gap": f"{gap.numerator}/{gap.denominator}",
        "numeric_resolution": resolution,
        "numeric_separates": bool(numeric_sep),
        "label": label,
    }
    return report


def exp_product_identity(grid, a, fr, tau_list, c0=0.0):
    """Product identity for scaled window limits: L1 -> a, L2 -> q,
    L3 -> a*q, so L1*L2 = L3 in the limit; rows report |L1*L2 - L3|."""
    if a <= 0:
        raise DomainError(f"scale a must be positive, got {a}")
    if not isinstance(fr, FermatRational):
        fr = fermat_rational(*fr)
    q = float(Fraction(fr.numerator, fr.denominator))
    tau_list = _check_ascending(tau_list)
    report = ConvergenceReport(
        "product_identity",
        {"a": a, "fr": f"({fr.x},{fr.y},{fr.z},{fr.n})"})
    l_vals = []
    for tau in tau_list:
        l1 = scaled_zeta_value(grid, a, tau, c0)
        l2 = scaled_zeta_value(grid, q, tau, c0)
        l3 = scaled_zeta_value(grid, a * q, tau, c0)
        l_vals.append((l1, l2, l3))
        value = abs(l1 * l2 - l3)
        report.rows.append(Row(tau=tau, value=value, target=0.0,
                               deviation=value,
                               error_scale=1.0 / math.log(tau)))
    devs = [r.value for r in report.rows]
    report.verdict = ("trend_ok" if devs[-1] < devs[0] else "trend_violated")
    l1, l2, l3 = l_vals[-1]
    report.exact_verdict = {
        "equivalence_witness": bool((l2 - 1.0) * (l3 - a) > 0.0)
        if abs(l2 - 1.0) > 1e-3 and abs(l3 - a) > 1e-3 * a else None,
        "L1": l1, "L2": l2, "L3": l3,
    }
    return report


def exp_gamma_substitution(grid, x0, depth, tau_list, c0=0.0, floor=0.05):
    """Scaled divisor functional with the target routed through Euler's
    Gamma: x = Gamma(x0) (depth 1) or Gamma(Gamma(x0)) (depth 2)."""
    if x0 <= 0:
        raise DomainError(f"x0 must be positive, got {x0}")
    if depth not in (1, 2):
        raise DomainError(f"depth must be 1 or 2, got {depth}")
    x = float(gamma_fn(x0))
    if depth == 2:
        if x > 170.0:
            raise DomainError(
                f"Gamma(Gamma({x0})) overflows double precision: infeasible")
        x = float(gamma_fn(x))
    u_max = x * max(float(t) for t in tau_list) / ONE_MINUS_C
    if u_max > MAX_GRID_HEIGHT:
        raise DomainError(
            f"Gamma-substituted window start {u_max:.3g} is infeasible")
    report = exp_scaled_divisor_functional(grid, x, tau_list, c0, floor)
    report.experiment_id = "gamma_substitution"
    report.parameter_set.update({"x0": x0, "depth": depth, "x": x})
    return report
