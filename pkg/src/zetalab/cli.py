"""Command-line front end.

Subcommands
-----------
zeta        critical-line samples at a height or over a range
ladder      forward / reverse ladder iterates
grid        build, inspect, or benchmark the cumulative-integral cache
experiment  run one convergence experiment (or the whole suite)

Exit codes: 0 success, 1 generic failure, 2 domain error, 3 cache error,
4 trend violation in suite mode.
"""

import argparse
import os
import sys
import time
from dataclasses import dataclass

from . import arithmetic, experiments, hl_integral, ladder, zeta_critical
from .constants import T0_DEFAULT
from .errors import CacheError, DomainError, TrendViolation, ZetalabError

DEFAULT_CACHE = os.path.join(
    os.path.expanduser("~"), ".cache", "zetalab", "grid.bin")


@dataclass
class RunConfig:
    cache_path: str = DEFAULT_CACHE
    tol: float = 1e-6
    T0: float = T0_DEFAULT
    c0: float = 0.0
    thread_budget: int = 0
    output_format: str = "csv"

    def validate(self):
        if not (1e-10 <= self.tol <= 1e-3):
            raise DomainError(f"config tol {self.tol} outside [1e-10, 1e-3]")
        if self.T0 <= 0:
            raise DomainError("config T0 must be positive")
        if self.thread_budget < 0:
            raise DomainError("config thread_budget must be >= 0")
        if self.output_format not in ("csv", "json"):
            raise DomainError(
                f"config output_format must be csv or json, "
                f"got {self.output_format!r}")
        return self


def load_config(path=None):
    """RunConfig from an optional key=value file plus environment override."""
    cfg = RunConfig()
    if path:
        if not os.path.exists(path):
            raise DomainError(f"config file not found: {path}")
        with open(path) as fh:
            for line in fh:
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                if "=" not in line:
                    raise DomainError(f"bad config line: {line!r}")
                key, val = (s.strip() for s in line.split("=", 1))
                if key in ("tol", "T0", "c0"):
                    setattr(cfg, key, float(val))
                elif key == "thread_budget":
                    cfg.thread_budget = int(val)
                elif key in ("cache_path", "output_format"):
                    setattr(cfg, key, val)
                else:
                    raise DomainError(f"unknown config key: {key}")
    env_cache = os.environ.get("ZETALAB_CACHE")
    if env_cache:
        cfg.cache_path = env_cache
    return cfg.validate()


def _get_grid(cfg, t_max, allow_build=True):
    if not allow_build:
        if not os.path.exists(cfg.cache_path):
            raise CacheError(f"grid cache missing: {cfg.cache_path}")
        grid = hl_integral.ZetaGrid.load(cfg.cache_path, cfg.thread_budget)
        if grid.t_max < t_max:
            raise CacheError(
                f"cached grid covers only t <= {grid.t_max}, need {t_max} "
                "(rebuild disabled)")
        return grid
    os.makedirs(os.path.dirname(cfg.cache_path) or ".", exist_ok=True)
    return hl_integral.build_grid(t_max, cfg.tol, cfg.thread_budget,
                                  cache_path=cfg.cache_path)


def _print_samples(samples, out):
    out.write("t,z_value,modulus_sq,method,est_abs_error\n")
    for s in samples:
        out.write(f"{s.t!r},{s.z_value!r},{s.modulus_sq!r},"
                  f"{s.method},{s.est_abs_error!r}\n")


def cmd_zeta(args, cfg):
    if args.range:
        lo, hi = args.range
        n = int(round((hi - lo) / args.step))
        ts = [lo + i * args.step for i in range(n + 1)]
    else:
        ts = [args.t]
    samples = zeta_critical.modulus_sq_batch(ts, cfg.thread_budget)
    _print_samples(samples, sys.stdout)
    return 0


def cmd_ladder(args, cfg):
    need = args.T * (1.3 if args.reverse else 1.02)
    grid = _get_grid(cfg, max(need, 1000.0), allow_build=not args.no_build)
    if args.reverse:
        tab = ladder.reverse_iterate(grid, args.T, args.reverse, cfg.c0,
                                     auto_extend=not args.no_build)
        print("j,T_hat")
        for j, v in enumerate(tab.reverse):
            print(f"{j},{v!r}")
    else:
        tab = ladder.forward_iterate(grid, args.T, args.forward, cfg.c0)
        print("k,phi1_k")
        for k, v in enumerate(tab.forward):
            print(f"{k},{v!r}")
    return 0


def _parse_taus(text):
    return [float(s) for s in text.split(",") if s]


def _parse_fr(text):
    parts = [int(s) for s in text.split(",")]
    if len(parts) != 4:
        raise DomainError("--fr expects x,y,z,n")
    return arithmetic.fermat_rational(*parts)


_EXPERIMENTS = {}


def _experiment(name):
    def register(fn):
        _EXPERIMENTS[name] = fn
        return fn
    return register


@_experiment("linear")
def _run_linear(grid, args, cfg):
    return experiments.exp_linear_increment(
        grid, _parse_taus(args.tau), args.r, cfg.c0)


@_experiment("lemma1")
def _run_lemma1(grid, args, cfg):
    return experiments.exp_divisor_increment(
        grid, _parse_taus(args.tau), args.r, cfg.c0)


@_experiment("lemma2")
def _run_lemma2(grid, args, cfg):
    return experiments.exp_scaled_zeta_functional(
        grid, args.x, _parse_taus(args.tau), cfg.c0)


@_experiment("lemma3")
def _run_lemma3(grid, args, cfg):
    return experiments.exp_scaled_divisor_functional(
        grid, args.x, _parse_taus(args.tau), cfg.c0)


@_experiment("theorem2")
def _run_theorem2(grid, args, cfg):
    return experiments.exp_log_functional(
        grid, args.x, _parse_taus(args.tau), use_divisor=True, c0=cfg.c0)


@_experiment("lemma6")
def _run_lemma6(grid, args, cfg):
    taus = _parse_taus(args.tau)
    sigma = args.sigma
    if sigma is None:
        sigma = experiments.estimate_sigma(grid, args.l, taus,
                                           cfg.c0).sigma_hat
    return experiments.exp_s1_functional(
        grid, args.x, args.l, taus, sigma, cfg.c0,
        threads=cfg.thread_budget)


@_experiment("theorem1")
def _run_theorem1(grid, args, cfg):
    return experiments.fermat_condition_check(
        grid, _parse_fr(args.fr), _parse_taus(args.tau), "D_linear", cfg.c0)


@_experiment("theorem3")
def _run_theorem3(grid, args, cfg):
    return experiments.fermat_condition_check(
        grid, _parse_fr(args.fr), _parse_taus(args.tau), "s1", cfg.c0,
        sigma=args.sigma, threads=cfg.thread_budget)


@_experiment("product")
def _run_product(grid, args, cfg):
    return experiments.exp_product_identity(
        grid, args.a, _parse_fr(args.fr), _parse_taus(args.tau), cfg.c0)


@_experiment("gamma")
def _run_gamma(grid, args, cfg):
    return experiments.exp_gamma_substitution(
        grid, args.x, args.depth, _parse_taus(args.tau), cfg.c0)


def _emit(report, cfg, out_path):
    if cfg.output_format == "json":
        if out_path:
            report.to_json(out_path)
        else:
            sys.stdout.write(report.to_json())
    else:
        path = out_path or f"{report.experiment_id}.csv"
        report.to_csv(path)
        print(f"wrote {path} (verdict: {report.verdict})")


def cmd_experiment(args, cfg):
    if args.id == "all":
        taus = "1000,3000,10000" if args.quick else "1000,10000,100000"
        args.tau = args.tau or taus
        worst = 0
        u_max = 2.0 * max(_parse_taus(args.tau)) / 0.42
        grid = _get_grid(cfg, u_max * 1.1, allow_build=not args.no_build)
        for name in ("linear", "lemma1", "lemma2", "lemma3", "theorem1",
                     "product"):
            sub = argparse.Namespace(**vars(args))
            sub.x = sub.x if sub.x is not None else 1.0
            sub.fr = sub.fr or "1,1,1,3"
            rep = _EXPERIMENTS[name](grid, sub, cfg)
            print(f"{name}: verdict={rep.verdict}")
            if rep.verdict == "trend_violated":
                worst = 4
        if worst:
            raise TrendViolation("at least one experiment reported "
                                 "trend_violated")
        return 0
    if args.id not in _EXPERIMENTS:
        raise DomainError(
            f"unknown experiment {args.id!r}; choose from "
            f"{sorted(_EXPERIMENTS)} or 'all'")
    if not args.tau:
        raise DomainError("--tau schedule is required (comma list)")
    taus = _parse_taus(args.tau)
    x_scale = args.x if args.x is not None else 1.0
    if args.fr:
        fr = _parse_fr(args.fr)
        x_scale = max(x_scale, float(fr.q))
    u_max = max(2.0, x_scale) * max(taus) / 0.42
    grid = _get_grid(cfg, min(u_max * 1.1, 5.0e6),
                     allow_build=not args.no_build)
    if args.x is None:
        args.x = 1.0
    report = _EXPERIMENTS[args.id](grid, args, cfg)
    _emit(report, cfg, args.out)
    return 0


def cmd_grid(args, cfg):
    if args.info:
        grid = _get_grid(cfg, 100.0, allow_build=False)
        print(f"cache: {cfg.cache_path}")
        print(f"t_max: {grid.t_max}")
        print(f"tol: {grid.tol}")
        print(f"nodes: {grid.ts.size}")
        print(f"J(t_max): {float(grid.cumulative[-1])!r}")
        return 0
    if args.bench:
        import numpy as np
        ts = np.linspace(1e3, 1e5, args.bench)
        for label, env in (("compiled", "0"), ("pure", "1")):
            os.environ["ZETALAB_PURE"] = env
            t0 = time.time()
            code = os.system(
                f"{sys.executable} -c \"import numpy as np; "
                f"from zetalab import backend; "
                f"backend.z_many(np.linspace(1e3, 1e5, {args.bench}))\"")
            print(f"{label}: {time.time() - t0:.2f} s (exit {code})")
        os.environ.pop("ZETALAB_PURE", None)
        return 0
    grid = _get_grid(cfg, args.t_max, allow_build=not args.no_build)
    print(f"grid ready: t_max={grid.t_max}, nodes={grid.ts.size}, "
          f"tol={grid.tol}")
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="zetalab",
        description="numerical laboratory for critical-line integrals, "
                    "Jacob's ladders, and divisor asymptotics")
    parser.add_argument("--config", help="key=value config file")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("zeta", help="critical-line samples")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--t", type=float, help="single height")
    g.add_argument("--range", type=float, nargs=2, metavar=("LO", "HI"))
    p.add_argument("--step", type=float, default=0.1)
    p.set_defaults(fn=cmd_zeta)

    p = sub.add_parser("ladder", help="ladder iterates")
    p.add_argument("--T", type=float, required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--reverse", type=int, metavar="R")
    g.add_argument("--forward", type=int, metavar="K")
    p.add_argument("--no-build", action="store_true",
                   help="fail instead of building a missing grid cache")
    p.set_defaults(fn=cmd_ladder)

    p = sub.add_parser("grid", help="grid cache management")
    p.add_argument("--t-max", type=float, default=1e4)
    p.add_argument("--info", action="store_true")
    p.add_argument("--bench", type=int, metavar="N",
                   help="benchmark N batched samples, compiled vs pure")
    p.add_argument("--no-build", action="store_true")
    p.set_defaults(fn=cmd_grid)

    p = sub.add_parser("experiment", help="convergence experiments")
    p.add_argument("id", help="experiment name or 'all'")
    p.add_argument("--tau", help="comma-separated ascending tau schedule")
    p.add_argument("--x", type=float, default=None)
    p.add_argument("--a", type=float, default=2.0)
    p.add_argument("--l", type=int, default=1)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--depth", type=int, default=1)
    p.add_argument("--sigma", type=float, default=None)
    p.add_argument("--fr", help="Fermat rational as x,y,z,n")
    p.add_argument("--out", help="output file path")
    p.add_argument("--quick", action="store_true")
    p.add_argument("--no-build", action="store_true")
    p.set_defaults(fn=cmd_experiment)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = load_config(args.config)
        return args.fn(args, cfg)
    except TrendViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except CacheError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ZetalabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
