"""Benchmark the compiled evaluation core against the pure-numpy fallback.

Run as:  python3 benchmarks/compare_backends.py [--points N]

Spawns one subprocess per backend (selection happens at import time via the
ZETALAB_PURE environment variable) and reports wall times plus the maximum
disagreement between the two engines.
"""

import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json, os, sys, time
import numpy as np
from zetalab import backend

n = int(sys.argv[1])
ts = np.linspace(1e3, 1e5, n)
t0 = time.perf_counter()
z, err = backend.z_many(ts)
z_time = time.perf_counter() - t0

queries = np.linspace(1e4, 1e7, 32).astype(np.int64)
t0 = time.perf_counter()
d = backend.divisor_prefix_at(np.sort(queries))
d_time = time.perf_counter() - t0

print(json.dumps({
    "compiled": backend.USING_COMPILED,
    "z_time": z_time,
    "d_time": d_time,
    "z_head": z[:: max(1, n // 64)].tolist(),
    "d_last": int(d[-1]),
}))
"""


def run(pure, points):
    env = dict(os.environ, ZETALAB_PURE="1" if pure else "0")
    out = subprocess.run([sys.executable, "-c", WORKER, str(points)],
                         env=env, capture_output=True, text=True, check=True)
    return json.loads(out.stdout.strip().splitlines()[-1])


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--points", type=int, default=200_000)
    args = parser.parse_args()
    compiled = run(False, args.points)
    pure = run(True, args.points)
    if not compiled["compiled"]:
        print("warning: compiled extension unavailable; both runs are pure")
    print(f"batch Z(t), {args.points} points in [1e3, 1e5]:")
    print(f"  compiled: {compiled['z_time']:8.3f} s")
    print(f"  pure:     {pure['z_time']:8.3f} s"
          f"   (x{pure['z_time'] / compiled['z_time']:.1f})")
    print("divisor prefix sums, 32 queries to 1e7:")
    print(f"  compiled: {compiled['d_time']:8.3f} s")
    print(f"  pure:     {pure['d_time']:8.3f} s"
          f"   (x{pure['d_time'] / compiled['d_time']:.1f})")
    dz = max(abs(a - b) for a, b in zip(compiled["z_head"], pure["z_head"]))
    print(f"max |Z| disagreement on sampled points: {dz:.3e}")
    assert compiled["d_last"] == pure["d_last"], "divisor engines disagree"
    print(f"divisor prefix agreement at 1e7: D = {compiled['d_last']}")


if __name__ == "__main__":
    main()
