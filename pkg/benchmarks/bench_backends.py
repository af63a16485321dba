"""Throughput comparison of the compiled kernel core vs the pure-Python
fallback, plus a bitwise-equality audit of every kernel entry point.

Usage: python benchmarks/bench_backends.py [--quick]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from affinelab import _kernels as pure

try:
    from affinelab import _kernels_cy as compiled
    HAVE_COMPILED = bool(getattr(compiled, "IS_COMPILED", False))
except ImportError:
    compiled = None
    HAVE_COMPILED = False


def timeit(fn, *args, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_case(name, runner, work_units, quick):
    scale = 0.1 if quick else 1.0
    units = max(1, int(work_units * scale))
    rows = []
    for label, mod in (("compiled", compiled), ("pure-python", pure)):
        if mod is None:
            continue
        # pure python is orders of magnitude slower; shrink its workload
        n = units if label == "compiled" else max(1, units // 200)
        dt = timeit(runner, mod, n)
        rows.append((label, n, dt, dt / n))
    print(f"\n{name}")
    for label, n, dt, per in rows:
        print(f"  {label:>12}: {n:>9} units in {dt:8.3f} s "
              f"({per * 1e6:10.2f} us/unit)")
    if len(rows) == 2 and rows[1][3] > 0:
        print(f"  {'speedup':>12}: {rows[1][3] / rows[0][3]:10.1f} x")


def run_limit(mod, n):
    out = np.empty(5)
    for r in range(n):
        mod.fill_limit_functionals(out, 42, r, 2.0, 3.0, 1024)


def run_obs(mod, n):
    out = np.empty(251)
    for r in range(n):
        mod.fill_observations(out, 42, r, 1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 8, False)


def run_cbi(mod, n):
    out = np.empty(513)
    vals = np.array([1.0])
    cum = np.array([1.0])
    for r in range(n):
        mod.fill_cbi_path(out, 42, r, 0.0, 0.0, 0.0, 1.0, vals, cum,
                          1.0, vals, cum, 1.0, 0.0, 1.0 / 32)


def run_generator(mod, n):
    mod.generator_step_sums(42, 0, n, 2, 1.0, 0.0, 2.0, 0.0, 1.0, 0.0, 0.02,
                            False)


def audit_bitwise():
    print("bitwise equality audit (compiled vs pure):")
    checks = []
    a = np.empty(4096)
    b = np.empty(4096)
    for fill, args in (("fill_uniforms", ()), ("fill_normals", ()),
                       ("fill_gammas", (0.4,)), ("fill_gammas", (40.0,)),
                       ("fill_poissons", (3.0,)), ("fill_poissons", (800.0,))):
        getattr(compiled, fill)(a, 7, 1, *args)
        getattr(pure, fill)(b, 7, 1, *args)
        checks.append((f"{fill}{args}", np.array_equal(a, b)))
    y1, x1 = np.empty(129), np.empty(129)
    y2, x2 = np.empty(129), np.empty(129)
    compiled.fill_joint_path(y1, x1, 7, 2, 1.2, 0.3, -0.5, 0.8, 0.6, -1.0,
                             1.0 / 128, True)
    pure.fill_joint_path(y2, x2, 7, 2, 1.2, 0.3, -0.5, 0.8, 0.6, -1.0,
                         1.0 / 128, True)
    checks.append(("fill_joint_path", np.array_equal(y1, y2) and np.array_equal(x1, x2)))
    f1, f2 = np.empty(5), np.empty(5)
    compiled.fill_limit_functionals(f1, 7, 3, 2.0, 3.0, 512)
    pure.fill_limit_functionals(f2, 7, 3, 2.0, 3.0, 512)
    checks.append(("fill_limit_functionals", np.array_equal(f1, f2)))
    for name, ok in checks:
        print(f"  {name:>28}: {'identical' if ok else 'MISMATCH'}")
    if not all(ok for _, ok in checks):
        raise SystemExit("backend outputs differ")


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--quick", action="store_true",
                        help="scale workloads down by 10x")
    args = parser.parse_args()
    print(f"compiled backend available: {HAVE_COMPILED}")
    if HAVE_COMPILED:
        audit_bitwise()
    bench_case("limit functionals (1024-step path + reductions)", run_limit,
               2000, args.quick)
    bench_case("observation series (n=250, 8 steps/unit)", run_obs,
               2000, args.quick)
    bench_case("jump-CBI path (512 steps, unit jumps)", run_cbi,
               2000, args.quick)
    bench_case("generator one-step batch (per path)", run_generator,
               2_000_000, args.quick)


if __name__ == "__main__":
    main()
