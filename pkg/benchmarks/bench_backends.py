#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallback.

Runs each hot kernel on a representative workload with both backends and
prints the timings side by side.  The numba numbers exclude JIT compilation
(one warmup call per kernel).

    python benchmarks/bench_backends.py [--repeat N]

Workloads:
  * opoly_scan       GF(4096): the O(q^2) shift sweep
  * collinear_scan   GF(128):  the O(q^3) no-three-collinear check
  * interp_scan      GF(4096): full-domain interpolation
  * eval_terms_scan  GF(4096): 8-term sparse polynomial over the whole field
  * linear_power_sweep GF(343): the exhaustive cubic-family parameter scan
  * perm_scan        GF(2^20) random table
"""

import argparse
import time

import numpy as np

from gfperm import _kernels_numba as knb
from gfperm import _kernels_numpy as knp
from gfperm.field import build_field, extend_cubic


def timer(fn, args, repeat):
    fn(*args)  # warmup (JIT compile / cache load)
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def workloads():
    out = []

    gf4096 = build_field(2, 12)
    expt, logt = gf4096.exp_log_np()
    invt = gf4096.inv0_table()
    sq = gf4096.pow_table(2).copy()
    out.append(("opoly_scan gf4096", "opoly_scan", (sq, expt, logt, invt)))

    gf128 = build_field(2, 7)
    e7, l7 = gf128.exp_log_np()
    pts = [(1, t, gf128.pow_int(t, 2)) for t in range(128)]
    pts += [(0, 1, 0), (0, 0, 1)]
    px, py, pz = (np.array([p[i] for p in pts], dtype=np.int64)
                  for i in range(3))
    out.append(("collinear_scan gf128", "collinear_scan", (px, py, pz, e7, l7)))

    rnd = np.random.default_rng(1)
    vals = rnd.permutation(4096).astype(np.int64)
    out.append(("interp_scan gf4096", "interp_scan", (vals, expt, logt, 2, 12)))

    exps = np.array([1, 2, 5, 6, 100, 500, 1000, 4094], dtype=np.int64)
    cofs = np.array([1, 3, 7, 9, 11, 13, 17, 19], dtype=np.int64)
    out.append(("eval_terms_scan gf4096", "eval_terms_scan",
                (exps, cofs, expt, logt, 2, 12, 4096)))

    gf7 = build_field(7, 1)
    ext = extend_cubic(gf7)
    ee, le = ext.exp_log_np()
    z = np.arange(343, dtype=np.int64)
    addt = ext.add_vec(z[:, None], z[None, :])
    zq = ext.pow_table(7).copy()
    zq2 = ext.pow_table(49).copy()
    S = addt[addt[z, zq], zq2]
    elems = np.arange(7, dtype=np.int64)
    uext = np.array([0, 1], dtype=np.int64)
    tlist = np.arange(1, 9, dtype=np.int64)
    out.append(("linear_power_sweep gf343", "linear_power_sweep",
                (S, zq, zq2, elems, elems, elems, uext, tlist, ee, le, addt)))

    big = np.random.default_rng(2).permutation(1 << 20).astype(np.int64)
    out.append(("perm_scan 2^20", "perm_scan", (big,)))
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    print(f"{'workload':<28} {'numpy':>10} {'numba':>10} {'speedup':>8}")
    for label, fn_name, fargs in workloads():
        t_np = timer(getattr(knp, fn_name), fargs, args.repeat)
        t_nb = timer(getattr(knb, fn_name), fargs, args.repeat)
        print(f"{label:<28} {t_np * 1e3:>8.2f}ms {t_nb * 1e3:>8.2f}ms "
              f"{t_np / t_nb:>7.1f}x")


if __name__ == "__main__":
    main()
