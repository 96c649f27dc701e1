"""Benchmark the numba kernels against the pure-numpy fallbacks.

Run: python3 benchmarks/bench_kernels.py [--pairs-frames N] [--runs N]
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from d2dhop import gf, patterns, sim
from d2dhop import _kernels_nb, _kernels_np


def _time(fn, runs: int) -> float:
    best = float("inf")
    for _ in range(runs):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best * 1000.0


def bench_pair_kernels(runs: int) -> None:
    f = gf.parse_poly("x^2+3x+6", 11)
    spec = patterns.new_pattern(44, 11, f)
    jt = patterns.j_table(spec, 242)  # two periods, 484 resources

    for name, nb_fn, np_fn in [
        ("pair_collision_counts", _kernels_nb.pair_collision_counts,
         _kernels_np.pair_collision_counts),
        ("pair_run_stats", _kernels_nb.pair_run_stats, _kernels_np.pair_run_stats),
    ]:
        nb_fn(jt)  # compile
        t_nb = _time(lambda: nb_fn(jt), runs)
        t_np = _time(lambda: np_fn(jt), runs)
        print(f"{name:22s} numba {t_nb:8.2f} ms   numpy {t_np:8.2f} ms   "
              f"speedup {t_np / t_nb:5.1f}x")


def bench_sim_step(runs: int) -> None:
    f = gf.parse_poly("x^2+3x+6", 11)
    spec = patterns.new_pattern(44, 11, f)
    cfg = sim.SimConfig(pattern=spec, cells=21, ues_per_cell=23, frames=150,
                        seed=2026, mode="ideal", ideal_radius_m=750.0)
    ues = sim.drop_ues(cfg)
    res = np.array([ue.resource for ue in ues])
    j_all = patterns.j_table(spec, cfg.frames)[res]
    dist = np.hypot(*(np.array([(u.x, u.y) for u in ues]).T[:, :, None]
                      - np.array([(u.x, u.y) for u in ues]).T[:, None, :]))
    within = dist <= cfg.ideal_radius_m
    np.fill_diagonal(within, False)

    def full_run(step):
        discovered = np.zeros((len(ues), len(ues)), np.bool_)
        for t in range(cfg.frames):
            step(np.ascontiguousarray(j_all[:, t]), within, discovered)

    full_run(_kernels_nb.ideal_step)  # compile
    t_nb = _time(lambda: full_run(_kernels_nb.ideal_step), runs)
    t_np = _time(lambda: full_run(_kernels_np.ideal_step), runs)
    print(f"{'ideal_step (150 frames)':22s} numba {t_nb:8.2f} ms   numpy {t_np:8.2f} ms   "
          f"speedup {t_np / t_nb:5.1f}x")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--runs", type=int, default=5)
    args = parser.parse_args()
    print("hot kernels, 484 resources / 483 UEs")
    bench_pair_kernels(args.runs)
    bench_sim_step(args.runs)


if __name__ == "__main__":
    main()
