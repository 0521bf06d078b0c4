"""Benchmark the compiled kernels against the pure-Python fallback.

Usage: python3 scripts/bench_kernels.py [--repeats N]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from motionsimp import _kernels
from motionsimp._kernels import _fallback


def _time(fn, *args, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    if not _kernels.COMPILED:
        print("compiled extension unavailable; nothing to compare")
        return 1

    from motionsimp._kernels import _ckernels

    rng = np.random.default_rng(0)
    rows = []

    offset = rng.normal(size=3)
    steps = rng.normal(scale=0.05, size=(5000, 3))
    rows.append((
        "offset_decay (5000 frames)",
        _time(_ckernels.offset_decay, offset, steps, repeats=args.repeats),
        _time(_fallback.offset_decay, offset, steps, repeats=args.repeats),
    ))

    for n in (100, 300):
        dist = np.abs(rng.normal(size=(n, n)))
        rows.append((
            f"dtw_accumulate ({n}x{n})",
            _time(_ckernels.dtw_accumulate, dist, repeats=args.repeats),
            _time(_fallback.dtw_accumulate, dist, repeats=args.repeats),
        ))

    print(f"{'kernel':30s} {'compiled':>12s} {'fallback':>12s} {'speedup':>9s}")
    for name, fast, slow in rows:
        print(f"{name:30s} {fast * 1e3:10.3f}ms {slow * 1e3:10.3f}ms {slow / fast:8.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
