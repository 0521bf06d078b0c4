"""Pure-Python reference kernels, used when the compiled extension is
unavailable. Semantics must match ``_ckernels`` exactly."""

from __future__ import annotations

import numpy as np


def offset_decay(offset: np.ndarray, steps: np.ndarray) -> np.ndarray:
    """Per-frame offsets to subtract after an edit boundary.

    ``offset`` is the 3-vector boundary gap, ``steps`` the original per-frame
    displacements after the boundary. Each axis of the offset shrinks only
    when the original motion opposes it, clipping at zero instead of
    changing sign. Returns the offset in effect at each tail frame.
    """
    o = np.array(offset, dtype=np.float64)
    out = np.empty_like(steps, dtype=np.float64)
    for f in range(steps.shape[0]):
        out[f] = o
        for a in range(3):
            d = steps[f, a]
            if _sign(d) == -_sign(o[a]):
                u = o[a] + d
                o[a] = 0.0 if _sign(u) != _sign(o[a]) else u
    return out


def _sign(x: float) -> int:
    return int(x > 0) - int(x < 0)


def dtw_accumulate(dist: np.ndarray) -> float:
    """Accumulated cost of the classic dynamic-time-warping recursion over a
    pairwise distance matrix (steps: match, insert, delete; no band)."""
    n, m = dist.shape
    prev = np.empty(m)
    cur = np.empty(m)
    prev[0] = dist[0, 0]
    for j in range(1, m):
        prev[j] = prev[j - 1] + dist[0, j]
    for i in range(1, n):
        cur[0] = prev[0] + dist[i, 0]
        for j in range(1, m):
            cur[j] = dist[i, j] + min(prev[j], cur[j - 1], prev[j - 1])
        prev, cur = cur, prev
    return float(prev[m - 1])
