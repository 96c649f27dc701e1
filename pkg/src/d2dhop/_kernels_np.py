"""Pure-numpy implementations of the hot kernels.

Mirror of ``_kernels_nb``; selected when numba is unavailable or when the
``D2DHOP_NO_NUMBA`` environment flag is set. Pair arrays are indexed by the
flattened upper triangle: (s, u) with s < u, s-major.
"""
from __future__ import annotations

import numpy as np


def pair_collision_counts(jtab: np.ndarray) -> np.ndarray:
    """Per resource pair, the number of frames with equal subframe values."""
    S, _ = jtab.shape
    out = np.empty(S * (S - 1) // 2, np.int64)
    pos = 0
    for s in range(S - 1):
        rows = S - s - 1
        out[pos:pos + rows] = (jtab[s + 1:] == jtab[s]).sum(axis=1)
        pos += rows
    return out


def pair_run_stats(jtab: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Per resource pair, statistics of runs of consecutive colliding frames.

    Returns (best, interior, full): longest run anywhere in the window,
    longest run bounded by non-collisions on both sides, and whether the
    pair collides in every frame of the window.
    """
    S, T = jtab.shape
    best = np.zeros(S * (S - 1) // 2, np.int64)
    interior = np.zeros_like(best)
    full = np.zeros(len(best), np.bool_)
    pos = 0
    for s in range(S - 1):
        rows = S - s - 1
        C = jtab[s + 1:] == jtab[s]
        run = np.zeros(rows, np.int64)
        b = np.zeros(rows, np.int64)
        inter = np.zeros(rows, np.int64)
        for t in range(T):
            c = C[:, t]
            ended = ~c & (run > 0)
            if ended.any():
                np.maximum(inter, np.where(ended & (run < t), run, 0), out=inter)
            run = np.where(c, run + 1, 0)
            np.maximum(b, run, out=b)
        best[pos:pos + rows] = b
        interior[pos:pos + rows] = inter
        full[pos:pos + rows] = run == T
        pos += rows
    return best, interior, full


def ideal_step(j_sf: np.ndarray, within: np.ndarray, discovered: np.ndarray) -> int:
    """Mark ordered pairs newly discovered this frame under the fixed-radius
    link rule; ``within`` must have a False diagonal. Returns the count."""
    new = within & ~discovered & (j_sf[:, None] != j_sf[None, :])
    discovered |= new
    return int(np.count_nonzero(new))


def sinr_step(i_ch: np.ndarray, j_sf: np.ndarray, gain: np.ndarray, att: float,
              m: int, n_sf: int, noise: float, thr: float,
              discovered: np.ndarray) -> int:
    """Mark ordered pairs newly discovered this frame under the SINR rule.

    ``gain[r, u]`` is the linear received power at r from u (zero diagonal);
    interference from a co-subframe transmitter on a channel d steps away is
    its gain scaled by att^d. Returns the count of new discoveries.
    """
    N = j_sf.shape[0]
    new_count = 0
    for sf in range(n_sf):
        members = np.nonzero(j_sf == sf)[0]
        if members.size == 0:
            continue
        X = np.zeros((m, N))
        np.add.at(X, i_ch[members], gain[:, members].T)
        X = X.T
        # total leakage L[r, c] = sum_c' X[r, c'] * att^|c - c'|
        L = np.empty_like(X)
        acc = np.zeros(N)
        for c in range(m):
            acc = acc * att + X[:, c]
            L[:, c] = acc
        acc = np.zeros(N)
        for c in range(m - 1, -1, -1):
            acc = acc * att + X[:, c]
            L[:, c] += acc - X[:, c]
        listening = j_sf != sf
        for u in members:
            sig = gain[:, u]
            interf = np.maximum(L[:, i_ch[u]] - sig, 0.0)
            ok = listening & ~discovered[:, u] & (sig >= thr * (noise + interf))
            ok[u] = False
            if ok.any():
                discovered[ok, u] = True
                new_count += int(np.count_nonzero(ok))
    return new_count
