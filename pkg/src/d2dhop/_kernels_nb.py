"""Numba implementations of the hot kernels (see ``_kernels_np`` for the
reference semantics; the two must agree on every input)."""
from __future__ import annotations

import numba as nb
import numpy as np


@nb.njit(cache=True)
def pair_collision_counts(jtab):
    S, T = jtab.shape
    out = np.empty(S * (S - 1) // 2, np.int64)
    idx = 0
    for s in range(S - 1):
        for u in range(s + 1, S):
            c = 0
            for t in range(T):
                if jtab[s, t] == jtab[u, t]:
                    c += 1
            out[idx] = c
            idx += 1
    return out


@nb.njit(cache=True)
def pair_run_stats(jtab):
    S, T = jtab.shape
    P = S * (S - 1) // 2
    best = np.zeros(P, np.int64)
    interior = np.zeros(P, np.int64)
    full = np.zeros(P, np.bool_)
    idx = 0
    for s in range(S - 1):
        for u in range(s + 1, S):
            run = 0
            b = 0
            inter = 0
            for t in range(T):
                if jtab[s, t] == jtab[u, t]:
                    run += 1
                    if run > b:
                        b = run
                else:
                    if 0 < run < t and run > inter:
                        inter = run
                    run = 0
            best[idx] = b
            interior[idx] = inter
            full[idx] = run == T
            idx += 1
    return best, interior, full


@nb.njit(cache=True)
def ideal_step(j_sf, within, discovered):
    N = j_sf.shape[0]
    count = 0
    for r in range(N):
        jr = j_sf[r]
        for u in range(N):
            if within[r, u] and not discovered[r, u] and j_sf[u] != jr:
                discovered[r, u] = True
                count += 1
    return count


@nb.njit(cache=True)
def sinr_step(i_ch, j_sf, gain, att, m, n_sf, noise, thr, discovered):
    N = j_sf.shape[0]
    new_count = 0
    X = np.empty((N, m))
    L = np.empty((N, m))
    members = np.empty(N, np.int64)
    for sf in range(n_sf):
        count = 0
        for u in range(N):
            if j_sf[u] == sf:
                members[count] = u
                count += 1
        if count == 0:
            continue
        for r in range(N):
            for c in range(m):
                X[r, c] = 0.0
        for mi in range(count):
            u = members[mi]
            c = i_ch[u]
            for r in range(N):
                X[r, c] += gain[r, u]
        for r in range(N):
            acc = 0.0
            for c in range(m):
                acc = acc * att + X[r, c]
                L[r, c] = acc
            acc = 0.0
            for c in range(m - 1, -1, -1):
                acc = acc * att + X[r, c]
                L[r, c] += acc - X[r, c]
        for mi in range(count):
            u = members[mi]
            cu = i_ch[u]
            for r in range(N):
                if r == u or j_sf[r] == sf or discovered[r, u]:
                    continue
                sig = gain[r, u]
                interf = L[r, cu] - sig
                if interf < 0.0:
                    interf = 0.0
                if sig >= thr * (noise + interf):
                    discovered[r, u] = True
                    new_count += 1
    return new_count
