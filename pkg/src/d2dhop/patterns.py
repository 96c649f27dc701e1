"""The three hopping patterns over a discovery frame structure.

A discovery frame is an m x n grid (m frequency channels, n subframes); each
of the m*n logical resources s is mapped per frame t to a coordinate
(i(t)(s), j(t)(s)). Three pattern kinds:

* ``random``: i.i.d. uniform cells from a counter-based hash of (seed, s, t),
  so any (s, t) can be evaluated independently and in any order.
* ``qc``: i(t) = i0 + k*t mod m, j(t) = j0 + (i0 mod n)*t + (i0 // n)*t^2
  mod n (the quadratic-congruence baseline).
* ``new``: i(t) = i0 + k*t mod m, j(t) = j0 + <digits_n(i0), b(t)> mod n for
  prime n, where b(t) is the companion-matrix vector sequence of a
  full-order polynomial of degree r = ceil_log(n, m).

Scalar evaluation (coords) and the vectorized tables (i_table/j_table) are
guaranteed to agree.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from . import rng
from .gf import FpPoly, is_prime, minimal_r
from .linalg import FpVec, b_period_table, b_sequence

RANDOM = "random"
QC = "qc"
NEW = "new"
KINDS = (RANDOM, QC, NEW)


class Coord(NamedTuple):
    i: int
    j: int


@dataclass(frozen=True)
class FrameStructure:
    """m frequency channels x n subframes; m*n logical resources."""

    m: int
    n: int

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError(f"frame must have m, n >= 1, got {self.m}x{self.n}")

    @property
    def resources(self) -> int:
        return self.m * self.n


def default_init(frame: FrameStructure) -> tuple[int, ...]:
    """Row-major initial map: s -> (s // n, s % n), as flat codes i*n + j."""
    return tuple(range(frame.resources))


def digits(i0: int, p: int, r: int) -> tuple[int, ...]:
    """Base-p digits of i0, least significant first, exactly r entries."""
    if not 0 <= i0 < p**r:
        raise ValueError(f"value {i0} out of range [0, {p**r})")
    out = []
    for _ in range(r):
        out.append(i0 % p)
        i0 //= p
    return tuple(out)


@dataclass(frozen=True)
class PatternSpec:
    """Validated description of one hopping pattern.

    ``init`` is the initial bijection s -> (i(0), j(0)) stored as a
    permutation of flat codes i*n + j; None selects the row-major default.
    The random kind ignores it.
    """

    frame: FrameStructure
    kind: str
    k: int = 0
    seed: int = 0
    f: FpPoly | None = None
    b: FpVec | None = None
    init: tuple[int, ...] | None = field(default=None)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown pattern kind {self.kind!r}")
        m, n = self.frame.m, self.frame.n
        init = self.init if self.init is not None else default_init(self.frame)
        init = tuple(int(c) for c in init)
        if sorted(init) != list(range(m * n)):
            raise ValueError("init must be a permutation of the frame cells")
        object.__setattr__(self, "init", init)

        if self.kind == RANDOM:
            if m * n >= rng.MAX_CELLS:
                raise ValueError(f"random pattern supports m*n < {rng.MAX_CELLS}")
        elif self.kind == NEW:
            if not is_prime(n):
                raise ValueError(f"new pattern needs a prime subframe count, got n={n}")
            if m < 2:
                raise ValueError("new pattern needs m >= 2")
            r = minimal_r(n, m)
            if self.f is None:
                raise ValueError("new pattern needs a polynomial f")
            if self.f.p != n:
                raise ValueError(f"f is over GF({self.f.p}), frame has n={n}")
            if not self.f.is_monic or self.f.degree != r:
                raise ValueError(f"f must be monic of degree {r}, got {self.f}")
            b = self.b if self.b is not None else FpVec(n, (1,) + (0,) * (r - 1))
            object.__setattr__(self, "b", b)
            # full validation (nonzero b, generator f) happens here
            b_sequence(self.f, b, 0)

    def init_coord(self, s: int) -> Coord:
        """Initial coordinate (i(0), j(0)) of resource s (qc/new kinds)."""
        code = self.init[s]
        return Coord(code // self.frame.n, code % self.frame.n)


def random_pattern(m: int, n: int, seed: int) -> PatternSpec:
    return PatternSpec(FrameStructure(m, n), RANDOM, seed=seed)


def qc_pattern(m: int, n: int, k: int = 0, init: tuple[int, ...] | None = None) -> PatternSpec:
    return PatternSpec(FrameStructure(m, n), QC, k=k, init=init)


def new_pattern(m: int, n: int, f: FpPoly, k: int = 0, b: FpVec | None = None,
                init: tuple[int, ...] | None = None) -> PatternSpec:
    return PatternSpec(FrameStructure(m, n), NEW, k=k, f=f, b=b, init=init)


def value_period(spec: PatternSpec) -> int:
    """Exact period of the coordinate functions in t (deterministic kinds)."""
    if spec.kind == QC:
        # both j (mod n polynomial in t) and the i shift repeat within n*m;
        # the j values alone repeat every n
        return spec.frame.n
    if spec.kind == NEW:
        return spec.frame.n ** spec.f.degree
    raise ValueError("random pattern has no value period")


def coords(spec: PatternSpec, s: int, t: int) -> Coord:
    """Coordinate of resource s in frame t."""
    m, n = spec.frame.m, spec.frame.n
    if not 0 <= s < m * n:
        raise ValueError(f"resource {s} out of range [0, {m * n})")
    if spec.kind == RANDOM:
        if t < 0:
            raise ValueError("random pattern is defined for t >= 0")
        cell = rng.cell_from_u64(rng.rand_u64(spec.seed & rng.MASK64, s, t), m * n)
        return Coord(cell // n, cell % n)
    i0, j0 = spec.init_coord(s)
    i = (i0 + spec.k * t) % m
    if spec.kind == QC:
        j = (j0 + (i0 % n) * t + (i0 // n) * t * t) % n
    else:
        bt = b_sequence(spec.f, spec.b, t)
        d = digits(i0, n, spec.f.degree)
        j = (j0 + sum(c * v for c, v in zip(d, bt.entries))) % n
    return Coord(i, j)


def _init_arrays(spec: PatternSpec) -> tuple[np.ndarray, np.ndarray]:
    codes = np.array(spec.init, dtype=np.int64)
    return codes // spec.frame.n, codes % spec.frame.n


def _digit_matrix(m: int, p: int, r: int) -> np.ndarray:
    i0 = np.arange(m, dtype=np.int64)[:, None]
    powers = p ** np.arange(r, dtype=np.int64)[None, :]
    return (i0 // powers) % p


def ij_tables(spec: PatternSpec, frames: int, t0: int = 0) -> tuple[np.ndarray, np.ndarray]:
    """Arrays (i, j) of shape (m*n, frames) for t = t0 .. t0+frames-1."""
    if frames < 0:
        raise ValueError("frames must be >= 0")
    m, n = spec.frame.m, spec.frame.n
    t = np.arange(t0, t0 + frames, dtype=np.int64)[None, :]
    if spec.kind == RANDOM:
        if t0 < 0:
            raise ValueError("random pattern is defined for t >= 0")
        s = np.arange(m * n, dtype=np.int64)[:, None]
        draws = rng.rand_u64_array(spec.seed, np.broadcast_to(s, (m * n, frames)),
                                   np.broadcast_to(t, (m * n, frames)))
        cell = rng.cell_from_u64_array(draws, m * n)
        return (cell // n).astype(np.int16), (cell % n).astype(np.int16)
    i0, j0 = _init_arrays(spec)
    i = (i0[:, None] + spec.k * t) % m
    if spec.kind == QC:
        j = (j0[:, None] + (i0 % n)[:, None] * t + (i0 // n)[:, None] * t * t) % n
    else:
        r = spec.f.degree
        table = b_period_table(spec.f, spec.b)
        bt = np.array([v.entries for v in table], dtype=np.int64)  # (n^r, r)
        inc = _digit_matrix(m, n, r) @ bt.T % n                    # (m, n^r)
        j = (j0[:, None] + inc[i0][:, np.mod(t[0], n**r)]) % n
    return i.astype(np.int16), j.astype(np.int16)


def j_table(spec: PatternSpec, frames: int, t0: int = 0) -> np.ndarray:
    """Subframe coordinates j, shape (m*n, frames)."""
    return ij_tables(spec, frames, t0)[1]


def i_table(spec: PatternSpec, frames: int, t0: int = 0) -> np.ndarray:
    """Channel coordinates i, shape (m*n, frames)."""
    return ij_tables(spec, frames, t0)[0]


def partition_labels(jcol: np.ndarray) -> np.ndarray:
    """Canonical labels of the partition induced by equal j values: groups
    are numbered by first appearance, so two columns induce the same
    partition of resources iff their label arrays are equal."""
    _, first, inverse = np.unique(jcol, return_index=True, return_inverse=True)
    order = np.argsort(first, kind="stable")
    rank = np.empty_like(order)
    rank[order] = np.arange(len(order))
    return rank[inverse].astype(np.int32)


def collision_partition(spec: PatternSpec, t: int) -> tuple[tuple[int, ...], ...]:
    """Resources grouped by their subframe at frame t, in canonical order
    (each group sorted, groups sorted by first member)."""
    jcol = j_table(spec, 1, t0=t)[:, 0]
    groups: dict[int, list[int]] = {}
    for s, j in enumerate(jcol.tolist()):
        groups.setdefault(j, []).append(s)
    return tuple(sorted(tuple(g) for g in groups.values()))
