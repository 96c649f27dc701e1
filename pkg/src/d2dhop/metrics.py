"""Pattern quality metrics: column period, maximal collision ratio, maximal
continual collision number.

Deterministic patterns (qc/new) are measured exactly over their value
period; the random pattern gets empirical estimates over a finite window.
Counts that cannot be pinned down are reported as INFINITE (provably
unbounded) or EXCEEDS_CAP (the search hit its budget).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from . import accel
from .gf import ceil_log
from .patterns import RANDOM, PatternSpec, j_table, partition_labels, value_period

FINITE = "finite"
INFINITE = "infinite"
EXCEEDS_CAP = "exceeds_cap"


@dataclass(frozen=True)
class ExtendedCount:
    """A count that may be a finite integer, infinite, or capped.

    ``value`` holds the count when finite and the search budget when the
    kind is EXCEEDS_CAP.
    """

    kind: str
    value: int = 0

    def __post_init__(self):
        if self.kind not in (FINITE, INFINITE, EXCEEDS_CAP):
            raise ValueError(f"bad ExtendedCount kind {self.kind!r}")
        if self.kind == FINITE and self.value < 0:
            raise ValueError("finite count must be >= 0")

    @classmethod
    def finite(cls, value: int) -> ExtendedCount:
        return cls(FINITE, value)

    @classmethod
    def infinite(cls) -> ExtendedCount:
        return cls(INFINITE)

    @classmethod
    def exceeds_cap(cls, cap: int) -> ExtendedCount:
        return cls(EXCEEDS_CAP, cap)

    @property
    def is_finite(self) -> bool:
        return self.kind == FINITE

    def __str__(self) -> str:
        if self.kind == FINITE:
            return str(self.value)
        if self.kind == INFINITE:
            return "inf"
        return f"cap:{self.value}"


def parse_extended_count(text: str) -> ExtendedCount:
    text = text.strip()
    if text == "inf":
        return ExtendedCount.infinite()
    if text.startswith("cap:"):
        return ExtendedCount.exceeds_cap(int(text[4:]))
    return ExtendedCount.finite(int(text))


class EmpiricalRatio(NamedTuple):
    ratio: Fraction
    horizon: int
    offenders: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class MetricsReport:
    """The three metrics plus the arg-max resource pairs for diagnostics.

    ``ratio_horizon`` is None when the collision ratio is exact over a full
    period, else the empirical window length t_b.
    """

    kind: str
    m: int
    n: int
    column_period: ExtendedCount
    max_collision_ratio: Fraction
    ratio_horizon: int | None
    max_continual_collision: ExtendedCount
    ratio_offenders: tuple[tuple[int, int], ...]
    continual_offenders: tuple[tuple[int, int], ...]


def _pair_index_arrays(S: int) -> tuple[np.ndarray, np.ndarray]:
    return np.triu_indices(S, k=1)


def _offender_pairs(flags: np.ndarray, S: int) -> tuple[tuple[int, int], ...]:
    rows, cols = _pair_index_arrays(S)
    hit = np.nonzero(flags)[0]
    return tuple((int(rows[k]), int(cols[k])) for k in hit)


def _require_pairs(spec: PatternSpec) -> int:
    S = spec.frame.resources
    if S < 2:
        raise ValueError("pairwise metrics need at least 2 resources")
    return S


def _verified_value_period(spec: PatternSpec) -> int:
    """Value period of j for deterministic kinds, asserted on actual data."""
    P = value_period(spec)
    jt = j_table(spec, 2 * P)
    if not np.array_equal(jt[:, :P], jt[:, P:]):
        raise RuntimeError(f"subframe values do not repeat with period {P}")
    return P


def column_period(spec: PatternSpec, t_cap: int) -> ExtendedCount:
    """Minimal T in [1, t_cap] with partition(t) == partition(t+T) for all
    t in [0, t_cap); EXCEEDS_CAP(t_cap) when no such T exists."""
    if t_cap < 1:
        raise ValueError("t_cap must be >= 1")
    window = 2 * t_cap
    jt = j_table(spec, window)
    labels = np.stack([partition_labels(jt[:, t]) for t in range(window)])
    found = None
    for cand in range(1, t_cap + 1):
        if np.array_equal(labels[:t_cap], labels[cand:cand + t_cap]):
            found = cand
            break
    if found is None:
        return ExtendedCount.exceeds_cap(t_cap)
    if spec.kind != RANDOM and spec.frame.m >= 2:
        algebraic = _verified_value_period(spec)
        if algebraic <= t_cap and found != algebraic:
            raise RuntimeError(
                f"partition period {found} disagrees with algebraic period {algebraic}")
    return ExtendedCount.finite(found)


def max_collision_ratio_exact(spec: PatternSpec) -> tuple[Fraction, tuple[tuple[int, int], ...]]:
    """Worst-pair fraction of colliding frames over one full period, exact.

    Only defined for deterministic patterns; use the empirical variant for
    the random kind.
    """
    if spec.kind == RANDOM:
        raise ValueError("exact collision ratio is undefined for the random pattern")
    S = _require_pairs(spec)
    P = _verified_value_period(spec)
    counts = accel.pair_collision_counts(j_table(spec, P))
    mx = int(counts.max())
    return Fraction(mx, P), _offender_pairs(counts == mx, S)


def max_collision_ratio_empirical(spec: PatternSpec, t_b: int) -> EmpiricalRatio:
    """Worst-pair collision fraction over the finite horizon [0, t_b)."""
    if t_b < 1:
        raise ValueError("t_b must be >= 1")
    S = _require_pairs(spec)
    counts = accel.pair_collision_counts(j_table(spec, t_b))
    mx = int(counts.max())
    return EmpiricalRatio(Fraction(mx, t_b), t_b, _offender_pairs(counts == mx, S))


def max_continual_collision(spec: PatternSpec, t_cap: int) -> tuple[ExtendedCount, tuple[tuple[int, int], ...]]:
    """Longest run of consecutive colliding frames over all pairs.

    Deterministic kinds scan two full periods: a pair colliding through a
    whole period collides forever (INFINITE), otherwise the doubled window
    sees every wrap-around run and the result is exact. The random kind
    scans t_cap frames and returns EXCEEDS_CAP when only a window-edge run
    attains the maximum (its true extent is unknown).
    """
    if t_cap < 1:
        raise ValueError("t_cap must be >= 1")
    S = _require_pairs(spec)
    if spec.kind == RANDOM:
        best, interior, _ = accel.pair_run_stats(j_table(spec, t_cap))
        mx = int(best.max())
        offenders = _offender_pairs(best == mx, S)
        if mx == 0:
            return ExtendedCount.finite(0), offenders
        if int(interior.max()) == mx:
            return ExtendedCount.finite(mx), offenders
        return ExtendedCount.exceeds_cap(t_cap), offenders
    P = _verified_value_period(spec)
    jt = j_table(spec, P)
    best, _, full = accel.pair_run_stats(np.concatenate([jt, jt], axis=1))
    if full.any():
        return ExtendedCount.infinite(), _offender_pairs(full, S)
    mx = int(best.max())
    return ExtendedCount.finite(mx), _offender_pairs(best == mx, S)


def is_local_good(spec: PatternSpec, t_cap: int) -> bool:
    """True iff the maximal continual collision number equals the floor set
    by the frame shape: the smallest r with n^r >= m."""
    count, _ = max_continual_collision(spec, t_cap)
    bound = ceil_log(spec.frame.n, spec.frame.m) if spec.frame.n >= 2 else None
    if bound is None:
        return False
    return count.is_finite and count.value == bound


def observed_max_run(spec: PatternSpec, frames: int) -> int:
    """Longest collision run seen in [0, frames); a lower bound on the true
    maximal continual collision number for any kind."""
    _require_pairs(spec)
    best, _, _ = accel.pair_run_stats(j_table(spec, frames))
    return int(best.max())


def compute_report(spec: PatternSpec, t_cap: int, t_b: int) -> MetricsReport:
    """All three metrics with one call; exact where the pattern allows."""
    period = column_period(spec, t_cap)
    if spec.kind == RANDOM:
        ratio, horizon, ratio_off = max_collision_ratio_empirical(spec, t_b)
    else:
        ratio, ratio_off = max_collision_ratio_exact(spec)
        horizon = None
    continual, cont_off = max_continual_collision(spec, t_cap)
    return MetricsReport(
        kind=spec.kind,
        m=spec.frame.m,
        n=spec.frame.n,
        column_period=period,
        max_collision_ratio=ratio,
        ratio_horizon=horizon,
        max_continual_collision=continual,
        ratio_offenders=ratio_off,
        continual_offenders=cont_off,
    )
