"""Half-duplex D2D discovery simulation.

UEs are dropped uniformly into hexagonal cells laid out in offset rows and
each is pinned to a distinct logical resource of the hopping pattern. Per
discovery frame, a receiver r hears a transmitter u only when their
subframes differ (half duplex); the link itself closes either inside a fixed
radius (``ideal`` mode) or when the SINR clears a threshold (``sinr`` mode),
with co-subframe transmitters leaking power into nearby channels (in-band
emission, a fixed dB per channel step). Everything is deterministic given
the seed.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import accel
from .patterns import PatternSpec, ij_tables
from .rng import Stream

IDEAL = "ideal"
SINR = "sinr"

CELLS_PER_ROW = 7


@dataclass(frozen=True)
class PathlossModel:
    """Log-distance pathloss: PL(d) = reference + 10*exponent*log10(d) + offset,
    in dB, with d clamped to 1 m."""

    exponent: float = 3.0
    reference_db: float = 40.0
    offset_db: float = 0.0

    def loss_db(self, d: float) -> float:
        return self.reference_db + 10.0 * self.exponent * math.log10(max(d, 1.0)) + self.offset_db


@dataclass(frozen=True)
class SimConfig:
    pattern: PatternSpec
    cells: int = 1
    isd_m: float = 500.0
    ues_per_cell: int = 1
    frames: int = 1
    seed: int = 0
    mode: str = IDEAL
    ideal_radius_m: float = 500.0
    pathloss: PathlossModel = field(default_factory=PathlossModel)
    tx_power_dbm: float = 23.0
    noise_dbm: float = -105.0
    sinr_threshold_db: float = 3.0
    ibe_attenuation_db: float = 20.0

    def __post_init__(self):
        if self.cells < 1 or self.ues_per_cell < 1:
            raise ValueError("cells and ues_per_cell must be >= 1")
        if self.frames < 1:
            raise ValueError("frames must be >= 1")
        if self.mode not in (IDEAL, SINR):
            raise ValueError(f"mode must be {IDEAL!r} or {SINR!r}")
        if self.cells * self.ues_per_cell > self.pattern.frame.resources:
            raise ValueError(
                f"{self.cells * self.ues_per_cell} UEs exceed "
                f"{self.pattern.frame.resources} logical resources")
        for name in ("isd_m", "ideal_radius_m", "tx_power_dbm", "noise_dbm",
                     "sinr_threshold_db", "ibe_attenuation_db"):
            if not math.isfinite(getattr(self, name)) and not (
                    name == "ideal_radius_m" and getattr(self, name) == math.inf):
                raise ValueError(f"{name} must be finite")

    @property
    def n_ues(self) -> int:
        return self.cells * self.ues_per_cell


@dataclass(frozen=True)
class UE:
    id: int
    x: float
    y: float
    resource: int


@dataclass(frozen=True)
class SimResult:
    """Per-frame discovery series plus the final per-UE distribution.

    ``cum_pairs`` counts ordered (receiver, transmitter) pairs discovered so
    far; the cumulative mean per UE is cum_pairs[t] / n_ues, exact.
    """

    n_ues: int
    new_pairs: tuple[int, ...]
    cum_pairs: tuple[int, ...]
    per_ue_discovered: tuple[int, ...]

    @property
    def cum_mean(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.n_ues) for c in self.cum_pairs)


def cell_centers(cells: int, isd_m: float) -> list[tuple[float, float]]:
    """Hex grid centers in offset rows of seven; neighbors are isd apart."""
    dy = isd_m * math.sqrt(3.0) / 2.0
    out = []
    for c in range(cells):
        row, col = divmod(c, CELLS_PER_ROW)
        out.append((col * isd_m + (row % 2) * isd_m / 2.0, row * dy))
    return out


def hex_contains(x: float, y: float, circumradius: float) -> bool:
    """Point test for a pointy-top hexagon centered at the origin."""
    return (abs(x) <= math.sqrt(3.0) * circumradius / 2.0
            and abs(x) + math.sqrt(3.0) * abs(y) <= math.sqrt(3.0) * circumradius)


def drop_ues(config: SimConfig) -> list[UE]:
    """Uniform positions within each hex cell; resources from a seeded
    permutation of the frame cells. Deterministic given the seed."""
    stream = Stream(config.seed)
    radius = config.isd_m / math.sqrt(3.0)
    half_w = math.sqrt(3.0) * radius / 2.0
    positions = []
    for cx, cy in cell_centers(config.cells, config.isd_m):
        for _ in range(config.ues_per_cell):
            while True:
                x = stream.uniform(-half_w, half_w)
                y = stream.uniform(-radius, radius)
                if hex_contains(x, y, radius):
                    break
            positions.append((cx + x, cy + y))
    perm = list(range(config.pattern.frame.resources))
    stream.shuffle(perm)
    return [UE(idx, px, py, perm[idx]) for idx, (px, py) in enumerate(positions)]


def _distance_matrix(ues: list[UE]) -> np.ndarray:
    pos = np.array([(ue.x, ue.y) for ue in ues])
    d = pos[:, None, :] - pos[None, :, :]
    return np.hypot(d[:, :, 0], d[:, :, 1])


def _gain_matrix(ues: list[UE], config: SimConfig) -> np.ndarray:
    dist = _distance_matrix(ues)
    pl = (config.pathloss.reference_db
          + 10.0 * config.pathloss.exponent * np.log10(np.maximum(dist, 1.0))
          + config.pathloss.offset_db)
    gain = 10.0 ** ((config.tx_power_dbm - pl) / 10.0)
    np.fill_diagonal(gain, 0.0)
    return gain


def _frame_step(i_col: np.ndarray, j_col: np.ndarray, config: SimConfig,
                within: np.ndarray | None, gain: np.ndarray | None,
                discovered: np.ndarray) -> int:
    if config.mode == IDEAL:
        return accel.ideal_step(j_col, within, discovered)
    return accel.sinr_step(
        i_col, j_col, gain,
        10.0 ** (-config.ibe_attenuation_db / 10.0),
        config.pattern.frame.m, config.pattern.frame.n,
        10.0 ** (config.noise_dbm / 10.0),
        10.0 ** (config.sinr_threshold_db / 10.0),
        discovered)


def _link_state(ues: list[UE], config: SimConfig) -> tuple[np.ndarray | None, np.ndarray | None]:
    if config.mode == IDEAL:
        within = _distance_matrix(ues) <= config.ideal_radius_m
        np.fill_diagonal(within, False)
        return within, None
    return None, _gain_matrix(ues, config)


def step_frame(ues: list[UE], spec: PatternSpec, t: int, config: SimConfig,
               discovered: np.ndarray | None = None) -> set[tuple[int, int]]:
    """Ordered pairs (receiver, transmitter) newly discovered at frame t.

    ``discovered`` is the caller-held state matrix (updated in place); pairs
    already marked are not re-counted. None starts from nothing discovered.
    """
    n = len(ues)
    if discovered is None:
        discovered = np.zeros((n, n), np.bool_)
    res = np.array([ue.resource for ue in ues])
    i_tab, j_tab = ij_tables(spec, 1, t0=t)
    within, gain = _link_state(ues, config)
    before = discovered.copy()
    _frame_step(i_tab[res, 0], j_tab[res, 0], config, within, gain, discovered)
    new = discovered & ~before
    return {(int(r), int(u)) for r, u in zip(*np.nonzero(new))}


def run(config: SimConfig) -> SimResult:
    """Simulate config.frames discovery frames; deterministic given seed."""
    ues = drop_ues(config)
    n = len(ues)
    res = np.array([ue.resource for ue in ues])
    i_all, j_all = ij_tables(config.pattern, config.frames)
    i_all, j_all = i_all[res], j_all[res]
    within, gain = _link_state(ues, config)
    discovered = np.zeros((n, n), np.bool_)
    new_pairs = []
    cum_pairs = []
    total = 0
    for t in range(config.frames):
        count = _frame_step(np.ascontiguousarray(i_all[:, t]),
                            np.ascontiguousarray(j_all[:, t]),
                            config, within, gain, discovered)
        total += count
        new_pairs.append(count)
        cum_pairs.append(total)
    return SimResult(
        n_ues=n,
        new_pairs=tuple(new_pairs),
        cum_pairs=tuple(cum_pairs),
        per_ue_discovered=tuple(int(x) for x in discovered.sum(axis=1)),
    )
