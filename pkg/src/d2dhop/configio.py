"""Text config files and CSV outputs.

Config grammar: UTF-8, one ``key = value`` per line, ``#`` starts a comment,
blank lines ignored, duplicate or unknown keys rejected. Pattern configs use
the keys kind/m/n/k/seed/f/b/init; a simulation config embeds its pattern
under ``pattern.``-prefixed keys.

All CSV writers have a matching reader that returns exactly what was
written; outputs contain only integers and exact rationals (num/den).
"""
from __future__ import annotations

import csv
from fractions import Fraction
from pathlib import Path

from .gf import parse_poly
from .linalg import parse_vec
from .metrics import MetricsReport
from .patterns import KINDS, NEW, FrameStructure, PatternSpec
from .sim import PathlossModel, SimConfig, SimResult


def read_kv(path: str | Path) -> dict[str, str]:
    """Parse a key = value file into an ordered dict of strings."""
    out: dict[str, str] = {}
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{lineno}: expected 'key = value', got {raw!r}")
        key, value = line.split("=", 1)
        key, value = key.strip(), value.strip()
        if not key or not value:
            raise ValueError(f"{path}:{lineno}: empty key or value")
        if key in out:
            raise ValueError(f"{path}:{lineno}: duplicate key {key!r}")
        out[key] = value
    return out


def _reject_unknown(kv: dict[str, str], allowed: set[str], what: str) -> None:
    unknown = set(kv) - allowed
    if unknown:
        raise ValueError(f"unknown {what} keys: {', '.join(sorted(unknown))}")


def _get_int(kv: dict[str, str], key: str, default: int | None = None) -> int:
    if key not in kv:
        if default is None:
            raise ValueError(f"missing required key {key!r}")
        return default
    try:
        return int(kv[key])
    except ValueError:
        raise ValueError(f"key {key!r} must be an integer, got {kv[key]!r}") from None


def _get_float(kv: dict[str, str], key: str, default: float) -> float:
    if key not in kv:
        return default
    try:
        return float(kv[key])
    except ValueError:
        raise ValueError(f"key {key!r} must be a number, got {kv[key]!r}") from None


PATTERN_KEYS = {"kind", "m", "n", "k", "seed", "f", "b", "init"}


def pattern_spec_from_kv(kv: dict[str, str], base_dir: str | Path = ".") -> PatternSpec:
    """Build a PatternSpec from config keys; ``init`` names a permutation
    file (one flat cell code i*n+j per line, listed for s = 0, 1, ...)."""
    _reject_unknown(kv, PATTERN_KEYS, "pattern")
    kind = kv.get("kind")
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {', '.join(KINDS)}, got {kind!r}")
    m = _get_int(kv, "m")
    n = _get_int(kv, "n")
    frame = FrameStructure(m, n)
    init = None
    if "init" in kv:
        lines = (Path(base_dir) / kv["init"]).read_text(encoding="utf-8").split()
        init = tuple(int(v) for v in lines)
    f = parse_poly(kv["f"], n) if "f" in kv else None
    b = parse_vec(kv["b"], n) if "b" in kv else None
    if kind == NEW and f is None:
        raise ValueError("new pattern config requires key 'f'")
    return PatternSpec(frame, kind, k=_get_int(kv, "k", 0),
                       seed=_get_int(kv, "seed", 0), f=f, b=b, init=init)


def load_pattern_spec(path: str | Path) -> PatternSpec:
    return pattern_spec_from_kv(read_kv(path), Path(path).parent)


SIM_KEYS = {"cells", "isd_m", "ues_per_cell", "frames", "seed", "mode",
            "ideal_radius_m", "pathloss_exponent", "pathloss_reference_db",
            "pathloss_offset_db", "tx_power_dbm", "noise_dbm",
            "sinr_threshold_db", "ibe_attenuation_db"}


def sim_config_from_kv(kv: dict[str, str], base_dir: str | Path = ".") -> SimConfig:
    pattern_kv = {k[len("pattern."):]: v for k, v in kv.items() if k.startswith("pattern.")}
    sim_kv = {k: v for k, v in kv.items() if not k.startswith("pattern.")}
    _reject_unknown(sim_kv, SIM_KEYS, "simulation")
    spec = pattern_spec_from_kv(pattern_kv, base_dir)
    radius = sim_kv.get("ideal_radius_m", "").strip().lower()
    return SimConfig(
        pattern=spec,
        cells=_get_int(sim_kv, "cells", 1),
        isd_m=_get_float(sim_kv, "isd_m", 500.0),
        ues_per_cell=_get_int(sim_kv, "ues_per_cell", 1),
        frames=_get_int(sim_kv, "frames"),
        seed=_get_int(sim_kv, "seed", 0),
        mode=sim_kv.get("mode", "ideal"),
        ideal_radius_m=float("inf") if radius == "inf" else _get_float(sim_kv, "ideal_radius_m", 500.0),
        pathloss=PathlossModel(
            exponent=_get_float(sim_kv, "pathloss_exponent", 3.0),
            reference_db=_get_float(sim_kv, "pathloss_reference_db", 40.0),
            offset_db=_get_float(sim_kv, "pathloss_offset_db", 0.0),
        ),
        tx_power_dbm=_get_float(sim_kv, "tx_power_dbm", 23.0),
        noise_dbm=_get_float(sim_kv, "noise_dbm", -105.0),
        sinr_threshold_db=_get_float(sim_kv, "sinr_threshold_db", 3.0),
        ibe_attenuation_db=_get_float(sim_kv, "ibe_attenuation_db", 20.0),
    )


def load_sim_config(path: str | Path) -> SimConfig:
    return sim_config_from_kv(read_kv(path), Path(path).parent)


def write_pattern_csv(path: str | Path, rows: list[tuple[int, int, int, int]]) -> None:
    """Rows (s, t, i, j), already in stable s-major, t-minor order."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["s", "t", "i", "j"])
        writer.writerows(rows)


def read_pattern_csv(path: str | Path) -> list[tuple[int, int, int, int]]:
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        if header != ["s", "t", "i", "j"]:
            raise ValueError(f"unexpected pattern CSV header {header!r}")
        return [(int(s), int(t), int(i), int(j)) for s, t, i, j in reader]


def write_sim_frames_csv(path: str | Path, result: SimResult) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["frame", "new_pairs", "cum_mean_discovered"])
        for t, (new, mean) in enumerate(zip(result.new_pairs, result.cum_mean)):
            writer.writerow([t, new, str(mean)])


def read_sim_frames_csv(path: str | Path) -> list[tuple[int, int, Fraction]]:
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        if header != ["frame", "new_pairs", "cum_mean_discovered"]:
            raise ValueError(f"unexpected frames CSV header {header!r}")
        return [(int(t), int(n), Fraction(mean)) for t, n, mean in reader]


def write_sim_dist_csv(path: str | Path, result: SimResult) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["ue", "discovered"])
        for ue, count in enumerate(result.per_ue_discovered):
            writer.writerow([ue, count])


def read_sim_dist_csv(path: str | Path) -> list[tuple[int, int]]:
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        if header != ["ue", "discovered"]:
            raise ValueError(f"unexpected distribution CSV header {header!r}")
        return [(int(ue), int(count)) for ue, count in reader]


MAX_LISTED_OFFENDERS = 32


def format_report(report: MetricsReport) -> str:
    """Flat key = value rendering of a MetricsReport; offender pair lists are
    truncated to MAX_LISTED_OFFENDERS entries, with the full count alongside."""
    def pairs(tag: str, offenders) -> list[str]:
        shown = ",".join(f"{s}:{u}" for s, u in offenders[:MAX_LISTED_OFFENDERS])
        return [f"{tag}_offenders = {shown if shown else '-'}",
                f"{tag}_offender_count = {len(offenders)}"]

    lines = [
        f"kind = {report.kind}",
        f"m = {report.m}",
        f"n = {report.n}",
        f"column_period = {report.column_period}",
        f"max_collision_ratio = {report.max_collision_ratio}",
        f"ratio_horizon = {'exact' if report.ratio_horizon is None else report.ratio_horizon}",
        f"max_continual_collision = {report.max_continual_collision}",
    ]
    lines += pairs("ratio", report.ratio_offenders)
    lines += pairs("continual", report.continual_offenders)
    return "\n".join(lines) + "\n"
