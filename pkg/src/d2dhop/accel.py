"""Kernel backend selection.

The hot inner loops (pairwise collision scans, per-frame discovery steps)
have a numba implementation and a pure-numpy fallback with identical
semantics. The default is numba when importable; set ``D2DHOP_NO_NUMBA=1``
to force the numpy path. ``benchmarks/bench_kernels.py`` compares the two.
"""
from __future__ import annotations

import os

ENV_FLAG = "D2DHOP_NO_NUMBA"


def numba_disabled(env_value: str | None) -> bool:
    """Interpret the environment flag; any of 1/true/yes/on disables numba."""
    if env_value is None:
        return False
    return env_value.strip().lower() in ("1", "true", "yes", "on")


def _load_backend():
    if not numba_disabled(os.environ.get(ENV_FLAG)):
        try:
            from . import _kernels_nb
            return _kernels_nb, True
        except ImportError:
            pass
    from . import _kernels_np
    return _kernels_np, False


_impl, USING_NUMBA = _load_backend()

pair_collision_counts = _impl.pair_collision_counts
pair_run_stats = _impl.pair_run_stats
ideal_step = _impl.ideal_step
sinr_step = _impl.sinr_step
