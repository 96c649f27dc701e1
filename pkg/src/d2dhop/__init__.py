"""Frequency-time hopping patterns for device-to-device discovery.

Construction of the random, quadratic-congruence, and digit-vector hopping
patterns; the column-period / collision-ratio / continual-collision metrics;
and a half-duplex discovery simulator.
"""

from .gf import (FpPoly, ceil_log, find_condition_g_poly, format_poly, is_irreducible,
                 is_prime, minimal_r, parse_poly, poly_mul_mod, poly_pow_mod,
                 satisfies_condition_g, x_order)
from .linalg import (FpMatrix, FpVec, b_period_table, b_sequence, companion_matrix,
                     format_vec, is_nonsingular, mat_mul, mat_pow, mat_vec, parse_vec)
from .metrics import (EmpiricalRatio, ExtendedCount, MetricsReport, column_period,
                      compute_report, is_local_good, max_collision_ratio_empirical,
                      max_collision_ratio_exact, max_continual_collision,
                      observed_max_run)
from .patterns import (Coord, FrameStructure, PatternSpec, collision_partition, coords,
                       default_init, digits, i_table, ij_tables, j_table, new_pattern,
                       qc_pattern, random_pattern, value_period)
from .sim import (SimConfig, SimResult, UE, PathlossModel, cell_centers, drop_ues,
                  hex_contains, run, step_frame)

__version__ = "0.1.0"
