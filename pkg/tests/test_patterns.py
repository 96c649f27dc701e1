"""Pattern construction and evaluation; table paths are held to exact
agreement with the scalar coordinate function."""
import math
import random

import numpy as np
import pytest

from d2dhop import gf, linalg, patterns
from d2dhop.patterns import (FrameStructure, PatternSpec, collision_partition, coords,
                             digits, ij_tables, j_table, new_pattern, qc_pattern,
                             random_pattern)

F3 = gf.parse_poly("x^2-x-1", 3)
F11 = gf.parse_poly("x^2+3x+6", 11)


def spec_m6() -> PatternSpec:
    return new_pattern(6, 3, F3, k=3)


class TestValidation:
    def test_frame_bounds(self):
        with pytest.raises(ValueError):
            FrameStructure(0, 3)
        assert FrameStructure(6, 3).resources == 18

    def test_init_must_be_permutation(self):
        with pytest.raises(ValueError):
            qc_pattern(2, 2, init=(0, 1, 2, 2))
        qc_pattern(2, 2, init=(3, 2, 1, 0))

    def test_new_needs_prime_n(self):
        with pytest.raises(ValueError):
            new_pattern(6, 4, F3)

    def test_new_needs_matching_degree(self):
        with pytest.raises(ValueError):
            new_pattern(10, 3, F3)  # ceil_log(3, 10) = 3, f has degree 2
        with pytest.raises(ValueError):
            new_pattern(6, 3, gf.parse_poly("x^2+3x+6", 11))

    def test_new_needs_generator_poly(self):
        with pytest.raises(ValueError):
            new_pattern(6, 3, gf.parse_poly("x^2+1", 3))

    def test_new_needs_nonzero_b(self):
        with pytest.raises(ValueError):
            new_pattern(6, 3, F3, b=linalg.FpVec(3, (0, 0)))

    def test_new_default_b(self):
        assert spec_m6().b.entries == (1, 0)
        assert new_pattern(44, 11, F11).b.entries == (1, 0)

    def test_random_frame_cap(self):
        with pytest.raises(ValueError):
            random_pattern(1 << 8, 1 << 8, seed=0)

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            PatternSpec(FrameStructure(2, 2), "qpsk")


class TestDigits:
    def test_examples(self):
        assert digits(5, 3, 2) == (2, 1)
        assert digits(0, 11, 2) == (0, 0)
        assert digits(43, 11, 2) == (10, 3)

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            digits(9, 3, 2)


class TestNewPattern:
    def test_worked_example_sequence(self):
        spec = spec_m6()
        s = 3  # (i0, j0) = (1, 0) under the row-major default map
        assert spec.init_coord(s) == (1, 0)
        assert [coords(spec, s, t).j for t in range(9)] == [0, 1, 0, 1, 1, 2, 0, 2, 2]

    def test_zero_digit_vector_is_constant(self):
        spec = spec_m6()
        assert all(coords(spec, 0, t).j == 0 for t in range(20))

    def test_i_hops_linearly(self):
        spec = spec_m6()
        assert [coords(spec, 3, t).i for t in range(4)] == [1, 4, 1, 4]

    def test_column_values_periodic(self):
        for spec, period in [(spec_m6(), 9), (new_pattern(44, 11, F11), 121)]:
            jt = j_table(spec, 2 * period)
            assert np.array_equal(jt[:, :period], jt[:, period:])

    def test_negative_t(self):
        spec = spec_m6()
        for s in range(18):
            i0, j0 = spec.init_coord(s)
            for t in range(-9, 0):
                c = coords(spec, s, t)
                assert c.j == coords(spec, s, t + 9).j
                assert c.i == (i0 + 3 * t) % 6


class TestQcPattern:
    def test_worked_example(self):
        spec = qc_pattern(4, 5, k=0)
        s = 2 * 5 + 1  # (i0, j0) = (2, 1)
        assert [coords(spec, s, t).j for t in range(5)] == [1, 3, 0, 2, 4]
        assert all(coords(spec, s, t).i == 2 for t in range(5))

    def test_quadratic_term_engages_above_n(self):
        spec = qc_pattern(6, 3)
        s = 4 * 3 + 0  # i0 = 4: linear coefficient 1, quadratic coefficient 1
        assert [coords(spec, s, t).j for t in range(3)] == [0, 2, 0]

    def test_constant_collision_pair_above_n_squared(self):
        spec = qc_pattern(10, 3)
        s, s2 = 0, 9 * 3  # i0 = 0 vs i0 = 9: both coefficient pairs are (0, 0) mod 3
        assert all(coords(spec, s, t).j == coords(spec, s2, t).j for t in range(30))


class TestInjectivity:
    def test_deterministic_patterns_are_injective_per_frame(self):
        rng = random.Random(2)
        for make in (lambda init: qc_pattern(6, 3, k=1, init=init),
                     lambda init: new_pattern(6, 3, F3, k=3, init=init),
                     lambda init: qc_pattern(4, 5, k=2, init=init)):
            cells = None
            for _ in range(3):
                spec = make(None)
                cells = list(range(spec.frame.resources))
                rng.shuffle(cells)
                spec = make(tuple(cells))
                period = patterns.value_period(spec)
                it, jt = ij_tables(spec, period)
                for t in range(period):
                    pairs = set(zip(it[:, t].tolist(), jt[:, t].tolist()))
                    assert len(pairs) == spec.frame.resources


class TestRandomPattern:
    def test_reproducible_and_seed_sensitive(self):
        a = random_pattern(4, 5, seed=1)
        b = random_pattern(4, 5, seed=2)
        assert [coords(a, 7, t) for t in range(10)] == [coords(a, 7, t) for t in range(10)]
        assert any(coords(a, s, t) != coords(b, s, t) for s in range(20) for t in range(10))

    def test_rejects_negative_t(self):
        spec = random_pattern(4, 5, seed=1)
        with pytest.raises(ValueError):
            coords(spec, 0, -1)
        with pytest.raises(ValueError):
            j_table(spec, 3, t0=-1)

    def test_uniformity_smoke(self):
        # 10^4 draws over 20 cells: each frequency within 5 sigma of 1/20
        spec = random_pattern(4, 5, seed=77)
        draws = 10_000
        it, jt = ij_tables(spec, draws // 20)
        counts = np.zeros((4, 5), np.int64)
        np.add.at(counts, (it.ravel(), jt.ravel()), 1)
        q = 1 / 20
        sigma = math.sqrt(draws * q * (1 - q))
        assert np.abs(counts - draws * q).max() <= 5 * sigma


class TestTables:
    def test_tables_match_scalar_for_all_kinds(self):
        specs = [spec_m6(), qc_pattern(4, 5, k=2), random_pattern(4, 5, seed=3)]
        for spec in specs:
            it, jt = ij_tables(spec, 11)
            for s in range(spec.frame.resources):
                for t in range(11):
                    assert (it[s, t], jt[s, t]) == coords(spec, s, t)

    def test_window_offset(self):
        spec = spec_m6()
        it, jt = ij_tables(spec, 5, t0=7)
        for s in range(18):
            for k in range(5):
                assert (it[s, k], jt[s, k]) == coords(spec, s, 7 + k)


class TestPartition:
    def test_partition_equals_itself(self):
        spec = qc_pattern(4, 5)
        assert collision_partition(spec, 3) == collision_partition(spec, 3)

    def test_qc_initial_partition_is_columns(self):
        part = collision_partition(qc_pattern(4, 5), 0)
        assert len(part) == 5 and all(len(g) == 4 for g in part)

    def test_new_partition_periodicity(self):
        spec = spec_m6()
        assert collision_partition(spec, 0) == collision_partition(spec, 9)
        assert collision_partition(spec, 4) == collision_partition(spec, 13)

    def test_partition_ignores_labels(self):
        # same grouping under different j values must compare equal
        a = patterns.partition_labels(np.array([0, 0, 1, 2]))
        b = patterns.partition_labels(np.array([5, 5, 2, 0]))
        assert np.array_equal(a, b)
