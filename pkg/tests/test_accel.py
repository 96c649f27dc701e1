"""The numba kernels and the numpy fallbacks must agree on every input."""
import numpy as np
import pytest

from d2dhop import _kernels_np, accel
from d2dhop.accel import numba_disabled

try:
    from d2dhop import _kernels_nb
    HAS_NUMBA = True
except ImportError:
    HAS_NUMBA = False

needs_numba = pytest.mark.skipif(not HAS_NUMBA, reason="numba unavailable")


def random_jtab(rng, S, T, n):
    return rng.integers(0, n, size=(S, T)).astype(np.int16)


class TestEnvFlag:
    def test_flag_parsing(self):
        assert not numba_disabled(None)
        assert not numba_disabled("")
        assert not numba_disabled("0")
        for val in ("1", "true", "YES", " on "):
            assert numba_disabled(val)

    def test_backend_exposed(self):
        assert isinstance(accel.USING_NUMBA, bool)


@needs_numba
class TestKernelAgreement:
    def setup_method(self):
        self.rng = np.random.default_rng(99)

    def test_pair_collision_counts(self):
        for S, T, n in ((5, 7, 2), (20, 50, 5), (40, 121, 11)):
            jt = random_jtab(self.rng, S, T, n)
            assert np.array_equal(_kernels_nb.pair_collision_counts(jt),
                                  _kernels_np.pair_collision_counts(jt))

    def test_pair_run_stats(self):
        for S, T, n in ((5, 7, 2), (20, 50, 3), (30, 80, 2)):
            jt = random_jtab(self.rng, S, T, n)
            for a, b in zip(_kernels_nb.pair_run_stats(jt),
                            _kernels_np.pair_run_stats(jt)):
                assert np.array_equal(a, b)

    def test_run_stats_hand_case(self):
        # one pair with pattern 1,1,0,1,1,1,0,0,1: best 3, interior 3, not full
        jt = np.array([[0, 0, 1, 0, 0, 0, 2, 1, 0],
                       [0, 0, 0, 0, 0, 0, 0, 0, 0]], dtype=np.int16)
        for impl in (_kernels_nb, _kernels_np):
            best, interior, full = impl.pair_run_stats(jt)
            assert best[0] == 3 and interior[0] == 3 and not full[0]

    def test_run_stats_edge_runs_are_not_interior(self):
        jt = np.array([[0, 0, 1, 0], [0, 0, 0, 0]], dtype=np.int16)  # prefix 2, suffix 1
        for impl in (_kernels_nb, _kernels_np):
            best, interior, full = impl.pair_run_stats(jt)
            assert best[0] == 2 and interior[0] == 0 and not full[0]

    def test_run_stats_full_window(self):
        jt = np.zeros((2, 6), dtype=np.int16)
        for impl in (_kernels_nb, _kernels_np):
            best, interior, full = impl.pair_run_stats(jt)
            assert best[0] == 6 and full[0]

    def test_ideal_step(self):
        N = 30
        j = self.rng.integers(0, 5, N).astype(np.int16)
        within = self.rng.random((N, N)) < 0.6
        np.fill_diagonal(within, False)
        d_nb = self.rng.random((N, N)) < 0.2
        np.fill_diagonal(d_nb, True)
        d_np = d_nb.copy()
        c_nb = _kernels_nb.ideal_step(j, within, d_nb)
        c_np = _kernels_np.ideal_step(j, within, d_np)
        assert c_nb == c_np
        assert np.array_equal(d_nb, d_np)

    def test_sinr_step(self):
        N, m, n = 24, 6, 4
        i_ch = self.rng.integers(0, m, N).astype(np.int16)
        j_sf = self.rng.integers(0, n, N).astype(np.int16)
        gain = self.rng.random((N, N)) * 1e-9
        np.fill_diagonal(gain, 0.0)
        d_nb = np.zeros((N, N), np.bool_)
        d_np = np.zeros((N, N), np.bool_)
        args = (i_ch, j_sf, gain, 0.01, m, n, 1e-12, 2.0)
        c_nb = _kernels_nb.sinr_step(*args, d_nb)
        c_np = _kernels_np.sinr_step(*args, d_np)
        assert c_nb == c_np
        assert np.array_equal(d_nb, d_np)
