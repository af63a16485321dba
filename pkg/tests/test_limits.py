import numpy as np
import pytest

from affinelab._backend import kernels
from affinelab.limits import (LimitFunctionals, limit_theta_m_stats,
                              limit_theta_stat_known_m, m_gap_functional,
                              sample_limit_functionals)
from affinelab.rng import RngStream, derive_stream
from affinelab.stats import ks_two_sample, moment_summary, variance_se


def degenerate_functionals(m):
    """Continuous-time functionals of the deterministic path X_t = m t,
    Y = 0 (the a = 0 hook): exact closed forms."""
    return LimitFunctionals(int_x=m / 2.0, int_x2=m * m / 3.0, x1=m,
                            int_y=0.0, int_xdx=m * m / 2.0)


class TestDegenerateClosedForms:
    def test_statistics_recover_pure_drift(self):
        f = degenerate_functionals(3.0)
        assert f == LimitFunctionals(1.5, 3.0, 3.0, 0.0, 4.5)
        assert limit_theta_stat_known_m(f, 3.0) == 0.0
        theta, m = limit_theta_m_stats(f)
        assert theta == 0.0
        assert m == 3.0
        assert m_gap_functional(f, 3.0) == 0.0

    def test_plain_values(self):
        f = LimitFunctionals(int_x=0.0, int_x2=2.0, x1=0.0, int_y=0.0, int_xdx=1.0)
        assert limit_theta_stat_known_m(f, 0.0) == -0.5
        f2 = LimitFunctionals(int_x=0.0, int_x2=1.0, x1=2.0, int_y=0.0, int_xdx=1.0)
        theta, m = limit_theta_m_stats(f2)
        assert theta == -1.0
        assert m == 2.0

    def test_sampler_degenerate_hook_is_deterministic(self):
        # a = 0 keeps Y at 0; X is the exact drift ramp, left sums follow
        steps = 64
        f = sample_limit_functionals(0.0, 3.0, steps, RngStream(1, 1))
        assert f.x1 == 3.0
        assert f.int_y == 0.0
        assert f.int_xdx == 4.5
        ks = np.arange(steps)
        dt = 1.0 / steps
        assert f.int_x == float(np.sum(3.0 * ks * dt * dt))
        assert f.int_x2 == pytest.approx(float(np.sum((3.0 * ks * dt) ** 2 * dt)),
                                         rel=1e-15)
        # left sums approach the closed forms at first order in dt
        assert abs(f.int_x - 1.5) <= 3.0 / steps
        assert abs(f.int_x2 - 3.0) <= 9.0 / steps


class TestSamplerInvariants:
    def test_ito_identity_and_cauchy_schwarz(self):
        for r in range(2000):
            f = sample_limit_functionals(1.0, 1.0, 32, derive_stream(201, r))
            scale = max(abs(f.int_xdx), 1.0)
            assert abs(f.int_xdx - 0.5 * (f.x1**2 - f.int_y)) <= 1e-10 * scale
            assert f.int_x2 - f.int_x**2 >= -1e-12
            assert f.int_x2 >= 0.0 and f.int_y >= 0.0

    def test_centered_gap_stays_away_from_zero(self):
        # strict positivity in practice: no tiny centered second moments at a >= 0.5
        n = 20_000
        gaps = np.empty(n)
        for r in range(n):
            f = sample_limit_functionals(0.5, 0.0, 64, derive_stream(202, r))
            gaps[r] = f.int_x2 - f.int_x**2
        assert np.min(gaps) > 0.0
        assert np.mean(gaps < 1e-8) < 1e-3

    def test_moments_of_functionals(self):
        # E int_Y = a/2, E x1 = m, Var x1 = E int_Y
        a, m = 2.0, 0.0
        n = 20_000
        rows = np.empty((n, 5))
        for r in range(n):
            kernels.fill_limit_functionals(rows[r], 203, r, a, m, 512)
        int_y = rows[:, 3]
        x1 = rows[:, 2]
        sy = moment_summary(int_y)
        sx = moment_summary(x1)
        assert abs(sy.mean - 1.0) <= 4.0 * sy.se_mean
        assert abs(sx.mean - 0.0) <= 4.0 * sx.se_mean
        assert abs(sx.variance - 1.0) <= 4.0 * variance_se(x1)

    def test_matches_joint_path_bitwise(self):
        # same stream, same draw order: x1 equals the joint-path terminal
        out = np.empty(5)
        kernels.fill_limit_functionals(out, 42, 9, 1.5, 0.7, 128)
        y = np.empty(129)
        x = np.empty(129)
        kernels.fill_joint_path(y, x, 42, 9, 1.5, 0.0, 0.7, 0.0, 0.0, 0.0,
                                1.0 / 128, False)
        assert out[2] == x[-1]

    def test_refinement_stability_coupled(self):
        # same trajectory read at full and half resolution: the known-m
        # statistic barely moves
        n = 5000
        steps = 1 << 13
        fine = np.empty(n)
        half = np.empty(n)
        buf_f = np.empty(5)
        buf_h = np.empty(5)
        for r in range(n):
            kernels.fill_limit_functionals_pair(buf_f, buf_h, 204, r, 1.0, 1.0, steps)
            fine[r] = limit_theta_stat_known_m(LimitFunctionals.from_row(buf_f), 1.0)
            half[r] = limit_theta_stat_known_m(LimitFunctionals.from_row(buf_h), 1.0)
        assert ks_two_sample(fine, half) <= 0.01


class TestValidation:
    def test_rejects_negative_a(self):
        with pytest.raises(ValueError):
            sample_limit_functionals(-0.5, 0.0, 16, RngStream(1, 1))

    def test_rejects_tiny_grids(self):
        with pytest.raises(ValueError):
            sample_limit_functionals(1.0, 0.0, 1, RngStream(1, 1))

    def test_zero_denominators_rejected(self):
        flat = LimitFunctionals(0.0, 0.0, 0.0, 0.0, 0.0)
        with pytest.raises(ValueError):
            limit_theta_stat_known_m(flat, 0.0)
        with pytest.raises(ValueError):
            limit_theta_m_stats(flat)
