import io
import math

import numpy as np
import pytest
import scipy.stats

from affinelab.engine import (TimeGrid, SamplePath, cir_transition_sample,
                              simulate_cbi_path, simulate_joint_path,
                              simulate_observations, subsample_integer_times)
from affinelab.params import CbiParams, InitialLaw, JumpMeasure, ModelParams
from affinelab.rng import RngStream, derive_stream
from affinelab.stats import ks_two_sample, moment_summary, variance_se


def unit_jump(rate):
    return JumpMeasure.single(rate, [1.0])


class TestCirTransition:
    def test_zero_time_is_identity(self):
        assert cir_transition_sample(1.7, 1.0, 0.0, 0.0, RngStream(1, 1)) == 1.7

    def test_rejects_nonpositive_immigration(self):
        with pytest.raises(ValueError, match="immigration drift must be positive"):
            cir_transition_sample(1.0, 0.0, 0.0, 1.0, RngStream(1, 1))

    def test_mean_matches_first_moment(self):
        # E Y_t = y0 + a t at b = 0
        draws = np.array([cir_transition_sample(1.0, 1.0, 0.0, 2.0,
                                                derive_stream(101, r))
                          for r in range(100_000)])
        s = moment_summary(draws)
        assert abs(s.mean - 3.0) <= 4.0 * s.se_mean

    def test_variance_from_zero_start(self):
        # Var Y_t = a t^2 / 2 when Y_0 = 0 (second-moment ODE)
        draws = np.array([cir_transition_sample(0.0, 2.0, 0.0, 1.0,
                                                derive_stream(102, r))
                          for r in range(100_000)])
        s = moment_summary(draws)
        assert abs(s.variance - 1.0) <= 4.0 * variance_se(draws)

    @pytest.mark.parametrize("y0,a,b,dt", [
        (1.0, 1.0, 0.0, 0.5),
        (0.7, 2.5, 0.8, 1.0),
        (2.0, 0.4, -0.6, 0.25),
    ])
    def test_law_matches_noncentral_chisquare(self, y0, a, b, dt):
        # independent oracle: scipy's ncx2 CDF at the transition parameters
        n = 20_000
        draws = np.array([cir_transition_sample(y0, a, b, dt,
                                                derive_stream(103, r))
                          for r in range(n)])
        if b == 0.0:
            c = 4.0 / dt
            nc = c * y0
        else:
            c = 4.0 * b / (1.0 - math.exp(-b * dt))
            nc = c * y0 * math.exp(-b * dt)
        stat = scipy.stats.kstest(draws * c, scipy.stats.ncx2(4.0 * a, nc).cdf).statistic
        assert stat < 0.015  # far above the alpha=0.1% critical value only on breakage


class TestJointPath:
    def test_degenerate_zero_immigration_hook(self):
        params = ModelParams(0.0, 0.0, 0.0, 0.0)
        grid = TimeGrid(0.0, 1.0, 16)
        path = simulate_joint_path(params, InitialLaw(0.0, 0.5), grid,
                                   RngStream(5, 0), allow_zero_immigration=True)
        np.testing.assert_array_equal(path.y, np.zeros(17))
        np.testing.assert_array_equal(path.x, np.full(17, 0.5))

    def test_zero_immigration_rejected_by_default(self):
        with pytest.raises(ValueError):
            simulate_joint_path(ModelParams(0.0, 0.0, 0.0, 0.0),
                                InitialLaw(0.0, 0.0), TimeGrid(0, 1, 4),
                                RngStream(5, 0))

    def test_deterministic_and_stream_sensitive(self):
        params = ModelParams(1.0, 0.3, 2.0, 0.7)
        grid = TimeGrid(0.0, 2.0, 64)
        a = simulate_joint_path(params, InitialLaw(1.0, 0.0), grid, RngStream(9, 4))
        b = simulate_joint_path(params, InitialLaw(1.0, 0.0), grid, RngStream(9, 4))
        c = simulate_joint_path(params, InitialLaw(1.0, 0.0), grid, RngStream(9, 5))
        np.testing.assert_array_equal(a.y, b.y)
        np.testing.assert_array_equal(a.x, b.x)
        assert not np.array_equal(a.x, c.x)

    def test_terminal_moments(self):
        # E X_3 = m t and Var X_3 = y0 t + a t^2/2 under joint criticality
        params = ModelParams(1.0, 0.0, 2.0, 0.0)
        grid = TimeGrid(0.0, 3.0, 3 * 64)
        n = 20_000
        x_t = np.empty(n)
        y_t = np.empty(n)
        for r in range(n):
            p = simulate_joint_path(params, InitialLaw(1.0, 0.0), grid,
                                    derive_stream(104, r))
            x_t[r] = p.x[-1]
            y_t[r] = p.y[-1]
        sx = moment_summary(x_t)
        sy = moment_summary(y_t)
        assert abs(sx.mean - 6.0) <= 4.0 * sx.se_mean
        assert abs(sy.mean - 4.0) <= 4.0 * sy.se_mean
        assert abs(sx.variance - 7.5) <= 5.0 * variance_se(x_t)

    def test_nonnegativity_random_parameters(self, rng_np):
        for _ in range(1000):
            params = ModelParams(a=float(rng_np.uniform(1e-3, 5.0)),
                                 b=float(rng_np.uniform(-2.0, 2.0)),
                                 m=float(rng_np.normal()),
                                 theta=float(rng_np.normal()))
            path = simulate_joint_path(params,
                                       InitialLaw(float(rng_np.uniform(0, 3)), 0.0),
                                       TimeGrid(0.0, 1.0, 32),
                                       RngStream(7, int(rng_np.integers(1 << 30))))
            assert np.all(path.y >= 0.0)

    def test_law_stable_under_dt_halving(self):
        # X_1 samples at 2^10 and 2^11 steps per unit are close in law
        params = ModelParams(1.0, 0.0, 1.0, 0.0)
        init = InitialLaw(1.0, 0.0)
        n = 20_000
        coarse = np.empty(n)
        fine = np.empty(n)
        for r in range(n):
            g1 = TimeGrid(0.0, 1.0, 1 << 10)
            g2 = TimeGrid(0.0, 1.0, 1 << 11)
            coarse[r] = simulate_joint_path(params, init, g1,
                                            RngStream(321, r)).x[-1]
            fine[r] = simulate_joint_path(params, init, g2,
                                          RngStream(321, (1 << 32) + r)).x[-1]
        assert ks_two_sample(coarse, fine) <= 0.02


def mild_form_gap(x, shocks, m, theta, dt):
    """Largest gap between an Euler path and the variation-of-constants
    discretization driven by the same shocks."""
    worst = 0.0
    acc = 0.0
    for k in range(1, len(x)):
        tj = (k - 1) * dt
        tk = k * dt
        acc += math.exp(theta * tj) * shocks[k - 1]
        integral = tk if theta == 0.0 else (math.exp(theta * tk) - 1.0) / theta
        mild = math.exp(-theta * tk) * (x[0] + m * integral + acc)
        worst = max(worst, abs(x[k] - mild))
    return worst


class TestMildFormConsistency:
    def test_exact_at_theta_zero(self):
        params = ModelParams(1.0, 0.0, 2.0, 0.0)
        path = simulate_joint_path(params, InitialLaw(1.0, -0.5),
                                   TimeGrid(0.0, 1.0, 256), RngStream(77, 0))
        x = path.x
        dt = path.grid.dt
        shocks = np.diff(x) - params.m * dt
        gap = mild_form_gap(x, shocks, params.m, 0.0, dt)
        assert gap <= 1e-12 * max(1.0, np.max(np.abs(x)))

    def test_first_order_in_dt(self):
        # couple resolutions dt and dt/2 through aggregated shocks
        params = ModelParams(1.0, 0.3, 0.5, 0.8)
        fine_steps = 512
        dt_fine = 1.0 / fine_steps
        path = simulate_joint_path(params, InitialLaw(0.7, -0.4),
                                   TimeGrid(0.0, 1.0, fine_steps),
                                   RngStream(88, 3))
        xf = path.x
        bf = np.diff(xf) - (params.m - params.theta * xf[:-1]) * dt_fine
        gap_fine = mild_form_gap(xf, bf, params.m, params.theta, dt_fine)

        dt = 2.0 * dt_fine
        bc = bf[0::2] + bf[1::2]
        xc = [xf[0]]
        for j in range(fine_steps // 2):
            xc.append(xc[-1] + (params.m - params.theta * xc[-1]) * dt + bc[j])
        gap_coarse = mild_form_gap(np.asarray(xc), bc, params.m, params.theta, dt)
        assert 1.5 <= gap_coarse / gap_fine <= 3.0


class TestSubsample:
    def make_path(self, t1, steps, x):
        grid = TimeGrid(0.0, t1, steps)
        return SamplePath(grid=grid, y=np.zeros(steps + 1),
                          x=np.asarray(x, dtype=float))

    def test_every_other_point(self):
        obs = subsample_integer_times(self.make_path(2.0, 4, [0, 1, 2, 3, 4]))
        np.testing.assert_array_equal(obs.x, [0.0, 2.0, 4.0])

    def test_single_unit(self):
        obs = subsample_integer_times(self.make_path(1.0, 1, [5, 7]))
        np.testing.assert_array_equal(obs.x, [5.0, 7.0])

    def test_rejects_misaligned_grid(self):
        with pytest.raises(ValueError, match="divisible"):
            subsample_integer_times(self.make_path(2.0, 3, [0, 1, 2, 3]))

    def test_matches_streaming_observations(self):
        params = ModelParams(1.3, 0.2, 0.7, -0.4)
        init = InitialLaw(0.5, 1.0)
        n, spu = 5, 8
        path = simulate_joint_path(params, init, TimeGrid(0.0, float(n), n * spu),
                                   RngStream(55, 12))
        via_path = subsample_integer_times(path)
        direct = simulate_observations(params, init, n, spu, RngStream(55, 12))
        np.testing.assert_array_equal(via_path.x, direct.x)


class TestCbiPath:
    def test_deterministic_drift_is_exact(self):
        p = CbiParams(alpha=0.0, b_imm=1.0, beta=0.0,
                      n_meas=JumpMeasure.empty(), p_meas=JumpMeasure.empty())
        path = simulate_cbi_path(p, TimeGrid(0.0, 2.0, 64), RngStream(2, 2))
        assert path.y[-1] == 2.0
        assert path.x is None

    def test_immigration_mean(self):
        # compound Poisson with unit jumps: E Y_t = Y_0 + rate * t
        p = CbiParams(alpha=0.0, b_imm=0.0, beta=0.0,
                      n_meas=unit_jump(1.0), p_meas=JumpMeasure.empty())
        n = 20_000
        vals = np.array([simulate_cbi_path(p, TimeGrid(0.0, 2.0, 128),
                                           derive_stream(106, r)).y[-1]
                         for r in range(n)])
        s = moment_summary(vals)
        assert abs(s.mean - 2.0) <= 4.0 * s.se_mean

    def test_immigration_mean_nonunit_rate_and_size(self):
        # E Y_t = rate * E[size] * t = 2 * 0.5 * 2
        p = CbiParams(alpha=0.0, b_imm=0.0, beta=0.0,
                      n_meas=JumpMeasure.single(2.0, [0.5]),
                      p_meas=JumpMeasure.empty())
        n = 20_000
        vals = np.array([simulate_cbi_path(p, TimeGrid(0.0, 2.0, 128),
                                           derive_stream(109, r)).y[-1]
                         for r in range(n)])
        s = moment_summary(vals)
        assert abs(s.mean - 2.0) <= 4.0 * s.se_mean

    @pytest.mark.parametrize("rate", [1.0, 2.0])
    def test_compensated_branching_is_martingale(self, rate):
        # compensation must hold for non-unit rates too (rate enters the
        # intensity once, not squared)
        p = CbiParams(alpha=0.0, b_imm=0.0, beta=0.0,
                      n_meas=JumpMeasure.empty(), p_meas=unit_jump(rate))
        n = 20_000
        vals = np.array([simulate_cbi_path(p, TimeGrid(0.0, 1.0, 128),
                                           derive_stream(107, r), y0=1.0).y[-1]
                         for r in range(n)])
        s = moment_summary(vals)
        assert abs(s.mean - 1.0) <= 4.0 * s.se_mean

    def test_compensated_branching_mixed_law_martingale(self):
        p = CbiParams(alpha=0.0, b_imm=0.0, beta=0.0,
                      n_meas=JumpMeasure.empty(),
                      p_meas=JumpMeasure(1.5, [[0.5], [2.0]], [0.75, 0.25]))
        n = 20_000
        vals = np.array([simulate_cbi_path(p, TimeGrid(0.0, 1.0, 256),
                                           derive_stream(108, r), y0=1.0).y[-1]
                         for r in range(n)])
        s = moment_summary(vals)
        assert abs(s.mean - 1.0) <= 4.0 * s.se_mean

    def test_negative_rate_rejected(self):
        with pytest.raises(ValueError):
            CbiParams(alpha=0.0, b_imm=0.0, beta=0.0,
                      n_meas=JumpMeasure.single(-1.0, [1.0]),
                      p_meas=JumpMeasure.empty())

    def test_nonnegative_under_strong_downward_drift(self, rng_np):
        for _ in range(200):
            p = CbiParams(alpha=float(rng_np.uniform(0, 1)),
                          b_imm=0.0,
                          beta=float(rng_np.uniform(-4.0, 0.0)),
                          n_meas=JumpMeasure.empty(),
                          p_meas=unit_jump(float(rng_np.uniform(0, 2))))
            path = simulate_cbi_path(p, TimeGrid(0.0, 1.0, 64),
                                     RngStream(3, int(rng_np.integers(1 << 30))),
                                     y0=float(rng_np.uniform(0, 2)))
            assert np.all(path.y >= 0.0)


class TestCsvExport:
    def test_joint_header_and_precision(self):
        grid = TimeGrid(0.0, 1.0, 2)
        path = SamplePath(grid=grid, y=np.array([0.0, 1.0 / 3.0, 2.0]),
                          x=np.array([0.0, -1.0 / 7.0, 4.0]))
        buf = io.StringIO()
        path.write_csv(buf)
        lines = buf.getvalue().strip().split("\n")
        assert lines[0] == "t,Y,X"
        assert lines[1] == "0,0,0"
        assert float(lines[2].split(",")[1]) == 1.0 / 3.0
        assert float(lines[2].split(",")[2]) == -1.0 / 7.0

    def test_y_only_header(self):
        grid = TimeGrid(0.0, 1.0, 1)
        path = SamplePath(grid=grid, y=np.array([0.5, 1.5]))
        buf = io.StringIO()
        path.write_csv(buf)
        assert buf.getvalue().splitlines()[0] == "t,Y"


def test_grid_validation():
    with pytest.raises(ValueError):
        TimeGrid(1.0, 1.0, 4)
    with pytest.raises(ValueError):
        TimeGrid(0.0, 1.0, 0)
    assert TimeGrid(0.0, 2.0, 8).dt == 0.25


def test_sample_path_validation():
    grid = TimeGrid(0.0, 1.0, 2)
    with pytest.raises(ValueError):
        SamplePath(grid=grid, y=np.array([0.0, -0.1, 0.2]))
    with pytest.raises(ValueError):
        SamplePath(grid=grid, y=np.zeros(2))
