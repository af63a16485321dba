import math

import numpy as np
import pytest

from affinelab.engine import simulate_observations
from affinelab.estimators import (ObservationSeries, clse_gamma_delta,
                                  clse_theta_m, lse_theta_known_m, lse_theta_m,
                                  theta_m_from_gamma_delta)
from affinelab.params import InitialLaw, ModelParams
from affinelab.rng import derive_stream


def series(values) -> ObservationSeries:
    return ObservationSeries(np.asarray(values, dtype=float))


class TestLseThetaKnownM:
    def test_flat_then_constant(self):
        out = lse_theta_known_m(series([0, 1, 1]), m=0.0)
        assert out.values["theta"] == 0.0

    def test_linear_ramp(self):
        out = lse_theta_known_m(series([0, 1, 2]), m=0.0)
        assert out.values["theta"] == -1.0

    def test_degenerate_zero_series(self):
        out = lse_theta_known_m(series([0, 0, 0]), m=0.0)
        assert out.degenerate and "theta" not in out.values
        assert out.diagnostics["denominator"] == 0.0

    def test_shift_covariance_in_m(self, rng_np):
        for _ in range(200):
            x = rng_np.normal(size=rng_np.integers(3, 40))
            obs = series(x)
            m = float(rng_np.normal(scale=3.0))
            t_m = lse_theta_known_m(obs, m).values["theta"]
            t_0 = lse_theta_known_m(obs, 0.0).values["theta"]
            xp = x[:-1]
            expected = m * float(np.sum(xp)) / float(np.sum(xp * xp))
            assert t_m - t_0 == pytest.approx(expected, rel=1e-12, abs=1e-12)

    def test_requires_two_increments(self):
        with pytest.raises(ValueError):
            lse_theta_known_m(series([0.0, 1.0]), m=0.0)


class TestLseThetaM:
    def test_pure_drift_ramp(self):
        out = lse_theta_m(series([0, 1, 2]))
        assert out.values["theta"] == 0.0
        assert out.values["m"] == 1.0

    def test_constant_series_degenerate(self):
        for c in (0.0, 5.0, -2.5):
            out = lse_theta_m(series([c, c, c]))
            assert out.degenerate

    def test_step_series(self):
        out = lse_theta_m(series([0, 2, 2]))
        assert out.diagnostics["denominator"] == 4.0
        assert out.values["theta"] == 1.0
        assert out.values["m"] == 2.0


class TestClseGammaDelta:
    def test_linear_ramp(self):
        out = clse_gamma_delta(series([0, 1, 2]))
        assert out.values["gamma"] == 1.0
        assert out.values["delta"] == 1.0

    def test_step_series(self):
        out = clse_gamma_delta(series([0, 2, 2]))
        assert out.values["gamma"] == 0.0
        assert out.values["delta"] == 2.0

    def test_constant_series_degenerate(self):
        assert clse_gamma_delta(series([5, 5, 5])).degenerate


class TestClseThetaM:
    def test_identity_point(self):
        theta, m, bad = theta_m_from_gamma_delta(1.0, 1.0)
        assert (theta, m, bad) == (0.0, 1.0, False)

    def test_exponential_inversion(self):
        theta, m, bad = theta_m_from_gamma_delta(math.exp(-2.0), 1.0)
        assert not bad
        assert theta == pytest.approx(2.0, rel=1e-14)
        assert m == pytest.approx(2.0 / (1.0 - math.exp(-2.0)), rel=1e-12)
        assert m == pytest.approx(2.3130352854993312, rel=1e-9)

    def test_nonpositive_gamma_flagged(self):
        theta, m, bad = theta_m_from_gamma_delta(-0.1, 1.0)
        assert bad and theta is None and m is None

    def test_full_pipeline_flags(self):
        # X = [0, 2, 2] gives gamma = 0, which has no log
        out = clse_theta_m(series([0, 2, 2]))
        assert out.gamma_nonpositive
        assert "theta" not in out.values
        out2 = clse_theta_m(series([0, 1, 2]))
        assert out2.values["theta"] == 0.0
        assert out2.values["m"] == 1.0


class TestIdentities:
    def test_discrete_ito_identity(self, rng_np):
        # sum (X_i - X_{i-1}) X_{i-1} = (X_n^2 - X_0^2 - sum (X_i - X_{i-1})^2)/2
        for _ in range(10_000):
            n = int(rng_np.integers(2, 30))
            x = rng_np.normal(loc=rng_np.uniform(-10, 10), scale=2.0, size=n + 1)
            lhs = float(np.sum(np.diff(x) * x[:-1]))
            rhs = 0.5 * (x[-1] ** 2 - x[0] ** 2 - float(np.sum(np.diff(x) ** 2)))
            scale = max(abs(lhs), abs(rhs), 1.0)
            assert abs(lhs - rhs) <= 1e-10 * scale

    def test_clse_lse_link(self, rng_np):
        # gamma + theta_lse = 1 and delta = m_lse: identical rational functions
        checked = 0
        while checked < 2000:
            n = int(rng_np.integers(2, 50))
            x = rng_np.normal(loc=rng_np.uniform(-5, 5), scale=1.5, size=n + 1)
            obs = series(x)
            joint = lse_theta_m(obs)
            reg = clse_gamma_delta(obs)
            if joint.degenerate or reg.degenerate:
                continue
            checked += 1
            assert reg.values["gamma"] + joint.values["theta"] == pytest.approx(
                1.0, rel=1e-10, abs=1e-10)
            scale = max(abs(reg.values["delta"]), 1.0)
            assert abs(reg.values["delta"] - joint.values["m"]) <= 1e-10 * scale


class TestConsistencyAtCriticality:
    def test_median_theta_shrinks(self):
        # all three estimators concentrate at theta = 0 like O(1/n)
        n = 2000
        n_series = 500
        params = ModelParams(1.0, 0.0, 1.0, 0.0)
        init = InitialLaw(0.0, 0.0)
        t_known = np.empty(n_series)
        t_lse = np.empty(n_series)
        t_clse = np.empty(n_series)
        for r in range(n_series):
            obs = simulate_observations(params, init, n, 8, derive_stream(515, r))
            t_known[r] = lse_theta_known_m(obs, 1.0).values["theta"]
            t_lse[r] = lse_theta_m(obs).values["theta"]
            t_clse[r] = clse_theta_m(obs).values["theta"]
        bound = 10.0 / n
        assert np.median(np.abs(t_known)) <= bound
        assert np.median(np.abs(t_lse)) <= bound
        assert np.median(np.abs(t_clse)) <= bound


def test_observation_series_validation():
    with pytest.raises(ValueError):
        ObservationSeries(np.array([1.0]))
    with pytest.raises(ValueError):
        ObservationSeries(np.array([1.0, np.nan, 2.0]))
    assert series([5.0, 7.0]).n == 1
