import numpy as np
import pytest

from affinelab.params import (Criticality, CbiParams, InitialLaw, JumpMeasure,
                              ModelParams, classify_criticality,
                              limit_parameters, validate_admissible,
                              validate_condition_c)


class TestClassifyCriticality:
    def test_subcritical(self):
        assert classify_criticality(1.0, 1.0) is Criticality.SUBCRITICAL

    def test_critical_axis(self):
        assert classify_criticality(0.0, 2.0) is Criticality.CRITICAL
        assert classify_criticality(3.0, 0.0) is Criticality.CRITICAL
        assert classify_criticality(0.0, 0.0) is Criticality.CRITICAL

    def test_supercritical(self):
        assert classify_criticality(-1.0, 5.0) is Criticality.SUPERCRITICAL
        assert classify_criticality(2.0, -0.5) is Criticality.SUPERCRITICAL

    def test_partitions_plane(self, rng_np):
        # exactly one class, consistent with the defining predicates
        draws = rng_np.normal(size=(10_000, 2))
        zero_mask = rng_np.random(size=(10_000, 2)) < 0.1
        draws[zero_mask] = 0.0
        for b, theta in draws:
            cls = classify_criticality(b, theta)
            is_sub = b > 0 and theta > 0
            is_super = b < 0 or theta < 0
            is_crit = (b == 0 and theta >= 0) or (b >= 0 and theta == 0)
            assert is_sub + is_super + is_crit == 1
            expected = (Criticality.SUBCRITICAL if is_sub
                        else Criticality.SUPERCRITICAL if is_super
                        else Criticality.CRITICAL)
            assert cls is expected


class TestConditionC:
    def test_satisfied(self):
        rep = validate_condition_c(ModelParams(1.0, 0.0, 2.0, 0.0),
                                   InitialLaw(0.5, 0.0))
        assert rep.ok and rep.violations == ()

    def test_theta_nonzero(self):
        rep = validate_condition_c(ModelParams(1.0, 0.0, 2.0, 1.0),
                                   InitialLaw(0.5, 0.0))
        assert not rep.ok
        assert "theta nonzero" in rep.violations

    def test_a_not_positive(self):
        rep = validate_condition_c(ModelParams(0.0, 0.0, 2.0, 0.0),
                                   InitialLaw(0.5, 0.0))
        assert not rep.ok
        assert "a not strictly positive" in rep.violations

    def test_b_nonzero(self):
        rep = validate_condition_c(ModelParams(1.0, 0.5, 2.0, 0.0),
                                   InitialLaw(0.0, 0.0))
        assert rep.violations == ("b nonzero",)


class TestJumpMeasure:
    def test_rejects_negative_rate(self):
        with pytest.raises(ValueError):
            JumpMeasure.single(-1.0, [1.0])

    def test_rejects_bad_probabilities(self):
        with pytest.raises(ValueError):
            JumpMeasure(1.0, [[1.0], [2.0]], [0.6, 0.6])

    def test_rejects_origin_support(self):
        with pytest.raises(ValueError):
            JumpMeasure(1.0, [[0.0, 0.0]], [1.0])

    def test_rejects_negative_first_coordinate(self):
        with pytest.raises(ValueError):
            JumpMeasure(1.0, [[-0.5, 1.0]], [1.0])

    def test_integrals(self):
        meas = JumpMeasure(2.0, [[0.5, 0.0], [1.0, 1.0]], [0.25, 0.75])
        assert meas.first_coordinate_moment() == pytest.approx(2 * (0.25 * 0.5 + 0.75 * 1.0))
        outer = meas.outer_moment()
        assert outer[0, 0] == pytest.approx(2 * (0.25 * 0.25 + 0.75 * 1.0))
        assert outer[1, 1] == pytest.approx(2 * 0.75)

    def test_sizes_and_cum_top_is_one(self):
        meas = JumpMeasure(1.0, [[0.5], [1.5], [2.5]], [0.3, 0.3, 0.4])
        vals, cum = meas.sizes_and_cum()
        assert cum[-1] == 1.0
        np.testing.assert_allclose(vals, [0.5, 1.5, 2.5])

    def test_mean_jump_size_is_not_rate_weighted(self):
        meas = JumpMeasure(3.0, [[0.5], [1.5]], [0.5, 0.5])
        assert meas.mean_jump_size() == 1.0
        assert meas.first_coordinate_moment() == 3.0
        assert meas.size_second_moment() == pytest.approx(3.0 * (0.125 + 1.125) * 2 / 2)


class TestValidateAdmissible:
    def test_diffusion_tuple_is_admissible(self):
        rep = validate_admissible(ModelParams(1.0, 0.0, 2.0, 0.0).to_admissible())
        assert rep.ok

    def test_nonzero_upper_left_constant_diffusion(self):
        p = ModelParams(1.0, 0.0, 2.0, 0.0).to_admissible()
        bad = np.array([[1.0, 0.0], [0.0, 0.0]])
        rep = validate_admissible(
            type(p)(a_mat=bad, alpha=p.alpha, b_vec=p.b_vec, beta=p.beta,
                    m_meas=p.m_meas, mu_meas=p.mu_meas))
        assert any("a_{1,1}=0" in v for v in rep.violations)

    def test_beta_first_row_constraint(self):
        p = ModelParams(1.0, 0.0, 2.0, 0.0).to_admissible()
        bad = np.array([[0.0, 1.0], [0.0, 0.0]])
        rep = validate_admissible(
            type(p)(a_mat=p.a_mat, alpha=p.alpha, b_vec=p.b_vec, beta=bad,
                    m_meas=p.m_meas, mu_meas=p.mu_meas))
        assert any("(iv)" in v for v in rep.violations)

    def test_negative_alpha_flagged(self):
        p = ModelParams(1.0, 0.0, 2.0, 0.0).to_admissible()
        rep = validate_admissible(
            type(p)(a_mat=p.a_mat, alpha=-np.eye(2), b_vec=p.b_vec, beta=p.beta,
                    m_meas=p.m_meas, mu_meas=p.mu_meas))
        assert any("(ii)" in v for v in rep.violations)

    def test_dimension_mismatch_raises(self):
        p = ModelParams(1.0, 0.0, 2.0, 0.0).to_admissible()
        with pytest.raises(ValueError, match="dimension"):
            validate_admissible(
                type(p)(a_mat=np.zeros((3, 3)), alpha=p.alpha, b_vec=p.b_vec,
                        beta=p.beta, m_meas=p.m_meas, mu_meas=p.mu_meas))


class TestLimitParameters:
    def test_mu_folds_into_alpha(self):
        mu = JumpMeasure.single(2.0, [0.5, 0.0])
        out = limit_parameters(np.zeros((2, 2)), np.array([[0.1, 0.0], [0.0, 0.0]]),
                               [1.0, 0.0], np.zeros((2, 2)),
                               JumpMeasure.empty(2), mu)
        assert out.alpha[0, 0] == pytest.approx(0.35, rel=1e-14)

    def test_m_folds_into_drift(self):
        m = JumpMeasure.single(1.0, [1.0, 0.0])
        out = limit_parameters(np.zeros((2, 2)), 0.5 * np.eye(2),
                               [0.3, 2.0], np.zeros((2, 2)),
                               m, JumpMeasure.empty(2))
        assert out.b_vec[0] == pytest.approx(1.3, rel=1e-14)
        assert out.b_vec[1] == 2.0

    def test_empty_measures_are_identity(self):
        alpha = 0.5 * np.eye(2)
        out = limit_parameters(np.zeros((2, 2)), alpha, [1.0, 2.0],
                               np.zeros((2, 2)),
                               JumpMeasure.empty(2), JumpMeasure.empty(2))
        np.testing.assert_array_equal(out.alpha, alpha)
        np.testing.assert_array_equal(out.b_vec, [1.0, 2.0])

    def test_output_is_admissible(self, rng_np):
        for _ in range(25):
            root = rng_np.normal(size=(2, 2))
            alpha = root.T @ root
            mu = JumpMeasure(rng_np.uniform(0, 3),
                             rng_np.uniform(0.1, 2.0, size=(3, 2)),
                             np.full(3, 1.0 / 3.0))
            m = JumpMeasure(rng_np.uniform(0, 3),
                            rng_np.uniform(0.1, 2.0, size=(2, 2)),
                            np.full(2, 0.5))
            out = limit_parameters(np.zeros((2, 2)), alpha,
                                   [rng_np.uniform(0, 2), rng_np.normal()],
                                   np.diag(rng_np.normal(size=2)), m, mu)
            assert validate_admissible(out).ok

    def test_alpha_gain_is_psd(self, rng_np):
        alpha = 0.5 * np.eye(2)
        mu = JumpMeasure(1.7, rng_np.uniform(0.0, 2.0, size=(4, 2)) + 0.01,
                         np.full(4, 0.25))
        out = limit_parameters(np.zeros((2, 2)), alpha, [1.0, 0.0],
                               np.zeros((2, 2)), JumpMeasure.empty(2), mu)
        gain = out.alpha - alpha
        for _ in range(100):
            z = rng_np.normal(size=2)
            assert z @ gain @ z >= -1e-12


class TestCbiParams:
    def test_stored_moments(self):
        cbi = CbiParams(alpha=0.1, b_imm=0.5, beta=-0.2,
                        n_meas=JumpMeasure(2.0, [[0.5], [1.0]], [0.5, 0.5]),
                        p_meas=JumpMeasure.single(3.0, [2.0]))
        assert cbi.n_first_moment == pytest.approx(2.0 * 0.75)
        assert cbi.p_second_moment == pytest.approx(3.0 * 4.0)

    def test_negative_alpha_rejected(self):
        with pytest.raises(ValueError):
            CbiParams(alpha=-0.1, b_imm=0.0, beta=0.0,
                      n_meas=JumpMeasure.empty(), p_meas=JumpMeasure.empty())
