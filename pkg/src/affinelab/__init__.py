"""affinelab: simulation and estimation laboratory for the critical
two-dimensional affine diffusion

    dY = (a - b Y) dt + sqrt(Y) dW
    dX = (m - theta X) dt + sqrt(Y) dB,

its drift estimators from unit-spaced observations, their limit laws in
the jointly critical case, and scaling checks for jump-type branching
processes with immigration.
"""

from ._backend import BACKEND_NAME
from .engine import (SamplePath, TimeGrid, cir_transition_sample,
                     simulate_cbi_path, simulate_joint_path,
                     simulate_observations, subsample_integer_times)
from .estimators import (EstimatorOutput, ObservationSeries, clse_gamma_delta,
                         clse_theta_m, lse_theta_known_m, lse_theta_m,
                         theta_m_from_gamma_delta)
from .limits import (LimitFunctionals, limit_theta_m_stats,
                     limit_theta_stat_known_m, m_gap_functional,
                     sample_limit_functionals)
from .params import (AdmissibleParams, CbiParams, Criticality, InitialLaw,
                     JumpMeasure, ModelParams, ValidationReport,
                     classify_criticality, limit_parameters,
                     validate_admissible, validate_condition_c)
from .rng import RngStream, derive_stream, substream
from .scaling import (GENERATOR_TEST_FUNCTIONS, CbiLimit, ScalingExperiment,
                      corollary_limit_params, generator_residual,
                      limit_cir_marginal_sample, run_scaling_experiment,
                      scaled_marginal_sample, self_similarity_check)
from .stats import Ecdf, MomentSummary, ks_two_sample, moment_summary, quantiles

__version__ = "0.1.0"

__all__ = [
    "BACKEND_NAME",
    "__version__",
    # params
    "ModelParams", "InitialLaw", "JumpMeasure", "AdmissibleParams",
    "CbiParams", "Criticality", "ValidationReport",
    "classify_criticality", "validate_condition_c", "validate_admissible",
    "limit_parameters",
    # rng
    "RngStream", "derive_stream", "substream",
    # engine
    "TimeGrid", "SamplePath", "cir_transition_sample", "simulate_joint_path",
    "simulate_observations", "subsample_integer_times", "simulate_cbi_path",
    # estimators
    "ObservationSeries", "EstimatorOutput", "lse_theta_known_m",
    "lse_theta_m", "clse_gamma_delta", "clse_theta_m",
    "theta_m_from_gamma_delta",
    # limits
    "LimitFunctionals", "sample_limit_functionals",
    "limit_theta_stat_known_m", "limit_theta_m_stats", "m_gap_functional",
    # scaling
    "CbiLimit", "corollary_limit_params", "limit_cir_marginal_sample",
    "scaled_marginal_sample", "ScalingExperiment", "run_scaling_experiment",
    "self_similarity_check", "generator_residual", "GENERATOR_TEST_FUNCTIONS",
    # stats
    "Ecdf", "MomentSummary", "ks_two_sample", "moment_summary", "quantiles",
]
