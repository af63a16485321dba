"""Numerical verification of the scaling limit.

Three independent routes:

* scaled marginals of jump-type CBI processes against their exact
  limiting square-root diffusion (Kolmogorov-Smirnov over replicates),
* exact self-similarity of the jointly critical diffusion started at the
  origin (theta^-1 (Y, X)(theta t) equals (Y, X)(t) in law),
* weak-generator residuals: finite-difference semigroup action on a
  fixed catalog of test functions with hand-coded derivatives.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass

import numpy as np

from ._backend import kernels
from ._parallel import parallel_ranges
from .params import CbiParams, InitialLaw, ModelParams
from .rng import RngStream, substream


# ---------------------------------------------------------------------------
# Corollary-style limit of a CBI family
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CbiLimit:
    """Limiting diffusion dY = (a_lim + beta*Y) dt + sqrt(sigma2*Y) dW."""

    a_lim: float
    beta: float
    sigma2: float


def corollary_limit_params(p: CbiParams) -> CbiLimit:
    """Fold the jump measures of a CBI family into its diffusion limit:
    a_lim = b_imm + int u n(du), sigma2 = 2(alpha + int u^2 p(du) / 2)."""
    a_lim = p.b_imm + p.n_first_moment
    sigma2 = 2.0 * (p.alpha + 0.5 * p.p_second_moment)
    return CbiLimit(a_lim=a_lim, beta=p.beta, sigma2=sigma2)


def limit_cir_marginal_sample(limit: CbiLimit, t: float, rng: RngStream,
                              y0: float = 0.0) -> float:
    """Exact marginal draw of the limiting diffusion at time t
    (noncentral chi-square with 4*a_lim/sigma2 degrees of freedom)."""
    if not limit.sigma2 > 0.0:
        raise ValueError("limit volatility must be positive")
    return float(kernels.cir_transition(rng.master_seed, rng.stream_id,
                                        y0, limit.a_lim, -limit.beta,
                                        float(t), limit.sigma2))


def scaled_marginal_sample(p: CbiParams, theta: float, t: float,
                           grid_per_unit: int, rng: RngStream,
                           y0_scaled: float = 0.0) -> float:
    """theta^-1 Y^(theta)(theta t) for the family member at scale theta.

    The family is encoded by beta^(theta) = beta / theta (all other
    parameters fixed), and the member starts at theta * y0_scaled.
    """
    if theta < 1.0:
        raise ValueError("theta must be at least 1")
    if t <= 0.0:
        raise ValueError("t must be positive")
    member = dataclasses.replace(p, beta=p.beta / theta)
    horizon = theta * t
    steps = max(1, round(horizon * grid_per_unit))
    y = np.empty(steps + 1)
    n_vals, n_cum = member.n_meas.sizes_and_cum()
    p_vals, p_cum = member.p_meas.sizes_and_cum()
    kernels.fill_cbi_path(y, rng.master_seed, rng.stream_id,
                          member.b_imm, member.beta, 2.0 * member.alpha,
                          member.n_meas.rate, n_vals, n_cum,
                          member.p_meas.rate, p_vals, p_cum,
                          member.p_meas.mean_jump_size(),
                          theta * y0_scaled, horizon / steps)
    return float(y[-1] / theta)


@dataclass(frozen=True)
class ScalingExperiment:
    cbi: CbiParams
    theta_values: tuple[float, ...]
    t_eval: float
    n_paths: int
    grid_per_unit: int = 32
    y0_scaled: float = 0.0

    def __post_init__(self):
        thetas = tuple(float(v) for v in self.theta_values)
        if not thetas or any(v < 1.0 for v in thetas):
            raise ValueError("theta values must be at least 1")
        if any(b <= a for a, b in zip(thetas, thetas[1:])):
            raise ValueError("theta values must be strictly increasing")
        if self.n_paths < 100:
            raise ValueError("need at least 100 paths")
        object.__setattr__(self, "theta_values", thetas)


@dataclass(frozen=True)
class ScalingReport:
    thetas: tuple[float, ...]
    ks: tuple[float, ...]
    means: tuple[float, ...]
    mean_target: float
    mean_gaps: tuple[float, ...]
    se_means: tuple[float, ...]
    monotone: bool
    limit: CbiLimit
    samples: dict[str, np.ndarray]


def _limit_mean(limit: CbiLimit, t: float, y0: float) -> float:
    if limit.beta == 0.0:
        return y0 + limit.a_lim * t
    ebt = math.exp(limit.beta * t)
    return y0 * ebt + limit.a_lim * (ebt - 1.0) / limit.beta


def run_scaling_experiment(exp: ScalingExperiment, rng: RngStream,
                           threads: int = 1) -> ScalingReport:
    """Scaled marginals per theta against the exact limit marginal.

    Streams: replicate r of theta arm j uses substream (j, r); the limit
    reference sample uses batch len(thetas).  The monotonicity flag allows
    a slack of two joint KS standard-error scales between consecutive
    theta values.
    """
    from .stats import ks_two_sample, moment_summary

    n = exp.n_paths
    thetas = exp.theta_values
    limit = corollary_limit_params(exp.cbi)
    samples: dict[str, np.ndarray] = {}
    for j, theta in enumerate(thetas):
        arr = np.empty(n)

        def task(lo, hi, _j=j, _theta=theta, _arr=arr):
            for r in range(lo, hi):
                _arr[r] = scaled_marginal_sample(exp.cbi, _theta, exp.t_eval,
                                                 exp.grid_per_unit,
                                                 substream(rng, _j, r),
                                                 exp.y0_scaled)

        parallel_ranges(n, threads, task)
        samples[f"scaled_y_theta{theta:g}"] = arr
    ref = np.empty(n)

    def ref_task(lo, hi):
        for r in range(lo, hi):
            ref[r] = limit_cir_marginal_sample(limit, exp.t_eval,
                                               substream(rng, len(thetas), r),
                                               exp.y0_scaled)

    parallel_ranges(n, threads, ref_task)
    samples["limit_y"] = ref

    target = _limit_mean(limit, exp.t_eval, exp.y0_scaled)
    ks, means, gaps, ses = [], [], [], []
    for theta in thetas:
        arr = samples[f"scaled_y_theta{theta:g}"]
        ks.append(ks_two_sample(arr, ref))
        summ = moment_summary(arr)
        means.append(summ.mean)
        gaps.append(summ.mean - target)
        ses.append(summ.se_mean)
    slack = 2.0 * math.sqrt(2.0 / n)
    monotone = all(ks[i + 1] <= ks[i] + slack for i in range(len(ks) - 1))
    return ScalingReport(thetas=thetas, ks=tuple(ks), means=tuple(means),
                         mean_target=target, mean_gaps=tuple(gaps),
                         se_means=tuple(ses), monotone=monotone,
                         limit=limit, samples=samples)


# ---------------------------------------------------------------------------
# Exact self-similarity of the critical diffusion
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SelfSimilarityReport:
    theta_scale: float
    t: float
    n_paths: int
    ks_x: float
    ks_y: float
    samples: dict[str, np.ndarray]


def self_similarity_check(params: ModelParams, init: InitialLaw,
                          theta_scale: float, t: float, n_paths: int,
                          rng: RngStream, steps_per_unit: int = 256,
                          threads: int = 1) -> SelfSimilarityReport:
    """Two-sample KS between {theta^-1 (Y, X)(theta t)} and {(Y, X)(t)}.

    Valid only for the jointly critical model started at the origin; both
    arms use independent streams (batch 0 = base, batch 1 = scaled).
    """
    from .stats import ks_two_sample

    if params.b != 0.0 or params.theta != 0.0:
        raise ValueError("self-similarity requires b = theta = 0")
    if init.y0 != 0.0 or init.x0 != 0.0:
        raise ValueError("self-similarity requires the origin as initial state")
    if theta_scale < 1.0:
        raise ValueError("scale must be at least 1")
    params.require_simulatable()

    base_steps = max(1, round(t * steps_per_unit))
    scaled_steps = max(1, round(theta_scale * t * steps_per_unit))
    dt_base = t / base_steps
    dt_scaled = theta_scale * t / scaled_steps
    y_base = np.empty(n_paths)
    x_base = np.empty(n_paths)
    y_scaled = np.empty(n_paths)
    x_scaled = np.empty(n_paths)

    def base_task(lo, hi):
        ybuf = np.empty(base_steps + 1)
        xbuf = np.empty(base_steps + 1)
        for r in range(lo, hi):
            s = substream(rng, 0, r)
            kernels.fill_joint_path(ybuf, xbuf, s.master_seed, s.stream_id,
                                    params.a, 0.0, params.m, 0.0, 0.0, 0.0,
                                    dt_base, False)
            y_base[r] = ybuf[-1]
            x_base[r] = xbuf[-1]

    def scaled_task(lo, hi):
        ybuf = np.empty(scaled_steps + 1)
        xbuf = np.empty(scaled_steps + 1)
        for r in range(lo, hi):
            s = substream(rng, 1, r)
            kernels.fill_joint_path(ybuf, xbuf, s.master_seed, s.stream_id,
                                    params.a, 0.0, params.m, 0.0, 0.0, 0.0,
                                    dt_scaled, False)
            y_scaled[r] = ybuf[-1] / theta_scale
            x_scaled[r] = xbuf[-1] / theta_scale

    parallel_ranges(n_paths, threads, base_task)
    parallel_ranges(n_paths, threads, scaled_task)
    return SelfSimilarityReport(
        theta_scale=theta_scale, t=t, n_paths=n_paths,
        ks_x=ks_two_sample(x_scaled, x_base),
        ks_y=ks_two_sample(y_scaled, y_base),
        samples={"x_scaled": x_scaled, "x_base": x_base,
                 "y_scaled": y_scaled, "y_base": y_base},
    )


# ---------------------------------------------------------------------------
# Weak-generator residuals
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TestFunction:
    """Catalog entry with hand-coded derivatives.

    ``generator_value`` evaluates (a - b x1) f_1 + (m - theta x2) f_2
    + x1 (f_11 + f_22)/2 at a point.
    """

    name: str
    fid: int
    f: callable
    f1: callable
    f2: callable
    f11: callable
    f22: callable

    def generator_value(self, params: ModelParams, x1: float, x2: float) -> float:
        return ((params.a - params.b * x1) * self.f1(x1, x2)
                + (params.m - params.theta * x2) * self.f2(x1, x2)
                + 0.5 * x1 * (self.f11(x1, x2) + self.f22(x1, x2)))


def _gauss(x1, x2):
    return math.exp(-x1 - x2 * x2)


GENERATOR_TEST_FUNCTIONS: dict[str, TestFunction] = {
    "const": TestFunction(
        "const", 0,
        f=lambda x1, x2: 1.0,
        f1=lambda x1, x2: 0.0, f2=lambda x1, x2: 0.0,
        f11=lambda x1, x2: 0.0, f22=lambda x1, x2: 0.0),
    "x2": TestFunction(
        "x2", 1,
        f=lambda x1, x2: x2,
        f1=lambda x1, x2: 0.0, f2=lambda x1, x2: 1.0,
        f11=lambda x1, x2: 0.0, f22=lambda x1, x2: 0.0),
    "x2_squared": TestFunction(
        "x2_squared", 2,
        f=lambda x1, x2: x2 * x2,
        f1=lambda x1, x2: 0.0, f2=lambda x1, x2: 2.0 * x2,
        f11=lambda x1, x2: 0.0, f22=lambda x1, x2: 2.0),
    "gauss_window": TestFunction(
        "gauss_window", 3,
        f=_gauss,
        f1=lambda x1, x2: -_gauss(x1, x2),
        f2=lambda x1, x2: -2.0 * x2 * _gauss(x1, x2),
        f11=lambda x1, x2: _gauss(x1, x2),
        f22=lambda x1, x2: (4.0 * x2 * x2 - 2.0) * _gauss(x1, x2)),
}


def generator_residual(params: ModelParams, x: tuple[float, float],
                       f_name: str, h: float, n_paths: int,
                       rng: RngStream,
                       variance_scheme: str = "left") -> tuple[float, float]:
    """Finite-difference generator residual at a point.

    residual = [E_hat f(Z_h | Z_0 = x) - f(x)] / h - (A f)(x), where the
    Monte-Carlo mean runs over ``n_paths`` single exact-Y/Gaussian-X
    steps.  Returns (residual, standard error).  The whole batch draws
    from one stream; it is an inner Monte-Carlo loop, not harness
    replication.
    """
    if f_name not in GENERATOR_TEST_FUNCTIONS:
        raise ValueError(f"unknown test function {f_name!r}; "
                         f"catalog: {sorted(GENERATOR_TEST_FUNCTIONS)}")
    if not h > 0.0:
        raise ValueError("h must be positive")
    if n_paths < 2:
        raise ValueError("need at least two paths")
    x1, x2 = float(x[0]), float(x[1])
    if x1 < 0.0:
        raise ValueError("first coordinate must be nonnegative")
    params.require_simulatable()
    entry = GENERATOR_TEST_FUNCTIONS[f_name]
    trapezoid = variance_scheme == "trapezoid"
    sum_f, sum_f2 = kernels.generator_step_sums(
        rng.master_seed, rng.stream_id, int(n_paths), entry.fid,
        params.a, params.b, params.m, params.theta, x1, x2, float(h),
        trapezoid)
    n = float(n_paths)
    mean_f = sum_f / n
    var_f = max(sum_f2 - n * mean_f * mean_f, 0.0) / (n - 1.0)
    residual = (mean_f - entry.f(x1, x2)) / h - entry.generator_value(params, x1, x2)
    se = math.sqrt(var_f / n) / h
    return residual, se


__all__ = [
    "CbiLimit",
    "corollary_limit_params",
    "limit_cir_marginal_sample",
    "scaled_marginal_sample",
    "ScalingExperiment",
    "ScalingReport",
    "run_scaling_experiment",
    "SelfSimilarityReport",
    "self_similarity_check",
    "TestFunction",
    "GENERATOR_TEST_FUNCTIONS",
    "generator_residual",
]
