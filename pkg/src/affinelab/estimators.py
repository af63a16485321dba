"""Drift estimators from unit-spaced observations of the second coordinate.

Three closed-form estimators are implemented, all exact rational
expressions of the observations X_0, ..., X_n:

* least squares for theta with m known,
* joint least squares for (theta, m),
* conditional least squares for (gamma, delta) = (e^{-theta},
  m * integral_0^1 e^{-theta v} dv), inverted back to (theta, m).

Degeneracy of the defining denominator is reported through diagnostics
instead of raising: the degenerate event has probability zero for the
continuous model, but finite-precision near-zeros must reach the caller.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

DEGENERACY_EPS = 1e-300   # exact-zero detection only


@dataclass(frozen=True)
class ObservationSeries:
    """Observations X_0..X_n at unit time spacing; n = number of increments."""

    x: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.x, dtype=np.float64).ravel()
        if arr.size < 2:
            raise ValueError("need at least two observations")
        if not np.all(np.isfinite(arr)):
            raise ValueError("observations must be finite")
        object.__setattr__(self, "x", arr)

    @property
    def n(self) -> int:
        return self.x.size - 1


@dataclass(frozen=True)
class EstimatorOutput:
    kind: str
    values: dict[str, float] = field(default_factory=dict)
    diagnostics: dict[str, float | bool] = field(default_factory=dict)

    @property
    def degenerate(self) -> bool:
        return bool(self.diagnostics.get("degenerate", False))

    @property
    def gamma_nonpositive(self) -> bool:
        return bool(self.diagnostics.get("gamma_nonpositive", False))


def _require_n2(obs: ObservationSeries):
    if obs.n < 2:
        raise ValueError("estimators require at least two increments")


def _centered(x: np.ndarray):
    # Centered (regression-form) evaluation of the shared denominator
    # D = n sum X_{i-1}^2 - (sum X_{i-1})^2 = n sum (X_{i-1} - mean)^2 and
    # of the slope numerators.  Algebraically identical to the raw second
    # moments but free of their catastrophic cancellation for series with a
    # large mean; numpy reductions add pairwise compensation on top.
    xp = x[:-1]
    n = xp.size
    xbar = float(np.mean(xp))
    cp = xp - xbar
    sxx_c = float(np.sum(cp * cp))
    return n, xbar, cp, sxx_c


def _diag(denominator: float, degenerate: bool, gamma_nonpositive: bool = False):
    return {
        "denominator": denominator,
        "degenerate": degenerate,
        "gamma_nonpositive": gamma_nonpositive,
    }


def lse_theta_known_m(obs: ObservationSeries, m: float) -> EstimatorOutput:
    """theta_tilde = -[sum (X_i - X_{i-1}) X_{i-1} - m sum X_{i-1}] / sum X_{i-1}^2."""
    _require_n2(obs)
    xp = obs.x[:-1]
    dx = np.diff(obs.x)
    s2 = float(np.sum(xp * xp))
    if abs(s2) <= DEGENERACY_EPS:
        return EstimatorOutput("lse_theta_known_m", {}, _diag(s2, True))
    # fused single sum: no difference of two large totals
    theta = -float(np.sum((dx - m) * xp)) / s2
    return EstimatorOutput("lse_theta_known_m", {"theta": theta}, _diag(s2, False))


def lse_theta_m(obs: ObservationSeries) -> EstimatorOutput:
    """Joint least squares; denominator D = n sum X_{i-1}^2 - (sum X_{i-1})^2,
    zero exactly when X_0 = ... = X_{n-1}."""
    _require_n2(obs)
    n, xbar, cp, sxx_c = _centered(obs.x)
    d = n * sxx_c
    if abs(d) <= DEGENERACY_EPS:
        return EstimatorOutput("lse_theta_m", {}, _diag(d, True))
    dx = np.diff(obs.x)
    dbar = float(np.mean(dx))
    theta = -float(np.sum((dx - dbar) * cp)) / sxx_c
    m = dbar + theta * xbar
    return EstimatorOutput("lse_theta_m", {"theta": theta, "m": m}, _diag(d, False))


def clse_gamma_delta(obs: ObservationSeries) -> EstimatorOutput:
    """Conditional least squares for the one-step regression
    X_i ~ gamma X_{i-1} + delta; same denominator as the joint LSE."""
    _require_n2(obs)
    n, xbar, cp, sxx_c = _centered(obs.x)
    d = n * sxx_c
    if abs(d) <= DEGENERACY_EPS:
        return EstimatorOutput("clse_gamma_delta", {}, _diag(d, True))
    x1 = obs.x[1:]
    x1bar = float(np.mean(x1))
    gamma = float(np.sum((x1 - x1bar) * cp)) / sxx_c
    delta = x1bar - gamma * xbar
    return EstimatorOutput("clse_gamma_delta",
                           {"gamma": gamma, "delta": delta}, _diag(d, False))


def theta_m_from_gamma_delta(gamma: float, delta: float) -> tuple[float | None, float | None, bool]:
    """Invert (gamma, delta) to (theta, m); returns (theta, m, gamma_nonpositive).

    theta = -log(gamma) needs gamma > 0; the nonpositive case is flagged,
    never clipped.  m = delta * theta / (1 - e^{-theta}), with the theta = 0
    limit m = delta.
    """
    if not gamma > 0.0:
        return None, None, True
    theta = -math.log(gamma)
    if theta == 0.0:
        return 0.0, delta, False
    m = delta * theta / -math.expm1(-theta)
    return theta, m, False


def clse_theta_m(obs: ObservationSeries) -> EstimatorOutput:
    """Conditional least squares for (theta, m), via (gamma, delta)."""
    base = clse_gamma_delta(obs)
    if base.degenerate:
        return EstimatorOutput("clse_theta_m", {}, dict(base.diagnostics))
    gamma = base.values["gamma"]
    delta = base.values["delta"]
    theta, m, bad_gamma = theta_m_from_gamma_delta(gamma, delta)
    values = {"gamma": gamma, "delta": delta}
    if not bad_gamma:
        values["theta"] = theta
        values["m"] = m
    return EstimatorOutput(
        "clse_theta_m", values,
        _diag(base.diagnostics["denominator"], False, bad_gamma),
    )


__all__ = [
    "DEGENERACY_EPS",
    "ObservationSeries",
    "EstimatorOutput",
    "lse_theta_known_m",
    "lse_theta_m",
    "clse_gamma_delta",
    "clse_theta_m",
    "theta_m_from_gamma_delta",
]
