"""Sampling of the limit diffusion's path functionals and the limit
statistics of the three estimators.

Under joint criticality the scaled estimators converge to rational
functions of the quintuple

    (int_0^1 X dt, int_0^1 X^2 dt, X_1, int_0^1 Y dt, int_0^1 X dX)

of the limit diffusion dY = a dt + sqrt(Y) dW, dX = m dt + sqrt(Y) dB
started at (0, 0).  The stochastic integral is never summed directly:
since X_0 = 0, Ito gives int X dX = (X_1^2 - int Y dt) / 2 exactly in
law, which removes the dominant discretization error.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._backend import kernels
from .rng import RngStream


@dataclass(frozen=True)
class LimitFunctionals:
    int_x: float
    int_x2: float
    x1: float
    int_y: float
    int_xdx: float

    @staticmethod
    def from_row(row) -> "LimitFunctionals":
        return LimitFunctionals(*(float(v) for v in row))


def sample_limit_functionals(a: float, m: float, steps: int,
                             rng: RngStream) -> LimitFunctionals:
    """One replicate of the limit functionals on a grid of ``steps`` points.

    Y advances by exact transitions from 0 (a = 0 is an accepted degenerate
    hook: the whole path stays 0 and X is the deterministic drift); X by
    left-endpoint Gaussian steps; time integrals are left Riemann sums.
    """
    if a < 0.0:
        raise ValueError("a must be nonnegative")
    if steps < 2:
        raise ValueError("need at least two steps")
    out = np.empty(5)
    kernels.fill_limit_functionals(out, rng.master_seed, rng.stream_id,
                                   float(a), float(m), int(steps))
    return LimitFunctionals.from_row(out)


def limit_theta_stat_known_m(f: LimitFunctionals, m: float) -> float:
    """Limit in law of n * (LSE of theta with m known):
    -(int X dX - m int X dt) / int X^2 dt."""
    if not f.int_x2 > 0.0:
        raise ValueError("int_x2 must be positive (probability-zero event)")
    return -(f.int_xdx - m * f.int_x) / f.int_x2


def limit_theta_m_stats(f: LimitFunctionals) -> tuple[float, float]:
    """Limits in law of (n * joint-LSE theta, joint-LSE m); identical for
    the conditional least squares pair."""
    denom = f.int_x2 - f.int_x * f.int_x
    if not denom > 0.0:
        raise ValueError("centered second moment must be positive "
                         "(probability-zero event)")
    theta = -(f.int_xdx - f.x1 * f.int_x) / denom
    m = (f.x1 * f.int_x2 - f.int_x * f.int_xdx) / denom
    return theta, m


def m_gap_functional(f: LimitFunctionals, m: float) -> float:
    """Numerator of the limiting gap (m-estimator limit) - m:

        J = int X^2 dt * (X_1 - m) - int X dt * (int X dX - m int X dt).

    Its mean is m*a/6, nonzero whenever m != 0, and its second moment is
    strictly positive at m = 0 - the reason the m estimators are not
    weakly consistent.
    """
    return f.int_x2 * (f.x1 - m) - f.int_x * (f.int_xdx - m * f.int_x)


__all__ = [
    "LimitFunctionals",
    "sample_limit_functionals",
    "limit_theta_stat_known_m",
    "limit_theta_m_stats",
    "m_gap_functional",
]
