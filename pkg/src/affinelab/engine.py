"""Path simulation for the joint diffusion and for jump-type CBI processes.

The Y coordinate always advances by its exact transition law (noncentral
chi-square realized as a Poisson-mixed gamma), which removes all
Y-discretization bias.  X is conditionally Gaussian given Y and advances
per grid step with an integrated-variance proxy (left endpoint by
default, trapezoid behind a flag).

Every operation is a pure function of its inputs including the
:class:`~affinelab.rng.RngStream`; concurrent callers only need distinct
streams.
"""

from __future__ import annotations

import io
from dataclasses import dataclass

import numpy as np

from ._backend import kernels
from .estimators import ObservationSeries
from .params import CbiParams, InitialLaw, ModelParams
from .rng import RngStream

VARIANCE_SCHEMES = ("left", "trapezoid")


@dataclass(frozen=True)
class TimeGrid:
    t0: float
    t1: float
    steps: int

    def __post_init__(self):
        if not self.t1 > self.t0:
            raise ValueError("grid must have t1 > t0")
        if int(self.steps) < 1:
            raise ValueError("grid needs at least one step")
        object.__setattr__(self, "steps", int(self.steps))

    @property
    def dt(self) -> float:
        return (self.t1 - self.t0) / self.steps

    def times(self) -> np.ndarray:
        return self.t0 + self.dt * np.arange(self.steps + 1)


@dataclass(frozen=True)
class SamplePath:
    """Grid-aligned path; ``x`` is None for Y-only processes."""

    grid: TimeGrid
    y: np.ndarray
    x: np.ndarray | None = None

    def __post_init__(self):
        y = np.asarray(self.y, dtype=np.float64)
        if y.shape != (self.grid.steps + 1,):
            raise ValueError("y must have one value per grid point")
        if np.any(y < 0.0):
            raise ValueError("y must be nonnegative")
        object.__setattr__(self, "y", y)
        if self.x is not None:
            x = np.asarray(self.x, dtype=np.float64)
            if x.shape != y.shape:
                raise ValueError("x must align with the grid")
            object.__setattr__(self, "x", x)

    def write_csv(self, stream: io.TextIOBase):
        """CSV with header t,Y[,X] at full double precision."""
        t = self.grid.times()
        if self.x is None:
            stream.write("t,Y\n")
            for k in range(len(t)):
                stream.write(f"{t[k]:.17g},{self.y[k]:.17g}\n")
        else:
            stream.write("t,Y,X\n")
            for k in range(len(t)):
                stream.write(f"{t[k]:.17g},{self.y[k]:.17g},{self.x[k]:.17g}\n")


def _check_scheme(variance_scheme: str) -> bool:
    if variance_scheme not in VARIANCE_SCHEMES:
        raise ValueError(f"variance_scheme must be one of {VARIANCE_SCHEMES}")
    return variance_scheme == "trapezoid"


def cir_transition_sample(y0: float, a: float, b: float, dt: float,
                          rng: RngStream) -> float:
    """One draw from the exact transition over a step of length dt.

    The law is a scaled noncentral chi-square: degrees of freedom 4a,
    c = 4b/(1 - e^{-b dt}) (4/dt at b = 0), noncentrality c y0 e^{-b dt},
    value chi'^2 / c.
    """
    if not a > 0.0:
        raise ValueError("immigration drift must be positive")
    if y0 < 0.0:
        raise ValueError("y0 must be nonnegative")
    if dt < 0.0:
        raise ValueError("dt must be nonnegative")
    return float(kernels.cir_transition(rng.master_seed, rng.stream_id,
                                        y0, a, b, dt, 1.0))


def simulate_joint_path(params: ModelParams, init: InitialLaw, grid: TimeGrid,
                        rng: RngStream, variance_scheme: str = "left",
                        allow_zero_immigration: bool = False) -> SamplePath:
    """Simulate (Y, X) on the grid; exact Y transitions, Gaussian X steps.

    ``allow_zero_immigration`` admits the degenerate a = 0 test hook under
    which Y started at 0 stays 0.
    """
    trapezoid = _check_scheme(variance_scheme)
    if not allow_zero_immigration:
        params.require_simulatable()
    elif params.a < 0.0:
        raise ValueError("immigration drift must be nonnegative")
    y = np.empty(grid.steps + 1)
    x = np.empty(grid.steps + 1)
    kernels.fill_joint_path(y, x, rng.master_seed, rng.stream_id,
                            params.a, params.b, params.m, params.theta,
                            init.y0, init.x0, grid.dt, trapezoid)
    return SamplePath(grid=grid, y=y, x=x)


def simulate_observations(params: ModelParams, init: InitialLaw, n: int,
                          steps_per_unit: int, rng: RngStream,
                          variance_scheme: str = "left") -> ObservationSeries:
    """X at unit times 0..n, skipping path storage.

    Bit-identical to ``subsample_integer_times(simulate_joint_path(...))``
    on the grid [0, n] with n * steps_per_unit steps.
    """
    trapezoid = _check_scheme(variance_scheme)
    params.require_simulatable()
    if n < 1:
        raise ValueError("need at least one unit interval")
    if steps_per_unit < 1:
        raise ValueError("steps_per_unit must be positive")
    obs = np.empty(n + 1)
    kernels.fill_observations(obs, rng.master_seed, rng.stream_id,
                              params.a, params.b, params.m, params.theta,
                              init.y0, init.x0, int(steps_per_unit), trapezoid)
    return ObservationSeries(obs)


def subsample_integer_times(path: SamplePath) -> ObservationSeries:
    """X at t = 0, 1, ..., n for a path on [0, n]."""
    if path.x is None:
        raise ValueError("need a joint path with an X coordinate")
    g = path.grid
    n = round(g.t1 - g.t0)
    if abs((g.t1 - g.t0) - n) > 1e-12 or n < 1:
        raise ValueError("grid must span an integer number of unit intervals")
    if g.steps % n != 0:
        raise ValueError("steps must be divisible by the number of unit intervals")
    stride = g.steps // n
    return ObservationSeries(path.x[::stride].copy())


def simulate_cbi_path(p: CbiParams, grid: TimeGrid, rng: RngStream,
                      y0: float = 0.0) -> SamplePath:
    """Euler full-truncation path of the finite-activity CBI process.

    Between jumps Y follows dY = (b_imm + beta Y) dt + sqrt(2 alpha Y) dW;
    immigration jumps arrive at rate n_meas.rate, branching jumps at the
    left-frozen intensity Y_k * p_meas.rate with drift compensation
    -Y_k * p_meas.rate * E[size] dt.  Y >= 0 enforced by truncation.
    """
    if y0 < 0.0:
        raise ValueError("y0 must be nonnegative")
    y = np.empty(grid.steps + 1)
    n_vals, n_cum = p.n_meas.sizes_and_cum()
    p_vals, p_cum = p.p_meas.sizes_and_cum()
    kernels.fill_cbi_path(y, rng.master_seed, rng.stream_id,
                          p.b_imm, p.beta, 2.0 * p.alpha,
                          p.n_meas.rate, n_vals, n_cum,
                          p.p_meas.rate, p_vals, p_cum, p.p_meas.mean_jump_size(),
                          float(y0), grid.dt)
    return SamplePath(grid=grid, y=y)


__all__ = [
    "TimeGrid",
    "SamplePath",
    "VARIANCE_SCHEMES",
    "cir_transition_sample",
    "simulate_joint_path",
    "simulate_observations",
    "subsample_integer_times",
    "simulate_cbi_path",
]
