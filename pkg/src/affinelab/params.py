"""Model parameter sets, admissibility checks and scaling-limit parameters.

The central model is the two-dimensional affine diffusion

    dY_t = (a - b*Y_t) dt + sqrt(Y_t) dW_t
    dX_t = (m - theta*X_t) dt + sqrt(Y_t) dB_t,      a > 0,

with independent Brownian motions W, B.  This module owns the plain
drift parameters, the general admissible-parameter tuples of affine
processes on R+ x R^d, jump-measure descriptors (finite-activity
compound Poisson only), and the algebra of the scaling limit.

All functions here are pure; everything is safe to share across threads.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

PSD_TOL = -1e-10          # smallest eigenvalue allowed for "positive semidefinite"
PROB_TOL = 1e-12          # jump-law probabilities must sum to 1 within this


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[str, ...] = ()

    @staticmethod
    def from_violations(violations) -> "ValidationReport":
        v = tuple(violations)
        return ValidationReport(ok=not v, violations=v)


class Criticality(enum.Enum):
    SUBCRITICAL = "subcritical"
    CRITICAL = "critical"
    SUPERCRITICAL = "supercritical"


@dataclass(frozen=True)
class ModelParams:
    """Drift/diffusion constants of the two-dimensional affine diffusion."""

    a: float
    b: float
    m: float
    theta: float

    def require_simulatable(self):
        if not self.a > 0.0:
            raise ValueError("immigration drift must be positive")

    def to_admissible(self) -> "AdmissibleParams":
        """The admissible-parameter tuple generated by this diffusion
        (d = 1): constant diffusion 0, state diffusion I/2, drift vector
        (a, m), linear drift diag(-b, -theta), no jumps."""
        return AdmissibleParams(
            a_mat=np.zeros((2, 2)),
            alpha=0.5 * np.eye(2),
            b_vec=np.array([self.a, self.m]),
            beta=np.diag([-self.b, -self.theta]),
            m_meas=JumpMeasure.empty(2),
            mu_meas=JumpMeasure.empty(2),
        )


@dataclass(frozen=True)
class InitialLaw:
    """Initial state; point masses only, so all moment conditions hold
    trivially."""

    y0: float
    x0: float

    def __post_init__(self):
        if not self.y0 >= 0.0:
            raise ValueError("y0 must be nonnegative")


def _as_points(points, dim=None) -> np.ndarray:
    pts = np.atleast_2d(np.asarray(points, dtype=np.float64))
    if dim is not None and pts.size and pts.shape[1] != dim:
        raise ValueError(f"support points must have dimension {dim}")
    return pts


@dataclass(frozen=True)
class JumpMeasure:
    """Finite-activity jump measure: total mass ``rate`` spread over a
    finite list of support points with probabilities.

    Integrals against it are exact finite sums: integral(g) =
    rate * sum_i probs[i] * g(points[i]).
    """

    rate: float
    points: np.ndarray = field(default_factory=lambda: np.zeros((0, 1)))
    probs: np.ndarray = field(default_factory=lambda: np.zeros(0))

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=np.float64)
        if pts.size == 0:
            pts = pts.reshape(0, pts.shape[1] if pts.ndim == 2 and pts.shape[1] else 1)
        else:
            pts = np.atleast_2d(pts)
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "probs", np.asarray(self.probs, dtype=np.float64).ravel())
        if not self.rate >= 0.0:
            raise ValueError("jump rate must be nonnegative")
        if len(self.points) != len(self.probs):
            raise ValueError("points and probs must have equal length")
        if len(self.probs):
            if np.any(self.probs < 0.0):
                raise ValueError("jump probabilities must be nonnegative")
            if abs(float(np.sum(self.probs)) - 1.0) > PROB_TOL:
                raise ValueError("jump probabilities must sum to 1")
            if np.any(self.points[:, 0] < 0.0):
                raise ValueError("support points must have nonnegative first coordinate")
            if np.any(np.all(self.points == 0.0, axis=1)):
                raise ValueError("support points must exclude the origin")

    @staticmethod
    def empty(dim: int = 1) -> "JumpMeasure":
        return JumpMeasure(0.0, np.zeros((0, dim)), np.zeros(0))

    @staticmethod
    def single(rate: float, point) -> "JumpMeasure":
        return JumpMeasure(rate, np.atleast_2d(np.asarray(point, dtype=np.float64)), np.array([1.0]))

    @staticmethod
    def from_rows(rate: float, rows) -> "JumpMeasure":
        """Rows of the config form ``[x1, ..., xd, prob]``."""
        arr = np.atleast_2d(np.asarray(rows, dtype=np.float64))
        if arr.size == 0:
            return JumpMeasure.empty()
        return JumpMeasure(rate, arr[:, :-1], arr[:, -1])

    @property
    def dim(self) -> int:
        return self.points.shape[1] if self.points.size else 1

    @property
    def is_empty(self) -> bool:
        return self.rate == 0.0 or len(self.probs) == 0

    def integral(self, values) -> float:
        """rate-weighted expectation of per-point values."""
        if self.is_empty:
            return 0.0
        return float(self.rate * np.sum(self.probs * np.asarray(values, dtype=np.float64)))

    def first_coordinate_moment(self) -> float:
        if self.is_empty:
            return 0.0
        return self.integral(self.points[:, 0])

    def outer_moment(self) -> np.ndarray:
        """integral of xi xi^T."""
        d = self.points.shape[1] if self.points.size else 1
        if self.is_empty:
            return np.zeros((d, d))
        return self.rate * np.einsum("k,ki,kj->ij", self.probs, self.points, self.points)

    def size_second_moment(self) -> float:
        """Measure integral of u^2 for one-dimensional laws (rate-weighted)."""
        if self.is_empty:
            return 0.0
        return self.integral(self.points[:, 0] ** 2)

    def mean_jump_size(self) -> float:
        """Plain expectation of the (normalized) size law, NOT rate-weighted;
        this is what per-jump compensation needs."""
        if self.is_empty:
            return 0.0
        return float(np.sum(self.probs * self.points[:, 0]))

    def sizes_and_cum(self) -> tuple[np.ndarray, np.ndarray]:
        """(values, cumulative probabilities) for one-dimensional sampling;
        the last cumulative entry is forced to exactly 1.0."""
        if self.is_empty:
            return np.array([0.0]), np.array([1.0])
        vals = np.ascontiguousarray(self.points[:, 0])
        cum = np.cumsum(self.probs)
        cum[-1] = 1.0
        return vals, cum


@dataclass(frozen=True)
class AdmissibleParams:
    """Parameter tuple (a, alpha, b, beta, m, mu) of an affine process on
    R+ x R^d."""

    a_mat: np.ndarray
    alpha: np.ndarray
    b_vec: np.ndarray
    beta: np.ndarray
    m_meas: JumpMeasure
    mu_meas: JumpMeasure

    def __post_init__(self):
        object.__setattr__(self, "a_mat", np.asarray(self.a_mat, dtype=np.float64))
        object.__setattr__(self, "alpha", np.asarray(self.alpha, dtype=np.float64))
        object.__setattr__(self, "b_vec", np.asarray(self.b_vec, dtype=np.float64).ravel())
        object.__setattr__(self, "beta", np.asarray(self.beta, dtype=np.float64))

    @property
    def dim(self) -> int:
        return len(self.b_vec)


@dataclass(frozen=True)
class CbiParams:
    """Finite-activity branching process with immigration.

    Continuous part dY = (b_imm + beta*Y) dt + sqrt(2*alpha*Y) dW, plus
    state-independent immigration jumps (measure ``n_meas``) and
    compensated branching jumps at intensity Y * p_meas.rate
    (measure ``p_meas``).  First/second jump moments are stored because
    the scaling limit is expressed through them.
    """

    alpha: float
    b_imm: float
    beta: float
    n_meas: JumpMeasure
    p_meas: JumpMeasure
    n_first_moment: float = field(init=False)
    p_second_moment: float = field(init=False)

    def __post_init__(self):
        if not self.alpha >= 0.0:
            raise ValueError("alpha must be nonnegative")
        if not self.b_imm >= 0.0:
            raise ValueError("immigration drift must be nonnegative")
        for meas, name in ((self.n_meas, "n"), (self.p_meas, "p")):
            if meas.points.size and meas.points.shape[1] != 1:
                raise ValueError(f"measure {name} must live on the half line")
        object.__setattr__(self, "n_first_moment", self.n_meas.first_coordinate_moment())
        object.__setattr__(self, "p_second_moment", self.p_meas.size_second_moment())


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------

def classify_criticality(b: float, theta: float) -> Criticality:
    """Class of the diffusion by the spectral radius of diag(e^{-bt}, e^{-theta*t})."""
    if b > 0.0 and theta > 0.0:
        return Criticality.SUBCRITICAL
    if b < 0.0 or theta < 0.0:
        return Criticality.SUPERCRITICAL
    return Criticality.CRITICAL


def validate_condition_c(params: ModelParams, init: InitialLaw) -> ValidationReport:
    """Standing assumption of every estimator limit theorem: jointly
    critical drift (b, theta) = (0, 0), a > 0, nonnegative Y start with
    finite moments (automatic for point masses)."""
    violations = []
    if params.b != 0.0:
        violations.append("b nonzero")
    if params.theta != 0.0:
        violations.append("theta nonzero")
    if not params.a > 0.0:
        violations.append("a not strictly positive")
    if not init.y0 >= 0.0:
        violations.append("y0 negative")
    return ValidationReport.from_violations(violations)


def _min_eigenvalue(mat: np.ndarray) -> float:
    sym = 0.5 * (mat + mat.T)
    return float(np.linalg.eigvalsh(sym)[0])


def validate_admissible(p: AdmissibleParams) -> ValidationReport:
    """Check clauses (i)-(vi) of admissibility; returns one violation per
    failed clause.  Moment integrals are exact finite sums, hence clauses
    (v)/(vi) reduce to support checks for this measure class."""
    d1 = p.dim
    for name, mat in (("a", p.a_mat), ("alpha", p.alpha), ("beta", p.beta)):
        mat = np.asarray(mat)
        if mat.shape != (d1, d1):
            raise ValueError(f"dimension mismatch: {name} must be {d1}x{d1}, got {mat.shape}")
    violations = []
    if not np.allclose(p.a_mat, p.a_mat.T, atol=1e-12) or _min_eigenvalue(p.a_mat) < PSD_TOL:
        violations.append("(i) a symmetric positive semidefinite")
    if p.a_mat[0, 0] != 0.0:
        violations.append("(i) a_{1,1}=0")
    if not np.allclose(p.alpha, p.alpha.T, atol=1e-12) or _min_eigenvalue(p.alpha) < PSD_TOL:
        violations.append("(ii) alpha symmetric positive semidefinite")
    if p.b_vec[0] < 0.0:
        violations.append("(iii) b_1 >= 0")
    if d1 > 1 and np.any(p.beta[0, 1:] != 0.0):
        violations.append("(iv) beta_{1,j}=0 for j >= 2")
    for clause, meas in (("(v)", p.m_meas), ("(vi)", p.mu_meas)):
        if meas.is_empty:
            continue
        if meas.points.shape[1] != d1:
            raise ValueError(f"dimension mismatch: measure support must have dimension {d1}")
        if np.any(meas.points[:, 0] < 0.0) or np.any(np.all(meas.points == 0.0, axis=1)):
            violations.append(f"{clause} jump support in R+ x R^d minus the origin")
        elif not np.isfinite(_moment_v(meas) if clause == "(v)" else _moment_vi(meas)):
            violations.append(f"{clause} moment integral finite")
    return ValidationReport.from_violations(violations)


def _moment_v(meas: JumpMeasure) -> float:
    # integral of xi_1 + (|xi_2| wedge |xi_2|^2)
    xi1 = meas.points[:, 0]
    tail = np.linalg.norm(meas.points[:, 1:], axis=1) if meas.points.shape[1] > 1 else np.zeros(len(meas.points))
    return meas.integral(xi1 + np.minimum(tail, tail**2))


def _moment_vi(meas: JumpMeasure) -> float:
    # integral of |xi| wedge |xi|^2
    norm = np.linalg.norm(meas.points, axis=1)
    return meas.integral(np.minimum(norm, norm**2))


def limit_parameters(a_mat, alpha, b_vec, beta, m_meas: JumpMeasure,
                     mu_meas: JumpMeasure) -> AdmissibleParams:
    """Assemble the admissible parameters of the scaling limit.

    Inputs are the already-scaled limits of a parameter family (constant
    diffusion a = lim theta^-1 a^(theta), etc.); the jump measures fold
    into the continuous limit as

        alpha_bar = alpha + (1/2) * integral xi xi^T mu(dxi)
        b_bar_1   = b_1 + integral xi_1 m(dxi),   b_bar_i = b_i otherwise,

    and the limit itself carries no jumps.
    """
    a_mat = np.asarray(a_mat, dtype=np.float64)
    alpha = np.asarray(alpha, dtype=np.float64)
    b_vec = np.asarray(b_vec, dtype=np.float64).ravel().copy()
    beta = np.asarray(beta, dtype=np.float64)
    d1 = len(b_vec)
    alpha_bar = alpha + 0.5 * (mu_meas.outer_moment() if not mu_meas.is_empty else np.zeros((d1, d1)))
    alpha_bar = 0.5 * (alpha_bar + alpha_bar.T)
    b_vec[0] += m_meas.first_coordinate_moment()
    return AdmissibleParams(
        a_mat=a_mat,
        alpha=alpha_bar,
        b_vec=b_vec,
        beta=beta,
        m_meas=JumpMeasure.empty(d1),
        mu_meas=JumpMeasure.empty(d1),
    )


__all__ = [
    "PSD_TOL",
    "ValidationReport",
    "Criticality",
    "ModelParams",
    "InitialLaw",
    "JumpMeasure",
    "AdmissibleParams",
    "CbiParams",
    "classify_criticality",
    "validate_condition_c",
    "validate_admissible",
    "limit_parameters",
]
