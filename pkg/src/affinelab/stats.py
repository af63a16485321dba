"""Empirical-distribution utilities used by every verification gate."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class Ecdf:
    """Right-continuous empirical CDF over a sorted sample."""

    values: np.ndarray
    size: int

    @staticmethod
    def from_sample(sample) -> "Ecdf":
        arr = np.sort(np.asarray(sample, dtype=np.float64).ravel())
        if arr.size == 0:
            raise ValueError("sample must be nonempty")
        return Ecdf(values=arr, size=int(arr.size))

    def __call__(self, x) -> np.ndarray | float:
        r = np.searchsorted(self.values, x, side="right") / self.size
        return float(r) if np.isscalar(x) else r


@dataclass(frozen=True)
class MomentSummary:
    mean: float
    variance: float
    se_mean: float
    size: int


def moment_summary(sample) -> MomentSummary:
    """Mean, unbiased variance and the standard error of the mean.

    numpy's pairwise-compensated reductions keep the sums accurate for
    long, nearly-cancelling samples.
    """
    arr = np.asarray(sample, dtype=np.float64).ravel()
    if arr.size < 2:
        raise ValueError("need at least two observations")
    mean = float(np.mean(arr))
    var = float(np.var(arr, ddof=1))
    return MomentSummary(mean=mean, variance=var,
                         se_mean=float(np.sqrt(var / arr.size)), size=int(arr.size))


def ks_two_sample(xs, ys) -> float:
    """Exact two-sample Kolmogorov-Smirnov statistic.

    The sup of |F_x - F_y| over the merged support, with both ECDFs
    evaluated after all tied values are processed (right-continuous
    convention).
    """
    x = np.sort(np.asarray(xs, dtype=np.float64).ravel())
    y = np.sort(np.asarray(ys, dtype=np.float64).ravel())
    if x.size == 0 or y.size == 0:
        raise ValueError("samples must be nonempty")
    grid = np.unique(np.concatenate([x, y]))
    cdf_x = np.searchsorted(x, grid, side="right") / x.size
    cdf_y = np.searchsorted(y, grid, side="right") / y.size
    return float(np.max(np.abs(cdf_x - cdf_y)))


def quantiles(sample, qs) -> np.ndarray:
    """Linear-interpolation quantiles of a sample."""
    arr = np.asarray(sample, dtype=np.float64).ravel()
    if arr.size == 0:
        raise ValueError("sample must be nonempty")
    return np.quantile(arr, np.asarray(qs, dtype=np.float64))


def variance_se(sample) -> float:
    """First-order standard error of the unbiased sample variance
    (moment-based, no normality assumption)."""
    arr = np.asarray(sample, dtype=np.float64).ravel()
    n = arr.size
    if n < 4:
        raise ValueError("need at least four observations")
    centered = arr - np.mean(arr)
    m2 = float(np.mean(centered**2))
    m4 = float(np.mean(centered**4))
    return float(np.sqrt(max(m4 - m2 * m2 * (n - 3) / (n - 1), 0.0) / n))


__all__ = ["Ecdf", "MomentSummary", "moment_summary", "ks_two_sample",
           "quantiles", "variance_se"]
