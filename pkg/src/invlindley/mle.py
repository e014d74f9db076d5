"""Closed-form maximum likelihood for a single inverse Lindley sample."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .special import normal_quantile

__all__ = [
    "SufficientStats", "ThetaEstimate", "sufficient_stats", "mle_theta",
    "score", "loglik", "fisher_info", "theta_ci",
]


@dataclass(frozen=True)
class SufficientStats:
    """Sample size and the reciprocal sum s = sum(1/x_i)."""
    n: int
    s: float


@dataclass(frozen=True)
class ThetaEstimate:
    theta_hat: float
    std_err: float
    ci_low: float
    ci_high: float
    level: float


def sufficient_stats(data) -> SufficientStats:
    """Reduce a positive sample to (n, s) with compensated summation."""
    arr = np.atleast_1d(np.asarray(data, dtype=float))
    if arr.size == 0:
        raise ValueError("data must be non-empty")
    bad = np.nonzero(~(arr > 0))[0]
    if bad.size:
        i = int(bad[0])
        raise ValueError("data[%d] = %g must be strictly positive" % (i, arr[i]))
    s = math.fsum(1.0 / v for v in arr.tolist())
    return SufficientStats(n=int(arr.size), s=s)


def mle_theta(stats: SufficientStats) -> float:
    """Unique positive root of s t^2 + (s - n) t - 2n = 0."""
    n, s = stats.n, stats.s
    if n < 1 or not s > 0:
        raise ValueError("invalid sufficient statistics")
    b = s - n
    return (-b + math.sqrt(b * b + 8.0 * n * s)) / (2.0 * s)


def score(theta: float, stats: SufficientStats) -> float:
    """Derivative of the log-likelihood: 2n/theta - n/(1+theta) - s."""
    return 2.0 * stats.n / theta - stats.n / (1.0 + theta) - stats.s


def loglik(theta: float, data) -> float:
    """Log-likelihood 2n log(theta) - n log(1+theta) - theta s + sum log((1+x)/x^3)."""
    if not theta > 0:
        raise ValueError("theta must be positive")
    stats = sufficient_stats(data)
    arr = np.atleast_1d(np.asarray(data, dtype=float))
    shape_term = math.fsum(math.log1p(v) - 3.0 * math.log(v) for v in arr.tolist())
    return (2.0 * stats.n * math.log(theta) - stats.n * math.log1p(theta)
            - theta * stats.s + shape_term)


def fisher_info(theta: float) -> float:
    """Per-observation Fisher information (theta^2+4 theta+2)/(theta^2 (1+theta)^2)."""
    if not theta > 0:
        raise ValueError("theta must be positive")
    return (theta * theta + 4.0 * theta + 2.0) / (theta * theta * (1.0 + theta) ** 2)


def theta_ci(theta_hat: float, n: int, level: float = 0.95) -> ThetaEstimate:
    """Symmetric normal-theory interval theta_hat -/+ z sqrt(1/(n I(theta_hat)))."""
    if not theta_hat > 0:
        raise ValueError("theta_hat must be positive")
    if n < 1:
        raise ValueError("n must be >= 1")
    if not 0.0 < level < 1.0:
        raise ValueError("level must be in (0, 1)")
    z = normal_quantile(0.5 + level / 2.0)
    se = math.sqrt(1.0 / (n * fisher_info(theta_hat)))
    return ThetaEstimate(theta_hat=theta_hat, std_err=se,
                         ci_low=theta_hat - z * se, ci_high=theta_hat + z * se,
                         level=level)
