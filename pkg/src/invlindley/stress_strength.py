"""Stress-strength reliability R = P(Y < X) for two inverse Lindley
populations, with the derivative machinery needed by the delta method and
the Bayes approximations.

theta1 parameterizes the strength variable X, theta2 the stress variable Y.
R is written as a ratio delta/lambda of polynomials in (theta1, theta2);
first and second partials follow by quotient rule, and the reciprocal-form
derivatives (partials of 1/R = lambda/delta) feed the entropy-loss
estimator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .mle import SufficientStats, fisher_info, mle_theta
from .special import normal_quantile

__all__ = ["RDerivatives", "reliability", "r_derivatives", "r_mle", "r_ci"]


@dataclass(frozen=True)
class RDerivatives:
    r: float
    r1: float
    r2: float
    r11: float
    r22: float
    lam: float
    delta: float
    lam1: float
    lam2: float
    delta1: float
    delta2: float
    lam11: float
    lam22: float
    delta11: float
    delta22: float
    r1_inv: float
    r2_inv: float
    r11_inv: float
    r22_inv: float


def _check(theta1: float, theta2: float):
    if not (theta1 > 0 and theta2 > 0):
        raise ValueError("both parameters must be positive")


def reliability(theta1: float, theta2: float) -> float:
    """P(Y < X) for X ~ ILD(theta1), Y ~ ILD(theta2)."""
    _check(theta1, theta2)
    t = theta1 + theta2
    num = theta1 * theta1 * (t * t * (1.0 + theta2) + t * (1.0 + 2.0 * theta2)
                             + 2.0 * theta2)
    den = (1.0 + theta1) * (1.0 + theta2) * t ** 3
    return num / den


def r_derivatives(theta1: float, theta2: float) -> RDerivatives:
    """R with all lambda/delta building blocks and partial derivatives."""
    _check(theta1, theta2)
    t1, t2 = float(theta1), float(theta2)
    s = t1 + t2

    lam = (1.0 + t1) * (1.0 + t2) * s ** 3
    a = s * s * (1.0 + t2) + s * (1.0 + 2.0 * t2) + 2.0 * t2
    delta = t1 * t1 * a

    lam1 = (1.0 + t2) * s ** 3 + 3.0 * (1.0 + t1) * (1.0 + t2) * s * s
    lam2 = (1.0 + t1) * s ** 3 + 3.0 * (1.0 + t1) * (1.0 + t2) * s * s
    delta1 = 2.0 * t1 * a + t1 * t1 * (2.0 * s * (1.0 + t2) + (1.0 + 2.0 * t2))
    delta2 = t1 * t1 * (s * s + 2.0 * s * (1.0 + t2) + 2.0 * s
                        + (1.0 + 2.0 * t2) + 2.0)

    lam11 = 6.0 * (1.0 + t2) * s * (2.0 * t1 + t2 + 1.0)
    lam22 = 6.0 * (1.0 + t1) * s * (2.0 * t2 + t1 + 1.0)
    delta11 = (2.0 * s * (1.0 + t2) * (5.0 * t1 + t2)
               + 2.0 * (3.0 * t1 + t2) * (1.0 + 2.0 * t2)
               + 2.0 * t2 * (t1 * t1 + 2.0) + 2.0 * t1 * t1)
    delta22 = t1 * t1 * (2.0 * (1.0 + t2) + 4.0 * s + 4.0)

    r = delta / lam
    r1 = (lam * delta1 - delta * lam1) / lam ** 2
    r2 = (lam * delta2 - delta * lam2) / lam ** 2
    r11 = (lam * lam * (lam * delta11 - delta * lam11)
           - 2.0 * lam * lam1 * (lam * delta1 - delta * lam1)) / lam ** 4
    r22 = (lam * lam * (lam * delta22 - delta * lam22)
           - 2.0 * lam * lam2 * (lam * delta2 - delta * lam2)) / lam ** 4

    # partials of 1/R = lambda/delta, used by the entropy-loss estimator
    r1_inv = (delta * lam1 - lam * delta1) / delta ** 2
    r2_inv = (delta * lam2 - lam * delta2) / delta ** 2
    r11_inv = (delta * delta * (delta * lam11 - lam * delta11)
               - 2.0 * delta * delta1 * (delta * lam1 - lam * delta1)) / delta ** 4
    r22_inv = (delta * delta * (delta * lam22 - lam * delta22)
               - 2.0 * delta * delta2 * (delta * lam2 - lam * delta2)) / delta ** 4

    return RDerivatives(r=r, r1=r1, r2=r2, r11=r11, r22=r22,
                        lam=lam, delta=delta, lam1=lam1, lam2=lam2,
                        delta1=delta1, delta2=delta2, lam11=lam11, lam22=lam22,
                        delta11=delta11, delta22=delta22,
                        r1_inv=r1_inv, r2_inv=r2_inv,
                        r11_inv=r11_inv, r22_inv=r22_inv)


def r_mle(stats_x: SufficientStats, stats_y: SufficientStats) -> float:
    """Plug-in estimate: reliability at the two sample MLEs."""
    return reliability(mle_theta(stats_x), mle_theta(stats_y))


def r_ci(theta1: float, theta2: float, n: int, m: int, level: float = 0.95):
    """Delta-method interval for R at the supplied parameter values.

    n is the strength (theta1) sample size, m the stress (theta2) sample
    size.  Returns raw (low, high); callers clip to [0, 1] for display.
    """
    _check(theta1, theta2)
    if n < 1 or m < 1:
        raise ValueError("sample sizes must be >= 1")
    if not 0.0 < level < 1.0:
        raise ValueError("level must be in (0, 1)")
    d = r_derivatives(theta1, theta2)
    var = (d.r1 * d.r1 / (n * fisher_info(theta1))
           + d.r2 * d.r2 / (m * fisher_info(theta2)))
    z = normal_quantile(0.5 + level / 2.0)
    half = z * math.sqrt(var)
    return d.r - half, d.r + half
