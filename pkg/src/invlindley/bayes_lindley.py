"""Bayes estimation of theta1, theta2 and R under Jeffrey and gamma priors
with squared-error (self) and entropy (elf) losses, via the Lindley
approximation evaluated at the MLEs.

The two-parameter expansion collapses to per-parameter diagonal terms
because the cross derivatives of the log-likelihood vanish (independent
samples) and the observed-information matrix is diagonal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from .mle import SufficientStats, mle_theta
from .stress_strength import r_derivatives

__all__ = [
    "ApproximationError", "PriorSpec", "LindleyTerms", "LOSSES",
    "elicit_gamma_hyper", "lindley_terms", "bayes_theta", "bayes_r",
]

LOSSES = ("self", "elf")


class ApproximationError(ArithmeticError):
    """The Lindley expansion produced a non-positive entropy-loss bracket,
    which signals the sample is too small for the approximation."""


@dataclass(frozen=True)
class PriorSpec:
    """kind 'jeffrey' (no hyperparameters) or 'gamma' with hyper =
    (a1, b1, a2, b2), shape/rate per parameter, all >= 0."""
    kind: str
    hyper: Optional[Tuple[float, float, float, float]] = None

    def __post_init__(self):
        if self.kind not in ("jeffrey", "gamma"):
            raise ValueError("prior kind must be 'jeffrey' or 'gamma'")
        if self.kind == "gamma":
            if self.hyper is None or len(self.hyper) != 4:
                raise ValueError("gamma prior needs hyper = (a1, b1, a2, b2)")
            if any(h < 0 for h in self.hyper):
                raise ValueError("gamma hyperparameters must be >= 0")
        elif self.hyper is not None:
            raise ValueError("jeffrey prior takes no hyperparameters")


@dataclass(frozen=True)
class LindleyTerms:
    sigma11: float
    sigma22: float
    l111: float
    l222: float
    rho1: float
    rho2: float


def elicit_gamma_hyper(prior_mean: float, prior_variance: float) -> Tuple[float, float]:
    """Shape/rate (a, b) of a gamma prior with the given mean and variance."""
    if not (prior_mean > 0 and prior_variance > 0):
        raise ValueError("prior mean and variance must be positive")
    return prior_mean * prior_mean / prior_variance, prior_mean / prior_variance


def _check_loss(loss: str) -> str:
    if loss not in LOSSES:
        raise ValueError("loss must be one of %s" % (LOSSES,))
    return loss


def _sigma(n: int, theta: float) -> float:
    # inverse of the observed information, which is data-free for this model
    info = 2.0 * n / (theta * theta) - n / (1.0 + theta) ** 2
    if not info > 0:
        raise ValueError("observed information must be positive")
    return 1.0 / info


def _l3(n: int, theta: float) -> float:
    # third derivative of the log-likelihood at theta
    return 4.0 * n / theta ** 3 - 2.0 * n / (1.0 + theta) ** 3


def _rho(theta: float, prior: PriorSpec, which: int) -> float:
    # derivative of the log prior density
    if prior.kind == "jeffrey":
        return ((theta + 2.0) / (theta * theta + 4.0 * theta + 2.0)
                - 1.0 / theta - 1.0 / (1.0 + theta))
    if which == 1:
        a, b = prior.hyper[0], prior.hyper[1]
    else:
        a, b = prior.hyper[2], prior.hyper[3]
    return (a - 1.0) / theta - b


def lindley_terms(stats_x: SufficientStats, stats_y: SufficientStats,
                  prior: PriorSpec) -> LindleyTerms:
    """All expansion ingredients evaluated at the two sample MLEs."""
    th1 = mle_theta(stats_x)
    th2 = mle_theta(stats_y)
    if not (th1 > 0 and th2 > 0):
        raise ValueError("MLEs must be positive")
    return LindleyTerms(sigma11=_sigma(stats_x.n, th1),
                        sigma22=_sigma(stats_y.n, th2),
                        l111=_l3(stats_x.n, th1),
                        l222=_l3(stats_y.n, th2),
                        rho1=_rho(th1, prior, 1),
                        rho2=_rho(th2, prior, 2))


def bayes_theta(stats: SufficientStats, which: int, prior: PriorSpec,
                loss: str, full_lindley: bool = False) -> float:
    """Lindley-approximation posterior point estimate of one theta.

    ``which`` selects the hyperparameter pair for a gamma prior (1 or 2).
    Under the Jeffrey prior with squared-error loss the estimate is
    reported as the MLE itself unless ``full_lindley`` is set, in which
    case the uncorrected general expansion is applied instead.
    """
    _check_loss(loss)
    if which not in (1, 2):
        raise ValueError("which must be 1 or 2")
    th = mle_theta(stats)
    if not th > 0:
        raise ValueError("MLE must be positive")
    sigma = _sigma(stats.n, th)
    l3 = _l3(stats.n, th)
    rho = _rho(th, prior, which)
    if loss == "self":
        if prior.kind == "jeffrey" and not full_lindley:
            return th
        return th + rho * sigma + 0.5 * l3 * sigma * sigma
    bracket = (1.0 / th + (sigma / th ** 2) * (1.0 / th - rho)
               - l3 * sigma * sigma / (2.0 * th ** 2))
    if not bracket > 0:
        raise ApproximationError(
            "entropy-loss bracket is non-positive (n=%d); sample too small "
            "for the Lindley approximation" % stats.n)
    return 1.0 / bracket


def bayes_r(stats_x: SufficientStats, stats_y: SufficientStats,
            prior: PriorSpec, loss: str) -> float:
    """Lindley-approximation posterior point estimate of R = P(Y < X)."""
    _check_loss(loss)
    th1 = mle_theta(stats_x)
    th2 = mle_theta(stats_y)
    d = r_derivatives(th1, th2)
    t = lindley_terms(stats_x, stats_y, prior)
    if loss == "self":
        return (d.r
                + 0.5 * (t.sigma11 * (d.r11 + 2.0 * d.r1 * t.rho1)
                         + t.sigma22 * (d.r22 + 2.0 * d.r2 * t.rho2))
                + 0.5 * (t.l111 * d.r1 * t.sigma11 ** 2
                         + t.l222 * d.r2 * t.sigma22 ** 2))
    bracket = (1.0 / d.r
               + 0.5 * (t.sigma11 * (d.r11_inv + 2.0 * d.r1_inv * t.rho1)
                        + t.sigma22 * (d.r22_inv + 2.0 * d.r2_inv * t.rho2))
               + 0.5 * (t.l111 * d.r1_inv * t.sigma11 ** 2
                        + t.l222 * d.r2_inv * t.sigma22 ** 2))
    if not bracket > 0:
        raise ApproximationError(
            "entropy-loss bracket for R is non-positive; sample too small "
            "for the Lindley approximation")
    return 1.0 / bracket
