"""Inverse Lindley distribution kernel.

Density, distribution, survival, hazard, mode, quantile, median, hazard
peak, Renyi entropy and random sampling for ILD(theta), plus the inverse
Rayleigh comparison model used in the fit comparisons.

Functions accept a scalar or array ``x`` and return a float or ndarray to
match.  ``theta`` is always a positive scalar.
"""

from __future__ import annotations

import math

import numpy as np

from .special import lambert_w, log_gamma

__all__ = [
    "pdf", "logpdf", "cdf", "survival", "hazard", "mode", "hazard_peak",
    "quantile", "median", "renyi_entropy", "renyi_entropy_series",
    "sample", "ild_from_uniforms", "mixture_weight",
    "ird_pdf", "ird_cdf", "ird_mle", "ird_loglik",
]


def _check_theta(theta: float) -> float:
    theta = float(theta)
    if not theta > 0:
        raise ValueError("theta must be positive, got %r" % theta)
    return theta


def _positive_array(x, name: str = "x"):
    arr = np.asarray(x, dtype=float)
    if not np.all(arr > 0):
        raise ValueError("%s must be positive" % name)
    return arr, arr.ndim == 0


def _ret(value, scalar: bool):
    return float(value) if scalar else value


# ---------------------------------------------------------------------------
# density / distribution / hazard

def logpdf(theta, x):
    """Log density of ILD(theta) at x > 0."""
    theta = _check_theta(theta)
    arr, scalar = _positive_array(x)
    out = (2.0 * math.log(theta) - math.log1p(theta)
           + np.log1p(arr) - 3.0 * np.log(arr) - theta / arr)
    return _ret(out, scalar)


def pdf(theta, x):
    """Density theta^2/(1+theta) * (1+x)/x^3 * exp(-theta/x) for x > 0."""
    theta = _check_theta(theta)
    arr, scalar = _positive_array(x)
    # exp(logpdf) avoids inf*0 trouble for x near the underflow region
    out = np.exp(2.0 * math.log(theta) - math.log1p(theta)
                 + np.log1p(arr) - 3.0 * np.log(arr) - theta / arr)
    return _ret(out, scalar)


def cdf(theta, x):
    """Distribution function; 0 for x <= 0 by convention."""
    theta = _check_theta(theta)
    arr = np.asarray(x, dtype=float)
    scalar = arr.ndim == 0
    pos = arr > 0
    t = theta / np.where(pos, arr, 1.0)
    out = np.where(pos, (1.0 + t / (1.0 + theta)) * np.exp(-t), 0.0)
    return _ret(out, scalar)


def survival(theta, x):
    """1 - cdf, computed in a cancellation-safe form; 1 for x <= 0."""
    theta = _check_theta(theta)
    arr = np.asarray(x, dtype=float)
    scalar = arr.ndim == 0
    pos = arr > 0
    t = theta / np.where(pos, arr, 1.0)
    # 1 - (1 + t/(1+theta)) e^-t = -expm1(-t) - t/(1+theta) e^-t
    out = np.where(pos, -np.expm1(-t) - (t / (1.0 + theta)) * np.exp(-t), 1.0)
    return _ret(out, scalar)


def hazard(theta, x):
    """Hazard rate pdf/survival for x > 0.

    The closed-form expression is sidestepped deliberately; the ratio
    definition is unambiguous and stable across the whole support.
    """
    theta = _check_theta(theta)
    arr, scalar = _positive_array(x)
    out = pdf(theta, arr) / survival(theta, arr)
    return _ret(out, scalar)


def mode(theta):
    """Maximizer of the density: (theta-3+sqrt((theta-3)^2+8 theta))/4."""
    theta = _check_theta(theta)
    return (theta - 3.0 + math.sqrt((theta - 3.0) ** 2 + 8.0 * theta)) / 4.0


def hazard_peak(theta):
    """Location of the hazard maximum, by root-bracketing d log h / dx.

    d log h / dx = 1/(1+x) - 3/x + theta/x^2 + h(x); the first three terms
    are the log-density derivative, the last is the cumulative-hazard
    derivative.  Raises if no sign change is found in (1e-8, 1e8).
    """
    from scipy.optimize import brentq

    theta = _check_theta(theta)

    def dlogh(x):
        return 1.0 / (1.0 + x) - 3.0 / x + theta / (x * x) + hazard(theta, x)

    grid = np.logspace(-8.0, 8.0, 321)
    vals = 1.0 / (1.0 + grid) - 3.0 / grid + theta / (grid * grid) + hazard(theta, grid)
    sign = np.sign(vals)
    idx = np.nonzero(sign[:-1] * sign[1:] < 0)[0]
    if idx.size == 0:
        raise ArithmeticError("hazard_peak: no bracket for theta=%g" % theta)
    a, b = grid[idx[0]], grid[idx[0] + 1]
    return float(brentq(dlogh, a, b, xtol=1e-12, rtol=1e-14))


# ---------------------------------------------------------------------------
# quantiles

def quantile(theta, prob):
    """Quantile via the negative Lambert W branch.

    Q(p) = -[1 + 1/theta + (1/theta) W_neg(-p (1+theta) exp(-(1+theta)))]^-1
    """
    theta = _check_theta(theta)
    prob = float(prob)
    if not 0.0 < prob < 1.0:
        raise ValueError("prob must be in (0, 1)")
    z = -prob * (1.0 + theta) * math.exp(-(1.0 + theta))
    w = lambert_w(z, "negative")
    return -1.0 / (1.0 + 1.0 / theta + w / theta)


def median(theta):
    """Quantile at probability 1/2."""
    return quantile(theta, 0.5)


# ---------------------------------------------------------------------------
# Renyi entropy

def renyi_entropy(theta, gamma):
    """Renyi entropy of order gamma, by adaptive quadrature.

    Requires gamma > 1/2 (integrability of f^gamma at the right tail) and
    gamma != 1.  The integral is computed on the reciprocal scale u with
    x = gamma*theta/u, which moves the tail mass to an exp(-u) factor:

        int f^gamma dx = (gamma theta)^(1-2 gamma)
                         * int u^(2 gamma - 2) (1 + u/(gamma theta))^gamma e^-u du
    """
    from scipy.integrate import quad

    theta = _check_theta(theta)
    gamma = float(gamma)
    if gamma <= 0.5 or gamma == 1.0:
        raise ValueError("gamma must be > 1/2 and != 1")
    gt = gamma * theta

    def integrand(u):
        return u ** (2.0 * gamma - 2.0) * (1.0 + u / gt) ** gamma * math.exp(-u)

    hump, _ = quad(integrand, 0.0, 1.0, epsabs=1e-13, epsrel=1e-11, limit=200)
    tail, _ = quad(integrand, 1.0, np.inf, epsabs=1e-13, epsrel=1e-11, limit=200)
    log_integral = (1.0 - 2.0 * gamma) * math.log(gt) + math.log(hump + tail)
    c = gamma * (2.0 * math.log(theta) - math.log1p(theta))
    return (c + log_integral) / (1.0 - gamma)


def renyi_entropy_series(theta, gamma):
    """Finite-series Renyi entropy for integer gamma >= 2.

    (1/(1-gamma)) [2 gamma log theta - gamma log(1+theta)
                   + log sum_j C(gamma,j) Gamma(3 gamma - j - 1)/(theta gamma)^(3 gamma - j - 1)]
    """
    theta = _check_theta(theta)
    g = int(gamma)
    if g != gamma or g < 2:
        raise ValueError("series form requires integer gamma >= 2")
    logs = []
    for j in range(g + 1):
        k = 3 * g - j - 1
        logs.append(math.log(math.comb(g, j)) + log_gamma(k) - k * math.log(theta * g))
    top = max(logs)
    log_sum = top + math.log(math.fsum(math.exp(v - top) for v in logs))
    return (2.0 * g * math.log(theta) - g * math.log1p(theta) + log_sum) / (1.0 - g)


# ---------------------------------------------------------------------------
# sampling

def mixture_weight(theta):
    """P(exponential component) in the Lindley mixture: theta/(1+theta)."""
    theta = _check_theta(theta)
    return theta / (theta + 1.0)


def ild_from_uniforms(theta, u):
    """Map a (4, n) uniform block to n ILD(theta) draws.

    Row 0 picks the mixture component; rows 1-3 feed three exponential
    transforms.  Consumption is fixed at four uniforms per draw no matter
    which component is selected, so streams stay aligned across backends.
    The draw is 1/L where L is Lindley(theta): Exp(theta) with probability
    theta/(1+theta), else the sum of two Exp(theta).
    """
    u = np.asarray(u, dtype=float)
    if u.ndim != 2 or u.shape[0] != 4:
        raise ValueError("uniform block must have shape (4, n)")
    e = -np.log1p(-u[1:4]) / theta
    w = theta / (theta + 1.0)
    lindley = np.where(u[0] <= w, e[0], e[1] + e[2])
    return 1.0 / lindley


def sample(theta, n, seed):
    """Draw n i.i.d. ILD(theta) variates, deterministic in seed."""
    theta = _check_theta(theta)
    n = int(n)
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = np.random.Generator(np.random.Philox(key=int(seed)))
    u = rng.random((4, n))
    return ild_from_uniforms(theta, u)


# ---------------------------------------------------------------------------
# inverse Rayleigh comparison model

def ird_pdf(theta, x):
    """Inverse Rayleigh density 2 theta x^-3 exp(-theta/x^2)."""
    theta = _check_theta(theta)
    arr, scalar = _positive_array(x)
    out = 2.0 * theta * arr ** -3.0 * np.exp(-theta / (arr * arr))
    return _ret(out, scalar)


def ird_cdf(theta, x):
    """Inverse Rayleigh distribution function exp(-theta/x^2); 0 for x <= 0."""
    theta = _check_theta(theta)
    arr = np.asarray(x, dtype=float)
    scalar = arr.ndim == 0
    pos = arr > 0
    out = np.where(pos, np.exp(-theta / np.where(pos, arr, 1.0) ** 2), 0.0)
    return _ret(out, scalar)


def ird_mle(data):
    """Closed-form inverse Rayleigh MLE: n / sum(1/x_i^2)."""
    arr, _ = _positive_array(np.atleast_1d(np.asarray(data, dtype=float)), "data")
    if arr.size == 0:
        raise ValueError("data must be non-empty")
    return arr.size / math.fsum(1.0 / (v * v) for v in arr.tolist())


def ird_loglik(theta, data):
    """Inverse Rayleigh log-likelihood at theta."""
    theta = _check_theta(theta)
    arr, _ = _positive_array(np.atleast_1d(np.asarray(data, dtype=float)), "data")
    if arr.size == 0:
        raise ValueError("data must be non-empty")
    vals = arr.tolist()
    return (arr.size * math.log(2.0 * theta)
            - 3.0 * math.fsum(math.log(v) for v in vals)
            - theta * math.fsum(1.0 / (v * v) for v in vals))
