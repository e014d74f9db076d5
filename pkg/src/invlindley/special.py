"""Scalar special functions: both real branches of Lambert W, log-gamma,
and an inverse standard-normal used for confidence limits."""

from __future__ import annotations

import math

BRANCH_POINT = -math.exp(-1.0)

_MAX_ITER = 50
_RESIDUAL_TOL = 1e-12


def _halley(z: float, w: float) -> float:
    # Halley iteration on f(w) = w e^w - z, rescaled by e^-w so that
    # neither branch can overflow: g = w - z e^-w, g' -> (w+1), g'' -> (w+2).
    for _ in range(_MAX_ITER):
        g = w - z * math.exp(-w)
        if abs(g) <= _RESIDUAL_TOL:
            return w
        denom = (w + 1.0) - g * (w + 2.0) / (2.0 * (w + 1.0))
        step = g / denom
        w = w - step
        if abs(step) <= 1e-14 * (1.0 + abs(w)):
            return w
    raise ArithmeticError("lambert_w failed to converge in %d iterations" % _MAX_ITER)


def lambert_w(z: float, branch: str = "principal") -> float:
    """Real Lambert W: the w solving w*exp(w) = z on the requested branch.

    branch "principal" covers z >= -1/e with w >= -1; branch "negative"
    covers -1/e <= z < 0 with w <= -1.  Residual |w e^w - z| <= 1e-12.
    """
    z = float(z)
    if branch not in ("principal", "negative"):
        raise ValueError("branch must be 'principal' or 'negative'")
    if z < BRANCH_POINT:
        raise ValueError("z=%g is below the branch point -1/e" % z)
    if z == BRANCH_POINT:
        return -1.0

    if branch == "principal":
        if z == 0.0:
            return 0.0
        if z < -0.32:
            # series around the branch point, p = +sqrt(2(ez+1))
            p = math.sqrt(max(0.0, 2.0 * (math.e * z + 1.0)))
            w = -1.0 + p - p * p / 3.0 + 11.0 * p ** 3 / 72.0
            if w <= -1.0:
                w = -1.0 + 1e-9  # keep the iterate off the branch point
        else:
            w = math.log1p(z) if z > -0.25 else z
            if z > math.e:
                L1 = math.log(z)
                w = L1 - math.log(L1)
        return _halley(z, w)

    # negative branch
    if z >= 0.0:
        raise ValueError("negative branch requires z < 0")
    if z < -0.25:
        p = -math.sqrt(max(0.0, 2.0 * (math.e * z + 1.0)))
        w = -1.0 + p - p * p / 3.0 + 11.0 * p ** 3 / 72.0
        if w > -1.0:
            w = -1.0 - 1e-9  # keep the iterate on its own side of the branch point
    else:
        # log-log asymptotic toward 0-
        L1 = math.log(-z)
        L2 = math.log(-L1)
        w = L1 - L2 + L2 / L1
    return _halley(z, w)


def log_gamma(a: float) -> float:
    """Natural log of the gamma function for a > 0."""
    if not a > 0:
        raise ValueError("log_gamma requires a > 0")
    return math.lgamma(a)


# Inverse standard normal cdf: rational approximation (relative error
# about 1e-9) polished by one Halley step through erfc, which brings it
# to float precision.  Used for normal-theory confidence limits.

_A = (-3.969683028665376e+01, 2.209460984245205e+02, -2.759285104469687e+02,
      1.383577518672690e+02, -3.066479806614716e+01, 2.506628277459239e+00)
_B = (-5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
      6.680131188771972e+01, -1.328068155288572e+01)
_C = (-7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
      -2.549732539343734e+00, 4.374664141464968e+00, 2.938163982698783e+00)
_D = (7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e+00,
      3.754408661907416e+00)


def normal_quantile(p: float) -> float:
    """Inverse cdf of the standard normal distribution."""
    if not 0.0 < p < 1.0:
        raise ValueError("p must be in (0, 1)")
    p_low = 0.02425
    if p < p_low:
        q = math.sqrt(-2.0 * math.log(p))
        x = ((((((_C[0] * q + _C[1]) * q + _C[2]) * q + _C[3]) * q + _C[4]) * q + _C[5])
             / ((((_D[0] * q + _D[1]) * q + _D[2]) * q + _D[3]) * q + 1.0))
    elif p <= 1.0 - p_low:
        q = p - 0.5
        r = q * q
        x = ((((((_A[0] * r + _A[1]) * r + _A[2]) * r + _A[3]) * r + _A[4]) * r + _A[5]) * q
             / (((((_B[0] * r + _B[1]) * r + _B[2]) * r + _B[3]) * r + _B[4]) * r + 1.0))
    else:
        q = math.sqrt(-2.0 * math.log1p(-p))
        x = -((((((_C[0] * q + _C[1]) * q + _C[2]) * q + _C[3]) * q + _C[4]) * q + _C[5])
              / ((((_D[0] * q + _D[1]) * q + _D[2]) * q + _D[3]) * q + 1.0))
    # Halley polish
    err = 0.5 * math.erfc(-x / math.sqrt(2.0)) - p
    u = err * math.sqrt(2.0 * math.pi) * math.exp(x * x / 2.0)
    return x - u / (1.0 + x * u / 2.0)
