"""Estimator formulas shared by the simulation backends.

Every function here is elementwise arithmetic only, so the same source
serves both backends: the numpy backend calls them with whole-replication
vectors, and the compiled backend jit-compiles them for scalars.  Keep
expression structure identical to the library modules (mle,
stress_strength, bayes_lindley); cross-backend agreement tests rely on it.
"""

from __future__ import annotations

import numpy as np


def mle_from_stats(n, s):
    b = s - n
    return (-b + np.sqrt(b * b + 8.0 * n * s)) / (2.0 * s)


def sigma_kk(n, th):
    return 1.0 / (2.0 * n / (th * th) - n / ((1.0 + th) * (1.0 + th)))


def l_kkk(n, th):
    return 4.0 * n / (th ** 3) - 2.0 * n / ((1.0 + th) ** 3)


def rho_jeffrey(th):
    return (th + 2.0) / (th * th + 4.0 * th + 2.0) - 1.0 / th - 1.0 / (1.0 + th)


def r_derivs(t1, t2):
    """(r, r1, r2, r11, r22, r1_inv, r2_inv, r11_inv, r22_inv)."""
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
    r1_inv = (delta * lam1 - lam * delta1) / delta ** 2
    r2_inv = (delta * lam2 - lam * delta2) / delta ** 2
    r11_inv = (delta * delta * (delta * lam11 - lam * delta11)
               - 2.0 * delta * delta1 * (delta * lam1 - lam * delta1)) / delta ** 4
    r22_inv = (delta * delta * (delta * lam22 - lam * delta22)
               - 2.0 * delta * delta2 * (delta * lam2 - lam * delta2)) / delta ** 4
    return r, r1, r2, r11, r22, r1_inv, r2_inv, r11_inv, r22_inv


def self_theta(th, rho, sig, l3):
    return th + rho * sig + 0.5 * l3 * sig * sig


def elf_theta_bracket(th, rho, sig, l3):
    return (1.0 / th + (sig / (th * th)) * (1.0 / th - rho)
            - l3 * sig * sig / (2.0 * th * th))


def self_r(r, r1, r2, r11, r22, rho1, rho2, sig1, sig2, l111, l222):
    return (r + 0.5 * (sig1 * (r11 + 2.0 * r1 * rho1)
                       + sig2 * (r22 + 2.0 * r2 * rho2))
            + 0.5 * (l111 * r1 * sig1 * sig1 + l222 * r2 * sig2 * sig2))


def elf_r_bracket(r, r1i, r2i, r11i, r22i, rho1, rho2, sig1, sig2, l111, l222):
    return (1.0 / r + 0.5 * (sig1 * (r11i + 2.0 * r1i * rho1)
                             + sig2 * (r22i + 2.0 * r2i * rho2))
            + 0.5 * (l111 * r1i * sig1 * sig1 + l222 * r2i * sig2 * sig2))
