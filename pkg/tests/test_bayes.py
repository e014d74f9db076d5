import math

import numpy as np
import pytest

from invlindley.bayes_lindley import (
    ApproximationError,
    PriorSpec,
    bayes_r,
    bayes_theta,
    elicit_gamma_hyper,
    lindley_terms,
)
from invlindley.datasets import load_builtin
from invlindley.distribution import sample
from invlindley.mle import SufficientStats, loglik, mle_theta, sufficient_stats
from invlindley.stress_strength import r_mle

JEFFREY = PriorSpec("jeffrey")
GAMMA_FLAT = PriorSpec("gamma", (0.0, 0.0, 0.0, 0.0))


def _real_stats():
    ct = load_builtin("headneck_ctrt")
    rt = load_builtin("headneck_rt")
    return sufficient_stats(ct.values), sufficient_stats(rt.values)


def test_prior_spec_validation():
    with pytest.raises(ValueError):
        PriorSpec("jeffrey", (1.0, 1.0, 1.0, 1.0))
    with pytest.raises(ValueError):
        PriorSpec("gamma")
    with pytest.raises(ValueError):
        PriorSpec("gamma", (1.0, 1.0))
    with pytest.raises(ValueError):
        PriorSpec("gamma", (1.0, -0.5, 1.0, 1.0))
    with pytest.raises(ValueError):
        PriorSpec("lognormal", None)


def test_elicit_gamma_hyper():
    assert elicit_gamma_hyper(1.0, 0.5) == (2.0, 2.0)
    assert elicit_gamma_hyper(2.0, 0.5) == (8.0, 4.0)
    a, b = elicit_gamma_hyper(1.0, 10.0)
    assert abs(a - 0.1) <= 1e-15 and abs(b - 0.1) <= 1e-15
    with pytest.raises(ValueError):
        elicit_gamma_hyper(0.0, 1.0)
    with pytest.raises(ValueError):
        elicit_gamma_hyper(1.0, -1.0)


def test_lindley_terms_flat_gamma_is_zero_rho():
    sx, sy = _real_stats()
    terms = lindley_terms(sx, sy, PriorSpec("gamma", (1.0, 0.0, 1.0, 0.0)))
    assert terms.rho1 == 0.0
    assert terms.rho2 == 0.0


def test_lindley_terms_sigma_closed_form():
    # theta_hat = sqrt(2) happens when s = n
    st = SufficientStats(10, 10.0)
    terms = lindley_terms(st, st, JEFFREY)
    want = 1.0 / (2.0 * 10 / 2.0 - 10 / (1.0 + math.sqrt(2.0)) ** 2)
    assert abs(terms.sigma11 - want) <= 1e-15
    assert terms.sigma11 > 0 and terms.sigma22 > 0


def test_lindley_terms_l3_matches_third_difference():
    sx, _ = _real_stats()
    th = mle_theta(sx)
    terms = lindley_terms(sx, sx, JEFFREY)
    data = load_builtin("headneck_ctrt").values
    h = th * 2e-3
    fd3 = (loglik(th + 2 * h, data) - 2 * loglik(th + h, data)
           + 2 * loglik(th - h, data) - loglik(th - 2 * h, data)) / (2 * h ** 3)
    assert abs(terms.l111 - fd3) <= 1e-4 * abs(terms.l111)


def test_bayes_theta_real_data_values():
    sx, sy = _real_stats()
    # squared-error loss under the non-informative prior reduces to the MLE here
    assert bayes_theta(sx, 1, JEFFREY, "self") == mle_theta(sx)
    assert bayes_theta(sy, 2, JEFFREY, "self") == mle_theta(sy)
    assert abs(bayes_theta(sx, 1, JEFFREY, "elf") - 75.9910) <= 1e-3
    assert abs(bayes_theta(sy, 2, JEFFREY, "elf") - 54.4230) <= 1e-3
    assert abs(bayes_theta(sx, 1, GAMMA_FLAT, "self") - 77.6963) <= 1e-3
    assert abs(bayes_theta(sy, 2, GAMMA_FLAT, "self") - 55.4713) <= 1e-3
    assert abs(bayes_theta(sx, 1, GAMMA_FLAT, "elf") - 76.0109) <= 1e-3
    assert abs(bayes_theta(sy, 2, GAMMA_FLAT, "elf") - 54.4398) <= 1e-3


def test_bayes_theta_full_lindley_cancels_under_jeffrey_self():
    """The Jeffrey log-prior gradient is I'/(2I) while the observed
    information is exactly n*I(theta), so rho*sigma + L3*sigma^2/2 vanishes
    identically: the full expansion agrees with the shortcut to roundoff."""
    sx, _ = _real_stats()
    plain = bayes_theta(sx, 1, JEFFREY, "self")
    full = bayes_theta(sx, 1, JEFFREY, "self", full_lindley=True)
    assert plain == mle_theta(sx)
    assert abs(full - plain) <= 1e-10 * plain
    # under a gamma prior the flag changes nothing: no shortcut applies
    g = bayes_theta(sx, 1, GAMMA_FLAT, "self")
    gf = bayes_theta(sx, 1, GAMMA_FLAT, "self", full_lindley=True)
    assert g == gf
    assert g != plain


def test_bayes_r_real_data_values():
    sx, sy = _real_stats()
    assert abs(bayes_r(sx, sy, JEFFREY, "self") - 0.5834339099165512) <= 1e-10
    assert abs(bayes_r(sx, sy, GAMMA_FLAT, "self") - 0.5834224936109983) <= 1e-10
    assert abs(bayes_r(sx, sy, JEFFREY, "elf") - 0.5792149881044834) <= 1e-10
    assert abs(bayes_r(sx, sy, GAMMA_FLAT, "elf") - 0.5792037845716881) <= 1e-10


def test_elf_below_self_on_real_data():
    # regression on these fixed inputs, not a general theorem
    sx, sy = _real_stats()
    for prior in (JEFFREY, GAMMA_FLAT):
        assert bayes_r(sx, sy, prior, "elf") < bayes_r(sx, sy, prior, "self")


def test_elf_bracket_failure_raises():
    st = SufficientStats(2, 3.0)
    spike = PriorSpec("gamma", (1000.0, 0.0, 1000.0, 0.0))
    with pytest.raises(ApproximationError):
        bayes_theta(st, 1, spike, "elf")
    sx, sy = _real_stats()
    with pytest.raises(ApproximationError):
        bayes_r(sx, sy, PriorSpec("gamma", (1e6, 0.0, 1e6, 0.0)), "elf")


def test_bayes_theta_argument_validation():
    sx, _ = _real_stats()
    with pytest.raises(ValueError):
        bayes_theta(sx, 3, JEFFREY, "self")
    with pytest.raises(ValueError):
        bayes_theta(sx, 1, JEFFREY, "l2")


def test_prior_washout_at_large_n():
    x = sample(1.0, 5000, 11)
    y = sample(1.0, 5000, 12)
    sx, sy = sufficient_stats(x), sufficient_stats(y)
    t1, t2 = mle_theta(sx), mle_theta(sy)
    rm = r_mle(sx, sy)
    priors = [JEFFREY, GAMMA_FLAT,
              PriorSpec("gamma", elicit_gamma_hyper(1.0, 0.5) + elicit_gamma_hyper(1.0, 0.5)),
              PriorSpec("gamma", elicit_gamma_hyper(1.0, 10.0) + elicit_gamma_hyper(1.0, 10.0))]
    for prior in priors:
        for loss in ("self", "elf"):
            assert abs(bayes_theta(sx, 1, prior, loss) - t1) <= 0.01
            assert abs(bayes_theta(sy, 2, prior, loss) - t2) <= 0.01
            assert abs(bayes_r(sx, sy, prior, loss) - rm) <= 0.01


def test_flat_gamma_tracks_jeffrey_at_moderate_n():
    # the all-zero-hyper gamma prior and Jeffrey give nearly equal averages
    # at n=m=50; checked on simulated averages over 1000 pairs
    from invlindley.simulation import ScenarioConfig, run_scenario

    cfg = ScenarioConfig(theta1=1.0, theta2=2.0, n=50, m=50,
                         replications=1000, seed=20260822)
    rep = run_scenario(cfg)
    assert abs(rep.av[("gamma1_self", "r")] - rep.av[("jeffrey_self", "r")]) <= 0.002
