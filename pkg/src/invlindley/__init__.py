"""Inverse Lindley distribution: estimation, stress-strength reliability,
Lindley-approximation Bayes estimators and a Monte Carlo study harness."""

from .bayes_lindley import (
    ApproximationError,
    LindleyTerms,
    PriorSpec,
    bayes_r,
    bayes_theta,
    elicit_gamma_hyper,
    lindley_terms,
)
from .datasets import BUILTIN_NAMES, Dataset, load_builtin, load_file
from .distribution import (
    cdf,
    hazard,
    hazard_peak,
    ild_from_uniforms,
    ird_cdf,
    ird_loglik,
    ird_mle,
    ird_pdf,
    logpdf,
    median,
    mixture_weight,
    mode,
    pdf,
    quantile,
    renyi_entropy,
    renyi_entropy_series,
    sample,
    survival,
)
from .gof import FitReport, aic_bic, compare_models, ecdf_curve, ks_statistic
from .mle import (
    SufficientStats,
    ThetaEstimate,
    fisher_info,
    loglik,
    mle_theta,
    score,
    sufficient_stats,
    theta_ci,
)
from .simulation import (
    ScenarioConfig,
    SimulationReport,
    parse_scenario_file,
    parse_table_csv,
    render_table,
    run_scenario,
    run_suite,
)
from .special import lambert_w, log_gamma, normal_quantile
from .stress_strength import RDerivatives, r_ci, r_derivatives, r_mle, reliability

__version__ = "0.1.0"

__all__ = [
    "ApproximationError",
    "BUILTIN_NAMES",
    "Dataset",
    "FitReport",
    "LindleyTerms",
    "PriorSpec",
    "RDerivatives",
    "ScenarioConfig",
    "SimulationReport",
    "SufficientStats",
    "ThetaEstimate",
    "aic_bic",
    "bayes_r",
    "bayes_theta",
    "cdf",
    "compare_models",
    "ecdf_curve",
    "elicit_gamma_hyper",
    "fisher_info",
    "hazard",
    "hazard_peak",
    "ild_from_uniforms",
    "ird_cdf",
    "ird_loglik",
    "ird_mle",
    "ird_pdf",
    "ks_statistic",
    "lambert_w",
    "lindley_terms",
    "load_builtin",
    "load_file",
    "log_gamma",
    "loglik",
    "logpdf",
    "median",
    "mixture_weight",
    "mle_theta",
    "mode",
    "normal_quantile",
    "parse_scenario_file",
    "parse_table_csv",
    "pdf",
    "quantile",
    "r_ci",
    "r_derivatives",
    "r_mle",
    "reliability",
    "renyi_entropy",
    "renyi_entropy_series",
    "run_scenario",
    "run_suite",
    "render_table",
    "sample",
    "score",
    "sufficient_stats",
    "survival",
    "theta_ci",
    "__version__",
]
