"""Optimal hypervolume and multiplicative-approximation distributions on
bi-objective Pareto fronts."""

from ._core import (  # noqa: F401
    BudgetError,
    CertificateError,
    DegenerateReferenceError,
    Front,
    RegimeError,
    SolverError,
    __version__,
    brute_force_best,
    check_certificate,
    contributions,
    convex_hyp_dist,
    convex_hyp_dist_ref,
    convex_hyp_ratio_fixed,
    convex_hyp_ratio_ref,
    convex_opt_app_dist,
    hyp2d,
    interval_worst_point,
    linear_hyp_dist,
    linear_hyp_dist_ref,
    linear_hyp_ratio_fixed,
    linear_hyp_ratio_ref,
    linear_opt_app_dist,
    maximize_hypervolume,
    optimal_approximation,
    ratio,
)
