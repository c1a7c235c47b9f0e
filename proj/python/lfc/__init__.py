"""Local fractional calculus: alpha-series algebra, numeric fractal integral,
and evaluators for Hermite-Hadamard and Ostrowski-type inequalities."""

from ._lfc import (
    AlphaContext,
    AlphaSeries,
    GammaPoleError,
    ParseError,
    byparts_residual,
    check_s_convex,
    evaluate,
    falsify,
    fractal_integral,
    gamma,
    identity_residual,
    lf_derivative,
    lf_derivative_n,
    lf_integral,
    log_gamma,
    mittag_leffler,
    ostrowski_constants,
    parse_function,
    run_sweep,
    sweep_csv,
)

__all__ = [
    "AlphaContext",
    "AlphaSeries",
    "GammaPoleError",
    "ParseError",
    "byparts_residual",
    "check_s_convex",
    "evaluate",
    "falsify",
    "fractal_integral",
    "gamma",
    "identity_residual",
    "lf_derivative",
    "lf_derivative_n",
    "lf_integral",
    "log_gamma",
    "mittag_leffler",
    "ostrowski_constants",
    "parse_function",
    "run_sweep",
    "sweep_csv",
]
