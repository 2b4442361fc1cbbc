# src/vcnls/analysis/__init__.py

from .distributions import BumpFunction, delta_constant_K, evaluate_test_function, pairing
from .norms import (
    DEFAULT_SETTINGS,
    RateFit,
    analytic_linf,
    domain_lp_norm,
    epsilon_modulus,
    linf_blowup_fit,
    linf_norm,
    linf_norm_golden,
    lp_blowup_fit,
    lp_norm_pth_power,
    lp_norm_pth_power_direct,
    norm_trajectory,
    scaled_integrand,
    scaled_l2_integrand,
)
from .quadrature import (
    QuadratureSettings,
    decade_breakpoints,
    half_line_profile_integral,
    integrate_pieces,
    profile_integral_closed_form,
    profile_integral_fixed_rule,
    scaled_profile,
    tail_bound,
)

__all__ = [
    "BumpFunction",
    "delta_constant_K",
    "evaluate_test_function",
    "pairing",
    "DEFAULT_SETTINGS",
    "RateFit",
    "analytic_linf",
    "domain_lp_norm",
    "epsilon_modulus",
    "linf_blowup_fit",
    "linf_norm",
    "linf_norm_golden",
    "lp_blowup_fit",
    "lp_norm_pth_power",
    "lp_norm_pth_power_direct",
    "norm_trajectory",
    "scaled_integrand",
    "scaled_l2_integrand",
    "QuadratureSettings",
    "decade_breakpoints",
    "half_line_profile_integral",
    "integrate_pieces",
    "profile_integral_closed_form",
    "profile_integral_fixed_rule",
    "scaled_profile",
    "tail_bound",
]
