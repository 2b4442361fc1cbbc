# src/vcnls/analysis/norms.py

import logging
import math
from dataclasses import dataclass, field

import numpy as np
from scipy import optimize, special

from ..core.errors import DomainError
from ..solutions.closed_form import SolutionSpec
from ..utils.estimators import fit_log_log_slope
from .quadrature import (
    QuadratureSettings,
    decade_breakpoints,
    half_line_profile_integral,
    integrate_pieces,
)

logger = logging.getLogger(__name__)

DEFAULT_SETTINGS = QuadratureSettings()

# Half-width, in u = ln x, of the bracket around the maximizer.
MAXIMIZER_BRACKET = 20.0


@dataclass(frozen=True)
class RateFit:
    """Log-log least-squares fit of a norm against eps."""

    eps_samples: list
    values: list
    fitted_slope: float
    fit_residual: float
    intercept: float = 0.0
    argmax: list = field(default_factory=list)

    def __post_init__(self):
        if len(self.eps_samples) != len(self.values) or len(self.eps_samples) < 3:
            raise ValueError("RateFit needs equal-length samples with at least 3 entries.")
        if any(b >= a for a, b in zip(self.eps_samples, self.eps_samples[1:])):
            raise ValueError("eps_samples must be strictly decreasing.")


def _check_ladder(eps_values) -> list[float]:
    ladder = [float(e) for e in eps_values]
    if len(ladder) < 3:
        raise ValueError("An eps ladder needs at least 3 values.")
    if any(e <= 0 for e in ladder):
        raise DomainError("eps values must be positive.")
    if any(b >= a for a, b in zip(ladder, ladder[1:])):
        raise ValueError("eps values must be strictly decreasing.")
    if ladder[0] / ladder[-1] < 100.0 * (1.0 - 1e-12):
        raise ValueError("The eps ladder must span at least 2 decades.")
    return ladder


def epsilon_modulus(A: float, C: float, eps: float, x):
    """|psi_eps(x)| = A |x|^(1/6) / (|x|^(2/3) + eps^(2/3) C), even in x."""
    x = np.abs(np.asarray(x, dtype=float))
    values = A * x ** (1.0 / 6.0) / (np.cbrt(x) ** 2 + np.cbrt(eps) ** 2 * C)
    if values.ndim == 0:
        return float(values)
    return values


def lp_norm_pth_power(
    A: float, C: float, p: float, eps: float, settings: QuadratureSettings = DEFAULT_SETTINGS
) -> float:
    """
    Full-line integral of |psi_eps|^p with the even modulus extension.

    The substitution x = eps y gives exactly 2 A^p eps^(-(p-2)/2) I(p, C), where
    I is the half-line integral of the scaled profile; I is computed once by
    adaptive quadrature with a closed-form tail bound.

    Args:
        A (float): Amplitude, >= 0.
        C (float): Profile constant, > 0.
        p (float): Exponent, > 2.
        eps (float): Scale, > 0.
        settings (QuadratureSettings): Tolerances.

    Returns:
        float: The p-th power of the L_p norm.
    """
    if not eps > 0:
        raise DomainError(f"eps must be positive, got {eps!r}.")
    if A < 0:
        raise ValueError("A must be non-negative.")
    integral = half_line_profile_integral(C, p, settings)
    return 2.0 * A**p * eps ** (-(p - 2.0) / 2.0) * integral


def lp_blowup_fit(
    A: float, C: float, p: float, eps_values, settings: QuadratureSettings = DEFAULT_SETTINGS
) -> RateFit:
    """
    Fits log ||psi_eps||_p against log eps over a ladder spanning >= 2 decades.
    The exact slope is -(p - 2) / (2 p).
    """
    ladder = _check_ladder(eps_values)
    norms = []
    for eps in ladder:
        norms.append(lp_norm_pth_power(A, C, p, eps, settings) ** (1.0 / p))
        logger.info("p = %g  eps = %.3e  ||psi_eps||_p = %.12g", p, eps, norms[-1])
    fit = fit_log_log_slope(ladder, norms)
    return RateFit(ladder, norms, fit.slope, fit.fit_residual, fit.intercept)


def linf_norm(A: float, C: float, eps: float) -> tuple[float, float]:
    """
    Maximum of A x^(1/6) / (x^(2/3) + eps^(2/3) C) over x > 0.

    The logarithmic derivative in u = ln x, 1/6 - (2/3) x^(2/3) / (x^(2/3) + K)
    with K = eps^(2/3) C, decreases from 1/6 to -1/2; its root is bracketed and
    found by bisection-type root finding.

    Returns:
        tuple[float, float]: (max_value, argmax).
    """
    if not (A > 0 and C > 0 and eps > 0):
        raise ValueError("linf_norm needs A, C, eps > 0.")
    log_K = (2.0 / 3.0) * math.log(eps) + math.log(C)

    def log_derivative(u: float) -> float:
        return 1.0 / 6.0 - (2.0 / 3.0) * special.expit(2.0 * u / 3.0 - log_K)

    center = 1.5 * log_K
    u_star = optimize.brentq(
        log_derivative,
        center - MAXIMIZER_BRACKET,
        center + MAXIMIZER_BRACKET,
        xtol=1e-14,
        rtol=4.0 * np.finfo(float).eps,
    )
    argmax = math.exp(u_star)
    return epsilon_modulus(A, C, eps, argmax), argmax


def linf_norm_golden(A: float, C: float, eps: float) -> tuple[float, float]:
    """Golden-section maximization of the log-modulus; cross-check for linf_norm."""
    if not (A > 0 and C > 0 and eps > 0):
        raise ValueError("linf_norm_golden needs A, C, eps > 0.")
    center = 1.5 * ((2.0 / 3.0) * math.log(eps) + math.log(C))

    def negative_log_modulus(u: float) -> float:
        return -math.log(epsilon_modulus(A, C, eps, math.exp(u)))

    result = optimize.minimize_scalar(
        negative_log_modulus,
        bracket=(center - MAXIMIZER_BRACKET, center, center + MAXIMIZER_BRACKET),
        method="golden",
        options={"xtol": 1e-12},
    )
    argmax = math.exp(result.x)
    return epsilon_modulus(A, C, eps, argmax), argmax


def linf_blowup_fit(A: float, C: float, eps_values) -> RateFit:
    """Fits log ||psi_eps||_inf against log eps; the exact slope is -1/2."""
    ladder = _check_ladder(eps_values)
    maxima = [linf_norm(A, C, eps) for eps in ladder]
    values = [m for m, _ in maxima]
    fit = fit_log_log_slope(ladder, values)
    return RateFit(
        ladder, values, fit.slope, fit.fit_residual, fit.intercept, [x for _, x in maxima]
    )


def analytic_linf(A: float, C: float, eps: float) -> tuple[float, float]:
    """
    Closed-form maximum and maximizer: x0 = eps C^(3/2) / sqrt(27),
    max = (3 A / 4) 27^(-1/12) C^(-3/4) eps^(-1/2).
    """
    argmax = eps * C**1.5 / math.sqrt(27.0)
    return 0.75 * A * 27.0 ** (-1.0 / 12.0) * C ** (-0.75) * eps**-0.5, argmax


def norm_trajectory(
    A: float,
    C: float,
    p: float,
    b: float,
    T_blow: float,
    times,
    settings: QuadratureSettings = DEFAULT_SETTINGS,
) -> np.ndarray:
    """
    Full-line norms of the transformed stationary solution at times t < T_blow,
    where its modulus is that of psi_eps with eps = b (t - T_blow).

    Args:
        p (float): Exponent > 2, or math.inf for the sup norm.
        times (array-like): Times strictly before T_blow.

    Returns:
        np.ndarray: One norm per time.
    """
    if not b < 0 or not T_blow > 0:
        raise ValueError("norm_trajectory needs b < 0 and T_blow > 0.")
    norms = []
    for t in np.asarray(times, dtype=float):
        eps = b * (t - T_blow)
        if not eps > 0:
            raise DomainError(f"t = {t} is not before the blow-up time {T_blow}.")
        if math.isinf(p):
            norms.append(linf_norm(A, C, eps)[0])
        else:
            norms.append(lp_norm_pth_power(A, C, p, eps, settings) ** (1.0 / p))
    return np.array(norms)


def domain_lp_norm(
    spec: SolutionSpec,
    t: float,
    p: float,
    x_min: float,
    x_max: float,
    settings: QuadratureSettings = DEFAULT_SETTINGS,
) -> float:
    """(integral over [x_min, x_max] of |psi(x, t)|^p dx)^(1/p) by adaptive quadrature."""
    if not 0 < x_min < x_max:
        raise DomainError("domain_lp_norm needs 0 < x_min < x_max.")
    if not p >= 1:
        raise ValueError("domain_lp_norm needs p >= 1.")
    value = integrate_pieces(
        lambda x: abs(spec.evaluate(x, t)) ** p, decade_breakpoints(x_min, x_max), settings
    )
    return value ** (1.0 / p)


def scaled_integrand(A: float, C: float, p: float, eps: float, y):
    """
    eps^((p-2)/2) |psi_eps(eps y)|^p eps: the integrand of the p-th power norm
    after x = eps y. It does not depend on eps; at p = 2 the full-line integral
    of it diverges logarithmically.
    """
    y = np.asarray(y, dtype=float)
    return eps ** ((p - 2.0) / 2.0) * epsilon_modulus(A, C, eps, eps * y) ** p * eps


def scaled_l2_integrand(A: float, C: float, eps: float, y):
    """The p = 2 case of scaled_integrand; its tail decays like 1 / |y|."""
    return scaled_integrand(A, C, 2.0, eps, y)


def lp_norm_pth_power_direct(
    A: float, C: float, p: float, eps: float, settings: QuadratureSettings = DEFAULT_SETTINGS
) -> float:
    """
    The same full-line integral as lp_norm_pth_power, integrated in x without
    the scaling substitution, over [0, eps Y] split at decades of x.
    """
    if not eps > 0:
        raise DomainError(f"eps must be positive, got {eps!r}.")
    if not C > 0:
        raise ValueError(f"C must be positive, got {C!r}.")
    upper = eps * settings.cutoff_for(p)
    value = integrate_pieces(
        lambda x: epsilon_modulus(A, C, eps, x) ** p, decade_breakpoints(0.0, upper), settings
    )
    return 2.0 * value
