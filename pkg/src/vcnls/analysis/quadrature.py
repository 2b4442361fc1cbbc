# src/vcnls/analysis/quadrature.py

import logging
import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np
from scipy import integrate, special

from ..core.errors import DivergentIntegralError, QuadratureError

logger = logging.getLogger(__name__)

# Largest tail cutoff accepted; beyond this the y^(-p/2) bound is useless in doubles.
MAX_TAIL_CUTOFF = 1e300

# Ratio by which a reported error estimate may exceed the requested tolerance
# before a quadrature piece is treated as failed.
ERROR_SLACK = 100.0


@dataclass(frozen=True)
class QuadratureSettings:
    """
    Tolerances for the adaptive scheme and the fixed double-exponential rule.

    Attributes:
        abs_tol (float): Absolute tolerance; also the budget for the neglected tail.
        rel_tol (float): Relative tolerance per integration piece.
        max_subdivisions (int): QUADPACK subdivision limit per piece.
        tail_cutoff_Y (float | None): Half-line truncation point in the scaled
            variable. None derives it from abs_tol and p.
        fixed_rule_step (float): Step of the double-exponential rule.
    """

    abs_tol: float = 1e-12
    rel_tol: float = 1e-10
    max_subdivisions: int = 200
    tail_cutoff_Y: Optional[float] = None
    fixed_rule_step: float = 1.0 / 64.0

    def __post_init__(self):
        if not self.abs_tol > 0 or not self.rel_tol > 0:
            raise ValueError("Quadrature tolerances must be positive.")
        if not isinstance(self.max_subdivisions, int) or self.max_subdivisions < 1:
            raise ValueError("max_subdivisions must be a positive integer.")
        if self.tail_cutoff_Y is not None and not self.tail_cutoff_Y > 1:
            raise ValueError("tail_cutoff_Y must exceed 1.")
        if not 0 < self.fixed_rule_step <= 0.5:
            raise ValueError("fixed_rule_step must lie in (0, 0.5].")

    def cutoff_for(self, p: float) -> float:
        """
        Truncation point Y with Y^(1 - p/2) / (p/2 - 1) <= abs_tol.

        The bound holds for the A-free profile y^(p/6) / (y^(2/3) + C)^p, which is
        dominated by y^(-p/2) for every C > 0.
        """
        excess = p / 2.0 - 1.0
        if not excess > 0:
            raise DivergentIntegralError(f"p = {p} <= 2: the tail ~ y^(-p/2) is not integrable.")
        if self.tail_cutoff_Y is not None:
            bound = tail_bound(self.tail_cutoff_Y, p)
            if bound > self.abs_tol:
                raise ValueError(
                    f"tail_cutoff_Y = {self.tail_cutoff_Y:g} leaves a tail bound {bound:.3e} "
                    f"above abs_tol = {self.abs_tol:.3e} for p = {p}."
                )
            return float(self.tail_cutoff_Y)
        log_cutoff = -math.log(excess * self.abs_tol) / excess
        if log_cutoff > math.log(MAX_TAIL_CUTOFF):
            raise DivergentIntegralError(
                f"Tail cutoff for p = {p} and abs_tol = {self.abs_tol:g} is not representable."
            )
        return max(math.exp(log_cutoff), 10.0)


def tail_bound(Y: float, p: float) -> float:
    """Integral of y^(-p/2) over [Y, infinity)."""
    excess = p / 2.0 - 1.0
    return Y ** (-excess) / excess


def decade_breakpoints(lower: float, upper: float) -> list[float]:
    """
    Breakpoints splitting [lower, upper] at 0 and at +-10^k, so each piece
    spans at most one decade of |y|.
    """
    if not upper > lower:
        raise ValueError("decade_breakpoints needs upper > lower.")
    points = {float(lower), float(upper)}
    if lower < 0 < upper:
        points.add(0.0)
    magnitudes = [abs(v) for v in (lower, upper) if v != 0]
    touches_origin = lower * upper <= 0
    k_low = -3 if touches_origin else math.floor(math.log10(min(magnitudes)))
    k_high = math.ceil(math.log10(max(magnitudes)))
    for k in range(k_low, k_high + 1):
        for candidate in (10.0**k, -(10.0**k)):
            if lower < candidate < upper:
                points.add(candidate)
    return sorted(points)


def integrate_pieces(
    integrand: Callable[[float], float], breakpoints, settings: QuadratureSettings
) -> float:
    """
    Sums adaptive quadratures over consecutive breakpoints.

    The absolute tolerance is shared evenly between the pieces; a piece whose
    QUADPACK status is non-zero and whose error estimate exceeds its tolerance
    by more than ERROR_SLACK raises QuadratureError.
    """
    breakpoints = list(breakpoints)
    pieces = list(zip(breakpoints[:-1], breakpoints[1:]))
    piece_abs_tol = settings.abs_tol / max(len(pieces), 1)
    total = 0.0
    for lower, upper in pieces:
        result = integrate.quad(
            integrand,
            lower,
            upper,
            epsabs=piece_abs_tol,
            epsrel=settings.rel_tol,
            limit=settings.max_subdivisions,
            full_output=1,
        )
        value, error = result[0], result[1]
        if len(result) > 3:
            allowed = ERROR_SLACK * max(piece_abs_tol, settings.rel_tol * abs(value))
            if not math.isfinite(value) or error > allowed:
                raise QuadratureError(
                    f"Quadrature on [{lower:g}, {upper:g}] failed: {result[3]}",
                    interval=(lower, upper),
                )
            logger.debug("quad on [%g, %g] accepted with status message: %s", lower, upper, result[3])
        total += value
    return total


def scaled_profile(y, C: float, p: float):
    """
    |y|^(p/6) / (|y|^(2/3) + C)^p, evaluated without overflow for large |y|.
    """
    y = np.abs(np.asarray(y, dtype=float))
    with np.errstate(divide="ignore", over="ignore", under="ignore", invalid="ignore"):
        y23 = np.cbrt(y) ** 2
        near = y ** (p / 6.0) / (y23 + C) ** p
        far = y ** (-p / 2.0) / (1.0 + C / y23) ** p
    values = np.where(y <= 1.0, near, far)
    if values.ndim == 0:
        return float(values)
    return values


def half_line_profile_integral(C: float, p: float, settings: QuadratureSettings) -> float:
    """
    Adaptive quadrature of the scaled profile over [0, Y], Y from the tail bound.

    Args:
        C (float): Positive profile constant.
        p (float): Exponent, > 2.
        settings (QuadratureSettings): Tolerances.

    Returns:
        float: The half-line integral to within abs_tol plus the neglected tail.
    """
    if not C > 0:
        raise ValueError(f"C must be positive, got {C!r}.")
    cutoff = settings.cutoff_for(p)
    value = integrate_pieces(
        lambda y: scaled_profile(y, C, p), decade_breakpoints(0.0, cutoff), settings
    )
    logger.debug("half-line profile integral C=%g p=%g Y=%.3e -> %.15g", C, p, cutoff, value)
    return value


def profile_integral_fixed_rule(C: float, p: float, settings: QuadratureSettings) -> float:
    """
    Double-exponential rule for the same half-line integral, independent of
    the adaptive scheme and of the tail cutoff.

    The half-line is compactified through v = y / (1 + y) in (0, 1) and v is
    placed on tanh-sinh abscissae, i.e. y = exp(pi sinh u) on a uniform grid in u.
    Terms are formed in log space so that no node overflows.
    """
    if not C > 0:
        raise ValueError(f"C must be positive, got {C!r}.")
    excess = p / 2.0 - 1.0
    if not excess > 0:
        raise DivergentIntegralError(f"p = {p} <= 2: the tail ~ y^(-p/2) is not integrable.")
    # Beyond |z| = reach the summand is below e^-40 relative to the bulk.
    reach = abs(1.5 * math.log(C)) + 40.0 / min(excess, 1.0 + p / 6.0)
    extent = math.asinh(reach / math.pi) + 0.5
    h = settings.fixed_rule_step
    u = np.arange(-math.ceil(extent / h), math.ceil(extent / h) + 1) * h
    z = math.pi * np.sinh(u)
    # log of f(y) * dy/du with y = e^z, dy/du = y * pi cosh u.
    log_terms = (
        (1.0 + p / 6.0) * z
        - p * np.logaddexp(2.0 * z / 3.0, math.log(C))
        + np.log(math.pi * np.cosh(u))
    )
    return float(h * np.sum(np.exp(log_terms)))


def profile_integral_closed_form(C: float, p: float) -> float:
    """
    Closed form of the half-line integral: with u = y^(2/3) it becomes a Beta integral,

        (3/2) C^(3/2 - 3p/4) B(p/4 + 3/2, 3p/4 - 3/2).
    """
    if not C > 0:
        raise ValueError(f"C must be positive, got {C!r}.")
    if not p > 2:
        raise DivergentIntegralError(f"p = {p} <= 2: the tail ~ y^(-p/2) is not integrable.")
    return 1.5 * C ** (1.5 - 0.75 * p) * special.beta(p / 4.0 + 1.5, 0.75 * p - 1.5)
