# src/vcnls/analysis/distributions.py

import logging
import math
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from ..core.errors import DomainError
from .quadrature import (
    QuadratureSettings,
    decade_breakpoints,
    half_line_profile_integral,
    integrate_pieces,
    scaled_profile,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BumpFunction:
    """
    Smooth compactly supported test function

        phi(x) = normalization * exp(1 - 1 / (1 - s^2)),  s = (x - center) / radius,

    for |s| < 1 and zero elsewhere, so phi(center) = normalization.
    """

    center: float
    radius: float
    normalization: float = 1.0

    def __post_init__(self):
        if not self.radius > 0:
            raise ValueError(f"radius must be positive, got {self.radius!r}.")
        if not all(math.isfinite(v) for v in (self.center, self.radius, self.normalization)):
            raise ValueError("BumpFunction parameters must be finite.")

    @property
    def support(self) -> tuple[float, float]:
        return self.center - self.radius, self.center + self.radius

    @property
    def sup_norm(self) -> float:
        return abs(self.normalization)

    def __call__(self, x):
        s = (np.asarray(x, dtype=float) - self.center) / self.radius
        inside = np.abs(s) < 1.0
        with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
            values = np.where(inside, np.exp(1.0 - 1.0 / (1.0 - s**2)), 0.0)
        values = self.normalization * values
        if values.ndim == 0:
            return float(values)
        return values


PairingFunction = Union[BumpFunction, Sequence[BumpFunction]]


def _bumps(phi: PairingFunction) -> list[BumpFunction]:
    if isinstance(phi, BumpFunction):
        return [phi]
    bumps = list(phi)
    if not all(isinstance(b, BumpFunction) for b in bumps):
        raise TypeError("phi must be a BumpFunction or a sequence of them.")
    return bumps


def evaluate_test_function(phi: PairingFunction, x):
    """Value of a bump or a sum of bumps."""
    return sum((bump(x) for bump in _bumps(phi)), 0.0)


def pairing(
    p: float,
    eps: float,
    A: float,
    C: float,
    phi: PairingFunction,
    settings: QuadratureSettings,
) -> float:
    """
    <eps^((p-2)/2) |psi_eps|^p, phi> over the support of phi, with the even
    modulus extension to x < 0.

    In y = x / eps the integrand is A^p profile(|y|) phi(eps y), which does not
    degrade as eps -> 0. A sequence of bumps is paired as their sum.

    Args:
        p (float): Exponent, > 2.
        eps (float): Scale, > 0.
        A (float): Amplitude.
        C (float): Profile constant, > 0.
        phi (BumpFunction | Sequence[BumpFunction]): Test function.
        settings (QuadratureSettings): Tolerances.

    Returns:
        float: The pairing.
    """
    if not p > 2:
        raise ValueError(f"pairing needs p > 2, got {p!r}.")
    if not eps > 0:
        raise DomainError(f"eps must be positive, got {eps!r}.")
    if not C > 0:
        raise ValueError(f"C must be positive, got {C!r}.")
    total = 0.0
    for bump in _bumps(phi):
        if bump.normalization == 0:
            continue
        lower, upper = bump.support

        def integrand(y: float, bump: BumpFunction = bump) -> float:
            return scaled_profile(y, C, p) * bump(eps * y)

        total += A**p * integrate_pieces(
            integrand, decade_breakpoints(lower / eps, upper / eps), settings
        )
    logger.debug("pairing p=%g eps=%.3e -> %.15g", p, eps, total)
    return total


def delta_constant_K(A: float, C: float, p: float, settings: QuadratureSettings) -> float:
    """K = A^p times the full-line integral of |y|^(p/6) / (|y|^(2/3) + C)^p."""
    return 2.0 * A**p * half_line_profile_integral(C, p, settings)
