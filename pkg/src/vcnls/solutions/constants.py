# src/vcnls/solutions/constants.py

import math
from dataclasses import dataclass

from ..core.parameters import EquationParameters, make_parameters

# Potential coefficients forced by the truncation.
TRUNCATION_H1 = 5.0 / 36.0
TRUNCATION_H2 = 0.0

BALANCE_TOLERANCE = 1e-12


def balance_residual(epsilon: float, gamma: float, delta: float) -> float:
    """|gamma delta^2 + 3 epsilon delta - 2 gamma|, zero for a consistent delta."""
    return abs(gamma * delta**2 + 3.0 * epsilon * delta - 2.0 * gamma)


def _balance_scale(epsilon: float, gamma: float, delta: float) -> float:
    # Magnitude of the largest term, for a rounding-relative tolerance.
    return max(1.0, abs(gamma) * delta**2, 3.0 * abs(delta), 2.0 * abs(gamma))


def delta_roots(epsilon: int, gamma: float) -> tuple[float, float]:
    """
    Both roots of the balance quadratic gamma d^2 + 3 epsilon d - 2 gamma = 0.

    Args:
        epsilon (int): +1 or -1.
        gamma (float): Non-zero gain/loss strength.

    Returns:
        tuple[float, float]: (minus root, plus root). Only the minus root has
        delta / gamma < 0 and therefore a real amplitude.
    """
    if gamma == 0:
        raise ValueError("gamma must be non-zero: the complex exponents degenerate at gamma = 0.")
    minus = (-3.0 * epsilon - math.sqrt(8.0 * gamma**2 + 9.0)) / (2.0 * gamma)
    # Product of the roots is -2; this avoids cancellation in the plus root.
    plus = -2.0 / minus
    return minus, plus


@dataclass(frozen=True)
class TruncationConstants:
    """
    Constants of the truncated expansion for a given (epsilon, gamma).

    Attributes:
        epsilon (int): Sign of the cubic term.
        gamma (float): Gain/loss strength.
        delta (float): Minus root of the balance quadratic.
        amplitude_A (float): sqrt(-4 delta / (3 gamma)).
        alpha (complex): -1 - i delta.
        beta (complex): -1 + i delta.
        h1 (float): 5/36.
        h2 (float): 0.
    """

    epsilon: int
    gamma: float
    delta: float
    amplitude_A: float
    alpha: complex
    beta: complex
    h1: float = TRUNCATION_H1
    h2: float = TRUNCATION_H2

    def __post_init__(self):
        if self.gamma == 0:
            raise ValueError("TruncationConstants require gamma != 0.")
        if self.amplitude_A <= 0:
            raise ValueError("amplitude_A must be positive.")
        scale = _balance_scale(self.epsilon, self.gamma, self.delta)
        if balance_residual(self.epsilon, self.gamma, self.delta) > BALANCE_TOLERANCE * scale:
            raise ValueError(f"delta = {self.delta!r} does not solve the balance quadratic.")

    def equation_parameters(self) -> EquationParameters:
        """The equation the truncated solutions solve."""
        return make_parameters(self.epsilon, self.gamma, self.h1, self.h2)


def truncation_constants(epsilon: int, gamma: float) -> TruncationConstants:
    """
    Derives delta, A and the conjugate exponents from (epsilon, gamma).

    Args:
        epsilon (int): +1 or -1.
        gamma (float): Non-zero gain/loss strength.

    Returns:
        TruncationConstants: Constants built on the minus root.
    """
    make_parameters(epsilon, gamma, TRUNCATION_H1, TRUNCATION_H2)
    delta, _ = delta_roots(epsilon, gamma)
    amplitude_squared = -4.0 * delta / (3.0 * gamma)
    if amplitude_squared <= 0:
        raise ValueError(
            f"A^2 = {amplitude_squared!r} is not positive for (epsilon, gamma) = ({epsilon}, {gamma})."
        )
    return TruncationConstants(
        epsilon=int(epsilon),
        gamma=float(gamma),
        delta=delta,
        amplitude_A=math.sqrt(amplitude_squared),
        alpha=complex(-1.0, -delta),
        beta=complex(-1.0, delta),
    )


def u0v0_coefficient(gamma: float, delta: float) -> float:
    """-3 delta / gamma, the real coefficient of the leading product u0 v0."""
    if gamma == 0:
        raise ValueError("gamma must be non-zero.")
    return -3.0 * delta / gamma


def leading_order_coefficient(epsilon: int, gamma: float, delta: float) -> complex:
    """
    -alpha (alpha - 1) / (epsilon + i gamma) with alpha = -1 - i delta.

    For a consistent delta this is real and equal to u0v0_coefficient.
    """
    alpha = complex(-1.0, -delta)
    return -alpha * (alpha - 1.0) / complex(epsilon, gamma)


def exponent_sum(constants: TruncationConstants) -> complex:
    """alpha + beta; dominant balance of psi_xx against the cubic term fixes it at -2."""
    return constants.alpha + constants.beta
