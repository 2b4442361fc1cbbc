# src/vcnls/core/parameters.py

import math
import numbers
from dataclasses import dataclass


@dataclass(frozen=True)
class EquationParameters:
    """
    Constants of the canonical equation

        i psi_t + psi_xx + (epsilon + i gamma) |psi|^2 psi / x + (h1 + i h2) psi / x^2 = 0.

    Attributes:
        epsilon (int): Sign of the cubic term, +1 or -1.
        gamma (float): Strength of the gain/loss part of the cubic coefficient.
        h1 (float): Real part of the 1/x^2 potential coefficient.
        h2 (float): Imaginary part of the 1/x^2 potential coefficient.
    """

    epsilon: int
    gamma: float
    h1: float
    h2: float

    def __post_init__(self):
        if self.epsilon not in (1, -1) or isinstance(self.epsilon, bool):
            raise ValueError(f"epsilon must be +1 or -1, got {self.epsilon!r}.")
        for name in ("gamma", "h1", "h2"):
            value = getattr(self, name)
            if not isinstance(value, numbers.Real) or isinstance(value, bool):
                raise ValueError(f"{name} must be a real number, got {value!r}.")
            if not math.isfinite(value):
                raise ValueError(f"{name} must be finite, got {value!r}.")
        # Normalise to the declared types so equal records compare and hash equal.
        object.__setattr__(self, "epsilon", int(self.epsilon))
        for name in ("gamma", "h1", "h2"):
            object.__setattr__(self, name, float(getattr(self, name)))

    @property
    def cubic_coefficient(self) -> complex:
        """epsilon + i gamma."""
        return complex(self.epsilon, self.gamma)

    @property
    def potential_coefficient(self) -> complex:
        """h1 + i h2."""
        return complex(self.h1, self.h2)

    def to_dict(self) -> dict:
        return {"epsilon": self.epsilon, "gamma": self.gamma, "h1": self.h1, "h2": self.h2}


def make_parameters(epsilon: int, gamma: float, h1: float, h2: float) -> EquationParameters:
    """
    Validates and builds an EquationParameters record.

    Args:
        epsilon (int): +1 or -1. Floats equal to +-1.0 are accepted.
        gamma (float): Gain/loss strength.
        h1 (float): Real potential coefficient.
        h2 (float): Imaginary potential coefficient.

    Returns:
        EquationParameters: The validated record.
    """
    if isinstance(epsilon, float):
        if not math.isfinite(epsilon) or epsilon not in (1.0, -1.0):
            raise ValueError(f"epsilon must be +1 or -1, got {epsilon!r}.")
        epsilon = int(epsilon)
    return EquationParameters(epsilon=epsilon, gamma=gamma, h1=h1, h2=h2)
