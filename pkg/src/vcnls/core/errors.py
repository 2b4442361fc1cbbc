# src/vcnls/core/errors.py

from typing import Optional


class DomainError(ValueError):
    """Raised when a point lies outside x > 0 or a stencil leaves the half-line."""


class BranchError(ValueError):
    """Raised when a square-root or power branch argument is not strictly positive."""


class DivergentIntegralError(ValueError):
    """Raised when an improper integral has a non-integrable tail (p <= 2)."""


class LieAlgebraError(ValueError):
    """Raised when a vector field leaves the polynomial representation."""


class ConfigError(ValueError):
    """Raised when an experiment configuration fails schema validation."""


class QuadratureError(RuntimeError):
    """
    Raised when an adaptive quadrature piece cannot meet its tolerance.

    Args:
        message (str): Description of the failure.
        interval (tuple[float, float] | None): The integration piece that failed.
    """

    def __init__(self, message: str, interval: Optional[tuple[float, float]] = None):
        super().__init__(message)
        self.interval = interval
