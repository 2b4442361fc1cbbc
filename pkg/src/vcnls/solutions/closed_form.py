# src/vcnls/solutions/closed_form.py

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Union

import numpy as np

from ..core.errors import BranchError, DomainError
from .constants import TruncationConstants

ArrayLike = Union[float, np.ndarray]


def positive_points(x: ArrayLike) -> np.ndarray:
    """Returns x as a float array, raising DomainError unless every entry is > 0."""
    points = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(points)) or np.any(points <= 0.0):
        raise DomainError("Solutions are evaluated on x > 0 only.")
    return points


def as_output(values: np.ndarray, x: ArrayLike):
    """Collapses 0-d results back to a Python complex."""
    if np.ndim(x) == 0:
        return complex(values)
    return values


class SolutionSpec(ABC):
    """
    Abstract base class for closed-form fields psi(x, t) on x > 0.
    Subclasses are immutable and evaluate vectorized over x.
    """

    @abstractmethod
    def evaluate(self, x: ArrayLike, t: float = 0.0):
        """
        Evaluates the field.

        Args:
            x (float | np.ndarray): Positive spatial point(s).
            t (float): Time.

        Returns:
            complex | np.ndarray: psi(x, t), with the shape of x.
        """
        pass

    def __call__(self, x: ArrayLike, t: float = 0.0):
        return self.evaluate(x, t)


@dataclass(frozen=True)
class StationarySolution(SolutionSpec):
    """
    psi(x) = A x^(1/6) / (x^(2/3) + C) * exp(i (-delta ln(x^(2/3) + C) + k3)),
    with C = k1^(2/3) k2 > 0.
    """

    constants: TruncationConstants
    k1: float
    k2: float
    k3: float = 0.0

    def __post_init__(self):
        if not self.C > 0:
            raise ValueError(f"Stationary solution needs C = k1^(2/3) k2 > 0, got {self.C!r}.")

    @property
    def C(self) -> float:
        return float(np.cbrt(self.k1) ** 2 * self.k2)

    def evaluate(self, x: ArrayLike, t: float = 0.0):
        return eval_stationary(self, x)


@dataclass(frozen=True)
class TruncatedSolution(SolutionSpec):
    """
    Time-dependent family with s = k4 t + k1:

        psi = A x^(1/6) / (x^(2/3) + k2 s^(2/3))
              * exp(i (k4 x^2 / (4 s) - delta ln(x^(2/3) / s^(2/3) + k2) + k3)).

    It collapses onto the stationary solution at k4 = 0 (see stationary_limit).
    """

    constants: TruncationConstants
    k1: float
    k2: float
    k3: float
    k4: float

    def __post_init__(self):
        if not self.k2 > 0:
            raise ValueError(f"Truncated solution needs k2 > 0, got {self.k2!r}.")

    def time_scale(self, t: float) -> float:
        return self.k4 * t + self.k1

    def blowup_time(self) -> float:
        """Time at which k4 t + k1 reaches 0; infinite when the family never collapses."""
        if self.k4 == 0 or self.k1 / self.k4 > 0:
            return float("inf")
        return -self.k1 / self.k4

    def stationary_limit(self) -> StationarySolution:
        """The stationary solution this family equals when k4 = 0."""
        if self.k4 != 0:
            raise ValueError("stationary_limit is defined only for k4 = 0.")
        if self.k1 <= 0:
            raise BranchError("k1 must be positive for the stationary limit.")
        k3 = self.k3 + (2.0 / 3.0) * self.constants.delta * np.log(self.k1)
        return StationarySolution(self.constants, k1=self.k1, k2=self.k2, k3=float(k3))

    def evaluate(self, x: ArrayLike, t: float = 0.0):
        return eval_truncated(self, x, t)


def eval_stationary(spec: StationarySolution, x: ArrayLike):
    """
    Evaluates the stationary solution.

    Args:
        spec (StationarySolution): The solution.
        x (float | np.ndarray): Positive point(s).

    Returns:
        complex | np.ndarray: psi(x).
    """
    points = positive_points(x)
    constants = spec.constants
    denominator = np.cbrt(points) ** 2 + spec.C
    modulus = constants.amplitude_A * points ** (1.0 / 6.0) / denominator
    phase = -constants.delta * np.log(denominator) + spec.k3
    return as_output(modulus * np.exp(1j * phase), x)


def eval_truncated(spec: TruncatedSolution, x: ArrayLike, t: float):
    """
    Evaluates the time-dependent truncated solution.

    Args:
        spec (TruncatedSolution): The solution.
        x (float | np.ndarray): Positive point(s).
        t (float): Time; k4 t + k1 must be positive.

    Returns:
        complex | np.ndarray: psi(x, t).
    """
    scale = spec.time_scale(t)
    if not scale > 0:
        raise BranchError(f"k4 t + k1 = {scale!r} must be positive (t = {t!r}).")
    points = positive_points(x)
    constants = spec.constants
    x23 = np.cbrt(points) ** 2
    s23 = np.cbrt(scale) ** 2
    modulus = constants.amplitude_A * points ** (1.0 / 6.0) / (x23 + spec.k2 * s23)
    phase = (
        spec.k4 * points**2 / (4.0 * scale)
        - constants.delta * np.log(x23 / s23 + spec.k2)
        + spec.k3
    )
    return as_output(modulus * np.exp(1j * phase), x)


def modulus_parameters(spec: StationarySolution) -> tuple[float, float]:
    """(A, C) of a stationary solution, the inputs of the blow-up analysis."""
    return spec.constants.amplitude_A, spec.C


@dataclass(frozen=True)
class ZeroSolution(SolutionSpec):
    """psi = 0."""

    def evaluate(self, x: ArrayLike, t: float = 0.0):
        points = positive_points(x)
        return as_output(np.zeros_like(points, dtype=complex), x)


@dataclass(frozen=True)
class ScaledSolution(SolutionSpec):
    """factor * inner; a unit-modulus factor is a gauge shift."""

    inner: SolutionSpec
    factor: complex

    def evaluate(self, x: ArrayLike, t: float = 0.0):
        return complex(self.factor) * self.inner.evaluate(x, t)


@dataclass(frozen=True)
class GaussianPacket(SolutionSpec):
    """
    Static Gaussian profile amplitude * exp(-(x - center)^2 / (2 width^2) + i k x).
    Not a solution; used as smooth initial data for simulator sanity runs.
    """

    center: float
    width: float
    wavenumber: float = 0.0
    amplitude: float = 1.0

    def __post_init__(self):
        if not self.width > 0:
            raise ValueError("GaussianPacket width must be positive.")

    def evaluate(self, x: ArrayLike, t: float = 0.0):
        points = positive_points(x)
        envelope = np.exp(-((points - self.center) ** 2) / (2.0 * self.width**2))
        return as_output(self.amplitude * envelope * np.exp(1j * self.wavenumber * points), x)
