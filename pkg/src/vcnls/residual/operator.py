# src/vcnls/residual/operator.py

from dataclasses import dataclass

import numpy as np

from ..core.errors import DomainError
from ..core.grid import SpatialGrid
from ..core.parameters import EquationParameters
from ..solutions.closed_form import SolutionSpec


@dataclass(frozen=True)
class ResidualTerms:
    """
    The four terms of i psi_t + psi_xx + (eps + i gamma) |psi|^2 psi / x
    + (h1 + i h2) psi / x^2, each approximated by central differences.
    """

    time: np.ndarray
    dispersion: np.ndarray
    cubic: np.ndarray
    potential: np.ndarray

    @property
    def linear(self) -> np.ndarray:
        return self.time + self.dispersion + self.potential

    @property
    def total(self) -> np.ndarray:
        return self.linear + self.cubic


def residual_terms(
    params: EquationParameters, spec: SolutionSpec, x, t: float, h: float, dt: float
) -> ResidualTerms:
    """
    Evaluates the equation's terms on the five-point stencil around (x, t).

    Args:
        params (EquationParameters): Equation constants.
        spec (SolutionSpec): Field to test.
        x (float | np.ndarray): Probe point(s); x - h must stay positive.
        t (float): Probe time.
        h (float): Spatial step.
        dt (float): Time step.

    Returns:
        ResidualTerms: Arrays with the shape of x.
    """
    if not h > 0 or not dt > 0:
        raise ValueError(f"Steps must be positive, got h = {h!r}, dt = {dt!r}.")
    points = np.asarray(x, dtype=float)
    if np.any(points - h <= 0):
        raise DomainError(f"Stencil x - h leaves x > 0 (min x = {points.min()!r}, h = {h!r}).")
    psi = np.asarray(spec.evaluate(points, t), dtype=complex)
    psi_xx = (spec.evaluate(points + h, t) - 2.0 * psi + spec.evaluate(points - h, t)) / h**2
    psi_t = (spec.evaluate(points, t + dt) - spec.evaluate(points, t - dt)) / (2.0 * dt)
    return ResidualTerms(
        time=1j * np.asarray(psi_t, dtype=complex),
        dispersion=np.asarray(psi_xx, dtype=complex),
        cubic=params.cubic_coefficient * np.abs(psi) ** 2 * psi / points,
        potential=params.potential_coefficient * psi / points**2,
    )


def residual_at(
    params: EquationParameters, spec: SolutionSpec, x, t: float, h: float, dt: float
):
    """
    Central-difference residual of the equation at (x, t); O(h^2 + dt^2) for
    exact solutions.
    """
    total = residual_terms(params, spec, x, t, h, dt).total
    if np.ndim(x) == 0:
        return complex(total)
    return total


def residual_on_grid(
    params: EquationParameters, spec: SolutionSpec, grid: SpatialGrid, t: float, dt: float
) -> np.ndarray:
    """Residuals at the interior nodes of a grid, with h = grid.spacing."""
    return residual_terms(params, spec, grid.interior, t, grid.spacing, dt).total
