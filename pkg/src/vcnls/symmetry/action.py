# src/vcnls/symmetry/action.py

from dataclasses import dataclass

import numpy as np
import sympy as sp

from ..core.errors import BranchError, DomainError, LieAlgebraError
from ..core.group import GroupElement
from ..solutions.closed_form import (
    ArrayLike,
    SolutionSpec,
    StationarySolution,
    as_output,
    positive_points,
)
from .algebra import VectorField
from .algebra import rho as rho_symbol
from .algebra import t as t_symbol
from .algebra import x as x_symbol


def apply_group_action(g: GroupElement, inner: SolutionSpec, x: ArrayLike, t: float):
    """
    Transforms a solution by an element of SL(2,R) x U(1):

        psi(x, t) = (a + b t)^(-1/2) exp(i b x^2 / (4 (a + b t)))
                    * inner(x / (a + b t), (c + d t) / (a + b t)) * exp(i theta).

    Successive actions compose as apply(g1, apply(g2, .)) = apply(g2 . g1, .).

    Args:
        g (GroupElement): The group element.
        inner (SolutionSpec): Solution being transformed.
        x (float | np.ndarray): Positive point(s).
        t (float): Time; a + b t must be positive.

    Returns:
        complex | np.ndarray: The transformed field at (x, t).
    """
    scale = g.scale_at(t)
    if not scale > 0:
        raise BranchError(f"a + b t = {scale!r} must be positive (t = {t!r}).")
    points = positive_points(x)
    inner_values = inner.evaluate(points / scale, g.mapped_time(t))
    chirp = np.exp(1j * (g.b * points**2 / (4.0 * scale) + g.theta))
    return as_output(scale**-0.5 * chirp * inner_values, x)


@dataclass(frozen=True)
class TransformedSolution(SolutionSpec):
    """The image of `inner` under the group element `g`."""

    g: GroupElement
    inner: SolutionSpec

    def evaluate(self, x: ArrayLike, t: float = 0.0):
        return apply_group_action(self.g, self.inner, x, t)


def blowup_element(b: float, T_blow: float) -> GroupElement:
    """
    Group element (a, b, 0, 1/a) with a = -b T_blow, so that a + b t = b (t - T_blow)
    reaches zero at t = T_blow.
    """
    if not b < 0:
        raise ValueError(f"b must be negative, got {b!r}.")
    if not T_blow > 0:
        raise ValueError(f"T_blow must be positive, got {T_blow!r}.")
    a = -b * T_blow
    return GroupElement(a, b, 0.0, 1.0 / a)


def blowup_time(g: GroupElement) -> float:
    """Time -a/b at which a + b t vanishes; infinite unless a > 0 and b < 0."""
    if g.a > 0 and g.b < 0:
        return -g.a / g.b
    return float("inf")


def epsilon_at_time(b: float, T_blow: float, t: float) -> float:
    """eps(t) = a + b t = b (t - T_blow)."""
    return b * (t - T_blow)


def epsilon_family(
    b: float, T_blow: float, stationary: StationarySolution, x: ArrayLike, eps: float
):
    """
    Blow-up family psi_eps(x) = eps^(-1/2) exp(i b x^2 / (4 eps)) psi0(x / eps).

    Its modulus is A x^(1/6) / (x^(2/3) + eps^(2/3) C), independent of b.

    Args:
        b (float): Negative chirp coefficient.
        T_blow (float): Positive blow-up time; fixes a = -b T_blow = eps(0).
        stationary (StationarySolution): Profile psi0.
        x (float | np.ndarray): Positive point(s).
        eps (float): Positive scale.

    Returns:
        complex | np.ndarray: psi_eps(x).
    """
    if not eps > 0:
        raise DomainError(f"eps must be positive, got {eps!r}.")
    blowup_element(b, T_blow)
    points = positive_points(x)
    profile = stationary.evaluate(points / eps)
    return as_output(eps**-0.5 * np.exp(1j * b * points**2 / (4.0 * eps)) * profile, x)


def characteristic(
    field: VectorField, spec: SolutionSpec, x0: float, t0: float, h: float = 1e-5
) -> complex:
    """
    Characteristic Q[psi] = (eta / rho + i kappa) psi - tau psi_t - xi psi_x of a
    generator tau d_t + xi d_x + eta d_rho + kappa d_omega, with derivatives by
    central differences of step h.

    Flowing the generator's one-parameter subgroup for parameter s changes the
    field at rate -Q[psi] at s = 0.
    """
    eta_over_rho = sp.cancel(field.rho_coeff / rho_symbol)
    if eta_over_rho.has(rho_symbol):
        raise LieAlgebraError("Characteristic requires a rho coefficient linear in rho.")
    coefficients = [
        sp.lambdify((t_symbol, x_symbol), expr, "numpy")(t0, x0)
        for expr in (field.t_coeff, field.x_coeff, eta_over_rho, field.omega_coeff)
    ]
    tau, xi, eta, kappa = (float(c) for c in coefficients)
    value = spec.evaluate(x0, t0)
    psi_x = (spec.evaluate(x0 + h, t0) - spec.evaluate(x0 - h, t0)) / (2.0 * h)
    psi_t = (spec.evaluate(x0, t0 + h) - spec.evaluate(x0, t0 - h)) / (2.0 * h)
    return complex((eta + 1j * kappa) * value - tau * psi_t - xi * psi_x)
