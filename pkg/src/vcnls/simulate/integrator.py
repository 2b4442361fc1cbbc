# src/vcnls/simulate/integrator.py

import logging
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy import linalg

from ..core.grid import ComplexField, SpatialGrid
from ..core.parameters import EquationParameters
from ..solutions.closed_form import SolutionSpec

logger = logging.getLogger(__name__)

# Default ratio bound dt / spacing.
DEFAULT_SAFETY = 0.5

# Slack when rounding t_final / dt up to a whole number of steps.
STEP_COUNT_SLACK = 1e-9


class SimulationHalted(RuntimeError):
    """
    Raised when the field stops being finite during time stepping.

    Attributes:
        time (float): Time of the step that produced non-finite values.
        trajectory (Trajectory | None): Snapshots and norms recorded before the halt;
            attached by the runner.
        last_norms (dict): Last finite tracked norms, keyed by p.
    """

    def __init__(self, message: str, time: float, trajectory=None, last_norms=None):
        super().__init__(message)
        self.time = time
        self.trajectory = trajectory
        self.last_norms = dict(last_norms or {})


@dataclass(frozen=True)
class SimulationConfig:
    """
    Settings for one time integration of the equation on [grid.x_min, grid.x_max].

    Attributes:
        params (EquationParameters): Equation coefficients.
        grid (SpatialGrid): Spatial grid; x_min > 0 is guaranteed by the grid.
        dt (float): Requested time step. The run uses t_final / n_steps, which never exceeds it.
        t_final (float): Final time, >= 0.
        boundary (SolutionSpec | None): Source of Dirichlet data at both ends.
            None means zero boundary values in `step`; `run` substitutes the initial datum.
        norm_track (tuple[float, ...]): Exponents p >= 1 of the on-domain norms to record.
        snapshot_times (tuple[float, ...]): Extra times in (0, t_final) to keep snapshots at.
        safety (float): Upper bound on dt / spacing.
    """

    params: EquationParameters
    grid: SpatialGrid
    dt: float
    t_final: float
    boundary: Optional[SolutionSpec] = None
    norm_track: tuple = (2.0, 4.0)
    snapshot_times: tuple = ()
    safety: float = DEFAULT_SAFETY

    def __post_init__(self):
        if not isinstance(self.params, EquationParameters):
            raise ValueError("params must be an EquationParameters instance.")
        if not isinstance(self.grid, SpatialGrid):
            raise ValueError("grid must be a SpatialGrid instance.")
        if self.boundary is not None and not isinstance(self.boundary, SolutionSpec):
            raise ValueError("boundary must be a SolutionSpec or None.")
        if not (math.isfinite(self.dt) and self.dt > 0):
            raise ValueError(f"dt must be positive and finite, got {self.dt!r}.")
        if not (math.isfinite(self.t_final) and self.t_final >= 0):
            raise ValueError(f"t_final must be non-negative and finite, got {self.t_final!r}.")
        if not self.safety > 0:
            raise ValueError("safety must be positive.")
        if self.dt > self.safety * self.grid.spacing:
            raise ValueError(
                f"dt = {self.dt:g} exceeds safety * spacing = "
                f"{self.safety * self.grid.spacing:g}."
            )
        norm_track = tuple(float(p) for p in self.norm_track)
        if any(not p >= 1 for p in norm_track):
            raise ValueError("norm_track exponents must be >= 1.")
        snapshot_times = tuple(sorted(float(t) for t in self.snapshot_times))
        if any(not 0 <= t <= self.t_final for t in snapshot_times):
            raise ValueError("snapshot_times must lie in [0, t_final].")
        object.__setattr__(self, "norm_track", norm_track)
        object.__setattr__(self, "snapshot_times", snapshot_times)

    @property
    def n_steps(self) -> int:
        if self.t_final == 0:
            return 0
        return max(1, math.ceil(self.t_final / self.dt - STEP_COUNT_SLACK))

    @property
    def effective_dt(self) -> float:
        if self.n_steps == 0:
            return self.dt
        return self.t_final / self.n_steps


def local_flow(values, x, tau: float, params: EquationParameters) -> np.ndarray:
    """
    Pointwise flow over a time tau of

        i psi_t = -[(eps + i gamma) |psi|^2 / x + (h1 + i h2) / x^2] psi.

    With rho = |psi|, a = h2 / x^2 and b = gamma / x the modulus obeys the
    Bernoulli equation rho' = -(a + b rho^2) rho, solved exactly:

        rho(tau)^2 = rho0^2 / (e^(2 a tau) + b rho0^2 (e^(2 a tau) - 1) / a).

    The phase advances by (eps rho^2 / x + h1 / x^2) tau with rho^2 taken at tau / 2.
    Nodes whose denominator is not positive come back as NaN.

    Args:
        values (np.ndarray): Complex field values.
        x (np.ndarray): Node positions, > 0.
        tau (float): Time increment; negative values run the flow backwards.
        params (EquationParameters): Equation coefficients.

    Returns:
        np.ndarray: Values after the flow.
    """
    values = np.asarray(values, dtype=complex)
    x = np.asarray(x, dtype=float)
    rho0_sq = np.abs(values) ** 2
    a = params.h2 / x**2
    b = params.gamma / x

    def denominator(s: float) -> np.ndarray:
        if params.h2 == 0:
            return 1.0 + 2.0 * s * b * rho0_sq
        return np.exp(2.0 * a * s) + b * rho0_sq * np.expm1(2.0 * a * s) / a

    with np.errstate(invalid="ignore", divide="ignore", over="ignore"):
        full = denominator(tau)
        half = denominator(0.5 * tau)
        factor = np.where(full > 0, 1.0 / np.sqrt(np.where(full > 0, full, 1.0)), np.nan)
        rho_mid_sq = rho0_sq / half
        phase = (params.epsilon * rho_mid_sq / x + params.h1 / x**2) * tau
        return values * factor * np.exp(1j * phase)


class SplitStepIntegrator:
    """
    Strang splitting of the equation: half a step of `local_flow`, one
    Crank-Nicolson step of i psi_t = -psi_xx on the interior nodes, and the
    second local half-step. End nodes carry Dirichlet data from the boundary spec.

    The Crank-Nicolson matrix is tridiagonal with diagonal 1 + 2r and
    off-diagonals -r, r = i dt / (2 spacing^2); it is stored once in banded form.
    """

    def __init__(self, config: SimulationConfig, dt: Optional[float] = None):
        self.config = config
        self.dt = float(config.dt if dt is None else dt)
        if not self.dt > 0:
            raise ValueError("dt must be positive.")
        self.nodes = config.grid.nodes
        self.edges = self.nodes[[0, -1]]
        self.r = 1j * self.dt / (2.0 * config.grid.spacing**2)
        m = config.grid.n - 2
        band = np.zeros((3, m), dtype=complex)
        band[0, 1:] = -self.r
        band[1, :] = 1.0 + 2.0 * self.r
        band[2, :-1] = -self.r
        self.band = band

    def boundary_values(self, t: float) -> np.ndarray:
        """Dirichlet values at both end nodes at time t."""
        if self.config.boundary is None:
            return np.zeros(2, dtype=complex)
        return np.asarray(self.config.boundary.evaluate(self.edges, t), dtype=complex)

    def free_step(self, values: np.ndarray, new_edges: np.ndarray) -> np.ndarray:
        """Crank-Nicolson step of the free equation with the given end values at the new time."""
        r = self.r
        rhs = values[1:-1] + r * (values[:-2] - 2.0 * values[1:-1] + values[2:])
        rhs[0] += r * new_edges[0]
        rhs[-1] += r * new_edges[1]
        result = np.empty_like(values)
        result[1:-1] = linalg.solve_banded((1, 1), self.band, rhs, check_finite=False)
        result[0], result[-1] = new_edges
        return result

    def step(self, state: ComplexField) -> ComplexField:
        """
        Advances state by one time step.

        Raises:
            SimulationHalted: If any value stops being finite.
        """
        if state.grid != self.config.grid:
            raise ValueError("state lives on a different grid than the integrator.")
        params, dt = self.config.params, self.dt
        t_next = state.time + dt
        half = 0.5 * dt

        values = local_flow(state.values, self.nodes, half, params)
        # End values of the intermediate field at t_next, pulled back through the last half-step.
        exact_next = self.boundary_values(t_next)
        edges = local_flow(exact_next, self.edges, -half, params)
        values = self.free_step(values, edges)
        values = local_flow(values, self.nodes, half, params)
        values[0], values[-1] = exact_next

        if not np.all(np.isfinite(values)):
            bad = int(np.count_nonzero(~np.isfinite(values)))
            message = f"non-finite values at {bad} node(s) after stepping to t = {t_next:.6g}"
            logger.error("Simulation halted: %s", message)
            raise SimulationHalted(message, time=t_next)
        return ComplexField(self.config.grid, values, t_next)


def step(state: ComplexField, config: SimulationConfig) -> ComplexField:
    """One Strang step of size config.dt. Builds a fresh integrator on every call."""
    return SplitStepIntegrator(config).step(state)
