# src/vcnls/simulate/runner.py

import logging
import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
import pandas as pd
from scipy import integrate

from ..analysis.norms import DEFAULT_SETTINGS, domain_lp_norm
from ..analysis.quadrature import QuadratureSettings
from ..core.grid import ComplexField
from ..solutions.closed_form import SolutionSpec
from .integrator import SimulationConfig, SimulationHalted, SplitStepIntegrator

logger = logging.getLogger(__name__)

NORM_COLUMNS = ["t", "p", "norm", "exact_norm", "rel_err"]
ERROR_COLUMNS = ["t", "rel_l2_error"]
MASS_COLUMNS = ["t", "mass"]

# Number of progress messages over a run.
PROGRESS_REPORTS = 10


@dataclass
class Trajectory:
    """
    Output of a simulation run.

    Attributes:
        snapshots (list[ComplexField]): Fields at the recorded times, in increasing order.
        norm_series (pd.DataFrame): Columns t, p, norm, exact_norm, rel_err.
        exact_error_series (pd.DataFrame | None): Columns t, rel_l2_error; present
            when the run had a reference solution.
        mass_series (pd.DataFrame | None): Columns t, mass after every step; present
            when the run tracked mass.
    """

    snapshots: list = field(default_factory=list)
    norm_series: pd.DataFrame = field(default_factory=lambda: pd.DataFrame(columns=NORM_COLUMNS))
    exact_error_series: Optional[pd.DataFrame] = None
    mass_series: Optional[pd.DataFrame] = None

    def __post_init__(self):
        times = [s.time for s in self.snapshots]
        if any(b <= a for a, b in zip(times, times[1:])):
            raise ValueError("Trajectory snapshot times must be strictly increasing.")
        if any(s.grid != self.snapshots[0].grid for s in self.snapshots):
            raise ValueError("Trajectory snapshots must share one grid.")

    @property
    def times(self) -> list[float]:
        return [s.time for s in self.snapshots]

    @property
    def final(self) -> ComplexField:
        return self.snapshots[-1]

    def norms_for(self, p: float) -> pd.DataFrame:
        """Rows of the norm series for one exponent."""
        return self.norm_series[self.norm_series["p"] == float(p)].reset_index(drop=True)


def domain_norm(state: ComplexField, p: float) -> float:
    """(trapezoid of |psi|^p over the grid nodes)^(1/p)."""
    if not p >= 1:
        raise ValueError("domain_norm needs p >= 1.")
    x = state.grid.nodes
    return float(integrate.trapezoid(np.abs(state.values) ** p, x) ** (1.0 / p))


def relative_l2_error(state: ComplexField, reference: SolutionSpec) -> float:
    """||psi - psi_ref||_2 / ||psi_ref||_2 on the grid, by the trapezoid rule."""
    x = state.grid.nodes
    exact = np.asarray(reference.evaluate(x, state.time), dtype=complex)
    denominator = integrate.trapezoid(np.abs(exact) ** 2, x)
    if not denominator > 0:
        raise ValueError("The reference solution vanishes on the grid.")
    return float(math.sqrt(integrate.trapezoid(np.abs(state.values - exact) ** 2, x) / denominator))


def mass_drift_per_step(times, mass, dt: float) -> float:
    """
    Largest relative mass change over a single step.

    Consecutive samples more than one step apart have their change spread evenly
    over the steps between them, so a sparse series gives a lower bound.

    Args:
        times (array-like): Sample times, strictly increasing.
        mass (array-like): Squared L2 norms at those times.
        dt (float): Time step of the run.

    Returns:
        float: max_k |m_(k+1) - m_k| / (steps between samples) / m_0; 0 for one sample.
    """
    times = np.asarray(times, dtype=float)
    mass = np.asarray(mass, dtype=float)
    if times.shape != mass.shape or times.ndim != 1 or times.size == 0:
        raise ValueError("times and mass must be non-empty 1-D arrays of equal length.")
    if not dt > 0:
        raise ValueError(f"dt must be positive, got {dt!r}.")
    if not mass[0] > 0:
        raise ValueError("The initial mass must be positive.")
    if times.size == 1:
        return 0.0
    steps = np.maximum(np.rint(np.diff(times) / dt), 1.0)
    return float((np.abs(np.diff(mass)) / steps).max() / mass[0])


def _norm_rows(
    state: ComplexField, config: SimulationConfig, reference, settings: QuadratureSettings
) -> list[dict]:
    rows = []
    for p in config.norm_track:
        norm = domain_norm(state, p)
        if reference is None:
            exact_norm = rel_err = float("nan")
        else:
            exact_norm = domain_lp_norm(
                reference, state.time, p, config.grid.x_min, config.grid.x_max, settings
            )
            rel_err = abs(norm - exact_norm) / exact_norm
        rows.append(
            {"t": state.time, "p": p, "norm": norm, "exact_norm": exact_norm, "rel_err": rel_err}
        )
    return rows


def _record_steps(config: SimulationConfig) -> set[int]:
    dt = config.effective_dt
    steps = {0, config.n_steps}
    for t in config.snapshot_times:
        steps.add(min(config.n_steps, int(round(t / dt))))
    return steps


def run(
    config: SimulationConfig,
    initial: SolutionSpec,
    reference: Optional[SolutionSpec] = None,
    settings: QuadratureSettings = DEFAULT_SETTINGS,
    track_mass: bool = False,
) -> Trajectory:
    """
    Integrates from the sampled initial datum at t = 0 up to config.t_final.

    Snapshots are kept at t = 0, at t_final and at the step nearest to each
    requested snapshot time. When config.boundary is None the initial spec
    supplies the Dirichlet data.

    Args:
        config (SimulationConfig): Grid, step and tracking settings.
        initial (SolutionSpec): Initial datum, evaluated on the grid at t = 0.
        reference (SolutionSpec | None): Exact solution for the error series and
            for the exact on-domain norms.
        settings (QuadratureSettings): Tolerances for the exact on-domain norms.
        track_mass (bool): Record the squared L2 norm after every step.

    Returns:
        Trajectory: The recorded run.

    Raises:
        SimulationHalted: With the partial trajectory and last finite norms attached.
    """
    if config.boundary is None:
        config = SimulationConfig(
            config.params,
            config.grid,
            config.dt,
            config.t_final,
            boundary=initial,
            norm_track=config.norm_track,
            snapshot_times=config.snapshot_times,
            safety=config.safety,
        )
    dt = config.effective_dt
    integrator = SplitStepIntegrator(config, dt=dt)
    state = ComplexField(config.grid, initial.evaluate(config.grid.nodes, 0.0), 0.0)

    record_steps = _record_steps(config)
    snapshots: list[ComplexField] = []
    norm_rows: list[dict] = []
    error_rows: list[dict] = []
    mass_rows: list[dict] = []

    def record_mass(field_state: ComplexField):
        if track_mass:
            mass_rows.append({"t": field_state.time, "mass": domain_norm(field_state, 2.0) ** 2})

    def record(field_state: ComplexField):
        snapshots.append(field_state)
        norm_rows.extend(_norm_rows(field_state, config, reference, settings))
        if reference is not None:
            error_rows.append(
                {"t": field_state.time, "rel_l2_error": relative_l2_error(field_state, reference)}
            )

    def trajectory() -> Trajectory:
        return Trajectory(
            snapshots,
            pd.DataFrame(norm_rows, columns=NORM_COLUMNS),
            pd.DataFrame(error_rows, columns=ERROR_COLUMNS) if reference is not None else None,
            pd.DataFrame(mass_rows, columns=MASS_COLUMNS) if track_mass else None,
        )

    logger.info(
        "Simulating %d steps of dt = %.3e on %d nodes over [%g, %g]",
        config.n_steps,
        dt,
        config.grid.n,
        config.grid.x_min,
        config.grid.x_max,
    )
    record(state)
    record_mass(state)
    report_every = max(1, config.n_steps // PROGRESS_REPORTS)
    for k in range(1, config.n_steps + 1):
        try:
            state = integrator.step(state)
        except SimulationHalted as halt:
            if snapshots[-1].time < state.time:
                record(state)
            halt.trajectory = trajectory()
            halt.last_norms = {p: domain_norm(state, p) for p in config.norm_track}
            raise
        # The last state carries t_final exactly, free of accumulated rounding.
        if k == config.n_steps:
            state = ComplexField(config.grid, state.values, config.t_final)
        record_mass(state)
        if k in record_steps:
            record(state)
            logger.info("Snapshot at t = %.6g", state.time)
        elif k % report_every == 0:
            logger.info("Step %d / %d, t = %.6g", k, config.n_steps, state.time)
    return trajectory()
