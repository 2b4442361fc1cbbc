# src/vcnls/residual/convergence.py

import logging
import math
from dataclasses import dataclass

import numpy as np

from ..core.errors import DomainError
from ..core.group import GroupElement
from ..core.parameters import EquationParameters
from ..solutions.closed_form import SolutionSpec
from ..utils.estimators import fit_log_log_slope
from .operator import residual_at

logger = logging.getLogger(__name__)

# Residual max-norms at or below this are treated as rounding noise.
SATURATION_FLOOR = 1e-11
PROBE_CLEARANCE = 10.0


@dataclass(frozen=True)
class ResidualReport:
    """
    Residual max-norms over a refinement ladder and the fitted order.

    estimated_order is NaN when the ladder is saturated (every norm at the
    rounding floor), in which case `saturated` is True.
    """

    grid_spacings: list
    residual_norms: list
    estimated_order: float
    saturated: bool = False
    fit_residual: float = 0.0
    time: float = 0.0

    def __post_init__(self):
        if len(self.grid_spacings) != len(self.residual_norms) or len(self.grid_spacings) < 2:
            raise ValueError("ResidualReport needs equal-length lists with at least 2 entries.")
        if any(b >= a for a, b in zip(self.grid_spacings, self.grid_spacings[1:])):
            raise ValueError("grid_spacings must be strictly decreasing.")

    @property
    def limiting_defect(self) -> float:
        """Residual norm at the finest spacing."""
        return self.residual_norms[-1]

    def passes(self, order_window: tuple[float, float] = (1.8, 2.2)) -> bool:
        if self.saturated:
            return True
        low, high = order_window
        return low <= self.estimated_order <= high


def convergence_order(
    params: EquationParameters,
    spec: SolutionSpec,
    probe_points,
    spacings,
    t: float = 0.0,
    dt_ratio: float = 1.0,
    saturation_floor: float = SATURATION_FLOOR,
) -> ResidualReport:
    """
    Measures how the residual of `spec` decays under grid refinement.

    For each spacing h the time step is dt_ratio * h, and the residual norm is
    the maximum of |residual| over the probe points.

    Args:
        params (EquationParameters): Equation constants.
        spec (SolutionSpec): Field under test.
        probe_points (array-like): Positive probe abscissae, each >= 10 h.
        spacings (array-like): At least 3 strictly decreasing spatial steps.
        t (float): Probe time.
        dt_ratio (float): dt / h.
        saturation_floor (float): Norms at or below this count as rounding noise.

    Returns:
        ResidualReport: The ladder and its least-squares log-log slope.
    """
    spacings = [float(h) for h in spacings]
    if len(spacings) < 3:
        raise ValueError("convergence_order needs at least 3 spacings.")
    probes = np.asarray(probe_points, dtype=float)
    if probes.size == 0:
        raise ValueError("convergence_order needs at least one probe point.")
    if np.any(probes < PROBE_CLEARANCE * max(spacings)):
        raise DomainError(
            f"Probe points must satisfy x >= {PROBE_CLEARANCE:g} h for every spacing."
        )

    norms = []
    for h in spacings:
        residual = residual_at(params, spec, probes, t, h, dt_ratio * h)
        norms.append(float(np.max(np.abs(residual))))
        logger.debug("h = %.3e  max|residual| = %.3e", h, norms[-1])

    saturated = all(norm <= saturation_floor for norm in norms)
    if saturated:
        order, fit_residual = math.nan, 0.0
    else:
        fit = fit_log_log_slope(spacings, np.maximum(norms, np.finfo(float).tiny))
        order, fit_residual = fit.slope, fit.fit_residual
    logger.info("residual ladder %s -> order %s", ["%.2e" % n for n in norms], order)
    return ResidualReport(
        grid_spacings=spacings,
        residual_norms=norms,
        estimated_order=order,
        saturated=saturated,
        fit_residual=fit_residual,
        time=float(t),
    )


def random_group_elements(
    rng: np.random.Generator,
    count: int,
    window: tuple[float, float] = (0.0, 0.0),
    min_scale: float = 0.25,
) -> list[GroupElement]:
    """
    Draws admissible SL(2,R) elements: a in [0.5, 2], b and c in [-1, 1],
    d = (1 + b c) / a, keeping only those with a + b t >= min_scale on the window.

    Args:
        rng (np.random.Generator): Seeded generator.
        count (int): Number of elements to return.
        window (tuple[float, float]): Time window the elements must be valid on.
        min_scale (float): Lower bound for a + b t over the window.

    Returns:
        list[GroupElement]: The elements, in draw order.
    """
    if not isinstance(count, int) or count < 0:
        raise ValueError("count must be a non-negative integer.")
    elements = []
    while len(elements) < count:
        a = rng.uniform(0.5, 2.0)
        b, c = rng.uniform(-1.0, 1.0, size=2)
        if min(a + b * window[0], a + b * window[1]) < min_scale:
            continue
        elements.append(GroupElement(a, b, c, (1.0 + b * c) / a))
    return elements
