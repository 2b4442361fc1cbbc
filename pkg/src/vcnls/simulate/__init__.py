# src/vcnls/simulate/__init__.py

from .integrator import (
    DEFAULT_SAFETY,
    SimulationConfig,
    SimulationHalted,
    SplitStepIntegrator,
    local_flow,
    step,
)
from .runner import Trajectory, domain_norm, mass_drift_per_step, relative_l2_error, run

__all__ = [
    "DEFAULT_SAFETY",
    "SimulationConfig",
    "SimulationHalted",
    "SplitStepIntegrator",
    "local_flow",
    "step",
    "Trajectory",
    "domain_norm",
    "mass_drift_per_step",
    "relative_l2_error",
    "run",
]
