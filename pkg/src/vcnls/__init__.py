"""
Verification lab for the variable-coefficient nonlinear Schrodinger equation

    i psi_t + psi_xx + (eps + i gamma) |psi|^2 psi / x + (h1 + i h2) psi / x^2 = 0,   x > 0.

The package checks, numerically and symbolically, the structure of this equation:
its four-dimensional symmetry algebra and the SL(2,R) action on solutions, closed-form
stationary and time-dependent solutions, the finite-time blow-up of their norms, the
delta-sequence limit of the rescaled densities, and a split-step solver validated
against the exact solutions.

Subpackages:
- core: equation parameters, group elements, grids and errors
- solutions: closed-form solution families
- symmetry: vector fields, brackets and the group action
- residual: PDE residual and convergence orders
- analysis: blow-up norms, quadrature and distributional pairings
- simulate: Strang-split Crank-Nicolson integrator
- cli: the `vcnls` command-line entry point

Example Usage:
    >>> from vcnls import truncation_constants, StationarySolution
    >>> constants = truncation_constants(1, 1.0)
    >>> psi = StationarySolution(constants, k1=1.0, k2=1.0)
    >>> abs(psi(1.0))  # doctest: +ELLIPSIS
    1.0895...
"""

__version__ = "0.1.0"

from .analysis import (
    BumpFunction,
    QuadratureSettings,
    delta_constant_K,
    linf_norm,
    lp_blowup_fit,
    lp_norm_pth_power,
    pairing,
)
from .core import (
    ComplexField,
    EquationParameters,
    GroupElement,
    SpatialGrid,
    group_compose,
    group_inverse,
    make_parameters,
)
from .residual import convergence_order, residual_at
from .simulate import SimulationConfig, Trajectory, run, step
from .solutions import (
    SolutionSpec,
    StationarySolution,
    TruncatedSolution,
    truncation_constants,
)
from .symmetry import (
    GENERATORS,
    TransformedSolution,
    apply_group_action,
    lie_bracket,
    structure_constants_report,
)

__all__ = [
    # Analysis
    "BumpFunction",
    "QuadratureSettings",
    "delta_constant_K",
    "linf_norm",
    "lp_blowup_fit",
    "lp_norm_pth_power",
    "pairing",
    # Core
    "ComplexField",
    "EquationParameters",
    "GroupElement",
    "SpatialGrid",
    "group_compose",
    "group_inverse",
    "make_parameters",
    # Residual
    "convergence_order",
    "residual_at",
    # Simulation
    "SimulationConfig",
    "Trajectory",
    "run",
    "step",
    # Solutions
    "SolutionSpec",
    "StationarySolution",
    "TruncatedSolution",
    "truncation_constants",
    # Symmetry
    "GENERATORS",
    "TransformedSolution",
    "apply_group_action",
    "lie_bracket",
    "structure_constants_report",
]
