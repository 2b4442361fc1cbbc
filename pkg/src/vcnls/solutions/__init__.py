# src/vcnls/solutions/__init__.py

from .closed_form import (
    GaussianPacket,
    ScaledSolution,
    SolutionSpec,
    StationarySolution,
    TruncatedSolution,
    ZeroSolution,
    eval_stationary,
    eval_truncated,
    modulus_parameters,
    positive_points,
)
from .constants import (
    TRUNCATION_H1,
    TRUNCATION_H2,
    TruncationConstants,
    balance_residual,
    delta_roots,
    exponent_sum,
    leading_order_coefficient,
    truncation_constants,
    u0v0_coefficient,
)

__all__ = [
    "GaussianPacket",
    "ScaledSolution",
    "SolutionSpec",
    "StationarySolution",
    "TruncatedSolution",
    "ZeroSolution",
    "eval_stationary",
    "eval_truncated",
    "modulus_parameters",
    "positive_points",
    "TRUNCATION_H1",
    "TRUNCATION_H2",
    "TruncationConstants",
    "balance_residual",
    "delta_roots",
    "exponent_sum",
    "leading_order_coefficient",
    "truncation_constants",
    "u0v0_coefficient",
]
