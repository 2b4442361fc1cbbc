# src/vcnls/core/__init__.py

from .errors import (
    BranchError,
    ConfigError,
    DivergentIntegralError,
    DomainError,
    LieAlgebraError,
    QuadratureError,
)
from .grid import ComplexField, SpatialGrid
from .group import (
    DETERMINANT_TOLERANCE,
    GroupElement,
    group_compose,
    group_inverse,
    max_entry_difference,
    one_parameter_subgroup,
)
from .parameters import EquationParameters, make_parameters

__all__ = [
    "BranchError",
    "ConfigError",
    "DivergentIntegralError",
    "DomainError",
    "LieAlgebraError",
    "QuadratureError",
    "ComplexField",
    "SpatialGrid",
    "DETERMINANT_TOLERANCE",
    "GroupElement",
    "group_compose",
    "group_inverse",
    "max_entry_difference",
    "one_parameter_subgroup",
    "EquationParameters",
    "make_parameters",
]
