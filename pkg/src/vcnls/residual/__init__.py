# src/vcnls/residual/__init__.py

from .convergence import (
    SATURATION_FLOOR,
    ResidualReport,
    convergence_order,
    random_group_elements,
)
from .operator import ResidualTerms, residual_at, residual_on_grid, residual_terms

__all__ = [
    "SATURATION_FLOOR",
    "ResidualReport",
    "convergence_order",
    "random_group_elements",
    "ResidualTerms",
    "residual_at",
    "residual_on_grid",
    "residual_terms",
]
