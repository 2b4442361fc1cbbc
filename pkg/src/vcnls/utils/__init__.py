# src/vcnls/utils/__init__.py

from .data_structures import (
    EXIT_CONFIG_ERROR,
    EXIT_FAIL,
    EXIT_HALT,
    EXIT_PASS,
    PROVENANCE_TAGS,
    CheckRecord,
    ResultBundle,
    to_jsonable,
)
from .estimators import (
    PowerLawFit,
    consecutive_orders,
    fit_log_log_slope,
    pointwise_log_slopes,
    relative_spread,
)

# plot_utils pulls in matplotlib and is imported on demand.

__all__ = [
    "EXIT_CONFIG_ERROR",
    "EXIT_FAIL",
    "EXIT_HALT",
    "EXIT_PASS",
    "PROVENANCE_TAGS",
    "CheckRecord",
    "ResultBundle",
    "to_jsonable",
    "PowerLawFit",
    "consecutive_orders",
    "fit_log_log_slope",
    "pointwise_log_slopes",
    "relative_spread",
]
