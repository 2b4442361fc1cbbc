# src/vcnls/config/__init__.py

from .experiment_config import (
    BLOWUP_SCAN_DEFAULTS,
    COMMAND_DEFAULTS,
    DISTRIBUTION_TEST_DEFAULTS,
    LIE_CHECK_DEFAULTS,
    NULLABLE_KEYS,
    QUADRATURE_DEFAULTS,
    SIMULATE_DEFAULTS,
    VERIFY_SOLUTION_DEFAULTS,
)

__all__ = [
    "BLOWUP_SCAN_DEFAULTS",
    "COMMAND_DEFAULTS",
    "DISTRIBUTION_TEST_DEFAULTS",
    "LIE_CHECK_DEFAULTS",
    "NULLABLE_KEYS",
    "QUADRATURE_DEFAULTS",
    "SIMULATE_DEFAULTS",
    "VERIFY_SOLUTION_DEFAULTS",
]
