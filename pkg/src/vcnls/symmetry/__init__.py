# src/vcnls/symmetry/__init__.py

from .action import (
    TransformedSolution,
    apply_group_action,
    blowup_element,
    blowup_time,
    characteristic,
    epsilon_at_time,
    epsilon_family,
)
from .algebra import (
    EXPECTED_BRACKETS,
    GENERATORS,
    BracketCheck,
    VectorField,
    combination,
    decompose,
    jacobi,
    jacobi_report,
    lie_bracket,
    structure_constants_report,
)

__all__ = [
    "TransformedSolution",
    "apply_group_action",
    "blowup_element",
    "blowup_time",
    "characteristic",
    "epsilon_at_time",
    "epsilon_family",
    "EXPECTED_BRACKETS",
    "GENERATORS",
    "BracketCheck",
    "VectorField",
    "combination",
    "decompose",
    "jacobi",
    "jacobi_report",
    "lie_bracket",
    "structure_constants_report",
]
