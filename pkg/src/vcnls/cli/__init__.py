# src/vcnls/cli/__init__.py

from .commands import (
    COMMAND_HANDLERS,
    cmd_blowup_scan,
    cmd_distribution_test,
    cmd_lie_check,
    cmd_simulate,
    cmd_verify_solution,
)
from .config import (
    COMMANDS,
    ExperimentConfig,
    dump_config,
    load_config,
    quadrature_settings,
    read_config,
)
from .main import build_parser, main

__all__ = [
    "COMMAND_HANDLERS",
    "cmd_blowup_scan",
    "cmd_distribution_test",
    "cmd_lie_check",
    "cmd_simulate",
    "cmd_verify_solution",
    "COMMANDS",
    "ExperimentConfig",
    "dump_config",
    "load_config",
    "quadrature_settings",
    "read_config",
    "build_parser",
    "main",
]
