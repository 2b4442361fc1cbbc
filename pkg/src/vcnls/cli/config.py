# src/vcnls/cli/config.py

import copy
import json
import math
import numbers
from typing import Any, Callable, Optional

from ..analysis.quadrature import QuadratureSettings
from ..config.experiment_config import COMMAND_DEFAULTS, NULLABLE_KEYS
from ..core.errors import ConfigError

COMMANDS = tuple(COMMAND_DEFAULTS)

# A merged, validated configuration of one subcommand.
ExperimentConfig = dict[str, Any]

VERIFY_FAMILIES = ("stationary", "truncated", "transformed")
SIMULATE_FAMILIES = ("truncated", "transformed", "gaussian")
BUMP_KEYS = ("center", "radius", "normalization")


def _is_real(value) -> bool:
    return isinstance(value, numbers.Real) and not isinstance(value, bool)


def _coerce(path: str, value: Any, default: Any) -> Any:
    """Checks value against the type of its default and returns a JSON-typed copy."""
    if default is None:
        key = path.rsplit(".", 1)[-1]
        expected = NULLABLE_KEYS.get(key)
        if value is None:
            return None
        if expected is float:
            return _coerce(path, value, 0.0)
        if expected is list:
            if not isinstance(value, list):
                raise ConfigError(f"{path} must be a list or null.")
            return [_coerce(f"{path}[{i}]", v, 0.0) for i, v in enumerate(value)]
        raise ConfigError(f"{path}: no schema for a nullable key.")
    if isinstance(default, bool):
        if not isinstance(value, bool):
            raise ConfigError(f"{path} must be a boolean, got {value!r}.")
        return value
    if isinstance(default, int):
        if _is_real(value) and float(value).is_integer():
            return int(value)
        raise ConfigError(f"{path} must be an integer, got {value!r}.")
    if isinstance(default, float):
        if not _is_real(value) or not math.isfinite(value):
            raise ConfigError(f"{path} must be a finite number, got {value!r}.")
        return float(value)
    if isinstance(default, str):
        if not isinstance(value, str):
            raise ConfigError(f"{path} must be a string, got {value!r}.")
        return value
    if isinstance(default, dict):
        return _merge(path, value, default)
    if isinstance(default, list):
        if not isinstance(value, list):
            raise ConfigError(f"{path} must be a list, got {value!r}.")
        template = default[0] if default else 0.0
        if isinstance(template, dict):
            return [_coerce_bump(f"{path}[{i}]", v) for i, v in enumerate(value)]
        return [_coerce(f"{path}[{i}]", v, template) for i, v in enumerate(value)]
    raise ConfigError(f"{path}: unsupported default type {type(default).__name__}.")


def _coerce_bump(path: str, value: Any) -> dict:
    if not isinstance(value, dict):
        raise ConfigError(f"{path} must be a mapping with keys {BUMP_KEYS}.")
    unknown = sorted(set(value) - set(BUMP_KEYS))
    if unknown:
        raise ConfigError(f"{path} has unknown key(s): {', '.join(unknown)}.")
    missing = [key for key in ("center", "radius") if key not in value]
    if missing:
        raise ConfigError(f"{path} is missing {', '.join(missing)}.")
    return {
        key: _coerce(f"{path}.{key}", value.get(key, 1.0), 0.0) for key in BUMP_KEYS
    }


def _merge(path: str, mapping: Any, defaults: dict) -> dict:
    if not isinstance(mapping, dict):
        raise ConfigError(f"{path or 'config'} must be a mapping, got {type(mapping).__name__}.")
    unknown = sorted(set(mapping) - set(defaults))
    if unknown:
        where = f" in {path}" if path else ""
        raise ConfigError(f"Unknown key(s){where}: {', '.join(unknown)}.")
    merged = {}
    for key, default in defaults.items():
        child = f"{path}.{key}" if path else key
        value = mapping.get(key, default)
        merged[key] = _coerce(child, copy.deepcopy(value), default)
    return merged


def _require(condition: bool, message: str):
    if not condition:
        raise ConfigError(message)


def _check_ladder(name: str, values: list, minimum: int = 3, decades: float = 0.0):
    _require(len(values) >= minimum, f"{name} needs at least {minimum} values.")
    _require(all(v > 0 for v in values), f"{name} values must be positive.")
    _require(
        all(b < a for a, b in zip(values, values[1:])), f"{name} must be strictly decreasing."
    )
    if decades:
        _require(
            values[0] / values[-1] >= 10.0**decades * (1.0 - 1e-12),
            f"{name} must span at least {decades:g} decades.",
        )


def _check_equation(config: dict, allow_zero_gamma: bool = False):
    _require(config["epsilon"] in (1, -1), f"epsilon must be +1 or -1, got {config['epsilon']}.")
    if not allow_zero_gamma:
        _require(config["gamma"] != 0, "gamma must be non-zero for the exact solution families.")


def _check_quadrature(config: dict):
    try:
        quadrature_settings(config)
    except ValueError as exc:
        raise ConfigError(f"quadrature: {exc}") from exc


def _check_stationary_constants(config: dict):
    _require(config["k1"] > 0, f"k1 must be positive, got {config['k1']}.")
    _require(
        config["k2"] > 0, f"C = k1^(2/3) k2 must be positive; k2 = {config['k2']} is not."
    )


def _validate_lie_check(config: dict):
    return None


def _validate_verify_solution(config: dict):
    _require(
        config["family"] in VERIFY_FAMILIES,
        f"family must be one of {VERIFY_FAMILIES}, got {config['family']!r}.",
    )
    _check_equation(config)
    _check_stationary_constants(config)
    if config["family"] == "truncated":
        _require(
            config["k4"] * config["t"] + config["k1"] > 0,
            "k4 t + k1 must be positive at the probe time.",
        )
    if config["family"] == "transformed":
        _require(
            config["group"] is not None or config["random_elements"] > 0,
            "The transformed family needs 'group' or a positive 'random_elements'.",
        )
    if config["group"] is not None:
        _require(len(config["group"]) in (4, 5), "group must be [a, b, c, d] or [a, b, c, d, theta].")
    _require(config["random_elements"] >= 0, "random_elements must be non-negative.")
    _require(bool(config["probe_points"]), "probe_points must not be empty.")
    _require(all(x > 0 for x in config["probe_points"]), "probe_points must be positive.")
    _check_ladder("spacings", config["spacings"])
    low_high = config["order_window"]
    _require(len(low_high) == 2 and low_high[0] < low_high[1], "order_window must be [low, high].")
    _require(config["dt_ratio"] > 0, "dt_ratio must be positive.")
    _require(config["saturation_floor"] > 0, "saturation_floor must be positive.")


def _validate_blowup_scan(config: dict):
    _require(config["A"] > 0 and config["C"] > 0, "A and C must be positive.")
    _require(bool(config["p_values"]), "p_values must not be empty.")
    bad = [p for p in config["p_values"] if not p > 2]
    _require(not bad, f"p_values must all exceed 2; rejected {bad}.")
    _check_ladder("eps_values", config["eps_values"], decades=2)
    _check_ladder("linf_eps_values", config["linf_eps_values"], decades=2)
    for key in (
        "slope_rel_tol",
        "identity_rel_tol",
        "oracle_rel_tol",
        "self_consistency_rel_tol",
        "linf_rel_tol",
        "argmax_tol",
    ):
        _require(config[key] > 0, f"{key} must be positive.")
    _require(config["random_pairs"] >= 0, "random_pairs must be non-negative.")
    _check_quadrature(config)


def _validate_distribution_test(config: dict):
    _require(config["A"] > 0 and config["C"] > 0, "A and C must be positive.")
    _require(config["p"] > 2, f"p must exceed 2, got {config['p']}.")
    _check_ladder("eps_values", config["eps_values"])
    _require(config["limit_eps"] in config["eps_values"], "limit_eps must be one of eps_values.")
    for i, bump in enumerate(config["bumps"]):
        _require(bump["radius"] > 0, f"bumps[{i}].radius must be positive.")
    for key in ("limit_rel_tol", "decay_ratio", "oracle_rel_tol"):
        _require(config[key] > 0, f"{key} must be positive.")
    _check_quadrature(config)


def _validate_simulate(config: dict):
    _require(
        config["family"] in SIMULATE_FAMILIES,
        f"family must be one of {SIMULATE_FAMILIES}, got {config['family']!r}.",
    )
    _check_equation(config, allow_zero_gamma=config["family"] == "gaussian")
    if config["family"] != "gaussian":
        _check_stationary_constants(config)
    if config["family"] == "transformed":
        _require(config["transform"]["b"] < 0, "transform.b must be negative.")
        _require(config["transform"]["T_blow"] > 0, "transform.T_blow must be positive.")
        _require(
            config["t_final"] < config["transform"]["T_blow"],
            "t_final must stay before the blow-up time transform.T_blow.",
        )
    if config["family"] == "truncated":
        _require(
            config["k4"] * config["t_final"] + config["k1"] > 0,
            "k4 t + k1 must stay positive up to t_final.",
        )
    if config["family"] == "gaussian":
        _require(config["gaussian"]["width"] > 0, "gaussian.width must be positive.")
    _require(0 < config["x_min"] < config["x_max"], "Need 0 < x_min < x_max.")
    _require(config["spacing"] > 0, "spacing must be positive.")
    _require(config["dt"] > 0, "dt must be positive.")
    _require(config["t_final"] >= 0, "t_final must be non-negative.")
    _require(config["safety"] > 0, "safety must be positive.")
    _require(
        config["dt"] <= config["safety"] * config["spacing"],
        f"dt = {config['dt']:g} exceeds safety * spacing = {config['safety'] * config['spacing']:g}.",
    )
    _require(all(p >= 1 for p in config["norm_track"]), "norm_track exponents must be >= 1.")
    _require(
        all(0 <= t <= config["t_final"] for t in config["snapshot_times"]),
        "snapshot_times must lie in [0, t_final].",
    )
    if config["monotone_p"] is not None:
        _require(
            config["monotone_p"] in config["norm_track"], "monotone_p must be one of norm_track."
        )
    if config["mass_drift_tol"] is not None:
        _require(config["mass_drift_tol"] > 0, "mass_drift_tol must be positive.")
    for key in ("error_tol", "norm_rel_tol"):
        _require(config[key] > 0, f"{key} must be positive.")
    _check_quadrature(config)


_VALIDATORS: dict[str, Callable[[dict], None]] = {
    "lie-check": _validate_lie_check,
    "verify-solution": _validate_verify_solution,
    "blowup-scan": _validate_blowup_scan,
    "distribution-test": _validate_distribution_test,
    "simulate": _validate_simulate,
}


def load_config(command: str, mapping: Optional[dict] = None) -> ExperimentConfig:
    """
    Merges an experiment mapping over the defaults of `command` and validates it.

    Args:
        command (str): Subcommand name.
        mapping (dict | None): Overrides; None or {} gives the defaults.

    Returns:
        ExperimentConfig: The complete, validated configuration.

    Raises:
        ConfigError: On unknown keys, wrong types or out-of-range values.
    """
    if command not in COMMAND_DEFAULTS:
        raise ConfigError(f"Unknown command {command!r}; expected one of {COMMANDS}.")
    config = _merge("", {} if mapping is None else mapping, COMMAND_DEFAULTS[command])
    _VALIDATORS[command](config)
    return config


def read_config(command: str, path: Optional[str]) -> ExperimentConfig:
    """Loads a JSON experiment file (or the defaults when path is None)."""
    if path is None:
        return load_config(command)
    try:
        with open(path, "r", encoding="utf-8") as fh:
            mapping = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"Cannot read config file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path} is not valid JSON: {exc}") from exc
    return load_config(command, mapping)


def dump_config(config: ExperimentConfig) -> str:
    """Serializes a loaded configuration as a JSON document."""
    return json.dumps(config, indent=2, sort_keys=True)


def quadrature_settings(config: dict) -> QuadratureSettings:
    """QuadratureSettings from the 'quadrature' block of a loaded configuration."""
    block = config["quadrature"]
    return QuadratureSettings(
        abs_tol=block["abs_tol"],
        rel_tol=block["rel_tol"],
        max_subdivisions=block["max_subdivisions"],
        tail_cutoff_Y=block["tail_cutoff_Y"],
        fixed_rule_step=block["fixed_rule_step"],
    )
