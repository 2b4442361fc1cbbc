# src/vcnls/cli/commands.py

import logging
import math
import os
from typing import Optional

import numpy as np
import pandas as pd
from scipy import integrate

from ..analysis import (
    BumpFunction,
    analytic_linf,
    delta_constant_K,
    epsilon_modulus,
    evaluate_test_function,
    half_line_profile_integral,
    linf_blowup_fit,
    linf_norm,
    linf_norm_golden,
    lp_blowup_fit,
    lp_norm_pth_power_direct,
    pairing,
    profile_integral_closed_form,
    profile_integral_fixed_rule,
)
from ..core.errors import BranchError, ConfigError
from ..core.grid import SpatialGrid
from ..core.group import GroupElement
from ..core.parameters import make_parameters
from ..residual import convergence_order, random_group_elements
from ..simulate import SimulationConfig, SimulationHalted, Trajectory, mass_drift_per_step, run
from ..solutions import (
    TRUNCATION_H1,
    TRUNCATION_H2,
    GaussianPacket,
    StationarySolution,
    TruncatedSolution,
    modulus_parameters,
    truncation_constants,
)
from ..symmetry import (
    TransformedSolution,
    blowup_element,
    epsilon_at_time,
    jacobi_report,
    structure_constants_report,
)
from ..utils.data_structures import ResultBundle
from ..utils.estimators import pointwise_log_slopes, relative_spread
from .config import quadrature_settings

logger = logging.getLogger(__name__)

SCAN_COLUMNS = ["eps", "p", "lp_norm", "linf_norm", "argmax", "slope_partial"]
SNAPSHOT_COLUMNS = ["x", "re", "im", "abs"]


def _relative(computed: float, reference: float) -> float:
    return abs(computed - reference) / abs(reference)


def _write_table(df: pd.DataFrame, output_dir: Optional[str], filename: str, bundle: ResultBundle):
    if output_dir is None:
        return
    os.makedirs(output_dir, exist_ok=True)
    path = os.path.join(output_dir, filename)
    df.to_csv(path, index=False)
    bundle.artifacts.append(path)
    logger.info("Wrote %s", path)


def cmd_lie_check(config: dict, output_dir: Optional[str] = None, plot: bool = False) -> ResultBundle:
    """Verifies the commutator table of T, D, C, W and, optionally, the Jacobi identity."""
    bundle = ResultBundle("lie-check")
    for check in structure_constants_report():
        bundle.check(
            f"bracket {check.label}",
            str(check.computed),
            str(check.expected),
            "paper",
            check.holds,
        )
    if config["jacobi"]:
        for names, holds in jacobi_report().items():
            bundle.check(
                f"jacobi ({', '.join(names)})", "0" if holds else "non-zero", "0", "trivial", holds
            )
    return bundle


def _solution_setup(config: dict):
    """Truncation constants, equation parameters and the stationary profile of a config."""
    try:
        constants = truncation_constants(config["epsilon"], config["gamma"])
        stationary = StationarySolution(constants, config["k1"], config["k2"], config["k3"])
    except ValueError as exc:
        raise ConfigError(f"Invalid solution constants: {exc}") from exc
    h1 = constants.h1 if config.get("h1") is None else config["h1"]
    h2 = constants.h2 if config.get("h2") is None else config["h2"]
    params = make_parameters(config["epsilon"], config["gamma"], h1, h2)
    return constants, params, stationary


def _verification_targets(config: dict, constants, stationary) -> list[tuple]:
    family, t = config["family"], config["t"]
    if family == "stationary":
        return [("stationary", stationary)]
    if family == "truncated":
        spec = TruncatedSolution(constants, config["k1"], config["k2"], config["k3"], config["k4"])
        return [("truncated", spec)]
    targets = []
    if config["group"] is not None:
        try:
            g = GroupElement(*config["group"])
        except ValueError as exc:
            raise ConfigError(f"Invalid group element: {exc}") from exc
        if not g.scale_at(t) > 0:
            raise ConfigError(f"a + b t = {g.scale_at(t):g} is not positive at t = {t:g}.")
        targets.append(("transformed", TransformedSolution(g, stationary)))
    rng = np.random.default_rng(config["seed"])
    for i, g in enumerate(random_group_elements(rng, config["random_elements"], window=(t, t))):
        targets.append((f"transformed #{i}", TransformedSolution(g, stationary)))
    return targets


def cmd_verify_solution(
    config: dict, output_dir: Optional[str] = None, plot: bool = False
) -> ResultBundle:
    """Residual convergence order of an exact family (or of its group transforms)."""
    bundle = ResultBundle("verify-solution")
    constants, params, stationary = _solution_setup(config)
    low, high = config["order_window"]
    rows = []
    for label, spec in _verification_targets(config, constants, stationary):
        report = convergence_order(
            params,
            spec,
            config["probe_points"],
            config["spacings"],
            t=config["t"],
            dt_ratio=config["dt_ratio"],
            saturation_floor=config["saturation_floor"],
        )
        detail = f"limiting defect {report.limiting_defect:.3e}"
        if report.saturated:
            detail += ", saturated at the rounding floor"
        bundle.check(
            f"residual order ({label})",
            report.estimated_order,
            0.5 * (low + high),
            "derived-oracle",
            report.passes((low, high)),
            tolerance=0.5 * (high - low),
            inputs={"h1": params.h1, "h2": params.h2, "t": report.time},
            detail=detail,
        )
        rows.extend(
            {"solution": label, "h": h, "residual_norm": norm}
            for h, norm in zip(report.grid_spacings, report.residual_norms)
        )
    _write_table(pd.DataFrame(rows), output_dir, "residual_ladder.csv", bundle)
    return bundle


def cmd_blowup_scan(config: dict, output_dir: Optional[str] = None, plot: bool = False) -> ResultBundle:
    """Growth rates of the L_p and L_inf norms of psi_eps as eps -> 0."""
    bundle = ResultBundle("blowup-scan")
    settings = quadrature_settings(config)
    A, C = config["A"], config["C"]
    ladder = config["eps_values"]
    rows = []

    for p in config["p_values"]:
        fit = lp_blowup_fit(A, C, p, ladder, settings)
        expected = -(p - 2.0) / (2.0 * p)
        bundle.check(
            f"L_{p:g} slope",
            fit.fitted_slope,
            expected,
            "derived-oracle",
            _relative(fit.fitted_slope, expected) <= config["slope_rel_tol"],
            tolerance=config["slope_rel_tol"],
            inputs={"eps": ladder},
        )
        scaled = [
            lp_norm_pth_power_direct(A, C, p, eps, settings) * eps ** ((p - 2.0) / 2.0)
            for eps in ladder
        ]
        spread = relative_spread(scaled)
        bundle.check(
            f"L_{p:g} scaling identity",
            spread,
            0.0,
            "paper",
            spread <= config["identity_rel_tol"],
            tolerance=config["identity_rel_tol"],
            detail="spread of ||psi_eps||_p^p eps^((p-2)/2), integrated in x",
        )
        adaptive = half_line_profile_integral(C, p, settings)
        oracle = profile_integral_closed_form(C, p)
        bundle.check(
            f"L_{p:g} Beta oracle",
            adaptive,
            oracle,
            "derived-oracle",
            _relative(adaptive, oracle) <= config["oracle_rel_tol"],
            tolerance=config["oracle_rel_tol"],
        )
        fixed = profile_integral_fixed_rule(C, p, settings)
        bundle.check(
            f"L_{p:g} quadrature self-consistency",
            adaptive,
            fixed,
            "derived-oracle",
            _relative(adaptive, fixed) <= config["self_consistency_rel_tol"],
            tolerance=config["self_consistency_rel_tol"],
            detail="adaptive vs double-exponential rule",
        )
        slopes = pointwise_log_slopes(ladder, fit.values)
        for eps, norm, slope in zip(ladder, fit.values, slopes):
            peak, argmax = linf_norm(A, C, eps)
            rows.append(
                {
                    "eps": eps,
                    "p": p,
                    "lp_norm": norm,
                    "linf_norm": peak,
                    "argmax": argmax,
                    "slope_partial": slope,
                }
            )

    _linf_checks(bundle, config)
    scan = pd.DataFrame(rows, columns=SCAN_COLUMNS)
    _write_table(scan, output_dir, "blowup_scan.csv", bundle)
    if plot and output_dir is not None:
        from ..utils.plot_utils import plot_blowup_rates

        bundle.artifacts.append(plot_blowup_rates(scan, output_dir))
    return bundle


def _linf_checks(bundle: ResultBundle, config: dict):
    A, C = config["A"], config["C"]
    ladder = config["linf_eps_values"]
    fit = linf_blowup_fit(A, C, ladder)
    bundle.check(
        "L_inf slope",
        fit.fitted_slope,
        -0.5,
        "paper",
        _relative(fit.fitted_slope, -0.5) <= config["slope_rel_tol"],
        tolerance=config["slope_rel_tol"],
    )
    scaled = [value * math.sqrt(eps) for eps, value in zip(ladder, fit.values)]
    spread = relative_spread(scaled)
    bundle.check(
        "L_inf scaling identity",
        spread,
        0.0,
        "paper",
        spread <= config["linf_rel_tol"],
        tolerance=config["linf_rel_tol"],
        detail="spread of ||psi_eps||_inf sqrt(eps)",
    )
    closed_form = [analytic_linf(A, C, eps)[0] for eps in ladder]
    worst = max(_relative(v, ref) for v, ref in zip(fit.values, closed_form))
    bundle.check(
        "L_inf closed-form maximum",
        worst,
        0.0,
        "derived-oracle",
        worst <= config["linf_rel_tol"],
        tolerance=config["linf_rel_tol"],
    )
    golden = [linf_norm_golden(A, C, eps)[0] for eps in ladder]
    worst = max(_relative(v, ref) for v, ref in zip(golden, fit.values))
    bundle.check(
        "L_inf golden-section cross-check",
        worst,
        0.0,
        "derived-oracle",
        worst <= config["linf_rel_tol"],
        tolerance=config["linf_rel_tol"],
    )
    ratios = [x / eps for x, eps in zip(fit.argmax, ladder)]
    expected = C**1.5 / math.sqrt(27.0)
    worst = max(abs(r - expected) for r in ratios)
    bundle.check(
        "argmax / eps",
        ratios[0],
        expected,
        "paper",
        worst <= config["argmax_tol"],
        tolerance=config["argmax_tol"],
        detail=f"worst deviation over the ladder {worst:.3e}",
    )
    if config["random_pairs"]:
        rng = np.random.default_rng(config["seed"])
        worst = 0.0
        for _ in range(config["random_pairs"]):
            a = rng.uniform(0.5, 2.0)
            c = math.exp(rng.uniform(math.log(0.1), math.log(10.0)))
            eps = 10.0 ** rng.uniform(-4.0, 0.0)
            worst = max(worst, _relative(linf_norm(a, c, eps)[1], analytic_linf(a, c, eps)[1]))
        bundle.check(
            "argmax formula eps C^(3/2) / sqrt(27)",
            worst,
            0.0,
            "derived-oracle",
            worst <= config["argmax_tol"],
            tolerance=config["argmax_tol"],
            inputs={"pairs": config["random_pairs"], "seed": config["seed"]},
        )


def cmd_distribution_test(
    config: dict, output_dir: Optional[str] = None, plot: bool = False
) -> ResultBundle:
    """Convergence of eps^((p-2)/2) |psi_eps|^p to K delta, tested against bump functions."""
    bundle = ResultBundle("distribution-test")
    settings = quadrature_settings(config)
    A, C, p = config["A"], config["C"], config["p"]
    ladder = config["eps_values"]
    bumps = [BumpFunction(**b) for b in config["bumps"]]

    K = delta_constant_K(A, C, p, settings)
    K_oracle = 2.0 * A**p * profile_integral_closed_form(C, p)
    bundle.check(
        "K vs Beta closed form",
        K,
        K_oracle,
        "derived-oracle",
        _relative(K, K_oracle) <= config["oracle_rel_tol"],
        tolerance=config["oracle_rel_tol"],
    )

    target = K * evaluate_test_function(bumps, 0.0)
    pairings = [pairing(p, eps, A, C, bumps, settings) for eps in ladder]
    deviations = [abs(v - target) for v in pairings]
    _write_table(
        pd.DataFrame(
            {"eps": ladder, "pairing": pairings, "target": target, "deviation": deviations}
        ),
        output_dir,
        "distribution_test.csv",
        bundle,
    )

    if all(b.normalization == 0 for b in bumps):
        bundle.check(
            "zero test function",
            max(abs(v) for v in pairings),
            0.0,
            "trivial",
            all(v == 0 for v in pairings),
        )
        return bundle

    monotone = all(b < a for a, b in zip(deviations, deviations[1:]))
    if target != 0:
        bundle.check(
            "deviation from K phi(0) decreases",
            deviations[-1],
            0.0,
            "derived-oracle",
            monotone,
            inputs={"eps": ladder},
        )
        at_limit = deviations[ladder.index(config["limit_eps"])] / abs(target)
        bundle.check(
            f"relative deviation at eps = {config['limit_eps']:g}",
            at_limit,
            0.0,
            "derived-oracle",
            at_limit <= config["limit_rel_tol"],
            tolerance=config["limit_rel_tol"],
            inputs={"K": K, "phi(0)": target / K},
        )
    else:
        ratio = abs(pairings[-1]) / abs(pairings[0]) if pairings[0] else 0.0
        bundle.check(
            "off-origin pairing decays",
            ratio,
            0.0,
            "derived-oracle",
            monotone and ratio < config["decay_ratio"],
            tolerance=config["decay_ratio"],
            detail="final / first pairing over a monotone ladder",
        )
    return bundle


def _simulation_setup(config: dict):
    """
    Parameters, initial datum, exact reference and, for the transformed family,
    the blow-up profile (A, C, b, T_blow) its modulus follows.
    """
    family = config["family"]
    if family == "gaussian":
        h1 = TRUNCATION_H1 if config["h1"] is None else config["h1"]
        h2 = TRUNCATION_H2 if config["h2"] is None else config["h2"]
        params = make_parameters(config["epsilon"], config["gamma"], h1, h2)
        return params, GaussianPacket(**config["gaussian"]), None, None
    constants, params, stationary = _solution_setup(config)
    if family == "truncated":
        spec = TruncatedSolution(constants, config["k1"], config["k2"], config["k3"], config["k4"])
        return params, spec, spec, None
    b, T_blow = config["transform"]["b"], config["transform"]["T_blow"]
    spec = TransformedSolution(blowup_element(b, T_blow), stationary)
    A, C = modulus_parameters(stationary)
    return params, spec, spec, {"A": A, "C": C, "b": b, "T_blow": T_blow}


def _write_trajectory(trajectory: Trajectory, output_dir: Optional[str], bundle: ResultBundle):
    _write_table(trajectory.norm_series, output_dir, "norm_series.csv", bundle)
    if trajectory.exact_error_series is not None:
        _write_table(trajectory.exact_error_series, output_dir, "error_series.csv", bundle)
    for snapshot in trajectory.snapshots:
        values = snapshot.values
        frame = pd.DataFrame(
            {"x": snapshot.grid.nodes, "re": values.real, "im": values.imag, "abs": np.abs(values)},
            columns=SNAPSHOT_COLUMNS,
        )
        _write_table(frame, output_dir, f"snapshot_t{snapshot.time:.6f}.csv", bundle)


def cmd_simulate(config: dict, output_dir: Optional[str] = None, plot: bool = False) -> ResultBundle:
    """Time integration checked against the exact family it starts from."""
    bundle = ResultBundle("simulate")
    params, initial, reference, profile = _simulation_setup(config)
    grid = SpatialGrid.from_spacing(config["x_min"], config["x_max"], config["spacing"])
    try:
        sim = SimulationConfig(
            params,
            grid,
            config["dt"],
            config["t_final"],
            boundary=initial,
            norm_track=tuple(config["norm_track"]),
            snapshot_times=tuple(config["snapshot_times"]),
            safety=config["safety"],
        )
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc

    try:
        trajectory = run(
            sim,
            initial,
            reference,
            quadrature_settings(config),
            track_mass=config["mass_drift_tol"] is not None,
        )
    except (SimulationHalted, BranchError) as exc:
        halt_time = getattr(exc, "time", float("nan"))
        bundle.mark_halted(halt_time)
        partial = getattr(exc, "trajectory", None)
        if partial is not None:
            _write_trajectory(partial, output_dir, bundle)
        bundle.check(
            "simulation completes",
            f"halted at t = {halt_time:.6g}",
            f"t_final = {config['t_final']:g}",
            "trivial",
            False,
            inputs={"last_norms": getattr(exc, "last_norms", {})},
            detail=str(exc),
        )
        return bundle

    _write_trajectory(trajectory, output_dir, bundle)
    _trajectory_checks(bundle, config, sim, trajectory)
    if profile is not None:
        _profile_check(bundle, config, trajectory, profile)
    if plot and output_dir is not None:
        from ..utils.plot_utils import plot_norm_series

        bundle.artifacts.append(plot_norm_series(trajectory.norm_series, output_dir))
    return bundle


def _trajectory_checks(
    bundle: ResultBundle, config: dict, sim: SimulationConfig, trajectory: Trajectory
):
    if config["t_final"] == 0:
        bundle.check(
            "initial snapshot only",
            len(trajectory.snapshots),
            1,
            "trivial",
            len(trajectory.snapshots) == 1,
        )
    if trajectory.exact_error_series is not None:
        final_error = float(trajectory.exact_error_series["rel_l2_error"].iloc[-1])
        bundle.check(
            "relative L2 error vs exact solution",
            final_error,
            0.0,
            "derived-oracle",
            final_error <= config["error_tol"],
            tolerance=config["error_tol"],
            inputs={"t": trajectory.final.time, "spacing": sim.grid.spacing, "dt": sim.effective_dt},
        )
        worst = float(trajectory.norm_series["rel_err"].max())
        bundle.check(
            "tracked norms vs exact on-domain quadrature",
            worst,
            0.0,
            "derived-oracle",
            worst <= config["norm_rel_tol"],
            tolerance=config["norm_rel_tol"],
        )
    if config["monotone_p"] is not None and len(trajectory.snapshots) > 1:
        norms = trajectory.norms_for(config["monotone_p"])["norm"].tolist()
        bundle.check(
            f"L_{config['monotone_p']:g} grows",
            norms[-1],
            norms[0],
            "derived-oracle",
            all(b > a for a, b in zip(norms, norms[1:])),
        )
    if config["mass_drift_tol"] is not None and sim.n_steps > 0:
        series = trajectory.mass_series
        drift = mass_drift_per_step(series["t"], series["mass"], sim.effective_dt)
        bundle.check(
            "mass drift per step",
            float(drift),
            0.0,
            "derived-oracle",
            drift <= config["mass_drift_tol"],
            tolerance=config["mass_drift_tol"],
        )


def _profile_check(bundle: ResultBundle, config: dict, trajectory: Trajectory, profile: dict):
    """Final simulated modulus against A x^(1/6) / (x^(2/3) + eps(t)^(2/3) C)."""
    final = trajectory.final
    x = final.grid.nodes
    eps = epsilon_at_time(profile["b"], profile["T_blow"], final.time)
    expected = epsilon_modulus(profile["A"], profile["C"], eps, x)
    deviation = math.sqrt(
        integrate.trapezoid((np.abs(final.values) - expected) ** 2, x)
        / integrate.trapezoid(expected**2, x)
    )
    bundle.check(
        "modulus vs blow-up profile",
        deviation,
        0.0,
        "paper",
        deviation <= config["error_tol"],
        tolerance=config["error_tol"],
        inputs={"A": profile["A"], "C": profile["C"], "eps": eps, "t": final.time},
    )


COMMAND_HANDLERS = {
    "lie-check": cmd_lie_check,
    "verify-solution": cmd_verify_solution,
    "blowup-scan": cmd_blowup_scan,
    "distribution-test": cmd_distribution_test,
    "simulate": cmd_simulate,
}
