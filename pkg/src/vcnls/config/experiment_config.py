# src/vcnls/config/experiment_config.py

# Default settings for every subcommand. An experiment file overrides only the
# keys it names; the schema checks in vcnls.cli.config reject anything else.

# --- Quadrature ---
# Shared by blowup-scan, distribution-test and the exact norms of simulate.
QUADRATURE_DEFAULTS = {
    "abs_tol": 1e-12,  # Absolute tolerance; also the budget for the neglected tail
    "rel_tol": 1e-10,  # Relative tolerance per integration piece
    "max_subdivisions": 200,  # QUADPACK subdivision limit per piece
    "tail_cutoff_Y": None,  # Scaled-variable cutoff; None derives it from abs_tol and p
    "fixed_rule_step": 1.0 / 64.0,  # Step of the double-exponential cross-check rule
}

# --- lie-check ---
LIE_CHECK_DEFAULTS = {
    "jacobi": True,  # Also verify the Jacobi identity over every generator triple
}

# --- verify-solution ---
# Residual convergence of an exact family under grid refinement.
# 'family': 'stationary', 'truncated' or 'transformed' (stationary solution moved
#           by 'group' and/or by 'random_elements' seeded random SL(2,R) elements).
VERIFY_SOLUTION_DEFAULTS = {
    "family": "stationary",
    "epsilon": 1,  # Sign of the cubic term, +1 or -1
    "gamma": 1.0,  # Gain/loss strength, non-zero
    "h1": None,  # Override of the potential coefficient; None keeps 5/36
    "h2": None,  # Override of the imaginary potential coefficient; None keeps 0
    "k1": 1.0,
    "k2": 1.0,
    "k3": 0.0,
    "k4": -1.0,  # Only used by the truncated family
    "group": None,  # [a, b, c, d] or [a, b, c, d, theta] for the transformed family
    "random_elements": 0,  # Number of random group elements for the transformed family
    "seed": 12345,
    "t": 0.0,  # Probe time
    "probe_points": [0.5, 1.0, 1.5, 2.0],
    "spacings": [1e-2, 5e-3, 2.5e-3, 1.25e-3],
    "dt_ratio": 1.0,  # dt / h in the time difference
    "order_window": [1.8, 2.2],
    "saturation_floor": 1e-11,  # Residual norms below this count as rounding noise
}

# --- blowup-scan ---
# Norm growth of psi_eps(x) = A |x|^(1/6) / (|x|^(2/3) + eps^(2/3) C) as eps -> 0.
BLOWUP_SCAN_DEFAULTS = {
    "A": 1.0,
    "C": 1.0,
    "p_values": [3.0, 4.0, 6.0],  # All must exceed 2
    "eps_values": [1.0, 1e-1, 1e-2, 1e-3],
    "linf_eps_values": [1.0, 1e-1, 1e-2, 1e-3, 1e-4],
    "slope_rel_tol": 0.01,  # Fitted slope vs -(p - 2) / (2p) and vs -1/2
    "identity_rel_tol": 1e-6,  # Spread of ||psi_eps||_p^p eps^((p-2)/2) over the ladder
    "oracle_rel_tol": 1e-8,  # Quadrature vs the Beta-function closed form
    "self_consistency_rel_tol": 1e-8,  # Adaptive quadrature vs the fixed rule
    "linf_rel_tol": 1e-8,  # Spread of ||psi_eps||_inf sqrt(eps); closed-form maximum
    "argmax_tol": 1e-6,  # Absolute tolerance on argmax / eps
    "random_pairs": 20,  # Random (A, C) pairs for the general maximizer formula
    "seed": 2024,
    "quadrature": QUADRATURE_DEFAULTS,
}

# --- distribution-test ---
# Pairings of eps^((p-2)/2) |psi_eps|^p with sums of bump functions.
DISTRIBUTION_TEST_DEFAULTS = {
    "A": 1.0,
    "C": 1.0,
    "p": 4.0,
    "bumps": [{"center": 0.0, "radius": 1.0, "normalization": 1.0}],
    "eps_values": [1.0, 1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6],
    "limit_eps": 1e-3,  # Ladder rung at which the limit tolerance is checked
    "limit_rel_tol": 0.01,  # |pairing - K phi(0)| / (K phi(0)) at limit_eps
    "decay_ratio": 1e-4,  # Final / first pairing when phi(0) = 0
    "oracle_rel_tol": 1e-8,  # K by quadrature vs the Beta-function closed form
    "quadrature": QUADRATURE_DEFAULTS,
}

# --- simulate ---
# 'family': 'truncated' (k1..k4), 'transformed' (stationary k1..k3 moved by the
#           blow-up element of 'transform') or 'gaussian' (static packet, no reference).
SIMULATE_DEFAULTS = {
    "family": "truncated",
    "epsilon": 1,
    "gamma": 1.0,
    "h1": None,  # None keeps 5/36
    "h2": None,  # None keeps 0
    "k1": 1.0,
    "k2": 1.0,
    "k3": 0.0,
    "k4": -1.0,  # Blow-up at T = k1 / |k4| = 1
    "transform": {"b": -1.0, "T_blow": 1.0},
    "gaussian": {"center": 5.0, "width": 0.5, "wavenumber": 2.0, "amplitude": 1.0},
    "x_min": 0.05,
    "x_max": 10.0,
    "spacing": 1e-3,
    "dt": 1e-5,
    "t_final": 0.5,
    "safety": 0.5,  # Upper bound on dt / spacing
    "norm_track": [2.0, 4.0],
    "snapshot_times": [0.1, 0.2, 0.3, 0.4],
    "error_tol": 1e-3,  # Final relative L2 error vs the exact solution
    "norm_rel_tol": 0.05,  # Simulated vs exact on-domain norms
    "monotone_p": 4.0,  # Tracked norm required to grow; None disables the check
    "mass_drift_tol": None,  # Per-step relative L2 drift bound; None disables the check
    "quadrature": QUADRATURE_DEFAULTS,
}

COMMAND_DEFAULTS = {
    "lie-check": LIE_CHECK_DEFAULTS,
    "verify-solution": VERIFY_SOLUTION_DEFAULTS,
    "blowup-scan": BLOWUP_SCAN_DEFAULTS,
    "distribution-test": DISTRIBUTION_TEST_DEFAULTS,
    "simulate": SIMULATE_DEFAULTS,
}

# Keys whose default is None, with the type a non-null value must have.
NULLABLE_KEYS = {
    "h1": float,
    "h2": float,
    "group": list,
    "tail_cutoff_Y": float,
    "monotone_p": float,
    "mass_drift_tol": float,
}
