# src/vcnls/utils/estimators.py

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class PowerLawFit:
    """Least-squares fit of log(y) = intercept + slope * log(x)."""

    slope: float
    intercept: float
    fit_residual: float


def fit_log_log_slope(x, y) -> PowerLawFit:
    """
    Fits a power law y = C x^slope by least squares in log-log space.

    Args:
        x (array-like): Positive abscissae (step sizes, eps values, ...).
        y (array-like): Positive ordinates.

    Returns:
        PowerLawFit: Slope, intercept and the root-mean-square residual of the
                     fit in natural-log units.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape or x.size < 2:
        raise ValueError("fit_log_log_slope needs two equal-length arrays with >= 2 points.")
    if np.any(x <= 0) or np.any(y <= 0):
        raise ValueError("fit_log_log_slope needs strictly positive data.")
    log_x, log_y = np.log(x), np.log(y)
    slope, intercept = np.polyfit(log_x, log_y, 1)
    residual = log_y - (intercept + slope * log_x)
    return PowerLawFit(float(slope), float(intercept), float(np.sqrt(np.mean(residual**2))))


def pointwise_log_slopes(x, y) -> np.ndarray:
    """
    Point-to-point slopes d(log y)/d(log x) without fitting: central averages of
    the neighbouring secants in the interior, one-sided secants at the ends.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.size < 2:
        raise ValueError("pointwise_log_slopes needs at least 2 points.")
    if np.any(x <= 0) or np.any(y <= 0):
        raise ValueError("pointwise_log_slopes needs strictly positive data.")
    secants = np.diff(np.log(y)) / np.diff(np.log(x))
    slopes = np.empty(x.size)
    slopes[1:-1] = 0.5 * (secants[1:] + secants[:-1])
    slopes[0] = secants[0]
    slopes[-1] = secants[-1]
    return slopes


def consecutive_orders(steps, errors) -> np.ndarray:
    """log(e_i / e_{i-1}) / log(h_i / h_{i-1}) for each refinement level."""
    steps = np.asarray(steps, dtype=float)
    errors = np.asarray(errors, dtype=float)
    return np.log(errors[1:] / errors[:-1]) / np.log(steps[1:] / steps[:-1])


def relative_spread(values) -> float:
    """(max - min) / |mean|, the constancy measure for scale-invariant quantities."""
    values = np.asarray(values, dtype=float)
    return float((values.max() - values.min()) / abs(values.mean()))
