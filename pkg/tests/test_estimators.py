# tests/test_estimators.py

import unittest
import numpy as np

# Import estimator functions
from vcnls.utils import (
    consecutive_orders,
    fit_log_log_slope,
    pointwise_log_slopes,
    relative_spread,
)

class TestEstimators(unittest.TestCase):

    def test_fit_log_log_slope(self):
        """Test fit_log_log_slope function."""
        # Exact power law y = 3 x^2 -> slope 2, intercept ln 3, zero residual
        x = np.array([1e-2, 5e-3, 2.5e-3, 1.25e-3])
        fit = fit_log_log_slope(x, 3.0 * x**2)
        self.assertAlmostEqual(fit.slope, 2.0, places=12)
        self.assertAlmostEqual(fit.intercept, np.log(3.0), places=10)
        self.assertAlmostEqual(fit.fit_residual, 0.0, places=12)

        # Negative slope, as for the norm growth ||psi_eps||_p ~ eps^(-1/4)
        eps = np.array([1.0, 1e-1, 1e-2, 1e-3])
        self.assertAlmostEqual(fit_log_log_slope(eps, eps**-0.25).slope, -0.25, places=12)

        # Noisy data leaves a positive residual
        noisy = 3.0 * x**2 * np.array([1.0, 1.1, 0.9, 1.0])
        self.assertGreater(fit_log_log_slope(x, noisy).fit_residual, 0.0)

    def test_fit_log_log_slope_rejects_bad_input(self):
        """Test fit_log_log_slope input checks."""
        with self.assertRaises(ValueError):
            fit_log_log_slope([1.0], [1.0]) # Single point
        with self.assertRaises(ValueError):
            fit_log_log_slope([1.0, 2.0], [1.0]) # Length mismatch
        with self.assertRaises(ValueError):
            fit_log_log_slope([1.0, 2.0], [0.0, 1.0]) # Non-positive ordinate

    def test_pointwise_log_slopes(self):
        """Test pointwise_log_slopes function."""
        # Pure power law: every local slope equals the exponent
        x = np.array([1.0, 0.1, 0.01, 0.001])
        np.testing.assert_allclose(pointwise_log_slopes(x, x**-0.5), -0.5)

        # Two points: both ends use the single secant
        # ln(4/1) / ln(2/1) = 2
        np.testing.assert_allclose(pointwise_log_slopes([1.0, 2.0], [1.0, 4.0]), [2.0, 2.0])

        with self.assertRaises(ValueError):
            pointwise_log_slopes([1.0], [1.0])

    def test_consecutive_orders(self):
        """Test consecutive_orders function."""
        # Halving h quarters the error -> order 2 at each refinement
        steps = [0.1, 0.05, 0.025]
        errors = [1e-2, 2.5e-3, 6.25e-4]
        np.testing.assert_allclose(consecutive_orders(steps, errors), [2.0, 2.0])

        # First-order then saturated
        orders = consecutive_orders([0.1, 0.05, 0.025], [1e-2, 5e-3, 5e-3])
        self.assertAlmostEqual(orders[0], 1.0)
        self.assertAlmostEqual(orders[1], 0.0)

    def test_relative_spread(self):
        """Test relative_spread function."""
        self.assertAlmostEqual(relative_spread([2.0, 2.0, 2.0]), 0.0) # Constant
        # [1, 2, 3] -> (3 - 1) / 2 = 1
        self.assertAlmostEqual(relative_spread([1.0, 2.0, 3.0]), 1.0)
        # Sign of the mean does not matter
        self.assertAlmostEqual(relative_spread([-1.0, -2.0, -3.0]), 1.0)


if __name__ == '__main__':
    unittest.main(argv=['first-arg-is-ignored'], exit=False)
