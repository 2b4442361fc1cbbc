# tests/test_residual.py

import unittest

import numpy as np

from vcnls.core import DomainError, GroupElement, SpatialGrid, make_parameters
from vcnls.residual import (
    convergence_order,
    random_group_elements,
    residual_at,
    residual_on_grid,
    residual_terms,
)
from vcnls.solutions import (
    ScaledSolution,
    StationarySolution,
    TruncatedSolution,
    ZeroSolution,
    truncation_constants,
)
from vcnls.symmetry import TransformedSolution

PROBES = [0.5, 1.0, 1.5, 2.0]
SPACINGS = [1e-2, 5e-3, 2.5e-3, 1.25e-3]


class TestResidualOperator(unittest.TestCase):

    def setUp(self):
        self.constants = truncation_constants(1, 1.0)
        self.params = self.constants.equation_parameters()
        self.stationary = StationarySolution(self.constants, k1=1.0, k2=1.0)

    def test_zero_field_has_zero_residual(self):
        self.assertEqual(residual_at(self.params, ZeroSolution(), 1.0, 0.0, 1e-2, 1e-2), 0.0)
        grid = SpatialGrid(0.5, 2.0, 31)
        np.testing.assert_array_equal(
            residual_on_grid(self.params, ZeroSolution(), grid, 0.0, 1e-3), np.zeros(29)
        )

    def test_residual_is_small_for_exact_solution(self):
        value = residual_at(self.params, self.stationary, 1.0, 0.0, 1e-3, 1e-3)
        self.assertIsInstance(value, complex)
        self.assertLess(abs(value), 1e-4)

    def test_terms_sum_to_total(self):
        terms = residual_terms(self.params, self.stationary, np.array(PROBES), 0.0, 1e-2, 1e-2)
        np.testing.assert_allclose(
            terms.total, terms.time + terms.dispersion + terms.cubic + terms.potential
        )
        np.testing.assert_array_equal(terms.time, np.zeros(4))

    def test_scaling_moves_only_the_cubic_term(self):
        # residual(alpha psi) - alpha * linear(psi) = |alpha|^2 alpha * cubic(psi)
        probes = np.array(PROBES)
        base = residual_terms(self.params, self.stationary, probes, 0.0, 1e-2, 1e-2)
        doubled = ScaledSolution(self.stationary, 2.0)
        scaled = residual_terms(self.params, doubled, probes, 0.0, 1e-2, 1e-2)
        np.testing.assert_allclose(scaled.linear, 2.0 * base.linear, rtol=1e-12, atol=1e-12)
        np.testing.assert_allclose(
            scaled.total - 2.0 * base.linear, 8.0 * base.cubic, rtol=1e-12, atol=1e-12
        )

        truncated = TruncatedSolution(self.constants, k1=1.0, k2=1.0, k3=0.0, k4=-1.0)
        alpha = 2.0 * np.exp(0.3j)
        base = residual_terms(self.params, truncated, probes, 0.25, 1e-2, 1e-2)
        scaled = residual_terms(
            self.params, ScaledSolution(truncated, alpha), probes, 0.25, 1e-2, 1e-2
        )
        np.testing.assert_allclose(
            scaled.total - alpha * base.linear,
            abs(alpha) ** 2 * alpha * base.cubic,
            rtol=1e-10,
            atol=1e-10,
        )

    def test_stencil_must_stay_in_domain(self):
        with self.assertRaises(DomainError):
            residual_at(self.params, self.stationary, 0.01, 0.0, 0.01, 0.01)
        with self.assertRaises(ValueError):
            residual_at(self.params, self.stationary, 1.0, 0.0, 0.0, 0.01)


class TestConvergenceOrder(unittest.TestCase):

    def setUp(self):
        self.constants = truncation_constants(1, 1.0)
        self.params = self.constants.equation_parameters()
        self.stationary = StationarySolution(self.constants, k1=1.0, k2=1.0)

    def test_stationary_solution_converges_at_second_order(self):
        report = convergence_order(self.params, self.stationary, PROBES, SPACINGS)
        self.assertFalse(report.saturated)
        self.assertTrue(report.passes((1.8, 2.2)), msg=f"order {report.estimated_order}")
        norms = report.residual_norms
        self.assertTrue(all(b < a for a, b in zip(norms, norms[1:])))

    def test_defocusing_stationary_solution(self):
        constants = truncation_constants(-1, 0.5)
        spec = StationarySolution(constants, k1=1.0, k2=2.0)
        report = convergence_order(constants.equation_parameters(), spec, PROBES, SPACINGS)
        self.assertTrue(report.passes(), msg=f"order {report.estimated_order}")

    def test_truncated_solution_converges(self):
        spec = TruncatedSolution(self.constants, k1=1.0, k2=1.0, k3=0.0, k4=-1.0)
        report = convergence_order(self.params, spec, PROBES, SPACINGS, t=0.25)
        self.assertTrue(report.passes(), msg=f"order {report.estimated_order}")

    def test_wrong_potential_leaves_a_finite_defect(self):
        # Without the 5/36 potential the residual tends to -(5/36) psi / x^2.
        params = make_parameters(1, 1.0, 0.0, 0.0)
        report = convergence_order(params, self.stationary, PROBES, SPACINGS)
        self.assertFalse(report.passes())
        self.assertLess(abs(report.estimated_order), 0.5)
        expected = max(5.0 / 36.0 * abs(self.stationary(x)) / x**2 for x in PROBES)
        self.assertAlmostEqual(report.limiting_defect / expected, 1.0, places=3)

    def test_gauge_shift_leaves_residual_modulus_unchanged(self):
        shifted = ScaledSolution(self.stationary, np.exp(0.9j))
        probes = np.array(PROBES)
        base = residual_at(self.params, self.stationary, probes, 0.0, 2e-3, 2e-3)
        gauged = residual_at(self.params, shifted, probes, 0.0, 2e-3, 2e-3)
        np.testing.assert_allclose(np.abs(gauged), np.abs(base), rtol=1e-6, atol=1e-9)

    def test_transformed_solutions_converge(self):
        rng = np.random.default_rng(12345)
        for g in random_group_elements(rng, 20, window=(0.0, 0.0)):
            self.assertAlmostEqual(g.determinant, 1.0, places=12)
            spec = TransformedSolution(g, self.stationary)
            report = convergence_order(self.params, spec, PROBES, SPACINGS)
            self.assertTrue(report.passes(), msg=f"{g}: order {report.estimated_order}")

    def test_saturated_ladder(self):
        report = convergence_order(self.params, ZeroSolution(), PROBES, SPACINGS)
        self.assertTrue(report.saturated)
        self.assertTrue(report.passes())

    def test_ladder_validation(self):
        with self.assertRaises(ValueError):
            convergence_order(self.params, self.stationary, PROBES, SPACINGS[:2])
        with self.assertRaises(DomainError):
            convergence_order(self.params, self.stationary, [0.05], SPACINGS)
        with self.assertRaises(ValueError):
            convergence_order(self.params, self.stationary, PROBES, [1e-3, 2e-3, 4e-3])

    def test_random_elements_respect_the_window(self):
        rng = np.random.default_rng(0)
        elements = random_group_elements(rng, 50, window=(0.0, 0.5), min_scale=0.25)
        self.assertEqual(len(elements), 50)
        for g in elements:
            self.assertIsInstance(g, GroupElement)
            self.assertGreaterEqual(min(g.scale_at(0.0), g.scale_at(0.5)), 0.25)


if __name__ == "__main__":
    unittest.main()
