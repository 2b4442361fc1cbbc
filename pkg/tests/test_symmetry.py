# tests/test_symmetry.py

import unittest

import numpy as np
import sympy as sp

from vcnls.analysis import epsilon_modulus
from vcnls.core import (
    BranchError,
    GroupElement,
    LieAlgebraError,
    group_compose,
    one_parameter_subgroup,
)
from vcnls.solutions import StationarySolution, TruncatedSolution, truncation_constants
from vcnls.symmetry import (
    GENERATORS,
    TransformedSolution,
    VectorField,
    apply_group_action,
    blowup_element,
    blowup_time,
    characteristic,
    combination,
    decompose,
    epsilon_at_time,
    epsilon_family,
    jacobi_report,
    lie_bracket,
    structure_constants_report,
)
from vcnls.symmetry.algebra import rho, x


class TestLieAlgebra(unittest.TestCase):

    def test_structure_constants(self):
        report = structure_constants_report()
        self.assertEqual(len(report), 6)
        for check in report:
            self.assertTrue(check.holds, msg=f"{check.label}: {check.computed} != {check.expected}")

    def test_bracket_table_entries(self):
        T, D, C, W = (GENERATORS[n] for n in ("T", "D", "C", "W"))
        self.assertEqual(lie_bracket(T, D), 2 * T)
        self.assertEqual(lie_bracket(T, C), D)
        self.assertEqual(lie_bracket(D, C), 2 * C)
        for field in (T, D, C):
            self.assertTrue(lie_bracket(W, field).is_zero())

    def test_bracket_is_antisymmetric(self):
        names = list(GENERATORS)
        for left in names:
            for right in names:
                forward = lie_bracket(GENERATORS[left], GENERATORS[right])
                backward = lie_bracket(GENERATORS[right], GENERATORS[left])
                self.assertTrue((forward + backward).is_zero())

    def test_jacobi_identity(self):
        report = jacobi_report()
        self.assertEqual(len(report), 4)
        self.assertTrue(all(report.values()))

    def test_decompose(self):
        self.assertEqual(decompose(lie_bracket(GENERATORS["T"], GENERATORS["D"])), {"T": 2})
        field = combination({"D": sp.Rational(1, 2), "W": -3})
        self.assertEqual(decompose(field), {"D": sp.Rational(1, 2), "W": -3})
        self.assertEqual(decompose(VectorField()), {})
        self.assertIsNone(decompose(VectorField(x_coeff=x**2)))

    def test_representation_limits(self):
        with self.assertRaises(LieAlgebraError):
            VectorField(x_coeff=x**3)
        with self.assertRaises(LieAlgebraError):
            VectorField(rho_coeff=sp.Symbol("y") * rho)
        with self.assertRaises(TypeError):
            lie_bracket(GENERATORS["T"], "D")


class TestGroupAction(unittest.TestCase):

    def setUp(self):
        self.constants = truncation_constants(1, 1.0)
        self.stationary = StationarySolution(self.constants, k1=1.0, k2=1.0)
        self.truncated = TruncatedSolution(self.constants, k1=1.0, k2=1.0, k3=0.0, k4=-1.0)
        self.x = np.linspace(0.2, 4.0, 25)

    def test_identity_action(self):
        for inner in (self.stationary, self.truncated):
            np.testing.assert_allclose(
                apply_group_action(GroupElement.identity(), inner, self.x, 0.3),
                inner.evaluate(self.x, 0.3),
                rtol=1e-14,
            )

    def test_time_translation(self):
        g = GroupElement(1.0, 0.0, 0.25, 1.0)
        np.testing.assert_allclose(
            TransformedSolution(g, self.truncated).evaluate(self.x, 0.3),
            self.truncated.evaluate(self.x, 0.55),
            rtol=1e-13,
        )

    def test_gauge_phase(self):
        g = GroupElement(1.0, 0.0, 0.0, 1.0, 0.7)
        np.testing.assert_allclose(
            apply_group_action(g, self.stationary, self.x, 0.0),
            np.exp(0.7j) * self.stationary.evaluate(self.x),
            rtol=1e-14,
        )

    def test_successive_actions_compose(self):
        g1 = GroupElement(1.2, -0.4, 0.3, (1.0 - 0.12) / 1.2, 0.2)
        g2 = GroupElement(0.9, 0.2, -0.5, (1.0 - 0.1) / 0.9, -0.5)
        for inner in (self.stationary, self.truncated):
            nested = apply_group_action(g1, TransformedSolution(g2, inner), self.x, 0.3)
            composed = apply_group_action(group_compose(g2, g1), inner, self.x, 0.3)
            np.testing.assert_allclose(nested, composed, rtol=1e-11)

    def test_truncated_is_an_orbit_of_the_stationary_solution(self):
        k1, k2, k3, k4 = 2.0, 0.7, 0.4, -1.0
        truncated = TruncatedSolution(self.constants, k1, k2, k3, k4)
        orbit = TransformedSolution(
            GroupElement(k1, k4, 0.0, 1.0 / k1),
            StationarySolution(self.constants, k1=1.0, k2=k2, k3=k3),
        )
        for time in (0.0, 0.5, 1.5):
            np.testing.assert_allclose(
                orbit.evaluate(self.x, time), truncated.evaluate(self.x, time), rtol=1e-12
            )

    def test_branch_guard(self):
        g = blowup_element(-1.0, 1.0)
        with self.assertRaises(BranchError):
            apply_group_action(g, self.stationary, 1.0, 1.0)

    def test_blowup_element(self):
        g = blowup_element(-2.0, 0.5)
        self.assertAlmostEqual(g.determinant, 1.0)
        self.assertAlmostEqual(blowup_time(g), 0.5)
        self.assertEqual(blowup_time(GroupElement.identity()), float("inf"))
        self.assertAlmostEqual(epsilon_at_time(-2.0, 0.5, 0.25), 0.5)
        with self.assertRaises(ValueError):
            blowup_element(1.0, 1.0)

    def test_epsilon_family_is_the_transformed_stationary_solution(self):
        b, T_blow = -1.0, 1.0
        transformed = TransformedSolution(blowup_element(b, T_blow), self.stationary)
        for time in (0.0, 0.5, 0.9):
            eps = epsilon_at_time(b, T_blow, time)
            np.testing.assert_allclose(
                transformed.evaluate(self.x, time),
                epsilon_family(b, T_blow, self.stationary, self.x, eps),
                rtol=1e-13,
            )

    def test_epsilon_family_modulus(self):
        A, C = self.constants.amplitude_A, self.stationary.C
        for eps in (1.0, 0.1, 1e-3):
            values = epsilon_family(-1.0, 1.0, self.stationary, self.x, eps)
            np.testing.assert_allclose(
                np.abs(values), epsilon_modulus(A, C, eps, self.x), rtol=1e-12
            )
        # At x = eps the profile is evaluated at 1: |psi_eps| = eps^(-1/2) A / (1 + C).
        self.assertAlmostEqual(
            abs(epsilon_family(-1.0, 1.0, self.stationary, 0.01, 0.01)) / (A / 2.0),
            10.0,
            places=10,
        )
        self.assertAlmostEqual(epsilon_modulus(1.0, 1.0, 1.0, 1.0), 0.5)

    def test_characteristics_match_subgroup_flows(self):
        x0, t0, s = 1.3, 0.2, 1e-4
        for name, field in GENERATORS.items():
            forward = apply_group_action(one_parameter_subgroup(name, s), self.truncated, x0, t0)
            backward = apply_group_action(one_parameter_subgroup(name, -s), self.truncated, x0, t0)
            flow_rate = (forward - backward) / (2.0 * s)
            q = characteristic(field, self.truncated, x0, t0)
            self.assertLess(abs(flow_rate + q), 1e-6, msg=name)


if __name__ == "__main__":
    unittest.main()
