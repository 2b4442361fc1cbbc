# src/vcnls/symmetry/algebra.py

import itertools
import logging
from dataclasses import dataclass
from typing import Optional

import sympy as sp

from ..core.errors import LieAlgebraError

logger = logging.getLogger(__name__)

t, x, rho = sp.symbols("t x rho", real=True)
COORDINATES = (t, x, rho)

# Coefficients are polynomials of at most this degree in each of t, x, rho.
MAX_DEGREE = 2

COMPONENTS = ("t_coeff", "x_coeff", "rho_coeff", "omega_coeff")


def _polynomial(expr) -> sp.Expr:
    expr = sp.expand(sp.sympify(expr))
    if expr.free_symbols - set(COORDINATES):
        raise LieAlgebraError(f"Coefficient {expr} depends on symbols outside (t, x, rho).")
    if expr == 0:
        return sp.Integer(0)
    poly = sp.Poly(expr, *COORDINATES)
    if not poly.domain.is_QQ and not poly.domain.is_ZZ:
        raise LieAlgebraError(f"Coefficient {expr} is not a rational polynomial.")
    for symbol, degree in zip(COORDINATES, poly.degree_list()):
        if degree > MAX_DEGREE:
            raise LieAlgebraError(
                f"Coefficient {expr} has degree {degree} in {symbol}; limit is {MAX_DEGREE}."
            )
    return expr


@dataclass(frozen=True, eq=False)
class VectorField:
    """
    tau d_t + xi d_x + eta d_rho + kappa d_omega with polynomial coefficients
    in (t, x, rho) over the rationals.
    """

    t_coeff: sp.Expr = sp.Integer(0)
    x_coeff: sp.Expr = sp.Integer(0)
    rho_coeff: sp.Expr = sp.Integer(0)
    omega_coeff: sp.Expr = sp.Integer(0)

    def __post_init__(self):
        for name in COMPONENTS:
            object.__setattr__(self, name, _polynomial(getattr(self, name)))

    @property
    def components(self) -> tuple[sp.Expr, ...]:
        return tuple(getattr(self, name) for name in COMPONENTS)

    def apply(self, expr) -> sp.Expr:
        """Derivative of a function of (t, x, rho) along the field."""
        expr = sp.sympify(expr)
        return sp.expand(
            self.t_coeff * sp.diff(expr, t)
            + self.x_coeff * sp.diff(expr, x)
            + self.rho_coeff * sp.diff(expr, rho)
        )

    def is_zero(self) -> bool:
        return all(component == 0 for component in self.components)

    def __add__(self, other: "VectorField") -> "VectorField":
        return VectorField(*(a + b for a, b in zip(self.components, other.components)))

    def __sub__(self, other: "VectorField") -> "VectorField":
        return VectorField(*(a - b for a, b in zip(self.components, other.components)))

    def __neg__(self) -> "VectorField":
        return VectorField(*(-a for a in self.components))

    def __mul__(self, scalar) -> "VectorField":
        scalar = sp.nsimplify(scalar)
        return VectorField(*(scalar * a for a in self.components))

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, VectorField):
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self) -> int:
        return hash(self.components)

    def __str__(self) -> str:
        terms = []
        for component, symbol in zip(self.components, ("d_t", "d_x", "d_rho", "d_omega")):
            if component != 0:
                terms.append(f"({component}){symbol}")
        return " + ".join(terms) if terms else "0"


def lie_bracket(v1: VectorField, v2: VectorField) -> VectorField:
    """
    [v1, v2] = v1(v2) - v2(v1), componentwise.

    Args:
        v1 (VectorField): Left field.
        v2 (VectorField): Right field.

    Returns:
        VectorField: The commutator. LieAlgebraError if it leaves the representation.
    """
    if not isinstance(v1, VectorField) or not isinstance(v2, VectorField):
        raise TypeError("lie_bracket expects two VectorField instances.")
    return VectorField(
        *(v1.apply(c2) - v2.apply(c1) for c1, c2 in zip(v1.components, v2.components))
    )


half = sp.Rational(1, 2)

GENERATORS: dict[str, VectorField] = {
    "T": VectorField(t_coeff=1),
    "D": VectorField(t_coeff=2 * t, x_coeff=x, rho_coeff=-half * rho),
    "C": VectorField(
        t_coeff=t**2, x_coeff=x * t, rho_coeff=-half * t * rho, omega_coeff=x**2 / 4
    ),
    "W": VectorField(omega_coeff=1),
}

# Expected commutators as coordinates in the basis (T, D, C, W).
EXPECTED_BRACKETS: dict[tuple[str, str], dict[str, int]] = {
    ("T", "D"): {"T": 2},
    ("T", "C"): {"D": 1},
    ("D", "C"): {"C": 2},
    ("W", "T"): {},
    ("W", "D"): {},
    ("W", "C"): {},
}


def combination(coordinates: dict[str, object]) -> VectorField:
    """Linear combination of generators, e.g. {"T": 2} -> 2T."""
    field = VectorField()
    for name, weight in coordinates.items():
        field = field + GENERATORS[name] * weight
    return field


def decompose(field: VectorField) -> Optional[dict[str, sp.Rational]]:
    """
    Exact coordinates of a field in the basis {T, D, C, W}.

    Returns:
        dict | None: Non-zero coordinates by generator name, or None when the
        field is outside the span.
    """
    weights = sp.symbols("w_T w_D w_C w_W")
    names = list(GENERATORS)
    equations = []
    for component_index in range(len(COMPONENTS)):
        expr = sum(
            w * GENERATORS[n].components[component_index] for w, n in zip(weights, names)
        )
        residual = sp.expand(expr - field.components[component_index])
        if residual != 0:
            equations.extend(sp.Poly(residual, *COORDINATES).coeffs())
    if not equations:
        return {}
    solutions = sp.solve(equations, weights, dict=True)
    if not solutions:
        return None
    solution = solutions[0]
    return {
        name: sp.Rational(solution.get(w, 0))
        for name, w in zip(names, weights)
        if solution.get(w, 0) != 0
    }


@dataclass(frozen=True)
class BracketCheck:
    left: str
    right: str
    computed: VectorField
    expected: VectorField
    holds: bool

    @property
    def label(self) -> str:
        return f"[{self.left},{self.right}]"


def structure_constants_report() -> list[BracketCheck]:
    """The six distinct commutators among T, D, C, W against the sl(2,R) + R table."""
    report = []
    for (left, right), coordinates in EXPECTED_BRACKETS.items():
        computed = lie_bracket(GENERATORS[left], GENERATORS[right])
        expected = combination(coordinates)
        holds = computed == expected
        logger.debug("%s%s -> %s (expected %s)", f"[{left},", f"{right}]", computed, expected)
        report.append(BracketCheck(left, right, computed, expected, holds))
    return report


def jacobi(u: VectorField, v: VectorField, w: VectorField) -> VectorField:
    """[u,[v,w]] + [v,[w,u]] + [w,[u,v]]."""
    return (
        lie_bracket(u, lie_bracket(v, w))
        + lie_bracket(v, lie_bracket(w, u))
        + lie_bracket(w, lie_bracket(u, v))
    )


def jacobi_report() -> dict[tuple[str, str, str], bool]:
    """Jacobi identity over every triple of distinct generators."""
    return {
        names: jacobi(*(GENERATORS[n] for n in names)).is_zero()
        for names in itertools.combinations(GENERATORS, 3)
    }
