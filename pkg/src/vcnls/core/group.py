# src/vcnls/core/group.py

import math
from dataclasses import dataclass

import numpy as np

DETERMINANT_TOLERANCE = 1e-12


@dataclass(frozen=True)
class GroupElement:
    """
    An element of SL(2,R) x U(1): the matrix [[a, b], [c, d]] with unit
    determinant together with a gauge phase theta (radians).

    The matrix part acts on solutions through the Moebius time map
    t -> (c + d t) / (a + b t); theta multiplies the field by exp(i theta).
    """

    a: float
    b: float
    c: float
    d: float
    theta: float = 0.0

    def __post_init__(self):
        for name in ("a", "b", "c", "d", "theta"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise ValueError(f"GroupElement entry {name} must be finite, got {value!r}.")
            object.__setattr__(self, name, value)
        if abs(self.determinant - 1.0) > DETERMINANT_TOLERANCE:
            raise ValueError(
                f"GroupElement must have unit determinant; ad - bc = {self.determinant!r}."
            )

    @classmethod
    def identity(cls) -> "GroupElement":
        return cls(1.0, 0.0, 0.0, 1.0, 0.0)

    @property
    def determinant(self) -> float:
        return self.a * self.d - self.b * self.c

    @property
    def matrix(self) -> np.ndarray:
        return np.array([[self.a, self.b], [self.c, self.d]])

    def is_identity(self, tol: float = DETERMINANT_TOLERANCE) -> bool:
        return max_entry_difference(self, GroupElement.identity()) <= tol

    def scale_at(self, t: float) -> float:
        """a + b t, the factor whose inverse square root multiplies the field."""
        return self.a + self.b * t

    def mapped_time(self, t: float) -> float:
        """(c + d t) / (a + b t)."""
        return (self.c + self.d * t) / self.scale_at(t)


def group_compose(g1: GroupElement, g2: GroupElement) -> GroupElement:
    """
    Matrix product g1 . g2 with gauge phases added.

    Args:
        g1 (GroupElement): Left factor.
        g2 (GroupElement): Right factor.

    Returns:
        GroupElement: The product. Unit determinant holds to rounding.
    """
    if not isinstance(g1, GroupElement) or not isinstance(g2, GroupElement):
        raise ValueError("group_compose expects two GroupElement instances.")
    return GroupElement(
        a=g1.a * g2.a + g1.b * g2.c,
        b=g1.a * g2.b + g1.b * g2.d,
        c=g1.c * g2.a + g1.d * g2.c,
        d=g1.c * g2.b + g1.d * g2.d,
        theta=g1.theta + g2.theta,
    )


def group_inverse(g: GroupElement) -> GroupElement:
    """Adjugate (d, -b, -c, a) with the gauge phase negated."""
    if not isinstance(g, GroupElement):
        raise ValueError("group_inverse expects a GroupElement.")
    return GroupElement(a=g.d, b=-g.b, c=-g.c, d=g.a, theta=-g.theta)


def max_entry_difference(g1: GroupElement, g2: GroupElement) -> float:
    """Largest absolute difference over (a, b, c, d, theta)."""
    return max(
        abs(g1.a - g2.a),
        abs(g1.b - g2.b),
        abs(g1.c - g2.c),
        abs(g1.d - g2.d),
        abs(g1.theta - g2.theta),
    )


def one_parameter_subgroup(name: str, s: float) -> GroupElement:
    """
    Group element reached by flowing the generator `name` for parameter s.

    Conventions: T -> (1, 0, s, 1), D -> (e^-s, 0, 0, e^s), C -> (1, -s, 0, 1),
    W -> identity matrix with theta = -s. With these, the s-derivative at s = 0
    of the transformed field is minus the generator's characteristic.

    Args:
        name (str): One of "T", "D", "C", "W".
        s (float): Group parameter.

    Returns:
        GroupElement: The subgroup element.
    """
    s = float(s)
    if name == "T":
        return GroupElement(1.0, 0.0, s, 1.0)
    if name == "D":
        return GroupElement(math.exp(-s), 0.0, 0.0, math.exp(s))
    if name == "C":
        return GroupElement(1.0, -s, 0.0, 1.0)
    if name == "W":
        return GroupElement(1.0, 0.0, 0.0, 1.0, -s)
    raise ValueError(f"Unknown generator {name!r}; expected one of T, D, C, W.")
