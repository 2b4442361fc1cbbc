# src/vcnls/core/grid.py

import math
from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True)
class SpatialGrid:
    """
    Uniform grid on the positive interval [x_min, x_max] with n nodes.

    Node i sits at x_min + i * spacing; the last node is that expression for
    i = n - 1, which may differ from x_max by rounding.
    """

    x_min: float
    x_max: float
    n: int

    def __post_init__(self):
        if not isinstance(self.n, (int, np.integer)) or isinstance(self.n, bool):
            raise ValueError(f"n must be an integer, got {self.n!r}.")
        if self.n < 3:
            raise ValueError(f"SpatialGrid needs at least 3 nodes, got n = {self.n}.")
        x_min, x_max = float(self.x_min), float(self.x_max)
        if not (math.isfinite(x_min) and math.isfinite(x_max)):
            raise ValueError("Grid bounds must be finite.")
        if not 0.0 < x_min < x_max:
            raise ValueError(f"Grid requires 0 < x_min < x_max, got [{x_min}, {x_max}].")
        object.__setattr__(self, "x_min", x_min)
        object.__setattr__(self, "x_max", x_max)
        object.__setattr__(self, "n", int(self.n))

    @classmethod
    def from_spacing(cls, x_min: float, x_max: float, spacing: float) -> "SpatialGrid":
        """Grid whose spacing is as close as possible to the requested one."""
        if spacing <= 0:
            raise ValueError(f"spacing must be positive, got {spacing}.")
        n = int(round((x_max - x_min) / spacing)) + 1
        return cls(x_min, x_max, n)

    @property
    def spacing(self) -> float:
        return (self.x_max - self.x_min) / (self.n - 1)

    @property
    def nodes(self) -> np.ndarray:
        return self.x_min + np.arange(self.n) * self.spacing

    @property
    def interior(self) -> np.ndarray:
        return self.nodes[1:-1]


@dataclass(frozen=True)
class ComplexField:
    """
    Sampled values of psi on a SpatialGrid at one time.

    The values array is copied and made read-only on construction.
    """

    grid: SpatialGrid
    values: np.ndarray = field(repr=False)
    time: float = 0.0

    def __post_init__(self):
        if not isinstance(self.grid, SpatialGrid):
            raise ValueError("ComplexField.grid must be a SpatialGrid.")
        values = np.array(self.values, dtype=complex)
        if values.shape != (self.grid.n,):
            raise ValueError(
                f"ComplexField expects {self.grid.n} values, got shape {values.shape}."
            )
        if not np.all(np.isfinite(values)):
            raise ValueError("ComplexField values must all be finite.")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "time", float(self.time))

    @property
    def modulus(self) -> np.ndarray:
        """rho = |psi|."""
        return np.abs(self.values)

    @property
    def phase(self) -> np.ndarray:
        """omega = arg(psi)."""
        return np.angle(self.values)
