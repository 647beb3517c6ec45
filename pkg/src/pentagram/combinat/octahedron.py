"""The octahedron recurrence and its Robbins-Rumsey ASM solution."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict, Optional, Tuple

from ..errors import DivisionByZeroValue
from ..laurent import LaurentRing, LPoly
from .fpoly import compatible_pairs, m

Key = Tuple[int, int, int]


def _is_zero(v) -> bool:
    if isinstance(v, LPoly):
        return v.is_zero()
    return v == 0


@dataclass
class OctaGrid:
    """Values ``f_{i,j,k}``; layers ``k = -1, 0`` are the initial data."""

    values: Dict[Key, object] = field(default_factory=dict)

    def __getitem__(self, key: Key):
        return self.values[key]

    def __setitem__(self, key: Key, v):
        self.values[key] = v

    def __contains__(self, key):
        return key in self.values

    @classmethod
    def from_function(cls, f: Callable[[int, int, int], object], k: int) -> "OctaGrid":
        """Initial layers on the dependency region of ``f_{0,0,k}``."""
        g = cls()
        for i in range(-k, k + 1):
            for j in range(-k, k + 1):
                d = abs(i) + abs(j)
                if d <= k and (i + j - k) % 2 == 0:
                    g[(i, j, 0)] = f(i, j, 0)
                if d <= k - 1 and (i + j - 1 - k) % 2 == 0:
                    g[(i, j, -1)] = f(i, j, -1)
        return g

    def identity_holds(self, i: int, j: int, k: int) -> Optional[bool]:
        need = [(i, j, k - 1), (i, j, k + 1), (i - 1, j, k), (i + 1, j, k), (i, j - 1, k), (i, j + 1, k)]
        if not all(x in self.values for x in need):
            return None
        v = self.values
        return v[(i, j, k - 1)] * v[(i, j, k + 1)] == v[(i - 1, j, k)] * v[(i + 1, j, k)] + v[(i, j - 1, k)] * v[(i, j + 1, k)]


def octahedron_value(grid: OctaGrid, k: int):
    """``f_{0,0,k}`` by the recurrence, materializing only its dependency pyramid."""
    if k < 1:
        raise ValueError("target layer must be >= 1")
    for level in range(1, k + 1):
        r = k - level
        for i in range(-r, r + 1):
            for j in range(-r, r + 1):
                if abs(i) + abs(j) > r or (i + j - r) % 2:
                    continue
                key = (i, j, level)
                if key in grid:
                    continue
                d = grid[(i, j, level - 2)]
                if _is_zero(d):
                    raise DivisionByZeroValue(f"f{(i, j, level - 2)} vanishes")
                num = grid[(i - 1, j, level - 1)] * grid[(i + 1, j, level - 1)] + grid[(i, j - 1, level - 1)] * grid[(i, j + 1, level - 1)]
                grid[key] = num / d
    return grid[(0, 0, k)]


def robbins_rumsey(grid: OctaGrid, k: int):
    """``sum (X_{k+1})^A (Y_k)^{-B}`` over compatible pairs, from the initial layers."""
    X = [[grid[(-k + a + b, b - a, 0)] for b in range(k + 1)] for a in range(k + 1)]
    Y = [[grid[(-k + 1 + a + b, b - a, -1)] for b in range(k)] for a in range(k)]
    total = None
    for A, B in compatible_pairs(k):
        term = _power_product(X, A.entries)
        inv = _power_product(Y, B.entries)
        term = term / inv
        total = term if total is None else total + term
    return total


def _power_product(M, E):
    out = None
    for row_m, row_e in zip(M, E):
        for v, e in zip(row_m, row_e):
            if e == 1:
                out = v if out is None else out * v
    den = None
    for row_m, row_e in zip(M, E):
        for v, e in zip(row_m, row_e):
            if e == -1:
                den = v if den is None else den * v
    if out is None:
        out = 1
    return out if den is None else out / den


def mf_grid(k: int, n: int, F) -> OctaGrid:
    """Initial data ``f_{i,j,k} = m_{i,j,k} F_{3i+j,k}`` for ``k = -1, 0`` (where F = 1)."""
    ring = LaurentRing.for_polygon(n)
    return OctaGrid.from_function(lambda i, j, kk: m(i, j, kk, n, ring).to_poly() * F(3 * i + j, kk, n), k)
