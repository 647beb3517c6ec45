"""Collapse of axis-aligned polygons: determinant checks and geometric runs.

Throughout, ``n`` is half the number of vertices (the polygon is a 2n-gon),
so y-parameters are indexed modulo ``4n``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Union

from ..errors import DegeneratePolygon
from ..laurent import LaurentRing
from ..polygon import (
    SideLengths,
    TwistedPolygon,
    every_other_collinear,
    iterate,
    even_y_from_sides,
    side_lengths,
    twisted_side_lengths,
    y_params,
)
from .dodgson import fraction_determinant, sigma
from .fpoly import m0_key


def ys_from_sides(sides: SideLengths, n: int) -> List[Fraction]:
    """``y_1..y_{4n}``: odd ones are -1, even ones from the side lengths."""
    out = []
    for j in range(1, 4 * n + 1):
        out.append(Fraction(-1) if j % 2 else even_y_from_sides(sides, j // 2))
    return out


def _value(key: int, ring: LaurentRing, ys: Sequence[Fraction], shift: int) -> Fraction:
    v = Fraction(1)
    for i, e in enumerate(ring.decode(key)):
        if e:
            v *= ys[(i + shift) % len(ys)] ** e
    return v


def collapse_matrix(ys: Sequence[Fraction], n: int, twisted: bool = False) -> List[List[Fraction]]:
    """Numeric ``x_{ij} = sigma_{j-i} m_{c+i+j, j-i, 0}`` with variables shifted so
    that the specialized parity matches (shift 1 when needed).

    Closed: size ``n``, ``c = -n-1``.  Twisted: size ``n+1``, ``c = -n-2``.
    """
    ring = LaurentRing(4 * n)
    if twisted:
        size, c, shift = n + 1, -n - 2, (0 if n % 2 else 1)
    else:
        size, c, shift = n, -n - 1, (0 if n % 2 == 0 else 1)
    return [[sigma(j - i) * _value(m0_key(c + i + j, j - i, ring), ring, ys, shift)
             for j in range(1, size + 1)] for i in range(1, size + 1)]


def collapse_determinant_check(data: Union[SideLengths, TwistedPolygon, Sequence[Fraction]],
                               n: int, twisted: bool = False) -> bool:
    """Closed: the determinant vanishes.  Twisted: first and last columns are proportional."""
    if isinstance(data, TwistedPolygon):
        ys = y_params(data)
    elif isinstance(data, SideLengths):
        ys = ys_from_sides(data, n)
    else:
        ys = [Fraction(v) for v in data]
    if len(ys) != 4 * n:
        raise ValueError(f"expected {4 * n} y-values")
    X = collapse_matrix(ys, n, twisted)
    if not twisted:
        return fraction_determinant(X) == 0
    last = len(X) - 1
    return all(X[i][0] * X[i2][last] == X[i2][0] * X[i][last]
               for i in range(len(X)) for i2 in range(i + 1, len(X)))


@dataclass
class CollapseResult:
    steps: int
    odd_collinear: bool
    even_collinear: bool
    y_pattern: Optional[bool]  # None when the y-parameters of the collapsed polygon are undefined
    offset: Fraction

    @property
    def collapsed(self) -> bool:
        return self.odd_collinear and self.even_collinear

    @property
    def ok(self) -> bool:
        return self.collapsed and self.y_pattern is True


def collapse_run(A: TwistedPolygon, twisted: Optional[bool] = None) -> CollapseResult:
    """Iterate T the predicted number of times and test the collapse.

    Closed 2n-gons use ``n - 2`` steps, slope-preserving twisted ones ``n - 1``;
    the intermediate check is ``y_{j,n-2} = -1`` for ``j = n (mod 2)``
    (respectively ``y_{j,n-1} = -1`` for ``j = n - 1``).
    """
    if A.n % 2:
        raise ValueError("axis-aligned polygons have an even number of vertices")
    n = A.n // 2
    if twisted is None:
        twisted = not A.is_closed()
    steps = n - 1 if twisted else n - 2
    B = iterate(A, steps)
    target = (n - 1) % 2 if twisted else n % 2
    try:
        ys = y_params(B)
    except DegeneratePolygon:
        pattern = None
    else:
        pattern = all(ys[j - 1] == -1 for j in range(1, 4 * n + 1) if j % 2 == target)
    odd, even = every_other_collinear(B)
    return CollapseResult(steps, odd, even, pattern, B.offset)


def polygon_sides(A: TwistedPolygon) -> SideLengths:
    return side_lengths(A) if A.is_closed() else twisted_side_lengths(A)
