"""Sign-twisted monomial matrices whose determinants give specialized F-polynomials."""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from ..laurent import LaurentRing, LPoly
from .fpoly import m0_key


def sigma(j: int) -> int:
    """+1 for j = 0, 3 (mod 4) and -1 for j = 1, 2 (mod 4)."""
    return 1 if j % 4 in (0, 3) else -1


def specialized_residues(j: int, k: int, ring: LaurentRing) -> List[int]:
    """Residues ``i`` with ``i = j + k (mod 2)``; these are set to -1."""
    return [r for r in range(1, ring.nvars + 1) if (r - j - k) % 2 == 0]


def specialize_key(key: int, ring: LaurentRing, residues: Sequence[int]):
    """Set the listed variables to -1 in a monomial: returns ``(sign, key)``."""
    exps = ring.decode(key)
    sign = 1
    for r in residues:
        i = ring.index(r)
        if exps[i] % 2:
            sign = -sign
        exps[i] = 0
    return sign, ring.encode(exps)


def dodgson_matrix(j: int, k: int, n: int, ring: Optional[LaurentRing] = None,
                   specialize: bool = True) -> List[List[LPoly]]:
    """``(k+1)x(k+1)`` matrix of ``sigma_{b-a} m_{-k+a+b, b-a, 0}``, variables shifted by ``j``."""
    ring = ring or LaurentRing.for_polygon(n)
    res = specialized_residues(j, k, ring) if specialize else []
    rows = []
    for a in range(k + 1):
        row = []
        for b in range(k + 1):
            key = LPoly(ring, {m0_key(-k + a + b, b - a, ring): 1}).shift(j).leading_key()
            sign, key = specialize_key(key, ring, res)
            row.append(LPoly(ring, {key: sigma(b - a) * sign}))
        rows.append(row)
    return rows


def determinant(M: Sequence[Sequence]):
    """Laplace expansion along the first row with memoized minors (division free)."""
    size = len(M)
    memo: Dict[tuple, object] = {}

    def minor(row: int, cols: tuple):
        if row == size:
            return 1
        got = memo.get((row, cols))
        if got is not None:
            return got
        total = None
        sign = 1
        for idx, c in enumerate(cols):
            entry = M[row][c]
            rest = minor(row + 1, cols[:idx] + cols[idx + 1:])
            term = entry * rest if sign > 0 else -(entry * rest)
            total = term if total is None else total + term
            sign = -sign
        memo[(row, cols)] = total
        return total

    return minor(0, tuple(range(size)))


def fraction_determinant(M: Sequence[Sequence[Fraction]]) -> Fraction:
    """Exact Gaussian elimination over Q."""
    a = [[Fraction(v) for v in row] for row in M]
    size = len(a)
    det = Fraction(1)
    for c in range(size):
        p = next((r for r in range(c, size) if a[r][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        det *= a[c][c]
        inv = 1 / a[c][c]
        for r in range(c + 1, size):
            f = a[r][c] * inv
            if f:
                for cc in range(c, size):
                    a[r][cc] -= f * a[c][cc]
    return det


def dodgson_F(j: int, k: int, n: int, ring: Optional[LaurentRing] = None) -> LPoly:
    """Determinant form of ``F_{j,k}`` under ``y_i = -1`` for ``i = j + k (mod 2)``."""
    return determinant(dodgson_matrix(j, k, n, ring))


def specialized_F(F: LPoly, j: int, k: int) -> LPoly:
    ring = F.ring
    return F.specialize({r: -1 for r in specialized_residues(j, k, ring)})
