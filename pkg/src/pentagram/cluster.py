"""Y-seeds, mutations, the exchange matrix B0, and the M/F/Y tables.

Field values in seeds are generic: any type supporting ``+ * / **`` with ints
(``Fraction`` for numeric work, :class:`RatFunc` for symbolic work).
Vertices are numbered from 1, matching the y-parameter indices.
"""
from __future__ import annotations

import threading
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import BadRank, DenominatorVanishes, HypothesisViolated
from .laurent import LaurentRing, LMonomial, LPoly, conv_range, range_product, trop_add
from .ratfunc import RatFunc

Matrix = Tuple[Tuple[int, ...], ...]


def pos(x: int) -> int:
    return x if x > 0 else 0


def sgn(x: int) -> int:
    return (x > 0) - (x < 0)


def _matrix(rows) -> Matrix:
    return tuple(tuple(int(v) for v in r) for r in rows)


def is_skew_symmetric(B: Matrix) -> bool:
    m = len(B)
    return all(len(r) == m for r in B) and all(B[i][j] == -B[j][i] for i in range(m) for j in range(m))


def negate(B: Matrix) -> Matrix:
    return tuple(tuple(-v for v in r) for r in B)


@dataclass(frozen=True)
class YSeed:
    y: tuple
    B: Matrix

    def __post_init__(self):
        B = _matrix(self.B)
        if len(B) != len(self.y):
            raise ValueError("seed rank and matrix size differ")
        if not is_skew_symmetric(B):
            raise ValueError("exchange matrix must be skew-symmetric")
        object.__setattr__(self, "B", B)
        object.__setattr__(self, "y", tuple(self.y))

    @property
    def rank(self) -> int:
        return len(self.y)

    def __eq__(self, other):
        if not isinstance(other, YSeed):
            return NotImplemented
        return self.B == other.B and all(a == b for a, b in zip(self.y, other.y))

    __hash__ = None


def matrix_mutate(B: Matrix, k: int) -> Matrix:
    """Matrix mutation in direction ``k`` (1-based)."""
    m = len(B)
    if not 1 <= k <= m:
        raise IndexError(f"vertex {k} out of range 1..{m}")
    k -= 1
    out = []
    for i in range(m):
        row = []
        for j in range(m):
            if i == k or j == k:
                row.append(-B[i][j])
            else:
                row.append(B[i][j] + sgn(B[i][k]) * pos(B[i][k] * B[k][j]))
        out.append(tuple(row))
    return tuple(out)


def mutate(seed: YSeed, k: int) -> YSeed:
    """Seed mutation in direction ``k`` (1-based)."""
    m = seed.rank
    if not 1 <= k <= m:
        raise IndexError(f"vertex {k} out of range 1..{m}")
    yk = seed.y[k - 1]
    bk = seed.B[k - 1]
    ys = []
    for j in range(m):
        if j == k - 1:
            ys.append(1 / yk)
            continue
        b = bk[j]
        v = seed.y[j]
        if b:
            v = v * yk ** pos(b) * (1 + yk) ** (-b)
        ys.append(v)
    return YSeed(tuple(ys), matrix_mutate(seed.B, k))


@dataclass(frozen=True)
class Quiver:
    """Arc multiset on vertices ``1..size``; ``arcs[(i, j)]`` counts arcs i -> j."""

    size: int
    arcs: Tuple[Tuple[Tuple[int, int], int], ...]

    @classmethod
    def from_arcs(cls, size: int, arcs) -> "Quiver":
        c = Counter()
        for a in arcs:
            i, j = a[0], a[1]
            c[(i, j)] += a[2] if len(a) > 2 else 1
        return cls(size, tuple(sorted((k, v) for k, v in c.items() if v)))

    @classmethod
    def from_matrix(cls, B: Matrix) -> "Quiver":
        m = len(B)
        return cls.from_arcs(m, [(i + 1, j + 1, B[i][j]) for i in range(m) for j in range(m) if B[i][j] > 0])

    def to_matrix(self) -> Matrix:
        B = [[0] * self.size for _ in range(self.size)]
        for (i, j), c in self.arcs:
            B[i - 1][j - 1] += c
            B[j - 1][i - 1] -= c
        return _matrix(B)

    def arc_counter(self) -> Counter:
        return Counter(dict(self.arcs))

    def arc_list(self) -> List[Tuple[int, int]]:
        return [a for a, c in self.arcs for _ in range(c)]

    def reversed(self) -> "Quiver":
        return Quiver.from_arcs(self.size, [(j, i, c) for (i, j), c in self.arcs])


def quiver_mutate(q: Quiver, k: int) -> Quiver:
    """Quiver mutation by the three-step rule: compose paths, reverse at k, cancel 2-cycles."""
    if not 1 <= k <= q.size:
        raise IndexError(f"vertex {k} out of range 1..{q.size}")
    arcs = q.arc_counter()
    into = [(i, c) for (i, j), c in arcs.items() if j == k]
    out = [(j, c) for (i, j), c in arcs.items() if i == k]
    for i, a in into:
        for j, b in out:
            arcs[(i, j)] += a * b
    flipped = Counter()
    for (i, j), c in arcs.items():
        flipped[(j, i) if k in (i, j) else (i, j)] += c
    result = Counter()
    for (i, j), c in flipped.items():
        back = flipped.get((j, i), 0)
        if c > back:
            result[(i, j)] = c - back
    return Quiver.from_arcs(q.size, [(i, j, c) for (i, j), c in result.items()])


def b0_matrix(n: int) -> Matrix:
    """The bipartite ``2n x 2n`` exchange matrix governing the pentagram y-dynamics."""
    if n < 4:
        raise BadRank(f"B0 needs n >= 4 so that residues +-1, +-3 are distinct (got n={n})")
    m = 2 * n
    rows = []
    for i in range(1, m + 1):
        row = []
        for j in range(1, m + 1):
            d = (i - j) % m
            if d in (1, m - 1):
                row.append((-1) ** j)
            elif d in (3, m - 3):
                row.append((-1) ** (j + 1))
            else:
                row.append(0)
        rows.append(tuple(row))
    return tuple(rows)


def path2_counts(B: Matrix) -> List[List[int]]:
    """``P[i][j]`` = number of length-2 quiver paths ``i -> . -> j`` (0-based)."""
    m = len(B)
    return [[sum(pos(B[i][l]) * pos(B[l][j]) for l in range(m)) for j in range(m)] for i in range(m)]


def check_bipartite_hypotheses(B: Matrix) -> None:
    """Raise HypothesisViolated unless B is bipartite with balanced length-2 paths."""
    m = len(B)
    if m % 2:
        raise HypothesisViolated("rank must be even")
    for i in range(m):
        for j in range(m):
            if (i - j) % 2 == 0 and B[i][j]:
                raise HypothesisViolated(f"b[{i + 1}][{j + 1}] joins vertices of equal parity")
    P = path2_counts(B)
    for i in range(m):
        for j in range(m):
            if P[i][j] != P[j][i]:
                raise HypothesisViolated(f"length-2 paths {i + 1}->{j + 1} and back differ")


def mutate_sequence(seed: YSeed, ks: Sequence[int]) -> YSeed:
    for k in ks:
        seed = mutate(seed, k)
    return seed


def mu_even(seed: YSeed, order: Optional[Sequence[int]] = None) -> YSeed:
    check_bipartite_hypotheses(seed.B)
    ks = order if order is not None else range(2, seed.rank + 1, 2)
    return mutate_sequence(seed, ks)


def mu_odd(seed: YSeed, order: Optional[Sequence[int]] = None) -> YSeed:
    check_bipartite_hypotheses(seed.B)
    ks = order if order is not None else range(1, seed.rank + 1, 2)
    return mutate_sequence(seed, ks)


def bipartite_update(y: Sequence, B: Matrix, parity: int) -> tuple:
    """Closed form of the compound mutation at all vertices of the given parity (1 odd, 0 even)."""
    m = len(y)
    out = []
    for j in range(1, m + 1):
        if j % 2 == parity:
            out.append(1 / y[j - 1])
            continue
        v = y[j - 1]
        for k in range(1, m + 1):
            if k % 2 != parity:
                continue
            b = B[k - 1][j - 1]
            if b:
                v = v * y[k - 1] ** pos(b) * (1 + y[k - 1]) ** (-b)
        out.append(v)
    return tuple(out)


def _cy(y, j):
    return y[(j - 1) % len(y)]


def _alpha(y: Sequence, changed_parity: int) -> tuple:
    out = []
    for j in range(1, len(y) + 1):
        if j % 2 == changed_parity:
            out.append(_cy(y, j - 3) * _cy(y, j) * _cy(y, j + 3)
                       * (1 + _cy(y, j - 1)) * (1 + _cy(y, j + 1))
                       / ((1 + _cy(y, j - 3)) * (1 + _cy(y, j + 3))))
        else:
            out.append(1 / _cy(y, j))
    return tuple(out)


def alpha1(y: Sequence) -> tuple:
    """y-transition under T for polygons indexed by half-integers."""
    return _alpha(y, 0)


def alpha2(y: Sequence) -> tuple:
    """y-transition under T for polygons indexed by integers."""
    return _alpha(y, 1)


# ---------------------------------------------------------------------------
# M, F and Y tables


def M(j: int, k: int, n: int, ring: Optional[LaurentRing] = None) -> LMonomial:
    """``prod_{i=-k}^{k} y_{j+3i}``."""
    return range_product(ring or LaurentRing.for_polygon(n), j, -k, k)


class YkTable:
    """Memoized F-polynomials for one value of ``n``.

    Writes are serialized by a lock; a finished entry is never mutated.
    """

    def __init__(self, n: int, ring: Optional[LaurentRing] = None):
        if n < 4:
            raise BadRank(f"n={n} is unsupported (need n >= 4)")
        self.n = n
        self.ring = ring or LaurentRing.for_polygon(n)
        self._F: Dict[Tuple[int, int], LPoly] = {}
        self._lock = threading.RLock()

    def M(self, j: int, k: int) -> LMonomial:
        return range_product(self.ring, j, -k, k)

    def F(self, j: int, k: int) -> LPoly:
        if k < -1:
            raise ValueError("F is defined for k >= -1")
        if k <= 0:
            return self.ring.one()
        r = j % (2 * self.n)
        key = (r, k)
        got = self._F.get(key)
        if got is not None:
            return got
        with self._lock:
            for kk in range(1, k + 1):
                for jj in range(2 * self.n):
                    if (jj, kk) not in self._F:
                        self._F[(jj, kk)] = self._step(jj, kk)
        return self._F[key]

    def _step(self, j: int, k: int) -> LPoly:
        # F_{j,k} = (F_{j-3,k-1} F_{j+3,k-1} + M_{j,k-1} F_{j-1,k-1} F_{j+1,k-1}) / F_{j,k-2}
        F = self.F
        a = F(j - 3, k - 1) * F(j + 3, k - 1)
        b = F(j - 1, k - 1) * F(j + 1, k - 1) * self.M(j, k - 1)
        return (a + b) / F(j, k - 2)

    def computed(self) -> Dict[Tuple[int, int], LPoly]:
        return dict(self._F)


_TABLES: Dict[int, YkTable] = {}
_TABLES_LOCK = threading.Lock()


def table(n: int) -> YkTable:
    with _TABLES_LOCK:
        t = _TABLES.get(n)
        if t is None:
            t = _TABLES[n] = YkTable(n)
        return t


def F(j: int, k: int, n: int) -> LPoly:
    """F-polynomial ``F_{j,k}`` in ``y_1..y_{2n}`` via the exact-division recurrence."""
    return table(n).F(j, k)


def Y(j: int, k: int, n: int) -> RatFunc:
    """``Y_{j,k}`` in factored form."""
    t = table(n)
    ring = t.ring
    if (j + k) % 2:
        return Y(j, k - 1, n).inverse()
    num = RatFunc.of(ring, t.F(j - 1, k)) * t.F(j + 1, k)
    den = RatFunc.of(ring, t.F(j - 3, k)) * t.F(j + 3, k)
    return num / den * t.M(j, k)


def Y_recurrence(j: int, k: int, n: int, memo: Optional[dict] = None) -> RatFunc:
    """``Y_{j,k}`` built only from the Y-pattern recurrence (no F-polynomials).

    After each addition the numerator is split by exact trial division
    against the denominators already present, which keeps sizes manageable.
    """
    ring = LaurentRing.for_polygon(n)
    memo = {} if memo is None else memo

    def rec(j, k):
        key = (j % (2 * n), k)
        if key in memo:
            return memo[key]
        if (j + k) % 2:
            v = rec(j, k - 1).inverse()
        elif k == 0:
            v = RatFunc.var(ring, j)
        elif k == -1:
            v = RatFunc.var(ring, j).inverse()
        else:
            a, b = rec(j - 3, k - 1), rec(j + 3, k - 1)
            v = a * b / rec(j, k - 2)
            v = v * one_plus(rec(j - 1, k - 1)) * one_plus(rec(j + 1, k - 1))
            v = v / (one_plus(a) * one_plus(b))
            v._reduce()
        memo[key] = v
        return v

    return rec(j, k)


def one_plus(v: RatFunc) -> RatFunc:
    return v.add(1)


def trop_Y(j: int, k: int, n: int, memo: Optional[dict] = None) -> LMonomial:
    """Tropical evaluation of the subtraction-free Y-recurrence (``+`` replaced by min)."""
    ring = LaurentRing.for_polygon(n)
    one = LMonomial(ring, 0)
    memo = {} if memo is None else memo

    def rec(j, k):
        key = (j % (2 * n), k)
        if key in memo:
            return memo[key]
        if k == 0:
            v = ring.y(j)
        elif k == -1:
            v = ring.y(j, -1)
        else:
            a, b = rec(j - 3, k - 1), rec(j + 3, k - 1)
            v = a * b / rec(j, k - 2)
            v = v * trop_add(one, rec(j - 1, k - 1)) * trop_add(one, rec(j + 1, k - 1))
            v = v / (trop_add(one, a) * trop_add(one, b))
        memo[key] = v
        return v

    if (j + k) % 2:
        raise ValueError("tropical evaluation is defined for j+k even")
    return rec(j, k)


def tropicalize_check(j: int, k: int, n: int) -> bool:
    """True iff the tropical value of ``Y_{j,k}`` equals ``M_{j,k}``."""
    return trop_Y(j, k, n) == M(j, k, n)


# ---------------------------------------------------------------------------
# evaluating the closed-form iterate formulas


class FValues:
    """Values ``F_{j,k}(y)`` at one rational point, by the recurrence in Q.

    When a divisor vanishes at the point, that entry falls back to substituting
    into the expanded polynomial, so the result always equals the polynomial
    value.
    """

    def __init__(self, yvals: Sequence, method: str = "recurrence"):
        self.y = [Fraction(v) for v in yvals]
        m = len(self.y)
        if m % 2 or m < 8:
            raise BadRank("need 2n values with n >= 4")
        self.n = m // 2
        self.method = method
        self._v: Dict[Tuple[int, int], Fraction] = {}

    def yv(self, j: int) -> Fraction:
        return self.y[(j - 1) % len(self.y)]

    def M(self, j: int, a: int, b: int) -> Fraction:
        """Value of ``prod_{i=a}^{b} y_{j+3i}`` (extended product convention)."""
        out = Fraction(1)
        for i, e in conv_range(a, b):
            v = self.yv(j + 3 * i)
            if e < 0 and v == 0:
                raise DenominatorVanishes(f"y_{j + 3 * i} = 0 in a reciprocal product")
            out = out * v if e > 0 else out / v
        return out

    def __call__(self, j: int, k: int) -> Fraction:
        if k <= 0:
            return Fraction(1)
        key = (j % (2 * self.n), k)
        v = self._v.get(key)
        if v is None:
            v = self._v[key] = self._compute(j, k)
        return v

    def _compute(self, j: int, k: int) -> Fraction:
        if self.method == "expand":
            return F(j, k, self.n).substitute(self.y)
        d = self(j, k - 2)
        if d == 0:
            return F(j, k, self.n).substitute(self.y)
        a = self(j - 3, k - 1) * self(j + 3, k - 1)
        b = self(j - 1, k - 1) * self(j + 1, k - 1) * self.M(j, -(k - 1), k - 1)
        return (a + b) / d


def _ratio(num: Sequence[Fraction], den: Sequence[Fraction], what: str) -> Fraction:
    out = Fraction(1)
    for d in den:
        if d == 0:
            raise DenominatorVanishes(f"an F-polynomial in the {what} vanishes at these values")
        out /= d
    for v in num:
        out *= v
    return out


def theorem_Tk(yvals: Sequence, j: int, k: int, method: str = "recurrence",
               fv: Optional[FValues] = None) -> Fraction:
    """``y_j(T^k(A))`` from the y-parameters of an integer-indexed polygon A."""
    if k < 1:
        raise ValueError("k must be >= 1")
    fv = fv or FValues(yvals, method)
    if (j + k) % 2 == 0:
        pre = fv.M(j, -k, k)
        return pre * _ratio([fv(j - 1, k), fv(j + 1, k)], [fv(j - 3, k), fv(j + 3, k)], "y-formula")
    pre = fv.M(j, -k + 1, k - 1)
    if pre == 0:
        raise DenominatorVanishes("monomial prefactor vanishes")
    return _ratio([fv(j - 3, k - 1), fv(j + 3, k - 1)], [fv(j - 1, k - 1), fv(j + 1, k - 1)], "y-formula") / pre


def theorem_Tkx(xvals: Sequence, yvals: Sequence, j: int, k: int, method: str = "recurrence",
                fv: Optional[FValues] = None) -> Fraction:
    """``x_j(T^k(A))`` from the x-coordinates and y-parameters of an integer-indexed polygon A."""
    if k < 1:
        raise ValueError("k must be >= 1")
    fv = fv or FValues(yvals, method)
    xs = [Fraction(v) for v in xvals]
    pre = fv.M(j + 1, -k, k - 1)
    if (j + k) % 2 == 0:
        x = xs[(j - 3 * k - 1) % len(xs)]
        r = _ratio([fv(j + 2, k - 1), fv(j - 3, k)], [fv(j - 2, k - 1), fv(j + 1, k)], "x-formula")
    else:
        x = xs[(j + 3 * k - 1) % len(xs)]
        r = _ratio([fv(j - 3, k - 1), fv(j + 2, k)], [fv(j + 1, k - 1), fv(j - 2, k)], "x-formula")
    return x * pre * r


def iterate_y(yvals: Sequence, k: int) -> tuple:
    """Apply ``... alpha1 o alpha2`` (k maps) to the y-parameters of an integer-indexed polygon."""
    y = tuple(yvals)
    for step in range(k):
        y = alpha2(y) if step % 2 == 0 else alpha1(y)
    return y
