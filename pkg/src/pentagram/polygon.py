"""Twisted polygons, the pentagram map, and their cross-ratio coordinates.

Vertex labels live in Z (``offset = 0``) or in 1/2 + Z (``offset = 1/2``).
Internally every label ``i`` is handled through its doubled value ``d = 2i``,
so half-integer labels are plain odd integers.  The stored window is
``A_1 .. A_n`` for integer labels and ``A_{1/2} .. A_{n-1/2}`` otherwise; all
other vertices are produced on demand through the monodromy.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import List, Optional, Sequence, Tuple

from .errors import (
    DegenerateDiagonals,
    DegeneratePolygon,
    DegenerateXCoord,
    DegenerateYParam,
    GenerationFailed,
    GeometryError,
    IndexParity,
    NotAxisAligned,
    NotClosed,
    NotClosedSides,
)
from .exact import (
    HPoint,
    ProjMap,
    Scalar,
    apply,
    collinear,
    cross_ratio_lines,
    cross_ratio_points,
    det3,
    join,
    meet,
    primitive,
    rat,
)

HALF = Fraction(1, 2)


def cyc(values: Sequence, j: int):
    """``values[j]`` for a 1-based, periodic sequence."""
    return values[(j - 1) % len(values)]


@dataclass(frozen=True, eq=False)
class TwistedPolygon:
    vertices: Tuple[HPoint, ...]
    monodromy: ProjMap = field(default_factory=ProjMap.identity)
    offset: Fraction = Fraction(0)

    def __post_init__(self):
        verts = tuple(v if isinstance(v, HPoint) else HPoint(tuple(v)) for v in self.vertices)
        object.__setattr__(self, "vertices", verts)
        off = rat(self.offset) if not isinstance(self.offset, Fraction) else self.offset
        if off not in (0, HALF):
            raise ValueError("offset must be 0 or 1/2")
        object.__setattr__(self, "offset", off)
        if len(verts) < 4:
            raise ValueError("a twisted polygon needs n >= 4")
        object.__setattr__(self, "_cache", {})

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def base(self) -> int:
        """Doubled label of the first stored vertex."""
        return 2 if self.offset == 0 else 1

    def is_closed(self) -> bool:
        return self.monodromy.is_identity()

    def labels(self) -> List[Fraction]:
        return [Fraction(self.base + 2 * i, 2) for i in range(self.n)]

    @cached_property
    def _inverse(self) -> ProjMap:
        return self.monodromy.inverse()

    def vertex2(self, d: int) -> HPoint:
        """Vertex with doubled label ``d``."""
        if (d - self.base) % 2:
            raise IndexParity(f"label {Fraction(d, 2)} has the wrong parity for offset {self.offset}")
        cache = self._cache
        if d in cache:
            return cache[d]
        q, r = divmod(d - self.base, 2 * self.n)
        p = self.vertices[r // 2]
        if q and not self.is_closed():
            phi = self.monodromy if q > 0 else self._inverse
            for _ in range(abs(q)):
                p = apply(phi, p)
            p = HPoint(primitive(p.coords))
        cache[d] = p
        return p

    def vertex(self, i) -> HPoint:
        """Vertex ``A_i`` for an integer or half-integer label ``i``."""
        d = Fraction(i) * 2
        if d.denominator != 1:
            raise IndexParity(f"label {i} is not in Z or 1/2 + Z")
        return self.vertex2(int(d))

    def __repr__(self):
        return f"TwistedPolygon(n={self.n}, offset={self.offset}, closed={self.is_closed()})"


def closed_polygon(points: Sequence[Tuple[Scalar, Scalar]], offset=0) -> TwistedPolygon:
    """Closed polygon from affine coordinates ``(x, y)``."""
    return TwistedPolygon(tuple(HPoint.affine(x, y) for x, y in points), ProjMap.identity(), offset)


def transform(A: TwistedPolygon, psi: ProjMap) -> TwistedPolygon:
    """The projectively equivalent polygon ``psi(A)``."""
    verts = tuple(HPoint(primitive(apply(psi, v).coords)) for v in A.vertices)
    return TwistedPolygon(verts, psi @ A.monodromy @ psi.inverse(), A.offset)


def relabel(A: TwistedPolygon, shift: int) -> TwistedPolygon:
    """Polygon with ``A'_i = A_{i + shift}``."""
    verts = tuple(A.vertex2(A.base + 2 * (i + shift)) for i in range(A.n))
    return TwistedPolygon(verts, A.monodromy, A.offset)


def pentagram(A: TwistedPolygon) -> TwistedPolygon:
    """``B_i = (A_{i-3/2} A_{i+1/2}) meet (A_{i-1/2} A_{i+3/2})`` for i in the other label class."""
    base = 3 - A.base
    out = []
    for i in range(A.n):
        d = base + 2 * i
        try:
            l1 = join(A.vertex2(d - 3), A.vertex2(d + 1))
            l2 = join(A.vertex2(d - 1), A.vertex2(d + 3))
            out.append(meet(l1, l2))
        except GeometryError as exc:
            raise DegenerateDiagonals(f"diagonals for B_{Fraction(d, 2)} are degenerate", Fraction(d, 2)) from exc
    return TwistedPolygon(tuple(out), A.monodromy, HALF - A.offset)


def iterate(A: TwistedPolygon, k: int) -> TwistedPolygon:
    for _ in range(k):
        A = pentagram(A)
    return A


def _is_vertex_type(A: TwistedPolygon, j: int) -> bool:
    # j/2 is a label of A
    return (j - A.base) % 2 == 0


def y_param(A: TwistedPolygon, j: int) -> Fraction:
    v = A.vertex2
    try:
        if _is_vertex_type(A, j):
            c = v(j)
            chi = cross_ratio_lines(join(c, v(j - 4)), join(c, v(j - 2)), join(c, v(j + 2)), join(c, v(j + 4)))
            if chi == 0:
                raise DegenerateYParam(f"y_{j} is infinite", j)
            return -1 / chi
        d = j - 1
        L = join(v(d), v(d + 2))
        p = meet(join(v(d - 4), v(d - 2)), L)
        q = meet(join(v(d + 4), v(d + 6)), L)
        return -cross_ratio_points(p, v(d), v(d + 2), q)
    except DegenerateYParam:
        raise
    except GeometryError as exc:
        raise DegenerateYParam(f"y_{j} is undefined: {exc}", j) from exc


def y_params(A: TwistedPolygon) -> List[Fraction]:
    """``[y_1, ..., y_2n]``; periodic in j with period 2n."""
    return [y_param(A, j) for j in range(1, 2 * A.n + 1)]


def x_coord(A: TwistedPolygon, j: int) -> Fraction:
    v = A.vertex2
    try:
        if _is_vertex_type(A, j):
            k = j
            base = join(v(k - 4), v(k - 2))
            return cross_ratio_points(
                v(k - 4), v(k - 2),
                meet(join(v(k), v(k + 2)), base),
                meet(join(v(k + 2), v(k + 4)), base),
            )
        k = j - 1
        base = join(v(k + 4), v(k + 2))
        return cross_ratio_points(
            v(k + 4), v(k + 2),
            meet(join(v(k), v(k - 2)), base),
            meet(join(v(k - 2), v(k - 4)), base),
        )
    except GeometryError as exc:
        raise DegenerateXCoord(f"x_{j} is undefined: {exc}", j) from exc


def x_coords(A: TwistedPolygon) -> List[Fraction]:
    """Schwartz's corner invariants ``[x_1, ..., x_2n]``."""
    return [x_coord(A, j) for j in range(1, 2 * A.n + 1)]


def invariant_products(A: TwistedPolygon, xs: Optional[Sequence[Fraction]] = None) -> Tuple[Fraction, Fraction]:
    """``(E, O)``: products of the even- and odd-indexed x-coordinates."""
    xs = x_coords(A) if xs is None else xs
    E = O = Fraction(1)
    for j, x in enumerate(xs, start=1):
        if j % 2:
            O *= x
        else:
            E *= x
    return E, O


def x_transition(xs: Sequence[Fraction], offset) -> List[Fraction]:
    """x-coordinates of T(A) from those of A (Schwartz's single-step formulas)."""
    x = lambda j: cyc(xs, j)

    def left(j):
        return x(j - 1) * (1 - x(j - 3) * x(j - 2)) / (1 - x(j + 1) * x(j + 2))

    def right(j):
        return x(j + 1) * (1 - x(j + 3) * x(j + 2)) / (1 - x(j - 1) * x(j - 2))

    half = Fraction(offset) != 0
    out = []
    for j in range(1, len(xs) + 1):
        even = j % 2 == 0
        out.append(left(j) if even == half else right(j))
    return [Fraction(v) for v in out]


def consecutive_collinear(A: TwistedPolygon) -> Optional[int]:
    """Doubled label of the middle vertex of a collinear consecutive triple, if any."""
    for i in range(A.n):
        d = A.base + 2 * i
        if det3(A.vertex2(d - 2).coords, A.vertex2(d).coords, A.vertex2(d + 2).coords) == 0:
            return d
    return None


def is_generic(A: TwistedPolygon, k: int) -> bool:
    """Can T be applied k times with every coordinate defined at every stage?"""
    try:
        for step in range(k + 1):
            if consecutive_collinear(A) is not None:
                return False
            y_params(A)
            x_coords(A)
            if step < k:
                A = pentagram(A)
    except DegeneratePolygon:
        return False
    return True


def every_other_collinear(A: TwistedPolygon, periods: int = 2) -> Tuple[bool, bool]:
    """Collinearity of the two every-other-vertex classes over a window of labels."""
    span = periods * A.n + 2
    first = [A.vertex2(A.base + 4 * i) for i in range(span // 2 + 1)]
    second = [A.vertex2(A.base + 2 + 4 * i) for i in range(span // 2 + 1)]
    return collinear(first), collinear(second)


GENERATION_RETRIES = 100


def random_polygon(
    n: int,
    seed: int,
    closed: bool = False,
    coord_bound: int = 10,
    offset=0,
    k: int = 1,
) -> TwistedPolygon:
    """Random integer-coordinate polygon that survives ``k`` pentagram steps.

    The generator is ``random.Random(seed)`` (Mersenne Twister).  Per attempt it
    draws ``n`` vertices ``(x, y)`` with ``randint(-b, b)`` each, then, when not
    closed, nine monodromy entries in the same range (redrawn while singular).
    """
    if n < 4:
        raise ValueError("n must be at least 4")
    rng = random.Random(seed)
    b = coord_bound
    for _ in range(GENERATION_RETRIES):
        verts = tuple(HPoint((rng.randint(-b, b), rng.randint(-b, b), 1)) for _ in range(n))
        if closed:
            phi = ProjMap.identity()
        else:
            while True:
                m = tuple(tuple(rng.randint(-b, b) for _ in range(3)) for _ in range(3))
                if det3(*m) != 0:
                    break
            phi = ProjMap(m)
        A = TwistedPolygon(verts, phi, offset)
        if is_generic(A, k):
            return A
    raise GenerationFailed(f"no generic polygon found after {GENERATION_RETRIES} attempts")


# --- axis-aligned polygons --------------------------------------------------


@dataclass(frozen=True)
class SideLengths:
    """Signed side lengths ``s_1, s_3, ..., s_{2N-1}`` of an axis-aligned N-gon.

    ``s_{2j+1}`` belongs to the edge ``A_j A_{j+1}``; for a twisted polygon the
    sides scale by ``scale`` per period: ``s_{j + 2N} = scale * s_j``.
    """

    s: Tuple[Fraction, ...]
    scale: Fraction = Fraction(1)

    def __getitem__(self, j: int) -> Fraction:
        if j % 2 == 0:
            raise IndexError("side lengths carry odd indices")
        q, r = divmod((j - 1) // 2, len(self.s))
        return self.s[r] * self.scale ** q

    def families(self) -> Tuple[Tuple[Fraction, ...], Tuple[Fraction, ...]]:
        return self.s[0::2], self.s[1::2]


def side_lengths(A: TwistedPolygon) -> SideLengths:
    if A.offset != 0:
        raise NotAxisAligned("side lengths are defined for integer-labelled polygons")
    if not A.is_closed():
        raise NotClosed("side_lengths expects a closed polygon; use twisted_side_lengths")
    return _sides(A, Fraction(1))


def twisted_side_lengths(A: TwistedPolygon) -> SideLengths:
    m = A.monodromy.matrix
    a = Fraction(m[0][0]) / m[2][2]
    ok = m[2][0] == m[2][1] == 0 and m[0][1] == m[1][0] == 0 and m[1][1] == m[0][0]
    if not ok:
        raise NotAxisAligned("monodromy does not fix every point at infinity")
    return _sides(A, a)


def _sides(A: TwistedPolygon, scale: Fraction) -> SideLengths:
    out = []
    kinds = []
    for i in range(A.n):
        d = A.base + 2 * (i - 1)  # edge A_{i} -> A_{i+1}, starting at A_0
        try:
            x0, y0 = A.vertex2(d).xy()
            x1, y1 = A.vertex2(d + 2).xy()
        except GeometryError as exc:
            raise NotAxisAligned("vertex at infinity") from exc
        if y0 == y1 and x0 != x1:
            out.append(x1 - x0)
            kinds.append("h")
        elif x0 == x1 and y0 != y1:
            out.append(y1 - y0)
            kinds.append("v")
        else:
            raise NotAxisAligned(f"edge {i} is neither horizontal nor vertical")
    if any(kinds[i] == kinds[(i + 1) % len(kinds)] for i in range(len(kinds))):
        raise NotAxisAligned("edge directions do not alternate")
    sides = SideLengths(tuple(out), scale)
    if scale == 1:
        h, v = sides.families()
        if sum(h) != 0 or sum(v) != 0:
            raise NotClosed("side families do not sum to zero")
    return sides


def make_axis_aligned(
    horiz: Sequence[Scalar],
    vert: Sequence[Scalar],
    monodromy_scale: Optional[Scalar] = None,
    base: Tuple[Scalar, Scalar] = (0, 0),
) -> TwistedPolygon:
    """Axis-aligned 2n-gon: ``A_1 = base``, then steps ``h_1, v_1, h_2, v_2, ...``.

    Closed when ``monodromy_scale`` is None (both families must sum to 0).
    Otherwise the monodromy is ``(x, y) -> (a x + b, a y + d)`` with ``a`` the
    scale and the translation chosen so that one traversal ends at ``phi(A_1)``.
    """
    h = [rat(x) for x in horiz]
    v = [rat(x) for x in vert]
    if len(h) != len(v):
        raise ValueError("need as many horizontal as vertical sides")
    if any(x == 0 for x in h + v):
        raise NotAxisAligned("zero-length side")
    x, y = rat(base[0]), rat(base[1])
    pts = []
    for dx, dy in zip(h, v):
        pts.append((x, y))
        x += dx
        pts.append((x, y))
        y += dy
    if monodromy_scale is None:
        if sum(h) != 0 or sum(v) != 0:
            raise NotClosedSides("closed polygon needs both side families to sum to zero")
        phi = ProjMap.identity()
    else:
        a = rat(monodromy_scale)
        if a == 0:
            raise ValueError("monodromy scale must be nonzero")
        x0, y0 = rat(base[0]), rat(base[1])
        phi = ProjMap(((a, 0, x0 + sum(h) - a * x0), (0, a, y0 + sum(v) - a * y0), (0, 0, 1)))
    return TwistedPolygon(tuple(HPoint.affine(px, py) for px, py in pts), phi, 0)


def even_y_from_sides(sides: SideLengths, j: int) -> Fraction:
    """``y_{2j} = -s_{2j-1} s_{2j+1} / (s_{2j-3} s_{2j+3})`` for axis-aligned polygons."""
    s = sides
    return -(s[2 * j - 1] * s[2 * j + 1]) / (s[2 * j - 3] * s[2 * j + 3])


def random_axis_aligned(n: int, rng: random.Random, bound: int = 6, scale=None) -> TwistedPolygon:
    """Random axis-aligned 2n-gon with nonzero integer sides; closed iff ``scale`` is None."""

    def family():
        while True:
            xs = [rng.choice([i for i in range(-bound, bound + 1) if i]) for _ in range(n - 1)]
            if scale is None:
                last = -sum(xs)
                if last == 0:
                    continue
                xs.append(last)
            else:
                xs.append(rng.choice([i for i in range(-bound, bound + 1) if i]))
            return xs

    return make_axis_aligned(family(), family(), scale, (rng.randint(-bound, bound), rng.randint(-bound, bound)))
