"""Exact projective-plane primitives over the rationals.

Scalars are :class:`fractions.Fraction` (aliased ``Rat``); plain ``int`` is
accepted anywhere a scalar is expected.  Points and lines are homogeneous
triples compared up to a nonzero scale factor.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import combinations
from math import gcd, lcm
from typing import Iterable, Sequence, Tuple, Union

from .errors import (
    DegenerateCrossRatio,
    EqualLines,
    EqualPoints,
    GeometryError,
    NotCollinear,
    NotConcurrent,
    ParseError,
)

Rat = Fraction
Scalar = Union[int, Fraction]
Triple = Tuple[Scalar, Scalar, Scalar]


def rat(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a canonical Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        try:
            num, _, den = text.partition("/")
            p = int(num)
            if not den:
                return Fraction(p)
            d = int(den)
        except ValueError as exc:
            raise ParseError(f"malformed rational {value!r}") from exc
        if d == 0:
            raise ParseError(f"zero denominator in rational {value!r}")
        return Fraction(p, d)
    raise TypeError(f"cannot interpret {value!r} as a rational")


def rat_str(value: Scalar) -> str:
    """Canonical ``"p/q"`` form (``"p"`` when the denominator is 1)."""
    return str(Fraction(value))


def primitive(v: Sequence[Scalar]) -> Tuple[int, ...]:
    """Scale a nonzero rational vector by a positive rational to coprime integers."""
    dens = [x.denominator for x in v if isinstance(x, Fraction)]
    m = lcm(*dens) if dens else 1
    ints = [int(x * m) for x in v]
    g = reduce(gcd, ints)
    if g == 0:
        raise GeometryError("zero vector has no projective class")
    return tuple(x // g for x in ints)


def _canonical(v: Sequence[Scalar]) -> Tuple[int, ...]:
    p = primitive(v)
    for x in p:
        if x:
            return p if x > 0 else tuple(-y for y in p)
    return p


def cross(u: Sequence[Scalar], v: Sequence[Scalar]) -> Tuple[Scalar, Scalar, Scalar]:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def dot(u: Sequence[Scalar], v: Sequence[Scalar]) -> Scalar:
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def det3(u, v, w) -> Scalar:
    return dot(u, cross(v, w))


def proportional(u: Sequence[Scalar], v: Sequence[Scalar]) -> bool:
    """True iff all 2x2 minors of the pair vanish."""
    return (
        u[0] * v[1] == u[1] * v[0]
        and u[0] * v[2] == u[2] * v[0]
        and u[1] * v[2] == u[2] * v[1]
    )


class _Homogeneous:
    __slots__ = ()
    coords: Triple

    def __post_init__(self):
        c = tuple(rat(x) if isinstance(x, str) else x for x in self.coords)
        if len(c) != 3:
            raise GeometryError("homogeneous coordinates need exactly three entries")
        if not any(c):
            raise GeometryError("homogeneous triple must not be zero")
        object.__setattr__(self, "coords", c)

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return proportional(self.coords, other.coords)

    def __hash__(self):
        return hash((type(self).__name__, _canonical(self.coords)))

    def __getitem__(self, i):
        return self.coords[i]

    def __iter__(self):
        return iter(self.coords)

    def primitive(self):
        return type(self)(primitive(self.coords))


@dataclass(frozen=True, eq=False)
class HPoint(_Homogeneous):
    """A point ``(x:y:z)`` of the projective plane."""

    coords: Triple

    @classmethod
    def affine(cls, x: Scalar, y: Scalar) -> "HPoint":
        return cls((rat(x), rat(y), 1))

    def is_infinite(self) -> bool:
        return self.coords[2] == 0

    def xy(self) -> Tuple[Fraction, Fraction]:
        """Affine coordinates; raises for points at infinity."""
        x, y, z = self.coords
        if z == 0:
            raise GeometryError("point at infinity has no affine coordinates")
        return Fraction(x) / z, Fraction(y) / z

    def __repr__(self):
        return "HPoint(%s)" % ":".join(rat_str(c) for c in self.coords)


@dataclass(frozen=True, eq=False)
class HLine(_Homogeneous):
    """A line ``ax + by + cz = 0`` stored as ``(a:b:c)``."""

    coords: Triple

    def contains(self, p: HPoint) -> bool:
        return dot(self.coords, p.coords) == 0

    def __repr__(self):
        return "HLine(%s)" % ":".join(rat_str(c) for c in self.coords)


def _mat_mul(a, b):
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3))
        for i in range(3)
    )


def _det_matrix(m) -> Scalar:
    return det3(m[0], m[1], m[2])


def _adjugate(m):
    # adj(M) = transpose of the cofactor matrix; rows of cofactors are cross products of columns
    c0 = cross(m[1], m[2])
    c1 = cross(m[2], m[0])
    c2 = cross(m[0], m[1])
    return tuple(tuple(row[i] for row in (c0, c1, c2)) for i in range(3))


@dataclass(frozen=True, eq=False)
class ProjMap:
    """Projective transformation acting on points by ``p -> M p``."""

    matrix: Tuple[Triple, Triple, Triple]

    def __post_init__(self):
        m = tuple(tuple(rat(x) if isinstance(x, str) else x for x in row) for row in self.matrix)
        if len(m) != 3 or any(len(r) != 3 for r in m):
            raise GeometryError("projective map needs a 3x3 matrix")
        if _det_matrix(m) == 0:
            raise GeometryError("projective map must have nonzero determinant")
        object.__setattr__(self, "matrix", m)

    @classmethod
    def identity(cls) -> "ProjMap":
        return cls(((1, 0, 0), (0, 1, 0), (0, 0, 1)))

    def is_identity(self) -> bool:
        return self == ProjMap.identity()

    def det(self) -> Scalar:
        return _det_matrix(self.matrix)

    def __eq__(self, other):
        if not isinstance(other, ProjMap):
            return NotImplemented
        a = [x for row in self.matrix for x in row]
        b = [x for row in other.matrix for x in row]
        i = next(i for i, x in enumerate(a) if x)
        return all(x * b[i] == y * a[i] for x, y in zip(a, b))

    def __hash__(self):
        return hash(_canonical([x for row in self.matrix for x in row]))

    def __matmul__(self, other: "ProjMap") -> "ProjMap":
        return compose(self, other)

    def inverse(self) -> "ProjMap":
        # the adjugate is a scalar multiple of the inverse, which is all a projective map needs
        return ProjMap(_adjugate(self.matrix))

    def __call__(self, p):
        if isinstance(p, HLine):
            return apply_line(self, p)
        return apply(self, p)

    def __repr__(self):
        rows = "; ".join(" ".join(rat_str(x) for x in row) for row in self.matrix)
        return f"ProjMap([{rows}])"


def compose(s: ProjMap, t: ProjMap) -> ProjMap:
    """The map ``p -> s(t(p))``."""
    return ProjMap(_mat_mul(s.matrix, t.matrix))


def apply(t: ProjMap, p: HPoint) -> HPoint:
    m = t.matrix
    return HPoint(tuple(dot(m[i], p.coords) for i in range(3)))


def apply_line(t: ProjMap, line: HLine) -> HLine:
    """Image of a line: ``l -> adj(M)^T l`` so that incidence is preserved."""
    adj = _adjugate(t.matrix)
    c = line.coords
    return HLine(tuple(sum(adj[k][i] * c[k] for k in range(3)) for i in range(3)))


def join(p: HPoint, q: HPoint) -> HLine:
    """Line through two distinct points."""
    c = cross(p.coords, q.coords)
    if not any(c):
        raise EqualPoints(f"{p!r} and {q!r} coincide")
    return HLine(primitive(c))


def meet(l: HLine, m: HLine) -> HPoint:
    """Intersection point of two distinct lines."""
    c = cross(l.coords, m.coords)
    if not any(c):
        raise EqualLines(f"{l!r} and {m!r} coincide")
    return HPoint(primitive(c))


def collinear(points: Iterable[HPoint]) -> bool:
    """Exact test: every 3x3 determinant of a point triple vanishes."""
    pts = [p.coords for p in points]
    return all(det3(a, b, c) == 0 for a, b, c in combinations(pts, 3))


def concurrent(lines: Iterable[HLine]) -> bool:
    ls = [l.coords for l in lines]
    return all(det3(a, b, c) == 0 for a, b, c in combinations(ls, 3))


def cross_ratio(a: Scalar, b: Scalar, c: Scalar, d: Scalar) -> Fraction:
    """``(a-b)(c-d) / ((a-c)(b-d))``."""
    den = (a - c) * (b - d)
    if den == 0:
        raise DegenerateCrossRatio(f"cross ratio undefined for {(a, b, c, d)}")
    return Fraction((a - b) * (c - d)) / den


def _pencil_cross_ratio(vecs, carrier) -> Fraction:
    # Chart: drop the coordinate where the carrier has the largest |entry|; the
    # remaining two coordinates are a linear chart of the pencil.
    drop = max(range(3), key=lambda i: abs(carrier[i]))
    keep = [i for i in range(3) if i != drop]
    pairs = [(v[keep[0]], v[keep[1]]) for v in vecs]

    def br(i, j):
        return pairs[i][0] * pairs[j][1] - pairs[i][1] * pairs[j][0]

    den = br(0, 2) * br(1, 3)
    if den == 0:
        raise DegenerateCrossRatio("first/third or second/fourth elements coincide")
    return Fraction(br(0, 1) * br(2, 3)) / den


def _carrier(vecs, err, kind):
    for u, v in combinations(vecs, 2):
        c = cross(u, v)
        if any(c):
            if any(dot(c, w) != 0 for w in vecs):
                raise err(f"the four {kind} are not in one pencil")
            return c
    raise DegenerateCrossRatio(f"all four {kind} coincide")


def cross_ratio_points(p1: HPoint, p2: HPoint, p3: HPoint, p4: HPoint) -> Fraction:
    """Cross ratio of four collinear points."""
    vecs = [p.coords for p in (p1, p2, p3, p4)]
    line = _carrier(vecs, NotCollinear, "points")
    return _pencil_cross_ratio(vecs, line)


def cross_ratio_lines(l1: HLine, l2: HLine, l3: HLine, l4: HLine) -> Fraction:
    """Cross ratio of four concurrent lines (dual of :func:`cross_ratio_points`)."""
    vecs = [l.coords for l in (l1, l2, l3, l4)]
    point = _carrier(vecs, NotConcurrent, "lines")
    return _pencil_cross_ratio(vecs, point)
