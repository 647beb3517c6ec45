from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from pentagram.errors import DegenerateCrossRatio, NotCollinear, ParseError
from pentagram.exact import (
    HLine,
    HPoint,
    ProjMap,
    collinear,
    concurrent,
    cross_ratio,
    cross_ratio_lines,
    cross_ratio_points,
    join,
    meet,
    primitive,
    rat,
    rat_str,
)

small = st.integers(-20, 20)
rats = st.fractions(min_value=-50, max_value=50, max_denominator=20)


def test_rat_parsing():
    assert rat("6/4") == Fraction(3, 2)
    assert rat(" -7 ") == -7
    assert rat_str(Fraction(6, 4)) == "3/2"
    assert rat_str(Fraction(4, 2)) == "2"
    with pytest.raises(ParseError):
        rat("3/0")
    with pytest.raises(ParseError):
        rat("x/2")


def test_primitive_scales_to_coprime_integers():
    assert primitive((Fraction(1, 2), Fraction(3, 4), 0)) == (2, 3, 0)
    assert primitive((-4, 6, 8)) == (-2, 3, 4)


def test_cross_ratio_scalar():
    assert cross_ratio(0, 1, 2, 3) == Fraction((0 - 1) * (2 - 3), (0 - 2) * (1 - 3))
    with pytest.raises(DegenerateCrossRatio):
        cross_ratio(1, 2, 1, 3)


@given(small, small, small, small)
def test_join_meet_incidence(a, b, c, d):
    p, q = HPoint.affine(a, b), HPoint.affine(c, d)
    if p == q:
        return
    line = join(p, q)
    assert line.contains(p) and line.contains(q)
    other = join(p, HPoint.affine(a + 1, b + 2))
    if other != line:
        assert meet(line, other) == p


@given(st.lists(rats, min_size=4, max_size=4, unique=True), rats, rats)
def test_points_on_a_line_match_scalar_cross_ratio(ts, slope, icpt):
    pts = [HPoint.affine(t, slope * t + icpt) for t in ts]
    assert cross_ratio_points(*pts) == cross_ratio(*ts)


@given(st.lists(rats, min_size=4, max_size=4, unique=True))
def test_line_pencil_cross_ratio_is_dual(ts):
    # lines y = t x through the origin; their slopes give the cross ratio
    lines = [HLine((t, -1, 0)) for t in ts]
    assert concurrent(lines)
    assert cross_ratio_lines(*lines) == cross_ratio(*ts)


def test_cross_ratio_requires_collinear_points():
    pts = [HPoint.affine(0, 0), HPoint.affine(1, 0), HPoint.affine(2, 0), HPoint.affine(0, 1)]
    assert not collinear(pts)
    with pytest.raises(NotCollinear):
        cross_ratio_points(*pts)


@given(st.lists(small, min_size=9, max_size=9), st.lists(rats, min_size=4, max_size=4, unique=True))
def test_cross_ratio_is_projectively_invariant(entries, ts):
    m = tuple(tuple(entries[3 * i:3 * i + 3]) for i in range(3))
    try:
        psi = ProjMap(m)
    except ValueError:
        return
    pts = [HPoint.affine(t, 2 * t + 1) for t in ts]
    images = [psi(p) for p in pts]
    if any(p[2] == 0 and not any(p.coords) for p in images):
        return
    assert cross_ratio_points(*images) == cross_ratio_points(*pts)


def test_projective_map_algebra():
    psi = ProjMap(((1, 2, 0), (0, 1, 3), (1, 0, 1)))
    assert (psi @ psi.inverse()).is_identity()
    assert ProjMap(((2, 0, 0), (0, 2, 0), (0, 0, 2))).is_identity()
