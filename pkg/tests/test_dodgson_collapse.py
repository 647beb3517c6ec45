import random
from fractions import Fraction

import pytest

from pentagram import cluster
from pentagram.combinat import (
    collapse_determinant_check,
    collapse_run,
    determinant,
    dodgson_F,
    dodgson_matrix,
    sigma,
    specialized_F,
    ys_from_sides,
)
from pentagram.combinat.dodgson import fraction_determinant, specialized_residues
from pentagram.laurent import LaurentRing
from pentagram.polygon import (
    every_other_collinear,
    iterate,
    make_axis_aligned,
    random_axis_aligned,
    side_lengths,
    y_params,
)
from pentagram.verify import fj2

R8 = LaurentRing.for_polygon(8)
OCTAGON = make_axis_aligned((3, 2, -3, -2), (1, 2, -1, -2), None, (1, 1))


@pytest.mark.parametrize("j", range(-8, 9))
def test_sigma_identities(j):
    assert sigma(j) ** 2 == 1
    assert sigma(j - 1) * sigma(j + 1) == -1


def test_k1_determinant():
    M = dodgson_matrix(0, 1, 8)
    assert M[0][1] == -R8.var(0)
    assert dodgson_F(0, 1, 8) == R8.one() + R8.var(0)


def test_k2_is_fj2_at_minus_one():
    assert dodgson_F(0, 2, 8) == fj2(0, R8).specialize({0: -1})


@pytest.mark.parametrize("k", [1, 2, 3])
def test_symbolic_specialization(k):
    for j in range(0, 4):
        assert dodgson_F(j, k, 8) == specialized_F(cluster.F(j, k, 8), j, k)


def test_k4_at_random_points():
    j, k = 0, 4
    F = specialized_F(cluster.F(j, k, 8), j, k)
    M = dodgson_matrix(j, k, 8)
    free = [r for r in range(1, 17) if r not in specialized_residues(j, k, R8)]
    rng = random.Random(4)
    for _ in range(20):
        vals = {r: -1 for r in specialized_residues(j, k, R8)}
        vals.update({r: Fraction(rng.randint(1, 9), rng.randint(1, 9)) * rng.choice((1, -1)) for r in free})
        numeric = [[e.substitute(vals) for e in row] for row in M]
        assert fraction_determinant(numeric) == F.substitute(vals)


def test_determinant_routes_agree():
    rng = random.Random(0)
    for size in range(1, 6):
        A = [[Fraction(rng.randint(-5, 5)) for _ in range(size)] for _ in range(size)]
        assert determinant(A) == fraction_determinant(A)


def test_octagon_side_data():
    s = side_lengths(OCTAGON)
    assert [s[i] for i in range(1, 16, 2)] == [-2, 3, 1, 2, 2, -3, -1, -2]
    ys = y_params(OCTAGON)
    assert ys[1] == -3
    assert ys == ys_from_sides(s, 4)


def test_octagon_f_vanishes():
    ys = y_params(OCTAGON)
    assert cluster.F(0, 3, 8).substitute(ys) == 0
    assert all(cluster.F(j, 3, 8).substitute(ys) == 0 for j in range(0, 16, 2))
    assert collapse_determinant_check(OCTAGON, 4)
    assert collapse_determinant_check(side_lengths(OCTAGON), 4)


def test_octagon_collapses_after_two_steps():
    assert every_other_collinear(iterate(OCTAGON, 2)) == (True, True)
    # this centrally symmetric octagon is already on two lines after one step
    assert every_other_collinear(iterate(OCTAGON, 1)) == (True, True)
    assert len(set(iterate(OCTAGON, 2).vertices)) == 1
    r = collapse_run(OCTAGON)
    assert r.steps == 2 and r.collapsed


def test_hexagon_collapse_lands_on_half_offset():
    r = collapse_run(make_axis_aligned((1, 2, -3), (2, -1, -1)))
    assert r.steps == 1 and r.ok and r.offset == Fraction(1, 2)


def test_twisted_hexagon_scale_two():
    H = make_axis_aligned((1, 2, -4), (2, -1, 3), 2)
    for i in range(6):
        assert H.vertex(i + 6) == H.monodromy(H.vertex(i))
    assert collapse_determinant_check(H, 3, twisted=True)
    assert collapse_run(H).ok


def test_twisted_octagon_scale_two():
    r = collapse_run(make_axis_aligned((1, 2, -4, 3), (2, -1, 3, 1), 2))
    assert r.steps == 3 and r.ok


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_random_closed_determinants_vanish(n):
    rng = random.Random(n)
    for _ in range(5):
        A = random_axis_aligned(n, rng)
        try:
            ok = collapse_determinant_check(A, n)
        except ZeroDivisionError:
            continue
        assert ok
