import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from pentagram import cluster
from pentagram.combinat import (
    ASM,
    F_asm,
    F_ideals,
    OctaGrid,
    X_matrix,
    asm_monomial,
    asm_to_ideal,
    enumerate_asms,
    mf_grid,
    m,
    m0,
    octahedron_value,
    robbins_rumsey,
)
from pentagram.laurent import LaurentRing, LMonomial
from pentagram.verify import fj2, m_quotient_identity, octahedron_identity

R8 = LaurentRing.for_polygon(8)
y = R8.y

ASM3_MONOMIALS = [
    (((1, 0, 0), (0, 1, 0), (0, 0, 1)), []),
    (((0, 1, 0), (1, 0, 0), (0, 0, 1)), [-3]),
    (((1, 0, 0), (0, 0, 1), (0, 1, 0)), [3]),
    (((0, 1, 0), (1, -1, 1), (0, 1, 0)), [-3, 3]),
    (((0, 1, 0), (0, 0, 1), (1, 0, 0)), [-3, 3, -1]),
    (((0, 0, 1), (1, 0, 0), (0, 1, 0)), [-3, 3, 1]),
    (((0, 0, 1), (0, 1, 0), (1, 0, 0)), [-3, 3, -1, 1]),
]


def prod(idx):
    out = LMonomial(R8)
    for i in idx:
        out = out * y(i)
    return out


def test_m0_small_values():
    assert m0(0, 1, 8) == y(0)
    assert m0(2, 1, 8) == y(6)
    assert m0(0, 2, 8) == y(-3) * y(1) * y(3)
    for i in range(-3, 4):
        assert m0(i, 0, 8).is_one()


@given(st.integers(-4, 4), st.integers(-1, 6))
def test_m_with_zero_middle_index_is_one(i, k):
    assert m(i, 0, k, 8).is_one()


@given(st.integers(-4, 4), st.integers(-4, 4), st.integers(1, 5))
def test_m_octahedron_monomial_recurrence(i, j, k):
    assert m(i, j, k, 8) * m(i, j, k - 2, 8) == m(i - 1, j, k - 1, 8) * m(i + 1, j, k - 1, 8)


@pytest.mark.parametrize("k", [-1, 0, 1, 2, 3, 4])
def test_m_quotient_is_M(k):
    assert all(m_quotient_identity(i, j, k, 8) for i in range(-2, 3) for j in range(-2, 3))


def test_x_matrices():
    X2 = [[LMonomial(R8, key) for key in row] for row in X_matrix(2, R8)]
    assert X2 == [[prod([]), y(0)], [prod([]), prod([])]]
    X3 = [[LMonomial(R8, key) for key in row] for row in X_matrix(3, R8)]
    assert X3 == [
        [prod([]), y(-3), prod([-3, 1, 3])],
        [prod([]), prod([]), y(3)],
        [y(-1), prod([]), prod([])],
    ]


def test_asm3_monomials():
    assert len(enumerate_asms(3)) == len(ASM3_MONOMIALS)
    for rows, idx in ASM3_MONOMIALS:
        assert asm_monomial(ASM(rows), 3, R8) == prod(idx)


@pytest.mark.parametrize("k", [2, 3, 4])
def test_ideal_weight_equals_asm_monomial(k):
    # the weight of the ideal attached to A is the X-monomial of A
    for A in enumerate_asms(k):
        I = asm_to_ideal(A, k)
        w = LMonomial(R8, sum(R8.var_key(3 * r + s) for r, s, _ in I.members))
        assert w == asm_monomial(A, k, R8)


def test_k2_worked_example():
    assert F_asm(2, 8) == fj2(0, R8)
    assert F_ideals(0, 2, 8) == fj2(0, R8)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_routes_agree_all_j(k):
    for j in range(1, 17):
        f = cluster.F(j, k, 8)
        assert F_ideals(j, k, 8) == f
        assert F_asm(k, 8, j=j) == f
        assert all(c > 0 for c in f.coefficients())


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_term_count_is_ideal_count(k):
    assert sum(F_ideals(0, k, 8).coefficients()) == [2, 8, 64, 1024][k - 1]


@pytest.mark.parametrize("k", [0, 1, 2])
def test_octahedron_identity_sweep(k):
    assert all(octahedron_identity(i, j, k, 8) for i in range(-2, 3) for j in range(-2, 3))


@pytest.mark.parametrize("k", [1, 2, 3])
def test_octahedron_recurrence_reproduces_mF(k):
    grid = mf_grid(k, 8, cluster.F)
    want = m(0, 0, k, 8).to_poly() * cluster.F(0, k, 8)
    assert octahedron_value(grid, k) == want


@pytest.mark.parametrize("k", [1, 2, 3])
def test_robbins_rumsey_matches_recurrence_numerically(k):
    rng = random.Random(k)
    for _ in range(3):
        vals = {}

        def f(i, j, kk):
            return vals.setdefault((i, j, kk), Fraction(rng.randint(1, 9), rng.randint(1, 9)))

        grid = OctaGrid.from_function(f, k)
        assert robbins_rumsey(OctaGrid(dict(grid.values)), k) == octahedron_value(grid, k)
