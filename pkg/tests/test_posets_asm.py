
import pytest

from pentagram.combinat.asm import (
    ASM,
    asm_to_ideal,
    enumerate_asms,
    height_function,
    ideal_to_asm,
    is_asm,
    skew_summation,
)
from pentagram.combinat.fpoly import compatible_asm, compatible_pairs
from pentagram.combinat.posets import (
    OrderIdeal,
    P,
    Q,
    below,
    build_P,
    build_Q,
    compatible,
    count_ideals,
    enumerate_ideals,
    q_elements,
    split_ideal,
)
from pentagram.errors import NotASM

CENTRAL = ((0, 1, 0), (1, -1, 1), (0, 1, 0))
ANTI3 = ((0, 0, 1), (0, 1, 0), (1, 0, 0))


def brute_asm_count(k):
    # independent oracle: all {-1,0,1} matrices filtered by the defining property
    import itertools

    count = 0
    for entries in itertools.product((-1, 0, 1), repeat=k * k):
        rows = [entries[i * k:(i + 1) * k] for i in range(k)]
        if is_asm(rows):
            count += 1
    return count


def test_q3_elements_and_covers():
    q = build_Q(3)
    assert set(q.elements) == {(-1, 0, -1), (1, 0, -1), (0, -1, 1), (0, 1, 1)}
    for top in [(0, -1, 1), (0, 1, 1)]:
        assert set(q.lower_covers(top)) == {(-1, 0, -1), (1, 0, -1)}


def test_small_poset_counts():
    assert count_ideals(build_P(1)) == 2
    assert count_ideals(build_P(2)) == 8
    assert count_ideals(build_Q(3)) == 7
    assert [count_ideals(build_Q(k)) for k in range(1, 6)] == [1, 2, 7, 42, 429]


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_asm_counts_match_brute_force(k):
    assert len(enumerate_asms(k)) == brute_asm_count(k) == count_ideals(Q(k))


def test_ideal_p_counts():
    assert [count_ideals(P(k)) for k in range(1, 5)] == [2, 8, 64, 1024]


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_ideals_are_down_sets_and_distinct(k):
    p = P(k)
    ideals = enumerate_ideals(p)
    assert len({I.members for I in ideals}) == len(ideals)
    down = p.leq_closure()
    for I in ideals:
        assert all(down[e] <= I.members for e in I.members)


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_induced_order_refines_light_cone(k):
    # comparabilities inside P_k imply the light-cone relation, not conversely
    q = Q(k)
    down = q.leq_closure()
    for b in q.elements:
        for a in down[b]:
            assert below(a, b)


def test_table_bijection_examples():
    assert ideal_to_asm([], 3) == ASM.identity(3)
    I = {(-1, 0, -1), (1, 0, -1)}
    assert ideal_to_asm(I, 3) == ASM(CENTRAL)
    assert asm_to_ideal(ASM.identity(3)).members == frozenset()
    assert asm_to_ideal(ASM(CENTRAL)).members == frozenset(I)
    assert skew_summation([], 3) == [[0, 1, 2, 3], [1, 0, 1, 2], [2, 1, 0, 1], [3, 2, 1, 0]]
    assert skew_summation(I, 3) == [[0, 1, 2, 3], [1, 2, 1, 2], [2, 1, 2, 1], [3, 2, 1, 0]]
    H = height_function(I, 3)
    assert H[(-1, 0)] == H[(1, 0)] == 4
    assert H[(-3, 0)] == H[(3, 0)] == 0
    assert H[(0, 3)] == H[(0, -3)] == 6
    assert ideal_to_asm(q_elements(3), 3) == ASM(ANTI3)


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_bijection_round_trip(k):
    images = set()
    for I in enumerate_ideals(Q(k)):
        A = ideal_to_asm(I.members, k)
        assert asm_to_ideal(A, k).members == I.members
        images.add(A)
    assert images == set(enumerate_asms(k))


def test_not_asm_rejected():
    with pytest.raises(NotASM):
        ASM(((1, 1), (0, 0)))
    with pytest.raises(NotASM):
        ASM(((0, 1, 0), (1, 0, 1), (0, 1, 0)))


def test_compatibility_examples():
    ident2, swap2 = ASM.identity(2), ASM(((0, 1), (1, 0)))
    top = [ASM.identity(3), ASM(((0, 1, 0), (1, 0, 0), (0, 0, 1))), ASM(((1, 0, 0), (0, 0, 1), (0, 1, 0)))]
    bottom = [ASM(((0, 1, 0), (0, 0, 1), (1, 0, 0))), ASM(((0, 0, 1), (1, 0, 0), (0, 1, 0))), ASM(ANTI3)]
    for A in top:
        assert compatible_asm(A, ident2) and not compatible_asm(A, swap2)
    for A in bottom:
        assert compatible_asm(A, swap2) and not compatible_asm(A, ident2)
    assert compatible_asm(ASM(CENTRAL), ident2) and compatible_asm(ASM(CENTRAL), swap2)
    assert compatible([], [], 4)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_compatibility_transport(k):
    pairs = 0
    qa, qb = Q(k + 1), Q(k)
    for I in enumerate_ideals(qa):
        for J in enumerate_ideals(qb):
            c = compatible(I.members, J.members, k)
            A, B = ideal_to_asm(I.members, k + 1), ideal_to_asm(J.members, k)
            assert c == compatible_asm(A, B)
            pairs += c
    assert pairs == count_ideals(P(k)) == len(compatible_pairs(k))


@pytest.mark.parametrize("k", [2, 3, 4])
def test_weight_additivity(k):
    for I in enumerate_ideals(P(k)):
        upper, lower = split_ideal(I.members, k)
        assert upper | lower == I.members and not upper & lower
        w = sorted(OrderIdeal(upper).weight_indices() + OrderIdeal(lower).weight_indices())
        assert w == sorted(I.weight_indices())
