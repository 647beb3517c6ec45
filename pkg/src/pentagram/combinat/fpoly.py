"""The monomials m_{i,j,k} and the order-ideal and ASM routes to F_{j,k}."""
from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from ..laurent import LaurentRing, LMonomial, LPoly, conv_range
from .asm import ASM, asm_to_ideal, enumerate_asms
from .posets import P, Q, iter_ideal_masks


def _ring(n: int, ring: Optional[LaurentRing]) -> LaurentRing:
    return ring or LaurentRing.for_polygon(n)


def m0_key(i: int, j: int, ring: LaurentRing) -> int:
    # prod_{l=0}^{j-1} prod_{m=0}^{l} y_{3i+j-4l+6m-1}, both products under the extended convention
    key = 0
    for l, e1 in conv_range(0, j - 1):
        for m, e2 in conv_range(0, l):
            key += e1 * e2 * ring.var_key(3 * i + j - 4 * l + 6 * m - 1)
    return key


def m0(i: int, j: int, n: int, ring: Optional[LaurentRing] = None) -> LMonomial:
    ring = _ring(n, ring)
    return LMonomial(ring, m0_key(i, j, ring))


def m(i: int, j: int, k: int, n: int, ring: Optional[LaurentRing] = None) -> LMonomial:
    """``m_{i,j,k}`` for ``k >= -1``."""
    ring = _ring(n, ring)
    if k < -1:
        raise ValueError("m is defined for k >= -1")
    return LMonomial(ring, _m_key(i, j, k, ring))


@lru_cache(maxsize=None)
def _m_key(i: int, j: int, k: int, ring: LaurentRing) -> int:
    if k == 0:
        return m0_key(i, j, ring)
    if k == -1:
        return -m0_key(i, j, ring)
    return _m_key(i - 1, j, k - 1, ring) + _m_key(i + 1, j, k - 1, ring) - _m_key(i, j, k - 2, ring)


def X_matrix(size: int, ring: LaurentRing, shift: int = 0) -> List[List[int]]:
    """Packed keys of ``X_size``: entry ``(a, b)`` (from 0) is ``m_{-size+1+a+b, b-a, 0}``."""
    q = size - 1
    return [[_shift_key(m0_key(-q + a + b, b - a, ring), ring, shift) for b in range(size)] for a in range(size)]


def _shift_key(key: int, ring: LaurentRing, shift: int) -> int:
    if shift % ring.nvars == 0:
        return key
    return LPoly(ring, {key: 1}).shift(shift).leading_key()


def weight_key(members, j: int, ring: LaurentRing) -> int:
    return sum(ring.var_key(3 * r + s + j) for r, s, _ in members)


def F_ideals(j: int, k: int, n: int, ring: Optional[LaurentRing] = None) -> LPoly:
    """Generating function of the order ideals of P_k, weighted by ``y_{3r+s+j}``."""
    if k < 1:
        raise ValueError("k must be >= 1")
    ring = _ring(n, ring)
    p = P(k)
    keys = [ring.var_key(3 * r + s + j) for r, s, _ in p.elements]
    terms: Counter = Counter()
    for mask in iter_ideal_masks(p):
        key = 0
        i = 0
        while mask:
            if mask & 1:
                key += keys[i]
            mask >>= 1
            i += 1
        terms[key] += 1
    return LPoly(ring, dict(terms))


@lru_cache(maxsize=None)
def _asm_table(k: int):
    """ASMs of size k with the bitmask (over Q_k) of their order ideals."""
    q = Q(k)
    return [(A, q.mask(asm_to_ideal(A, k).members)) for A in enumerate_asms(k)]


@lru_cache(maxsize=None)
def compatibility_data(k: int):
    """For P_k: per element of Q_{k+1} (resp. Q_k) the mask of its lower covers in Q_k (resp. Q_{k+1})."""
    p = P(k)
    qa, qb = Q(k + 1), Q(k)
    need_b = {}
    need_a = {}
    for e in p.elements:
        lows = p.lower_covers(e)
        if e in qa:
            need_b[qa.index(e)] = qb.mask(x for x in lows if x in qb)
        else:
            need_a[qb.index(e)] = qa.mask(x for x in lows if x in qa)
    return need_a, need_b


def _requirement(mask: int, need: Dict[int, int]) -> int:
    out = 0
    i = 0
    while mask:
        if mask & 1:
            out |= need.get(i, 0)
        mask >>= 1
        i += 1
    return out


def compatible_pairs(k: int) -> List[Tuple[ASM, ASM]]:
    """Compatible pairs ``(A, B)`` with ``A`` in ASM(k+1), ``B`` in ASM(k)."""
    return [(A, B) for A, _, B, _ in _compatible_iter(k)]


def _compatible_iter(k: int):
    need_a, need_b = compatibility_data(k)
    big = _asm_table(k + 1)
    small = _asm_table(k)
    small_req = [(B, mb, _requirement(mb, need_a)) for B, mb in small]
    for A, ma in big:
        req_b = _requirement(ma, need_b)
        for B, mb, req_a in small_req:
            if req_b & ~mb == 0 and req_a & ~ma == 0:
                yield A, ma, B, mb


def compatible_asm(A: ASM, B: ASM) -> bool:
    k = B.size
    need_a, need_b = compatibility_data(k)
    ma = Q(k + 1).mask(asm_to_ideal(A, k + 1).members)
    mb = Q(k).mask(asm_to_ideal(B, k).members)
    return _requirement(ma, need_b) & ~mb == 0 and _requirement(mb, need_a) & ~ma == 0


def asm_monomial(A: ASM, size: int, ring: LaurentRing, shift: int = 0) -> LMonomial:
    """``X_size^A`` with ``X`` built from the monomials ``m_{.,.,0}``."""
    X = X_matrix(size, ring, shift)
    key = 0
    for i, row in enumerate(A.entries):
        for jj, v in enumerate(row):
            if v:
                key += v * X[i][jj]
    return LMonomial(ring, key)


def F_asm(k: int, n: int, ring: Optional[LaurentRing] = None, j: int = 0) -> LPoly:
    """``sum X_{k+1}^A X_k^B`` over compatible ASM pairs (variables shifted by ``j``)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    ring = _ring(n, ring)
    Xa = X_matrix(k + 1, ring, j)
    Xb = X_matrix(k, ring, j)

    def key_of(A, X):
        return sum(v * X[i][c] for i, row in enumerate(A.entries) for c, v in enumerate(row) if v)

    akeys = {}
    bkeys = {}
    terms: Counter = Counter()
    for A, _, B, _ in _compatible_iter(k):
        ka = akeys.get(A)
        if ka is None:
            ka = akeys[A] = key_of(A, Xa)
        kb = bkeys.get(B)
        if kb is None:
            kb = bkeys[B] = key_of(B, Xb)
        terms[ka + kb] += 1
    return LPoly(ring, dict(terms))
