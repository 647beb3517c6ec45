"""Alternating sign matrices and their bijection with order ideals of Q_k."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple

from ..errors import NotASM
from .posets import Elem, OrderIdeal, in_Q


@dataclass(frozen=True)
class ASM:
    entries: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in r) for r in self.entries)
        object.__setattr__(self, "entries", rows)
        if not is_asm(rows):
            raise NotASM(f"not an alternating sign matrix: {rows}")

    @property
    def size(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def rows(self) -> List[List[int]]:
        return [list(r) for r in self.entries]

    @classmethod
    def identity(cls, k: int) -> "ASM":
        return cls(tuple(tuple(int(i == j) for j in range(k)) for i in range(k)))


def _alternates(line: Sequence[int]) -> bool:
    partial = 0
    for v in line:
        if v not in (-1, 0, 1):
            return False
        partial += v
        if partial not in (0, 1):
            return False
    return partial == 1


def is_asm(rows: Sequence[Sequence[int]]) -> bool:
    """Entries in {-1,0,1}; partial sums of each row/column in {0,1} ending at 1.

    The partial-sum condition is equivalent to alternation of the nonzero
    entries starting and ending with +1, together with unit line sums.
    """
    k = len(rows)
    if any(len(r) != k for r in rows):
        return False
    return all(_alternates(r) for r in rows) and all(_alternates([rows[i][j] for i in range(k)]) for j in range(k))


def enumerate_asms(k: int) -> List[ASM]:
    """Brute force, row by row, pruning on column partial sums in {0,1}."""
    out: List[ASM] = []

    def rows_for(col: Tuple[int, ...]) -> Iterator[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
        # one row whose own partial sums stay in {0,1}; -1 only above a column holding 1
        def rec(j, acc, s, newcol):
            if j == k:
                if s == 1:
                    yield tuple(acc), tuple(newcol)
                return
            for v in (0, 1, -1):
                c = col[j] + v
                if c not in (0, 1) or s + v not in (0, 1):
                    continue
                acc.append(v)
                newcol.append(c)
                yield from rec(j + 1, acc, s + v, newcol)
                acc.pop()
                newcol.pop()

        yield from rec(0, [], 0, [])

    def build(i, col, acc):
        if i == k:
            if all(c == 1 for c in col):
                out.append(ASM(tuple(acc)))
            return
        for row, newcol in rows_for(col):
            build(i + 1, newcol, acc + [row])

    build(0, tuple([0] * k), [])
    return sorted(out, key=lambda a: a.entries)


def height_function(ideal: Iterable[Elem], k: int) -> Dict[Tuple[int, int], int]:
    """``H(r, s)`` on ``r + s = k (mod 2)``, ``|r| + |s| <= k``.

    Each element of the ideal in the fiber over ``(r, s)`` raises ``H`` by 4
    above the base value ``2|s|``; equivalently ``H = k + 2 + max t``.
    """
    members = set(ideal)
    H = {}
    for r in range(-k, k + 1):
        for s in range(-k, k + 1):
            if (r + s - k) % 2 or abs(r) + abs(s) > k:
                continue
            ts = [t for (a, b, t) in members if a == r and b == s]
            H[(r, s)] = k + 2 + max(ts) if ts else 2 * abs(s)
    return H


def skew_summation(ideal: Iterable[Elem], k: int) -> List[List[int]]:
    """The (k+1)x(k+1) matrix ``a*_{ij} = H(-k+i+j, -i+j) / 2``, indices from 0."""
    H = height_function(ideal, k)
    return [[H[(-k + i + j, j - i)] // 2 for j in range(k + 1)] for i in range(k + 1)]


def ideal_to_asm(ideal: Iterable[Elem], k: int) -> ASM:
    a = skew_summation(ideal, k)
    rows = []
    for i in range(1, k + 1):
        row = []
        for j in range(1, k + 1):
            v = a[i - 1][j] + a[i][j - 1] - a[i - 1][j - 1] - a[i][j]
            row.append(v // 2)
        rows.append(tuple(row))
    return ASM(tuple(rows))


def asm_to_skew(A: ASM) -> List[List[int]]:
    k = A.size
    a = [[0] * (k + 1) for _ in range(k + 1)]
    for j in range(k + 1):
        a[0][j] = j
    for i in range(k + 1):
        a[i][0] = i
    for i in range(1, k + 1):
        for j in range(1, k + 1):
            a[i][j] = a[i - 1][j] + a[i][j - 1] - a[i - 1][j - 1] - 2 * A.entries[i - 1][j - 1]
    return a


def asm_to_ideal(A, k: int = None) -> OrderIdeal:
    """Inverse of :func:`ideal_to_asm`, by undoing each step."""
    if not isinstance(A, ASM):
        A = ASM(tuple(tuple(r) for r in A))
    if k is None:
        k = A.size
    if A.size != k:
        raise NotASM(f"expected a {k}x{k} matrix")
    a = asm_to_skew(A)
    members = set()
    for i in range(k + 1):
        for j in range(k + 1):
            r, s = -k + i + j, j - i
            extra = 2 * a[i][j] - 2 * abs(s)
            if extra % 4 or extra < 0:
                raise NotASM("height function inconsistent with an order ideal")
            lo = 2 * abs(s) - (k - 2)
            for c in range(extra // 4):
                e = (r, s, lo + 4 * c)
                if not in_Q(e, k):
                    raise NotASM("height function leaves the poset")
                members.add(e)
    return OrderIdeal(frozenset(members))


def asm_monomial_exponents(A: ASM, X: Sequence[Sequence[int]]) -> int:
    """``X^A`` for a matrix of packed monomial keys ``X`` (returns a packed key)."""
    key = 0
    for i, row in enumerate(A.entries):
        for j, v in enumerate(row):
            if v:
                key += v * X[i][j]
    return key
