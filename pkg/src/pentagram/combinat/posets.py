"""The posets Q_k and P_k = Q_{k+1} u Q_k and their order ideals.

Elements are integer triples ``(r, s, t)``.  In P_k, ``(r', s', t')`` covers
``(r, s, t)`` iff ``t' = t + 1`` and ``|r' - r| + |s' - s| = 1``.  Covers only
join Q_k to Q_{k+1}, so Q_k carries the order induced from P_k: comparabilities
must be witnessed by chains inside P_k.  Near the boundary this is strictly
weaker than the light-cone order of Z^3.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, FrozenSet, Iterable, Iterator, List, Sequence, Tuple

Elem = Tuple[int, int, int]


def in_Q(e: Elem, k: int) -> bool:
    r, s, t = e
    lo = 2 * abs(s) - (k - 2)
    hi = k - 2 - 2 * abs(r)
    return lo <= t <= hi and (t - lo) % 4 == 0 and (hi - t) % 4 == 0


def q_elements(k: int) -> List[Elem]:
    out = []
    for r in range(-(k - 2), k - 1):
        for s in range(-(k - 2), k - 1):
            lo = 2 * abs(s) - (k - 2)
            hi = k - 2 - 2 * abs(r)
            if lo > hi or (hi - lo) % 4:
                continue
            out.extend((r, s, t) for t in range(lo, hi + 1, 4))
    return sorted(out, key=elem_order)


def elem_order(e: Elem) -> Tuple[int, int, int]:
    """Canonical order: lexicographic on ``(t, r, s)`` (a linear extension)."""
    r, s, t = e
    return (t, r, s)


def below(a: Elem, b: Elem) -> bool:
    """Light-cone relation ``a < b`` in Z^3 (necessary, not sufficient, inside P_k)."""
    dt = b[2] - a[2]
    d = abs(b[0] - a[0]) + abs(b[1] - a[1])
    return dt > 0 and dt >= d


def covers_rule(lower: Elem, upper: Elem) -> bool:
    return upper[2] == lower[2] + 1 and abs(upper[0] - lower[0]) + abs(upper[1] - lower[1]) == 1


@dataclass(frozen=True)
class Poset:
    """A finite poset given by its elements (in linear-extension order) and cover pairs."""

    elements: Tuple[Elem, ...]
    covers: FrozenSet[Tuple[Elem, Elem]]  # (lower, upper)
    name: str = ""

    def __post_init__(self):
        index = {e: i for i, e in enumerate(self.elements)}
        lower = [0] * len(self.elements)
        for a, b in self.covers:
            lower[index[b]] |= 1 << index[a]
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_lower", tuple(lower))

    def __len__(self):
        return len(self.elements)

    def __contains__(self, e):
        return e in self._index

    def index(self, e: Elem) -> int:
        return self._index[e]

    def lower_covers(self, e: Elem) -> List[Elem]:
        m = self._lower[self._index[e]]
        return [x for i, x in enumerate(self.elements) if m >> i & 1]

    def lower_masks(self) -> Tuple[int, ...]:
        return self._lower

    def mask(self, members: Iterable[Elem]) -> int:
        m = 0
        for e in members:
            m |= 1 << self._index[e]
        return m

    def members(self, mask: int) -> FrozenSet[Elem]:
        return frozenset(e for i, e in enumerate(self.elements) if mask >> i & 1)

    def is_ideal(self, members: Iterable[Elem]) -> bool:
        try:
            m = self.mask(members)
        except KeyError:
            return False
        return is_ideal_mask(self._lower, m)

    def leq_closure(self) -> Dict[Elem, FrozenSet[Elem]]:
        """Strict down-sets generated by the covers."""
        down: Dict[Elem, FrozenSet[Elem]] = {}
        for e in self.elements:  # linear extension: lower elements first
            acc = set()
            for c in self.lower_covers(e):
                acc.add(c)
                acc |= down[c]
            down[e] = frozenset(acc)
        return down


def is_ideal_mask(lower: Sequence[int], mask: int) -> bool:
    i = 0
    m = mask
    while m:
        if m & 1 and lower[i] & ~mask:
            return False
        m >>= 1
        i += 1
    return True


def _hasse(elements: Sequence[Elem], less: Callable[[Elem, Elem], bool]) -> FrozenSet[Tuple[Elem, Elem]]:
    out = set()
    for a in elements:
        for b in elements:
            if less(a, b) and not any(less(a, c) and less(c, b) for c in elements):
                out.add((a, b))
    return frozenset(out)


def build_Q(k: int) -> Poset:
    """Q_k with the order induced from P_k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    down = _P(k).leq_closure()
    elems = q_elements(k)
    return Poset(tuple(elems), _hasse(elems, lambda a, b: a in down[b]), f"Q{k}")


def build_P(k: int) -> Poset:
    """P_k = Q_{k+1} u Q_k with the displayed cover rule."""
    if k < 1:
        raise ValueError("k must be >= 1")
    elems = sorted(q_elements(k + 1) + q_elements(k), key=elem_order)
    covers = frozenset((a, b) for a in elems for b in elems if covers_rule(a, b))
    return Poset(tuple(elems), covers, f"P{k}")


@dataclass(frozen=True)
class OrderIdeal:
    members: FrozenSet[Elem]

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(sorted(self.members, key=elem_order))

    def __contains__(self, e):
        return e in self.members

    def sorted_list(self) -> List[List[int]]:
        return [list(e) for e in self]

    def weight_indices(self, j: int = 0) -> List[int]:
        """Variable indices ``3r + s + j`` of the weight monomial."""
        return [3 * r + s + j for r, s, _ in self.members]


def iter_ideal_masks(p: Poset) -> Iterator[int]:
    """All order ideals as bitmasks; deterministic depth-first order.

    Elements are visited along the linear extension; an element may be
    added only once all of its lower covers are present, so every branch
    yields a distinct down-set and every down-set is reached exactly once.
    """
    lower = p.lower_masks()
    n = len(lower)
    stack = [(0, 0)]
    while stack:
        i, mask = stack.pop()
        if i == n:
            yield mask
            continue
        if not lower[i] & ~mask:
            stack.append((i + 1, mask | (1 << i)))
        stack.append((i + 1, mask))


def enumerate_ideals(p: Poset) -> List[OrderIdeal]:
    return [OrderIdeal(p.members(m)) for m in iter_ideal_masks(p)]


def count_ideals(p: Poset) -> int:
    return sum(1 for _ in iter_ideal_masks(p))


def split_ideal(ideal: Iterable[Elem], k: int) -> Tuple[FrozenSet[Elem], FrozenSet[Elem]]:
    """Split an ideal of P_k into its Q_{k+1} and Q_k parts."""
    upper = frozenset(e for e in ideal if in_Q(e, k + 1))
    return upper, frozenset(e for e in ideal if in_Q(e, k))


def compatible(I: Iterable[Elem], J: Iterable[Elem], k: int) -> bool:
    """``I`` ideal of Q_{k+1}, ``J`` ideal of Q_k: is ``I u J`` an ideal of P_k?"""
    return _P(k).is_ideal(set(I) | set(J))


_P_CACHE: Dict[int, Poset] = {}
_Q_CACHE: Dict[int, Poset] = {}


def _P(k: int) -> Poset:
    p = _P_CACHE.get(k)
    if p is None:
        p = _P_CACHE[k] = build_P(k)
    return p


def _Q(k: int) -> Poset:
    q = _Q_CACHE.get(k)
    if q is None:
        q = _Q_CACHE[k] = build_Q(k)
    return q


P = _P
Q = _Q
