"""Integer Laurent polynomials in the cyclic variables ``y_1 .. y_{2n}``.

A monomial is packed into one Python int: the exponent of the variable with
residue ``r`` occupies a balanced base-``2**BITS`` digit at position ``r - 1``.
Monomial multiplication is then integer addition, and integer comparison of
keys with nonnegative digits is lexicographic order (last variable most
significant), which is what exact division needs.
"""
from __future__ import annotations

import heapq
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple

from .errors import NotDivisible, ParseError, ZeroToNegativePower

BITS = 24
BASE = 1 << BITS
HALF = BASE >> 1
MASK = BASE - 1


@dataclass(frozen=True)
class LaurentRing:
    """Context object fixing the number of variables ``2n``.

    ``centered`` only affects printing: residues are shown as ``1..2n`` by
    default and as ``-n+1..n`` when centered (so ``y_{2n}`` prints as ``y0``).
    """

    nvars: int
    centered: bool = False

    def __post_init__(self):
        if self.nvars < 1:
            raise ValueError("ring needs at least one variable")
        guard = 0
        for i in range(self.nvars):
            guard |= HALF << (BITS * i)
        object.__setattr__(self, "_guard", guard)

    @classmethod
    def for_polygon(cls, n: int, centered: bool = False) -> "LaurentRing":
        return cls(2 * n, centered)

    @property
    def n(self) -> int:
        return self.nvars // 2

    def index(self, j: int) -> int:
        """Internal digit position of ``y_j`` (``j`` reduced mod 2n)."""
        return (j - 1) % self.nvars

    def residue(self, j: int) -> int:
        return self.index(j) + 1

    def label(self, i: int) -> int:
        r = i + 1
        if self.centered and r > self.nvars // 2:
            r -= self.nvars
        return r

    def from_label(self, label: int) -> int:
        return self.index(label)

    def var_key(self, j: int) -> int:
        return 1 << (BITS * self.index(j))

    def encode(self, exps: Iterable[int]) -> int:
        key = 0
        for i, e in enumerate(exps):
            if e:
                if not -HALF < e < HALF:
                    raise OverflowError("exponent out of range")
                key += e << (BITS * i)
        return key

    def decode(self, key: int) -> List[int]:
        out = []
        for _ in range(self.nvars):
            d = key & MASK
            if d >= HALF:
                d -= BASE
            out.append(d)
            key = (key - d) >> BITS
        return out

    def nonneg(self, key: int) -> bool:
        """True iff every exponent packed in ``key`` is >= 0."""
        g = self._guard
        return (key + g) & g == g and key >= 0

    def display_order(self) -> List[int]:
        idx = list(range(self.nvars))
        if self.centered:
            idx.sort(key=self.label)
        return idx

    # constructors -----------------------------------------------------------
    def var(self, j: int) -> "LPoly":
        return LPoly(self, {self.var_key(j): 1})

    def mono(self, exps: Optional[Mapping[int, int]] = None) -> "LMonomial":
        key = 0
        for j, e in (exps or {}).items():
            key += e * self.var_key(j)
        return LMonomial(self, key)

    def y(self, j: int, e: int = 1) -> "LMonomial":
        return LMonomial(self, e * self.var_key(j))

    def one(self) -> "LPoly":
        return LPoly(self, {0: 1})

    def zero(self) -> "LPoly":
        return LPoly(self, {})

    def const(self, c: int) -> "LPoly":
        return LPoly(self, {0: c} if c else {})

    def parse(self, text: str) -> "LPoly":
        return parse_poly(self, text)


def _check_ring(a, b):
    if a.ring.nvars != b.ring.nvars:
        raise ValueError("operands live in different rings")


class LMonomial:
    """Laurent monomial; immutable and hashable."""

    __slots__ = ("ring", "key")

    def __init__(self, ring: LaurentRing, key: int = 0):
        self.ring = ring
        self.key = key

    def exponents(self) -> Dict[int, int]:
        """Map residue -> nonzero exponent."""
        return {i + 1: e for i, e in enumerate(self.ring.decode(self.key)) if e}

    def degree(self) -> int:
        return sum(self.ring.decode(self.key))

    def is_one(self) -> bool:
        return self.key == 0

    def __mul__(self, other):
        if isinstance(other, LMonomial):
            _check_ring(self, other)
            return LMonomial(self.ring, self.key + other.key)
        if isinstance(other, (LPoly, int)):
            return self.to_poly() * other
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, LMonomial):
            _check_ring(self, other)
            return LMonomial(self.ring, self.key - other.key)
        return NotImplemented

    def __rtruediv__(self, other):
        if other == 1:
            return self.inverse()
        return NotImplemented

    def inverse(self) -> "LMonomial":
        return LMonomial(self.ring, -self.key)

    def __pow__(self, e: int) -> "LMonomial":
        return LMonomial(self.ring, self.key * e)

    def __eq__(self, other):
        if isinstance(other, LMonomial):
            return self.ring.nvars == other.ring.nvars and self.key == other.key
        if isinstance(other, LPoly):
            return self.to_poly() == other
        if other == 1:
            return self.key == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.ring.nvars, self.key))

    def to_poly(self) -> "LPoly":
        return LPoly(self.ring, {self.key: 1})

    def evaluate(self, values: Mapping[int, Fraction]) -> Fraction:
        return self.to_poly().substitute(values)

    def __str__(self):
        return _mono_str(self.ring, self.ring.decode(self.key)) or "1"

    __repr__ = __str__


def mono_mul(a: LMonomial, b: LMonomial) -> LMonomial:
    return a * b


def mono_div(a: LMonomial, b: LMonomial) -> LMonomial:
    return a / b


def trop_add(a: LMonomial, b: LMonomial) -> LMonomial:
    """Tropical sum: exponent-wise minimum."""
    _check_ring(a, b)
    ring = a.ring
    ea, eb = ring.decode(a.key), ring.decode(b.key)
    return LMonomial(ring, ring.encode(min(x, y) for x, y in zip(ea, eb)))


def conv_range(a: int, b: int) -> List[Tuple[int, int]]:
    """Index/exponent pairs realising ``prod_{i=a}^{b} z_i`` under the convention
    that an empty range gives 1 and a reversed range gives reciprocals."""
    if b >= a - 1:
        return [(i, 1) for i in range(a, b + 1)]
    return [(i, -1) for i in range(b + 1, a)]


def range_product(ring: LaurentRing, j: int, a: int, b: int) -> LMonomial:
    """``prod_{i=a}^{b} y_{j+3i}`` with the extended product convention."""
    key = 0
    for i, e in conv_range(a, b):
        key += e * ring.var_key(j + 3 * i)
    return LMonomial(ring, key)


def _mono_str(ring: LaurentRing, exps: List[int]) -> str:
    parts = []
    for i in ring.display_order():
        e = exps[i]
        if e == 0:
            continue
        name = f"y{ring.label(i)}"
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


class LPoly:
    """Laurent polynomial with integer coefficients.

    ``terms`` maps packed monomial keys to nonzero ints.  Instances are treated
    as immutable once built.
    """

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: LaurentRing, terms: Optional[Dict[int, int]] = None):
        self.ring = ring
        self.terms = {k: c for k, c in (terms or {}).items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, ring, terms):
        p = cls.__new__(cls)
        p.ring = ring
        p.terms = terms
        p._hash = None
        return p

    # basic protocol ---------------------------------------------------------
    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def items(self) -> Iterator[Tuple[LMonomial, int]]:
        for k, c in self.terms.items():
            yield LMonomial(self.ring, k), c

    def coefficients(self) -> List[int]:
        return list(self.terms.values())

    def constant_term(self) -> int:
        return self.terms.get(0, 0)

    def __eq__(self, other):
        if isinstance(other, LPoly):
            return self.ring.nvars == other.ring.nvars and self.terms == other.terms
        if isinstance(other, LMonomial):
            return self == other.to_poly()
        if isinstance(other, int):
            return self.terms == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.nvars, frozenset(self.terms.items())))
        return self._hash

    # arithmetic -------------------------------------------------------------
    def _coerce(self, other) -> Optional["LPoly"]:
        if isinstance(other, LPoly):
            _check_ring(self, other)
            return other
        if isinstance(other, LMonomial):
            _check_ring(self, other)
            return other.to_poly()
        if isinstance(other, int):
            return self.ring.const(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        t = dict(self.terms)
        for k, c in o.terms.items():
            v = t.get(k, 0) + c
            if v:
                t[k] = v
            else:
                t.pop(k, None)
        return LPoly._raw(self.ring, t)

    __radd__ = __add__

    def __neg__(self):
        return LPoly._raw(self.ring, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.terms, o.terms
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            (kb, cb), = b.items()
            return LPoly._raw(self.ring, {k + kb: c * cb for k, c in a.items()})
        t: Dict[int, int] = {}
        get = t.get
        bl = list(b.items())
        for ka, ca in a.items():
            for kb, cb in bl:
                k = ka + kb
                t[k] = get(k, 0) + ca * cb
        return LPoly._raw(self.ring, {k: c for k, c in t.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            if self.is_monomial():
                (k, c), = self.terms.items()
                if c in (1, -1):
                    return LPoly._raw(self.ring, {-k * -e: c ** -e})
            raise ValueError("negative powers only exist for unit monomials")
        result = self.ring.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, int):
            if other == 0:
                raise ZeroDivisionError("division by zero polynomial")
            if any(c % other for c in self.terms.values()):
                raise NotDivisible("coefficients not divisible")
            return LPoly._raw(self.ring, {k: c // other for k, c in self.terms.items()})
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return poly_div_exact(self, o)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return poly_div_exact(o, self)

    # structure --------------------------------------------------------------
    def monomial_content(self) -> LMonomial:
        """Largest monomial dividing every term (exponent-wise minimum)."""
        ring = self.ring
        if not self.terms:
            return LMonomial(ring, 0)
        mins = None
        for k in self.terms:
            e = ring.decode(k)
            mins = e if mins is None else [min(x, y) for x, y in zip(mins, e)]
        return LMonomial(ring, ring.encode(mins))

    def content(self) -> int:
        return reduce(gcd, self.terms.values(), 0)

    def leading_key(self) -> int:
        return max(self.terms)

    def total_degrees(self) -> Tuple[int, int]:
        degs = [sum(self.ring.decode(k)) for k in self.terms]
        return min(degs), max(degs)

    def is_polynomial(self) -> bool:
        return all(self.ring.nonneg(k) for k in self.terms)

    def shift(self, s: int) -> "LPoly":
        """Substitute ``y_i -> y_{i+s}`` for every variable."""
        ring = self.ring
        nv = ring.nvars
        s %= nv
        if s == 0:
            return self
        t = {}
        for k, c in self.terms.items():
            e = ring.decode(k)
            t[ring.encode(e[-s:] + e[:-s])] = c
        return LPoly._raw(ring, t)

    def specialize(self, values: Mapping[int, int]) -> "LPoly":
        """Partial substitution of integer values (units only under negative powers)."""
        ring = self.ring
        vals = {ring.index(j): v for j, v in values.items()}
        t: Dict[int, int] = {}
        for k, c in self.terms.items():
            e = ring.decode(k)
            for i, v in vals.items():
                if e[i]:
                    if e[i] < 0 and v not in (1, -1):
                        if v == 0:
                            raise ZeroToNegativePower(f"y{ring.label(i)} = 0 under a negative power")
                        raise ValueError("specialising a negative power to a non-unit")
                    c *= v ** abs(e[i])
                    e[i] = 0
            if c:
                kk = ring.encode(e)
                t[kk] = t.get(kk, 0) + c
        return LPoly(ring, t)

    def substitute(self, values) -> Fraction:
        """Exact evaluation; ``values`` maps residues (any representative) to
        rationals, or is a sequence ``[v_1, ..., v_2n]``."""
        ring = self.ring
        if isinstance(values, Mapping):
            vals = {ring.index(j): Fraction(v) for j, v in values.items()}
        else:
            vals = {i: Fraction(v) for i, v in enumerate(values)}
        return _evaluate(self, vals)

    # printing ---------------------------------------------------------------
    def sorted_terms(self) -> List[Tuple[List[int], int]]:
        ring = self.ring
        order = ring.display_order()
        rows = [(ring.decode(k), c) for k, c in self.terms.items()]
        rows.sort(key=lambda r: (sum(r[0]), tuple(-r[0][i] for i in order)))
        return rows

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for exps, c in self.sorted_terms():
            m = _mono_str(self.ring, exps)
            if not m:
                out.append(str(c))
            elif c == 1:
                out.append(m)
            elif c == -1:
                out.append("-" + m)
            else:
                out.append(f"{c}*{m}")
        return " + ".join(out)

    def __repr__(self):
        return f"LPoly({self})"


def _evaluate(p: LPoly, vals: Dict[int, Fraction]) -> Fraction:
    # Common-denominator integer evaluation: every term times
    # prod_i b_i^{P_i} a_i^{N_i} is an integer, with P_i / N_i the largest
    # positive / negative exponent of variable i.
    ring = p.ring
    rows = [(ring.decode(k), c) for k, c in p.terms.items()]
    if not rows:
        return Fraction(0)
    used = {i for e, _ in rows for i, x in enumerate(e) if x}
    missing = used - vals.keys()
    if missing:
        raise KeyError(f"no value for y{ring.label(min(missing))}")
    P = {i: max(0, max(e[i] for e, _ in rows)) for i in used}
    N = {i: max(0, -min(e[i] for e, _ in rows)) for i in used}
    den = 1
    for i in used:
        a, b = vals[i].numerator, vals[i].denominator
        if a == 0 and N[i]:
            raise ZeroToNegativePower(f"y{ring.label(i)} = 0 under a negative power")
        den *= b ** P[i] * a ** N[i]
    apow: Dict[Tuple[int, int], int] = {}
    bpow: Dict[Tuple[int, int], int] = {}
    total = 0
    for e, c in rows:
        term = c
        for i in used:
            x = e[i] + N[i]
            y = P[i] - e[i]
            if x:
                v = apow.get((i, x))
                if v is None:
                    v = apow[(i, x)] = vals[i].numerator ** x
                term *= v
            if y:
                v = bpow.get((i, y))
                if v is None:
                    v = bpow[(i, y)] = vals[i].denominator ** y
                term *= v
        total += term
    return Fraction(total, den)


def substitute(p: LPoly, assignment) -> Fraction:
    return p.substitute(assignment)


def poly_div_exact(p: LPoly, q: LPoly) -> LPoly:
    """The Laurent polynomial ``r`` with ``r * q == p``; NotDivisible otherwise."""
    _check_ring(p, q)
    ring = p.ring
    if not q.terms:
        raise ZeroDivisionError("division by zero polynomial")
    if not p.terms:
        return ring.zero()
    if len(q.terms) == 1:
        (kq, cq), = q.terms.items()
        if any(c % cq for c in p.terms.values()):
            raise NotDivisible("coefficient not divisible")
        return LPoly._raw(ring, {k - kq: c // cq for k, c in p.terms.items()})
    # Reduce to polynomials: strip the monomial content of both sides.
    mq = q.monomial_content().key
    mp = p.monomial_content().key
    q0 = {k - mq: c for k, c in q.terms.items()}
    r = {k - mp: c for k, c in p.terms.items()}
    lq = max(q0)
    cq = q0[lq]
    qitems = [(k, c) for k, c in q0.items()]
    heap = [-k for k in r]
    heapq.heapify(heap)
    quot: Dict[int, int] = {}
    g = ring._guard
    while heap:
        k = -heapq.heappop(heap)
        c = r.get(k)
        if not c:
            continue
        t = k - lq
        if t < 0 or (t + g) & g != g:
            raise NotDivisible("leading term not divisible")
        qc, rem = divmod(c, cq)
        if rem:
            raise NotDivisible("coefficient not divisible")
        quot[t] = qc
        for b, cb in qitems:
            kk = t + b
            old = r.get(kk)
            v = (old or 0) - qc * cb
            if v:
                if old is None:
                    heapq.heappush(heap, -kk)
                r[kk] = v
            elif old is not None:
                del r[kk]
    shift = mp - mq
    return LPoly._raw(ring, {k + shift: c for k, c in quot.items()})


def divides(q: LPoly, p: LPoly) -> Optional[LPoly]:
    """Quotient ``p / q`` when exact, else None."""
    try:
        return poly_div_exact(p, q)
    except NotDivisible:
        return None


_TERM = re.compile(r"^(?:(?P<coef>[+-]?\d+)(?:\*(?P<rest1>.+))?|(?P<sign>-)?(?P<rest2>y.+))$")
_FACTOR = re.compile(r"^y(?P<label>-?\d+)(?:\^(?P<exp>-?\d+))?$")


def parse_poly(ring: LaurentRing, text: str) -> LPoly:
    """Inverse of ``str(LPoly)``; residues may be given by any representative."""
    text = text.strip()
    if text == "0":
        return ring.zero()
    terms: Dict[int, int] = {}
    for chunk in re.split(r"\s+\+\s+", text):
        m = _TERM.match(chunk.strip())
        if not m:
            raise ParseError(f"cannot parse term {chunk!r}")
        if m.group("coef") is not None:
            coef = int(m.group("coef"))
            rest = m.group("rest1")
        else:
            coef = -1 if m.group("sign") else 1
            rest = m.group("rest2")
        key = 0
        if rest:
            for factor in rest.split("*"):
                fm = _FACTOR.match(factor)
                if not fm:
                    raise ParseError(f"cannot parse factor {factor!r}")
                e = int(fm.group("exp") or 1)
                key += e * ring.var_key(int(fm.group("label")))
        terms[key] = terms.get(key, 0) + coef
    return LPoly(ring, terms)
