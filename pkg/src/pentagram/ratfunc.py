"""Rational functions over the Laurent ring, kept in partially factored form.

A value is ``coef * y^mono * prod(num) / prod(den)`` where ``num`` and ``den``
are multisets of normalized polynomial factors (no monomial content, coprime
integer coefficients, positive leading coefficient).  Multiplication only
merges multisets; addition expands and then tries exact division by known
factors, so expressions built from the Y-pattern stay small.
"""
from __future__ import annotations

from collections import Counter
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Tuple

from .errors import DenominatorVanishes, NotDivisible
from .laurent import LaurentRing, LMonomial, LPoly, poly_div_exact


def normalize_factor(p: LPoly) -> Tuple[Fraction, int, Optional[LPoly]]:
    """Split ``p`` as ``c * y^m * f`` with ``f`` normalized (None when constant)."""
    if p.is_zero():
        raise ZeroDivisionError("zero polynomial has no normal form")
    m = p.monomial_content().key
    g = p.content()
    lead = p.terms[max(p.terms)]
    if lead < 0:
        g = -g
    terms = {k - m: c // g for k, c in p.terms.items()}
    if len(terms) == 1:
        return Fraction(g), m, None
    return Fraction(g), m, LPoly(p.ring, terms)


class RatFunc:
    __slots__ = ("ring", "coef", "mono", "num", "den")

    def __init__(self, ring: LaurentRing, coef=1, mono: int = 0, num=None, den=None):
        self.ring = ring
        self.coef = Fraction(coef)
        self.mono = mono
        self.num: Counter = Counter(num or {})
        self.den: Counter = Counter(den or {})
        self._cancel()

    # construction -----------------------------------------------------------
    @classmethod
    def of(cls, ring: LaurentRing, value) -> "RatFunc":
        if isinstance(value, RatFunc):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(ring, value)
        if isinstance(value, LMonomial):
            return cls(ring, 1, value.key)
        if isinstance(value, LPoly):
            if value.is_zero():
                return cls(ring, 0)
            c, m, f = normalize_factor(value)
            return cls(ring, c, m, {f: 1} if f is not None else None)
        raise TypeError(f"cannot convert {value!r} to a rational function")

    @classmethod
    def var(cls, ring: LaurentRing, j: int) -> "RatFunc":
        return cls(ring, 1, ring.var_key(j))

    def _cancel(self):
        if self.coef == 0:
            self.mono = 0
            self.num.clear()
            self.den.clear()
            return
        for f in list(self.num):
            if f in self.den:
                c = min(self.num[f], self.den[f])
                self.num[f] -= c
                self.den[f] -= c
        self.num = +self.num
        self.den = +self.den

    def _reduce(self) -> None:
        """Cancel factors that divide one another across numerator and denominator."""
        changed = True
        while changed:
            changed = False
            for f in list(self.num):
                for g in list(self.den):
                    if not (self.num[f] and self.den[g]):
                        continue
                    top = len(f) >= len(g)
                    big, small = (f, g) if top else (g, f)
                    try:
                        q = poly_div_exact(big, small)
                    except NotDivisible:
                        continue
                    c, m, h = normalize_factor(q)
                    self.num[f] -= 1
                    self.den[g] -= 1
                    if top:
                        self.coef *= c
                        self.mono += m
                        if h is not None:
                            self.num[h] += 1
                    else:
                        self.coef /= c
                        self.mono -= m
                        if h is not None:
                            self.den[h] += 1
                    self._cancel()
                    changed = True
                    break
                if changed:
                    break

    def _coerce(self, other) -> Optional["RatFunc"]:
        if isinstance(other, RatFunc):
            if other.ring.nvars != self.ring.nvars:
                raise ValueError("operands live in different rings")
            return other
        if isinstance(other, (int, Fraction, LMonomial, LPoly)):
            return RatFunc.of(self.ring, other)
        return None

    # arithmetic -------------------------------------------------------------
    def is_zero(self) -> bool:
        return self.coef == 0

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero() or o.is_zero():
            return RatFunc(self.ring, 0)
        return RatFunc(self.ring, self.coef * o.coef, self.mono + o.mono,
                       self.num + o.num, self.den + o.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFunc(self.ring, 1 / self.coef, -self.mono, self.den, self.num)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int) -> "RatFunc":
        if e < 0:
            return self.inverse() ** (-e)
        if e == 0:
            return RatFunc(self.ring, 1)
        return RatFunc(self.ring, self.coef ** e, self.mono * e,
                       {f: c * e for f, c in self.num.items()},
                       {f: c * e for f, c in self.den.items()})

    def __neg__(self):
        r = RatFunc(self.ring, -self.coef, self.mono, self.num, self.den)
        return r

    def add(self, other, hints: Iterable[LPoly] = ()) -> "RatFunc":
        """Sum; the expanded numerator is trial-divided by denominator factors and ``hints``."""
        o = self._coerce(other)
        if self.is_zero():
            return o
        if o.is_zero():
            return self
        den = self.den | o.den
        # common monomial: exponent-wise minimum keeps both numerators polynomial
        ring = self.ring
        ea, eb = ring.decode(self.mono), ring.decode(o.mono)
        mono = ring.encode(min(x, y) for x, y in zip(ea, eb))
        q = self.coef.denominator * o.coef.denominator
        pa = _expand(ring, (self.num + (den - self.den)), self.mono - mono) * int(self.coef * q)
        pb = _expand(ring, (o.num + (den - o.den)), o.mono - mono) * int(o.coef * q)
        total = pa + pb
        if total.is_zero():
            return RatFunc(ring, 0)
        c, m, f = normalize_factor(total)
        num = Counter()
        if f is not None:
            for h in list(den) + [normalize_factor(h)[2] for h in hints]:
                if h is None:
                    continue
                while len(f.terms) >= len(h.terms):
                    try:
                        f = poly_div_exact(f, h)
                    except NotDivisible:
                        break
                    num[h] += 1
                    c2, m2, f = normalize_factor(f)
                    c *= c2
                    m += m2
                    if f is None:
                        break
                if f is None:
                    break
            if f is not None:
                num[f] += 1
        return RatFunc(ring, c / q, mono + m, num, den)

    def __add__(self, other):
        if self._coerce(other) is None:
            return NotImplemented
        return self.add(other)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.add(-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o.add(-self)

    # comparison -------------------------------------------------------------
    def expand(self) -> Tuple[LPoly, LPoly]:
        """``(numerator, denominator)`` as Laurent polynomials, denominator a polynomial."""
        ring = self.ring
        q = self.coef.denominator
        num = _expand(ring, self.num, self.mono) * self.coef.numerator
        den = _expand(ring, self.den, 0) * q
        return num, den

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero() or o.is_zero():
            return self.is_zero() and o.is_zero()
        a = RatFunc(self.ring, self.coef, self.mono, self.num + o.den, self.den + o.num)
        a.coef /= o.coef
        a.mono -= o.mono
        a._reduce()
        if not a.num and not a.den:
            return a.coef == 1 and a.mono == 0
        n, d = a.expand()
        return n == d

    def __hash__(self):
        raise TypeError("RatFunc is not hashable")

    def evaluate(self, values) -> Fraction:
        v = self.coef * LMonomial(self.ring, self.mono).to_poly().substitute(values)
        for f, c in self.num.items():
            v *= f.substitute(values) ** c
        for f, c in self.den.items():
            d = f.substitute(values)
            if d == 0:
                raise DenominatorVanishes(f"factor {f} vanishes")
            v /= d ** c
        return v

    def as_lpoly(self) -> Optional[LPoly]:
        """The Laurent polynomial this equals, if the denominator cancels."""
        n, d = self.expand()
        try:
            return poly_div_exact(n, d)
        except NotDivisible:
            return None

    def __repr__(self):
        n, d = self.expand()
        return f"RatFunc(({n}) / ({d}))"


def _expand(ring: LaurentRing, factors: Mapping[LPoly, int], mono: int) -> LPoly:
    p = LPoly(ring, {mono: 1})
    for f, c in sorted(factors.items(), key=lambda fc: len(fc[0])):
        for _ in range(c):
            p = p * f
    return p
