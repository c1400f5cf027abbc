"""Exact closed-form constants.

A :class:`SymbolicConstant` is a finite sum of monomials

    q * 2^(a/6) * 3^(b/6) * pi^(c/2) * Gamma(1/3)^d

with ``q`` rational.  Integer powers of 2 and 3 are folded into ``q`` so that
``a`` and ``b`` always lie in ``0..5``; Gamma(2/3) is rewritten through the
reflection formula Gamma(1/3) Gamma(2/3) = 2 pi / sqrt(3).  With these two
rules the term list is canonical and equality is structural.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Dict, Iterable, Tuple, Union

import mpmath

Signature = Tuple[int, int, int, int]
Number = Union[int, Fraction]


class PoleError(ValueError):
    """Gamma evaluated at a non-positive integer."""


def _fold(q: Fraction, a: int, b: int) -> Tuple[Fraction, int, int]:
    qa, a = divmod(a, 6)
    qb, b = divmod(b, 6)
    if qa:
        q = q * Fraction(2) ** qa
    if qb:
        q = q * Fraction(3) ** qb
    return q, a, b


class SymbolicConstant:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Iterable[Tuple[Number, int, int, int, int]] = ()):
        acc: Dict[Signature, Fraction] = {}
        for q, a, b, c, d in terms:
            q = Fraction(q)
            if q == 0:
                continue
            q, a, b = _fold(q, int(a), int(b))
            key = (a, b, int(c), int(d))
            acc[key] = acc.get(key, Fraction(0)) + q
        self._terms = tuple(sorted((k, v) for k, v in acc.items() if v != 0))
        self._hash = None

    # construction helpers
    @classmethod
    def rational(cls, q: Number) -> "SymbolicConstant":
        return cls([(q, 0, 0, 0, 0)])

    @classmethod
    def monomial(cls, q: Number = 1, a: int = 0, b: int = 0, c: int = 0, d: int = 0) -> "SymbolicConstant":
        return cls([(q, a, b, c, d)])

    @classmethod
    def coerce(cls, x) -> "SymbolicConstant":
        if isinstance(x, SymbolicConstant):
            return x
        if isinstance(x, (int, Fraction)):
            return cls.rational(x)
        raise TypeError(f"cannot convert {type(x).__name__} to SymbolicConstant")

    @property
    def terms(self) -> Tuple[Tuple[Fraction, int, int, int, int], ...]:
        return tuple((q, a, b, c, d) for (a, b, c, d), q in self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_rational(self) -> bool:
        return self.is_zero() or (len(self._terms) == 1 and self._terms[0][0] == (0, 0, 0, 0))

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self._terms[0][1] if self._terms else Fraction(0)

    # arithmetic
    def __add__(self, other):
        try:
            other = SymbolicConstant.coerce(other)
        except TypeError:
            return NotImplemented
        return SymbolicConstant(list(self.terms) + list(other.terms))

    __radd__ = __add__

    def __neg__(self):
        return SymbolicConstant((-q, a, b, c, d) for q, a, b, c, d in self.terms)

    def __sub__(self, other):
        try:
            other = SymbolicConstant.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return SymbolicConstant.coerce(other) - self

    def __mul__(self, other):
        try:
            other = SymbolicConstant.coerce(other)
        except TypeError:
            return NotImplemented
        out = []
        for q1, a1, b1, c1, d1 in self.terms:
            for q2, a2, b2, c2, d2 in other.terms:
                out.append((q1 * q2, a1 + a2, b1 + b2, c1 + c2, d1 + d2))
        return SymbolicConstant(out)

    __rmul__ = __mul__

    def reciprocal(self) -> "SymbolicConstant":
        """Inverse of a single monomial.  Sums are not invertible in the lattice."""
        if not self.is_monomial():
            raise ZeroDivisionError("only monomials can be inverted") if self.is_zero() \
                else ValueError(f"cannot invert multi-term constant {self}")
        q, a, b, c, d = self.terms[0]
        # 2^(a/6) -> 2^(-a/6) = 2^((6-a)/6) / 2, handled by folding
        return SymbolicConstant([(1 / q, -a, -b, -c, -d)])

    def __truediv__(self, other):
        try:
            other = SymbolicConstant.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        return SymbolicConstant.coerce(other) * self.reciprocal()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.reciprocal() ** (-n)
        out = SymbolicConstant.rational(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        try:
            other = SymbolicConstant.coerce(other)
        except TypeError:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    # numerics
    def to_mpf(self, precision: int = 30):
        if precision < 15:
            raise ValueError("precision must be at least 15 digits")
        with mpmath.workdps(precision + 5):
            g = mpmath.gamma(mpmath.mpf(1) / 3)
            pi = mpmath.pi
            s = mpmath.mpf(0)
            for q, a, b, c, d in self.terms:
                s += (mpmath.mpf(q.numerator) / q.denominator
                      * mpmath.power(2, mpmath.mpf(a) / 6)
                      * mpmath.power(3, mpmath.mpf(b) / 6)
                      * mpmath.power(pi, mpmath.mpf(c) / 2)
                      * g ** d)
            return +s

    def to_float(self, precision: int = 30):
        """High-precision value (an mpmath ``mpf``) good to ``precision`` digits."""
        return self.to_mpf(precision)

    def __float__(self):
        return float(self.to_mpf(20))

    # text form
    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for q, a, b, c, d in self.terms:
            parts.append(f"{q} * 2^({a}/6) * 3^({b}/6) * pi^({c}/2) * Gamma(1/3)^{d}")
        return " + ".join(parts)

    def __repr__(self):
        return f"SymbolicConstant({str(self)!r})"

    def pretty(self) -> str:
        """Compact human-readable rendering; not meant to be parsed."""
        if not self._terms:
            return "0"
        out = []
        for q, a, b, c, d in self.terms:
            f = [str(q)] if (q != 1 or (a, b, c, d) == (0, 0, 0, 0)) else []
            if a:
                f.append("2^(%s)" % Fraction(a, 6))
            if b:
                f.append("3^(%s)" % Fraction(b, 6))
            if c:
                f.append("pi" if c == 2 else "pi^(%s)" % Fraction(c, 2))
            if d:
                f.append("Gamma(1/3)" if d == 1 else "Gamma(1/3)^(%d)" % d)
            out.append("*".join(f))
        return " + ".join(out).replace("+ -", "- ")


_TERM_RE = re.compile(
    r"^\s*(-?\d+(?:/\d+)?)\s*\*\s*2\^\((-?\d+)/6\)\s*\*\s*3\^\((-?\d+)/6\)"
    r"\s*\*\s*pi\^\((-?\d+)/2\)\s*\*\s*Gamma\(1/3\)\^(-?\d+)\s*$")


def parse(text: str) -> SymbolicConstant:
    """Inverse of ``str(SymbolicConstant)``."""
    text = text.strip()
    if text == "0":
        return SymbolicConstant()
    terms = []
    for chunk in text.split(" + "):
        m = _TERM_RE.match(chunk)
        if not m:
            raise ValueError(f"unparseable term: {chunk!r}")
        q, a, b, c, d = m.groups()
        terms.append((Fraction(q), int(a), int(b), int(c), int(d)))
    return SymbolicConstant(terms)


def add(x, y) -> SymbolicConstant:
    return SymbolicConstant.coerce(x) + SymbolicConstant.coerce(y)


def mul(x, y) -> SymbolicConstant:
    return SymbolicConstant.coerce(x) * SymbolicConstant.coerce(y)


def to_float(x, precision: int = 30):
    return SymbolicConstant.coerce(x).to_float(precision)


ONE = SymbolicConstant.rational(1)
ZERO = SymbolicConstant()
PI = SymbolicConstant.monomial(c=2)
SQRT_PI = SymbolicConstant.monomial(c=1)
SQRT2 = SymbolicConstant.monomial(a=3)
SQRT3 = SymbolicConstant.monomial(b=3)
GAMMA_1_3 = SymbolicConstant.monomial(d=1)
# reflection: Gamma(2/3) = 2 pi 3^(-1/2) / Gamma(1/3)
GAMMA_2_3 = SymbolicConstant.monomial(2, b=-3, c=2, d=-1)


def pow2(e: Fraction) -> SymbolicConstant:
    """2**e for e a multiple of 1/6."""
    e6 = Fraction(e) * 6
    if e6.denominator != 1:
        raise ValueError(f"exponent {e} is not a multiple of 1/6")
    return SymbolicConstant.monomial(a=int(e6))


def pow3(e: Fraction) -> SymbolicConstant:
    e6 = Fraction(e) * 6
    if e6.denominator != 1:
        raise ValueError(f"exponent {e} is not a multiple of 1/6")
    return SymbolicConstant.monomial(b=int(e6))


def pow_pi(e: Fraction) -> SymbolicConstant:
    e2 = Fraction(e) * 2
    if e2.denominator != 1:
        raise ValueError(f"exponent {e} is not a multiple of 1/2")
    return SymbolicConstant.monomial(c=int(e2))


def gamma_half_integer(x) -> SymbolicConstant:
    """Gamma(x) for x an integer or half an odd integer."""
    x = Fraction(x)
    if x.denominator == 1:
        n = x.numerator
        if n <= 0:
            raise PoleError(f"Gamma has a pole at {n}")
        return SymbolicConstant.rational(math.factorial(n - 1))
    if x.denominator != 2:
        raise ValueError(f"{x} is not a half-integer")
    # Gamma(1/2 + n) = sqrt(pi) * prod_{i<n} (1/2 + i), also for n < 0
    q = Fraction(1)
    h = Fraction(1, 2)
    while h < x:
        q *= h
        h += 1
    while h > x:
        h -= 1
        q /= h
    return SymbolicConstant.monomial(q, c=1)


def gamma_third(x) -> SymbolicConstant:
    """Gamma(x) for x in (1/3)Z, using the Gamma(1/3), Gamma(2/3) bases."""
    x = Fraction(x)
    if x.denominator == 1:
        return gamma_half_integer(x)
    if x.denominator != 3:
        raise ValueError(f"{x} is not a multiple of 1/3")
    base_arg = x - (x.numerator // 3)  # 1/3 or 2/3
    base = GAMMA_1_3 if base_arg == Fraction(1, 3) else GAMMA_2_3
    q = Fraction(1)
    h = base_arg
    while h < x:
        q *= h
        h += 1
    while h > x:
        h -= 1
        q /= h
    return base * q
