"""Reduced rational functions in x, y, z over the rationals.

Canonical form: gcd(num, den) = 1 and the denominator is integer-primitive
with positive leading coefficient under graded lex x > y > z, so structural
equality is mathematical equality.  The zero function is (0, 1).

Arithmetic keeps operands reduced the classical way (cancel cross-gcds
before multiplying out), which avoids the large gcd a blunt normalization
of the raw sum or product would need.
"""

from __future__ import annotations

from fractions import Fraction

from .polys import MultiPoly, ShiftVector

_ONE = MultiPoly.one()
_ZERO = MultiPoly.zero()


def _as_poly(v) -> MultiPoly:
    if isinstance(v, MultiPoly):
        return v
    if isinstance(v, (int, Fraction)):
        return MultiPoly.from_dict({(0, 0, 0): Fraction(v)}) if v else _ZERO
    raise TypeError(f"cannot interpret {v!r} as a polynomial")


class RatFunc:
    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num = _as_poly(num)
        if isinstance(den, int) and den == 1:
            self.num = num
            self.den = _ONE
            return
        den = _as_poly(den)
        if den.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        if num.is_zero:
            self.num = _ZERO
            self.den = _ONE
            return
        n, d = num._p.cancel(den._p)
        num, den = MultiPoly(n), MultiPoly(d)
        c, den = den.content_and_primitive()
        if c != 1:
            num = num * (1 / Fraction(c))
        self.num = num
        self.den = den

    @classmethod
    def _reduced(cls, num: MultiPoly, den: MultiPoly) -> "RatFunc":
        """Trusted constructor: gcd(num, den) = 1 and den canonical."""
        r = cls.__new__(cls)
        if num.is_zero:
            r.num = _ZERO
            r.den = _ONE
        else:
            r.num = num
            r.den = den
        return r

    @classmethod
    def zero(cls) -> "RatFunc":
        return cls._reduced(_ZERO, _ONE)

    @classmethod
    def one(cls) -> "RatFunc":
        return cls._reduced(_ONE, _ONE)

    @classmethod
    def variable(cls, name: str) -> "RatFunc":
        return cls._reduced(MultiPoly.variable(name), _ONE)

    # -- inspection ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __bool__(self) -> bool:
        return not self.num.is_zero

    def involves(self, var: str) -> bool:
        return self.num.involves(var) or self.den.involves(var)

    def is_polynomial(self) -> bool:
        return self.den == _ONE

    def as_poly(self) -> MultiPoly:
        if not self.is_polynomial():
            raise ValueError("not a polynomial")
        return self.num

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self) -> Fraction:
        return self.num.constant_value() / self.den.constant_value()

    def evaluate(self, point) -> Fraction:
        d = self.den.evaluate(point)
        if d == 0:
            raise ZeroDivisionError("evaluation at a pole")
        return self.num.evaluate(point) / d

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction, MultiPoly)):
            return RatFunc(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero:
            return o
        if o.is_zero:
            return self
        d1, d2 = self.den, o.den
        if d1 == _ONE and d2 == _ONE:
            return RatFunc._reduced(self.num + o.num, _ONE)
        if d1 == d2:
            num = self.num + o.num
            if num.is_zero:
                return RatFunc.zero()
            h = num.gcd(d1)
            if h.is_constant():
                return RatFunc._reduced(num, d1)
            return RatFunc._reduced(num.divide_exact(h), d1.divide_exact(h))
        g = d1.gcd(d2)
        if g.is_constant():
            num = self.num * d2 + o.num * d1
            return RatFunc._reduced(num, d1 * d2)
        d1r = d1.divide_exact(g)
        d2r = d2.divide_exact(g)
        num = self.num * d2r + o.num * d1r
        if num.is_zero:
            return RatFunc.zero()
        h = num.gcd(g)
        if h.is_constant():
            return RatFunc._reduced(num, d1 * d2r)
        return RatFunc._reduced(num.divide_exact(h), d1.divide_exact(h) * d2r)

    __radd__ = __add__

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
        if self.is_zero or o.is_zero:
            return RatFunc.zero()
        d1, d2 = self.den, o.den
        n1, n2 = self.num, o.num
        if d1 == _ONE and d2 == _ONE:
            return RatFunc._reduced(n1 * n2, _ONE)
        if d2 != _ONE:
            g1 = n1.gcd(d2)
            if not g1.is_constant():
                n1 = n1.divide_exact(g1)
                d2 = d2.divide_exact(g1)
        if d1 != _ONE:
            g2 = n2.gcd(d1)
            if not g2.is_constant():
                n2 = n2.divide_exact(g2)
                d1 = d1.divide_exact(g2)
        return RatFunc._reduced(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def reciprocal(self) -> "RatFunc":
        if self.is_zero:
            raise ZeroDivisionError("reciprocal of zero")
        c, prim = self.num.content_and_primitive()
        return RatFunc._reduced(self.den * (1 / Fraction(c)), prim)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.reciprocal()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.reciprocal()

    def __neg__(self):
        return RatFunc._reduced(-self.num, self.den)

    def __pow__(self, n: int):
        if n == 0:
            return RatFunc.one()
        if n < 0:
            return self.reciprocal() ** (-n)
        return RatFunc._reduced(self.num ** n, self.den ** n)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def shift(self, by) -> "RatFunc":
        """Substitute v -> v + step componentwise with integer steps;
        integer shifts preserve the canonical form."""
        return RatFunc._reduced(self.num.shift(by), self.den.shift(by))

    def substitute(self, var: str, value) -> "RatFunc":
        den = self.den.substitute(var, value)
        if den.is_zero:
            raise ZeroDivisionError("substitution lands on a denominator zero")
        return RatFunc(self.num.substitute(var, value), den)

    def __str__(self):
        from .parsing import format_ratfunc
        return format_ratfunc(self)

    __repr__ = __str__


def delta(f: RatFunc, var: str) -> RatFunc:
    """Forward difference f(.. v+1 ..) - f."""
    step = {"x": (1, 0, 0), "y": (0, 1, 0), "z": (0, 0, 1)}[var]
    return f.shift(step) - f


def telescoping_sum(g: RatFunc, var: str, n: int) -> RatFunc:
    """T with shift^n(g) - g = delta_var(T); the usual split telescoping sum."""
    step = {"x": ShiftVector(1, 0, 0), "y": ShiftVector(0, 1, 0), "z": ShiftVector(0, 0, 1)}[var]
    acc = RatFunc.zero()
    if n >= 0:
        for i in range(n):
            acc = acc + g.shift(step * i)
    else:
        for i in range(1, -n + 1):
            acc = acc - g.shift(step * (-i))
    return acc
