"""Exact sparse polynomials over Q in the fixed variables x, y, z.

MultiPoly is a thin immutable wrapper around a sympy sparse ring element
(graded-lex order with x > y > z, gmp-backed rationals), which supplies the
heavy arithmetic: multiplication, gcd, exact division and factorization.
Everything the rest of the package needs — shifts by (possibly rational)
step vectors, per-variable coefficient extraction, content/primitive
normalization, homogeneous slices — lives here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Iterable, Optional

from sympy import Poly as _SymPoly
from sympy import Rational as _SymRational
from sympy import symbols as _symbols
from sympy.polys.domains import QQ as _QQ
from sympy.polys.orderings import grlex as _grlex
from sympy.polys.rings import ring as _ring

VARS = ("x", "y", "z")
VAR_INDEX = {"x": 0, "y": 1, "z": 2}

_RING, _GX, _GY, _GZ = _ring("x,y,z", _QQ, order=_grlex)
_GENS = (_GX, _GY, _GZ)
_SYMS = _symbols("x y z")


def _to_qq(c):
    if isinstance(c, Fraction):
        return _QQ(c.numerator, c.denominator)
    if isinstance(c, int):
        return _QQ(c)
    return _QQ(c)


def _to_fraction(c) -> Fraction:
    return Fraction(int(c.numerator), int(c.denominator))


class MultiPoly:
    """Canonical sparse polynomial in x, y, z with rational coefficients."""

    __slots__ = ("_p",)

    def __init__(self, p):
        if isinstance(p, MultiPoly):
            self._p = p._p
        elif isinstance(p, (int, Fraction)):
            self._p = _RING.from_dict({(0, 0, 0): _to_qq(p)}) if p else _RING.zero
        else:
            self._p = p  # a ring element; internal constructors only

    @classmethod
    def from_dict(cls, d: dict) -> "MultiPoly":
        return cls(_RING.from_dict({tuple(e): _to_qq(c) for e, c in d.items() if c}))

    @classmethod
    def variable(cls, name: str) -> "MultiPoly":
        return cls(_GENS[VAR_INDEX[name]])

    @classmethod
    def zero(cls) -> "MultiPoly":
        return cls(_RING.zero)

    @classmethod
    def one(cls) -> "MultiPoly":
        return cls(_RING.one)

    # -- inspection ---------------------------------------------------------

    def terms(self) -> dict:
        """Mapping exponent triple -> nonzero Fraction coefficient."""
        return {e: _to_fraction(c) for e, c in self._p.terms()}

    @property
    def is_zero(self) -> bool:
        return not self._p

    def __bool__(self) -> bool:
        return bool(self._p)

    def is_constant(self) -> bool:
        return not self._p or self._p.is_ground

    def constant_value(self) -> Fraction:
        if not self._p:
            return Fraction(0)
        if not self._p.is_ground:
            raise ValueError("polynomial is not constant")
        return _to_fraction(self._p.coeff(1))

    def degree(self, var: str) -> int:
        """Degree in one variable; the zero polynomial reports -1."""
        if not self._p:
            return -1
        return int(self._p.degree(_GENS[VAR_INDEX[var]]))

    def total_degree(self) -> int:
        if not self._p:
            return -1
        return max(sum(e) for e in self._p.monoms())

    def involves(self, var: str) -> bool:
        return self.degree(var) > 0

    def leading_coeff(self) -> Fraction:
        """Leading coefficient in the graded-lex order x > y > z."""
        if not self._p:
            return Fraction(0)
        return _to_fraction(self._p.LC)

    def homogeneous_part(self, k: int) -> "MultiPoly":
        return MultiPoly(_RING.from_dict(
            {e: c for e, c in self._p.terms() if sum(e) == k}))

    def coeffs_in(self, var: str) -> list:
        """Coefficients [c_0, ..., c_d] of this polynomial viewed in `var`.

        Each c_i is a MultiPoly in the remaining variables.
        """
        idx = VAR_INDEX[var]
        d = max(self.degree(var), 0)
        buckets: list[dict] = [{} for _ in range(d + 1)]
        for e, c in self._p.terms():
            e2 = list(e)
            k = e2[idx]
            e2[idx] = 0
            buckets[k][tuple(e2)] = c
        return [MultiPoly(_RING.from_dict(b)) for b in buckets]

    def evaluate(self, point: Iterable) -> Fraction:
        if not self._p:
            return Fraction(0)
        vals = [_to_qq(Fraction(v)) for v in point]
        r = self._p.evaluate(list(zip(_GENS, vals)))
        return _to_fraction(r)

    def substitute(self, var: str, value) -> "MultiPoly":
        """Partial evaluation: replace one variable by a rational constant."""
        idx = VAR_INDEX[var]
        val = Fraction(value)
        out: dict = {}
        for e, c in self.terms().items():
            e2 = list(e)
            k = e2[idx]
            e2[idx] = 0
            key = tuple(e2)
            out[key] = out.get(key, Fraction(0)) + c * val ** k
        return MultiPoly.from_dict(out)

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            return other._p
        if isinstance(other, (int, Fraction)):
            return _RING.ground_new(_to_qq(other))
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return MultiPoly(self._p + o) if o is not NotImplemented else NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return MultiPoly(self._p - o) if o is not NotImplemented else NotImplemented

    def __rsub__(self, other):
        o = self._coerce(other)
        return MultiPoly(o - self._p) if o is not NotImplemented else NotImplemented

    def __mul__(self, other):
        o = self._coerce(other)
        return MultiPoly(self._p * o) if o is not NotImplemented else NotImplemented

    __rmul__ = __mul__

    def __neg__(self):
        return MultiPoly(-self._p)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        return MultiPoly(self._p ** n)

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self._p == other._p
        if isinstance(other, (int, Fraction)):
            return self._p == self._coerce(other)
        return NotImplemented

    def __hash__(self):
        return hash(self._p)

    def sort_key(self):
        """Deterministic total-order key (degree, then term list)."""
        return (self.total_degree(), sorted(self._p.terms()))

    # -- calculus and shifts ------------------------------------------------

    def diff(self, var: str) -> "MultiPoly":
        return MultiPoly(self._p.diff(_GENS[VAR_INDEX[var]]))

    def shift(self, by) -> "MultiPoly":
        """Substitute x -> x+m, y -> y+n, z -> z+k.

        Steps may be ints or Fractions; the exact binomial expansion is done
        by the underlying ring composition.
        """
        steps = _shift_components(by)
        p = self._p
        for g, s in zip(_GENS, steps):
            if s:
                p = p.compose(g, g + _RING.ground_new(_to_qq(s)))
        return MultiPoly(p)

    def gcd(self, other: "MultiPoly") -> "MultiPoly":
        g = MultiPoly(self._p.gcd(other._p))
        if not g:
            return g
        return g.primitive_part()

    def divide_exact(self, other: "MultiPoly") -> "MultiPoly":
        q, r = divmod(self._p, other._p)
        if r:
            raise ValueError("inexact polynomial division")
        return MultiPoly(q)

    def divides(self, other: "MultiPoly") -> bool:
        if not self._p:
            return not other._p
        return not divmod(other._p, self._p)[1]

    # -- normalization ------------------------------------------------------

    def content_and_primitive(self) -> tuple[Fraction, "MultiPoly"]:
        """Write self = c * p with p integer-primitive, positive leading
        coefficient under graded lex.  The zero polynomial gives (0, 0)."""
        if not self._p:
            return Fraction(0), self
        den = 1
        num_gcd = 0
        for _, c in self._p.terms():
            den = den * int(c.denominator) // _gcd_int(den, int(c.denominator))
            num_gcd = _gcd_int(num_gcd, int(c.numerator))
        content = Fraction(num_gcd, den)
        if self.leading_coeff() < 0:
            content = -content
        prim = MultiPoly(self._p * _to_qq(1 / content))
        return content, prim

    def primitive_part(self) -> "MultiPoly":
        return self.content_and_primitive()[1]

    def __str__(self):
        from .parsing import format_poly
        return format_poly(self)

    __repr__ = __str__


def _gcd_int(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def _shift_components(by):
    if isinstance(by, ShiftVector):
        return (by.m, by.n, by.k)
    t = tuple(by)
    if len(t) != 3:
        raise ValueError("shift needs three components")
    return t


@dataclass(frozen=True)
class ShiftVector:
    """Integer shift (m, n, k): steps in x, y and z respectively."""

    m: int
    n: int
    k: int

    def __add__(self, other: "ShiftVector") -> "ShiftVector":
        return ShiftVector(self.m + other.m, self.n + other.n, self.k + other.k)

    def __sub__(self, other: "ShiftVector") -> "ShiftVector":
        return ShiftVector(self.m - other.m, self.n - other.n, self.k - other.k)

    def __neg__(self) -> "ShiftVector":
        return ShiftVector(-self.m, -self.n, -self.k)

    def __mul__(self, s: int) -> "ShiftVector":
        return ShiftVector(self.m * s, self.n * s, self.k * s)

    __rmul__ = __mul__

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.m, self.n, self.k)

    def is_zero(self) -> bool:
        return self.m == 0 and self.n == 0 and self.k == 0

    def supported_on(self, axes) -> bool:
        comp = dict(zip(VARS, self.as_tuple()))
        return all(comp[v] == 0 for v in VARS if v not in axes)

    def __str__(self):
        return f"({self.m}, {self.n}, {self.k})"


@dataclass(frozen=True)
class Factorization:
    """content * prod(factor^multiplicity); factors are primitive,
    pairwise non-associate irreducibles with positive leading coefficient."""

    content: Fraction
    factors: tuple  # of (MultiPoly, int)

    def value(self) -> MultiPoly:
        acc = MultiPoly(1) * self.content
        for f, mult in self.factors:
            acc = acc * f ** mult
        return acc


def factor(p: MultiPoly, hints: Optional[list] = None) -> Factorization:
    """Irreducible factorization over the rationals.

    `hints` may carry a pre-split list of (factor, multiplicity) pairs whose
    product matches p up to rational content.  Hinted factors must be
    pairwise coprime; each one is still factored on its own, so reducible
    hints are refined rather than trusted.
    """
    if p.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    if hints is not None:
        return _factor_with_hints(p, hints)
    return _factor_cached(p)


@lru_cache(maxsize=8192)
def _factor_cached(p: MultiPoly) -> Factorization:
    sp = _SymPoly.from_dict(dict(p._p.terms()), *_SYMS, domain="QQ")
    content, fl = sp.factor_list()
    content = Fraction(_SymRational(content))
    out = []
    for f, mult in fl:
        mp = MultiPoly(_RING.from_dict(
            {e: _to_qq(Fraction(_SymRational(c))) for e, c in f.as_dict(native=False).items()}))
        c, prim = mp.content_and_primitive()
        content *= Fraction(c) ** mult
        out.append((prim, int(mult)))
    out.sort(key=lambda t: t[0].sort_key())
    return Factorization(content, tuple(out))


def _factor_with_hints(p: MultiPoly, hints) -> Factorization:
    pieces = []
    for q, mult in hints:
        if q.is_constant():
            continue
        pieces.append((q.primitive_part(), int(mult)))
    for i in range(len(pieces)):
        for j in range(i + 1, len(pieces)):
            if not pieces[i][0].gcd(pieces[j][0]).is_constant():
                raise ValueError("pre-factored denominators must be pairwise coprime")
    content = Fraction(1)
    out: list[tuple[MultiPoly, int]] = []
    rest = p
    for q, mult in pieces:
        fq = factor(q)
        content *= fq.content ** mult
        for f, m in fq.factors:
            out.append((f, m * mult))
        rest = rest.divide_exact(q ** mult)
    if not rest.is_constant():
        raise ValueError("pre-factored form does not cover the full polynomial")
    content *= rest.constant_value()
    out.sort(key=lambda t: t[0].sort_key())
    return Factorization(content, tuple(out))


def integer_linear_test(p: MultiPoly) -> Optional[tuple[int, int, int]]:
    """Primitive integer direction (a, b, c) with p = h(a*x + b*y + c*z)
    for some univariate h, or None.

    Such a direction exists exactly when the three partial derivatives are
    pairwise proportional as polynomials; the ratios are the direction.
    """
    if p.is_constant():
        raise ValueError("integer_linear_test needs a nonconstant polynomial")
    grads = [p.diff(v) for v in VARS]
    ratios: list[Optional[Fraction]] = []
    base = next(g for g in grads if g)
    for g in grads:
        if g.is_zero:
            ratios.append(Fraction(0))
            continue
        # g must equal r * base for a constant r
        r = g.leading_coeff() / base.leading_coeff()
        if g != base * r:
            return None
        ratios.append(r)
    den = reduce(lambda a, b: a * b.denominator // _gcd_int(a, b.denominator), ratios, 1)
    ints = [int(r * den) for r in ratios]
    g = reduce(_gcd_int, ints)
    ints = [v // g for v in ints]
    first = next(v for v in ints if v)
    if first < 0:
        ints = [-v for v in ints]
    return tuple(ints)


def shift_apply(f, s):
    """Shift a MultiPoly or RatFunc by an integer ShiftVector."""
    return f.shift(s)
