"""Partial fraction decomposition with respect to one main variable.

The coefficient field is the rational functions in the other two variables,
realized directly by RatFunc values that simply do not involve the main
variable.  UPoly is the univariate workhorse: dense coefficient list over
that field with Euclidean division and extended gcd.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .polys import MultiPoly, factor
from .rational import RatFunc

_STEP = {"x": (1, 0, 0), "y": (0, 1, 0), "z": (0, 0, 1)}


class UPoly:
    """Polynomial in a single main variable over main-variable-free RatFuncs."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs, var: str):
        while coeffs and coeffs[-1].is_zero:
            coeffs = coeffs[:-1]
        self.coeffs = list(coeffs)
        self.var = var

    @classmethod
    def from_ratfunc(cls, f: RatFunc, var: str) -> "UPoly":
        if f.den.involves(var):
            raise ValueError(f"not a polynomial in {var}")
        den = RatFunc(f.den)
        return cls([RatFunc(c) / den for c in f.num.coeffs_in(var)], var)

    @classmethod
    def from_poly(cls, p: MultiPoly, var: str) -> "UPoly":
        return cls([RatFunc(c) for c in p.coeffs_in(var)], var)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self) -> RatFunc:
        return self.coeffs[-1]

    def __add__(self, other: "UPoly") -> "UPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + [RatFunc.zero()] * (n - len(self.coeffs))
        b = other.coeffs + [RatFunc.zero()] * (n - len(other.coeffs))
        return UPoly([u + v for u, v in zip(a, b)], self.var)

    def __sub__(self, other: "UPoly") -> "UPoly":
        return self + (-other)

    def __neg__(self) -> "UPoly":
        return UPoly([-c for c in self.coeffs], self.var)

    def __mul__(self, other: "UPoly") -> "UPoly":
        if self.is_zero or other.is_zero:
            return UPoly([], self.var)
        out = [RatFunc.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero:
                continue
            for j, b in enumerate(other.coeffs):
                if not b.is_zero:
                    out[i + j] = out[i + j] + a * b
        return UPoly(out, self.var)

    def scale(self, r: RatFunc) -> "UPoly":
        return UPoly([c * r for c in self.coeffs], self.var)

    def __divmod__(self, other: "UPoly"):
        if other.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UPoly([], self.var), UPoly(rem, self.var)
        quo = [RatFunc.zero()] * (dq + 1)
        inv_lc = RatFunc.one() / other.lc()
        for k in range(dq, -1, -1):
            top = len(other.coeffs) - 1 + k
            if top < len(rem) and not rem[top].is_zero:
                c = rem[top] * inv_lc
                quo[k] = c
                for j, b in enumerate(other.coeffs):
                    rem[j + k] = rem[j + k] - c * b
        return UPoly(quo, self.var), UPoly(rem, self.var)

    def mod(self, other: "UPoly") -> "UPoly":
        return divmod(self, other)[1]

    def monic(self) -> "UPoly":
        if self.is_zero:
            return self
        return self.scale(RatFunc.one() / self.lc())

    def ext_gcd(self, other: "UPoly"):
        """(g, s, t) with s*self + t*other = g, g monic (or zero)."""
        zero, one = UPoly([], self.var), UPoly([RatFunc.one()], self.var)
        r0, r1 = self, other
        s0, s1 = one, zero
        t0, t1 = zero, one
        while not r1.is_zero:
            q, r = divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
            t0, t1 = t1, t0 - q * t1
        if r0.is_zero:
            return r0, s0, t0
        inv = RatFunc.one() / r0.lc()
        return r0.scale(inv), s0.scale(inv), t0.scale(inv)

    def to_ratfunc(self) -> RatFunc:
        v = RatFunc.variable(self.var)
        acc = RatFunc.zero()
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def shift_main(self, step: int) -> "UPoly":
        return UPoly.from_ratfunc(self.to_ratfunc().shift(
            tuple(s * step for s in _STEP[self.var])), self.var)


@dataclass(frozen=True)
class PFTerm:
    """numerator / factor^power with deg_main(numerator) < deg_main(factor)."""

    numerator: RatFunc
    factor: MultiPoly
    power: int

    def value(self) -> RatFunc:
        return self.numerator / RatFunc(self.factor) ** self.power


def partial_fractions(f: RatFunc, main_var: str,
                      den_hints: Optional[list] = None):
    """Split f into (polynomial part in main_var, proper simple terms).

    The terms have irreducible denominator factors (over the field of the
    other variables) and numerators of smaller main-variable degree; their
    sum plus the polynomial part reconstructs f exactly.
    """
    if main_var not in _STEP:
        raise ValueError(f"unknown variable {main_var!r}")
    fac = factor(f.den, hints=den_hints)
    unit = RatFunc(fac.content)
    mains = []
    for q, mult in fac.factors:
        if q.involves(main_var):
            mains.append((q, mult))
        else:
            unit = unit * RatFunc(q) ** mult
    num = UPoly.from_ratfunc(RatFunc(f.num) / unit, main_var)
    if not mains:
        return num.to_ratfunc(), []
    den_up = UPoly([RatFunc.one()], main_var)
    for q, mult in mains:
        den_up = den_up * _upow(UPoly.from_poly(q, main_var), mult)
    poly_part, rem = divmod(num, den_up)
    terms: list[PFTerm] = []
    _split(rem, mains, main_var, terms)
    terms.sort(key=lambda t: (t.factor.sort_key(), t.power))
    return poly_part.to_ratfunc(), terms


def _upow(p: UPoly, n: int) -> UPoly:
    out = UPoly([RatFunc.one()], p.var)
    for _ in range(n):
        out = out * p
    return out


def _split(rem: UPoly, mains, var: str, out: list):
    """rem / prod(mains) with rem proper; peel one prime power at a time."""
    if rem.is_zero:
        return
    (q, mult), rest = mains[0], mains[1:]
    a_up = _upow(UPoly.from_poly(q, var), mult)
    if not rest:
        _expand_prime_power(rem, q, mult, var, out)
        return
    b_up = UPoly([RatFunc.one()], var)
    for p2, m2 in rest:
        b_up = b_up * _upow(UPoly.from_poly(p2, var), m2)
    g, s, t = a_up.ext_gcd(b_up)
    if g.degree != 0:
        raise ValueError("partial fraction split on non-coprime factors")
    # s*A + t*B = 1, so rem/(A*B) = (rem*t mod A)/A + (rem*s mod B)/B
    r_a = (rem * t).mod(a_up)
    r_b = (rem * s).mod(b_up)
    _expand_prime_power(r_a, q, mult, var, out)
    _split(r_b, rest, var, out)


def _expand_prime_power(rem: UPoly, q: MultiPoly, mult: int, var: str, out: list):
    """rem/q^mult as a sum of digits t_i / q^(mult-i), deg t_i < deg q."""
    if rem.is_zero:
        return
    q_up = UPoly.from_poly(q, var)
    digits = []
    cur = rem
    while not cur.is_zero:
        cur, d = divmod(cur, q_up)
        digits.append(d)
    for i, d in enumerate(digits):
        power = mult - i
        if power < 1:
            raise ValueError("improper fraction in prime power expansion")
        if not d.is_zero:
            out.append(PFTerm(d.to_ratfunc(), q, power))


def poly_coeffs(f: RatFunc, var: str) -> list[RatFunc]:
    """Coefficient list of f viewed as a polynomial in var (den must be
    var-free)."""
    return UPoly.from_ratfunc(f, var).coeffs
