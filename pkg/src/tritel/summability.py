"""Summability of rational functions in y and z over Q or Q(x).

A function is summable when it equals delta_y(g) + delta_z(h) for rational
g, h.  The decision runs through an additive decomposition: partial
fractions in z, orbit-merging of denominators under the y/z shift group,
and a per-fraction criterion.  A fraction a/d^j with d irreducible survives
exactly when no relation shift_y^t(d) = shift_z^l(d) with t > 0 exists, or
when the layered difference equation for the numerator has no polynomial
solution; everything else is absorbed into an explicit certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Optional

from .partfrac import partial_fractions, poly_coeffs
from .polys import MultiPoly
from .rational import RatFunc, delta, telescoping_sum
from .shift_equiv import find_shift, sigma_yz_relation, stabilizer_lattice

BASES = ("Q", "Q(x)")


@dataclass(frozen=True)
class SimpleFraction:
    """numerator / denominator^power, denominator irreducible with positive
    z-degree, numerator a z-polynomial of smaller z-degree."""

    numerator: RatFunc
    denominator: MultiPoly
    power: int

    def value(self) -> RatFunc:
        return self.numerator / RatFunc(self.denominator) ** self.power


@dataclass(frozen=True)
class AdditiveDecomposition:
    """f = delta_y(g) + delta_z(h) + sum(residue); residue fractions have
    pairwise shift-inequivalent denominators and are individually
    non-summable."""

    g: RatFunc
    h: RatFunc
    residue: tuple  # of SimpleFraction


@dataclass(frozen=True)
class SummabilityResult:
    summable: bool
    certificate: Optional[tuple]  # (g, h)
    witness: Optional[tuple]      # (t, l, p) for a single-fraction criterion


def resolve_base(f: RatFunc, base: Optional[str]) -> str:
    if base is None:
        return "Q(x)" if f.involves("x") else "Q"
    if base not in BASES:
        raise ValueError(f"base must be one of {BASES}")
    if base == "Q" and f.involves("x"):
        raise ValueError("input involves x but the base field is Q")
    return base


def z_antidifference(k: int) -> MultiPoly:
    """Polynomial S with S(z+1) - S(z) = z^k and zero constant term."""
    coeffs = [Fraction(0)] * (k + 2)
    for j in range(k, -1, -1):
        s = Fraction(1 if j == k else 0)
        for i in range(j + 2, k + 2):
            s -= coeffs[i] * comb(i, j)
        coeffs[j + 1] = s / (j + 1)
    return MultiPoly.from_dict({(0, 0, i): c for i, c in enumerate(coeffs) if c})


def solve_scalar_difference(rhs: RatFunc, t: int) -> Optional[RatFunc]:
    """u(., y+t, .) - u = rhs for u rational in x and y; None when no
    rational solution exists.

    The polynomial part always telescopes.  Proper parts split along orbits
    of denominator irreducibles under steps of t in y; within an orbit the
    numerators satisfy a two-term recurrence whose final state must vanish.
    """
    if rhs.involves("z"):
        raise ValueError("scalar difference solving is for z-free functions")
    if t < 1:
        raise ValueError("step must be a positive integer")
    if rhs.is_zero:
        return RatFunc.zero()
    poly_part, terms = partial_fractions(rhs, "y")
    u = _poly_antidifference_y(poly_part, t)
    orbits = []  # [rep, {(position, power): numerator}]
    for term in terms:
        placed = False
        for rep, members in orbits:
            v = find_shift(rep, term.factor, axes=("y",))
            if v is not None and v.n % t == 0:
                key = (v.n // t, term.power)
                members[key] = members.get(key, RatFunc.zero()) + term.numerator
                placed = True
                break
        if not placed:
            orbits.append((term.factor, {(0, term.power): term.numerator}))
    for rep, members in orbits:
        powers = {m for (_, m) in members}
        for m in powers:
            beta = {s: a for (s, mm), a in members.items() if mm == m}
            lo, hi = min(beta), max(beta)
            gamma = RatFunc.zero()
            for s in range(lo, hi + 1):
                gamma = gamma.shift((0, t, 0)) - beta.get(s, RatFunc.zero())
                if s < hi:
                    u = u + gamma / RatFunc(rep.shift((0, s * t, 0))) ** m
            if not gamma.is_zero:
                return None
    return u


def _poly_antidifference_y(p: RatFunc, t: int) -> RatFunc:
    """U polynomial in y with U(y+t) - U(y) = p, zero constant term."""
    if p.is_zero:
        return RatFunc.zero()
    cs = poly_coeffs(p, "y")
    deg = len(cs) - 1
    u = [RatFunc.zero()] * (deg + 2)
    for j in range(deg, -1, -1):
        s = cs[j]
        for i in range(j + 2, deg + 2):
            s = s - u[i] * (comb(i, j) * Fraction(t) ** (i - j))
        u[j + 1] = s / ((j + 1) * t)
    y = RatFunc.variable("y")
    acc = RatFunc.zero()
    for c in reversed(u):
        acc = acc * y + c
    return acc


def solve_shift_difference(a: RatFunc, d: MultiPoly, t: int, ell: int) -> Optional[RatFunc]:
    """p with shift_y^t shift_z^(-ell)(p) - p = a, p a z-polynomial of
    z-degree below deg_z(d); None when no such p exists.

    Requires shift_y^t(d) = shift_z^ell(d) with t > 0 (reported otherwise).
    The z-substitution is unitriangular on coefficient vectors, so the
    system solves top degree down, one scalar difference equation per layer.
    """
    if t < 1:
        raise ValueError("t must be a positive integer")
    if d.shift((0, t, 0)) != d.shift((0, 0, ell)):
        raise ValueError("precondition failed: shift_y^t(d) != shift_z^ell(d)")
    if a.den.involves("z"):
        raise ValueError("numerator must be polynomial in z")
    dz = d.degree("z")
    if a.num.degree("z") >= dz and not a.is_zero:
        raise ValueError("numerator z-degree must be below deg_z(d)")
    if a.is_zero:
        return RatFunc.zero()
    a_coeffs = poly_coeffs(a, "z")
    a_coeffs += [RatFunc.zero()] * (dz - len(a_coeffs))
    p_coeffs = [RatFunc.zero()] * dz
    for j in range(dz - 1, -1, -1):
        rhs = a_coeffs[j]
        for i in range(j + 1, dz):
            w = comb(i, j) * Fraction(-ell) ** (i - j)
            rhs = rhs - w * p_coeffs[i].shift((0, t, 0))
        sol = solve_scalar_difference(rhs, t)
        if sol is None:
            return None
        p_coeffs[j] = sol
    z = RatFunc.variable("z")
    p = RatFunc.zero()
    for c in reversed(p_coeffs):
        p = p * z + c
    assert p.shift((0, t, -ell)) - p == a
    return p


def _move_fraction(a: RatFunc, base_den: RatFunc, n: int, k: int):
    """Rewrite a / shift_y^n shift_z^k(base_den) as
    delta_y(gy) + delta_z(hz) + new_a / base_den."""
    a2 = a.shift((0, -n, 0))
    g_inner = a2 / base_den.shift((0, 0, k))
    gy = telescoping_sum(g_inner, "y", n)
    new_a = a2.shift((0, 0, -k))
    hz = telescoping_sum(new_a / base_den, "z", k)
    return gy, hz, new_a


def _certificate_from_witness(p: RatFunc, d: MultiPoly, power: int, t: int, ell: int):
    """With w = p/d^power and tau = shift_y^t shift_z^(-ell) fixing d,
    tau(w) - w splits into delta_y and delta_z parts by telescoping."""
    w = p / RatFunc(d) ** power
    gy = telescoping_sum(w.shift((0, 0, -ell)), "y", t)
    hz = telescoping_sum(w, "z", -ell)
    return gy, hz


def _decompose(f: RatFunc, base: Optional[str], den_hints=None):
    base = resolve_base(f, base)
    g = RatFunc.zero()
    h = RatFunc.zero()
    poly_part, terms = partial_fractions(f, "z", den_hints=den_hints)
    if not poly_part.is_zero:
        for k, c in enumerate(poly_coeffs(poly_part, "z")):
            if not c.is_zero:
                h = h + c * RatFunc(z_antidifference(k))
    reps = []       # orbit representatives, minimal first by construction
    merged = {}     # (rep index, power) -> numerator
    for term in sorted(terms, key=lambda tm: (tm.factor.sort_key(), tm.power)):
        idx = shift = None
        for i, rep in enumerate(reps):
            v = find_shift(rep, term.factor, axes=("y", "z"))
            if v is not None:
                idx, shift = i, v
                break
        if idx is None:
            reps.append(term.factor)
            merged[(len(reps) - 1, term.power)] = term.numerator
            continue
        rep = reps[idx]
        gy, hz, new_a = _move_fraction(term.numerator, RatFunc(rep) ** term.power,
                                       shift.n, shift.k)
        g = g + gy
        h = h + hz
        key = (idx, term.power)
        merged[key] = merged.get(key, RatFunc.zero()) + new_a
    residue = []
    tests = []
    for (idx, power), numer in sorted(merged.items()):
        if numer.is_zero:
            continue
        rep = reps[idx]
        rel = sigma_yz_relation(stabilizer_lattice(rep))
        if rel is None:
            residue.append(SimpleFraction(numer, rep, power))
            tests.append((rep, power, None, None, None))
            continue
        t, ell = rel
        p = solve_shift_difference(numer, rep, t, ell)
        tests.append((rep, power, t, ell, p))
        if p is None:
            residue.append(SimpleFraction(numer, rep, power))
            continue
        gy, hz = _certificate_from_witness(p, rep, power, t, ell)
        g = g + gy
        h = h + hz
    residue.sort(key=lambda s: (s.denominator.sort_key(), s.power))
    return AdditiveDecomposition(g, h, tuple(residue)), tests


def additive_decomposition(f: RatFunc, base: Optional[str] = None,
                           den_hints=None) -> AdditiveDecomposition:
    """f = delta_y(g) + delta_z(h) + residue with a minimal residue: empty
    exactly when f is summable."""
    return _decompose(f, base, den_hints)[0]


def is_summable(f: RatFunc, base: Optional[str] = None,
                den_hints=None) -> SummabilityResult:
    """Decide summability in y, z; on success the certificate (g, h)
    satisfies f = delta_y(g) + delta_z(h) exactly."""
    ad, tests = _decompose(f, base, den_hints)
    if ad.residue:
        return SummabilityResult(False, None, None)
    witness = None
    if len(tests) == 1 and tests[0][4] is not None:
        _, _, t, ell, p = tests[0]
        witness = (t, ell, p)
    return SummabilityResult(True, (ad.g, ad.h), witness)


def check_certificate(f: RatFunc, g: RatFunc, h: RatFunc) -> bool:
    return (f - delta(g, "y") - delta(h, "z")).is_zero
