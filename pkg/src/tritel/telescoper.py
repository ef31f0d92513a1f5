"""Telescoper existence and construction in Q(x)[Sx].

An operator L telescopes f when L(f) is summable in y and z.  The decision
reduces f to orbit-normal form (one group per shift orbit of denominator
irreducibles, one term per x-offset and multiplicity) and classifies each
piece b/(c * d^j) by lattice conditions on d and on the y-denominators c:

  Summable          the whole input is summable; L = 1
  XFree             no x at all; Sx - 1 annihilates the input
  CR1-Summable /    d admits no positive x-shift relation, so a telescoper
  CR1-NotSummable   exists exactly when the piece itself is summable
  NecessaryII       c is fixed by the same positive x-shift combination as
                    d, so a numerator-annihilation ansatz in Sx^m succeeds
  ProperI           d admits a y/z relation and c a positive x/y relation:
                    both factor through integer-linear forms, and the common
                    fixing vector feeds the same ansatz
  Suff1-Zero /      d has a positive x-relation but no y/z relation: the
  Suff1-NonZero     leftover part has a telescoper only if it is zero
  Suff2-Summable /  d has both relations: the leftover part telescopes
  Suff2-NotSummable exactly when each multiplicity layer is summable
  Combined          several pieces with different outcomes

Construction solves sum(l_i * shift^(i*V)(numerator)) = 0 over Q(x) with V
a common stabilizer vector of c and d having positive x-component; the
shifted numerators stay in a fixed finite-dimensional space, so the kernel
appears once the ansatz order is large enough.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .linalg import nullspace
from .ore import OrePoly, lclm
from .partfrac import partial_fractions
from .polys import MultiPoly, ShiftVector
from .rational import RatFunc, delta
from .shift_equiv import (StabilizerLattice, sigma_x_relation, sigma_xy_relation,
                          sigma_yz_relation, stabilizer_lattice)
from .summability import additive_decomposition, is_summable
from . import lattice

CASES = ("Summable", "XFree", "NecessaryII", "ProperI", "CR1-Summable",
         "CR1-NotSummable", "Suff1-Zero", "Suff1-NonZero", "Suff2-Summable",
         "Suff2-NotSummable", "Combined")


@dataclass(frozen=True)
class OrbitTerm:
    x_offset: int
    power: int
    numerator: RatFunc

    def value(self, rep: MultiPoly) -> RatFunc:
        den = RatFunc(rep.shift((self.x_offset, 0, 0))) ** self.power
        return self.numerator / den


@dataclass(frozen=True)
class OrbitGroup:
    rep: MultiPoly
    terms: tuple  # of OrbitTerm

    def value(self) -> RatFunc:
        acc = RatFunc.zero()
        for t in self.terms:
            acc = acc + t.value(self.rep)
        return acc


@dataclass(frozen=True)
class OrbitForm:
    """f = delta_y(g) + delta_z(h) + sum over groups/terms of
    numerator / shift_x^offset(rep)^power, with group representatives in
    distinct full-shift orbits and offsets inequivalent under y/z shifts."""

    g: RatFunc
    h: RatFunc
    groups: tuple  # of OrbitGroup


@dataclass(frozen=True)
class PieceNote:
    denominator: str
    x_offset: int
    power: int
    case: str
    exists: bool
    detail: str = ""


@dataclass(frozen=True)
class TelescoperDecision:
    exists: bool
    case: str
    witness: Optional[tuple]  # (OrePoly, RatFunc, RatFunc)
    notes: tuple  # of PieceNote


@dataclass(frozen=True)
class ConstructionResult:
    witness: Optional[tuple]  # (OrePoly, RatFunc, RatFunc)
    reason: str               # constructed | nonexistent | bound-exceeded


@dataclass
class _AnsatzTask:
    numerator: RatFunc       # polynomial in y, z over Q(x)
    vector: ShiftVector      # common stabilizer vector, positive x-part


@dataclass
class _Piece:
    rep: MultiPoly
    offset: int
    power: int
    exists: bool
    case: str
    detail: str
    tasks: list = field(default_factory=list)

    def note(self) -> PieceNote:
        return PieceNote(str(self.rep), self.offset, self.power, self.case,
                         self.exists, self.detail)


def _move_yz(numer: RatFunc, den_base: RatFunc, n: int, k: int):
    from .summability import _move_fraction
    return _move_fraction(numer, den_base, n, k)


def to_orbit_form(f: RatFunc, den_hints=None) -> OrbitForm:
    """Orbit-normal form over Q(x): summable part split off, denominators
    grouped by full shift orbits, offsets merged whenever two x-shifts of a
    representative are still y/z-equivalent."""
    ad = additive_decomposition(f, base=None, den_hints=den_hints)
    g, h = ad.g, ad.h
    reps: list[MultiPoly] = []
    entries: dict = {}
    for frac in ad.residue:
        placed = False
        for i, rep in enumerate(reps):
            v = _full_orbit_shift(rep, frac.denominator)
            if v is not None:
                gy, hz, moved = _move_yz(frac.numerator,
                                         RatFunc(rep.shift((v.m, 0, 0))) ** frac.power,
                                         v.n, v.k)
                g, h = g + gy, h + hz
                key = (i, v.m, frac.power)
                entries[key] = entries.get(key, RatFunc.zero()) + moved
                placed = True
                break
        if not placed:
            reps.append(frac.denominator)
            entries[(len(reps) - 1, 0, frac.power)] = frac.numerator
    groups = []
    for i, rep in enumerate(reps):
        items = {(off, pw): a for (j, off, pw), a in entries.items()
                 if j == i and not a.is_zero}
        if not items:
            continue
        min_off = min(off for off, _ in items)
        rep_i = rep.shift((min_off, 0, 0))
        items = {(off - min_off, pw): a for (off, pw), a in items.items()}
        rel = sigma_x_relation(stabilizer_lattice(rep_i))
        if rel is not None:
            items, gg, hh = _merge_offset_classes(rep_i, items, rel)
            g, h = g + gg, h + hh
        terms = tuple(OrbitTerm(off, pw, a)
                      for (off, pw), a in sorted(items.items()) if not a.is_zero)
        if terms:
            groups.append(OrbitGroup(rep_i, terms))
    groups.sort(key=lambda gr: gr.rep.sort_key())
    return OrbitForm(g, h, tuple(groups))


def _full_orbit_shift(rep, d):
    from .shift_equiv import find_shift
    return find_shift(rep, d, axes=("x", "y", "z"))


def _merge_offset_classes(rep, items, rel):
    """Fold offsets congruent modulo the minimal x-relation onto the least
    offset of their class (they are y/z-equivalent there)."""
    m0, n0, k0 = rel
    g = h = RatFunc.zero()
    out: dict = {}
    anchors: dict = {}
    for (off, pw), a in sorted(items.items()):
        cls = (off % m0, pw)
        if cls not in anchors:
            anchors[cls] = off
            out[(off, pw)] = out.get((off, pw), RatFunc.zero()) + a
            continue
        base_off = anchors[cls]
        s = (off - base_off) // m0
        base_den = RatFunc(rep.shift((base_off, 0, 0))) ** pw
        gy, hz, moved = _move_yz(a, base_den, s * n0, s * k0)
        g, h = g + gy, h + hz
        key = (base_off, pw)
        out[key] = out.get(key, RatFunc.zero()) + moved
    return out, g, h


def _common_fixing_vector(stab_d: StabilizerLattice, stab_c: StabilizerLattice) -> Optional[ShiftVector]:
    """Vector with positive x-component fixing both polynomials."""
    inter = lattice.lattice_intersect([v.as_tuple() for v in stab_d.basis],
                                      [v.as_tuple() for v in stab_c.basis])
    joint = StabilizerLattice(tuple(ShiftVector(*r) for r in inter))
    return joint.minimal_positive("x")


_TRIVIAL_STAB = None


def _stab_of_one() -> StabilizerLattice:
    global _TRIVIAL_STAB
    if _TRIVIAL_STAB is None:
        _TRIVIAL_STAB = stabilizer_lattice(MultiPoly.one())
    return _TRIVIAL_STAB


def _analyze_piece(rep: MultiPoly, offset: int, power: int, numer: RatFunc) -> _Piece:
    """Classify b/(d^power) (already conjugated to x-offset zero)."""
    stab_d = stabilizer_lattice(rep)
    xrel = sigma_x_relation(stab_d)
    dval = RatFunc(rep) ** power
    if xrel is None:
        res = is_summable(numer / dval, base=None)
        case = "CR1-Summable" if res.summable else "CR1-NotSummable"
        return _Piece(rep, offset, power, res.summable, case,
                      "no positive x-shift relation for the denominator")
    m0, n0, k0 = xrel
    yz = sigma_yz_relation(stab_d)
    detail = f"x-relation (m,n,k)=({m0},{n0},{k0})"
    if yz is not None:
        detail += f"; y/z-relation (t,l)=({yz[0]},{yz[1]})"
    poly_part, terms = partial_fractions(numer, "y")
    piece = _Piece(rep, offset, power, True, "", detail)
    tags = set()
    rest: list = []
    if not poly_part.is_zero:
        v = _common_fixing_vector(stab_d, _stab_of_one())
        piece.tasks.append(_AnsatzTask(poly_part, v))
        tags.add("NecessaryII")
    for term in terms:
        stab_c = stabilizer_lattice(term.factor)
        if yz is None:
            good = stab_c.contains(ShiftVector(m0, -n0, 0))
            tag = "NecessaryII"
        else:
            good = sigma_xy_relation(stab_c) is not None
            tag = "ProperI" if not stab_c.contains(ShiftVector(m0, -n0, 0)) else "NecessaryII"
        if good:
            # the fixing vector leaves c and d alone, so only the numerator
            # moves under the ansatz shifts
            v = _common_fixing_vector(stab_d, stab_c)
            if v is None:
                raise ArithmeticError("no common fixing vector despite lattice conditions")
            piece.tasks.append(_AnsatzTask(term.numerator, v))
            tags.add(tag)
        else:
            rest.append(term)
    if rest:
        if yz is None:
            piece.exists = False
            piece.case = "Suff1-NonZero"
            piece.detail += "; leftover y-denominators break the zero criterion"
            return piece
        layers = sorted({t.power for t in rest})
        verdicts = {}
        for ell in layers:
            r_ell = RatFunc.zero()
            for t in rest:
                if t.power == ell:
                    r_ell = r_ell + t.value()
            r_ell = r_ell / dval
            verdicts[ell] = is_summable(r_ell, base=None).summable
        piece.detail += "; leftover layers summable: " + \
            ", ".join(f"{ell}:{'yes' if ok else 'no'}" for ell, ok in sorted(verdicts.items()))
        if all(verdicts.values()):
            tags.add("Suff2-Summable")
        else:
            piece.exists = False
            piece.case = "Suff2-NotSummable"
            return piece
    if not tags:
        piece.case = "Suff1-Zero"
    elif len(tags) == 1:
        piece.case = tags.pop()
    else:
        piece.case = "Combined"
    return piece


@dataclass
class _Analysis:
    exists: bool
    case: str
    notes: tuple
    pieces: list
    direct_witness: Optional[tuple]  # (OrePoly, RatFunc, RatFunc) for fast paths
    orbit_form: Optional[OrbitForm]


def _analyze(f: RatFunc, den_hints=None) -> _Analysis:
    if f.is_zero:
        w = (OrePoly.one(), RatFunc.zero(), RatFunc.zero())
        return _Analysis(True, "Summable", (), [], w, None)
    if not f.involves("x"):
        w = (OrePoly.sx() - 1, RatFunc.zero(), RatFunc.zero())
        return _Analysis(True, "XFree", (), [], w, None)
    of = to_orbit_form(f, den_hints=den_hints)
    if not of.groups:
        w = (OrePoly.one(), of.g, of.h)
        return _Analysis(True, "Summable", (), [], w, of)
    pieces = []
    for group in of.groups:
        for term in group.terms:
            numer = term.numerator.shift((-term.x_offset, 0, 0))
            rep = group.rep
            pieces.append(_analyze_piece(rep, term.x_offset, term.power, numer))
    exists = all(p.exists for p in pieces)
    if not exists:
        case = next(p.case for p in pieces if not p.exists)
    else:
        tags = {p.case for p in pieces}
        case = tags.pop() if len(tags) == 1 else "Combined"
    return _Analysis(exists, case, tuple(p.note() for p in pieces), pieces, None, of)


def exists_telescoper(f: RatFunc, den_hints=None) -> TelescoperDecision:
    """Decide whether some nonzero L in Q(x)[Sx] makes L(f) summable."""
    a = _analyze(f, den_hints=den_hints)
    return TelescoperDecision(a.exists, a.case, a.direct_witness, a.notes)


def _yz_coeff_vector(b: RatFunc, monos: list) -> list:
    """Coefficients of b on the y^i z^j monomial list, as elements of Q(x)."""
    buckets = {m: {} for m in monos}
    for (ex, ey, ez), c in b.num.terms().items():
        buckets[(ey, ez)][(ex, 0, 0)] = c
    den = b.den
    return [RatFunc(MultiPoly.from_dict(buckets[m]), den) for m in monos]


def _ansatz_operator(b: RatFunc, vec: ShiftVector, max_order: int) -> Optional[OrePoly]:
    """Nonzero L = sum(l_i Sx^(i*M)) with sum(l_i shift^(i*vec)(b)) = 0 and
    order at most max_order, or None within that bound.

    Shifting along vec preserves y- and z-degrees, so all shifts live in one
    finite-dimensional space over Q(x) and a kernel element must show up
    once the number of columns exceeds its dimension.
    """
    monos = sorted({(ey, ez) for (_, ey, ez) in b.num.terms()}
                   | {(0, 0)})
    dy = max(m[0] for m in monos)
    dz = max(m[1] for m in monos)
    monos = [(i, j) for i in range(dy + 1) for j in range(dz + 1)]
    max_rho = max_order // vec.m
    cols = [_yz_coeff_vector(b, monos)]
    zero = RatFunc.zero()
    for rho in range(1, max_rho + 1):
        cols.append(_yz_coeff_vector(b.shift(vec * rho), monos))
        rows = [[col[r] for col in cols] for r in range(len(monos))]
        null = nullspace(rows, zero)
        if null:
            sol = null[0]
            coeffs = {}
            for i, c in enumerate(sol):
                if not c.is_zero:
                    coeffs[i * vec.m] = c
            return OrePoly(coeffs).monic()
    return None


def construct_telescoper(f: RatFunc, max_order: int = 6,
                         den_hints=None) -> ConstructionResult:
    """Produce a verified telescoper with certificates, existence permitting.

    The order bound caps the ansatz; running out of it yields the honest
    'bound-exceeded' outcome without affecting the existence verdict.
    """
    a = _analyze(f, den_hints=den_hints)
    if not a.exists:
        return ConstructionResult(None, "nonexistent")
    if a.direct_witness is not None:
        L, g, h = a.direct_witness
        return ConstructionResult((L, g, h), "constructed")
    operators = []
    for piece in a.pieces:
        for task in piece.tasks:
            L = _ansatz_operator(task.numerator, task.vector, max_order)
            if L is None:
                return ConstructionResult(None, "bound-exceeded")
            operators.append(L.conjugate_x(piece.offset))
    total = lclm(operators) if operators else OrePoly.one()
    if total.order > max_order:
        return ConstructionResult(None, "bound-exceeded")
    res = is_summable(total.apply(f), base=None)
    if not res.summable:
        raise ArithmeticError("internal inconsistency: constructed operator "
                              "failed the summability certificate")
    g, h = res.certificate
    return ConstructionResult((total, g, h), "constructed")


def verify(L: OrePoly, f: RatFunc, g: RatFunc, h: RatFunc) -> bool:
    """Exact check of L(f) = delta_y(g) + delta_z(h)."""
    if L.is_zero:
        raise ValueError("a telescoper must be a nonzero operator")
    return (L.apply(f) - delta(g, "y") - delta(h, "z")).is_zero
