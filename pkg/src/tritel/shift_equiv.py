"""Integer shift equivalence of polynomials in x, y, z.

A real vector fixes a polynomial under translation exactly when the
directional derivative vanishes identically (a nonzero polynomial cannot be
periodic along a line), so the stabilizer is the saturated integer kernel of
the gradient coefficient matrix — no search involved.

find_shift matches homogeneous slices: translation never changes the top
slice, the next slice pins the shift vector up to directions fixing the top
form, and each further slice is linear in the still-free directions.  The
final step picks the integer points of the resulting affine subspace and
returns the representative minimal in (|m|, |n|, |k|), ties broken toward
positive entries.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import lattice
from .linalg import solve_affine
from .polys import VAR_INDEX, VARS, MultiPoly, ShiftVector


@dataclass(frozen=True)
class StabilizerLattice:
    """All integer shift vectors fixing a polynomial, as a row-HNF basis."""

    basis: tuple  # of ShiftVector

    def _rows(self):
        return [v.as_tuple() for v in self.basis]

    @property
    def rank(self) -> int:
        return len(self.basis)

    def contains(self, v) -> bool:
        t = v.as_tuple() if isinstance(v, ShiftVector) else tuple(v)
        return lattice.lattice_contains(self._rows(), t)

    def restrict_zero(self, axes) -> "StabilizerLattice":
        """Sublattice whose components along the given axes vanish."""
        idxs = sorted(VAR_INDEX[a] for a in axes)
        rows = lattice.lattice_restrict_zero(self._rows(), idxs)
        return StabilizerLattice(tuple(ShiftVector(*r) for r in rows))

    def minimal_positive(self, axis: str) -> Optional[ShiftVector]:
        """Lattice vector with minimal positive component along `axis`,
        remaining components reduced deterministically; None if the axis
        projection is trivial."""
        idx = VAR_INDEX[axis]
        rows = self._rows()
        g = lattice.component_subgroup_gcd(rows, idx)
        if g == 0:
            return None
        w = lattice.vector_with_component(rows, idx, g)
        sub = lattice.lattice_restrict_zero(rows, [idx])
        return ShiftVector(*lattice.reduce_abs_lex(w, sub))

    def __eq__(self, other):
        if not isinstance(other, StabilizerLattice):
            return NotImplemented
        return self._rows() == other._rows()


def stabilizer_lattice(p: MultiPoly) -> StabilizerLattice:
    """Basis of { v in Z^3 : p(X + v) = p(X) }."""
    if p.is_zero:
        raise ValueError("the zero polynomial is fixed by everything")
    grads = [p.diff(v).terms() for v in VARS]
    monos = set().union(*[set(g) for g in grads])
    rows = [[g.get(m, Fraction(0)) for g in grads] for m in sorted(monos)]
    basis = lattice.integer_kernel(rows, 3)
    return StabilizerLattice(tuple(ShiftVector(*b) for b in basis))


def find_shift(p: MultiPoly, q: MultiPoly, axes=("x", "y", "z")) -> Optional[ShiftVector]:
    """Some integer v supported on `axes` with p(X + v) = q(X), or None.

    When several shifts work, returns the one minimal in (|m|, |n|, |k|)
    lexicographically, ties toward the positive entry.
    """
    if p.is_zero or q.is_zero:
        raise ValueError("find_shift needs nonzero polynomials")
    axis_idx = sorted(VAR_INDEX[a] for a in set(axes))
    deg = p.total_degree()
    if q.total_degree() != deg:
        return None
    if p.homogeneous_part(deg) != q.homogeneous_part(deg):
        return None
    v_c = [Fraction(0)] * 3
    free = []
    for i in axis_idx:
        e = [Fraction(0)] * 3
        e[i] = Fraction(1)
        free.append(e)
    for t in range(deg - 1, -1, -1):
        grad_next = [p.homogeneous_part(t + 1).diff(v) for v in VARS]
        shifted = p.shift(tuple(v_c))
        rhs_poly = q.homogeneous_part(t) - shifted.homogeneous_part(t)
        # one generator polynomial per free direction: (b . grad) of the
        # degree-(t+1) slice; the slice equation is linear in the directions
        gens = []
        for b in free:
            g = MultiPoly.zero()
            for i in range(3):
                if b[i]:
                    g = g + grad_next[i] * b[i]
            gens.append(g)
        monos = set(rhs_poly.terms())
        for g in gens:
            monos |= set(g.terms())
        if not monos:
            continue
        rows = [[g.terms().get(m, Fraction(0)) for g in gens] for m in sorted(monos)]
        rhs = [rhs_poly.terms().get(m, Fraction(0)) for m in sorted(monos)]
        if free:
            sol = solve_affine(rows, rhs, Fraction(0))
            if sol is None:
                return None
            theta, null = sol
            for i in range(3):
                v_c[i] += sum(b[i] * th for b, th in zip(free, theta))
            free = [[sum(b[i] * nv for b, nv in zip(free, nvec)) for i in range(3)]
                    for nvec in null]
        elif rhs_poly:
            return None
    return _integer_point(p, q, v_c, free)


def _integer_point(p, q, v_c, free):
    if not free:
        if any(c.denominator != 1 for c in v_c):
            return None
        v = ShiftVector(*[int(c) for c in v_c])
    else:
        # constraints cutting out v_c + span(free): rows orthogonal to free
        ortho = _orthogonal_complement(free)
        rows = ortho
        rhs = [sum(r[i] * v_c[i] for i in range(3)) for r in ortho]
        sol = lattice.solve_diophantine(rows, rhs, 3)
        if sol is None:
            return None
        v0, kernel = sol
        v = ShiftVector(*lattice.reduce_abs_lex(v0, kernel))
    if p.shift(v) != q:
        return None
    return v


def _orthogonal_complement(vectors):
    """Rational row basis of the complement of span(vectors) in Q^3."""
    rows = [[vectors[j][i] for j in range(len(vectors))] for i in range(3)]
    # kernel of the transpose: c with sum_i c_i * vectors[j][i] = 0 for all j
    cols = [[vectors[j][i] for i in range(3)] for j in range(len(vectors))]
    from .linalg import nullspace
    return [c for c in nullspace(cols, Fraction(0))]


# -- derived one-line queries used by the decision procedures ----------------


def sigma_x_relation(stab: StabilizerLattice) -> Optional[tuple[int, int, int]]:
    """Minimal m > 0 with shift_x^m(p) = shift_y^n shift_z^k (p), as (m, n, k)."""
    v = stab.minimal_positive("x")
    if v is None:
        return None
    return (v.m, -v.n, -v.k)


def sigma_yz_relation(stab: StabilizerLattice) -> Optional[tuple[int, int]]:
    """Minimal t > 0 with shift_y^t(p) = shift_z^l(p), as (t, l)."""
    v = stab.restrict_zero(["x"]).minimal_positive("y")
    if v is None:
        return None
    return (v.n, -v.k)


def sigma_xy_relation(stab: StabilizerLattice) -> Optional[tuple[int, int]]:
    """Minimal n > 0 with shift_x^n(p) = shift_y^k(p), as (n, k)."""
    v = stab.restrict_zero(["z"]).minimal_positive("x")
    if v is None:
        return None
    return (v.m, -v.n)
