"""Exact integer-lattice utilities (kernels, Hermite forms, Diophantine solves).

Everything here works on plain Python ints; matrices are lists of row lists.
Dimensions are tiny (at most a handful of rows/columns), so the quadratic
Euclidean-style reductions below are more than fast enough.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def integer_kernel(rows, ncols):
    """Basis of { v in Z^ncols : A v = 0 } for an integer (or rational) matrix.

    Rows may contain Fractions; each row is scaled to integers first (scaling
    a row does not change the kernel).  The result is a saturated lattice
    basis in row-HNF form.
    """
    mat = [_scale_row_to_int(r) for r in rows if any(r)]
    # column transform bookkeeping: cols[j] = current j-th column of A,
    # U tracks the unimodular column operations (U[j] = expression of the
    # current column j in terms of the original unknowns)
    cols = [[row[j] for row in mat] for j in range(ncols)]
    U = [[1 if i == j else 0 for i in range(ncols)] for j in range(ncols)]
    active = list(range(ncols))
    for r in range(len(mat)):
        live = [j for j in active if cols[j][r] != 0]
        while len(live) > 1:
            live.sort(key=lambda j: abs(cols[j][r]))
            j0 = live[0]
            for j in live[1:]:
                q = cols[j][r] // cols[j0][r]
                if q:
                    _col_submul(cols, U, j, j0, q)
            live = [j for j in live if cols[j][r] != 0]
        if live:
            active.remove(live[0])
    return hermite_rows([U[j] for j in active])


def hermite_rows(vectors):
    """Row-style Hermite normal form of a list of integer vectors.

    Returns a canonical basis (list of tuples) of the lattice they generate:
    echelon rows with positive pivots, entries above a pivot reduced into
    [0, pivot).
    """
    rows = [list(v) for v in vectors if any(v)]
    if not rows:
        return []
    n = len(rows[0])
    basis = []
    for col in range(n):
        live = [r for r in rows if r[col] != 0]
        rest = [r for r in rows if r[col] == 0]
        while len(live) > 1:
            live.sort(key=lambda r: abs(r[col]))
            r0 = live[0]
            new_live = [r0]
            for r in live[1:]:
                q = r[col] // r0[col]
                for k in range(n):
                    r[k] -= q * r0[k]
                if r[col] != 0:
                    new_live.append(r)
                elif any(r):
                    rest.append(r)
            live = new_live
        if live:
            piv = live[0]
            if piv[col] < 0:
                piv = [-a for a in piv]
            basis.append(piv)
        rows = [r for r in rest if any(r)]
    # reduce entries above each pivot
    for i in reversed(range(len(basis))):
        pcol = next(k for k, a in enumerate(basis[i]) if a != 0)
        for j in range(i):
            q = basis[j][pcol] // basis[i][pcol]
            if q:
                for k in range(len(basis[i])):
                    basis[j][k] -= q * basis[i][k]
    return [tuple(r) for r in basis]


def lattice_contains(basis, v):
    """Membership test against a row-HNF basis."""
    v = list(v)
    for row in basis:
        pcol = next(k for k, a in enumerate(row) if a != 0)
        if v[pcol] % row[pcol] == 0:
            q = v[pcol] // row[pcol]
            for k in range(len(v)):
                v[k] -= q * row[k]
    return not any(v)


def lattice_intersect(basis_a, basis_b, ncols=3):
    """Basis of the intersection of two integer lattices given by bases."""
    if not basis_a or not basis_b:
        return []
    # solve sum(l_i a_i) = sum(m_j b_j): kernel of [A^T | -B^T] on (l, m)
    na, nb = len(basis_a), len(basis_b)
    rows = []
    for c in range(ncols):
        rows.append([basis_a[i][c] for i in range(na)] + [-basis_b[j][c] for j in range(nb)])
    ker = integer_kernel(rows, na + nb)
    vecs = []
    for k in ker:
        v = [0] * ncols
        for i in range(na):
            for c in range(ncols):
                v[c] += k[i] * basis_a[i][c]
        vecs.append(v)
    return hermite_rows(vecs)


def lattice_restrict_zero(basis, zero_indices, ncols=3):
    """Sublattice of vectors whose listed components all vanish."""
    if not basis:
        return []
    rows = [[b[i] for b in basis] for i in zero_indices]
    if rows:
        ker = integer_kernel(rows, len(basis))
    else:
        ker = [tuple(1 if i == j else 0 for i in range(len(basis))) for j in range(len(basis))]
    vecs = []
    for k in ker:
        v = [0] * ncols
        for i, b in enumerate(basis):
            for c in range(ncols):
                v[c] += k[i] * b[c]
        vecs.append(v)
    return hermite_rows(vecs)


def component_subgroup_gcd(basis, index):
    """Generator g >= 0 of the subgroup { v[index] : v in lattice }."""
    g = 0
    for b in basis:
        g = gcd(g, b[index])
    return g


def vector_with_component(basis, index, target, ncols=3):
    """Some lattice vector whose `index` component equals `target`, or None."""
    if not basis:
        return tuple([0] * ncols) if target == 0 else None
    acc = [0] * len(basis[0])
    acc_c = 0
    for b in basis:
        s, t, d = _ext_gcd(acc_c, b[index])
        acc = [s * acc[k] + t * b[k] for k in range(len(acc))]
        acc_c = d
    if acc_c == 0:
        return tuple(acc) if target == 0 else None
    if target % acc_c != 0:
        return None
    mult = target // acc_c
    return tuple(a * mult for a in acc)


def reduce_abs_lex(v, basis):
    """Minimize (|v_0|, |v_1|, ...) lexicographically over the coset v + lattice.

    Ties between r and -r are broken toward the positive value, so the result
    is deterministic.
    """
    v = list(v)
    n = len(v)
    cur = [list(b) for b in basis]
    for i in range(n):
        if not cur:
            break
        g = component_subgroup_gcd(cur, i)
        if g:
            w = vector_with_component(cur, i, g, n)
            r = v[i] % g
            best = r if (abs(r) < abs(r - g) or (abs(r) == abs(r - g) and r > 0)) else r - g
            q = (v[i] - best) // g
            for k in range(n):
                v[k] -= q * w[k]
        cur = [list(b) for b in lattice_restrict_zero(cur, list(range(i + 1)), n)]
    return tuple(v)


def solve_diophantine(rows, rhs, ncols):
    """Integer solutions of A v = b.

    Returns (particular, kernel_basis) or None when no integer solution
    exists.  Rows/rhs may contain Fractions; each equation is scaled to
    integers first.
    """
    mat, b = [], []
    for row, t in zip(rows, rhs):
        r2 = _scale_row_to_int(list(row) + [t])
        mat.append(r2[:-1])
        b.append(r2[-1])
    cols = [[row[j] for row in mat] for j in range(ncols)]
    U = [[1 if i == j else 0 for i in range(ncols)] for j in range(ncols)]
    active = list(range(ncols))
    pivots = []  # (pivot row, pivot column id)
    for r in range(len(mat)):
        live = [j for j in active if cols[j][r] != 0]
        while len(live) > 1:
            live.sort(key=lambda j: abs(cols[j][r]))
            j0 = live[0]
            for j in live[1:]:
                q = cols[j][r] // cols[j0][r]
                if q:
                    _col_submul(cols, U, j, j0, q)
            live = [j for j in live if cols[j][r] != 0]
        if live:
            pivots.append((r, live[0]))
            active.remove(live[0])
    y = {}
    for r in range(len(mat)):
        s = b[r]
        for rr, j in pivots:
            if j in y:
                s -= cols[j][r] * y[j]
        here = next(((rr, j) for rr, j in pivots if rr == r), None)
        if here is None:
            if s != 0:
                return None
            continue
        _, j = here
        if s % cols[j][r] != 0:
            return None
        y[j] = s // cols[j][r]
    v = [0] * ncols
    for j, val in y.items():
        for k in range(ncols):
            v[k] += U[j][k] * val
    kernel = hermite_rows([U[j] for j in active])
    return tuple(v), kernel


def _col_submul(cols, U, j, j0, q):
    cols[j] = [a - q * b for a, b in zip(cols[j], cols[j0])]
    U[j] = [a - q * b for a, b in zip(U[j], U[j0])]


def _ext_gcd(a, b):
    """(s, t, g) with s*a + t*b = g = gcd(a, b), g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_s, old_t, old_r


def _scale_row_to_int(row):
    den = 1
    for a in row:
        if isinstance(a, Fraction):
            den = den * a.denominator // gcd(den, a.denominator)
    out = []
    for a in row:
        if isinstance(a, Fraction):
            out.append(int(a * den))
        else:
            out.append(int(a) * den)
    return out
