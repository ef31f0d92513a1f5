"""Gaussian elimination over an arbitrary exact field.

Field elements only need +, -, *, / and truthiness (zero is falsy).  Used
with Fraction entries for shift solving and with univariate rational
functions for operator ansatz kernels.
"""

from __future__ import annotations


def solve_affine(rows, rhs, zero):
    """Solve A x = b over a field.

    Returns (particular, nullspace_basis) or None when inconsistent.  Free
    variables are set to zero in the particular solution.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    aug = [list(r) + [t] for r, t in zip(rows, rhs)]
    piv_cols = []
    pr = 0
    for pc in range(n):
        piv = next((i for i in range(pr, m) if aug[i][pc]), None)
        if piv is None:
            continue
        aug[pr], aug[piv] = aug[piv], aug[pr]
        inv = aug[pr][pc]
        aug[pr] = [a / inv for a in aug[pr]]
        for i in range(m):
            if i != pr and aug[i][pc]:
                f = aug[i][pc]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[pr])]
        piv_cols.append(pc)
        pr += 1
        if pr == m:
            break
    for i in range(pr, m):
        if aug[i][n]:
            return None
    particular = [zero] * n
    for r, pc in enumerate(piv_cols):
        particular[pc] = aug[r][n]
    free = [c for c in range(n) if c not in piv_cols]
    null_basis = []
    for fc in free:
        vec = [zero] * n
        vec[fc] = zero + 1
        # express pivot variables in terms of the free one
        for r, pc in enumerate(piv_cols):
            vec[pc] = zero - aug[r][fc]
        null_basis.append(vec)
    return particular, null_basis


def nullspace(rows, zero):
    """Basis of the right kernel of A over a field."""
    m = len(rows)
    if not m:
        return []
    n = len(rows[0])
    sol = solve_affine(rows, [zero] * m, zero)
    assert sol is not None
    return sol[1]
