"""The operator ring Q(x)[Sx]: Sx * c(x) = c(x+1) * Sx.

Operators act on rational functions in x, y, z through x-shifts.  Right
division makes the ring left Euclidean; least common left multiples come
from the extended remainder sequence, and the circulant matrix built from
an exponent separation can be brought to diagonal shape by LCLM-based row
elimination.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .rational import RatFunc


def _coerce_coeff(c) -> RatFunc:
    if isinstance(c, RatFunc):
        r = c
    elif isinstance(c, (int, Fraction)):
        r = RatFunc(c)
    else:
        raise TypeError(f"cannot use {c!r} as an operator coefficient")
    if r.involves("y") or r.involves("z"):
        raise ValueError("operator coefficients must be rational functions of x only")
    return r


class OrePoly:
    """Linear recurrence operator sum(c_k(x) * Sx^k) with rational
    function coefficients in x."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict):
        clean = {}
        for k, c in coeffs.items():
            c = _coerce_coeff(c)
            if not c.is_zero:
                if k < 0:
                    raise ValueError("Sx exponents must be nonnegative")
                clean[int(k)] = c
        self.coeffs = clean

    @classmethod
    def zero(cls) -> "OrePoly":
        return cls({})

    @classmethod
    def one(cls) -> "OrePoly":
        return cls({0: 1})

    @classmethod
    def sx(cls, power: int = 1) -> "OrePoly":
        return cls({power: 1})

    @classmethod
    def from_text(cls, text: str) -> "OrePoly":
        from .parsing import parse_operator
        return cls(parse_operator(text))

    @property
    def order(self) -> int:
        return max(self.coeffs) if self.coeffs else -1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def coeff(self, k: int) -> RatFunc:
        return self.coeffs.get(k, RatFunc.zero())

    def leading_coeff(self) -> RatFunc:
        if self.is_zero:
            return RatFunc.zero()
        return self.coeffs[self.order]

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        other = _as_ore(other)
        if other is None:
            return NotImplemented
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            s = out.get(k, RatFunc.zero()) + c
            if s.is_zero:
                out.pop(k, None)
            else:
                out[k] = s
        return OrePoly(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_ore(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_ore(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return OrePoly({k: -c for k, c in self.coeffs.items()})

    def __mul__(self, other):
        """Operator product; Sx^i * c = c(x+i) * Sx^i."""
        other = _as_ore(other)
        if other is None:
            return NotImplemented
        out: dict[int, RatFunc] = {}
        for i, a in self.coeffs.items():
            for j, b in other.coeffs.items():
                c = a * b.shift((i, 0, 0))
                k = i + j
                s = out.get(k, RatFunc.zero()) + c
                if s.is_zero:
                    out.pop(k, None)
                else:
                    out[k] = s
        return OrePoly(out)

    def __rmul__(self, other):
        other = _as_ore(other)
        if other is None:
            return NotImplemented
        return other * self

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative operator power")
        out = OrePoly.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        other = _as_ore(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    # -- action and normal forms --------------------------------------------

    def apply(self, f: RatFunc) -> RatFunc:
        """sum(c_k * f(x+k, y, z))."""
        acc = RatFunc.zero()
        for k, c in self.coeffs.items():
            acc = acc + c * f.shift((k, 0, 0))
        return acc

    def monic(self) -> "OrePoly":
        if self.is_zero:
            return self
        inv = RatFunc.one() / self.leading_coeff()
        return OrePoly({k: inv * c for k, c in self.coeffs.items()})

    def conjugate_x(self, offset: int) -> "OrePoly":
        """Coefficientwise substitution x -> x + offset."""
        return OrePoly({k: c.shift((offset, 0, 0)) for k, c in self.coeffs.items()})

    def right_divmod(self, other: "OrePoly"):
        """Q, R with self = Q * other + R and order(R) < order(other)."""
        if other.is_zero:
            raise ZeroDivisionError("right division by the zero operator")
        quo = OrePoly.zero()
        rem = self
        while not rem.is_zero and rem.order >= other.order:
            e = rem.order - other.order
            c = rem.leading_coeff() / other.leading_coeff().shift((e, 0, 0))
            mono = OrePoly({e: c})
            quo = quo + mono
            rem = rem - mono * other
        return quo, rem

    def right_divides(self, other: "OrePoly") -> bool:
        return other.right_divmod(self)[1].is_zero

    def __str__(self):
        from .parsing import format_operator
        return format_operator(self.coeffs)

    __repr__ = __str__


def _as_ore(v):
    if isinstance(v, OrePoly):
        return v
    if isinstance(v, (int, Fraction, RatFunc)):
        try:
            return OrePoly({0: v})
        except ValueError:
            return None
    return None


def lclm(ops: Iterable[OrePoly]) -> OrePoly:
    """Least common left multiple, normalized monic.

    Pairwise via the extended right-Euclidean scheme: run the remainder
    sequence on (A, B) keeping cofactors u, v with r = u*A + v*B; when the
    remainder hits zero, u*A is a minimal-order common left multiple.
    """
    ops = [op for op in ops]
    if not ops:
        raise ValueError("lclm of an empty list")
    if any(op.is_zero for op in ops):
        raise ValueError("lclm of the zero operator")
    acc = ops[0]
    for op in ops[1:]:
        acc = _lclm2(acc, op)
    return acc.monic()


def _lclm2(a: OrePoly, b: OrePoly) -> OrePoly:
    r0, r1 = a, b
    u0, u1 = OrePoly.one(), OrePoly.zero()
    while not r1.is_zero:
        q, r = r0.right_divmod(r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
    return u1 * a


def _lclm2_cofactors(a: OrePoly, b: OrePoly):
    """(m, u, v) with u*a = v*b = m, the least common left multiple."""
    r0, r1 = a, b
    u0, u1 = OrePoly.one(), OrePoly.zero()
    v0, v1 = OrePoly.zero(), OrePoly.one()
    while not r1.is_zero:
        q, r = r0.right_divmod(r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    return u1 * a, u1, -v1


@dataclass(frozen=True)
class ExponentSeparation:
    """Split of an operator by the residue class of its Sx exponents."""

    parts: tuple  # of OrePoly, indexed by residue class
    modulus: int

    def total(self) -> OrePoly:
        acc = OrePoly.zero()
        for p in self.parts:
            acc = acc + p
        return acc


def exponent_separation(op: OrePoly, m: int) -> ExponentSeparation:
    if m < 1:
        raise ValueError("modulus must be positive")
    parts = [dict() for _ in range(m)]
    for k, c in op.coeffs.items():
        parts[k % m][k] = c
    return ExponentSeparation(tuple(OrePoly(p) for p in parts), m)


class OreMatrix:
    """Dense matrix of operators with the noncommutative product."""

    def __init__(self, rows):
        self.rows = [list(r) for r in rows]

    @classmethod
    def identity(cls, n: int) -> "OreMatrix":
        return cls([[OrePoly.one() if i == j else OrePoly.zero() for j in range(n)]
                    for i in range(n)])

    @property
    def shape(self):
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    def __getitem__(self, ij):
        return self.rows[ij[0]][ij[1]]

    def __matmul__(self, other: "OreMatrix") -> "OreMatrix":
        n, k = self.shape
        k2, m = other.shape
        if k != k2:
            raise ValueError("matrix shapes do not match")
        out = []
        for i in range(n):
            row = []
            for j in range(m):
                acc = OrePoly.zero()
                for t in range(k):
                    acc = acc + self.rows[i][t] * other.rows[t][j]
                row.append(acc)
            out.append(row)
        return OreMatrix(out)

    def apply_vector(self, vec):
        """Matrix action on a column of rational functions."""
        out = []
        for row in self.rows:
            acc = RatFunc.zero()
            for op, f in zip(row, vec):
                acc = acc + op.apply(f)
            out.append(acc)
        return out

    def __eq__(self, other):
        return isinstance(other, OreMatrix) and self.rows == other.rows


def circulant_matrix(op: OrePoly, m: int) -> OreMatrix:
    """m x m matrix with entry (i, j) = part_{(i - j) mod m} of the
    m-exponent separation; every row sums to the operator itself."""
    parts = exponent_separation(op, m).parts
    return OreMatrix([[parts[(i - j) % m] for j in range(m)] for i in range(m)])


def diagonalize_circulant(op: OrePoly, m: int):
    """(M, diag) with M @ circulant_matrix(op, m) diagonal, all diagonal
    entries nonzero and monic.

    Row elimination uses LCLM cofactors: with u*A = v*B the update
    row_j <- v*row_j - u*row_pivot clears the pivot column without ever
    leaving the operator ring.
    """
    if op.is_zero:
        raise ValueError("cannot diagonalize the zero operator")
    T = circulant_matrix(op, m).rows
    M = OreMatrix.identity(m).rows
    pivot_of_col = {}
    used = set()
    for col in range(m):
        cands = [r for r in range(m) if r not in used and not T[r][col].is_zero]
        if not cands:
            raise ArithmeticError("circulant matrix lost full rank during elimination")
        piv = min(cands, key=lambda r: (T[r][col].order, r))
        for r in range(m):
            if r == piv or T[r][col].is_zero:
                continue
            _, u, v = _lclm2_cofactors(T[piv][col], T[r][col])
            T[r] = [v * T[r][j] - u * T[piv][j] for j in range(m)]
            M[r] = [v * M[r][j] - u * M[piv][j] for j in range(m)]
        pivot_of_col[col] = piv
        used.add(piv)
    rows_M, diag = [], []
    for col in range(m):
        piv = pivot_of_col[col]
        d = T[piv][col]
        inv = RatFunc.one() / d.leading_coeff()
        scale = OrePoly({0: inv})
        rows_M.append([scale * e for e in M[piv]])
        diag.append(d.monic())
    return OreMatrix(rows_M), diag
