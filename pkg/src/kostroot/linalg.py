"""Exact rational vector helpers and Gaussian elimination.

Everything here works on tuples of :class:`fractions.Fraction` (ints are
accepted wherever a Fraction is, since they hash and compare identically).
"""

from __future__ import annotations

from fractions import Fraction as Q
from typing import Iterable, Optional, Sequence, Tuple

Vec = Tuple[Q, ...]
Matrix = Tuple[Vec, ...]


def vec(*xs) -> Vec:
    return tuple(Q(x) for x in xs)


def zero(dim: int) -> Vec:
    return (Q(0),) * dim


def unit(dim: int, i: int) -> Vec:
    return tuple(Q(1) if k == i else Q(0) for k in range(dim))


def add(u: Vec, v: Vec) -> Vec:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Vec, v: Vec) -> Vec:
    return tuple(a - b for a, b in zip(u, v))


def neg(u: Vec) -> Vec:
    return tuple(-a for a in u)


def scale(c, u: Vec) -> Vec:
    return tuple(c * a for a in u)


def is_zero(u: Sequence) -> bool:
    return not any(u)


def dot(u: Sequence, v: Sequence) -> Q:
    """Coordinate pairing (used for evaluating functionals, not as a form on roots)."""
    return sum((a * b for a, b in zip(u, v)), Q(0))


def apply(matrix: Sequence[Sequence], v: Sequence) -> Vec:
    return tuple(dot(row, v) for row in matrix)


def lin_comb(coeffs: Sequence, vectors: Sequence[Vec], dim: int) -> Vec:
    out = [Q(0)] * dim
    for c, w in zip(coeffs, vectors):
        if c:
            for k, x in enumerate(w):
                out[k] += c * x
    return tuple(out)


def ray_key(u: Vec) -> Vec:
    """Canonical representative of the open ray through ``u`` (first nonzero entry scaled to +-1)."""
    for a in u:
        if a:
            s = abs(a)
            return tuple(x / s for x in u)
    raise ValueError("zero vector has no ray")


def line_key(u: Vec) -> Vec:
    """Canonical representative of the line through ``u`` (first nonzero entry scaled to 1)."""
    for a in u:
        if a:
            return tuple(x / a for x in u)
    raise ValueError("zero vector spans no line")


def multiple_of(u: Vec, v: Vec) -> Optional[Q]:
    """Return c with u == c*v, or None. ``v`` must be nonzero."""
    c = None
    for a, b in zip(u, v):
        if b:
            c = Q(a) / b
            break
    if c is None:
        raise ValueError("multiple_of needs a nonzero direction")
    if all(a == c * b for a, b in zip(u, v)):
        return c
    return None


def rref(rows: Iterable[Sequence]) -> Tuple[list, list]:
    """Reduced row echelon form over Q. Returns (rows, pivot columns)."""
    m = [[Q(x) for x in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(vectors: Iterable[Sequence]) -> int:
    return len(rref(vectors)[1])


def independent(vectors: Sequence[Sequence]) -> bool:
    return rank(vectors) == len(vectors)


def nullspace(columns: Sequence[Sequence]) -> list:
    """Basis of {c : sum c_i columns[i] == 0}."""
    if not columns:
        return []
    dim = len(columns[0])
    rows = [[columns[j][i] for j in range(len(columns))] for i in range(dim)]
    red, pivots = rref(rows)
    n = len(columns)
    free = [j for j in range(n) if j not in pivots]
    basis = []
    for f in free:
        c = [Q(0)] * n
        c[f] = Q(1)
        for row, p in zip(red, pivots):
            c[p] = -row[f]
        basis.append(tuple(c))
    return basis


def inverse(matrix: Sequence[Sequence]) -> Matrix:
    n = len(matrix)
    aug = [list(map(Q, row)) + [Q(int(i == j)) for j in range(n)] for i, row in enumerate(matrix)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(red) < n:
        raise ValueError("matrix is singular")
    return tuple(tuple(row[n:]) for row in red)


def extend_to_basis(vectors: Sequence[Vec], dim: int) -> list:
    """Append standard basis vectors (lowest index first) until ``vectors`` spans Q^dim."""
    if not independent(vectors):
        raise ValueError("cannot extend a dependent family")
    basis = list(vectors)
    for i in range(dim):
        if len(basis) == dim:
            break
        e = unit(dim, i)
        if rank(basis + [e]) > len(basis):
            basis.append(e)
    return basis


def dual_rows(basis: Sequence[Vec]) -> Matrix:
    """Rows of the inverse of the matrix whose columns are ``basis``.

    Row i is the coordinate functional picking out the coefficient of basis[i].
    """
    n = len(basis)
    cols = [[basis[j][i] for j in range(n)] for i in range(n)]
    return inverse(cols)


class Decomposer:
    """Coefficients of vectors with respect to a fixed independent family.

    Precomputes an invertible square minor so each decomposition is one
    matrix-vector product plus an exact membership check.
    """

    def __init__(self, family: Sequence[Vec]):
        self.family = tuple(tuple(Q(x) for x in f) for f in family)
        k = len(self.family)
        if k == 0:
            self.rows = ()
            self.minor_inv = ()
            return
        dim = len(self.family[0])
        cols_as_rows = [[self.family[j][i] for j in range(k)] for i in range(dim)]
        # pivot rows = coordinates whose restriction is invertible
        _, piv = rref([[cols_as_rows[i][j] for i in range(dim)] for j in range(k)])
        if len(piv) != k:
            raise ValueError("family is linearly dependent")
        self.rows = tuple(piv)
        self.minor_inv = inverse([cols_as_rows[i] for i in piv])

    def coefficients(self, v: Sequence) -> Optional[Vec]:
        """Return c with sum c_i family[i] == v, or None if v is outside the span."""
        if not self.family:
            return () if is_zero(v) else None
        sel = [v[i] for i in self.rows]
        c = tuple(dot(row, sel) for row in self.minor_inv)
        if lin_comb(c, self.family, len(v)) != tuple(v):
            return None
        return c


def fmt(q) -> str:
    q = Q(q)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Q:
    return Q(text.strip())
