"""Exact Gaussian elimination over any field whose elements support + - * /.

Used with Fraction, Coefficient and the Gaussian scalars of the signals
module.  Matrices are lists of row lists.
"""
from fractions import Fraction


def _zero_like(x):
    return Fraction(0)


def rref(rows, ncols=None):
    """Reduced row echelon form.  Returns ``(rows, pivot_columns)``."""
    rows = [list(r) for r in rows]
    if not rows:
        return [], []
    ncols = len(rows[0]) if ncols is None else ncols
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = Fraction(1) / rows[r][c] if not isinstance(rows[r][c], Fraction) else 1 / rows[r][c]
        rows[r] = [x * inv if x != 0 else x for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y if y != 0 else x for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(rows, ncols=None):
    return len(rref(rows, ncols)[1])


def nullspace(rows, ncols):
    """Basis of {x : A x = 0} for the matrix with the given rows."""
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    red, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            if row[f] != 0:
                v[p] = -row[f]
        basis.append(v)
    return basis


def solve(rows, rhs, ncols):
    """One solution of A x = b, or None when inconsistent."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug, ncols + 1)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for row, p in zip(red, pivots):
        x[p] = row[ncols]
    return x


def matmul(A, B):
    return [[sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in zip(*B)] for row in A]


def matvec(A, v):
    return [sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in A]


def identity(k):
    return [[Fraction(int(i == j)) for j in range(k)] for i in range(k)]


def transpose(A, ncols=None):
    if not A:
        return [[] for _ in range(ncols or 0)]
    return [list(c) for c in zip(*A)]


def column_space(A, nrows):
    """Basis (as vectors) of the span of the columns of A."""
    cols = transpose(A) if A and A[0] else []
    red, _ = rref(cols, nrows)
    return red


def span_intersection(U, V, dim):
    """Basis of span(U) ∩ span(V), both given as lists of vectors in K^dim."""
    if not U or not V:
        return []
    # x in both iff x = sum a_i u_i = sum b_j v_j
    cols = [list(u) for u in U] + [[-x for x in v] for v in V]
    rows = transpose(cols)
    kern = nullspace(rows, len(cols))
    out = []
    for k in kern:
        vec = [Fraction(0)] * dim
        for a, u in zip(k[:len(U)], U):
            if a != 0:
                vec = [x + a * y for x, y in zip(vec, u)]
        out.append(vec)
    red, _ = rref(out, dim)
    return red


class Echelon:
    """Incrementally maintained row echelon basis (for rank tracking)."""

    def __init__(self, ncols):
        self.ncols = ncols
        self.rows = {}  # pivot column -> normalized row

    def reduce(self, v):
        v = list(v)
        for c in sorted(self.rows):
            if v[c] != 0:
                f = v[c]
                row = self.rows[c]
                v = [x - f * y if y != 0 else x for x, y in zip(v, row)]
        return v

    def add(self, v):
        """Insert ``v``; return True iff the rank grew."""
        v = self.reduce(v)
        piv = next((i for i, x in enumerate(v) if x != 0), None)
        if piv is None:
            return False
        inv = 1 / v[piv]
        v = [x * inv for x in v]
        for c, row in list(self.rows.items()):
            if row[piv] != 0:
                f = row[piv]
                self.rows[c] = [x - f * y for x, y in zip(row, v)]
        self.rows[piv] = v
        return True

    @property
    def rank(self):
        return len(self.rows)

    def basis(self):
        return [self.rows[c] for c in sorted(self.rows)]


def charpoly(A):
    """Characteristic polynomial det(xI - A), coefficients low to high (Faddeev-LeVerrier)."""
    k = len(A)
    coeffs = [Fraction(0)] * (k + 1)
    coeffs[k] = Fraction(1)
    if k == 0:
        return coeffs
    M = [[Fraction(0)] * k for _ in range(k)]
    c = Fraction(1)
    for step in range(1, k + 1):
        M = [[M_ij + (c if i == j else 0) for j, M_ij in enumerate(row)] for i, row in enumerate(M)]
        AM = matmul(A, M)
        c = -sum((AM[i][i] for i in range(k)), Fraction(0)) / step
        coeffs[k - step] = c
        M = AM
    return coeffs
