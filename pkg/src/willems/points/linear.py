"""Affine-linear systems over Q (row reduction) and over Z (Smith form)."""
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

from ..core.linalg import nullspace, solve
from ..errors import NotLinear


@dataclass
class LinearSolution:
    """Solutions particular + Σ t_i direction_i, t ranging over the ring.

    ``particular`` is None when the system has no solution in the ring.
    """

    ring: str
    n: int
    particular: tuple | None
    directions: list = field(default_factory=list)

    @property
    def is_empty(self):
        return self.particular is None

    def point(self, params):
        x = list(self.particular)
        for t, d in zip(params, self.directions):
            x = [a + t * b for a, b in zip(x, d)]
        return tuple(x)


def linear_system(polys, n):
    """Rows A and right-hand side b with A x = b equivalent to the generators."""
    A, b = [], []
    for p in polys:
        if p.degree() > 1:
            raise NotLinear(f"generator {p} has degree {p.degree()}")
        if not p.is_rational():
            raise NotLinear(f"generator {p} has transcendental coefficients")
        row = [Fraction(0)] * n
        for m, c in p.terms.items():
            if sum(m):
                row[m.index(1)] = Fraction(c)
        A.append(row)
        b.append(-Fraction(p.constant_term()))
    return A, b


def smith_form(A):
    """(U, S, V) with U A V = S diagonal, U and V unimodular (integer matrices)."""
    m = len(A)
    n = len(A[0]) if m else 0
    S = [list(r) for r in A]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(a, b):
        S[a], S[b] = S[b], S[a]
        U[a], U[b] = U[b], U[a]

    def swap_cols(a, b):
        for r in S:
            r[a], r[b] = r[b], r[a]
        for r in V:
            r[a], r[b] = r[b], r[a]

    for t in range(min(m, n)):
        while True:
            entries = [(abs(S[i][j]), i, j) for i in range(t, m) for j in range(t, n) if S[i][j]]
            if not entries:
                return U, S, V
            _, i, j = min(entries)
            swap_rows(t, i)
            swap_cols(t, j)
            p = S[t][t]
            done = True
            for i in range(t + 1, m):
                q = S[i][t] // p
                if q:
                    S[i] = [x - q * y for x, y in zip(S[i], S[t])]
                    U[i] = [x - q * y for x, y in zip(U[i], U[t])]
                if S[i][t]:
                    done = False
            for j in range(t + 1, n):
                q = S[t][j] // p
                if q:
                    for r in S:
                        r[j] -= q * r[t]
                    for r in V:
                        r[j] -= q * r[t]
                if S[t][j]:
                    done = False
            if done:
                break
    return U, S, V


def solve_linear(I, ring="Q"):
    """Solution family of an ideal generated by affine-linear polynomials."""
    polys = I.groebner_polys()
    n = I.n
    if any(p.is_constant() and p for p in polys):
        return LinearSolution(ring, n, None)
    A, b = linear_system(polys, n)
    if ring == "Q":
        if not A:
            return LinearSolution(ring, n, tuple(Fraction(0) for _ in range(n)),
                                  [tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)])
        x = solve(A, b, n)
        if x is None:
            return LinearSolution(ring, n, None)
        return LinearSolution(ring, n, tuple(x), [tuple(v) for v in nullspace(A, n)])
    if ring != "Z":
        raise ValueError(f"unknown ring {ring!r}")
    rows, rhs = [], []
    for r, c in zip(A, b):
        den = lcm(*(x.denominator for x in r), c.denominator)
        rows.append([int(x * den) for x in r])
        rhs.append(int(c * den))
    if not rows:
        return LinearSolution(ring, n, tuple(Fraction(0) for _ in range(n)),
                              [tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)])
    U, S, V = smith_form(rows)
    c = [sum(u * y for u, y in zip(row, rhs)) for row in U]
    y = [0] * n
    rank = 0
    for i in range(len(S)):
        d = S[i][i] if i < n else 0
        if d:
            if c[i] % d:
                return LinearSolution(ring, n, None)
            y[i] = c[i] // d
            rank += 1
        elif c[i]:
            return LinearSolution(ring, n, None)
    x = tuple(Fraction(sum(V[r][k] * y[k] for k in range(n))) for r in range(n))
    dirs = [tuple(Fraction(V[r][k]) for r in range(n)) for k in range(rank, n)]
    return LinearSolution(ring, n, x, dirs)
