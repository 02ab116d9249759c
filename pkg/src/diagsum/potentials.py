"""Row/column potentials from the signless Laplacian system ``H x = e``.

For a fully indecomposable pattern ``A`` the system

    D_R u + A v = e,    A^T u + D_S v = e

has a solution that is unique up to ``(u + c, v - c)``. The pattern is an
RCDS pattern exactly when ``u[i] + v[j] > 0`` on every 1 of ``A``; the
matrix with entries ``u[i] + v[j]`` on the support is then the unique
doubly stochastic matrix with that support and constant restricted
diagonal sums.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .linalg import SingularMatrixError, bareiss_solve, mat_vec
from .matrix import RatMatrix
from .pattern import Pattern
from .structure import NotFullyIndecomposableError, require_fully_indecomposable


@dataclass(frozen=True)
class Potentials:
    u: tuple[Fraction, ...]
    v: tuple[Fraction, ...]
    alpha: Fraction = Fraction(1)

    def shifted(self, c) -> "Potentials":
        c = Fraction(c)
        return Potentials(tuple(a + c for a in self.u),
                          tuple(b - c for b in self.v), self.alpha)

    @property
    def total(self) -> Fraction:
        return sum(self.u, Fraction(0)) + sum(self.v, Fraction(0))


@dataclass(frozen=True)
class RcdsDecision:
    is_rcds_pattern: bool
    potentials: Potentials
    realization: RatMatrix | None = None
    constant_sum: Fraction | None = None
    violating_positions: list[tuple[int, int]] = field(default_factory=list)


def build_signless_laplacian(A: Pattern) -> RatMatrix:
    """The ``2n x 2n`` block matrix ``[[D_R, A], [A^T, D_S]]``."""
    if not A.is_square:
        raise ValueError("pattern must be square")
    n = A.n_rows
    r, s = A.row_sums(), A.col_sums()
    H = [[0] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        H[i][i] = r[i]
        H[n + i][n + i] = s[i]
    for i, j in A.positions():
        H[i][n + j] = 1
        H[n + j][i] = 1
    return RatMatrix(H)


def solve_potentials(A: Pattern) -> Potentials:
    """Exact solution of ``H x = e`` with the gauge ``v[n-1] = 0``.

    Eliminating ``u = D_R^{-1}(e - A v)`` leaves the singular symmetric
    system ``(A^T D_R^{-1} A - D_S) v = A^T D_R^{-1} e - e`` whose null
    space is spanned by ``e``. Fixing the last component of ``v`` and
    dropping the last (dependent) equation gives a nonsingular system.
    """
    if not A.is_square:
        raise ValueError("pattern must be square")
    require_fully_indecomposable(A)
    n = A.n_rows
    r, s = A.row_sums(), A.col_sums()
    cols_of = [A.row_support(i) for i in range(n)]

    M = [[Fraction(0)] * n for _ in range(n)]
    b = [Fraction(-1)] * n
    for i in range(n):
        w = Fraction(1, r[i])
        for j in cols_of[i]:
            b[j] += w
            for k in cols_of[i]:
                M[j][k] += w
    for j in range(n):
        M[j][j] -= s[j]
    assert sum(b) == 0, "right-hand side must be orthogonal to e"

    try:
        head = bareiss_solve([row[:n - 1] for row in M[:n - 1]], b[:n - 1])
    except SingularMatrixError:
        raise NotFullyIndecomposableError(
            "reduced system is singular beyond its known null vector") from None
    v = head + [Fraction(0)]
    u = [(1 - sum((v[j] for j in cols_of[i]), Fraction(0))) / r[i]
         for i in range(n)]

    H = build_signless_laplacian(A)
    residual = mat_vec(H.rows, u + v)
    assert all(x == 1 for x in residual), "H x = e not satisfied"
    return Potentials(tuple(u), tuple(v), Fraction(1))


def potential_matrix(A: Pattern, pot: Potentials) -> RatMatrix:
    """``Y(u, v)`` restricted to ``A``: ``u[i] + v[j]`` on 1s, 0 elsewhere."""
    return RatMatrix([[pot.u[i] + pot.v[j] if a else 0
                       for j, a in enumerate(row)]
                      for i, row in enumerate(A.rows)])


def decide_rcds_pattern(A: Pattern) -> RcdsDecision:
    pot = solve_potentials(A)
    bad = [(i, j) for i, j in A.positions() if pot.u[i] + pot.v[j] <= 0]
    if bad:
        return RcdsDecision(False, pot, violating_positions=bad)
    return RcdsDecision(True, pot, potential_matrix(A, pot), pot.total)


def symmetrize_rcds(A: Pattern) -> tuple[list[Fraction], RatMatrix]:
    """Symmetric RCDS matrix ``A o W`` with ``W[i][j] = w[i] + w[j]``."""
    if not A.is_symmetric():
        raise ValueError("pattern must be symmetric")
    decision = decide_rcds_pattern(A)
    if not decision.is_rcds_pattern:
        raise ValueError("pattern is not an RCDS pattern")
    u, v = decision.potentials.u, decision.potentials.v
    w = [(a + b) / 2 for a, b in zip(u, v)]
    X = RatMatrix([[w[i] + w[j] if a else 0 for j, a in enumerate(row)]
                   for i, row in enumerate(A.rows)])
    return w, X
