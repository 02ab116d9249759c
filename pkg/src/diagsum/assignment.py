"""Optimal restricted diagonals of a matrix, with exact LP-dual certificates.

The minimum and maximum diagonal sums over permutations that avoid the
zeros of ``X`` are found with the Hungarian method run on Fractions. Cells
outside the support are excluded from the cost structure altogether, so no
big-M constant is involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .matrix import RatMatrix, diagonal_sum, is_doubly_stochastic, support
from .pattern import Pattern
from .structure import NoDiagonalError


@dataclass(frozen=True)
class DiagonalCertificate:
    """An optimal permutation together with dual potentials proving it.

    For ``sense == "min"``: ``u[i] + v[j] <= x[i][j]`` on the support.
    For ``sense == "max"``: ``u[i] + v[j] >= x[i][j]`` on the support.
    Either way equality holds on the permutation and
    ``sum(u) + sum(v) == value``.
    """

    perm: tuple[int, ...]
    value: Fraction
    potentials_u: tuple[Fraction, ...]
    potentials_v: tuple[Fraction, ...]
    sense: str = "min"

    @property
    def dual_value(self) -> Fraction:
        return sum(self.potentials_u, Fraction(0)) + sum(self.potentials_v,
                                                         Fraction(0))


def _hungarian(cost, allowed):
    """Minimum-cost perfect matching restricted to ``allowed`` cells.

    Shortest augmenting path form of the Hungarian method with row
    potentials ``u`` and column potentials ``v`` (1-based internally,
    index 0 is the virtual root column). ``None`` stands for an infinite
    slack and never enters arithmetic.
    """
    n = len(cost)
    u = [Fraction(0)] * (n + 1)
    v = [Fraction(0)] * (n + 1)
    owner = [0] * (n + 1)  # owner[j] = row matched to column j
    way = [0] * (n + 1)
    for i in range(1, n + 1):
        owner[0] = i
        j0 = 0
        minv: list[Fraction | None] = [None] * (n + 1)
        used = [False] * (n + 1)
        while True:
            used[j0] = True
            i0 = owner[j0]
            delta = None
            j1 = -1
            crow = cost[i0 - 1]
            arow = allowed[i0 - 1]
            for j in range(1, n + 1):
                if used[j]:
                    continue
                if arow[j - 1]:
                    cur = crow[j - 1] - u[i0] - v[j]
                    if minv[j] is None or cur < minv[j]:
                        minv[j] = cur
                        way[j] = j0
                if minv[j] is not None and (delta is None or minv[j] < delta):
                    delta = minv[j]
                    j1 = j
            if delta is None:
                raise NoDiagonalError("support admits no diagonal")
            for j in range(n + 1):
                if used[j]:
                    u[owner[j]] += delta
                    v[j] -= delta
                elif minv[j] is not None:
                    minv[j] -= delta
            j0 = j1
            if owner[j0] == 0:
                break
        while j0:
            j1 = way[j0]
            owner[j0] = owner[j1]
            j0 = j1
    perm = [0] * n
    for j in range(1, n + 1):
        perm[owner[j] - 1] = j - 1
    return tuple(perm), tuple(u[1:]), tuple(v[1:])


def _allowed_mask(X: RatMatrix, allowed: Pattern | None):
    if allowed is None:
        allowed = support(X)
    if allowed.shape != X.shape:
        raise ValueError("support pattern shape does not match the matrix")
    return allowed.rows


def min_diagonal(X: RatMatrix, allowed: Pattern | None = None) -> DiagonalCertificate:
    if not X.is_square:
        raise ValueError("matrix must be square")
    mask = _allowed_mask(X, allowed)
    perm, u, v = _hungarian(X.rows, mask)
    return DiagonalCertificate(perm, diagonal_sum(X, perm), u, v, "min")


def max_diagonal(X: RatMatrix, allowed: Pattern | None = None) -> DiagonalCertificate:
    if not X.is_square:
        raise ValueError("matrix must be square")
    mask = _allowed_mask(X, allowed)
    negated = [[-x for x in r] for r in X.rows]
    perm, u, v = _hungarian(negated, mask)
    return DiagonalCertificate(perm, diagonal_sum(X, perm),
                               tuple(-a for a in u), tuple(-b for b in v), "max")


def extreme_diagonal_sums(X: RatMatrix, allowed: Pattern | None = None):
    """Return ``(min_cert, max_cert)`` over diagonals inside the support.

    ``allowed`` overrides the support used to restrict the diagonals; by
    default it is the nonzero pattern of ``X``.
    """
    return min_diagonal(X, allowed), max_diagonal(X, allowed)


def certificate_holds(X: RatMatrix, cert: DiagonalCertificate,
                      allowed: Pattern | None = None) -> bool:
    """Check dual feasibility, tightness on the permutation, and value."""
    mask = _allowed_mask(X, allowed)
    u, v = cert.potentials_u, cert.potentials_v
    for i, row in enumerate(mask):
        for j, a in enumerate(row):
            if not a:
                continue
            s = u[i] + v[j]
            if cert.sense == "min" and s > X[i, j]:
                return False
            if cert.sense == "max" and s < X[i, j]:
                return False
    if any(not mask[i][j] or u[i] + v[j] != X[i, j]
           for i, j in enumerate(cert.perm)):
        return False
    return cert.value == diagonal_sum(X, cert.perm) == cert.dual_value


def is_rcds_matrix(X: RatMatrix) -> bool:
    """Doubly stochastic with every zero-avoiding diagonal sum equal."""
    if not X.is_square or not is_doubly_stochastic(X):
        return False
    try:
        lo, hi = extreme_diagonal_sums(X)
    except NoDiagonalError:
        return False
    return lo.value == hi.value


def diagonal_width(X: RatMatrix) -> Fraction:
    """Max minus min diagonal sum over diagonals avoiding the zeros of X.

    Computed from the dual side as ``theta_upper - theta_lower``, where
    ``theta_upper`` is the optimal value over potentials dominating ``X``
    on its support and ``theta_lower`` over potentials dominated by it.
    """
    if not X.is_square:
        raise ValueError("matrix must be square")
    if not is_doubly_stochastic(X):
        raise ValueError("diagonal width needs a doubly stochastic matrix")
    lo, hi = extreme_diagonal_sums(X)
    width = hi.dual_value - lo.dual_value
    assert width == hi.value - lo.value
    return width


def width_upper_bound(X: RatMatrix, u: Sequence, v: Sequence,
                      u_upper: Sequence, v_upper: Sequence) -> Fraction:
    """Upper bound on the diagonal width from two feasible potential pairs.

    Requires ``u[i] + v[j] <= x[i][j] <= u_upper[i] + v_upper[j]`` on the
    support and returns ``sum(u_upper - u) + sum(v_upper - v)``.
    """
    if not X.is_square:
        raise ValueError("matrix must be square")
    n = X.n_rows
    vecs = [[Fraction(a) for a in w] for w in (u, v, u_upper, v_upper)]
    if any(len(w) != n for w in vecs):
        raise ValueError("potential vectors must have length n")
    lu, lv, hu, hv = vecs
    for i, j in support(X).positions():
        if lu[i] + lv[j] > X[i, j]:
            raise ValueError(f"lower potentials infeasible at ({i}, {j})")
        if hu[i] + hv[j] < X[i, j]:
            raise ValueError(f"upper potentials infeasible at ({i}, {j})")
    return sum((b - a for a, b in zip(lu, hu)), Fraction(0)) + sum(
        (b - a for a, b in zip(lv, hv)), Fraction(0))
