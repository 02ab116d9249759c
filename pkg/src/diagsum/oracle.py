"""Brute-force enumeration of support diagonals, for small matrices only."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import NamedTuple

from .matrix import RatMatrix, diagonal_sum, support
from .pattern import Pattern
from .structure import NoDiagonalError, term_rank

DEFAULT_LIMIT = 10**6


class OracleLimitError(RuntimeError):
    pass


class DiagonalStats(NamedTuple):
    min: Fraction
    max: Fraction
    all_equal: bool
    count: int


def enumerate_diagonals(A: Pattern, limit: int = DEFAULT_LIMIT) -> list[tuple[int, ...]]:
    """All permutations inside the support of ``A``, lexicographically."""
    if not A.is_square:
        raise ValueError("pattern must be square")
    n = A.n_rows
    adj = [A.row_support(i) for i in range(n)]
    out: list[tuple[int, ...]] = []
    image: list[int] = []
    used = [False] * n

    def extend(i):
        if i == n:
            if len(out) >= limit:
                raise OracleLimitError(f"more than {limit} diagonals")
            out.append(tuple(image))
            return
        for j in adj[i]:
            if not used[j]:
                used[j] = True
                image.append(j)
                extend(i + 1)
                image.pop()
                used[j] = False

    extend(0)
    return out


def brute_diagonal_stats(X: RatMatrix, limit: int = DEFAULT_LIMIT) -> DiagonalStats:
    sums = [diagonal_sum(X, p) for p in enumerate_diagonals(support(X), limit)]
    if not sums:
        raise NoDiagonalError("support admits no diagonal")
    lo, hi = min(sums), max(sums)
    return DiagonalStats(lo, hi, lo == hi, len(sums))


def check_symmetric_diagonals(A: Pattern, limit: int = DEFAULT_LIMIT) -> bool:
    """True iff every support permutation of a symmetric pattern is an involution."""
    if not A.is_symmetric():
        raise ValueError("pattern must be symmetric")
    return all(all(p[p[i]] == i for i in range(len(p)))
               for p in enumerate_diagonals(A, limit))


def exchange_violations(X: RatMatrix) -> list[tuple[int, int, int, int]]:
    """Positive 2x2 submatrices whose two diagonals differ although the
    complementary submatrix has full term rank ``n - 2``.

    Any such submatrix rules out constant restricted diagonal sums, so an
    RCDS matrix must return an empty list.
    """
    if not X.is_square:
        raise ValueError("matrix must be square")
    n = X.n_rows
    if n < 3:
        # complementary submatrix is empty; both diagonals extend trivially
        pairs = [(0, 1, 0, 1)] if n == 2 else []
    else:
        pairs = [(i, k, j, l) for i, k in combinations(range(n), 2)
                 for j, l in combinations(range(n), 2)]
    A = support(X)
    out = []
    for i, k, j, l in pairs:
        if not (X[i, j] and X[i, l] and X[k, j] and X[k, l]):
            continue
        if n >= 3:
            rest_r = [r for r in range(n) if r not in (i, k)]
            rest_c = [c for c in range(n) if c not in (j, l)]
            if term_rank(A.submatrix(rest_r, rest_c)) != n - 2:
                continue
        if X[i, j] + X[k, l] != X[i, l] + X[k, j]:
            out.append((i, k, j, l))
    return out
