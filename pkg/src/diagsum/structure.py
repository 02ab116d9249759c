"""Bipartite-matching structure of (0,1)-patterns."""

from __future__ import annotations

from .pattern import Pattern


class NoDiagonalError(ValueError):
    """The pattern has no permutation inside its support."""


class NotFullyIndecomposableError(ValueError):
    pass


def _require_square(A: Pattern) -> int:
    if not A.is_square:
        raise ValueError(f"pattern must be square, got {A.n_rows}x{A.n_cols}")
    return A.n_rows


def max_matching(A: Pattern) -> tuple[int, list[int | None]]:
    """Maximum matching of rows to columns through the 1s of ``A``.

    Returns ``(size, row_match)`` where ``row_match[i]`` is the column
    matched to row ``i`` or ``None``. ``size`` is the term rank.
    """
    col_owner: list[int | None] = [None] * A.n_cols
    adj = [A.row_support(i) for i in range(A.n_rows)]

    def augment(i, seen):
        for j in adj[i]:
            if j in seen:
                continue
            seen.add(j)
            if col_owner[j] is None or augment(col_owner[j], seen):
                col_owner[j] = i
                return True
        return False

    size = 0
    for i in range(A.n_rows):
        if augment(i, set()):
            size += 1
    row_match: list[int | None] = [None] * A.n_rows
    for j, i in enumerate(col_owner):
        if i is not None:
            row_match[i] = j
    return size, row_match


def term_rank(A: Pattern) -> int:
    return max_matching(A)[0]


def find_support_diagonal(A: Pattern) -> tuple[int, ...] | None:
    n = _require_square(A)
    size, row_match = max_matching(A)
    if size < n:
        return None
    return tuple(row_match)


def _reaches_all(adj: list[list[int]]) -> bool:
    seen = {0}
    stack = [0]
    while stack:
        for k in adj[stack.pop()]:
            if k not in seen:
                seen.add(k)
                stack.append(k)
    return len(seen) == len(adj)


def is_fully_indecomposable(A: Pattern) -> bool:
    """Decide full indecomposability.

    With a support diagonal ``p`` moved onto the main diagonal, ``A`` is
    fully indecomposable exactly when the digraph ``i -> k`` (for
    ``A[i][p[k]] = 1``, ``i != k``) is strongly connected.
    """
    n = _require_square(A)
    if n == 1:
        return A[0, 0] == 1
    p = find_support_diagonal(A)
    if p is None:
        return False
    pos = {col: k for k, col in enumerate(p)}
    out = [[] for _ in range(n)]
    inc = [[] for _ in range(n)]
    for i, j in A.positions():
        k = pos[j]
        if k != i:
            out[i].append(k)
            inc[k].append(i)
    return _reaches_all(out) and _reaches_all(inc)


def require_fully_indecomposable(A: Pattern) -> None:
    if not is_fully_indecomposable(A):
        raise NotFullyIndecomposableError("pattern is not fully indecomposable")
