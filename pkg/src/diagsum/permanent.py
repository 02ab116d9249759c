"""Permanents of (0,1)-patterns, permanental minors, and the CPS test.

The main counter expands along a line of minimum remaining degree and
memoizes on the (remaining rows, remaining columns) bitmask pair. Deleting
row ``i`` and column ``j`` from the full pattern is just another key in the
same cache, which is what makes computing every permanental minor of a
sparse 27x27 pattern cheap. Dense small patterns go through Ryser's formula
instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .assignment import extreme_diagonal_sums
from .matrix import RatMatrix
from .pattern import Pattern
from .structure import NoDiagonalError

RYSER_MAX_N = 20


class _MatchingCounter:
    """Perfect-matching counts of sub-patterns of one fixed pattern.

    The cache is owned by the instance; share an instance only within a
    single thread.
    """

    def __init__(self, A: Pattern):
        self.row_masks = A.row_masks
        self.col_masks = A.col_masks
        self.cache: dict[tuple[int, int], int] = {}

    def count(self, rows: int, cols: int) -> int:
        if rows == 0:
            return 1
        key = (rows, cols)
        hit = self.cache.get(key)
        if hit is not None:
            return hit

        best_deg, best_is_row, best = None, True, -1
        r = rows
        while r:
            low = r & -r
            r ^= low
            i = low.bit_length() - 1
            d = (self.row_masks[i] & cols).bit_count()
            if best_deg is None or d < best_deg:
                best_deg, best_is_row, best = d, True, i
                if d <= 1:
                    break
        if best_deg > 1:
            c = cols
            while c:
                low = c & -c
                c ^= low
                j = low.bit_length() - 1
                d = (self.col_masks[j] & rows).bit_count()
                if d < best_deg:
                    best_deg, best_is_row, best = d, False, j
                    if d <= 1:
                        break

        total = 0
        if best_is_row:
            bit = 1 << best
            m = self.row_masks[best] & cols
            while m:
                low = m & -m
                m ^= low
                total += self.count(rows & ~bit, cols & ~low)
        else:
            bit = 1 << best
            m = self.col_masks[best] & rows
            while m:
                low = m & -m
                m ^= low
                total += self.count(rows & ~low, cols & ~bit)
        self.cache[key] = total
        return total

    def minor(self, i: int, j: int, n: int) -> int:
        full = (1 << n) - 1
        return self.count(full & ~(1 << i), full & ~(1 << j))


def permanent_ryser(A: Pattern) -> int:
    """Ryser's inclusion-exclusion formula, Gray-code ordered over column subsets."""
    if not A.is_square:
        raise ValueError("pattern must be square")
    n = A.n_rows
    rows = A.rows
    row_sums = [0] * n
    total = 0
    subset = 0
    for k in range(1, 1 << n):
        # flip the column given by the lowest set bit of k
        j = (k & -k).bit_length() - 1
        subset ^= 1 << j
        sign = 1 if subset >> j & 1 else -1
        for i in range(n):
            if rows[i][j]:
                row_sums[i] += sign
        prod = 1
        for s in row_sums:
            if s == 0:
                prod = 0
                break
            prod *= s
        if prod:
            total += -prod if (n - subset.bit_count()) & 1 else prod
    return total


def permanent(A: Pattern) -> int:
    """Number of permutations inside the support of a square pattern."""
    if not A.is_square:
        raise ValueError("pattern must be square")
    n = A.n_rows
    if n <= RYSER_MAX_N and 2 * A.count() >= n * n:
        return permanent_ryser(A)
    full = (1 << n) - 1
    return _MatchingCounter(A).count(full, full)


@dataclass(frozen=True)
class PermanentReport:
    """Permanent and permanental minors of the 1s of a pattern.

    ``minor_matrix[i][j]`` is ``per A(i|j)`` where ``A[i][j] == 1`` and
    ``None`` where ``A[i][j] == 0``; on the support this is the sum of all
    permutation matrices inside ``A``.
    """

    permanent: int
    minor_matrix: tuple[tuple[int | None, ...], ...]
    gamma: int | None = None

    def as_matrix(self) -> RatMatrix:
        """The minor matrix with absent cells as zeros."""
        return RatMatrix([[0 if x is None else x for x in r]
                          for r in self.minor_matrix])


def hat_matrix(A: Pattern) -> PermanentReport:
    if not A.is_square:
        raise ValueError("pattern must be square")
    n = A.n_rows
    counter = _MatchingCounter(A)
    full = (1 << n) - 1
    per = counter.count(full, full)
    if per == 0:
        raise NoDiagonalError("pattern has no diagonal")
    minors = tuple(
        tuple(counter.minor(i, j, n) if a else None for j, a in enumerate(row))
        for i, row in enumerate(A.rows))
    return PermanentReport(per, minors)


def is_cps(A: Pattern, report: PermanentReport | None = None):
    """Whether every support diagonal of the minor matrix has one sum.

    Returns ``(verdict, gamma)`` with ``gamma`` the common sum or ``None``.
    """
    if report is None:
        report = hat_matrix(A)
    lo, hi = extreme_diagonal_sums(report.as_matrix(), allowed=A)
    if lo.value == hi.value:
        return True, int(lo.value)
    return False, None


def cps_report(A: Pattern) -> PermanentReport:
    report = hat_matrix(A)
    ok, gamma = is_cps(A, report)
    return PermanentReport(report.permanent, report.minor_matrix, gamma)


def normalized_hat(A: Pattern) -> RatMatrix:
    """``A-hat / per(A)``: doubly stochastic whenever A has total support."""
    report = hat_matrix(A)
    return report.as_matrix() / Fraction(report.permanent)


# Published 27x27 cubic biadjacency matrix labelled as the Gray graph: the
# three column indices (0-based) holding a 1 in each row.
_GRAY_PUBLISHED_ROWS = (
    (0, 1, 6), (1, 2, 24), (2, 3, 22), (3, 4, 18), (4, 5, 10), (5, 6, 12),
    (6, 7, 20), (7, 8, 13), (4, 8, 9), (9, 10, 23), (10, 11, 25),
    (11, 12, 17), (2, 12, 13), (13, 14, 21), (1, 14, 15), (11, 15, 16),
    (9, 16, 17), (17, 18, 26), (5, 18, 19), (0, 19, 20), (16, 20, 21),
    (8, 21, 22), (15, 22, 23), (19, 23, 24), (3, 24, 25), (7, 25, 26),
    (0, 14, 26),
)

GRAY_LCF = ((-25, 7, -7, 13, -13, 25), 9)


def gray_graph_pattern() -> Pattern:
    """The published 27x27 cubic pattern labelled as the Gray graph.

    Note: this matrix is cubic and fully indecomposable but is not
    isomorphic to the Gray graph (it has 6-cycles). Use
    :func:`gray_graph_from_lcf` for the graph itself.
    """
    return Pattern.from_positions(27, 27, [(i, j) for i, cols in
                                           enumerate(_GRAY_PUBLISHED_ROWS)
                                           for j in cols])


def gray_graph_from_lcf() -> Pattern:
    """Biadjacency matrix of the Gray graph built from its LCF code
    ``[-25, 7, -7, 13, -13, 25]^9``: rows are the even vertices of the
    54-cycle, columns the odd ones."""
    jumps, reps = GRAY_LCF
    order = 54
    shifts = jumps * reps
    edges = set()
    for v in range(order):
        for w in ((v + 1) % order, (v + shifts[v]) % order):
            edges.add((min(v, w), max(v, w)))
    positions = []
    for a, b in edges:
        even, odd = (a, b) if a % 2 == 0 else (b, a)
        positions.append((even // 2, odd // 2))
    return Pattern.from_positions(27, 27, positions)
