"""Explicit families of doubly stochastic matrices with constant restricted
diagonal sums, and a Gale-Ryser pattern builder."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .matrix import RatMatrix, is_doubly_stochastic, to_rational
from .pattern import Pattern


def uniform(n: int) -> RatMatrix:
    if n < 1:
        raise ValueError("n must be positive")
    return RatMatrix([[Fraction(1, n)] * n for _ in range(n)])


def regular_rcds(A: Pattern, k: int) -> RatMatrix:
    """``(1/k) A`` for a pattern with exactly ``k`` ones per line."""
    if not A.is_square:
        raise ValueError("pattern must be square")
    if k < 1 or any(s != k for s in A.row_sums() + A.col_sums()):
        raise ValueError(f"pattern is not {k}-regular")
    return RatMatrix.from_pattern(A, Fraction(1, k))


def tridiagonal_system(n: int) -> tuple[list[Fraction], list[Fraction]]:
    """Solve ``x[i-1] + 4 x[i] + x[i+1] = 2`` for ``i = 1..n-1``.

    Boundary values ``x[0] = x[n] = 0``. Returns ``(x, pivots)`` where
    ``x`` holds the ``n - 1`` superdiagonal entries and ``pivots[i]`` is the
    diagonal value met by forward elimination at equation ``i + 1``
    (``4``, ``15/4``, ``56/15``, ...).
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    m = n - 1
    pivots = [Fraction(4)]
    rhs = [Fraction(1, 2)]
    for _ in range(1, m):
        h = 4 - 1 / pivots[-1]
        pivots.append(h)
        rhs.append((2 - rhs[-1]) / h)
    x = [Fraction(0)] * m
    x[m - 1] = rhs[m - 1]
    for i in range(m - 2, -1, -1):
        x[i] = rhs[i] - x[i + 1] / pivots[i]
    return x, pivots


def tridiagonal_rcds(n: int) -> RatMatrix:
    """Symmetric tridiagonal doubly stochastic matrix with constant sums
    along every diagonal that avoids its zeros."""
    x, pivots = tridiagonal_system(n)
    # h_2 = 15/4 exactly and x_1 = 1/2 when n = 2, so the upper bounds close
    assert all(Fraction(37, 10) < h <= Fraction(15, 4) for h in pivots[1:])
    assert all(Fraction(1, 5) < t <= Fraction(1, 2) for t in x)
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        left = x[i - 1] if i > 0 else 0
        right = x[i] if i < n - 1 else 0
        rows[i][i] = 1 - left - right
        if i < n - 1:
            rows[i][i + 1] = rows[i + 1][i] = x[i]
    return RatMatrix(rows)


def star_rcds(n: int) -> RatMatrix | None:
    """Star-with-loops candidate; ``None`` when infeasible (``n >= 5``).

    Equal 2x2 exchanges force every edge weight to ``2/(n+2)``, leaving
    ``1 - 2(n-1)/(n+2)`` in the corner, which is negative from ``n = 5`` on.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    x = Fraction(2, n + 2)
    corner = 1 - (n - 1) * x
    if corner < 0:
        return None
    rows = [[Fraction(0)] * n for _ in range(n)]
    rows[0][0] = corner
    for i in range(1, n):
        rows[0][i] = rows[i][0] = x
        rows[i][i] = 1 - x
    return RatMatrix(rows)


def corner_block(r: int, s: int, n: int) -> RatMatrix:
    """Matrix with an ``(n-r) x s`` zero block in the lower left corner."""
    if not 0 < s < r < n:
        raise ValueError("corner_block needs 0 < s < r < n")

    def entry(i, j):
        if i < r:
            return Fraction(1, r) if j < s else Fraction(r - s, r * (n - s))
        return Fraction(0) if j < s else Fraction(1, n - s)

    return RatMatrix.from_function(n, n, entry)


@dataclass(frozen=True)
class ZigZagSpec:
    """Blocks ``X_1, X_2, ...`` of a staircase matrix.

    Odd blocks ``X_1, X_3, ...`` sit on the staircase, each even block
    ``X_{2m}`` to the right of ``X_{2m-1}`` and above ``X_{2m+1}``.
    ``block_dims[i]`` is ``(rows, cols)`` of block ``i + 1`` and
    ``constants[i]`` its constant value. An odd number of blocks means the
    last row band holds a single block (``last_block_void``).
    """

    block_dims: tuple[tuple[int, int], ...]
    constants: tuple[Fraction, ...]
    last_block_void: bool = False

    def __post_init__(self):
        object.__setattr__(self, "block_dims",
                           tuple((int(a), int(b)) for a, b in self.block_dims))
        object.__setattr__(self, "constants",
                           tuple(to_rational(c) for c in self.constants))

    def bands(self) -> tuple[list[int], list[int]]:
        """Row-band heights and column-band widths, validated."""
        dims, k = self.block_dims, len(self.block_dims)
        if k < 2:
            raise ValueError("a zig-zag matrix needs at least two blocks")
        if len(self.constants) != k:
            raise ValueError("one constant per block required")
        if self.last_block_void != (k % 2 == 1):
            raise ValueError("last_block_void must match an odd block count")
        if any(a < 1 or b < 1 for a, b in dims):
            raise ValueError("block dimensions must be positive")
        heights, widths = [], [dims[0][1]]
        for t in range(0, k, 2):
            h = dims[t][0]
            if t + 1 < k:
                if dims[t + 1][0] != h:
                    raise ValueError(f"blocks {t + 1} and {t + 2} differ in height")
                widths.append(dims[t + 1][1])
            heights.append(h)
            if t + 2 < k and dims[t + 2][1] != dims[t + 1][1]:
                raise ValueError(f"blocks {t + 2} and {t + 3} differ in width")
        if sum(heights) != sum(widths):
            raise ValueError("assembled matrix is not square")
        return heights, widths


def zigzag_dimension_ok(heights: Sequence[int], widths: Sequence[int]) -> bool:
    """Staircase condition ``W_t < H_t < W_{t+1}`` for every interior step,
    with ``H_t``/``W_t`` the cumulative band sizes."""
    H = W = 0
    for t in range(len(heights) - 1):
        H += heights[t]
        W += widths[t]
        if not W < H < W + widths[t + 1]:
            return False
    return True


def zigzag(spec: ZigZagSpec) -> RatMatrix:
    heights, widths = spec.bands()
    if not zigzag_dimension_ok(heights, widths):
        raise ValueError("zig-zag dimension condition violated")
    n = sum(heights)
    rows = [[Fraction(0)] * n for _ in range(n)]
    col_start = [sum(widths[:m]) for m in range(len(widths))]
    for t, ((h, w), c) in enumerate(zip(spec.block_dims, spec.constants)):
        band = t // 2
        c0 = col_start[band + (t % 2)]
        r0 = sum(heights[:band])
        for i in range(r0, r0 + h):
            for j in range(c0, c0 + w):
                rows[i][j] = c
    X = RatMatrix(rows)
    if not is_doubly_stochastic(X):
        raise ValueError("block constants do not give unit line sums")
    return X


def corner_block_spec(r: int, s: int, n: int) -> ZigZagSpec:
    """The three-block staircase that reproduces :func:`corner_block`."""
    X = corner_block(r, s, n)
    return ZigZagSpec(((r, s), (r, n - s), (n - r, n - s)),
                      (X[0, 0], X[0, n - 1], X[n - 1, n - 1]),
                      last_block_void=True)


def circulant_pattern(p: int, k: int) -> Pattern:
    """Sum of the cyclic shifts ``0..k-1``: a ``k``-regular ``p x p`` pattern."""
    if not 0 <= k <= p:
        raise ValueError("need 0 <= k <= p")
    return Pattern([[int((j - i) % p < k) for j in range(p)] for i in range(p)])


def two_by_two_block(k1: int, k2: int, k3: int, k4: int, p: int,
                     sub_patterns: Sequence[Pattern] | None = None) -> RatMatrix:
    """Two-by-two block construction from regular sub-patterns.

    The blocks carry the values ``k4, k3 / k2, k1`` on sub-patterns that are
    ``k1, k2 / k3, k4``-regular respectively, scaled by
    ``1 / (k1 k4 + k2 k3)``. Requires ``k1 + k4 == k2 + k3``.
    """
    ks = (k1, k2, k3, k4)
    if any(not 1 <= k <= p for k in ks):
        raise ValueError("each k must satisfy 1 <= k <= p")
    if k1 + k4 != k2 + k3:
        raise ValueError(f"balance condition fails: {k1}+{k4} != {k2}+{k3}")
    if sub_patterns is None:
        sub_patterns = [circulant_pattern(p, k) for k in ks]
    if len(sub_patterns) != 4:
        raise ValueError("four sub-patterns required")
    for idx, (P, k) in enumerate(zip(sub_patterns, ks), 1):
        if P.shape != (p, p) or any(s != k for s in P.row_sums() + P.col_sums()):
            raise ValueError(f"sub-pattern {idx} is not {k}-regular of order {p}")
    values = (k4, k3, k2, k1)
    alpha = k1 * k4 + k2 * k3
    n = 2 * p
    rows = [[Fraction(0)] * n for _ in range(n)]
    for b, (P, val) in enumerate(zip(sub_patterns, values)):
        bi, bj = divmod(b, 2)
        for i, j in P.positions():
            rows[bi * p + i][bj * p + j] = Fraction(val, alpha)
    return RatMatrix(rows)


def gale_ryser(R: Sequence[int], S: Sequence[int]) -> Pattern | None:
    """A (0,1)-matrix with row sums ``R`` and column sums ``S``, or ``None``.

    Columns are filled in nonincreasing order of demand, each from the rows
    with the largest remaining demand (ties to the lower index). This greedy
    succeeds exactly when ``S`` is majorized by the conjugate of ``R``.
    """
    R, S = list(R), list(S)
    if any(x < 0 for x in R + S):
        raise ValueError("line sums must be nonnegative")
    if sum(R) != sum(S):
        raise ValueError("row and column sums have different totals")
    if not R or not S:
        raise ValueError("need at least one row and one column")
    m, n = len(R), len(S)
    if not majorized(S, conjugate(R, n)):
        return None
    remaining = R[:]
    rows = [[0] * n for _ in range(m)]
    for j in sorted(range(n), key=lambda c: (-S[c], c)):
        chosen = sorted(range(m), key=lambda i: (-remaining[i], i))[:S[j]]
        if any(remaining[i] == 0 for i in chosen):
            return None
        for i in chosen:
            rows[i][j] = 1
            remaining[i] -= 1
    return Pattern(rows)


def conjugate(R: Sequence[int], length: int) -> list[int]:
    """Conjugate partition ``R*[k] = #{i : R[i] > k}`` for ``k < length``."""
    return [sum(1 for r in R if r > k) for k in range(length)]


def majorized(S: Sequence[int], T: Sequence[int]) -> bool:
    """True if ``S`` is majorized by ``T`` (equal totals, dominated partial
    sums of the nonincreasing rearrangements)."""
    a, b = sorted(S, reverse=True), sorted(T, reverse=True)
    width = max(len(a), len(b))
    a += [0] * (width - len(a))
    b += [0] * (width - len(b))
    if sum(a) != sum(b):
        return False
    pa = pb = 0
    for x, y in zip(a, b):
        pa += x
        pb += y
        if pa > pb:
            return False
    return True


def class1(k: int, t: int, p: int) -> RatMatrix:
    """``p`` copies of ``t I_k`` stacked over a (0,1)-block with constant
    line sums, all scaled by ``1/(t p)``."""
    if min(k, t, p) < 1:
        raise ValueError("k, t, p must be positive")
    if t > k:
        raise ValueError("class1 needs t <= k")
    n = k * p
    top = [[Fraction(t if j % k == i else 0, t * p) for j in range(n)]
           for i in range(k)]
    if n == k:
        return RatMatrix(top)
    block = gale_ryser([t * p] * (n - k), [t * (p - 1)] * n)
    if block is None:  # excluded by t <= k, kept as a guard
        raise ValueError("no (0,1)-matrix with the required line sums")
    bottom = [[Fraction(a, t * p) for a in row] for row in block.rows]
    return RatMatrix(top + bottom)


def derangement_rcds(n: int) -> RatMatrix:
    """``(J_n - I_n) / (n - 1)``."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return RatMatrix.from_function(
        n, n, lambda i, j: Fraction(0) if i == j else Fraction(1, n - 1))
