"""Exact rational matrices, matrix I/O, and the basic doubly stochastic checks.

Scalars are :class:`fractions.Fraction` throughout. Nothing in this module
touches floating point; decimal input tokens are converted exactly.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from typing import Iterable, Sequence

from .pattern import Pattern

Rational = Fraction
Permutation = tuple[int, ...]


class ConvergenceError(RuntimeError):
    """Raised when an iterative procedure runs out of iterations."""


def to_rational(token) -> Fraction:
    """Convert an integer, Fraction or string token to an exact Fraction.

    Strings may be integers (``"3"``), fractions (``"2/3"``) or finite
    decimals (``"0.25"``, ``"1e-3"``). Floats are rejected because they
    are not exact.
    """
    if isinstance(token, bool) or isinstance(token, float):
        raise ValueError(f"inexact token {token!r}")
    if isinstance(token, (int, Fraction)):
        return Fraction(token)
    if not isinstance(token, str):
        raise ValueError(f"unsupported token {token!r}")
    try:
        return Fraction(token.strip())
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"malformed token {token!r}") from None


class RatMatrix:
    """Immutable dense matrix of Fractions."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Iterable]):
        data = tuple(tuple(to_rational(x) for x in row) for row in rows)
        if not data or not data[0]:
            raise ValueError("empty matrix")
        width = len(data[0])
        if any(len(r) != width for r in data):
            raise ValueError("ragged rows")
        self._rows = data

    @classmethod
    def from_function(cls, n_rows: int, n_cols: int, f) -> "RatMatrix":
        return cls([[f(i, j) for j in range(n_cols)] for i in range(n_rows)])

    @classmethod
    def zeros(cls, n: int, m: int | None = None) -> "RatMatrix":
        return cls([[0] * (n if m is None else m) for _ in range(n)])

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls.from_function(n, n, lambda i, j: int(i == j))

    @classmethod
    def from_pattern(cls, pattern: Pattern, value=1) -> "RatMatrix":
        v = to_rational(value)
        return cls([[v if a else 0 for a in r] for r in pattern.rows])

    @property
    def n_rows(self) -> int:
        return len(self._rows)

    @property
    def n_cols(self) -> int:
        return len(self._rows[0])

    @property
    def shape(self) -> tuple[int, int]:
        return self.n_rows, self.n_cols

    @property
    def is_square(self) -> bool:
        return self.n_rows == self.n_cols

    @property
    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    def __getitem__(self, key):
        if isinstance(key, tuple):
            i, j = key
            return self._rows[i][j]
        return self._rows[key]

    def __iter__(self):
        return iter(self._rows)

    def __eq__(self, other):
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        return f"RatMatrix({[[str(x) for x in r] for r in self._rows]})"

    def __str__(self):
        return format_matrix(self)

    def __mul__(self, scalar) -> "RatMatrix":
        c = to_rational(scalar)
        return RatMatrix([[c * x for x in r] for r in self._rows])

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "RatMatrix":
        c = to_rational(scalar)
        if c == 0:
            raise ZeroDivisionError("matrix divided by zero")
        return RatMatrix([[x / c for x in r] for r in self._rows])

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return RatMatrix([[a + b for a, b in zip(r, s)]
                          for r, s in zip(self._rows, other._rows)])

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        return self + (-1) * other

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._rows[i]

    def col(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self._rows)

    def row_sums(self) -> list[Fraction]:
        return [sum(r, Fraction(0)) for r in self._rows]

    def col_sums(self) -> list[Fraction]:
        return [sum(c, Fraction(0)) for c in zip(*self._rows)]

    def transpose(self) -> "RatMatrix":
        return RatMatrix(zip(*self._rows))

    def is_symmetric(self) -> bool:
        return self.is_square and self._rows == tuple(zip(*self._rows))

    def to_lists(self) -> list[list[Fraction]]:
        return [list(r) for r in self._rows]


def _check_square(X) -> int:
    if not X.is_square:
        raise ValueError(f"matrix must be square, got {X.n_rows}x{X.n_cols}")
    return X.n_rows


def parse_matrix(text: str, format: str = "plain") -> RatMatrix:
    """Parse a matrix from text.

    ``plain`` is one row per line with whitespace-separated tokens; text
    after ``#`` is ignored;
    ``json`` is an object ``{"n": n, "rows": [[token, ...], ...]}``.
    """
    if format == "plain":
        rows = [r for r in (line.split("#", 1)[0].split()
                            for line in text.splitlines()) if r]
        if not rows:
            raise ValueError("empty matrix input")
        if any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged rows")
        return RatMatrix(rows)
    if format == "json":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValueError(f"invalid JSON: {exc}") from None
        if not isinstance(obj, dict) or "rows" not in obj:
            raise ValueError('JSON matrix must be an object with "rows"')
        rows = obj["rows"]
        if not isinstance(rows, list) or not rows:
            raise ValueError("empty matrix input")
        if not all(isinstance(r, list) for r in rows):
            raise ValueError('"rows" must be a list of lists')
        if "n" in obj and obj["n"] != len(rows):
            raise ValueError(f'"n" is {obj["n"]} but {len(rows)} rows given')
        if any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged rows")
        return RatMatrix(rows)
    raise ValueError(f"unknown matrix format {format!r}")


def format_matrix(X: RatMatrix, format: str = "plain") -> str:
    """Serialize with every entry in lowest terms (``str(Fraction)``)."""
    if format == "plain":
        return "\n".join(" ".join(str(x) for x in r) for r in X.rows)
    if format == "json":
        return json.dumps({"n": X.n_rows,
                           "rows": [[str(x) for x in r] for r in X.rows]})
    raise ValueError(f"unknown matrix format {format!r}")


def is_doubly_stochastic(X: RatMatrix) -> bool:
    _check_square(X)
    if any(x < 0 for r in X.rows for x in r):
        return False
    return all(s == 1 for s in X.row_sums()) and all(
        s == 1 for s in X.col_sums())


def support(X: RatMatrix) -> Pattern:
    return Pattern([[x != 0 for x in r] for r in X.rows])


def check_permutation(perm: Sequence[int], n: int | None = None) -> Permutation:
    perm = tuple(perm)
    if n is not None and len(perm) != n:
        raise ValueError(f"permutation has length {len(perm)}, expected {n}")
    if sorted(perm) != list(range(len(perm))):
        raise ValueError(f"{perm} is not a permutation of 0..{len(perm) - 1}")
    return perm


def diagonal_sum(X: RatMatrix, perm: Sequence[int]) -> Fraction:
    n = _check_square(X)
    perm = check_permutation(perm, n)
    return sum((X[i, perm[i]] for i in range(n)), Fraction(0))


def _round_dyadic(x: Fraction, bits: int) -> Fraction:
    return Fraction(round(x * (1 << bits)), 1 << bits)


def sinkhorn_balance(X: RatMatrix, tolerance=Fraction(1, 10**12),
                     max_iters: int = 10_000) -> RatMatrix:
    """Scale rows and columns alternately until all line sums are near 1.

    The result is exactly ``D1 @ X @ D2`` for positive rational diagonal
    matrices, so the support never changes. The scaling factors are rounded
    to dyadic rationals each sweep; without that the exact denominators grow
    exponentially with the iteration count. Convergence is judged by
    comparing every line sum to 1 exactly against ``tolerance``.
    """
    n = _check_square(X)
    tol = to_rational(tolerance)
    if tol < 0:
        raise ValueError("tolerance must be nonnegative")
    if max_iters < 1:
        raise ValueError("max_iters must be positive")
    if any(x < 0 for r in X.rows for x in r):
        raise ValueError("matrix must be nonnegative")
    if any(s == 0 for s in X.row_sums()):
        raise ValueError("zero row")
    if any(s == 0 for s in X.col_sums()):
        raise ValueError("zero column")

    # rounding error must sit well below the tolerance
    bits = 64 if tol == 0 else max(
        64, 2 * math.ceil(math.log2(tol.denominator / max(tol.numerator, 1))) + 32)

    def converged(M):
        return all(abs(s - 1) <= tol for s in M.row_sums()) and all(
            abs(s - 1) <= tol for s in M.col_sums())

    if converged(X):
        return X
    d1 = [Fraction(1)] * n
    d2 = [Fraction(1)] * n
    for _ in range(max_iters):
        for i in range(n):
            s = sum((X[i, j] * d2[j] for j in range(n)), Fraction(0))
            d1[i] = _round_dyadic(1 / s, bits) or 1 / s
        for j in range(n):
            s = sum((d1[i] * X[i, j] for i in range(n)), Fraction(0))
            d2[j] = _round_dyadic(1 / s, bits) or 1 / s
        Y = RatMatrix([[d1[i] * X[i, j] * d2[j] for j in range(n)]
                       for i in range(n)])
        if converged(Y):
            return Y
    raise ConvergenceError(f"Sinkhorn did not converge in {max_iters} iterations")
