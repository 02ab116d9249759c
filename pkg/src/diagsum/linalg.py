"""Exact linear algebra over the rationals."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence


class SingularMatrixError(ValueError):
    pass


def _integer_rows(M, b):
    """Scale each equation by the lcm of its denominators; the solution set
    is unchanged and everything becomes an integer."""
    out = []
    for row, rhs in zip(M, b):
        vals = [Fraction(x) for x in row] + [Fraction(rhs)]
        lcm = 1
        for x in vals:
            lcm = math.lcm(lcm, x.denominator)
        out.append([int(x * lcm) for x in vals])
    return out


def bareiss_solve(M: Sequence[Sequence], b: Sequence) -> list[Fraction]:
    """Solve the square system ``M x = b`` exactly.

    Forward elimination is Bareiss's fraction-free scheme on the integer
    augmented matrix, so intermediate entries stay integral and are bounded
    by minors of the input. Only the back substitution uses Fractions.
    """
    n = len(M)
    if any(len(r) != n for r in M) or len(b) != n:
        raise ValueError("bareiss_solve needs a square system")
    if n == 0:
        return []
    a = _integer_rows(M, b)
    prev = 1
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            raise SingularMatrixError("singular system")
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n + 1):
                # exact division is guaranteed by Sylvester's identity
                row_i[j] = (akk * row_i[j] - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = akk
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        s = Fraction(a[i][n])
        for j in range(i + 1, n):
            s -= a[i][j] * x[j]
        x[i] = s / a[i][i]
    return x


def rank(M: Sequence[Sequence]) -> int:
    rows = [[Fraction(x) for x in r] for r in M]
    if not rows:
        return 0
    n_cols = len(rows[0])
    r = 0
    for c in range(n_cols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        for i in range(r + 1, len(rows)):
            f = rows[i][c] / p
            if f:
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


def mat_vec(M: Sequence[Sequence], x: Sequence) -> list[Fraction]:
    return [sum((Fraction(a) * b for a, b in zip(row, x)), Fraction(0))
            for row in M]
