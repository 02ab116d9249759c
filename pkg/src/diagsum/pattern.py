"""(0,1)-matrices describing where a matrix is allowed to be nonzero."""

from __future__ import annotations

from typing import Iterable, Sequence


class Pattern:
    """Immutable rectangular (0,1)-matrix.

    Entries are stored as a tuple of row tuples holding ``0``/``1``; row and
    column bitmasks are cached because the matching and permanent code work
    on them directly.
    """

    __slots__ = ("_rows", "_row_masks", "_col_masks")

    def __init__(self, rows: Iterable[Iterable[int]]):
        data = tuple(tuple(1 if x else 0 for x in row) for row in rows)
        if not data or not data[0]:
            raise ValueError("empty pattern")
        width = len(data[0])
        if any(len(r) != width for r in data):
            raise ValueError("ragged rows in pattern")
        self._rows = data
        self._row_masks = tuple(
            sum(1 << j for j, a in enumerate(r) if a) for r in data)
        cols = [0] * width
        for i, r in enumerate(data):
            for j, a in enumerate(r):
                if a:
                    cols[j] |= 1 << i
        self._col_masks = tuple(cols)

    @classmethod
    def from_positions(cls, n_rows: int, n_cols: int, positions) -> "Pattern":
        rows = [[0] * n_cols for _ in range(n_rows)]
        for i, j in positions:
            rows[i][j] = 1
        return cls(rows)

    @classmethod
    def ones(cls, n: int, m: int | None = None) -> "Pattern":
        return cls([[1] * (n if m is None else m) for _ in range(n)])

    @classmethod
    def zeros(cls, n: int, m: int | None = None) -> "Pattern":
        return cls([[0] * (n if m is None else m) for _ in range(n)])

    @classmethod
    def identity(cls, n: int) -> "Pattern":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def from_permutation(cls, perm: Sequence[int]) -> "Pattern":
        n = len(perm)
        return cls([[int(perm[i] == j) for j in range(n)] for i in range(n)])

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
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return self._rows

    @property
    def row_masks(self) -> tuple[int, ...]:
        return self._row_masks

    @property
    def col_masks(self) -> tuple[int, ...]:
        return self._col_masks

    def __getitem__(self, key):
        if isinstance(key, tuple):
            i, j = key
            return self._rows[i][j]
        return self._rows[key]

    def __iter__(self):
        return iter(self._rows)

    def __eq__(self, other):
        if not isinstance(other, Pattern):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        body = ", ".join("".join(map(str, r)) for r in self._rows)
        return f"Pattern([{body}])"

    def __str__(self):
        return format_pattern(self)

    def row_sums(self) -> list[int]:
        return [sum(r) for r in self._rows]

    def col_sums(self) -> list[int]:
        return [m.bit_count() for m in self._col_masks]

    def count(self) -> int:
        return sum(self.row_sums())

    def positions(self) -> list[tuple[int, int]]:
        """Support cells in row-major order."""
        return [(i, j) for i, r in enumerate(self._rows)
                for j, a in enumerate(r) if a]

    def row_support(self, i: int) -> list[int]:
        return [j for j, a in enumerate(self._rows[i]) if a]

    def col_support(self, j: int) -> list[int]:
        return [i for i, r in enumerate(self._rows) if r[j]]

    def transpose(self) -> "Pattern":
        return Pattern(zip(*self._rows))

    def is_symmetric(self) -> bool:
        return self.is_square and self._rows == tuple(zip(*self._rows))

    def with_entry(self, i: int, j: int, value: int) -> "Pattern":
        rows = [list(r) for r in self._rows]
        rows[i][j] = 1 if value else 0
        return Pattern(rows)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Pattern":
        return Pattern([[self._rows[i][j] for j in cols] for i in rows])

    def zero_set(self) -> frozenset[tuple[int, int]]:
        return frozenset((i, j) for i, r in enumerate(self._rows)
                         for j, a in enumerate(r) if not a)

    def contains(self, other: "Pattern") -> bool:
        """True if every 1 of ``other`` is also a 1 of ``self``."""
        return self.shape == other.shape and all(
            (b & ~a) == 0 for a, b in zip(self._row_masks, other._row_masks))


def parse_pattern(text: str) -> Pattern:
    """Parse rows of 0/1 characters, optionally whitespace separated."""
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        chars = "".join(line.split())
        if not chars:
            continue
        bad = set(chars) - {"0", "1"}
        if bad:
            raise ValueError(
                f"line {lineno}: unexpected characters {''.join(sorted(bad))!r}")
        rows.append([int(c) for c in chars])
    if not rows:
        raise ValueError("empty pattern input")
    if any(len(r) != len(rows[0]) for r in rows):
        raise ValueError("ragged rows in pattern")
    return Pattern(rows)


def format_pattern(pattern: Pattern, sep: str = "") -> str:
    return "\n".join(sep.join(map(str, r)) for r in pattern.rows)
