"""Arbitrary-precision integer matrices.

Entries are Python ints, so permanents can never overflow. The 0x0 matrix
is a first-class value (its permanent is 1 by convention), which is why the
column count is stored explicitly instead of being inferred from rows.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class IntMatrix:
    entries: tuple[tuple[int, ...], ...]
    ncols: int

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], ncols: int | None = None) -> "IntMatrix":
        data = tuple(tuple(int(operator.index(x)) for x in row) for row in rows)
        if ncols is None:
            if not data:
                raise ValueError("column count is required for a matrix with no rows")
            ncols = len(data[0])
        for i, row in enumerate(data):
            if len(row) != ncols:
                raise ValueError(f"row {i} has {len(row)} entries, expected {ncols}")
        return cls(data, ncols)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "IntMatrix":
        return cls(((0,) * ncols,) * nrows, ncols)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)), n)

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def entry(self, i: int, j: int) -> int:
        return self.entries[i][j]

    def column(self, j: int) -> tuple[int, ...]:
        if not 0 <= j < self.ncols:
            raise IndexError(f"column index out of range: {j}")
        return tuple(row[j] for row in self.entries)

    def with_column(self, j: int, column: Sequence[int]) -> "IntMatrix":
        """A copy with column ``j`` replaced (multilinearity experiments)."""
        if len(column) != self.nrows:
            raise ValueError("replacement column has the wrong length")
        rows = tuple(
            row[:j] + (int(operator.index(column[i])),) + row[j + 1 :]
            for i, row in enumerate(self.entries)
        )
        return IntMatrix(rows, self.ncols)

    def __repr__(self) -> str:
        return f"IntMatrix({self.nrows}x{self.ncols})"
