"""Pascal rhombus generation, exact and modulo 2.

Each mod-2 row is a Python int used as a bit vector: bit ``j`` of row ``n``
holds cell ``(n, k)`` with ``j = k + n - 1``, so row ``n`` spans the
``2n - 1`` columns ``-(n-1) .. n-1``. Row 0 is the empty row (value 0).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence


class Cell(NamedTuple):
    n: int
    k: int


class RowIndexError(ValueError):
    """Raised when rows are combined or queried outside their valid range."""


@dataclass(frozen=True)
class BitRow:
    n: int
    bits: int = 0

    @property
    def width(self) -> int:
        return max(2 * self.n - 1, 0)

    def __getitem__(self, k: int) -> int:
        if abs(k) >= self.n:
            return 0
        return (self.bits >> (k + self.n - 1)) & 1

    def popcount(self) -> int:
        return self.bits.bit_count()

    def to_list(self) -> list[int]:
        return [(self.bits >> j) & 1 for j in range(self.width)]

    def __str__(self) -> str:
        return "".join(map(str, self.to_list()))

    @classmethod
    def from_list(cls, n: int, values: Sequence[int]) -> "BitRow":
        if len(values) != max(2 * n - 1, 0):
            raise RowIndexError(f"row {n} needs {2 * n - 1} values, got {len(values)}")
        bits = 0
        for j, v in enumerate(values):
            if v & 1:
                bits |= 1 << j
        return cls(n, bits)


def next_row(prev: BitRow, prev2: BitRow) -> BitRow:
    """Row ``prev.n + 1`` from the two rows above it.

    Widening by one cell on each side moves every column of ``prev`` up one
    offset, so the three upper neighbours land at shifts 0, 1, 2 and the
    row two above (two columns narrower on each side) lands at shift 2.
    """
    if prev2.n != prev.n - 1:
        raise RowIndexError(f"rows {prev2.n} and {prev.n} are not consecutive")
    p = prev.bits
    return BitRow(prev.n + 1, (p << 2) ^ (p << 1) ^ p ^ (prev2.bits << 2))


class RowGrid:
    """Rows ``0 .. m`` of the Pascal rhombus mod 2.

    Immutable after construction; ``rows[n]`` is the packed bit vector of
    row ``n``.
    """

    def __init__(self, rows: Sequence[int]):
        self._rows = tuple(rows)

    @property
    def m(self) -> int:
        return len(self._rows) - 1

    @property
    def rows(self) -> tuple[int, ...]:
        return self._rows

    def row(self, n: int) -> BitRow:
        self._check(n)
        return BitRow(n, self._rows[n])

    def __iter__(self) -> Iterator[BitRow]:
        return (BitRow(n, b) for n, b in enumerate(self._rows))

    def __len__(self) -> int:
        return len(self._rows)

    def __getitem__(self, cell: tuple[int, int]) -> int:
        n, k = cell
        return cell_value(self, Cell(n, k))

    def _check(self, n: int) -> None:
        if not 0 <= n <= self.m:
            raise RowIndexError(f"row {n} outside generated range 0..{self.m}")


def generate(m: int) -> RowGrid:
    if m < 0:
        raise RowIndexError("row count must be non-negative")
    rows = [0]
    if m >= 1:
        rows.append(1)
    for _ in range(2, m + 1):
        p, p2 = rows[-1], rows[-2]
        rows.append((p << 2) ^ (p << 1) ^ p ^ (p2 << 2))
    return RowGrid(rows)


def ensure_grid(grid: RowGrid | None, m: int) -> RowGrid:
    """Return ``grid`` if it reaches row ``m``, else a freshly generated one."""
    if grid is not None and grid.m >= m:
        return grid
    return generate(m)


def cell_value(grid: RowGrid, c: Cell) -> int:
    n, k = c
    if n > grid.m:
        raise RowIndexError(f"row {n} outside generated range 0..{grid.m}")
    if n < 1 or abs(k) >= n:
        return 0
    return (grid.rows[n] >> (k + n - 1)) & 1


def row_ones(grid: RowGrid, m: int) -> int:
    if not 1 <= m <= grid.m:
        raise RowIndexError(f"row {m} outside generated range 1..{grid.m}")
    return grid.rows[m].bit_count()


def cumulative_ones(grid: RowGrid, m: int) -> int:
    """Number of ones ``G_m`` in rows ``1..m``."""
    if not 1 <= m <= grid.m:
        raise RowIndexError(f"row {m} outside generated range 1..{grid.m}")
    return sum(b.bit_count() for b in grid.rows[1 : m + 1])


def cumulative_zeros(grid: RowGrid, m: int) -> int:
    """Number of zeros ``H_m = m**2 - G_m`` in rows ``1..m``."""
    return m * m - cumulative_ones(grid, m)


def generate_integer(m: int) -> list[list[int]]:
    """Exact integer rows ``0..m``; row ``n`` lists columns ``-(n-1)..n-1``."""
    rows: list[list[int]] = [[]]
    if m >= 1:
        rows.append([1])
    for n in range(2, m + 1):
        prev, prev2 = rows[n - 1], rows[n - 2]
        width = 2 * n - 1

        def at(row: list[int], base: int, j: int) -> int:
            # j is an offset in the new row; base is how far the older row is indented
            i = j - base
            return row[i] if 0 <= i < len(row) else 0

        rows.append(
            [at(prev, 2, j) + at(prev, 1, j) + at(prev, 0, j) + at(prev2, 2, j)
             for j in range(width)]
        )
    return rows
