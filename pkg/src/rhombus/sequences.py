"""Exact counting sequences of the stealth configuration.

The integer recurrences are canonical. Closed forms are kept as a second
channel; the two involving sqrt(17) are evaluated in floating point.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .grid import RowGrid, cumulative_ones, ensure_grid

NAMES = ("A", "B", "C", "D", "E", "F", "I", "G", "H")
SQRT17 = math.sqrt(17)
GROWTH = (3 + SQRT17) / 2


class UnknownSequence(KeyError):
    pass


@dataclass(frozen=True)
class SequenceTable:
    name: str
    values: tuple[int, ...]
    start: int = 0

    def __getitem__(self, n: int) -> int:
        return self.values[n - self.start]

    def indices(self) -> range:
        return range(self.start, self.start + len(self.values))


def _linear(first: list[int], max_n: int, step) -> list[int]:
    vals = list(first[: max_n + 1])
    for n in range(len(vals), max_n + 1):
        vals.append(step(n, vals))
    return vals


def powers_of_two(max_n: int) -> list[int]:
    # A_n = A_{n-1} + 2 A_{n-2}
    return _linear([1, 2], max_n, lambda n, v: v[n - 1] + 2 * v[n - 2])


def wingtip_counts(max_n: int) -> list[int]:
    a = powers_of_two(max_n)
    return _linear([1, 3], max_n, lambda n, v: 2 * a[n - 1] + v[n - 2])


def stealth_ones(max_n: int) -> list[int]:
    return _linear([1, 4], max_n, lambda n, v: 3 * v[n - 1] + 2 * v[n - 2])


def stealth_cells(max_n: int) -> list[int]:
    # top 2^n rows plus the bottom triangle minus its three cut-outs
    out = []
    for n in range(max_n + 1):
        if n < 2:
            out.append((1, 4)[n])
        else:
            out.append((1 << n) ** 2 + ((1 << n) - 1) ** 2 - (1 << (n - 1)) ** 2 - 2 * (1 << (n - 2)) ** 2)
    return out


def first_rows_ones(max_n: int) -> list[int]:
    a = powers_of_two(max_n)
    c = stealth_ones(max_n)
    return _linear([1, 4], max_n, lambda n, v: 2 * c[n - 1] + v[n - 2] + a[n - 1])


def first_rows_cells(max_n: int) -> list[int]:
    return [4**n for n in range(max_n + 1)]


def sequence(name: str, max_n: int, grid: RowGrid | None = None) -> SequenceTable:
    """Values ``0..max_n`` (``1..max_n`` for the row-indexed ``G`` and ``H``)."""
    if max_n < 0:
        raise ValueError("max_n must be >= 0")
    builders = {
        "A": powers_of_two,
        "B": wingtip_counts,
        "I": wingtip_counts,
        "C": stealth_ones,
        "D": stealth_cells,
        "E": first_rows_ones,
        "F": first_rows_cells,
    }
    if name in builders:
        return SequenceTable(name, tuple(builders[name](max_n)))
    if name in ("G", "H"):
        grid = ensure_grid(grid, max_n)
        vals = []
        running = 0
        for m in range(1, max_n + 1):
            running += grid.rows[m].bit_count()
            vals.append(running if name == "G" else m * m - running)
        return SequenceTable(name, tuple(vals), start=1)
    raise UnknownSequence(name)


def closed_form(name: str, n: int) -> float | int:
    """Second channel: closed-form value, exact where the formula is rational."""
    if name == "A":
        return 2**n
    if name in ("B", "I"):
        return ((1 << (n + 2)) - (-1) ** n) // 3
    if name == "C":
        conj = (3 - SQRT17) / 2
        return ((17 + 5 * SQRT17) / 34) * GROWTH**n + ((17 - 5 * SQRT17) / 34) * conj**n
    if name == "D":
        if n < 2:
            return (1, 4)[n]
        return 13 * 4**n // 8 - 2 * 2**n + 1
    if name == "E":
        conj = (3 - SQRT17) / 2
        return (
            ((17 + 7 * SQRT17) / 68) * GROWTH**n
            + ((17 - 7 * SQRT17) / 68) * conj**n
            + ((1 << (n + 2)) - (-1) ** n) / 6
        )
    if name == "F":
        return 4**n
    raise UnknownSequence(name)


def characteristic_residual(values: list[int]) -> list[int]:
    """``v[n] - 3 v[n-1] - 2 v[n-2]``; all zero iff the values follow ``x^2 - 3x - 2``."""
    return [values[n] - 3 * values[n - 1] - 2 * values[n - 2] for n in range(2, len(values))]


def first_rows_ones_from_grid(n: int, grid: RowGrid | None = None) -> int:
    rows = 1 << n
    return cumulative_ones(ensure_grid(grid, rows), rows)
