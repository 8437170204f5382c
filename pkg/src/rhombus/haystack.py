"""The diamond ``H_n``: the first ``2**n`` rows of the mod-2 rhombus plus
their reflection in row ``2**n``.

``H_n`` occupies rows ``1 .. 2**(n+1) - 1`` and is centred on ``(2**n, 0)``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .grid import Cell, RowGrid, ensure_grid
from .stealth import (
    BitPattern,
    DomainError,
    Orientation,
    Placement,
    build_stealth,
    region_cells,
)


def haystack(n: int, grid: RowGrid | None = None) -> BitPattern:
    if n < 0:
        raise DomainError("haystack order must be >= 0")
    size = 1 << n
    grid = ensure_grid(grid, size)
    ones: set[Cell] = set()
    window: set[Cell] = set()
    for r in range(1, size + 1):
        bits = grid.rows[r]
        mirror = 2 * size - r
        for k in range(-r + 1, r):
            window.add(Cell(r, k))
            window.add(Cell(mirror, k))
            if (bits >> (k + r - 1)) & 1:
                ones.add(Cell(r, k))
                ones.add(Cell(mirror, k))
    return BitPattern(frozenset(ones), frozenset(window))


@dataclass(frozen=True)
class HaystackPiece:
    role: str
    order: int
    placement: Placement


def haystack_pieces(n: int) -> list[HaystackPiece]:
    """Four outward-facing order ``n-1`` stealth pieces and the centre ``H_{n-2}``.

    The centre piece is a translation only: its placement's anchor is the
    row offset applied to ``H_{n-2}``.
    """
    if n < 2:
        raise DomainError("haystack decomposition needs n >= 2")
    size = 1 << n
    return [
        HaystackPiece("top", n - 1, Placement(Cell(0, 0), Orientation.DOWN)),
        HaystackPiece("left", n - 1, Placement(Cell(size, -size), Orientation.RIGHT)),
        HaystackPiece("right", n - 1, Placement(Cell(size, size), Orientation.LEFT)),
        HaystackPiece("bottom", n - 1, Placement(Cell(2 * size, 0), Orientation.UP)),
        HaystackPiece("centre", n - 2, Placement(Cell(size - (1 << (n - 2)), 0), Orientation.DOWN)),
    ]


def assemble_haystack(n: int, grid: RowGrid | None = None) -> BitPattern:
    """Rebuild ``H_n`` from its five pieces; equals :func:`haystack` when the decomposition holds."""
    ones: set[Cell] = set()
    window: set[Cell] = set()
    for piece in haystack_pieces(n):
        if piece.role == "centre":
            part = haystack(piece.order, grid).transformed(piece.placement)
        else:
            part = build_stealth(piece.order, grid).transformed(piece.placement)
            window |= region_cells(piece.order, piece.placement).cells
        ones ^= part.ones
        window |= part.window
    return BitPattern(frozenset(ones), frozenset(window))
