"""Stealth configurations: placed octagonal regions of the mod-2 rhombus.

A placement sends a standard-position cell ``(dn, dk)`` (rows growing down
from the virtual origin ``(0, 0)``) to ``anchor + M @ (dn, dk)`` where ``M``
is one of four orientation matrices. Stealth patterns are symmetric under
``k -> -k``, so rotations and reflections that differ by that flip place
identical patterns; compositions are reduced to the four canonical tags.
"""
from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

from .grid import Cell, RowGrid, cell_value, ensure_grid

Matrix = tuple[tuple[int, int], tuple[int, int]]


class Orientation(enum.Enum):
    DOWN = ((1, 0), (0, 1))
    UP = ((-1, 0), (0, 1))
    RIGHT = ((0, 1), (1, 0))
    LEFT = ((0, 1), (-1, 0))

    @property
    def matrix(self) -> Matrix:
        return self.value

    def apply(self, dn: int, dk: int) -> tuple[int, int]:
        (a, b), (c, d) = self.value
        return a * dn + b * dk, c * dn + d * dk

    def invert(self, gn: int, gk: int) -> tuple[int, int]:
        # orthogonal matrices: inverse is the transpose
        (a, b), (c, d) = self.value
        return a * gn + c * gk, b * gn + d * gk

    def then(self, child: "Orientation") -> "Orientation":
        """Orientation of a child placed with ``child`` inside a region placed with ``self``."""
        return _canonical(_matmul(self.value, child.value))


_FLIP: Matrix = ((1, 0), (0, -1))


def _matmul(x: Matrix, y: Matrix) -> Matrix:
    return (
        (x[0][0] * y[0][0] + x[0][1] * y[1][0], x[0][0] * y[0][1] + x[0][1] * y[1][1]),
        (x[1][0] * y[0][0] + x[1][1] * y[1][0], x[1][0] * y[0][1] + x[1][1] * y[1][1]),
    )


def _canonical(m: Matrix) -> Orientation:
    flipped = _matmul(m, _FLIP)
    for o in Orientation:
        if o.value in (m, flipped):
            return o
    raise ValueError(f"not an orientation matrix: {m}")


@dataclass(frozen=True)
class Placement:
    anchor: Cell = Cell(0, 0)
    orientation: Orientation = Orientation.DOWN

    def apply(self, local: tuple[int, int]) -> Cell:
        dn, dk = self.orientation.apply(*local)
        return Cell(self.anchor[0] + dn, self.anchor[1] + dk)

    def invert(self, cell: tuple[int, int]) -> Cell:
        return Cell(*self.orientation.invert(cell[0] - self.anchor[0], cell[1] - self.anchor[1]))

    def compose(self, child: "Placement") -> "Placement":
        """Express ``child`` (given in this placement's local frame) globally."""
        return Placement(self.apply(child.anchor), self.orientation.then(child.orientation))


STANDARD = Placement()


class DomainError(ValueError):
    pass


def transform_cell(local: tuple[int, int], placement: Placement) -> Cell:
    return placement.apply(local)


def octagon_vertices(order: int) -> list[Cell]:
    if order < 2:
        raise DomainError("octagon is defined for order >= 2")
    big, half, quarter = 1 << order, 1 << (order - 1), 1 << (order - 2)
    return [
        Cell(0, 0),
        Cell(big, -big),
        Cell(big + half, -half),
        Cell(big + quarter, -quarter),
        Cell(big + half, 0),
        Cell(big + quarter, quarter),
        Cell(big + half, half),
        Cell(big, big),
    ]


def outline_vertices(order: int) -> list[tuple[float, float]]:
    """Octagon corners for any order, with fractional corners below order 2.

    Only used for drawing; membership at orders 0 and 1 follows the explicit
    cell lists.
    """
    big = 2.0 ** order
    half, quarter = big / 2, big / 4
    return [
        (0.0, 0.0), (big, -big), (big + half, -half), (big + quarter, -quarter),
        (big + half, 0.0), (big + quarter, quarter), (big + half, half), (big, big),
    ]


_ORDER0 = frozenset({Cell(1, 0)})
_ORDER1 = frozenset({Cell(1, 0), Cell(2, -1), Cell(2, 0), Cell(2, 1)})


def _contains_standard(order: int, n: int, k: int) -> bool:
    if order == 0:
        return (n, k) in _ORDER0
    if order == 1:
        return (n, k) in _ORDER1
    if n + k <= 0 or n - k <= 0:
        return False
    big, half, quarter = 1 << order, 1 << (order - 1), 1 << (order - 2)
    a = abs(k)
    # lower boundary: outer edges beyond the wings' inner corners, then the
    # two notches that dip up to (big + quarter, +-quarter)
    if a >= half:
        floor = 2 * big - a
    elif a >= quarter:
        floor = big + a
    else:
        floor = big + half - a
    return n < floor


def contains(order: int, placement: Placement, c: tuple[int, int]) -> bool:
    if order < 0:
        raise DomainError("order must be >= 0")
    n, k = placement.invert(c)
    return _contains_standard(order, n, k)


def region_row_intervals(order: int, n: int) -> list[tuple[int, int]]:
    """Column ranges ``(lo, hi)``, inclusive, of row ``n`` inside the standard region."""
    if order <= 1:
        cells = _ORDER0 if order == 0 else _ORDER1
        ks = sorted(k for r, k in cells if r == n)
        return [(ks[0], ks[-1])] if ks else []
    big, half, quarter = 1 << order, 1 << (order - 1), 1 << (order - 2)
    # allowed |k| values as half-open ranges, one per piece of the lower boundary
    pieces = [
        (0, min(quarter, big + half - n)),
        (max(quarter, n - big + 1), half),
        (half, 2 * big - n),
    ]
    mags = []
    for lo, hi in pieces:
        hi = min(hi, n)
        if lo < hi:
            if mags and mags[-1][1] == lo:
                mags[-1] = (mags[-1][0], hi)
            else:
                mags.append((lo, hi))
    out = []
    for lo, hi in reversed(mags):
        out.append((-(hi - 1), -lo))
    for lo, hi in mags:
        if lo == 0:
            out[-1] = (out[-1][0], hi - 1)
        else:
            out.append((lo, hi - 1))
    return out


def region_row_mask(order: int, n: int) -> int:
    """Region columns of row ``n`` in the packed-row bit layout of :mod:`.grid`."""
    mask = 0
    for lo, hi in region_row_intervals(order, n):
        mask |= ((1 << (hi - lo + 1)) - 1) << (lo + n - 1)
    return mask


def region_size(order: int) -> int:
    return sum(hi - lo + 1 for n in range(1, stealth_rows(order) + 1)
               for lo, hi in region_row_intervals(order, n))


def region_ones(order: int, grid: RowGrid | None = None) -> int:
    """Ones of the standard region, by masked popcount per row."""
    grid = ensure_grid(grid, stealth_rows(order))
    return sum((grid.rows[n] & region_row_mask(order, n)).bit_count()
               for n in range(1, stealth_rows(order) + 1))


@lru_cache(maxsize=None)
def _standard_cells(order: int) -> frozenset[Cell]:
    if order == 0:
        return _ORDER0
    if order == 1:
        return _ORDER1
    return frozenset(
        Cell(n, k)
        for n in range(1, stealth_rows(order) + 1)
        for lo, hi in region_row_intervals(order, n)
        for k in range(lo, hi + 1)
    )


@dataclass(frozen=True)
class StealthRegion:
    order: int
    placement: Placement
    cells: frozenset[Cell] = field(repr=False)

    def __len__(self) -> int:
        return len(self.cells)

    def __contains__(self, c: object) -> bool:
        return c in self.cells


def region_cells(order: int, placement: Placement = STANDARD) -> StealthRegion:
    if order < 0:
        raise DomainError("order must be >= 0")
    local = _standard_cells(order)
    if placement == STANDARD:
        cells = local
    else:
        cells = frozenset(placement.apply(c) for c in local)
    return StealthRegion(order, placement, cells)


@dataclass(frozen=True)
class Child:
    role: str
    order: int
    placement: Placement

    @property
    def start(self) -> Cell:
        """The child's nose cell, image of local ``(1, 0)``."""
        return self.placement.apply((1, 0))


def decompose(order: int, placement: Placement = STANDARD) -> list[Child]:
    """Nose, left wing, right wing, main body and tail of an order >= 2 region."""
    if order < 2:
        raise DomainError("only orders >= 2 decompose")
    big, half, quarter = 1 << order, 1 << (order - 1), 1 << (order - 2)
    local = [
        Child("nose", order - 1, Placement(Cell(0, 0), Orientation.DOWN)),
        Child("left_wing", order - 1, Placement(Cell(big, -big), Orientation.RIGHT)),
        Child("right_wing", order - 1, Placement(Cell(big, big), Orientation.LEFT)),
        Child("body", order - 2, Placement(Cell(big - quarter, 0), Orientation.DOWN)),
        Child("tail", order - 2, Placement(Cell(big + half, 0), Orientation.UP)),
    ]
    return [Child(c.role, c.order, placement.compose(c.placement)) for c in local]


@dataclass(frozen=True, eq=False)
class BitPattern:
    """Cells with value 1 inside a finite window; anything else reads as 0."""

    ones: frozenset[Cell]
    window: frozenset[Cell] = frozenset()

    def __post_init__(self) -> None:
        if not self.window:
            object.__setattr__(self, "window", self.ones)

    def __getitem__(self, c: tuple[int, int]) -> int:
        return 1 if c in self.ones else 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitPattern):
            return NotImplemented
        return self.ones == other.ones

    def __hash__(self) -> int:
        return hash(self.ones)

    def count(self) -> int:
        return len(self.ones)

    def transformed(self, placement: Placement) -> "BitPattern":
        return BitPattern(
            frozenset(placement.apply(c) for c in self.ones),
            frozenset(placement.apply(c) for c in self.window),
        )

    def diff(self, other: "BitPattern") -> list[Cell]:
        """Cells where the two patterns disagree, sorted."""
        return sorted(self.ones ^ other.ones)

    def bounds(self) -> tuple[int, int, int, int]:
        cells = self.window or self.ones
        ns = [c[0] for c in cells]
        ks = [c[1] for c in cells]
        return min(ns), max(ns), min(ks), max(ks)

    @classmethod
    def from_mapping(cls, values: Mapping[tuple[int, int], int]) -> "BitPattern":
        return cls(
            frozenset(Cell(*c) for c, v in values.items() if v & 1),
            frozenset(Cell(*c) for c in values),
        )


def exceptional_cells(p: BitPattern | Iterable[tuple[int, int]]) -> set[Cell]:
    """Centres of 5-cell rhombi covering an odd number of ones."""
    ones = p.ones if isinstance(p, BitPattern) else p
    parity: Counter[Cell] = Counter()
    for n, k in ones:
        # a one at (n, k) sits in the rhombi centred at these five cells
        for c in ((n + 1, k), (n, k - 1), (n, k), (n, k + 1), (n - 1, k)):
            parity[Cell(*c)] ^= 1
    return {c for c, v in parity.items() if v}


def lemma_corners(order: int, placement: Placement = STANDARD) -> set[Cell]:
    """The six acute corners predicted to be exceptional for an order >= 1 region."""
    if order < 1:
        raise DomainError("corner set is defined for order >= 1")
    big, half = 1 << order, 1 << (order - 1)
    local = [(0, 0), (big, -big), (big + half, -half), (big + half, 0),
             (big + half, half), (big, big)]
    return {placement.apply(c) for c in local}


def stealth_rows(order: int) -> int:
    """Deepest row touched by the standard-position region of ``order``."""
    if order == 0:
        return 1
    if order == 1:
        return 2
    big = 1 << order
    return big + (big >> 1) - 1


def build_stealth(order: int, grid: RowGrid | None = None) -> BitPattern:
    if order < 0:
        raise DomainError("order must be >= 0")
    grid = ensure_grid(grid, stealth_rows(order))
    region = _standard_cells(order)
    return BitPattern(frozenset(c for c in region if cell_value(grid, c)), region)


@lru_cache(maxsize=None)
def build_pseudo_stealth(order: int) -> BitPattern:
    """Cut-and-paste assembly from the five lower-order pieces."""
    if order < 0:
        raise DomainError("order must be >= 0")
    if order <= 1:
        cells = _standard_cells(order)
        return BitPattern(cells, cells)
    ones: set[Cell] = set()
    for child in decompose(order):
        ones.update(build_pseudo_stealth(child.order).transformed(child.placement).ones)
    return BitPattern(frozenset(ones), _standard_cells(order))


def uncovered_cells(order: int) -> set[Cell]:
    """Region cells of ``order`` that none of its five children cover."""
    covered: set[Cell] = set()
    for child in decompose(order):
        covered |= region_cells(child.order, child.placement).cells
    return set(_standard_cells(order)) - covered


def child_overlaps(order: int) -> list[tuple[str, str, int]]:
    """Pairs of children whose regions intersect, with the overlap size."""
    children = decompose(order)
    regions = [region_cells(c.order, c.placement).cells for c in children]
    out = []
    for i in range(len(children)):
        for j in range(i + 1, len(children)):
            shared = len(regions[i] & regions[j])
            if shared:
                out.append((children[i].role, children[j].role, shared))
    return out


def iter_regions(order: int, placement: Placement = STANDARD, depth: int = 1) -> Iterator[Child]:
    """Children of a region down to ``depth`` levels, depth-first."""
    for child in decompose(order, placement):
        yield child
        if depth > 1 and child.order >= 2:
            yield from iter_regions(child.order, child.placement, depth - 1)


def corner_bookkeeping(order: int, placement: Placement = STANDARD) -> tuple[list[Cell], set[Cell]]:
    """The children's predicted exceptional corners and what survives mod 2.

    For ``order >= 3`` every child has order >= 1, giving 30 corner cells;
    cells listed an even number of times cancel.
    """
    if order < 3:
        raise DomainError("corner bookkeeping needs order >= 3")
    listed: list[Cell] = []
    for child in decompose(order, placement):
        listed.extend(sorted(lemma_corners(child.order, child.placement)))
    counts = Counter(listed)
    return listed, {c for c, v in counts.items() if v % 2}
