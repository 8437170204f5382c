"""Finite machine checks of the rhombus conjectures and the stealth lemmas.

Every check returns a :class:`VerificationReport`. A failing report always
names a concrete witness (first mismatching cell or value).
"""
from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any

import numpy as np

from .grid import Cell, RowGrid, cell_value, cumulative_ones, ensure_grid, row_ones
from .sequences import GROWTH, sequence
from .stealth import (
    STANDARD,
    contains,
    region_ones,
    region_size,
    build_pseudo_stealth,
    build_stealth,
    corner_bookkeeping,
    decompose,
    exceptional_cells,
    lemma_corners,
    region_cells,
    stealth_rows,
    uncovered_cells,
)

PASS, FAIL, INCONCLUSIVE = "pass", "fail", "inconclusive"


@dataclass
class VerificationReport:
    check: str
    params: dict[str, Any]
    status: str
    expected: Any = None
    actual: Any = None
    witness: Any = None
    compared: int = 0

    def __post_init__(self) -> None:
        if self.status == FAIL and self.witness is None:
            raise ValueError(f"{self.check}: failing report without a witness")

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_dict(self) -> dict[str, Any]:
        return _jsonable(asdict(self))

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _jsonable(x: Any) -> Any:
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = sorted(x) if isinstance(x, (set, frozenset)) else x
        return [_jsonable(v) for v in items]
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, float) and math.isinf(x):
        return "inf"
    return x


def _report(check: str, params: dict, mismatch: Any, expected: Any, actual: Any, compared: int) -> VerificationReport:
    status = PASS if mismatch is None else FAIL
    return VerificationReport(check, params, status, expected, actual, mismatch, compared)


# -- rhombus rule -----------------------------------------------------------

def grid_frame(grid: RowGrid) -> np.ndarray:
    """Rows ``0..m`` as a dense 0/1 array over columns ``-(m+1)..m+1``."""
    m = grid.m
    width = 2 * m + 3
    nbytes = (width + 7) // 8
    frame = np.zeros((m + 1, width), dtype=np.uint8)
    for n in range(1, m + 1):
        # bit j of row n is column j - (n - 1); frame column is column + m + 1
        shifted = grid.rows[n] << (m + 2 - n)
        raw = np.frombuffer(shifted.to_bytes(nbytes, "little"), dtype=np.uint8)
        frame[n] = np.unpackbits(raw, bitorder="little")[:width]
    return frame


def verify_rhombus_rule(grid: RowGrid) -> VerificationReport:
    """Dense re-check of the recurrence, the zero wedge, symmetry, and the
    single odd 5-cell rhombus at (0, 0)."""
    m = grid.m
    frame = grid_frame(grid)
    centre = m + 1
    params = {"rows": m}

    cols = np.arange(frame.shape[1]) - centre
    rows = np.arange(m + 1)[:, None]
    outside = np.abs(cols)[None, :] >= rows
    bad = np.argwhere(outside & (frame == 1))
    if len(bad):
        n, c = bad[0]
        return _report("rhombus_rule", params, {"cell": [int(n), int(c - centre)], "reason": "one outside wedge"}, 0, 1, 0)

    if m >= 2:
        predicted = frame[1:-1, :-2] ^ frame[1:-1, 1:-1] ^ frame[1:-1, 2:] ^ frame[:-2, 1:-1]
        bad = np.argwhere(predicted != frame[2:, 1:-1])
        if len(bad):
            n, c = bad[0]
            cell = [int(n + 2), int(c + 1 - centre)]
            return _report("rhombus_rule", params, {"cell": cell, "reason": "recurrence"},
                           int(predicted[n, c]), int(frame[n + 2, c + 1]), 0)
        bad = np.argwhere(frame != frame[:, ::-1])
        if len(bad):
            n, c = bad[0]
            return _report("rhombus_rule", params, {"cell": [int(n), int(c - centre)], "reason": "asymmetric row"}, 0, 1, 0)

    # centres in rows 0..m-1, so all five cells lie inside the frame
    padded = np.vstack([np.zeros((1, frame.shape[1]), dtype=np.uint8), frame])
    odd = (padded[:-2, 1:-1] ^ padded[1:-1, :-2] ^ padded[1:-1, 1:-1]
           ^ padded[1:-1, 2:] ^ padded[2:, 1:-1])
    centres = [[int(n), int(c + 1 - centre)] for n, c in np.argwhere(odd)]
    witness = None if centres == [[0, 0]] else {"odd_centres": centres[:10]}
    checked = int((m - 1) * (2 * m - 1)) if m >= 2 else 0
    return _report("rhombus_rule", params, witness, [[0, 0]], centres[:10], checked)


# -- conjecture 2 and the count tables ---------------------------------------

def spine_ones(n: int, grid: RowGrid | None = None) -> int:
    depth = (1 << n) + (1 << (n - 1))
    grid = ensure_grid(grid, depth)
    return sum(cell_value(grid, Cell(r, 0)) for r in range(1, depth + 1))


def wingtip_ones(n: int, grid: RowGrid | None = None) -> int:
    """Ones of the region's row ``2**n`` counted through region membership."""
    row = 1 << n
    grid = ensure_grid(grid, row)
    return sum(cell_value(grid, Cell(row, k)) for k in range(-row + 1, row)
               if contains(n, STANDARD, (row, k)))


def verify_conjecture2(n: int, grid: RowGrid | None = None) -> VerificationReport:
    row = 1 << n
    grid = ensure_grid(grid, row)
    expected = ((1 << (n + 2)) - (-1) ** n) // 3
    actual = row_ones(grid, row)
    witness = None
    if actual != expected:
        witness = {"row": row, "ones": actual}
    elif n >= 1 and wingtip_ones(n, grid) != expected:
        witness = {"row": row, "wingtip_ones": wingtip_ones(n, grid)}
    return _report("conj2", {"n": n}, witness, expected, actual, 1)


def verify_counts(n: int, grid: RowGrid | None = None) -> VerificationReport:
    """Grid-derived spine, wingtip, region and first-rows counts against the tables."""
    grid = ensure_grid(grid, max(stealth_rows(n), 1 << n, (1 << n) + (1 << max(n - 1, 0))))
    expected = {
        "spine": sequence("A", n)[n],
        "wingtip": sequence("B", n)[n],
        "region_ones": sequence("C", n)[n],
        "region_cells": sequence("D", n)[n],
        "first_rows": sequence("E", n)[n],
    }
    actual = {
        "spine": spine_ones(n, grid) if n >= 1 else 1,
        "wingtip": wingtip_ones(n, grid) if n >= 1 else 1,
        "region_ones": region_ones(n, grid),
        "region_cells": region_size(n),
        "first_rows": cumulative_ones(grid, 1 << n),
    }
    witness = next(({"count": key, "value": actual[key]} for key in expected
                    if expected[key] != actual[key]), None)
    return _report("counts", {"n": n}, witness, expected, actual, len(expected))


def verify_first_rows_split(n: int, grid: RowGrid | None = None) -> VerificationReport:
    """First ``2**n`` rows = nose + first rows of body + the wing parts above row ``2**n``.

    The wing parts together hold ``C_{n-1} + A_{n-1}`` ones.
    """
    if n < 2:
        raise ValueError("split needs n >= 2")
    rows = 1 << n
    grid = ensure_grid(grid, stealth_rows(n))
    parts = {c.role: c for c in decompose(n)}

    def ones_above(role: str, limit: int) -> int:
        child = parts[role]
        return sum(cell_value(grid, c) for c in region_cells(child.order, child.placement).cells
                   if c[0] <= limit)

    wing_ones = ones_above("left_wing", rows) + ones_above("right_wing", rows)
    nose_ones = ones_above("nose", rows)
    body_ones = ones_above("body", rows)
    c_prev, a_prev = sequence("C", n)[n - 1], 1 << (n - 1)
    e_before = sequence("E", n)[n - 2]
    expected = {"wings": c_prev + a_prev, "nose": c_prev, "body": e_before,
                "total": cumulative_ones(grid, rows)}
    actual = {"wings": wing_ones, "nose": nose_ones, "body": body_ones,
              "total": wing_ones + nose_ones + body_ones}
    witness = next(({"part": key, "value": actual[key]} for key in expected
                    if expected[key] != actual[key]), None)
    return _report("first_rows_split", {"n": n}, witness, expected, actual, len(expected))


# -- conjecture 1 and lemma 2 -----------------------------------------------

def verify_conjecture1(n: int, grid: RowGrid | None = None) -> VerificationReport:
    """Top triangle of ``2**(n-1)`` rows against its three translated copies."""
    if n < 1:
        raise ValueError("conjecture 1 needs n >= 1")
    big, half = 1 << n, 1 << (n - 1)
    grid = ensure_grid(grid, big + big)
    roots = {"left": (big, -big), "right": (big, big), "fourth": (big + half, 0)}
    compared = 0
    for r in range(1, half + 1):
        for k in range(-r + 1, r):
            top = cell_value(grid, Cell(r, k))
            for name, (dn, dk) in roots.items():
                other = cell_value(grid, Cell(r + dn, k + dk))
                compared += 1
                if other != top:
                    return _report("conj1", {"n": n},
                                   {"triangle": name, "cell": [r + dn, k + dk], "top_cell": [r, k]},
                                   top, other, compared)
    return _report("conj1", {"n": n}, None, None, None, compared)


def verify_mirror(n: int, grid: RowGrid | None = None) -> VerificationReport:
    """Upper rhombus of ``S_n`` reflected across ``n - k = 2**n`` onto the left rhombus."""
    if n < 1:
        raise ValueError("mirror needs n >= 1")
    big = 1 << n
    grid = ensure_grid(grid, big + (big >> 1))
    compared = 0
    for a in range(1, big):
        for b in range(-a + 1, a):
            if not (0 < a + b < big and 0 < a - b < big):
                continue
            image = Cell(b + big, a - big)
            compared += 1
            if cell_value(grid, Cell(a, b)) != cell_value(grid, image):
                return _report("mirror", {"n": n}, {"cell": [a, b], "image": list(image)},
                               cell_value(grid, Cell(a, b)), cell_value(grid, image), compared)
    return _report("mirror", {"n": n}, None, None, None, compared)


# -- conjecture 3 -------------------------------------------------------------

@dataclass(frozen=True)
class DiagonalSequence:
    k: int
    start: int
    bits: tuple[int, ...] = field(repr=False)

    def cells(self) -> list[Cell]:
        return [Cell(n, -n + self.k + 1) for n in range(self.start, self.start + len(self.bits))]

    def __str__(self) -> str:
        return "".join(map(str, self.bits))


def diagonal_start(k: int) -> int:
    return -(-(k + 1) // 2)


def diagonal_bits(k: int, length: int, grid: RowGrid | None = None) -> DiagonalSequence:
    if k < 0:
        raise ValueError("diagonal index must be >= 0")
    start = diagonal_start(k)
    grid = ensure_grid(grid, start + length - 1)
    bits = tuple(cell_value(grid, Cell(n, -n + k + 1)) for n in range(start, start + length))
    return DiagonalSequence(k, start, bits)


def minimal_period(bits) -> int:
    seq = list(bits)
    if not seq:
        raise ValueError("empty bit sequence")
    for p in range(1, len(seq)):
        if seq[p:] == seq[:-p]:
            return p
    return len(seq)


def _floor_log2(k: int) -> int:
    return k.bit_length() - 1


def claimed_period(k: int) -> int:
    """Proven period ``2**(floor(log2 k) + 1)``; 1 for the edge diagonal."""
    return 1 if k == 0 else 1 << (_floor_log2(k) + 1)


def conjectured_period(k: int) -> int:
    return 1 if k == 0 else 1 << ((k - 1).bit_length() + 1)


def palindrome_base_order(k: int) -> int:
    """Smallest order whose upper rhombus contains the diagonal strictly.

    The diagonal satisfies ``n + col = k + 1``; it lies strictly inside the
    upper rhombus of ``S_j`` iff ``k + 1 < 2**j``. That is order
    ``floor(log2 k) + 1`` except when ``k + 1`` is a power of two, where the
    diagonal runs along that rhombus's lower edge.
    """
    m = _floor_log2(k)
    return m + 1 if k + 1 < (1 << (m + 1)) else m + 2


def diagonal_in_region(k: int, order: int, grid: RowGrid | None = None) -> list[int]:
    grid = ensure_grid(grid, stealth_rows(order))
    cells = region_cells(order).cells
    start = diagonal_start(k)
    return [cell_value(grid, Cell(n, -n + k + 1))
            for n in range(start, stealth_rows(order) + 1)
            if (n, -n + k + 1) in cells]


def verify_conjecture3(k: int, horizon: int = 4096, grid: RowGrid | None = None,
                       max_order: int = 8) -> VerificationReport:
    claim = claimed_period(k)
    params = {"k": k, "horizon": horizon}
    if horizon < 2 * claim:
        return VerificationReport("conj3", params, INCONCLUSIVE, claim, None, None, 0)
    start = diagonal_start(k)
    grid = ensure_grid(grid, max(start + horizon - 1, stealth_rows(max_order)))
    diag = diagonal_bits(k, horizon, grid)
    period = minimal_period(diag.bits)
    actual = {"minimal_period": period, "prefix": str(diag)[:16]}
    expected = {"divides": claim, "conjectured": conjectured_period(k)}
    if claim % period:
        return _report("conj3", params, {"minimal_period": period}, expected, actual, horizon)
    if k >= 1:
        for order in range(palindrome_base_order(k), max_order + 1):
            bits = diagonal_in_region(k, order, grid)
            if bits != bits[::-1]:
                return _report("conj3", params, {"order": order, "bits": "".join(map(str, bits))},
                               expected, actual, horizon)
    return _report("conj3", params, None, expected, actual, horizon)


# -- theorem 1 and lemma 1 ---------------------------------------------------

def verify_theorem1(n: int, grid: RowGrid | None = None) -> VerificationReport:
    grid = ensure_grid(grid, stealth_rows(n))
    stealth = build_stealth(n, grid)
    pseudo = build_pseudo_stealth(n)
    params = {"n": n}
    diff = stealth.diff(pseudo)
    if diff:
        return _report("theorem1", params, {"cell": list(diff[0])}, stealth[diff[0]], pseudo[diff[0]], len(stealth.window))
    if n >= 2:
        stray = sorted(c for c in uncovered_cells(n) if stealth[c])
        if stray:
            return _report("theorem1", params, {"uncovered_one": list(stray[0])}, 0, 1, len(stealth.window))
        c = sequence("C", n)
        if stealth.count() != 3 * c[n - 1] + 2 * c[n - 2]:
            return _report("theorem1", params, {"ones": stealth.count()},
                           3 * c[n - 1] + 2 * c[n - 2], stealth.count(), len(stealth.window))
    return _report("theorem1", params, None, stealth.count(), pseudo.count(), len(stealth.window))


def verify_lemma1(n: int, grid: RowGrid | None = None) -> VerificationReport:
    if n < 1:
        raise ValueError("lemma 1 needs n >= 1")
    grid = ensure_grid(grid, stealth_rows(n))
    expected = lemma_corners(n)
    found = exceptional_cells(build_stealth(n, grid))
    params = {"n": n}
    if found != expected:
        return _report("lemma1", params, {"extra": sorted(found - expected), "missing": sorted(expected - found)},
                       sorted(expected), sorted(found), len(found))
    if n >= 3:
        listed, survivors = corner_bookkeeping(n)
        if len(listed) != 30 or survivors != expected:
            return _report("lemma1", params, {"listed": len(listed), "survivors": sorted(survivors)},
                           sorted(expected), sorted(survivors), len(listed))
    return _report("lemma1", params, None, sorted(expected), sorted(found), len(found))


# -- density --------------------------------------------------------------------

@dataclass(frozen=True)
class DensityRow:
    n: int
    stealth_density: Fraction
    first_rows_density: Fraction
    odd_even_ratio: Fraction | float


def density_table(max_n: int, grid: RowGrid | None = None) -> list[DensityRow]:
    c, d, e = sequence("C", max_n), sequence("D", max_n), sequence("E", max_n)
    grid = ensure_grid(grid, 1 << max_n)
    out = []
    for n in range(max_n + 1):
        rows = 1 << n
        ones = cumulative_ones(grid, rows)
        zeros = rows * rows - ones
        ratio: Fraction | float = Fraction(ones, zeros) if zeros else math.inf
        out.append(DensityRow(n, Fraction(c[n], d[n]), Fraction(e[n], 4**n), ratio))
    return out


def verify_density(max_n: int, grid: RowGrid | None = None, tol: float = 1e-3) -> VerificationReport:
    """Strict decrease of both densities from n = 2, and the C growth ratio near (3 + sqrt 17)/2."""
    table = density_table(max_n, grid)
    params = {"max_n": max_n}
    for prev, cur in zip(table[2:], table[3:]):
        if not cur.stealth_density < prev.stealth_density:
            return _report("density", params, {"n": cur.n, "series": "C/D"},
                           prev.stealth_density, cur.stealth_density, cur.n)
        if not cur.first_rows_density < prev.first_rows_density:
            return _report("density", params, {"n": cur.n, "series": "E/F"},
                           prev.first_rows_density, cur.first_rows_density, cur.n)
    c = sequence("C", max_n + 1)
    ratio = c[max_n + 1] / c[max_n]
    witness = None if abs(ratio - GROWTH) <= tol else {"growth_ratio": ratio}
    return _report("density", params, witness, GROWTH, ratio, len(table))


def verify_conjecture4(max_rows: int, grid: RowGrid | None = None) -> VerificationReport:
    """``G_m / m**2`` below ``E_{n+1} / 4**n`` with ``n = floor(log2 m)`` for every ``m``."""
    grid = ensure_grid(grid, max_rows)
    e = sequence("E", _floor_log2(max_rows) + 1)
    ones = 0
    envelope_max = Fraction(0)
    for m in range(1, max_rows + 1):
        ones += grid.rows[m].bit_count()
        n = _floor_log2(m)
        bound = Fraction(e[n + 1], 4**n)
        density = Fraction(ones, m * m)
        if not density < bound:
            return _report("conj4", {"max_rows": max_rows}, {"m": m, "ones": ones}, bound, density, m)
        envelope_max = max(envelope_max, density / bound)
    final = Fraction(ones, max_rows * max_rows)
    return _report("conj4", {"max_rows": max_rows}, None,
                   {"max_density_over_bound": float(envelope_max)},
                   {"G": ones, "cells": max_rows * max_rows, "density": final}, max_rows)
