import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from shapely.geometry import Point, Polygon

from rhombus.grid import Cell, cell_value, generate
from rhombus.haystack import assemble_haystack, haystack, haystack_pieces
from rhombus.sequences import sequence
from rhombus.stealth import (
    STANDARD,
    BitPattern,
    DomainError,
    Orientation,
    Placement,
    build_pseudo_stealth,
    build_stealth,
    child_overlaps,
    contains,
    corner_bookkeeping,
    decompose,
    exceptional_cells,
    lemma_corners,
    octagon_vertices,
    outline_vertices,
    region_cells,
    region_ones,
    region_size,
    transform_cell,
    uncovered_cells,
)


def test_octagon_vertices():
    assert octagon_vertices(5) == [(0, 0), (32, -32), (48, -16), (40, -8), (48, 0), (40, 8), (48, 16), (32, 32)]
    assert octagon_vertices(2) == [(0, 0), (4, -4), (6, -2), (5, -1), (6, 0), (5, 1), (6, 2), (4, 4)]
    assert octagon_vertices(3) == [(0, 0), (8, -8), (12, -4), (10, -2), (12, 0), (10, 2), (12, 4), (8, 8)]
    with pytest.raises(DomainError):
        octagon_vertices(1)


def test_contains_examples():
    assert contains(2, STANDARD, (5, 0))
    assert not contains(2, STANDARD, (5, 1))
    assert contains(2, STANDARD, (1, 0))
    assert not contains(2, STANDARD, (6, 0))


@pytest.mark.parametrize("order", range(2, 7))
def test_contains_matches_polygon_interior(order):
    poly = Polygon(octagon_vertices(order))
    big = 1 << order
    for n in range(-1, 2 * big):
        for k in range(-big - 1, big + 2):
            assert contains(order, STANDARD, (n, k)) == poly.contains(Point(n, k)), (n, k)


def test_fractional_outline_reproduces_small_orders():
    # the octagon formula with fractional corners gives the explicit order 0/1 lists
    for order in (0, 1):
        poly = Polygon(outline_vertices(order))
        inside = {(n, k) for n in range(-1, 5) for k in range(-3, 4) if poly.contains(Point(n, k))}
        assert inside == set(region_cells(order).cells)


def test_region_sizes():
    assert [len(region_cells(n)) for n in range(4)] == [1, 4, 19, 89]
    d = sequence("D", 10)
    for n in range(2, 9):
        assert len(region_cells(n)) == d[n]
    for n in range(9, 11):
        assert region_size(n) == d[n]


@pytest.mark.parametrize("order", range(0, 7))
def test_region_symmetric(order):
    cells = region_cells(order).cells
    assert {Cell(n, -k) for n, k in cells} == cells


def test_transform_cell_examples():
    assert transform_cell((1, 0), Placement(Cell(32, -32), Orientation.RIGHT)) == (32, -31)
    assert transform_cell((1, 0), STANDARD) == (1, 0)
    assert transform_cell((1, 0), Placement(Cell(48, 0), Orientation.UP)) == (47, 0)


@given(st.sampled_from(list(Orientation)), st.integers(-50, 50), st.integers(-50, 50),
       st.integers(-50, 50), st.integers(-50, 50))
def test_placement_inverts(o, an, ak, n, k):
    p = Placement(Cell(an, ak), o)
    assert p.invert(p.apply((n, k))) == (n, k)


@given(st.sampled_from(list(Orientation)), st.sampled_from(list(Orientation)),
       st.integers(0, 5), st.integers(-20, 20), st.integers(-20, 20))
def test_composition_places_same_region(outer, inner, order, an, ak):
    parent = Placement(Cell(an, ak), outer)
    child = Placement(Cell(3, -1), inner)
    direct = {parent.apply(child.apply(c)) for c in region_cells(order).cells}
    assert direct == set(region_cells(order, parent.compose(child)).cells)


def test_decompose_order5():
    kids = {c.role: c for c in decompose(5)}
    assert (kids["nose"].order, kids["nose"].start) == (4, (1, 0))
    assert (kids["left_wing"].order, kids["left_wing"].start) == (4, (32, -31))
    assert (kids["right_wing"].order, kids["right_wing"].start) == (4, (32, 31))
    assert (kids["body"].order, kids["body"].start) == (3, (25, 0))
    assert (kids["tail"].order, kids["tail"].start) == (3, (47, 0))


def test_decompose_order2():
    kids = decompose(2)
    assert [c.order for c in kids] == [1, 1, 1, 0, 0]
    assert [c.start for c in kids] == [(1, 0), (4, -3), (4, 3), (4, 0), (5, 0)]
    with pytest.raises(DomainError):
        decompose(1)


def test_order3_gap_is_zero():
    d = sequence("D", 3)
    assert d[3] - 3 * d[2] - 2 * d[1] == 24
    gap = uncovered_cells(3)
    assert len(gap) == 24
    assert all(build_stealth(3)[c] == 0 for c in gap)


@pytest.mark.parametrize("order", range(2, 9))
def test_children_disjoint_inside_parent(order):
    assert child_overlaps(order) == []
    parent = region_cells(order).cells
    for child in decompose(order):
        assert region_cells(child.order, child.placement).cells <= parent


def test_children_of_rotated_parent_stay_inside():
    parent = Placement(Cell(10, 4), Orientation.LEFT)
    cells = region_cells(5, parent).cells
    for child in decompose(5, parent):
        assert region_cells(child.order, child.placement).cells <= cells


def brute_exceptional(pattern):
    cells = pattern.ones
    if not cells:
        return set()
    n0 = min(c[0] for c in cells) - 2
    n1 = max(c[0] for c in cells) + 2
    k0 = min(c[1] for c in cells) - 2
    k1 = max(c[1] for c in cells) + 2
    out = set()
    for n in range(n0, n1 + 1):
        for k in range(k0, k1 + 1):
            s = sum(pattern[c] for c in ((n - 1, k), (n, k - 1), (n, k), (n, k + 1), (n + 1, k)))
            if s % 2:
                out.add((n, k))
    return out


def test_exceptional_examples():
    order1 = BitPattern(frozenset({Cell(1, 0), Cell(2, -1), Cell(2, 0), Cell(2, 1)}))
    assert exceptional_cells(order1) == {(0, 0), (2, -2), (3, -1), (3, 0), (3, 1), (2, 2)}
    assert exceptional_cells(build_stealth(5)) == {(0, 0), (32, -32), (48, -16), (48, 0), (48, 16), (32, 32)}
    assert exceptional_cells(BitPattern(frozenset())) == set()


@pytest.mark.parametrize("order", range(0, 6))
def test_exceptional_matches_brute_force(order):
    p = build_stealth(order)
    assert exceptional_cells(p) == brute_exceptional(p)


@pytest.mark.parametrize("order", range(1, 9))
def test_lemma_corners(order):
    assert exceptional_cells(build_stealth(order)) == lemma_corners(order)


@pytest.mark.parametrize("order", range(3, 9))
def test_corner_cancellation(order):
    listed, survivors = corner_bookkeeping(order)
    assert len(listed) == 30
    assert survivors == lemma_corners(order)


def test_wing_corners_match_listed_coordinates():
    # left wing corners for n = 5, written out from the cancellation argument
    n, big, half, quarter = 5, 32, 16, 8
    wing = next(c for c in decompose(n) if c.role == "left_wing")
    assert lemma_corners(wing.order, wing.placement) == {
        (big, -big), (big + half, -half), (big + quarter, -quarter),
        (big, -quarter), (big - quarter, -quarter), (half, -half)}


def test_build_stealth_small():
    assert build_stealth(0).ones == {(1, 0)}
    assert build_stealth(1).count() == 4
    s2 = build_stealth(2)
    assert (s2.count(), len(s2.window)) == (14, 19)


@pytest.mark.parametrize("order", range(0, 9))
def test_pseudo_equals_stealth(order):
    assert build_pseudo_stealth(order) == build_stealth(order)


@pytest.mark.parametrize("order", range(2, 9))
def test_pseudo_count_recurrence(order):
    c = sequence("C", order)
    assert build_pseudo_stealth(order).count() == 3 * c[order - 1] + 2 * c[order - 2]


@pytest.mark.parametrize("order", range(0, 9))
def test_stealth_bilateral(order):
    ones = build_stealth(order).ones
    assert {Cell(n, -k) for n, k in ones} == ones


def test_region_ones_by_mask_matches_pattern():
    g = generate(400)
    for order in range(0, 9):
        assert region_ones(order, g) == build_stealth(order, g).count()


def test_pattern_equality_ignores_window():
    a = BitPattern(frozenset({Cell(1, 0)}), frozenset({Cell(1, 0), Cell(2, 0)}))
    b = BitPattern(frozenset({Cell(1, 0)}))
    assert a == b and a[(2, 0)] == 0 and a[(9, 9)] == 0


# -- haystack --------------------------------------------------------------

def odd_rule(generations):
    """Odd-rule automaton on the centred von Neumann neighbourhood from one ON cell."""
    size = 2 * generations + 3
    grid = np.zeros((size, size), dtype=np.uint8)
    c = size // 2
    grid[c, c] = 1
    for _ in range(generations):
        nxt = grid.copy()
        nxt[1:, :] ^= grid[:-1, :]
        nxt[:-1, :] ^= grid[1:, :]
        nxt[:, 1:] ^= grid[:, :-1]
        nxt[:, :-1] ^= grid[:, 1:]
        grid = nxt
    return {(int(y) - c, int(x) - c) for y, x in np.argwhere(grid)}


def test_haystack_one():
    h = haystack(1)
    assert h.ones == {(1, 0), (2, -1), (2, 0), (2, 1), (3, 0)}


@pytest.mark.parametrize("n", range(1, 7))
def test_haystack_is_odd_rule_generation(n):
    centre = 1 << n
    cells = {(r - centre, k) for r, k in haystack(n).ones}
    assert cells == odd_rule((1 << n) - 1)


@pytest.mark.parametrize("n", range(1, 9))
def test_haystack_count_and_flip(n):
    e, b = sequence("E", n), sequence("B", n)
    h = haystack(n)
    assert h.count() == 2 * e[n] - b[n]
    mirror = 2 << n
    assert {Cell(mirror - r, k) for r, k in h.ones} == h.ones


@pytest.mark.parametrize("n", range(2, 9))
def test_haystack_decomposition(n):
    assert assemble_haystack(n) == haystack(n)


def test_haystack_pieces_face_out():
    pieces = {p.role: p for p in haystack_pieces(3)}
    assert pieces["top"].placement.apply((1, 0)) == (1, 0)
    assert pieces["left"].placement.apply((1, 0)) == (8, -7)
    assert pieces["right"].placement.apply((1, 0)) == (8, 7)
    assert pieces["bottom"].placement.apply((1, 0)) == (15, 0)
