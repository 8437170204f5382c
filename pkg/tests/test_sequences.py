import math

import pytest

from rhombus.grid import generate
from rhombus.sequences import (
    GROWTH,
    UnknownSequence,
    characteristic_residual,
    closed_form,
    sequence,
)

PRINTED = {
    "B": [1, 3, 5, 11, 21, 43, 85, 171],
    "C": [1, 4, 14, 50, 178, 634, 2258, 8042],
    "D": [1, 4, 19, 89, 385, 1601, 6529, 26369],
    "E": [1, 4, 11, 36, 119, 408, 1419, 4988, 17631],
}


@pytest.mark.parametrize("name", sorted(PRINTED))
def test_printed_prefixes(name):
    want = PRINTED[name]
    assert list(sequence(name, len(want) - 1).values) == want


def test_powers():
    assert list(sequence("A", 5).values) == [1, 2, 4, 8, 16, 32]
    assert list(sequence("F", 4).values) == [1, 4, 16, 64, 256]
    assert sequence("I", 9).values == sequence("B", 9).values


def test_exact_closed_forms_agree():
    for name in "ABDF":
        table = sequence(name, 30)
        assert all(table[n] == closed_form(name, n) for n in range(31))


@pytest.mark.parametrize("name", ["C", "E"])
def test_sqrt17_closed_forms(name):
    table = sequence(name, 30)
    for n in range(31):
        assert math.isclose(closed_form(name, n), table[n], rel_tol=1e-9)


def test_characteristic_polynomial():
    assert set(characteristic_residual(list(sequence("C", 40).values))) == {0}
    assert math.isclose(GROWTH**2, 3 * GROWTH + 2)


def test_side_recurrences():
    a, b = sequence("A", 30), sequence("B", 30)
    for n in range(2, 31):
        assert a[n] == a[n - 1] + 2 * a[n - 2]
        assert b[n] == 2 * a[n - 1] + b[n - 2]


def test_g_h_from_grid():
    g, h = sequence("G", 32), sequence("H", 32)
    assert g.start == 1 and g[1] == 1 and h[1] == 0
    assert g[4] == 11 and g[32] == 408
    assert all(g[m] + h[m] == m * m for m in g.indices())
    assert g[32] == sequence("G", 32, generate(40))[32]


def test_unknown_name():
    with pytest.raises(UnknownSequence):
        sequence("Z", 3)
