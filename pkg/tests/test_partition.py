from fractions import Fraction

import pytest

from conftest import random_rational
from egy.partition import (
    Cell,
    cell_of,
    cells_in_window,
    cells_to_csv,
    next_regular_above,
    refinement_check,
)
from egy.rational import harmonic
from egy.search import best_underapprox


def test_cell_validation():
    with pytest.raises(ValueError):
        Cell(level=1, lower=Fraction(1, 2), upper=Fraction(1, 2), best_rep=None)
    with pytest.raises(ValueError):  # longer than 1/(n(n+1))
        Cell(level=2, lower=Fraction(0), upper=Fraction(1, 2), best_rep=None)
    with pytest.raises(ValueError):
        Cell(level=0, lower=Fraction(1, 2), upper=Fraction(2, 3), best_rep=None)
    unbounded = Cell(level=3, lower=harmonic(3), upper=None, best_rep=None)
    assert unbounded.length() is None
    assert unbounded.contains(Fraction(100))


def test_cell_of_examples():
    c = cell_of(Fraction(1), 1)
    assert (c.lower, c.upper) == (Fraction(1, 2), Fraction(1))
    c = cell_of(Fraction(2), 1)
    assert (c.lower, c.upper) == (Fraction(1), None)
    c = cell_of(Fraction(11, 24), 2)
    assert c.lower == Fraction(9, 20)
    assert c.contains(Fraction(11, 24))
    assert tuple(c.best_rep) == (4, 5)


def test_cell_of_rejects_bad_input():
    with pytest.raises(ValueError):
        cell_of(Fraction(0), 1)
    with pytest.raises(ValueError):
        cell_of(Fraction(1, 2), 0)


def test_cells_in_window_examples():
    # the cell (1/2, 1] is clipped at the window's left edge 3/4
    cells, uncovered = cells_in_window(Fraction(3, 4), Fraction(1), 1, 10)
    assert [(c.lower, c.upper) for c in cells] == [(Fraction(3, 4), Fraction(1))]
    assert uncovered == 0

    cells, uncovered = cells_in_window(Fraction(1, 3), Fraction(1, 2), 1, 10)
    assert [(c.lower, c.upper) for c in cells] == [(Fraction(1, 3), Fraction(1, 2))]
    assert uncovered == 0

    cells, uncovered = cells_in_window(Fraction(1, 3), Fraction(1, 2), 1, 0)
    assert cells == []
    assert uncovered == Fraction(1, 6)


def test_cells_in_window_rejects_bad_window():
    with pytest.raises(ValueError):
        cells_in_window(Fraction(1, 2), Fraction(1, 3), 1, 10)
    with pytest.raises(ValueError):
        cells_in_window(Fraction(0), Fraction(1, 2), 1, 10)
    with pytest.raises(ValueError):
        cells_in_window(Fraction(1, 3), Fraction(2), 1, 10)


def test_cells_tile_exactly(rng):
    for n in (1, 2, 3):
        for _ in range(4):
            b = random_rational(rng, max_den=40, hi=harmonic(n))
            a = b - Fraction(1, rng.randrange(20, 200))
            if a <= 0:
                continue
            cells, uncovered = cells_in_window(a, b, n, max_cells=30)
            total = sum((c.upper - c.lower for c in cells), Fraction(0))
            assert uncovered + total == b - a
            # consecutive: each upper equals the previous lower
            for left, right in zip(cells[1:], cells):
                assert left.upper == right.lower
            for c in cells:
                assert c.upper - c.lower <= Fraction(1, n * (n + 1))


def test_refinement_examples():
    assert refinement_check(Fraction(11, 24), 2)
    assert refinement_check(Fraction(1), 2)
    assert refinement_check(Fraction(10), 3)  # nested unbounded cells


def test_refinement_random(rng):
    for _ in range(15):
        x = random_rational(rng, max_den=80)
        for n in (2, 3):
            assert refinement_check(x, n)


def test_next_regular_above_examples():
    for n in (1, 2, 3, 4):
        assert next_regular_above(harmonic(n), n) == harmonic(n)
    assert next_regular_above(Fraction(1, 2), 1) == Fraction(1, 2)
    # 0.49 at level 2: values 1/2 + 1/m accumulate at 1/2 from above, so the
    # infimum is not attained; the result must still be within the window
    x = Fraction(49, 100)
    r = next_regular_above(x, 2)
    assert x <= r <= x + Fraction(1, 6)


def test_next_regular_above_rejects_out_of_range():
    with pytest.raises(ValueError):
        next_regular_above(Fraction(0), 2)
    with pytest.raises(ValueError):
        next_regular_above(harmonic(2) + 1, 2)


def test_regular_density(rng):
    for n in (1, 2, 3, 4):
        for _ in range(40):
            x = random_rational(rng, max_den=600, hi=harmonic(n))
            r = next_regular_above(x, n)
            assert x <= r <= x + Fraction(1, n * (n + 1))


def test_regular_spacing_shared_prefix():
    # values sharing the prefix differ by exactly 1/((m-1)m) for consecutive
    # last denominators
    prefix = Fraction(1, 2)
    values = [prefix + Fraction(1, m) for m in range(3, 30)]
    for v1, v2, m in zip(values, values[1:], range(4, 30)):
        assert v1 - v2 == Fraction(1, (m - 1) * m)


def test_regular_value_structure():
    # the returned value decomposes into 1..l followed by a chain obeying
    # m_{k+1} >= (m_k - 1) m_k + 1
    from egy.search import has_representation

    x = Fraction(9, 25)
    r = next_regular_above(x, 2)
    assert r == Fraction(1, 3) + Fraction(1, 37)
    rep = has_representation(r, 2)
    assert rep is not None
    m1, m2 = rep.denominators
    assert m2 >= (m1 - 1) * m1 + 1


def test_csv_export():
    cells, _ = cells_in_window(Fraction(3, 4), Fraction(1), 1, 10)
    text = cells_to_csv(cells + [Cell(1, Fraction(1), None, None)])
    lines = text.strip().splitlines()
    assert lines[0] == "level,lower,upper,length,best_rep"
    assert lines[1] == "1,3/4,1,1/4,2"
    assert lines[2] == "1,1,+inf,,"
