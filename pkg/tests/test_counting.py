import pytest
from hypothesis import given, settings, strategies as st

from nonbond.counting import (
    CountTable,
    brute_force_enumerate,
    count_placements_by_d,
    count_table,
    is_non_bonding,
    is_valid_placement,
    max_fill,
    max_fill_table,
    placement_cells,
    symmetry_check,
)


def test_small_boards_by_hand():
    # 2x2: four single dominoes, no pair fits
    t = count_table(2, 2)
    assert t.row(2) == (1, 4)
    # 1xN strip: D(r,1,1) = r-1
    t = count_table(1, 10)
    for r in range(2, 11):
        assert t.value(r, 1) == r - 1


def test_count_table_interface():
    t = count_table(3, 6)
    assert t.cols == 3 and t.rows_max == 6
    assert t.row(0) == (1,)
    assert t.value(3, 2) == 12
    assert t.value(3, 99) == 0
    assert t.dbar(5) == 4
    assert t.row_sum(2) == 1 + 7 + 1
    assert t.max_d() == t.dbar(6)
    assert t == count_table(3, 6)
    assert t != count_table(4, 6)


def test_counts_match_oracle_small():
    for r in range(1, 6):
        for c in range(1, 6):
            t = count_table(c, r)
            oracle = count_placements_by_d(r, c)
            assert list(t.row(r)) == oracle, (r, c)


def test_transpose_symmetry():
    for c1 in range(1, 6):
        for c2 in range(1, 6):
            assert symmetry_check(c1, c2, 8)


def test_max_fill_known_values():
    assert max_fill(1, 1) == 0
    assert max_fill(2, 2) == 1
    assert max_fill(6, 6) == 9
    assert max_fill(8, 8) == 16
    assert max_fill(10, 5) == 13
    assert max_fill(5, 10) == 13  # transposed


def test_max_fill_table_symmetric():
    fills = max_fill_table(7, 7)
    for r in range(1, 8):
        for c in range(1, 8):
            assert fills[(r, c)] == fills[(c, r)]


def test_brute_force_enumerate_order_and_validity():
    found = brute_force_enumerate(3, 3, 2)
    assert len(found) == 12
    assert found == sorted(found)
    for p in found:
        assert is_valid_placement(3, 3, p)
        assert is_non_bonding(p)
        assert sorted(p) == list(p)


def test_brute_force_empty_cases():
    assert brute_force_enumerate(2, 2, 3) == []
    assert brute_force_enumerate(1, 1, 1) == []
    assert brute_force_enumerate(1, 1, 0) == [()]


def test_unique_maximal_board():
    found = brute_force_enumerate(10, 5, 13)
    assert len(found) == 1
    assert is_valid_placement(10, 5, found[0])


def test_placement_cells_and_validity():
    p = (((0, 0), (0, 1)), ((2, 0), (2, 1)))
    assert placement_cells(p) == [(0, 0), (0, 1), (2, 0), (2, 1)]
    assert is_valid_placement(3, 2, p)
    assert not is_valid_placement(2, 2, p)  # row 2 off board
    bonding = (((0, 0), (0, 1)), ((1, 0), (1, 1)))
    assert not is_valid_placement(2, 2, bonding)


def test_rejects_bad_boards():
    with pytest.raises(ValueError):
        count_table(13, 5)
    with pytest.raises(ValueError):
        max_fill(0, 3)
    with pytest.raises(ValueError):
        brute_force_enumerate(9, 9, 2)  # 81 cells > oracle limit
    with pytest.raises(ValueError):
        brute_force_enumerate(3, 3, -1)


@settings(max_examples=30, deadline=None)
@given(r=st.integers(1, 5), c=st.integers(1, 5), d=st.integers(0, 6))
def test_enumerate_agrees_with_counts(r, c, d):
    t = count_table(c, r)
    assert len(brute_force_enumerate(r, c, d)) == t.value(r, d)


@settings(max_examples=20, deadline=None)
@given(r=st.integers(1, 6), c=st.integers(1, 6))
def test_row_zero_and_one_dominoes(r, c):
    t = count_table(c, r)
    assert t.value(r, 0) == 1
    if r * c >= 2:
        assert t.value(r, 1) == 2 * r * c - r - c


def test_count_table_equality_requires_cols():
    a = CountTable(2, [(1,), (1,)])
    b = CountTable(3, [(1,), (1,)])
    assert a != b
