import pytest

from nonbond import refdata
from nonbond.analysis import (
    ConjectureReport,
    SliceVerdict,
    check_d0_closed_form,
    check_d1_closed_form,
    check_d2_formula,
    check_maxfill_conjectures,
    check_narrow_max_fill,
    column_slice,
    diagonal_slice,
    observe_odd_odd_max_fill,
    published_slice_report,
    row_sum_gf,
    slice_value,
)
from nonbond.counting import count_table
from nonbond.polys import BiPoly, RationalGF


def test_conjecture_report_truthiness():
    ok = ConjectureReport("x", "y", "pass", None)
    assert ok.ok and bool(ok)
    bad = ConjectureReport("x", "y", "fail", (1, 2, 3, 4))
    assert not bad.ok and not bool(bad)


def test_closed_forms_small():
    assert check_d0_closed_form(8, 8).ok
    assert check_d1_closed_form(8, 8).ok
    assert check_d2_formula(3, 10).ok


def test_d2_formula_domain_guard():
    with pytest.raises(ValueError):
        check_d2_formula(2, 5)


def test_maxfill_conjectures_small():
    reports = check_maxfill_conjectures(10, 6)
    assert len(reports) == 3
    names = {r.name for r in reports}
    assert names == {"max-fill-two-mod-four-times-odd",
                     "max-fill-both-even",
                     "max-fill-four-multiple-times-odd"}
    for r in reports:
        assert r.ok, r


def test_odd_odd_observation():
    seen = observe_odd_odd_max_fill(9, 9)
    # no closed form is claimed; just report what the DP finds
    assert seen[(3, 3)] == 2
    assert seen[(5, 5)] == 6
    assert seen[(9, 9)] == 19


def test_narrow_strips():
    one, two = check_narrow_max_fill(30)
    assert one.ok and two.ok
    assert "width-1" in one.name and "width-2" in two.name


def test_column_slice_matches_series():
    table = count_table(3, 25)
    for d in range(4):
        slc, verdict = column_slice(3, d)
        assert verdict.polynomial
        for r in range(verdict.r0, 26):
            assert slice_value(verdict, r) == table.value(r, d), (d, r)


def test_column_slice_verdict_shape():
    _, verdict = column_slice(2, 1)
    assert verdict.polynomial and verdict.k >= 1
    want, k = refdata.PUBLISHED_SLICES[(2, 1)]
    assert verdict.k == k
    assert {i: v for i, v in enumerate(verdict.gamma) if v} == want


def test_slice_value_rejects_non_polynomial():
    with pytest.raises(ValueError):
        slice_value(SliceVerdict(False), 3)


def test_published_slices_match_for_narrow_widths():
    for c in (2, 3, 4):
        rep = published_slice_report(c)
        assert rep and all(rep.values()), (c, rep)


def test_diagonal_slice_matches_squares():
    diag = diagonal_slice(6)
    for r, vals in refdata.SQUARE_ROWS.items():
        assert diag[r] == vals


def test_row_sum_gf_reference():
    for c, (num, den) in refdata.ROW_SUM_GF.items():
        want = RationalGF(BiPoly({(i, 0): v for i, v in enumerate(num) if v}),
                          BiPoly({(i, 0): v for i, v in enumerate(den) if v}))
        assert row_sum_gf(c) == want


def test_row_sum_series_equals_table():
    g = row_sum_gf(4)
    series = g.series_x(15)
    table = count_table(4, 15)
    for r in range(16):
        assert series[r] == BiPoly.const(table.row_sum(r)), r
