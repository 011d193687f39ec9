import pytest

from nonbond import refdata
from nonbond.counting import count_table
from nonbond.gf import (
    FitError,
    TransferMatrix,
    build_transfer,
    cached_gf,
    fit_primes,
    gf_by_elimination,
    gf_by_series_fit,
    merge_mirror_states,
    verify_gf,
)
from nonbond.polys import BiPoly, RationalGF


def reference_gf(c):
    num, den = refdata.GF_TERMS[c]
    return RationalGF(BiPoly(num), BiPoly(den))


def test_transfer_matrix_shape():
    # the all-zero word doubles as start and end anchor
    t = build_transfer(3)
    assert isinstance(t, TransferMatrix)
    assert t.size == 13
    assert t.words[t.start] == "000"
    dense = t.to_dense()
    assert len(dense) == t.size
    # every edge weight is a positive multiple of x y^w
    for a, b, w, coef in t.iter_edges():
        p = dense[a][b]
        assert p == BiPoly.monomial(coef, 1, w)
        assert coef >= 1 and w >= 0


def test_transfer_series_equals_dp():
    # walks of length r+1 from the anchor back to itself count r-row boards
    t = build_transfer(2)
    g = gf_by_elimination(t)
    table = count_table(2, 12)
    series = g.series_x(12)
    for r in range(1, 13):
        row = series[r]
        want = {(0, d): v for d, v in enumerate(table.row(r)) if v}
        assert row.terms == want, r


def test_mirror_merge_is_exact():
    for c in range(1, 5):
        t = build_transfer(c)
        merged = merge_mirror_states(t)
        assert merged.size <= t.size
        a = gf_by_elimination(t, merge_mirrors=False)
        b = gf_by_elimination(merged)
        assert a == b


def test_mirror_merge_sizes():
    # palindromic words stay, mirror pairs collapse
    assert merge_mirror_states(build_transfer(5)).size == 36
    assert merge_mirror_states(build_transfer(6)).size == 69


def test_elimination_matches_reference():
    for c in (1, 2, 3, 4):
        got = gf_by_elimination(c).reduced()
        assert got.identical(reference_gf(c).reduced()), c


def test_series_fit_matches_reference():
    for c in (1, 2, 3, 4):
        got = gf_by_series_fit(c).reduced()
        assert got.identical(reference_gf(c).reduced()), c


def test_fit_bounds_are_exact():
    # explicit bounds assert the minimal denominator shape: too small
    # has no solution, too large leaves free parameters
    with pytest.raises(FitError, match="no solution within bounds"):
        gf_by_series_fit(3, den_degree_bounds=(2, 1))
    with pytest.raises(FitError, match="rank deficiency"):
        gf_by_series_fit(2, den_degree_bounds=(8, 5))
    got = gf_by_series_fit(2, den_degree_bounds=(4, 2))
    assert got == reference_gf(2)


def test_fit_primes():
    ps = fit_primes(8)
    assert len(ps) == 8 and len(set(ps)) == 8
    for p in ps:
        assert p < (1 << 25)
        assert all(p % q for q in range(2, int(p ** 0.5) + 1))


def test_cached_gf_reuses():
    a = cached_gf(3, "fit")
    assert cached_gf(3, "fit") is a
    b = cached_gf(3, "eliminate")
    assert a == b


def test_verify_gf_report():
    rep = verify_gf(2, terms=15)
    assert rep.ok and bool(rep)
    names = [name for name, _, _ in rep.checks]
    assert "engines-agree" in names
    assert "elimination-series" in names
    assert "series-fit-series" in names
    d = rep.as_dict()
    assert d["cols"] == 2 and d["ok"]


def test_verify_gf_rejects_bad_width():
    with pytest.raises(ValueError):
        verify_gf(0)


def test_engines_agree_width_5():
    # the two independent routes meet on a width neither was tuned for
    a = cached_gf(5, "eliminate")
    b = cached_gf(5, "fit")
    assert a == b
    assert a.reduced().den.deg_x == 36 and a.reduced().den.deg_y == 39
