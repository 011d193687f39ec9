"""Closed forms, slices, and conjecture checks against the exact counts.

Every checker here re-derives its ground truth from the row DP (or, for
slice constructions, from the generating functions that the DP itself
validates); reference values enter only as the thing being checked.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import refdata
from .counting import count_table, max_fill
from .gf import cached_gf
from .polys import BiPoly, RationalGF


@dataclass
class ConjectureReport:
    """Outcome of checking one closed form over a rectangular range."""

    name: str
    domain_checked: str
    status: str  # "pass" or "fail"
    counterexample: tuple = None  # (r, c, expected, got) when failing

    @property
    def ok(self):
        return self.status == "pass"

    def __bool__(self):
        return self.ok


def _report(name, domain, bad):
    if bad is None:
        return ConjectureReport(name, domain, "pass")
    return ConjectureReport(name, domain, "fail", bad)


def check_d0_closed_form(r_max, c_max):
    """The empty placement is unique: exactly one way to put 0 dominoes."""
    for c in range(1, c_max + 1):
        table = count_table(c, r_max)
        for r in range(1, r_max + 1):
            if table.value(r, 0) != 1:
                return _report("zero-dominoes-count", _rect(r_max, c_max),
                               (r, c, 1, table.value(r, 0)))
    return _report("zero-dominoes-count", _rect(r_max, c_max), None)


def check_d1_closed_form(r_max, c_max):
    """One domino: 2rc - r - c placements (all edges of the grid graph)."""
    for c in range(1, c_max + 1):
        table = count_table(c, r_max)
        for r in range(1, r_max + 1):
            want = 2 * r * c - r - c
            got = table.value(r, 1)
            if got != want:
                return _report("one-domino-count", _rect(r_max, c_max),
                               (r, c, want, got))
    return _report("one-domino-count", _rect(r_max, c_max), None)


def check_d2_formula(r_max, c_max):
    """Biquadratic closed form for two dominoes, valid for r, c >= 3.

    Evaluated in exact rationals; a non-integral value is itself a
    failure, not an exception.
    """
    if r_max < 3 or c_max < 3:
        raise ValueError("the two-domino closed form starts at 3 x 3")
    domain = "3 <= r <= %d, 3 <= c <= %d" % (r_max, c_max)
    for c in range(3, c_max + 1):
        table = count_table(c, r_max)
        for r in range(3, r_max + 1):
            val = (2 * c * c * r * r - 2 * (c * r * r + c * c * r)
                   + Fraction(r * r + c * c, 2) - 22 * c * r
                   + Fraction(59 * (c + r), 2) - 30)
            got = table.value(r, 2)
            if val.denominator != 1 or val != got:
                return _report("two-domino-biquadratic", domain,
                               (r, c, val, got))
    return _report("two-domino-biquadratic", domain, None)


def _rect(r_max, c_max):
    return "1 <= r <= %d, 1 <= c <= %d" % (r_max, c_max)


def check_maxfill_conjectures(r_max, c_max):
    """The three parity-class formulas for the maximum filling.

    Each report covers one class: sides 2 mod 4 crossed with odd, both
    sides even, and multiples of 4 crossed with odd >= 3.  Odd x odd
    boards have no asserted formula; see observe_odd_odd_max_fill.
    """
    classes = [
        ("two-mod-four-times-odd",
         lambda r, c: r % 4 == 2 and c % 2 == 1,
         lambda r, c: (r * c + 2) // 4),
        ("both-even",
         lambda r, c: r % 2 == 0 and c % 2 == 0,
         lambda r, c: r * c // 4),
        ("four-multiple-times-odd",
         lambda r, c: r % 4 == 0 and c % 2 == 1 and c >= 3,
         lambda r, c: r * c // 4),
    ]
    fills = {}
    reports = []
    for name, in_class, formula in classes:
        domain = "cells of the parity class with r <= %d, c <= %d" % (
            r_max, c_max)
        bad = None
        for r in range(1, r_max + 1):
            for c in range(1, c_max + 1):
                if not (in_class(r, c) or in_class(c, r)):
                    continue
                want = formula(r, c)
                key = (min(r, c), max(r, c))
                if key not in fills:
                    fills[key] = max_fill(*key)
                got = fills[key]
                if got != want:
                    bad = (r, c, want, got)
                    break
            if bad:
                break
        reports.append(_report("max-fill-" + name, domain, bad))
    return reports


def observe_odd_odd_max_fill(r_max, c_max):
    """Observed maximum fillings on odd x odd boards (no formula asserted)."""
    out = {}
    for r in range(1, r_max + 1, 2):
        for c in range(1, c_max + 1, 2):
            out[(r, c)] = max_fill(r, c)
    return out


def check_narrow_max_fill(r_max):
    """Exact fillings of 1- and 2-wide boards: (r+1)//3 and (r+1)//2."""
    reports = []
    for c, formula in ((1, lambda r: (r + 1) // 3),
                       (2, lambda r: (r + 1) // 2)):
        table = count_table(c, r_max)
        bad = None
        for r in range(1, r_max + 1):
            want = formula(r)
            got = table.dbar(r)
            if got != want:
                bad = (r, c, want, got)
                break
        reports.append(_report("max-fill-width-%d" % c,
                               "1 <= r <= %d" % r_max, bad))
    return reports


# -- slices ---------------------------------------------------------------------


@dataclass
class SliceVerdict:
    """Whether a fixed-domino-count slice is eventually polynomial in r.

    When the reduced denominator is (1 - x)^k the counts agree with
    sum_l gamma_l * binom(r + k - l - 1, k - 1) for all r >= r0, where
    gamma_l are the numerator coefficients.
    """

    polynomial: bool
    k: int = None
    gamma: tuple = None
    r0: int = None


def _one_minus_x_power(k):
    return BiPoly({(i, 0): (-1) ** i * math.comb(k, i) for i in range(k + 1)})


def column_slice(c, d, engine="fit"):
    """Reduced x-only rational function counting d-domino placements.

    Returns (slice, verdict); the verdict carries the binomial-basis
    coefficients when the denominator is a pure power of 1 - x.
    """
    gf = cached_gf(c, engine)
    sl = gf.series_y(d)[d]
    k = sl.den.deg_x
    if sl.den == _one_minus_x_power(k):
        gamma = [0] * (sl.num.deg_x + 1)
        for (i, _), v in sl.num.terms.items():
            gamma[i] = v
        r0 = max(0, sl.num.deg_x - k + 1)
        return sl, SliceVerdict(True, k, tuple(gamma), r0)
    return sl, SliceVerdict(False)


def slice_value(verdict, r):
    """Evaluate a polynomial slice verdict at row count r."""
    if not verdict.polynomial:
        raise ValueError("slice is not polynomial")
    k = verdict.k
    return sum(g * math.comb(r + k - l - 1, k - 1)
               for l, g in enumerate(verdict.gamma) if r + k - l - 1 >= 0)


def published_slice_report(c):
    """Compare computed slices against the printed expansions.

    Returns {d: bool}; a False marks a printed slice that contradicts
    the exact counts (the width-6 lines are the known case).
    """
    out = {}
    for (cc, d), (num_terms, k) in sorted(refdata.PUBLISHED_SLICES.items()):
        if cc != c:
            continue
        printed = RationalGF(BiPoly({(i, 0): v for i, v in num_terms.items()}),
                             _one_minus_x_power(k))
        sl, _ = column_slice(c, d)
        out[d] = sl == printed
    return out


def diagonal_slice(r_max):
    """Counts on square boards: row r lists D(r, r, d) for d = 0..max."""
    rows = []
    for r in range(r_max + 1):
        if r == 0:
            rows.append([1])
        else:
            rows.append(list(count_table(r, r).row(r)))
    return rows


def row_sum_gf(c, engine="fit"):
    """Generating function of the total placement counts per row count."""
    return cached_gf(c, engine).specialize_y(1)
