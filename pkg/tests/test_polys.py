from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from nonbond.polys import (
    BiPoly,
    RationalGF,
    divides,
    exact_div,
    poly_gcd,
    poly_gcd_many,
    reduce_gf,
    series_x,
    specialize_y,
)

coefs = st.integers(-40, 40)
keys = st.tuples(st.integers(0, 6), st.integers(0, 5))
polys = st.dictionaries(keys, coefs, max_size=8).map(BiPoly)
nonzero_polys = polys.filter(lambda p: not p.is_zero)
# polynomials with a guaranteed nonzero constant term
unit_polys = st.tuples(polys, st.sampled_from([1, -1, 2, 3])).map(
    lambda t: t[0] - BiPoly.const(t[0].const_term) + BiPoly.const(t[1]))


def test_constructors_and_predicates():
    assert BiPoly.zero().is_zero
    assert BiPoly.one().is_one
    assert BiPoly.const(5).coef(0, 0) == 5
    assert BiPoly.x(2).terms == {(2, 0): 1}
    assert BiPoly.y().terms == {(0, 1): 1}
    assert BiPoly.monomial(-3, 1, 4).terms == {(1, 4): -3}
    assert BiPoly({(1, 1): 0}).is_zero  # zero coefficients dropped


def test_str_rendering():
    p = BiPoly({(0, 0): 1, (1, 0): -1, (2, 1): 3, (0, 2): -1})
    s = str(p)
    assert "1" in s and "x" in s
    assert str(BiPoly.zero()) == "0"
    g = RationalGF(BiPoly.one(), BiPoly({(0, 0): 1, (1, 0): -1}))
    assert str(g) == "(1) / (1 - x)"


@settings(max_examples=60, deadline=None)
@given(a=polys, b=polys, c=polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a - a == BiPoly.zero()


@settings(max_examples=60, deadline=None)
@given(a=polys, b=nonzero_polys)
def test_exact_div_inverts_multiplication(a, b):
    assert exact_div(a * b, b) == a
    assert divides(b, a * b)


@settings(max_examples=40, deadline=None)
@given(a=nonzero_polys, b=nonzero_polys)
def test_exact_div_rejects_non_multiples(a, b):
    prod = a * b
    bumped = prod + BiPoly.one()
    q = exact_div(bumped, b)
    assert q is None or q * b == bumped


@settings(max_examples=40, deadline=None)
@given(a=polys, b=polys, g=nonzero_polys)
def test_gcd_divides_and_covers(a, b, g):
    h = poly_gcd(a * g, b * g)
    if not (a * g).is_zero or not (b * g).is_zero:
        assert divides(h, a * g)
        assert divides(h, b * g)
        assert divides(g, h) or divides(poly_gcd(a, b) * g, h)


@settings(max_examples=40, deadline=None)
@given(p=nonzero_polys)
def test_primitive_decomposition(p):
    content, prim = p.primitive()
    assert content > 0
    assert BiPoly.const(content) * prim == p
    assert prim.content() == 1


def test_gcd_many():
    g = BiPoly({(1, 0): 1, (0, 1): 1})
    parts = [g * BiPoly.x(k) for k in range(3)]
    assert poly_gcd_many(parts) == g
    assert poly_gcd_many([]) == BiPoly.zero()


def test_pow_and_shift():
    p = BiPoly({(0, 0): 1, (1, 0): 1})
    assert p ** 3 == p * p * p
    assert p ** 0 == BiPoly.one()
    assert BiPoly.x().shift(2, 1).terms == {(3, 1): 1}
    with pytest.raises(ValueError):
        BiPoly.x().shift(-2, 0)


@settings(max_examples=40, deadline=None)
@given(p=polys, xv=st.integers(-5, 5), yv=st.integers(-5, 5))
def test_evaluate_is_a_homomorphism(p, xv, yv):
    q = p * p + p
    assert q.evaluate(x=xv, y=yv) == p.evaluate(x=xv, y=yv) ** 2 + \
        p.evaluate(x=xv, y=yv)


def test_rational_gf_requires_unit_constant():
    with pytest.raises(ValueError):
        RationalGF(BiPoly.one(), BiPoly.x())


@settings(max_examples=25, deadline=None)
@given(a=polys, den=unit_polys, g=unit_polys)
def test_gf_equality_ignores_common_factors(a, den, g):
    lhs = RationalGF(a * g, den * g)
    rhs = RationalGF(a, den)
    assert lhs == rhs
    assert lhs.reduced().identical(rhs.reduced())


def test_series_x_matches_long_division():
    # 1/(1 - x - x y): coefficient of x^r is (1 + y)^r
    g = RationalGF(BiPoly.one(),
                   BiPoly({(0, 0): 1, (1, 0): -1, (1, 1): -1}))
    series = g.series_x(6)
    binom = BiPoly({(0, 0): 1, (0, 1): 1})
    for r, term in enumerate(series):
        assert term == binom ** r
    assert series_x(g, 3) == g.series_x(3)


def test_series_y_reconstructs():
    den = BiPoly({(0, 0): 1, (1, 0): -1, (2, 1): -2})
    g = RationalGF(BiPoly({(0, 0): 1, (1, 1): 1}), den)
    slices = g.series_y(4)
    # multiply back: sum of y^d * slice_d must match g to y^4
    acc = RationalGF(BiPoly.zero(), BiPoly.one())
    for d, s in enumerate(slices):
        acc = acc + s * RationalGF(BiPoly.y(d) if d else BiPoly.one(),
                                   BiPoly.one())
    diff = (g - acc).reduced()
    assert diff.num.is_zero or min(j for _, j in diff.num.terms) > 4


def test_specialize_y_exact():
    g = RationalGF(BiPoly({(0, 0): 1, (1, 1): 2}),
                   BiPoly({(0, 0): 1, (1, 0): -1}))
    at1 = g.specialize_y(1)
    assert at1.num == BiPoly({(0, 0): 1, (1, 0): 2})
    at_half = specialize_y(g, Fraction(1, 2))
    # (1 + x) / (1 - x), cleared of the denominator 2
    assert at_half == RationalGF(BiPoly({(0, 0): 1, (1, 0): 1}),
                                 BiPoly({(0, 0): 1, (1, 0): -1}))


def test_reduce_gf_strips_common_factor():
    num = BiPoly({(1, 0): 2, (0, 0): 2})
    den = BiPoly({(0, 0): 2, (1, 0): -2})
    r = reduce_gf(RationalGF(num, den))
    assert r.identical(RationalGF(BiPoly({(0, 0): 1, (1, 0): 1}),
                                  BiPoly({(0, 0): 1, (1, 0): -1})))


def test_gf_arithmetic():
    one = RationalGF(BiPoly.one(), BiPoly.one())
    geo = RationalGF(BiPoly.one(), BiPoly({(0, 0): 1, (1, 0): -1}))
    x = RationalGF(BiPoly.x(), BiPoly.one())
    assert geo - x * geo == one
    assert (geo / geo).reduced().identical(one)
