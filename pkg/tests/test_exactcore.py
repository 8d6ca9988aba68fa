"""Tests for the exact arithmetic substrate.

Expected values here are either computed by an independent oracle inside the
test (binomial-sum formulas, factorials) or are trivial identities.
"""

import math
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from legperiods.exactcore import (
    BiPoly,
    QuadExt,
    RatFun,
    TruncatedSeries,
    UniPoly,
    central_binomial,
    geometric_series,
    hyp2f1_series,
    lagrange_interpolate,
    legendre_poly,
    legendre_polys,
    legendre_values,
    pochhammer,
    poly_gcd,
    poly_resultant,
    quad_sqrt,
    ratfun_series,
)

rationals = st.fractions(min_value=-40, max_value=40, max_denominator=12)
small_polys = st.lists(rationals, min_size=0, max_size=6).map(lambda cs: UniPoly("x", cs))


def test_central_binomial_factorial_oracle():
    for n in range(30):
        expect = math.factorial(2 * n) // math.factorial(n) ** 2
        assert central_binomial(n) == expect
    assert central_binomial(5) == 252


def test_pochhammer():
    assert pochhammer(F(1, 4), 3) == F(1, 4) * F(5, 4) * F(9, 4)
    assert pochhammer(F(3), 0) == 1


# ---------------------------------------------------------------------------
# polynomials


def test_unipoly_basic_arithmetic():
    x = UniPoly.gen("x")
    p = (x + 1) * (x - 1)
    assert p == x * x - 1
    assert p.evaluate(F(3)) == 8
    assert p.derivative() == 2 * x
    assert (x + 2) ** 3 == x**3 + 6 * x**2 + 12 * x + 8


@given(small_polys, small_polys)
@settings(max_examples=60, deadline=None)
def test_unipoly_divmod_identity(f, g):
    if g.is_zero():
        return
    q, r = f.divmod(g)
    assert q * g + r == f
    assert r.is_zero() or r.degree() < g.degree()


@given(small_polys, small_polys, small_polys)
@settings(max_examples=40, deadline=None)
def test_unipoly_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert a + (b + c) == (a + b) + c


def test_poly_gcd_and_resultant():
    x = UniPoly.gen("x")
    f = (x - 1) * (x - 2)
    g = (x - 1) * (x + 5)
    assert poly_gcd(f, g) == x - 1
    # res(x^2-1, x-2) = (1-2)(-1-2) = 3
    assert poly_resultant(x * x - 1, x - 2) == 3
    # shared root means vanishing resultant
    assert poly_resultant(f, g) == 0


def test_lagrange_interpolation_roundtrip():
    pts = [(F(0), F(1)), (F(1), F(2)), (F(2), F(5))]
    p = lagrange_interpolate("x", pts)
    assert p == UniPoly("x", [F(1), F(0), F(1)])


def test_bipoly_mul_truncation():
    P = BiPoly(("x", "y"))
    x = BiPoly.gen(("x", "y"), 0)
    y = BiPoly.gen(("x", "y"), 1)
    f = (x + y).pow_trunc(3, 2)
    # truncating at total degree 2 kills every cubic term
    assert f == BiPoly(("x", "y"), {})
    g = (1 + x).mul(1 + y)
    assert g.evaluate(F(1), F(2)) == 6


def test_bipoly_partial_derivatives():
    x = BiPoly.gen(("x", "y"), 0)
    y = BiPoly.gen(("x", "y"), 1)
    f = x * x * y + 3 * y - 5
    assert f.derivative(0) == 2 * x * y
    assert f.derivative(1) == x * x + 3
    # mixed partials commute
    g = (x + y).pow_trunc(4, 4)
    assert g.derivative(0).derivative(1) == g.derivative(1).derivative(0)


def test_bipoly_filter_degree():
    x = BiPoly.gen(("x", "y"), 0)
    y = BiPoly.gen(("x", "y"), 1)
    f = x * x + x * y * y + y
    assert f.filter_degree(0, 1) == x * y * y + y
    assert f.filter_degree(1, 0) == x * x


# ---------------------------------------------------------------------------
# truncated series


def test_series_sqrt_inverse_roundtrip():
    x = TruncatedSeries.gen("x", 16)
    f = 1 + x
    s = f.sqrt()
    assert (s * s).truncate(16) == f
    inv = f.inverse()
    assert (inv * f).truncate(16) == TruncatedSeries.one("x", 16)


def test_series_pow_central_binomial():
    # (1-4x)^(-1/2) generates the central binomial coefficients
    x = TruncatedSeries.gen("x", 12)
    f = (1 + (-4) * x).pow_frac(F(-1, 2))
    for n in range(12):
        assert f.coeffs[n] == central_binomial(n)


@given(
    st.fractions(min_value=-8, max_value=8, max_denominator=5),
    st.fractions(min_value=-8, max_value=8, max_denominator=5),
)
@settings(max_examples=25, deadline=None)
def test_series_pow_additivity(p, q):
    base = TruncatedSeries("x", [F(1), F(2), F(-1), F(3), F(1, 2), F(0), F(7)])
    lhs = base.pow_frac(p) * base.pow_frac(q)
    rhs = base.pow_frac(p + q)
    assert lhs.truncate(7) == rhs


def test_series_compose():
    # 1/(1-u) composed with u = x + x^2 ; oracle by direct expansion
    outer = geometric_series("u", F(1), 10)
    inner = TruncatedSeries("x", [F(0), F(1), F(1)] + [F(0)] * 7)
    got = outer.compose(inner)
    acc = TruncatedSeries.one("x", 10)
    expect = TruncatedSeries.one("x", 10)
    for _ in range(10):
        acc = (acc * inner).truncate(10)
        expect = expect + acc
    assert got == expect


def test_series_hadamard():
    a = TruncatedSeries("x", [F(1), F(2), F(3)])
    b = TruncatedSeries("x", [F(5), F(7), F(11)])
    assert a.hadamard(b).coeffs == [F(5), F(14), F(33)]


def test_series_offset_derivative():
    # d/dx of x^(1/2)(1 + x) = x^(-1/2)(1/2 + 3/2 x)
    s = TruncatedSeries("x", [F(1), F(1)], F(1, 2))
    d = s.derivative()
    assert d.offset == F(-1, 2)
    assert d.coeffs == [F(1, 2), F(3, 2)]
    assert d.coeff(F(1, 2)) == F(3, 2)


def test_series_offset_addition_alignment():
    a = TruncatedSeries("x", [F(1), F(1)], F(1, 2))  # x^(1/2) + x^(3/2)
    b = TruncatedSeries("x", [F(2)], F(3, 2))  # 2 x^(3/2)
    c = a + b
    assert c.coeff(F(1, 2)) == 1
    assert c.coeff(F(3, 2)) == 3


def test_hyp2f1_series_log_case():
    # 2F1(1,1;2|x) = -log(1-x)/x, coefficients 1/(n+1)
    f = hyp2f1_series(1, 1, 2, "x", 9)
    assert f.coeffs == [F(1, n + 1) for n in range(9)]


# ---------------------------------------------------------------------------
# Legendre polynomials


def legendre_binomial_sum_oracle(n):
    """P_n(y) = 2^-n sum_k C(n,k)^2 (y-1)^(n-k) (y+1)^k."""
    y = UniPoly.gen("y")
    acc = UniPoly("y", [])
    for k in range(n + 1):
        acc = acc + (y - 1) ** (n - k) * (y + 1) ** k * F(math.comb(n, k) ** 2)
    return acc * F(1, 2**n)


def test_legendre_polys_against_binomial_sum():
    ps = legendre_polys(12)
    for n in range(13):
        assert ps[n] == legendre_binomial_sum_oracle(n)
    assert ps[2] == UniPoly("y", [F(-1, 2), F(0), F(3, 2)])


def test_legendre_generating_function():
    # sum P_n(y) z^n == (1 - 2yz + z^2)^(-1/2), y symbolic
    N = 20
    y = UniPoly.gen("y")
    ps = legendre_polys(N)
    lhs = TruncatedSeries("z", [ps[n] for n in range(N)])
    base = TruncatedSeries("z", [UniPoly.const("y", F(1)), y * F(-2), UniPoly.const("y", F(1))] + [UniPoly("y", [])] * (N - 3))
    rhs = base.pow_frac(F(-1, 2))
    assert lhs == rhs


def test_legendre_values_match_polys():
    ps = legendre_polys(8)
    vals = legendre_values(8, F(1, 3))
    for n in range(9):
        assert vals[n] == ps[n].evaluate(F(1, 3))


# ---------------------------------------------------------------------------
# quadratic extensions


def test_quadext_sqrt2():
    r2 = quad_sqrt(F(2))
    assert r2 * r2 == 2
    u = 1 + r2
    assert u * u.conj() == -1
    assert u.inverse() == -(u.conj())
    assert (u**3) == 7 + 5 * r2


def test_quadext_golden_trace():
    # c = zeta5 + 1/zeta5 satisfies c^2 = 1 - c
    c = QuadExt.make(F(1), F(-1))
    assert c * c == 1 - c
    assert c.trace() == -1
    assert c.norm() == -1


def test_quadext_division():
    r17 = quad_sqrt(F(17))
    x = (3 + r17) / (2 - r17)
    assert x * (2 - r17) == 3 + r17


# ---------------------------------------------------------------------------
# rational functions


def test_ratfun_reduction_and_arith():
    x = UniPoly.gen("x")
    f = RatFun(x * x - 1, x - 1)
    assert f == RatFun(x + 1)
    g = RatFun(UniPoly.const("x", F(1)), x)
    assert g.derivative() == RatFun(UniPoly.const("x", F(-1)), x * x)
    assert (f + g).evaluate(F(2)) == F(7, 2)


def test_ratfun_compose_mobius():
    x = UniPoly.gen("x")
    f = RatFun(x, x + 1)  # x/(x+1)
    m = RatFun(UniPoly.const("x", F(1)), x)  # 1/x
    fm = f.compose(m)  # (1/x)/((1/x)+1) = 1/(1+x)
    assert fm == RatFun(UniPoly.const("x", F(1)), x + 1)


def test_ratfun_series_expansion():
    x = UniPoly.gen("x")
    f = RatFun(UniPoly.const("x", F(1)), 1 - x)
    s = ratfun_series(f, 8)
    assert s.coeffs == [F(1)] * 8
    s2 = ratfun_series(f, 4, at=F(2))
    # 1/(1-(2+h)) = -1/(1+h)
    assert s2.coeffs == [F(-1), F(1), F(-1), F(1)]


def test_ratfun_over_quadext():
    r2 = quad_sqrt(F(2))
    t = UniPoly.gen("t")
    num = t * r2 + 1
    den = t - r2
    f = RatFun(num, den)
    v = f.evaluate(QuadExt(F(3), F(0), F(2), F(0)))
    assert v == (3 * r2 + 1) / (3 - r2)
