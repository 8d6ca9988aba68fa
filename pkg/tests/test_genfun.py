"""Generating-function layer: exact identity checks.

Oracles: Legendre values from the three-term recurrence (squared or cubed
directly), binomial double sums, and the generic rational-arithmetic
recurrence unroll.  Negative controls perturb a single coefficient and must
break the corresponding check.
"""

import math
from fractions import Fraction as F

import pytest

from legperiods import catalog as C
from legperiods import genfun as G
from legperiods.exactcore import (
    BiPoly,
    TruncatedSeries,
    UniPoly,
    hyp2f1_series,
    legendre_polys,
    legendre_values,
    pochhammer,
)


class TestTwistedSeries:
    def test_order_zero_is_one(self):
        s = G.build_FP2_twisted(None, 0)
        assert s.coeffs == [UniPoly.const("y", F(1))]

    def test_first_coefficient(self):
        # binom(2,1) * P_1(y)^2 = 2 y^2
        s = G.build_FP2_twisted(None, 2)
        assert s.coeffs[1] == UniPoly("y", [0, 0, F(2)])

    def test_at_y_one_gives_central_binomials(self):
        s = G.build_FP2_twisted(1, 6)
        assert s.coeffs == [F(math.comb(2 * n, n)) for n in range(7)]

    def test_even_in_y(self):
        Fb = G.fp2_bipoly(6)
        assert all(i % 2 == 0 for (i, j) in Fb.terms)

    def test_values_match_direct_squares(self):
        y0 = F(1, 3)
        vals = legendre_values(5, y0)
        got = G.twisted_square_values(y0, 5)
        assert got == [math.comb(2 * n, n) * vals[n] ** 2 for n in range(6)]


class TestWanIdentity:
    def test_zero_through_order_twelve(self):
        r = G.check_wan_identity(12)
        assert r["ok"] and r["first_nonzero"] is None

    def test_low_coefficients(self):
        # the 2F1 argument is O(z^2), so the z^1 term comes from the
        # prefactor alone: (1+w)^(-1/2) with w = -2y^2 z + z^2 gives y^2,
        # matching P_1(y)^2
        n = 3
        y = UniPoly.gen("y")
        one = UniPoly.const("y", F(1))
        y2 = y * y
        q = TruncatedSeries("z", [one, -2 * y2, one])
        rhs1 = q.pow_frac(F(-1, 2)).coeffs[1]
        assert rhs1 == y2

    def test_perturbed_prefactor_fails(self):
        n = 8
        y = UniPoly.gen("y")
        one = UniPoly.const("y", F(1))
        y2 = y * y
        polys = legendre_polys(n - 1)
        q = TruncatedSeries("z", [one, -3 * y2, one] + [0] * (n - 3))
        arg = q.pow_frac(F(-2)) * TruncatedSeries("z", [0 * one, 0 * one, 4 * (one - y2) * (one - y2)] + [0] * (n - 3))
        rhs = q.pow_frac(F(-1, 2)) * hyp2f1_series(F(1, 4), F(3, 4), F(1), "z", n).compose(arg)
        lhs = TruncatedSeries("z", [polys[k] * polys[k] for k in range(n)])
        assert not (rhs - lhs).is_zero()


class TestF4Identity:
    def test_quarter_parameters(self):
        assert G.check_F4_identity(F(1, 4), F(3, 4), 1, 1, 6)["ok"]

    def test_half_parameters(self):
        assert G.check_F4_identity(F(1, 2), F(1, 2), 1, 1, 6)["ok"]

    def test_parameter_constraint_enforced(self):
        with pytest.raises(ValueError):
            G.check_F4_identity(F(1, 4), F(3, 4), 1, 2, 4)
        with pytest.raises(ValueError):
            G.check_F4_identity(F(1, 2), F(1, 2), 2, 0, 4)

    def test_x_zero_reduces_to_single_factor(self):
        # with x = 0 only the m = 0 column of the double sum survives and
        # the second argument becomes y itself
        a, b, c2 = F(1, 4), F(3, 4), F(1)
        f = hyp2f1_series(a, b, c2, "y", 7)
        for k in range(7):
            direct = pochhammer(a, k) * pochhammer(b, k) / (pochhammer(c2, k) * math.factorial(k))
            assert f.coeffs[k] == direct


class TestPdeSystem:
    def test_zero_through_order_six(self):
        r = G.check_pde_system(6)
        assert r["ok"] and r["residual_terms"] == [0, 0]

    def test_low_order(self):
        assert G.check_pde_system(1)["ok"]

    def test_perturbed_equation_fails(self):
        Fb = G.fp2_bipoly(8)
        vars_ = Fb.vars
        y = BiPoly.gen(vars_, 0)
        z = BiPoly.gen(vars_, 1)
        y2 = y * y
        Fy = Fb.derivative(0)
        Fz = Fb.derivative(1)
        Fyy = Fy.derivative(0)
        Fyz = Fy.derivative(1)
        bad = (z * (2 * y2 - 4 * z - 2)) * Fyz + (y * (1 - y2)) * Fyy \
            - (2 * (y2 + z)) * Fy + (2 * y * z) * Fz
        assert bad.filter_degree(1, 6).terms


class TestAlgebraicZ:
    def test_constant_term_one(self):
        z = G.build_Z(3, None)
        assert z.coeffs[0] == UniPoly.const("t", F(1))

    def test_symbolic_matches_recurrence(self):
        z = G.build_Z(10, None)
        th = G.check_theorem_th1(10, keep_all=True)
        assert th["ok"]
        for n in range(11):
            un = UniPoly("t", [F(c) for c in th["polys"][n]])
            assert F(math.comb(2 * n, n)) * z.coeffs[n] == un
        assert z.has_integer_coefficients()

    def test_integrality_certificate_order_forty(self):
        # the twisted coefficients have degree 4n <= 160, so agreement at
        # 170 distinct slices is an interpolation certificate that
        # binom(2n,n) * (coefficient n) equals the recurrence polynomial,
        # whose integrality and divisibility the unroll has verified
        th = G.check_theorem_th1(40, keep_all=True)
        assert th["ok"]
        us = th["polys"]
        for t_val in range(2, 172):
            z = G.build_Z(40, F(t_val))
            for n in range(41):
                un = 0
                for c in reversed(us[n]):
                    un = un * t_val + c
                assert math.comb(2 * n, n) * z.coeffs[n] == un

    def test_half_slice_rejected(self):
        with pytest.raises(ValueError):
            G.build_Z(4, F(1, 2))


class TestParametrization:
    def test_full_certificate(self):
        r = G.check_parametrization()
        assert r["ok"] and r["divisible"] and r["vanishes_on_curve"] and r["spot_exact"]
        # octic relation: degree 4 in the squared function, 11 in x
        assert r["relation_w_degree"] == 4
        assert r["relation_x_degree"] == 11

    def test_spot_value_exact(self):
        assert G._chain_spot_check(F(3), F(1, 2))
        assert G._chain_spot_check(F(5), F(2, 3))

    def test_perturbed_core_fails(self):
        core = C.sqrt_core_polys(None)
        one = UniPoly.const("t", F(1))
        bad_A = core["A"] + UniPoly("x", [0 * one] * 5 + [one])
        r = G.check_parametrization({"A": bad_A})
        assert not r["ok"] and not r["divisible"]


class TestTheoremTh1:
    def test_first_polynomials(self):
        th = G.check_theorem_th1(1, keep_all=True)
        assert th["ok"]
        assert th["polys"][0] == [1]
        # 4 * (4t^4 - 24t^3 - 12t^2 + 20t - 3), halved still integral
        assert th["polys"][1] == [-12, 80, -48, -96, 16]
        assert [c // 2 for c in th["polys"][1]] == [-6, 40, -24, -48, 8]

    def test_matches_generic_unroll(self):
        th = G.check_theorem_th1(8, keep_all=True)
        generic = C.squared_coeff_recurrence(None).unroll(8)
        for n in range(9):
            got = UniPoly("t", [F(c) for c in th["polys"][n]])
            want = generic[n] if isinstance(generic[n], UniPoly) else UniPoly.const("t", F(generic[n]))
            assert got == want

    def test_block_of_thirty(self):
        assert G.check_theorem_th1(30)["ok"]


class TestCubeTheorem:
    def test_half_slice(self):
        r = G.check_cube_theorem(F(1, 2), 12)
        assert r["ok"] and r["first_nonzero"] is None

    def test_constant_term(self):
        # both sides start at 1
        assert G.check_cube_theorem(F(1, 3), 0)["ok"]

    def test_at_one(self):
        assert G.check_cube_theorem(1, 8)["ok"]


class TestL5Remark:
    def test_first_values(self):
        rec = C.degree_five_coeff_recurrence(None)
        a = rec.unroll(1)
        assert a[0] == 1
        assert a[1] == UniPoly("u", [F(10), 0, F(-30)])

    def test_full_check(self):
        r = G.check_L5_remark(100, 12)
        assert r["ok"] and r["recursion_ok"] and r["match_ok"]

    def test_matches_generic_unroll(self):
        vals, failures = G._unroll_integer(C.degree_five_coeff_recurrence(None), 6)
        assert not failures
        generic = C.degree_five_coeff_recurrence(None).unroll(6)
        for n in range(7):
            got = UniPoly("u", [F(c) for c in vals[n]])
            want = generic[n] if isinstance(generic[n], UniPoly) else UniPoly.const("u", F(generic[n]))
            assert got == want


class TestRadiusGrowth:
    @pytest.mark.parametrize("y0", [0, F(1, 2), 1])
    def test_inside_closed_unit_interval(self, y0):
        r = G.radius_growth_report(y0)
        assert r["predicted"] == 4.0
        assert r["rel_err"] < 0.01

    def test_outside(self):
        r = G.radius_growth_report(2)
        assert abs(r["predicted"] - (28 + 16 * math.sqrt(3))) < 1e-9
        assert r["rel_err"] < 0.01
