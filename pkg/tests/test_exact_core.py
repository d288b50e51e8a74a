import math
from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mmsums.exact import (
    CycloProduct, GammaFactor, HalfInt, LaurentPoly, PoleError, RationalFunction, TranscendentalResidue,
    eval_rf, gamma_halfint, gamma_ratio_product, gamma_ratio_rational, poly_gcd, q_abs_bracket, q_binomial,
    q_bracket, q_shifted_factorial, q_shifted_ratio,
)

T = RationalFunction(LaurentPoly.monomial(1))

small_int = st.integers(min_value=-4, max_value=4)
laurent = st.dictionaries(st.integers(min_value=-3, max_value=5), small_int, max_size=4).map(LaurentPoly)
nonzero_laurent = laurent.filter(lambda p: not p.is_zero())
points = st.fractions(min_value=Fraction(1, 9), max_value=Fraction(8, 9), max_denominator=12)


def rf(num, den=1):
    return RationalFunction(num, den)


class TestHalfInt:
    def test_lattice(self):
        assert HalfInt("3/2") + HalfInt("1/2") == 2
        assert HalfInt(5).is_integer()
        assert not HalfInt("7/2").is_integer()
        assert HalfInt.from_twice(7) == Fraction(7, 2)

    def test_rejects_thirds(self):
        with pytest.raises(ValueError):
            HalfInt("1/3")


class TestLaurent:
    def test_gcd_recovers_common_factor(self):
        common = LaurentPoly({0: 1, 1: -1})
        a = common * LaurentPoly({0: 2, 2: 1})
        b = common * LaurentPoly({0: 1, 1: 3})
        assert poly_gcd(a, b).monic() == common.monic()

    @given(laurent, laurent, points)
    def test_evaluation_is_a_ring_map(self, p, q, t0):
        assert (p * q).evaluate(t0) == p.evaluate(t0) * q.evaluate(t0)
        assert (p + q).evaluate(t0) == p.evaluate(t0) + q.evaluate(t0)


class TestRationalFunction:
    def test_cancels_common_factor(self):
        g = LaurentPoly({0: 1, 3: 2})
        f = rf(LaurentPoly({1: 1, 2: 1}) * g, LaurentPoly({0: 3, 1: -1}) * g)
        assert f == rf(LaurentPoly({1: 1, 2: 1}), LaurentPoly({0: 3, 1: -1}))
        assert f.num == rf(LaurentPoly({1: 1, 2: 1}), LaurentPoly({0: 3, 1: -1})).num

    def test_zero_denominator(self):
        with pytest.raises(ZeroDivisionError):
            rf(1, 0)

    @settings(max_examples=60)
    @given(laurent, nonzero_laurent, laurent, nonzero_laurent)
    def test_field_axioms(self, a, b, c, d):
        x, y = rf(a, b), rf(c, d)
        assert x + y == y + x
        assert x * y == y * x
        assert (x + y) - y == x
        if not y.is_zero():
            assert (x / y) * y == x

    @settings(max_examples=60)
    @given(laurent, nonzero_laurent, nonzero_laurent)
    def test_normal_form_is_canonical(self, a, b, g):
        assert rf(a * g, b * g) == rf(a, b)
        assert hash(rf(a * g, b * g)) == hash(rf(a, b))

    @given(laurent, nonzero_laurent, points)
    def test_evaluate_matches_quotient(self, a, b, t0):
        if b.evaluate(t0) == 0:
            return
        assert eval_rf(rf(a, b), t0) == Fraction(a.evaluate(t0)) / Fraction(b.evaluate(t0))

    def test_negate_variable(self):
        f = (1 + T) / (2 - T**3)
        assert f.negate_variable().evaluate(Fraction(1, 3)) == f.evaluate(Fraction(-1, 3))


class TestQFunctions:
    @pytest.mark.parametrize("n", range(0, 8))
    def test_binomial_at_one(self, n):
        for m in range(-1, n + 2):
            want = math.comb(n, m) if 0 <= m <= n else 0
            assert q_binomial(n, m).evaluate(1) == want

    @given(st.integers(1, 9), st.integers(0, 9), st.sampled_from([1, 2, 4]))
    def test_binomial_pascal(self, n, m, beta):
        lhs = q_binomial(n, m, beta)
        rhs = q_binomial(n - 1, m - 1, beta) + LaurentPoly.monomial(beta * m) * q_binomial(n - 1, m, beta)
        assert lhs == rhs

    @given(st.fractions(min_value=-6, max_value=6).map(lambda x: Fraction(round(2 * x), 2)), points)
    def test_abs_bracket_nonnegative(self, k, t0):
        assert q_abs_bracket(k).evaluate(t0) >= 0

    def test_bracket_values(self):
        assert q_bracket(3).evaluate(Fraction(1, 2)) == 1 + Fraction(1, 4) + Fraction(1, 16)
        assert q_bracket(Fraction(3, 2)).evaluate(1) == Fraction(3, 2)

    @given(st.sampled_from([-1, 1]), st.integers(-6, 6), st.sampled_from([1, 2]), st.integers(0, 6))
    def test_negative_length_inverts(self, sign, m, beta, n):
        forward = q_shifted_ratio(sign, m, beta, n)
        if forward.is_zero():
            return
        back = q_shifted_ratio(sign, m + beta * n, beta, -n)
        assert (forward * back).to_rf() == rf(1)

    @given(st.sampled_from([-1, 1]), st.integers(1, 6), st.integers(0, 6))
    def test_factorial_against_cyclo(self, sign, m, n):
        assert RationalFunction(q_shifted_factorial(sign, m, 2, n)) == q_shifted_ratio(sign, m, 2, n).to_rf()


class TestCyclo:
    @given(st.lists(st.tuples(st.integers(-8, 8).filter(bool), st.sampled_from([-1, 1])), max_size=5), points)
    def test_evaluate_matches_expansion(self, factors, t0):
        prod = CycloProduct(1)
        direct = Fraction(1)
        for e, s in factors:
            prod = prod * CycloProduct.one_minus(e, s)
            direct *= 1 - s * t0**e
        assert prod.evaluate(t0) == direct
        assert prod.to_rf().evaluate(t0) == direct

    def test_value_at_one_is_a_limit(self):
        ratio = CycloProduct.one_minus(6) / CycloProduct.one_minus(2)
        assert ratio.evaluate(1) == 3

    def test_zero_has_no_inverse(self):
        with pytest.raises(ZeroDivisionError):
            CycloProduct.one_minus(0).inverse()


class TestGamma:
    @pytest.mark.parametrize("x", [Fraction(1, 2), 1, Fraction(5, 2), 4, Fraction(11, 2)])
    def test_halfint_against_float(self, x):
        assert math.isclose(float(gamma_halfint(x)), math.gamma(x), rel_tol=1e-12)

    def test_rational_ratio_against_float(self):
        nums = [Fraction(7, 3), Fraction(5, 4)]
        dens = [Fraction(1, 3), Fraction(13, 4)]
        want = math.prod(math.gamma(a) for a in nums) / math.prod(math.gamma(c) for c in dens)
        assert math.isclose(float(gamma_ratio_rational(nums, dens)), want, rel_tol=1e-12)

    def test_rational_ratio_order_free(self):
        nums = [Fraction(9, 5), Fraction(7, 2), Fraction(3, 2)]
        dens = [Fraction(-1, 5), Fraction(1, 2), Fraction(5, 2)]
        values = {gamma_ratio_rational(list(p), dens) for p in permutations(nums)}
        values |= {gamma_ratio_rational(nums, list(p)) for p in permutations(dens)}
        assert len(values) == 1

    def test_unbalanced_is_refused(self):
        with pytest.raises(TranscendentalResidue):
            gamma_ratio_rational([Fraction(1, 3)], [Fraction(1, 2)])

    def test_pole(self):
        # 1/Gamma vanishes at a pole, Gamma itself does not
        assert gamma_ratio_rational([1], [-2]) == 0
        with pytest.raises(PoleError):
            gamma_ratio_rational([-2], [1])

    @given(st.integers(1, 12).map(lambda k: Fraction(k, 2)), st.sampled_from([1, 2]))
    def test_q_gamma_step(self, x, beta):
        if (x * beta).denominator != 1:
            return
        ratio = gamma_ratio_product([GammaFactor(beta, x + 1, 1), GammaFactor(beta, x, -1)])
        assert ratio == q_bracket(x, beta)

    @given(st.permutations([(2, Fraction(7, 2), 1), (2, Fraction(3, 2), -1), (2, 5, 1), (2, 2, -1)]))
    def test_q_gamma_order_free(self, factors):
        value = gamma_ratio_product([GammaFactor(*f) for f in factors])
        assert value == q_bracket(Fraction(5, 2)) * q_bracket(Fraction(3, 2)) * q_bracket(2) * q_bracket(3) * q_bracket(4)
