import math
import random
from fractions import Fraction

import mpmath
import pytest

from mmsums import hypergeo
from mmsums.hypergeo import (
    Q, DegenerateParameters, HyperSeries, NonTerminating, QMonomial, classical_identity_check, dixon_sides,
    hyper_terminating, infinite_ratio_numeric, qhyper_terminating, qpochhammer_inf_trunc, bc_limit_first_check,
    bc_limit_second_check, bc_rhs_terms, bc_sides, bc_transform_check,
)
from mmsums.sampling import generic_classical, random_monomial, with_retries

HALF = Fraction(1, 2)
q = QMonomial.q


class TestMonomials:
    def test_parse(self):
        assert QMonomial.parse("q") == q(1)
        assert QMonomial.parse("-q^3/2") == QMonomial(-1, 3)
        assert QMonomial.parse("t^3") == QMonomial(1, 3)
        assert QMonomial.parse("q^-1") == QMonomial(1, -2)
        assert QMonomial.parse("1") == QMonomial(1, 0)

    def test_arithmetic(self):
        a = QMonomial(-1, 3)
        assert a * a == QMonomial(1, 6)
        assert (a / a) == QMonomial(1, 0)
        assert q(2).sqrt() == q(1)
        assert a.value(HALF) == -Fraction(1, 8)
        with pytest.raises(ValueError):
            a.sqrt()

    def test_sampler_avoids_cutoffs(self):
        rng = random.Random(0)
        for _ in range(200):
            m = random_monomial(rng)
            assert not (m.sign == 1 and m.exponent <= 0 and m.exponent % 2 == 0)


class TestSeries:
    def test_dixon_example(self):
        assert dixon_sides(2, -2, 1) == (Fraction(6, 5), Fraction(6, 5))

    def test_direct_sum(self):
        # 2F1(-2, b; c; 1) by Chu-Vandermonde
        b, c = Fraction(1, 3), Fraction(5, 7)
        value = hyper_terminating(HyperSeries((-2, b), (c,), 1))
        assert value == hypergeo.pochhammer(c - b, 2) / hypergeo.pochhammer(c, 2)

    def test_q_series_limit(self):
        series = HyperSeries((q(2), q(-2), q(-1)), (q(5), q(4)), Q, 1)
        assert qhyper_terminating(series, 1) == Fraction(6, 5)
        symbolic = qhyper_terminating(series)
        for t0 in (HALF, Fraction(1, 3)):
            assert symbolic.evaluate(t0) == qhyper_terminating(series, t0)

    def test_q_chu_vandermonde(self):
        # 2phi1(q^-n, b; c; q, q) = (c/b; q)_n b^n / (c; q)_n
        n, b, c = 3, QMonomial(-1, 3), QMonomial(1, 5)
        value = qhyper_terminating(HyperSeries((q(-n), b), (c,), Q, n))
        want = hypergeo.qpoch(c / b, n) / hypergeo.qpoch(c, n)
        assert value == want.to_rf() * (b**n).cyclo().to_rf()

    def test_non_terminating(self):
        with pytest.raises(NonTerminating):
            HyperSeries((HALF,), (Fraction(1, 3),), 1).terms_count()


class TestClassical:
    @pytest.mark.parametrize("which,names", [("dixon", "ab"), ("f43sum", "ab"), ("whipple", "abcef")])
    def test_grid(self, which, names):
        rng = random.Random(4)
        for size in range(0, 5):
            for _ in range(5):
                rep = classical_identity_check(which, {**generic_classical(rng, names), "N": size})
                assert rep.equal, rep.to_record()

    @pytest.mark.parametrize("t0", [None, Fraction(1, 3), HALF, 1])
    def test_watson(self, t0):
        rng = random.Random(5)
        for size in range(0, 4):
            for _ in range(3):
                rep = with_retries(
                    lambda p: classical_identity_check("watson", {**p, "N": size}, t0),
                    lambda: {k: random_monomial(rng, even=(k == "a")) for k in "abcde"},
                )
                assert rep.equal, rep.to_record()

    def test_unknown(self):
        assert "unknown" in classical_identity_check("gauss", {"N": 1}).error


class TestBCTransformation:
    def test_random_cells(self):
        rng = random.Random(6)
        for r in (1, 2):
            for m in range(r - 1, 4):
                for _ in range(3):
                    rep = with_retries(
                        lambda p: bc_transform_check(*p, m, r),
                        lambda: [random_monomial(rng) for _ in range(6)],
                        attempts=50,
                    )
                    assert rep.equal, rep.to_record()
                    assert rep.lhs != 0

    def test_points_agree_with_symbolic(self):
        params = [QMonomial(1, -1), QMonomial(-1, 4), QMonomial(1, -3), QMonomial(-1, 2), QMonomial(-1, 7),
                  QMonomial(1, -7)]
        lhs, rhs = bc_sides(*params, 2, 2)
        assert lhs == rhs
        assert bc_sides(*params, 2, 2, Fraction(1, 3)) == (lhs.evaluate(Fraction(1, 3)),) * 2

    def test_collapse_when_b_is_aq_over_c(self):
        # the right-hand sum keeps only k = (0, 1, ..., r-1)
        a, c, d, e, f = QMonomial(-1, 7), QMonomial(1, -7), QMonomial(-1, -7), QMonomial(-1, 7), QMonomial(1, 3)
        b = a * Q / c
        terms = [ks for ks, v in bc_rhs_terms(a, b, c, d, e, f, 3, 2) if not v.is_zero()]
        assert terms == [(0, 1)]
        assert bc_transform_check(a, b, c, d, e, f, 3, 2).equal

    def test_fixed_monomial_tuple_is_degenerate(self):
        t = lambda e: QMonomial(1, e)  # noqa: E731
        rep = bc_transform_check(t(4), t(2), t(6), t(-2), t(10), t(3), 2, 2)
        assert "Degenerate" in rep.error


class TestTruncatedProducts:
    def test_euler_function(self):
        value = qpochhammer_inf_trunc(1, 1, HALF, 64, beta=1)
        assert abs(value.value - 0.2887880951) < 1e-10
        assert value.bound < 1e-15
        exact = float(mpmath.qp(mpmath.mpf(1) / 2))
        assert abs(value.value - exact) <= value.bound

    def test_bound_shrinks(self):
        coarse = qpochhammer_inf_trunc(-1, 3, Fraction(2, 3), 10)
        fine = qpochhammer_inf_trunc(-1, 3, Fraction(2, 3), 80)
        exact = float(mpmath.qp(-(mpmath.mpf(2) / 3) ** 3, (mpmath.mpf(2) / 3) ** 2))
        assert fine.bound < coarse.bound
        assert abs(coarse.value - exact) <= coarse.bound
        assert abs(fine.value - exact) <= fine.bound

    def test_zero_numerator_is_degenerate(self):
        with pytest.raises(DegenerateParameters):
            infinite_ratio_numeric([q(0)], [q(1)], HALF)


class TestLimitingForms:
    @pytest.mark.parametrize("t0", [HALF, Fraction(5, 7), Fraction(1, 3)])
    def test_terminating_example(self, t0):
        rep = bc_limit_first_check(q(2), q(-1), q(-1), q(1), 1, t0)
        assert rep.passed, rep.to_record()

    def test_first_form_random(self):
        rng = random.Random(7)
        passed = 0
        for r in (1, 2):
            for depth in (1, 2, 3):
                def draw():
                    return [random_monomial(rng), random_monomial(rng), random_monomial(rng), q(-depth)]

                rep = with_retries(lambda p: bc_limit_first_check(*p, r, Fraction(1, 3)), draw, attempts=20)
                if rep.error is None:
                    assert rep.passed, rep.to_record()
                    passed += 1
        assert passed >= 4

    def test_second_form_random(self):
        rng = random.Random(8)
        passed = 0
        for r in (1, 2):
            for depth in range(r, r + 3):
                def draw():
                    return [random_monomial(rng) for _ in range(4)] + [q(-depth)]

                rep = with_retries(lambda p: bc_limit_second_check(*p, r, Fraction(1, 3)), draw, attempts=20)
                if rep.error is None:
                    assert rep.passed, rep.to_record()
                    passed += 1
        assert passed >= 4

    def test_needs_termination(self):
        rep = bc_limit_first_check(q(2), q(3), q(5), q(7), 1, HALF)
        assert not rep.passed and "NonTerminating" in rep.error

    def test_residual_is_within_bound(self):
        rep = bc_limit_first_check(q(2), q(-1), q(-1), q(1), 1, HALF)
        assert rep.residual <= rep.bound
        assert math.isfinite(rep.lhs) and rep.lhs != 0
