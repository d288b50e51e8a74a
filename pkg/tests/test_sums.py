from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import (
    FROZEN_PLAIN, naive_mm_sum, naive_pochhammer_sum, type_a_q_lhs, type_a_q_rhs, type_d_half_q_lhs,
    type_d_half_q_rhs,
)
from mmsums.closed_forms import closed_form_rhs
from mmsums.sums import discrete_mm_sum, lattice, pochhammer_mm_sum, q_sum_lhs

HALF = Fraction(1, 2)
SHAPES = [(1, 0, 0), (1, HALF, 0), (1, 1, 0), (1, 1, 1), (2, HALF, 0), (2, HALF, 1), (2, HALF, 2), (2, 1, 0),
          (2, 1, 1), (2, 1, 2), (2, 1, 3)]


@pytest.mark.parametrize("key", sorted(FROZEN_PLAIN, key=str))
def test_frozen_values(key):
    alpha, gamma, delta, r, n = key
    assert discrete_mm_sum(alpha, gamma, delta, r, n) == FROZEN_PLAIN[key]
    assert naive_mm_sum(alpha, gamma, delta, r, n) == FROZEN_PLAIN[key]


@pytest.mark.parametrize("shape", SHAPES, ids=str)
@pytest.mark.parametrize("r", [1, 2, 3])
def test_orbit_reduction_matches_full_cube(shape, r):
    alpha, gamma, delta = shape
    for twice_n in range(0, 9 if r < 3 else 7):
        n = Fraction(twice_n, 2)
        assert discrete_mm_sum(alpha, gamma, delta, r, n) == naive_mm_sum(alpha, gamma, delta, r, n)
        assert discrete_mm_sum(alpha, gamma, delta, r, n, reduce=False) == naive_mm_sum(alpha, gamma, delta, r, n)


@pytest.mark.parametrize("r", [1, 2, 3])
def test_alternating_and_second_binomial(r):
    for n in range(0, 4):
        got = discrete_mm_sum(2, 1, 2, r, n, alternating=True)
        assert got == naive_mm_sum(2, 1, 2, r, n, alternating=True)
        for m in range(0, 3):
            assert discrete_mm_sum(1, 1, 1, r, n, boxes=(m,)) == naive_mm_sum(1, 1, 1, r, n, extra_boxes=(m,))


def test_lattice():
    assert lattice(1) == [-1, 0, 1]
    assert lattice(Fraction(3, 2)) == [Fraction(k, 2) for k in (-3, -1, 1, 3)]


def test_rejects_mixed_lattices():
    with pytest.raises(ValueError):
        discrete_mm_sum(1, 1, 1, 2, 2, boxes=(HALF,))
    with pytest.raises(ValueError):
        discrete_mm_sum(2, 1, 2, 2, HALF, alternating=True)


@pytest.mark.parametrize("gamma", [1, 2, 3])
def test_pochhammer_sum(gamma):
    for r in (1, 2, 3):
        for n in range(0, 4):
            assert pochhammer_mm_sum(gamma, r, n) == naive_pochhammer_sum(gamma, r, n)


def test_odd_dimension_small_n_vanishes():
    # every point of [-n, n]^r repeats a coordinate up to sign once r > 2n + 1
    for r in (3, 4):
        for n in range(0, (r - 1) // 2):
            assert discrete_mm_sum(2, HALF, 0, r, n) == 0


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 3), st.integers(0, 6))
def test_sum_is_symmetric_in_alpha_two_sign(r, twice_n):
    # alpha = 2 is even in each k_i, so the sign-flip reduction is exact
    n = Fraction(twice_n, 2)
    assert discrete_mm_sum(2, 1, 1, r, n) == discrete_mm_sum(2, 1, 1, r, n, reduce=False)


class TestQSums:
    @pytest.mark.parametrize("r,n", [(1, 1), (2, Fraction(3, 2)), (2, 2), (3, 2), (2, HALF)])
    def test_type_a_against_float_oracle(self, r, n):
        params = {"r": r, "n": n}
        t0 = HALF
        q = mpmath.mpf(1) / 4
        assert mpmath.almosteq(type_a_q_lhs(r, n, q), type_a_q_rhs(r, n, q), rel_eps=mpmath.mpf(10) ** -12)
        got = q_sum_lhs("S1h0-q", params, [t0])[0]
        assert mpmath.almosteq(mpmath.mpf(got.numerator) / got.denominator, type_a_q_lhs(r, n, q), rel_eps=1e-12)
        rhs = closed_form_rhs("S1h0-q", params).evaluate(t0)
        assert mpmath.almosteq(mpmath.mpf(rhs.numerator) / rhs.denominator, type_a_q_rhs(r, n, q), rel_eps=1e-12)

    @pytest.mark.parametrize("r,n", [(1, HALF), (2, Fraction(3, 2)), (2, Fraction(5, 2)), (3, Fraction(5, 2))])
    def test_half_integer_type_d_against_float_oracle(self, r, n):
        params = {"r": r, "n": n}
        t0 = HALF
        q = mpmath.mpf(1) / 4
        lhs, rhs = type_d_half_q_lhs(r, n, q), type_d_half_q_rhs(r, n, q)
        assert mpmath.almosteq(lhs, rhs, rel_eps=1e-12)
        got = q_sum_lhs("S2h0-q", params, [t0])[0]
        assert mpmath.almosteq(mpmath.mpf(got.numerator) / got.denominator, lhs, rel_eps=1e-12)

    @pytest.mark.parametrize("ident,plain,shape", [
        ("S1h0-q", "S1h0", (1, HALF, 0)),
        ("S2h1-q", None, (2, HALF, 1)),
        ("S2h2-q", "S2h2", (2, HALF, 2)),
    ])
    def test_q_equal_one_recovers_plain_sum(self, ident, plain, shape):
        for r in (1, 2):
            for n in range(r, r + 3):
                params = {"r": r, "n": n}
                value = q_sum_lhs(ident, params).evaluate(1)
                assert value == discrete_mm_sum(*shape, r, n)

    def test_points_agree_with_symbolic(self):
        params = {"r": 2, "n": 2, "m": 1}
        symbolic = q_sum_lhs("S211-q", params)
        pts = [HALF, Fraction(1, 3), Fraction(2, 7)]
        assert q_sum_lhs("S211-q", params, pts) == [symbolic.evaluate(p) for p in pts]

    def test_unreduced_agrees(self):
        params = {"r": 2, "n": Fraction(3, 2), "m": Fraction(5, 2)}
        assert q_sum_lhs("S110-q", params) == q_sum_lhs("S110-q", params, reduce=False)
