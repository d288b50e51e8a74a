import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import det as oracle_det
from mmsums.linalg import det, matmul, transpose
from mmsums.pfaffian import (
    DegenerateInput, power_minor_check, crossings, minor_summation_check, okada_pfaffian_check, perfect_matchings,
    pfaffian,
)
from mmsums.sampling import generic_y, small_fraction, with_retries

entry = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def skew(draw, sizes=(2, 4, 6)):
    size = draw(st.sampled_from(sizes))
    m = [[Fraction(0)] * size for _ in range(size)]
    for i in range(size):
        for j in range(i + 1, size):
            v = draw(entry)
            m[i][j], m[j][i] = v, -v
    return m


def test_small_values():
    assert pfaffian([[0, 3], [-3, 0]]) == 3
    m = [[0, 1, 2, 3], [-1, 0, 4, 5], [-2, -4, 0, 6], [-3, -5, -6, 0]]
    assert pfaffian(m) == 1 * 6 - 2 * 5 + 3 * 4
    assert pfaffian(m, "matchings") == 8


def test_matchings_count():
    assert len(list(perfect_matchings(list(range(6))))) == 15
    assert crossings([(0, 2), (1, 3)]) == 1


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        pfaffian([[0, 1], [1, 0]])
    with pytest.raises(ValueError):
        pfaffian([[0, 1, 2], [-1, 0, 3], [-2, -3, 0]])


@settings(max_examples=60)
@given(skew())
def test_elimination_matches_matchings(m):
    assert pfaffian(m) == pfaffian(m, "matchings")


@settings(max_examples=60)
@given(skew())
def test_square_is_determinant(m):
    assert pfaffian(m) ** 2 == det(m) == oracle_det(m)


@settings(max_examples=40)
@given(skew(sizes=(4,)), st.lists(entry, min_size=16, max_size=16))
def test_congruence(m, flat):
    d = [flat[4 * i:4 * i + 4] for i in range(4)]
    assert pfaffian(matmul(matmul(d, m), transpose(d))) == det(d) * pfaffian(m)


def test_zero_pivot_needs_swap():
    m = [[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]]
    assert pfaffian(m) == pfaffian(m, "matchings") == -1


class TestIdentities:
    def test_minor_summation(self):
        rng = random.Random(1)
        for n in (2, 4):
            for r in range(n, 7):
                for _ in range(3):
                    m = [[small_fraction(rng) for _ in range(r)] for _ in range(n)]
                    rep = minor_summation_check(m)
                    assert rep.equal, rep.to_record()

    def test_minor_summation_shape(self):
        assert minor_summation_check([[1, 2, 3]]).error
        assert minor_summation_check([[1], [2]]).error

    def test_okada(self):
        rng = random.Random(2)
        for n in (2, 4):
            for _ in range(3):
                a = [small_fraction(rng) for _ in range(n)]
                b = [small_fraction(rng) for _ in range(n)]
                rep = with_retries(
                    lambda x: okada_pfaffian_check(x, a, b), lambda: [small_fraction(rng) for _ in range(n)]
                )
                assert rep.equal, rep.to_record()

    def test_okada_degenerate(self):
        rep = okada_pfaffian_check([2, 2], [1, 3], [5, 7])
        assert "Degenerate" in rep.error

    @pytest.mark.parametrize("eps", [-1, 1])
    @pytest.mark.parametrize("a", [0, Fraction(1, 2), 1, Fraction(3, 2)])
    def test_power_minors(self, eps, a):
        rng = random.Random(3)
        for n in (2, 4):
            for r in range(n, n + 3):
                rep = power_minor_check(generic_y(rng, n), r, a, eps)
                assert rep.equal, rep.to_record()

    def test_power_minors_domain(self):
        assert power_minor_check([Fraction(2), Fraction(3)], 1, 0, 1).error
        assert power_minor_check([Fraction(2)], 2, 0, 1).error
        with pytest.raises(DegenerateInput):
            from mmsums.pfaffian import power_minor_sides
            power_minor_sides([Fraction(2), Fraction(2)], 2, 0, 1)
