import math
from fractions import Fraction

import pytest

from oracles import naive_mm_sum
from mmsums.catalog import DomainError, get_identity, load_catalog
from mmsums.closed_forms import (
    catalog_ids, closed_form_rhs, limit_check, mm_continuous, parameter_grid, scaled_sum, sweep, verify_identity,
)

HALF = Fraction(1, 2)

PLAIN_GRIDS = {
    "S111-m": {"r": [1, 2, 3], "n": [0, 1, 2, 3], "m": [0, 1, 2, 3]},
    "S111-mh": {"r": [1, 2, 3], "n": [HALF, Fraction(3, 2), Fraction(5, 2)], "m": [HALF, Fraction(3, 2), Fraction(5, 2)]},
    "alt-S212": {"r": [1, 2, 3], "n": [0, 1, 2, 3, 4]},
    "poch-A": {"r": [1, 2, 3], "n": [0, 1, 2, 3], "gamma": [1, 2, 3]},
    "sum-alpha2": {"r": [1, 2, 3], "n": [0, 1, 2, 3, 4]},
    "sum-alpha1": {"r": [1, 2, 3], "n": [Fraction(k, 2) for k in range(0, 8)]},
    "sum-alpha1-delta1": {"r": [1, 2, 3, 4], "n": [0, 1, 2, 3]},
}


def test_catalog_is_complete():
    ids = set(catalog_ids())
    assert len(ids) == 30
    assert {"S1h0", "S2h0", "S1h0-q", "alt-S212-qmp"} <= ids
    assert set(catalog_ids("q")) | set(catalog_ids("plain")) == ids


@pytest.mark.parametrize("ident", sorted(PLAIN_GRIDS))
def test_plain_extras(ident):
    cells = parameter_grid(get_identity(ident), PLAIN_GRIDS[ident])
    assert cells
    for rep in sweep([(ident, p, "exact", None) for p in cells]):
        assert rep.equal, rep.to_record()


@pytest.mark.parametrize("params,value", [
    ({"r": 3, "n": 2}, 6912),
    ({"r": 2, "n": 2}, 288),
])
def test_type_d_spot_values(params, value):
    assert closed_form_rhs("S2h0", params) == value


def test_closed_form_matches_full_enumeration():
    # the closed form against a sum that shares no code with the package
    for r in (2, 3):
        for n in (1, 2, 3):
            assert closed_form_rhs("S213", {"r": r, "n": n}) == naive_mm_sum(2, 1, 3, r, n)
            assert closed_form_rhs("S111", {"r": r, "n": n}) == naive_mm_sum(1, 1, 1, r, n)


def test_uniform_alpha_two_matches_rows():
    for r in (1, 2, 3):
        for n in range(r, r + 2):
            for delta, row in ((0, "S210"), (1, "S211"), (2, "S212"), (3, "S213")):
                params = {"r": r, "n": n, "gamma": 1, "delta": delta}
                assert closed_form_rhs("sum-alpha2", params) == closed_form_rhs(row, {"r": r, "n": n})


class TestDomains:
    def test_excluded_pole(self):
        desc = get_identity("S111-mh")
        assert not desc.in_domain({"r": 2, "n": HALF, "m": HALF})
        assert desc.in_domain({"r": 2, "n": HALF, "m": Fraction(3, 2)})
        with pytest.raises(DomainError):
            closed_form_rhs("S111-mh", {"r": 2, "n": HALF, "m": HALF})

    def test_kind_checks(self):
        with pytest.raises(DomainError):
            closed_form_rhs("S2h1", {"r": 2, "n": HALF})
        with pytest.raises(DomainError):
            closed_form_rhs("S2h0-q", {"r": 1, "n": 1})
        with pytest.raises(DomainError):
            closed_form_rhs("S2h0", {"r": 3})

    def test_unknown_id(self):
        with pytest.raises(KeyError):
            get_identity("S999")
        assert verify_identity("S2h0", {"r": 5, "n": 1}).error

    def test_grid_is_lexicographic_and_filtered(self):
        cells = parameter_grid(get_identity("S2h0"), {"r": [2, 1], "n": [1, 0, HALF]})
        assert cells == [
            {"r": 1, "n": 0}, {"r": 1, "n": HALF}, {"r": 1, "n": 1}, {"r": 2, "n": 1},
        ]


class TestQIdentities:
    @pytest.mark.parametrize("ident", catalog_ids("q"))
    def test_smallest_cells_symbolic(self, ident):
        desc = get_identity(ident)
        grid = {"r": [1, 2], "n": [Fraction(k, 2) for k in range(0, 5)], "m": [Fraction(k, 2) for k in range(0, 5)],
                "p": [0, 1]}
        cells = parameter_grid(desc, {k: grid[k] for k in desc.params})
        assert cells
        for params in cells[:12]:
            rep = verify_identity(ident, params)
            assert rep.equal, rep.to_record()

    def test_points_mode(self):
        rep = verify_identity("S210-q", {"r": 3, "n": 2, "m": 1}, "points", [HALF, Fraction(1, 3)])
        assert rep.equal and len(rep.lhs) == 2

    def test_qnorm_is_zero_or_declared(self):
        for ident, desc in load_catalog().items():
            if desc.kind == "q" and desc.qnorm is None:
                assert desc.qnorm_value({}) == 0

    def test_q_equal_one_recovers_plain_closed_form(self):
        for r in (1, 2, 3):
            for n in range(r, r + 2):
                q_rhs = closed_form_rhs("S2h2-q", {"r": r, "n": n})
                assert q_rhs.evaluate(1) == closed_form_rhs("S2h2", {"r": r, "n": n})


class TestContinuous:
    def test_rank_one(self):
        assert float(mm_continuous(2, HALF, 0, 1)) == 1

    def test_type_a_against_gamma(self):
        want = math.gamma(1 + 2 * HALF) * math.gamma(1 + 3 * HALF) / math.gamma(1 + HALF) ** 2
        assert math.isclose(float(mm_continuous(1, HALF, 0, 3)), want)

    def test_limit_converges(self):
        rep = limit_check(2, HALF, 0, 2, [4, 8, 16, 32])
        assert rep.monotone
        assert rep.final_rel_error < 0.05
        assert rep.passed

    def test_limit_for_other_shapes(self):
        for shape in ((2, 1, 0), (1, 1, 0)):
            rep = limit_check(*shape, 2, [4, 8, 16, 32])
            assert rep.monotone, rep.rel_errors

    def test_scaled_sum_rank_one(self):
        # r = 1: the scaled binomial row sums to exactly 1
        assert scaled_sum(2, HALF, 0, 1, 5) == 1

    def test_bad_n_order(self):
        with pytest.raises(ValueError):
            limit_check(2, HALF, 0, 2, [8, 4])
