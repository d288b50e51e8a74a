import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import weyl_character
from mmsums.characters import (
    SPECIALISED_SUMS, RECTANGLE_SUMS, SPEC_IDS, CharFamily, GPartition, NonGenericPoint, ShapeError, char_eval,
    char_principal_spec, char_reduce_check, specialised_sum_check, rectangle_sum_check, partitions_in_box,
    shape_breakdown, spec_formula, tableau_character, tableau_count_closed, tableaux, weighted_count,
)
from mmsums.sampling import generic_y, with_retries

HALF = Fraction(1, 2)
S0 = Fraction(2, 3)  # t = S0**2 in the specialisation checks

ys_strategy = st.lists(
    st.fractions(min_value=Fraction(1, 7), max_value=7, max_denominator=7).filter(lambda v: v != 1),
    min_size=2, max_size=2, unique=True,
).filter(lambda ys: ys[0] * ys[1] != 1)


def shapes_for(kind, n, width=2, quarter_ok=True):
    out = list(partitions_in_box(width, n))
    if kind in ("so_odd", "so_even", "o_even") and (quarter_ok or n % 2 == 0):
        out += [GPartition.of([Fraction(2 * k + 1, 2)] * n) for k in range(width)]
    return out


class TestPartitions:
    def test_box(self):
        shapes = [lam.int_parts() for lam in partitions_in_box(2, 2)]
        assert sorted(shapes) == [(0, 0), (1, 0), (1, 1), (2, 0), (2, 1), (2, 2)]

    def test_half_rectangle(self):
        lam = GPartition.rectangle(Fraction(3, 2), 2)
        assert lam.is_half and lam.parts == (Fraction(3, 2), Fraction(3, 2))

    def test_bad_shapes(self):
        with pytest.raises(ShapeError):
            GPartition.of([1, 2])
        with pytest.raises(ShapeError):
            GPartition.of([Fraction(3, 2), 1])


class TestBialternants:
    @settings(max_examples=30)
    @given(ys_strategy)
    def test_schur_and_symplectic_against_weyl(self, ys):
        xs = [y * y for y in ys]
        for lam in partitions_in_box(3, 2):
            parts = lam.int_parts()
            assert char_eval(CharFamily.schur(2), lam, ys) == weyl_character("schur", parts, xs)
            assert char_eval(CharFamily.sp(2), lam, ys) == weyl_character("sp", parts, xs)

    @pytest.mark.parametrize("kind,family", [
        ("ssyt", CharFamily.schur), ("sundaram", CharFamily.so_odd), ("symplectic", CharFamily.sp),
    ])
    def test_tableau_sums(self, kind, family):
        rng = random.Random(3)
        for n in (1, 2):
            ys = generic_y(rng, n)
            xs = [y * y for y in ys]
            for lam in partitions_in_box(2, n):
                assert tableau_character(kind, lam, n, xs) == char_eval(family(n), lam, ys)

    def test_even_orthogonal_relation(self):
        # o = so + so(bar) on full-length shapes, o = so otherwise
        ys = [Fraction(3), Fraction(2, 5)]
        for lam in shapes_for("o_even", 2):
            o = char_eval(CharFamily.o_even(2), lam, ys)
            so = char_eval(CharFamily.so_even(2), lam, ys)
            if lam.length == 2:
                assert o == so + char_eval(CharFamily.so_even(2), lam.bar(), ys)
            else:
                assert o == so

    def test_symmetric_under_inversion(self):
        ys = [Fraction(3), Fraction(2, 5)]
        inv = [1 / y for y in ys]
        for kind in ("so_odd", "sp", "o_even"):
            for lam in shapes_for(kind, 2):
                fam = CharFamily(kind, 2)
                assert char_eval(fam, lam, ys) == char_eval(fam, lam, inv)

    def test_degenerate_point(self):
        with pytest.raises(NonGenericPoint):
            char_eval(CharFamily.sp(2), GPartition.of([1]), [Fraction(2), Fraction(2)])


class TestSpecialisations:
    @pytest.mark.parametrize("spec_id", SPEC_IDS)
    def test_product_formula_against_bialternant(self, spec_id):
        for n in (1, 2, 3):
            formula = spec_formula(spec_id, n)
            ys = [S0**e for e in formula.point_exponents()]
            kind = formula.family.kind
            # half shapes at half points need q**(1/4) when n is odd
            quarter_ok = formula.points != "half"
            candidates = shapes_for(kind, n, quarter_ok=quarter_ok) if not formula.dual else list(partitions_in_box(2, n))
            checked = 0
            for lam in candidates:
                try:
                    value = char_principal_spec(spec_id, lam, n, 2 if formula.dual else None)
                except ShapeError:
                    continue
                assert value.evaluate(S0**2) == char_eval(formula.family, lam, ys), (spec_id, n, lam)
                checked += 1
            assert checked

    def test_quarter_powers_refused(self):
        with pytest.raises(ValueError):
            char_principal_spec("so_odd_half", GPartition.of([HALF]), 1)

    @pytest.mark.parametrize("kind,spec_id", [
        ("sundaram", "so_odd_int"), ("symplectic", "sp_int"), ("even_sundaram", "o_even_half"),
    ])
    def test_dimension_counts_tableaux(self, kind, spec_id):
        # each shape's tableau count is the character at x = 1
        for n in (1, 2, 3):
            counts = shape_breakdown(kind, 2, n)
            for lam in partitions_in_box(2, n):
                want = char_principal_spec(spec_id, lam, n).evaluate(1)
                assert counts.get(lam.int_parts(), 0) == want, (kind, n, lam)


class TestTableaux:
    def test_example_rules(self):
        rows = {t.rows for t in tableaux("sundaram", 1, 1)}
        assert rows == {(), ((1,),), ((2,),), ((3,),)}
        assert all(min(t.rows[1]) >= 3 for t in tableaux("symplectic", 2, 2) if len(t.rows) > 1 and t.rows[1])
        assert not any(1 in row for t in tableaux("even_sundaram", 2, 2) for row in t.rows)

    def test_infinity_at_most_once_per_row(self):
        for t in tableaux("sundaram", 3, 2):
            assert all(row.count(t.infinity) <= 1 for row in t.rows)

    @pytest.mark.parametrize("kind,weighting", [
        ("sundaram", "plain"), ("sundaram", "sign_size"), ("sundaram", "sign_minfty"),
        ("symplectic", "plain"), ("symplectic", "sign_size"),
        ("even_sundaram", "plain"), ("even_sundaram", "height_exact_n"),
    ])
    def test_closed_counts(self, kind, weighting):
        for r in range(1, 4):
            for n in range(1, 4):
                assert weighted_count(kind, r, n, weighting) == tableau_count_closed(kind, r, n, weighting)

    def test_no_closed_form(self):
        with pytest.raises(ValueError):
            tableau_count_closed("ssyt", 2, 2)


class TestRectangleSums:
    @pytest.mark.parametrize("which", RECTANGLE_SUMS)
    def test_random_points(self, which):
        rng = random.Random(11)
        for r in range(1, 4):
            for n in (1, 2):
                for _ in range(2):
                    rep = with_retries(lambda y: rectangle_sum_check(which, r, n, y), lambda: generic_y(rng, n))
                    assert rep.equal, rep.to_record()

    def test_negative_epsilon(self):
        rng = random.Random(12)
        for r in range(1, 4):
            for n in (1, 2):
                rep = rectangle_sum_check("so_odd", r, n, generic_y(rng, n), -1)
                assert rep.equal, rep.to_record()

    @pytest.mark.parametrize("which", SPECIALISED_SUMS)
    def test_specialised_forms(self, which):
        for eps in ((1, -1) if which == "so_odd_half" else (1,)):
            for r in range(1, 4):
                for n in range(1, 4):
                    rep = specialised_sum_check(which, r, n, eps)
                    assert rep.equal, rep.to_record()

    def test_bad_which(self):
        assert "unknown" in rectangle_sum_check("gl", 1, 1, [Fraction(2)]).error


class TestReduction:
    @pytest.mark.parametrize("kind,sign", [("so_odd", -1), ("so_odd", 1), ("sp", -1), ("so_even", -1), ("o_even", -1)])
    def test_first_part_drops(self, kind, sign):
        rng = random.Random(5)
        fam = CharFamily(kind, 3, sign)
        for lam in ([2, 1], [2, 2, 1], [1]):
            lam = GPartition.of(lam)
            first = lam.parts[0]
            for r in (first, first + 1):
                rep = char_reduce_check(fam, lam, generic_y(rng, 2), r)
                assert rep.equal, rep.to_record()

    def test_schur(self):
        rng = random.Random(6)
        for lam in ([2, 1], [1, 1, 1]):
            rep = char_reduce_check(CharFamily.schur(3), GPartition.of(lam), generic_y(rng, 2), 0)
            assert rep.equal, rep.to_record()
