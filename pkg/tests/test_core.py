import json

import pytest
from hypothesis import given, settings

from conftest import brute_force_ssf, ssf_fillings
from examples_data import SHAPE_1302
from skyfill import (
    Composition,
    Filling,
    StructureError,
    check_non_attacking,
    compositions,
    enumerate_ssf,
    lambda_of,
    validate_filling,
    weight,
)
from skyfill.demazure import key_combinatorial
from skyfill.derivation import first_ascent


def C(*parts):
    return Composition(parts)


@pytest.mark.parametrize(
    "alpha, expected",
    [((1, 3, 0, 2), (3, 2, 1, 0)), ((0, 0), (0, 0)), ((2, 1), (2, 1))],
)
def test_lambda_of(alpha, expected):
    assert lambda_of(Composition(alpha)).parts == expected
    assert lambda_of(Composition(alpha)).is_partition()


def test_composition_rejects_bad_parts():
    with pytest.raises(ValueError):
        Composition(())
    with pytest.raises(ValueError):
        Composition((1, -1))
    with pytest.raises(ValueError):
        Composition.parse("1,a")


def test_cell_membership():
    alpha = C(1, 3, 0, 2)
    assert (2, 3) in alpha
    assert (3, 1) not in alpha
    assert (4, 3) not in alpha
    assert len(list(alpha.cells())) == alpha.size == 6


class TestValidate:
    def test_worked_filling_ok(self):
        F = Filling.from_rows([[1], [2, 2, 2], [], [4, 4]])
        assert validate_filling(F).ok

    def test_partition_constant_filling_ok(self):
        assert validate_filling(Filling.from_rows([[1, 1], [2]])).ok

    def test_increasing_row(self):
        rep = validate_filling(Filling.from_rows([[], [1, 2]]))
        assert rep.violated() == {"i"}
        assert rep.violations[0].cells == ((2, 1), (2, 2))

    def test_flag(self):
        rep = validate_filling(Filling.from_rows([[2]]))
        assert rep.violated() == {"ii"}

    def test_column_repeat(self):
        rep = validate_filling(Filling.from_rows([[1], [1]]))
        assert "iii" in rep.violated()

    def test_triple_condition_missing_neighbour(self):
        # a=1 below b=2, and b has no right neighbour
        rep = validate_filling(Filling.from_rows([[], [2], [1]]))
        assert rep.violated() == {"iv"}
        v = rep.violations[0]
        assert v.cells == ((3, 1), (2, 1), (2, 2))

    def test_triple_condition_small_neighbour(self):
        rep = validate_filling(Filling.from_rows([[], [2, 1], [1]]))
        assert rep.violated() == {"iv"}

    def test_structural_errors_are_distinct(self):
        with pytest.raises(StructureError):
            Filling(C(1, 2), ((1,), (2,)))
        with pytest.raises(StructureError):
            Filling(C(1), ((0,),))
        with pytest.raises(StructureError):
            Filling(C(1, 1), ((1,),))


class TestNonAttacking:
    def test_worked_example(self):
        assert check_non_attacking(Filling.from_rows([[1], [2, 2, 1], [], [4, 3]]))

    def test_single_row(self):
        assert check_non_attacking(Filling.from_rows([[1, 1]]))

    def test_detects_attack(self):
        # F(2,1) = F(1,2) = 1 with 2 > 1; not an SSF, but the predicate is total
        assert not check_non_attacking(Filling.from_rows([[1, 1], [1]]))

    def test_holds_on_every_enumerated_filling(self, small_family):
        for alpha in small_family:
            for F in enumerate_ssf(alpha):
                assert check_non_attacking(F), F


class TestEnumerate:
    def test_shape_1302_count_and_content(self):
        got = enumerate_ssf(C(1, 3, 0, 2))
        assert len(got) == 13
        assert sorted(F.rows for F in got) == sorted(F.rows for F in SHAPE_1302)

    def test_partition(self):
        assert [F.rows for F in enumerate_ssf(C(2, 1))] == [((1, 1), (2,))]

    def test_zero_two(self):
        assert [F.rows for F in enumerate_ssf(C(0, 2))] == [((), (2, 2)), ((), (2, 1)), ((), (1, 1))]

    def test_empty_composition(self):
        (F,) = enumerate_ssf(C(0, 0, 0))
        assert F.rows == ((), (), ())
        assert weight(F) == (0, 0, 0)

    @pytest.mark.parametrize(
        "alpha", [a for a in compositions(4, 2) if a.size <= 6] + [C(0, 3, 3), C(1, 0, 3), C(0, 1, 2, 2)]
    )
    def test_matches_brute_force(self, alpha):
        assert enumerate_ssf(alpha) == sorted(brute_force_ssf(alpha), key=lambda F: F.reading_word, reverse=True)

    def test_canonical_order_and_determinism(self, small_family):
        for alpha in small_family:
            a, b = enumerate_ssf(alpha), enumerate_ssf(alpha)
            assert a == b
            words = [F.reading_word for F in a]
            assert words == sorted(words, reverse=True)
            assert len(set(words)) == len(words)

    def test_partition_has_unique_filling_of_weight_alpha(self, small_family):
        for alpha in small_family:
            if alpha.is_partition():
                (F,) = enumerate_ssf(alpha)
                assert weight(F) == alpha.parts

    def test_rows_above_first_ascent_are_constant(self, small_family):
        for alpha in small_family:
            r = first_ascent(alpha) or alpha.n
            for F in enumerate_ssf(alpha):
                for i in range(1, r + 1):
                    assert set(F.rows[i - 1]) <= {i}
                if r < alpha.n:
                    assert F.rows[r][: alpha.part(r)] == (r + 1,) * alpha.part(r)

    def test_generating_polynomial_shape(self, small_family):
        for alpha in small_family:
            p = key_combinatorial(alpha)
            assert all(c >= 1 for _, c in p)
            assert all(sum(e) == alpha.size for e, _ in p)


class TestWeight:
    def test_worked_example(self):
        assert weight(Filling.from_rows([[1], [2, 2, 2], [], [4, 4]])) == (1, 3, 0, 2)

    def test_empty(self):
        assert weight(Filling.from_rows([[], []])) == (0, 0)

    def test_zero_two(self):
        assert weight(Filling.from_rows([[], [2, 1]])) == (1, 1)


class TestSerialization:
    def test_text_format(self):
        F = Filling.from_rows([[1], [2, 2, 1], [], [4, 3]])
        assert F.to_text() == "1\n2 2 1\n-\n4 3"
        assert Filling.from_text(F.to_text()) == F

    def test_json_format(self):
        F = Filling.from_rows([[1], [2, 2, 1], [], [4, 3]])
        obj = F.to_json()
        assert obj == {"shape": [1, 3, 0, 2], "rows": [[1], [2, 2, 1], [], [4, 3]]}
        assert Filling.from_json(json.dumps(obj)) == F

    def test_json_shape_mismatch(self):
        with pytest.raises(StructureError):
            Filling.from_json({"shape": [1, 2], "rows": [[1], [2]]})

    def test_bad_text(self):
        with pytest.raises(StructureError):
            Filling.from_text("1\nx y")

    @settings(max_examples=200, deadline=None)
    @given(ssf_fillings())
    def test_round_trips(self, F):
        assert Filling.from_text(F.to_text()) == F
        assert Filling.from_json(json.dumps(F.to_json())) == F


@settings(max_examples=200, deadline=None)
@given(ssf_fillings())
def test_weight_degree(F):
    assert sum(weight(F)) == F.shape.size
    assert F.is_ssf
