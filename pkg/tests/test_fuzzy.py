from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from app.models import fixtures
from app.models.fuzzy import (
    FuzzySubset,
    Grid,
    LevelChain,
    is_fuzzy_ideal_of_kind,
    leq,
    level_set,
    meet,
    two_valued_indicator,
)
from app.models.subsets import IdealKind, Subset
from app.utils.errors import DomainError, InputError

GRID = Grid(4)
STRUCTURES = [fixtures.ex66(), fixtures.z2_field(), fixtures.z2_null()]


def fuzzy_subsets(parent):
    return st.tuples(*[st.sampled_from(GRID.values)] * parent.order).map(lambda v: FuzzySubset(parent, v))


def test_grid_parsing():
    grid = Grid(20)
    assert grid.parse("0.45") == Fraction(9, 20)
    assert grid.parse("3/4") == Fraction(3, 4)
    with pytest.raises(InputError):
        grid.parse("3/7")
    with pytest.raises(InputError):
        grid.parse("5/4")
    with pytest.raises(InputError):
        grid.parse("half")


def test_values_are_validated(ex66):
    with pytest.raises(InputError):
        FuzzySubset.of(ex66, [1, 0])
    with pytest.raises(InputError):
        FuzzySubset.of(ex66, [1, 0, 2])
    with pytest.raises(InputError):
        FuzzySubset.from_mapping(ex66, {"0": 1, "a": 0})


def test_constant_is_fuzzy_h_ideal(ex66):
    assert is_fuzzy_ideal_of_kind(FuzzySubset.constant(ex66, Fraction(7, 10)), IdealKind.H)


def test_non_constant_rejected_in_three_element_example(ex66):
    fuzzy = FuzzySubset.of(ex66, [1, Fraction(1, 2), Fraction(1, 2)])
    verdict = is_fuzzy_ideal_of_kind(fuzzy, IdealKind.H)
    assert not verdict.holds
    condition, x, a, b, y = verdict.witness
    assert condition == "h"
    ix, ia, ib, iy = (ex66.index(v) for v in (x, a, b, y))
    assert ex66.plus(ex66.plus(ix, ia), iy) == ex66.plus(ib, iy)
    assert fuzzy[ix] < min(fuzzy[ia], fuzzy[ib])


def test_claimed_lambda_is_not_even_an_ideal(ex67):
    fuzzy = fixtures.ex67_fuzzy_sets(ex67)["lambda"]
    verdict = is_fuzzy_ideal_of_kind(fuzzy, IdealKind.TWO_SIDED)
    assert not verdict.holds
    assert verdict.witness == ("right_mul", "c", "b")


def test_levels_method_reports_level(ex66):
    fuzzy = FuzzySubset.of(ex66, [1, Fraction(1, 2), Fraction(1, 2)])
    verdict = is_fuzzy_ideal_of_kind(fuzzy, IdealKind.H, method="levels")
    assert not verdict.holds
    assert verdict.witness[:2] == ("level", "1")
    with pytest.raises(InputError):
        is_fuzzy_ideal_of_kind(fuzzy, IdealKind.H, method="guess")


def test_meet_and_level_set(ex67):
    sets = fixtures.ex67_fuzzy_sets(ex67)
    both = meet(sets["lambda"], sets["mu"])
    assert both.as_dict() == {"0": "3/5", "a": "2/5", "b": "2/5", "c": "3/5"}
    assert level_set(sets["lambda"], Fraction(3, 5)).format() == "0,c"


def test_two_valued_indicator(ex66):
    subset = Subset.parse(ex66, "0,a")
    indicator = two_valued_indicator(subset, Fraction(3, 4), Fraction(1, 4))
    assert indicator.values == (Fraction(3, 4), Fraction(3, 4), Fraction(1, 4))
    with pytest.raises(DomainError):
        two_valued_indicator(subset, Fraction(1, 4), Fraction(1, 4))


def test_level_chain_validation(z2_field):
    with pytest.raises(DomainError):
        LevelChain(z2_field, ((Fraction(1, 2), 0b11), (Fraction(1), 0b01)))
    with pytest.raises(DomainError):
        LevelChain(z2_field, ((Fraction(1), 0b11), (Fraction(1, 2), 0b01)))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(STRUCTURES).flatmap(fuzzy_subsets))
def test_level_chain_reconstructs(fuzzy):
    assert LevelChain.of(fuzzy).to_fuzzy() == fuzzy


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(STRUCTURES).flatmap(fuzzy_subsets), st.sampled_from(list(IdealKind)))
def test_direct_and_level_checks_agree(fuzzy, kind):
    assert is_fuzzy_ideal_of_kind(fuzzy, kind, "direct").holds == is_fuzzy_ideal_of_kind(fuzzy, kind, "levels").holds


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(STRUCTURES).flatmap(lambda p: st.tuples(fuzzy_subsets(p), fuzzy_subsets(p))))
def test_meet_is_below_both(pair):
    left, right = pair
    both = meet(left, right)
    assert leq(both, left) and leq(both, right)
