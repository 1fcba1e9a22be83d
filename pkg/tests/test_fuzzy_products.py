import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from app.models import fixtures
from app.models.fuzzy import FuzzySubset, Grid, leq, meet
from app.models.fuzzy_products import (
    FuzzyOp,
    cross_check,
    h_intrinsic_product,
    h_product,
    h_sum,
    oracle_product,
)
from app.models.generator import enumerate_hemirings
from app.models.subsets import Subset, product_set, h_closure
from app.utils.errors import DomainError

GRID = Grid(4)
STRUCTURES = [fixtures.ex66(), fixtures.z2_field(), fixtures.z2_null()] + enumerate_hemirings(2)

HALF = Fraction(1, 2)


def fuzzy_pairs(parent):
    values = st.tuples(*[st.sampled_from(GRID.values)] * parent.order)
    return st.tuples(values, values).map(lambda p: (FuzzySubset(parent, p[0]), FuzzySubset(parent, p[1])))


def test_field_products_are_idempotent_on_chain(z2_field):
    fuzzy = FuzzySubset.of(z2_field, [1, HALF])
    assert h_product(fuzzy, fuzzy) == fuzzy
    assert h_intrinsic_product(fuzzy, fuzzy) == fuzzy


def test_h_sum_of_characteristic_functions(z2_field):
    zero = FuzzySubset.characteristic(Subset.parse(z2_field, "0"))
    assert h_sum(zero, zero) == zero


def test_constants_multiply_to_their_minimum(ex66):
    left = FuzzySubset.constant(ex66, Fraction(3, 4))
    right = FuzzySubset.constant(ex66, Fraction(1, 4))
    assert h_intrinsic_product(left, right) == FuzzySubset.constant(ex66, Fraction(1, 4))


def test_claimed_product_differs_on_printed_tables(ex67):
    sets = fixtures.ex67_fuzzy_sets(ex67)
    computed = h_intrinsic_product(sets["lambda"], sets["mu"])
    assert computed.as_dict() == {"0": "3/5", "a": "1/2", "b": "1/2", "c": "3/5"}
    assert computed != meet(sets["lambda"], sets["mu"])


def test_different_structures_are_rejected(ex66, z2_field):
    with pytest.raises(DomainError):
        h_product(FuzzySubset.constant(ex66, 1), FuzzySubset.constant(z2_field, 1))


def assert_characteristic_pairs(parent):
    subsets = [Subset(parent, m) for m in range(1, parent.kernel.full + 1)]
    for a, b in itertools.product(subsets, subsets):
        left, right = FuzzySubset.characteristic(a), FuzzySubset.characteristic(b)
        for op in FuzzyOp:
            cross_check(left, right, op)
        expected = FuzzySubset.characteristic(h_closure(product_set(a, b)))
        assert h_intrinsic_product(left, right) == expected


@pytest.mark.parametrize("parent", STRUCTURES, ids=lambda p: p.name)
def test_characteristic_pairs_match_oracle(parent):
    assert_characteristic_pairs(parent)


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(STRUCTURES).flatmap(fuzzy_pairs), st.sampled_from(list(FuzzyOp)))
def test_level_cut_matches_oracle(pair, op):
    left, right = pair
    assert cross_check(left, right, op) == oracle_product(left, right, op)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(STRUCTURES).flatmap(fuzzy_pairs))
def test_h_product_is_below_intrinsic_product(pair):
    left, right = pair
    assert leq(h_product(left, right), h_intrinsic_product(left, right))


@pytest.mark.slow
def test_oracle_on_order_three(corpus_3):
    for parent in corpus_3:
        assert_characteristic_pairs(parent)
        rng = random.Random(parent.name)
        for _ in range(500):
            left = FuzzySubset(parent, tuple(rng.choice(GRID.values) for _ in range(parent.order)))
            right = FuzzySubset(parent, tuple(rng.choice(GRID.values) for _ in range(parent.order)))
            for op in FuzzyOp:
                cross_check(left, right, op)
