import pytest

from app.models.generator import (
    BACKTRACKING,
    PLAIN,
    additive_monoids,
    are_isomorphic,
    canonical_form,
    enumerate_canonical_forms,
    enumerate_hemirings,
    scan_all_tables,
)
from app.models.hemiring import CayleyTables, build_hemiring, verify_axioms
from app.utils.errors import CapacityError, DomainError

ORDER_THREE_COUNT = 22


def test_order_one():
    structures = enumerate_hemirings(1)
    assert len(structures) == 1
    assert structures[0].elements == ("0",)


def test_order_two_matches_full_scan():
    assert len(additive_monoids(2)) == 2
    forms = enumerate_canonical_forms(2)
    assert len(forms) == 4
    assert forms == scan_all_tables(2)
    assert forms == enumerate_canonical_forms(2, BACKTRACKING)


def test_generated_structures_are_valid():
    for parent in enumerate_hemirings(2):
        assert verify_axioms(parent.tables).valid
        assert parent.name.startswith("order2_")


def test_order_out_of_range():
    with pytest.raises(CapacityError):
        enumerate_hemirings(0)
    with pytest.raises(CapacityError):
        enumerate_hemirings(5)
    with pytest.raises(CapacityError):
        scan_all_tables(3)


def test_isomorphism_ignores_labels(z2_field, z2_null):
    relabeled = build_hemiring(CayleyTables.create(("0", "u"), z2_field.add, z2_field.mul, "relabeled"))
    assert are_isomorphic(z2_field, relabeled)
    assert not are_isomorphic(z2_field, z2_null)
    assert canonical_form(z2_field) in scan_all_tables(2)


def test_isomorphism_needs_equal_orders(ex66, z2_field):
    with pytest.raises(DomainError):
        are_isomorphic(ex66, z2_field)


@pytest.mark.slow
def test_three_element_example_is_found(ex66):
    assert canonical_form(ex66) in enumerate_canonical_forms(3)


@pytest.mark.slow
def test_order_three_strategies_agree():
    plain = enumerate_canonical_forms(3, PLAIN)
    assert len(plain) == ORDER_THREE_COUNT
    assert plain == enumerate_canonical_forms(3, BACKTRACKING)
    assert len(set(plain)) == len(plain)
    for parent in enumerate_hemirings(3):
        assert verify_axioms(parent.tables).valid
