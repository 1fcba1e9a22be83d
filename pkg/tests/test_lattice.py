import pytest

from app.models.lattice import CLOSURE_SYSTEM, IdealLattice, enumerate_h_ideals, enumerate_ideals
from app.models.subsets import IdealKind, Subset
from app.utils.errors import CapacityError, DomainError


def test_three_element_example_has_only_the_whole_h_ideal(ex66):
    assert enumerate_h_ideals(ex66).format() == ["0,a,1"]


def test_three_element_example_two_sided_ideals(ex66):
    assert enumerate_ideals(ex66, IdealKind.TWO_SIDED).format() == ["0", "0,a", "0,a,1"]


def test_small_families(z2_field, z2_null, trivial):
    assert enumerate_h_ideals(z2_field).format() == ["0", "0,e"]
    assert enumerate_h_ideals(z2_null).format() == ["0", "0,e"]
    assert enumerate_h_ideals(trivial).format() == ["0"]


def test_closure_system_matches_brute_force(ex66, z2_field):
    for parent in (ex66, z2_field):
        for kind in IdealKind:
            brute = enumerate_ideals(parent, kind)
            closed = enumerate_ideals(parent, kind, brute_force_cap=1)
            assert closed.strategy == CLOSURE_SYSTEM
            assert closed.masks == brute.masks


def test_capacity(ex66):
    with pytest.raises(CapacityError):
        enumerate_ideals(ex66, IdealKind.H, brute_force_cap=1, closure_system_cap=2)


def test_lattice_operations_on_field(z2_field):
    lattice = IdealLattice(enumerate_h_ideals(z2_field))
    zero, whole = Subset.parse(z2_field, "0"), Subset.whole(z2_field)
    assert lattice.join(zero, whole) == whole
    assert lattice.join(zero, zero) == zero
    assert lattice.meet(zero, whole) == zero
    assert lattice.residual(zero, zero) == whole
    assert lattice.closure_violation() is None
    assert lattice.is_distributive()
    assert lattice.is_brouwerian()


def test_lattice_rejects_outsiders(ex66):
    lattice = IdealLattice(enumerate_h_ideals(ex66))
    with pytest.raises(DomainError):
        lattice.meet(Subset.parse(ex66, "0,a"), Subset.whole(ex66))


def test_intersections_stay_in_family(corpus_up_to_2):
    for parent in corpus_up_to_2:
        family = enumerate_h_ideals(parent)
        masks = set(family.masks)
        for a in family:
            for b in family:
                assert a.mask & b.mask in masks


def test_smallest_containing(ex66):
    family = enumerate_ideals(ex66, IdealKind.TWO_SIDED)
    assert family.smallest_containing(Subset.parse(ex66, "a")).format() == "0,a"
