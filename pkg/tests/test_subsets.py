import pytest

from app.models.subsets import (
    IdealKind,
    Subset,
    additive_closure,
    generated_h_ideal,
    generated_ideal,
    h_closure,
    is_h_hemiregular,
    is_ideal_of_kind,
    product_set,
)
from app.utils.errors import DomainError, InputError


def test_parse_and_format(ex66):
    subset = Subset.parse(ex66, "a, 0")
    assert subset.format() == "0,a"
    assert str(subset) == "{0,a}"
    assert Subset.parse(ex66, "").is_empty
    with pytest.raises(InputError):
        Subset.parse(ex66, "0,q")


def test_h_closure_of_zero_is_everything_in_three_element_example(ex66):
    assert h_closure(Subset.parse(ex66, "0")).is_whole


def test_h_closure_of_zero_in_field(z2_field):
    assert h_closure(Subset.parse(z2_field, "0")).format() == "0"


def test_h_closure_of_whole_and_empty(ex66):
    assert h_closure(Subset.whole(ex66)).is_whole
    with pytest.raises(DomainError):
        h_closure(Subset.empty(ex66))


def test_additive_closure(ex66, z2_field):
    assert additive_closure(Subset.parse(ex66, "1")).format() == "1"
    assert additive_closure(Subset.parse(z2_field, "e")).is_whole
    assert additive_closure(Subset.parse(ex66, "0")).format() == "0"


def test_product_set(ex66, z2_field):
    assert product_set(Subset.parse(ex66, "0,a"), Subset.parse(ex66, "0,a")).format() == "0,a"
    assert product_set(Subset.parse(ex66, "0"), Subset.whole(ex66)).format() == "0"
    assert product_set(Subset.whole(z2_field), Subset.whole(z2_field)).is_whole


def test_ideal_but_not_h_ideal(ex66):
    subset = Subset.parse(ex66, "0,a")
    assert is_ideal_of_kind(subset, IdealKind.TWO_SIDED)
    verdict = is_ideal_of_kind(subset, IdealKind.H)
    assert not verdict.holds
    assert verdict.witness == ("h", "1", "a", "a", "0")


def test_h_witness_replays(ex66):
    condition, x, a, b, y = is_ideal_of_kind(Subset.parse(ex66, "0,a"), IdealKind.H).witness
    ix, ia, ib, iy = (ex66.index(v) for v in (x, a, b, y))
    assert ex66.plus(ex66.plus(ix, ia), iy) == ex66.plus(ib, iy)
    assert ix not in Subset.parse(ex66, "0,a")


def test_whole_is_an_ideal_of_every_kind(ex66):
    for kind in IdealKind:
        assert is_ideal_of_kind(Subset.whole(ex66), kind)


def test_zero_is_h_ideal_of_field(z2_field):
    assert is_ideal_of_kind(Subset.parse(z2_field, "0"), IdealKind.H)


def test_generated_ideals(ex66, z2_field):
    assert generated_h_ideal(Subset.parse(ex66, "0")).is_whole
    assert generated_h_ideal(Subset.empty(z2_field)).format() == "0"
    assert generated_h_ideal(Subset.parse(z2_field, "e")).is_whole
    assert generated_ideal(Subset.parse(ex66, "a"), IdealKind.TWO_SIDED).format() == "0,a"


def test_hemiregularity(ex66, z2_field, z2_null):
    report = is_h_hemiregular(ex66)
    assert report.regular
    assert set(report.witnesses) == {"0", "a", "1"}
    assert is_h_hemiregular(z2_field).regular
    null = is_h_hemiregular(z2_null)
    assert not null.regular
    assert null.failing == ("e",)


def test_hemiregular_witness_replays(ex66):
    report = is_h_hemiregular(ex66)
    for name, (x, y, z) in report.witnesses.items():
        a, ix, iy, iz = (ex66.index(v) for v in (name, x, y, z))
        left = ex66.plus(ex66.plus(a, ex66.times(ex66.times(a, ix), a)), iz)
        right = ex66.plus(ex66.times(ex66.times(a, iy), a), iz)
        assert left == right


def test_subsets_of_different_structures_do_not_mix(ex66, z2_field):
    with pytest.raises(DomainError):
        Subset.whole(ex66) & Subset.whole(z2_field)
