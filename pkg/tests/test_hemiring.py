import pytest

from app.models import fixtures
from app.models.hemiring import (
    LEFT_DISTRIBUTIVE,
    CayleyTables,
    build_hemiring,
    verify_axioms,
)
from app.utils.errors import AxiomError, InputError


def test_three_element_example_is_commutative_with_identity(ex66):
    report = verify_axioms(ex66.tables)
    assert report.valid
    assert report.commutative_mul
    assert report.identity == "1"
    assert ex66.order == 3
    assert ex66.commutative_with_identity


def test_trivial_hemiring_is_valid(trivial):
    assert verify_axioms(trivial.tables).valid
    assert trivial.order == 1


def test_printed_four_element_tables_fail_distributivity():
    tables = fixtures.ex67_tables()
    report = verify_axioms(tables)
    assert not report.valid
    first = report.violations[0]
    assert first.axiom == LEFT_DISTRIBUTIVE
    assert first.witness == ("b", "a", "a")
    assert first.reproduces(tables)


def test_build_rejects_invalid_tables_with_report():
    with pytest.raises(AxiomError) as caught:
        build_hemiring(fixtures.ex67_tables())
    assert caught.value.exit_code == 1
    assert not caught.value.report.valid


def test_quarantine_keeps_invalid_tables(ex67):
    assert ex67.quarantined
    assert ex67.violations
    assert all(v.reproduces(ex67.tables) for v in ex67.violations)
    assert ex67.describe()["quarantined"] is True


@pytest.mark.parametrize(
    "add, mul",
    [
        ([[0, 1]], [[0, 1], [1, 0]]),
        ([[0, 1], [1]], [[0, 0], [0, 1]]),
        ([[0, 2], [1, 0]], [[0, 0], [0, 1]]),
        ([[0, True], [1, 0]], [[0, 0], [0, 1]]),
    ],
)
def test_malformed_tables_are_input_errors(add, mul):
    with pytest.raises(InputError):
        CayleyTables.create(["0", "e"], add, mul)


def test_duplicate_and_unknown_names():
    with pytest.raises(InputError):
        CayleyTables.from_named(["0", "0"], [["0", "0"], ["0", "0"]], [["0", "0"], ["0", "0"]])
    with pytest.raises(InputError):
        CayleyTables.from_named(["0", "e"], [["0", "x"], ["e", "0"]], [["0", "0"], ["0", "e"]])


def test_exhaustive_report_lists_every_violation():
    tables = fixtures.ex67_tables()
    assert len(verify_axioms(tables, exhaustive=True).violations) > len(verify_axioms(tables).violations)


def test_unknown_element_lookup(ex66):
    assert ex66.index("a") == 1
    with pytest.raises(InputError):
        ex66.index("z")


def test_kernel_closures_on_field(z2_field):
    kernel = z2_field.kernel
    assert kernel.additive_closure(0b10) == 0b11
    assert kernel.h_closure(0b01) == 0b01
    assert kernel.product(0b11, 0b11) == 0b11
