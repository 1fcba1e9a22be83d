import pytest

from app.models.subsets import Subset
from app.models.theorems import (
    ADDITIVELY_CLOSED,
    CATALOG,
    FAILS,
    HOLDS,
    VACUOUS,
    StructureContext,
    idempotency_conditions,
    resolve_ids,
    run_diagnostics,
    run_statement,
    run_suite,
)
from app.utils.errors import InputError

ACCEPTANCE = ["L2.1", "L2.2", "L2.3", "L2.5", "Transfer", "P2.8", "P2.9", "P3.2", "T3.3", "T4.7", "T5.1", "T5.5",
              "T6.2", "T6.9", "C5.7", "C6.10", "P4.1", "T6.4", "T4.5", "T2.11", "T3.4", "P4.3", "T6.5", "T5.10",
              "T5.13", "C4.9", "T4.8"]


def test_catalog_ids():
    assert len(CATALOG) == 41
    assert resolve_ids(None) == list(CATALOG)
    assert resolve_ids(["all"]) == list(CATALOG)
    assert resolve_ids([" P4.1", "T6.4"]) == ["P4.1", "T6.4"]
    with pytest.raises(InputError):
        resolve_ids(["T9.9"])


def test_unknown_statement(ex66, small_config):
    with pytest.raises(InputError):
        run_statement(ex66, "X1", small_config)


def test_semiprime_characterisation_on_three_element_example(ex66, small_config):
    report = run_statement(ex66, "T6.4", small_config)
    assert report.status == HOLDS
    assert report.to_dict()["structure"] == "ex66"
    assert "quarantined" not in report.to_dict()


def test_idempotency_conditions_agree_with_null_multiplication(z2_null, small_config):
    assert run_statement(z2_null, "P4.1", small_config).status == HOLDS
    conditions = idempotency_conditions(StructureContext(z2_null, small_config))
    assert len({holds for holds, _ in conditions.values()}) == 1


def test_level_statements_are_vacuous_without_non_constant_ideals(ex66, small_config):
    for statement_id in ("T5.5", "T6.9"):
        report = run_statement(ex66, statement_id, small_config)
        assert report.status == VACUOUS
        assert "hypothesis" in report.witness


def test_level_statements_hold_in_field(z2_field, small_config):
    assert run_statement(z2_field, "T5.5", small_config).status == HOLDS
    assert run_statement(z2_field, "T6.9", small_config).status == HOLDS


def test_fuzzy_reports_carry_grid_scope(z2_field, small_config):
    report = run_statement(z2_field, "T3.3", small_config)
    assert report.status == HOLDS
    assert report.scope["grid"] == 4


def test_closure_of_products_ranges_over_additively_closed_sets(z2_field, small_config):
    single = Subset.parse(z2_field, "e")
    assert z2_field.kernel.additive_closure(single.mask) != single.mask
    report = run_statement(z2_field, "L2.2", small_config)
    assert report.status == HOLDS
    assert report.scope["inputs"] == ADDITIVELY_CLOSED


def test_product_properties_draw_independent_triples(z2_field, trivial, small_config):
    report = run_statement(z2_field, "P3.2", small_config)
    assert report.status == HOLDS
    assert report.scope["samples"] == "sampled 500 of 15625"
    assert run_statement(trivial, "P3.2", small_config).scope["samples"] == "all"


def test_catalog_holds_on_small_corpus(corpus_up_to_2, small_config):
    reports, summary = run_suite(corpus_up_to_2, None, small_config)
    failures = [r.to_dict() for r in reports if r.status == FAILS]
    assert failures == []
    assert summary.ok
    assert summary.errors == 0
    assert summary.quarantined == 0
    assert len(reports) == len(CATALOG) * len(corpus_up_to_2)
    assert [(r.statement, r.structure) for r in reports[:len(corpus_up_to_2)]] == [
        ("L2.1", parent.name) for parent in corpus_up_to_2
    ]


def test_fixtures_pass_catalog(ex66, z2_field, z2_null, trivial, small_config):
    _, summary = run_suite([ex66, z2_field, z2_null, trivial], ["all"], small_config)
    assert summary.fails == 0 and summary.errors == 0


def test_quarantined_structure_is_reported_apart(ex67, small_config):
    ids = ["L2.1", "L2.3", "P4.1", "T3.3", "T4.7"]
    reports, summary = run_suite([ex67], ids, small_config)
    assert all(r.quarantined for r in reports)
    assert all(r.witness is not None for r in reports if r.status == FAILS)
    assert summary.quarantined == len(ids)
    assert summary.holds == summary.fails == 0


def test_suite_is_deterministic(corpus_up_to_2, small_config):
    ids = ["L2.5", "T2.11", "P3.2", "T3.4", "P2.9"]
    first, _ = run_suite(corpus_up_to_2, ids, small_config)
    second, _ = run_suite(corpus_up_to_2, ids, small_config)
    assert [r.to_dict() for r in first] == [r.to_dict() for r in second]


def test_empty_corpus(small_config):
    with pytest.raises(InputError):
        run_suite([], None, small_config)


def test_diagnostics(z2_field, small_config):
    diagnostics = run_diagnostics(z2_field, small_config)
    assert [d.name for d in diagnostics] == ["semiprime-not-prime", "prime-not-semiprime"]
    assert all(d.found == [] for d in diagnostics)
    assert diagnostics[0].to_dict()["structure"] == z2_field.name


@pytest.mark.slow
def test_acceptance_on_order_three(corpus_3, small_config):
    reports, summary = run_suite(corpus_3, ACCEPTANCE, small_config)
    assert [r.to_dict() for r in reports if r.status == FAILS] == []
    assert summary.errors == 0
