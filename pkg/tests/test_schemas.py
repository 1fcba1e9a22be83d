import json

import pytest

from app.models import fixtures
from app.models.fuzzy import FuzzySubset, Grid
from app.models.schemas import FuzzyDocument, HemiringDocument, QuarantineAnnotation, parse_document
from app.services.corpus_service import ANNOTATION_SUFFIX, MANIFEST, CorpusService
from app.utils.errors import InputError


def test_document_rebuilds_tables(ex66):
    document = HemiringDocument.from_hemiring(ex66)
    assert document.elements == ["0", "a", "1"]
    assert document.to_tables() == ex66.tables


def test_parse_errors():
    with pytest.raises(InputError):
        parse_document(HemiringDocument, "{not json", "broken.json")
    with pytest.raises(InputError) as caught:
        parse_document(HemiringDocument, json.dumps({"elements": ["0"], "add": [["0"]]}), "short.json")
    assert "short.json" in caught.value.detail
    with pytest.raises(InputError):
        parse_document(HemiringDocument, json.dumps({"elements": ["0"], "add": [["0"]], "mul": [["0"]],
                                                     "extra": 1}))


def test_unknown_element_in_table():
    document = HemiringDocument(elements=["0", "e"], add=[["0", "e"], ["e", "x"]], mul=[["0", "0"], ["0", "e"]])
    with pytest.raises(InputError):
        document.to_tables()


def test_fuzzy_document(z2_field, ex66):
    document = FuzzyDocument(hemiring=z2_field.name, values={"0": "1", "e": "0.25"})
    fuzzy = document.to_fuzzy(z2_field, Grid(4))
    assert fuzzy == FuzzySubset.of(z2_field, [1, "1/4"])
    with pytest.raises(InputError):
        document.to_fuzzy(z2_field, Grid(3))
    with pytest.raises(InputError):
        document.to_fuzzy(ex66, Grid(4))


def test_quarantine_annotation():
    annotation = fixtures.ex67_annotation()
    assert annotation.structure == fixtures.EX67
    assert annotation.axiom_report["valid"] is False
    assert annotation.claimed["lambda_odot_mu"] == fixtures.CLAIMED_PRODUCT
    assert annotation.computed["lambda_odot_mu"] == {"0": "3/5", "a": "1/2", "b": "1/2", "c": "3/5"}
    assert annotation.differing_elements == ["a", "b"]
    reread = parse_document(QuarantineAnnotation, annotation.model_dump_json())
    assert reread == annotation


def test_corpus_without_manifest_skips_annotations(tmp_path):
    service = CorpusService()
    service.write_fixtures(tmp_path)
    assert (tmp_path / f"{fixtures.EX67}{ANNOTATION_SUFFIX}").is_file()
    corpus = service.load(tmp_path)
    assert [h.name for h in corpus] == ["ex66", "ex67"]
    assert corpus[1].quarantined


def test_manifest_merges_orders(tmp_path):
    service = CorpusService()
    service.generate(1, tmp_path)
    manifest = service.generate(2, tmp_path)
    assert manifest.counts == {"1": 1, "2": 4}
    assert len(manifest.files) == 5
    assert json.loads((tmp_path / MANIFEST).read_text())["counts"] == {"1": 1, "2": 4}
    assert len(service.load(tmp_path)) == 5


def test_missing_or_empty_corpus(tmp_path):
    service = CorpusService()
    with pytest.raises(InputError):
        service.load(tmp_path / "absent")
    with pytest.raises(InputError):
        service.load(tmp_path)
