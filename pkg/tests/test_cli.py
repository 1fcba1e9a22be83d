import io
import json

import pytest

from app.controllers.cli_controller import EXIT_COUNTEREXAMPLE, EXIT_INPUT, EXIT_OK, run
from app.models.fuzzy import FuzzySubset
from app.models.schemas import FuzzyDocument
from app.utils.logger import LoggerConfig


def invoke(*argv):
    stream = io.StringIO()
    code = run(["--format", "json-lines", *[str(a) for a in argv]], stream=stream)
    lines = [json.loads(line) for line in stream.getvalue().splitlines() if line]
    return code, lines


@pytest.fixture
def fixture_dir(tmp_path):
    code, lines = invoke("fixtures", "--out", tmp_path)
    assert code == EXIT_OK
    assert len(lines) == 3
    return tmp_path


def test_verify(fixture_dir):
    code, lines = invoke("verify", fixture_dir / "ex66.json")
    assert code == EXIT_OK
    assert lines[0]["valid"] is True

    code, lines = invoke("verify", fixture_dir / "ex67.json")
    assert code == EXIT_COUNTEREXAMPLE
    assert lines[0]["valid"] is False
    assert lines[0]["violations"][0]["axiom"] == "left_distributive"


def test_ideals_and_closure(fixture_dir):
    code, lines = invoke("ideals", fixture_dir / "ex66.json", "--kind", "h")
    assert code == EXIT_OK
    assert [line["ideal"] for line in lines] == ["0,a,1"]

    code, lines = invoke("closure", fixture_dir / "ex66.json", "--set", "0")
    assert code == EXIT_OK
    assert lines == [{"set": "0", "h_closure": "0,a,1"}]


def test_generate_ideal(fixture_dir):
    code, lines = invoke("generate-ideal", fixture_dir / "ex66.json", "--set", "a", "--kind", "two-sided")
    assert code == EXIT_OK
    assert lines[0]["ideal"] == "0,a"


def test_check_rejects_quarantined_structure(fixture_dir):
    code, _ = invoke("check", fixture_dir / "ex67.json", "-D", "4", "--statements", "L2.1")
    assert code == EXIT_INPUT

    code, lines = invoke("check", fixture_dir / "ex67.json", "-D", "4", "--statements", "L2.1,P4.1",
                         "--allow-quarantined")
    assert code == EXIT_OK
    assert all(line["quarantined"] for line in lines[:-1])
    assert lines[-1]["summary"] is True
    assert lines[-1]["quarantined"] == 2


def test_check_single_structure(fixture_dir):
    code, lines = invoke("check", fixture_dir / "ex66.json", "-D", "4", "--statements", "T6.4,T5.5")
    assert code == EXIT_OK
    assert [line["status"] for line in lines[:-1]] == ["holds", "vacuous"]
    assert lines[-1]["holds"] == 1 and lines[-1]["vacuous"] == 1


def test_check_unknown_statement(fixture_dir):
    code, _ = invoke("check", fixture_dir / "ex66.json", "--statements", "Z0")
    assert code == EXIT_INPUT


def test_missing_file(tmp_path):
    code, _ = invoke("verify", tmp_path / "absent.json")
    assert code == EXIT_INPUT


def test_bad_arguments():
    assert run(["frobnicate"]) == EXIT_INPUT
    assert run(["check", "--denominator", "0", "--corpus", "."]) == EXIT_INPUT


def test_fuzzy_with_oracle(tmp_path, write_structure, z2_field):
    structure = write_structure(z2_field)
    lhs = tmp_path / "lhs.json"
    lhs.write_text(FuzzyDocument.from_fuzzy(FuzzySubset.of(z2_field, [1, "1/2"])).model_dump_json())
    code, lines = invoke("fuzzy", structure, "--op", "intrinsic", "--lhs", lhs, "--rhs", lhs, "--oracle")
    assert code == EXIT_OK
    assert lines == [{"op": "intrinsic", "result": {"0": "1", "e": "1/2"}}]


def test_fuzzy_ideals(write_structure, z2_field):
    structure = write_structure(z2_field)
    code, lines = invoke("fuzzy-ideals", structure, "-D", "1")
    assert code == EXIT_OK
    assert [line["fuzzy_ideal"] for line in lines[:-1]] == [
        {"0": "0", "e": "0"}, {"0": "1", "e": "0"}, {"0": "1", "e": "1"},
    ]
    assert lines[-1]["fuzzy_ideals"] == 3


def test_generate_corpus_and_check(tmp_path):
    out = tmp_path / "corpus"
    code, lines = invoke("generate", "--order", "2", "--out", out)
    assert code == EXIT_OK
    assert lines[0]["count"] == 4
    code, lines = invoke("check", "--corpus", out, "-D", "2", "--statements", "L2.1,T6.4")
    assert code == EXIT_OK
    assert len(lines) == 9


def test_statements_listing():
    code, lines = invoke("statements")
    assert code == EXIT_OK
    assert lines[0]["id"] == "L2.1"
    assert len(lines) == 41


def test_fuzzy_ideal_classification(tmp_path, write_structure, z2_field):
    structure = write_structure(z2_field)
    delta = tmp_path / "delta.json"
    delta.write_text(FuzzyDocument.from_fuzzy(FuzzySubset.of(z2_field, [1, 0])).model_dump_json())
    code, lines = invoke("fuzzy-ideals", structure, "-D", "2", "--classify", delta)
    assert code == EXIT_OK
    assert lines[0]["h_prime"] is True
    assert lines[0]["scope"]["grid"] == 2

    constant = tmp_path / "constant.json"
    constant.write_text(FuzzyDocument.from_fuzzy(FuzzySubset.constant(z2_field, 1)).model_dump_json())
    code, _ = invoke("fuzzy-ideals", structure, "-D", "2", "--classify", constant)
    assert code == EXIT_INPUT


def test_log_file_receives_records(tmp_path):
    log_file = tmp_path / "workbench.log"
    try:
        code, _ = invoke("--log-level", "INFO", "--log-file", log_file, "statements")
        assert code == EXIT_OK
        records = [json.loads(line) for line in log_file.read_text(encoding="utf-8").splitlines()]
        assert records[0]["message"] == "Запуск команды"
        assert records[-1]["exit_code"] == EXIT_OK
    finally:
        LoggerConfig.setup_logging()
