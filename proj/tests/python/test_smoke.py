import json
import pathlib

import jsonschema
import pytest

import hspecht

SCHEMAS = pathlib.Path(__file__).resolve().parents[2] / "schemas"


def test_index_tableau_example():
    t = "[[1,4,6],[2,7]]|[[3,8],[5]]"
    assert hspecht.word("5,3", t) == [2, 1, 7, 4, 6, 5, 3, 8]
    assert hspecht.index_tableau("5,3", t) == "[[0,2,3],[1,4]]|[[1,4],[2]]"


def test_higher_specht():
    assert hspecht.higher_specht("2", "[[1],[2]]", "[[1],[2]]") == "-1/2*x1 + 1/2*x2"
    assert hspecht.classical_specht("2", "[[1],[2]]") == "-x1 + x2"
    assert len(hspecht.tableaux("3", "[2,1]")) == 2
    assert hspecht.diagrams("2,1") == ["[2]|[1]", "[1,1]|[1]"]


def test_decompose_reconstructs():
    result = hspecht.decompose("2", "x1")
    assert len(result["generators"]) == 2
    assert result["coefficients"] == ["1/2*x1 + 1/2*x2", "-1"]


def test_series_and_operators():
    assert hspecht.graded_rank_series("3", 3) == [1, 2, 2, 1]
    assert hspecht.apply_operator("x1^2*d1 + x2^2*d2", "x2 - x1", 2) == "-x1^2 + x2^2"


def test_verify_report_matches_schema():
    report = hspecht.verify("2,1", suite="all", samples=5)
    assert report["ok"]
    schema = json.loads((SCHEMAS / "verify-report.schema.json").read_text())
    jsonschema.validate(report, schema)


def test_tableau_json_matches_schema():
    status, out, _ = hspecht.run_cli(
        ["tableaux", "--blocks", "5,3", "--tableau", "[[1,4,6],[2,7]]|[[3,8],[5]]", "--format", "json"]
    )
    assert status == 0
    schema = json.loads((SCHEMAS / "tableau.schema.json").read_text())
    jsonschema.validate(json.loads(out)["tableau"], schema)


def test_errors_map_to_python_exceptions():
    with pytest.raises(ValueError):
        hspecht.word("2", "[[1],[x]]")
    with pytest.raises(hspecht.BoundExceeded):
        hspecht.verify("4,4")
    status, _, err = hspecht.run_cli(["decompose", "--blocks", "2,q", "--poly", "x1"])
    assert status == 2 and "'q'" in err
