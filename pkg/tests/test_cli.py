from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from chernbound.catalog import projective
from chernbound.classes import ChernVector
from chernbound.cli import render_table, run
from chernbound.families import Xq_vector, family_chern


def call(*argv: str) -> tuple[int, str, str]:
    out, err = io.StringIO(), io.StringIO()
    status = run(list(argv), out, err)
    return status, out.getvalue(), err.getvalue()


def ok(*argv: str):
    status, out, err = call(*argv)
    assert status == 0, err
    return json.loads(out)


def error(status_expected: int, *argv: str) -> dict:
    status, out, err = call(*argv)
    assert status == status_expected
    assert out == ""
    doc = json.loads(err)["error"]
    assert doc["status"] == status_expected
    return doc


def write_json(path, doc) -> str:
    path.write_text(json.dumps(doc))
    return str(path)


# -- documented examples -----------------------------------------------------------


def test_symbolic_f_example():
    doc = ok("f", "--k", "2", "--tuple", "1,1,1", "--symbolic")
    assert doc["class"] == "2*e1^2 - 8*e2"


def test_family_example():
    doc = ok("family", "--n", "4", "--partition", "2,2")
    (row,) = doc["slopes"]
    assert row["slope"] == "0"
    # the intercept is the q-independent c2^2 value
    assert row["intercept"] == str(Xq_vector(3, 4)[(2, 2)]) == str(Xq_vector(9, 4)[(2, 2)])


def test_ideals_example():
    doc = ok("ideals", "--n", "5")
    assert (doc["I_rank"], doc["formula"], doc["match"]) == (2, 2, True)


def test_report_examples():
    doc = ok("report", "--n", "8")
    sections = {s["n"]: s for s in doc["sections"]}
    assert sorted(sections) == list(range(4, 9))
    assert sections[8]["ideals"]["upper_bound"] == 11
    slopes = sections[4]["family"]["slopes"]
    assert sum(row["slope"] != "0" for row in slopes) == 2


# -- determinism and round trips ---------------------------------------------------


@pytest.mark.parametrize(
    "argv",
    [
        ("report", "--n", "5"),
        ("spans", "--n", "6"),
        ("decompose", "--n", "5", "--q", "7"),
        ("positivity", "--k", "4", "--format", "table"),
    ],
)
def test_output_is_byte_identical(argv):
    assert call(*argv)[1] == call(*argv)[1]


def test_separate_processes_agree():
    cmd = [sys.executable, "-m", "chernbound.cli", "report", "--n", "4"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first


def test_pbundle_output_parses_as_chern_vector(tmp_path):
    path = write_json(tmp_path / "b.json", {"base": "pp1", "bundle": {"rank": 3}})
    doc = ok("pbundle", "--input", path)
    vector = ChernVector.from_json({"dimension": doc["dimension"], "entries": doc["chern_numbers"]})
    assert vector.to_json()["entries"] == doc["chern_numbers"]
    assert vector[(1, 1, 1)] == 54


def test_spans_json_round_trip():
    doc = ok("spans", "--n", "4")
    assert json.loads(json.dumps(doc)) == doc
    assert doc["sum_dim"] == doc["upper_bound"] == 4
    assert doc["chern_numbers_in_sum"] == ["c2^2", "c1*c3", "c4"]


def test_rationals_print_as_fractions(tmp_path):
    model = write_json(tmp_path / "m.json", {"w": "1/2", "t": "3", "genus": 1})
    doc = ok("family", "--n", "4", "--model-file", model)
    assert doc["model"]["w"] == "1/2"
    text = json.dumps(doc)
    assert "." not in text.replace('"model"', "")
    # slopes scale with t
    assert doc["slopes"][0]["slope"] == str(3 * family_chern((1, 1, 1, 1), genus=1).slope)


# -- commands ----------------------------------------------------------------------


def test_validate_catalog_and_file(tmp_path):
    assert ok("validate", "--ring", "pp2 x curve(1)")["ok"] is True
    good = write_json(tmp_path / "line.json", projective(1).ring.to_json())
    assert ok("validate", "--ring", good)["ok"] is True
    bad_doc = projective(1).ring.to_json()
    bad_doc["products"] = [{"left": "h", "right": "h", "result": [{"symbol": "h", "coeff": 1}]}]
    bad = write_json(tmp_path / "bad.json", bad_doc)
    status, out, _ = call("validate", "--ring", bad)
    assert status == 3
    assert json.loads(out)["ok"] is False


def test_segre_over_a_bundle_file(tmp_path):
    path = write_json(tmp_path / "b.json", {"base": "pp2", "bundle": {"rank": 1, "classes": [[{"symbol": "h", "coeff": 1}]]}})
    doc = ok("segre", "--input", path)
    assert [s["class"] for s in doc["segre"]] == ["1", "-h", "h^2"]


def test_oracle_check(tmp_path):
    path = write_json(tmp_path / "b.json", {"base": "pp1 x pp1", "bundle": {"rank": 2}})
    doc = ok("oracle-check", "--input", path)
    assert doc["oracle_ring_valid"] and doc["all_agree"]
    assert len(doc["rows"]) == 3


def test_f_closed_form_flag():
    doc = ok("f", "--k", "3", "--tuple", "1,1", "--symbolic", "--closed-form")
    assert doc["class"] == "9"


def test_positivity():
    doc = ok("positivity", "--k", "3")
    assert doc["negative"] == 0
    assert [r["sign"] for r in doc["rows"]] == ["positive", "positive", "positive", "zero"]


def test_decompose_family_and_file(tmp_path):
    doc = ok("decompose", "--n", "4", "--q", "3")
    assert doc["coordinates"]["3,1"] == "1"
    vector = write_json(tmp_path / "v.json", projective(2).chern_vector().to_json())
    assert ok("decompose", "--input", vector)["coordinates"] == {"1,1": "0", "2": "1"}


def test_table_format():
    status, out, _ = call("ideals", "--n", "5", "--format", "table")
    assert status == 0
    assert "I_rank" in out and "{" not in out
    lines = render_table({"a": 1, "rows": [{"x": "1/2", "y": True}]})
    assert lines == ["a  1", "[rows]", "  x    y", "  ---  ---", "  1/2  yes"]


# -- errors --------------------------------------------------------------------------


@pytest.mark.parametrize(
    "argv",
    [
        ("frobnicate",),
        ("ideals",),
        ("family", "--n", "four"),
        ("family", "--n", "4", "--partition", "2,x"),
        ("validate", "--ring", "nowhere(3)"),
        ("pbundle",),
    ],
)
def test_parse_errors_exit_two(argv):
    assert error(2, *argv)["kind"] == "SchemaError"


def test_missing_model_file_is_a_parse_error(tmp_path):
    error(2, "family", "--n", "4", "--model-file", str(tmp_path / "absent.json"))


def test_invariant_errors_exit_three(tmp_path):
    bad_doc = projective(1).ring.to_json()
    bad_doc["products"] = [{"left": "h", "right": "h", "result": [{"symbol": "h", "coeff": 1}]}]
    bad = write_json(tmp_path / "bad.json", bad_doc)
    path = write_json(tmp_path / "b.json", {"base": str(bad), "tangent": [[{"symbol": "h", "coeff": 2}]], "bundle": {"rank": 2}})
    assert error(3, "pbundle", "--input", path)["kind"] == "InvariantError"


@pytest.mark.parametrize(
    "argv",
    [
        ("report", "--n", "3"),
        ("report", "--n", "13"),
        ("family", "--n", "3"),
        ("family", "--n", "4", "--q", "4"),
        ("family", "--n", "4", "--partition", "3,2"),
        ("positivity", "--k", "1"),
        ("ideals", "--n", "0"),
        ("f", "--k", "2", "--tuple", "2,2", "--symbolic", "--closed-form"),
        ("pbundle", "--symbolic", "--k", "2"),
        ("segre", "--symbolic", "--k", "2", "--weight", "-1"),
    ],
)
def test_precondition_errors_exit_four(argv):
    assert error(4, *argv)["kind"] == "PreconditionError"


def test_console_script_entry_point():
    result = subprocess.run(
        [sys.executable, "-m", "chernbound.cli", "ideals", "--n", "4"], capture_output=True, text=True
    )
    assert result.returncode == 0
    assert json.loads(result.stdout)["I_equals_J"] is True
