import io
import json
import subprocess
import sys

import pytest

from topcoh import cd
from topcoh.cli import dumps, main, run_document
from topcoh.groebner import Ideal


def run(job, command=None):
    return run_document(job, command)


def test_ann_top_example():
    code, doc = run({"ideal": ["x^2", "x*y"], "a": ["x", "y"], "command": "ann-top"})
    assert code == 0
    assert doc["nonvanishing"] is True
    assert doc["annihilator"] == ["x"]
    assert doc["attached"] == [["x"]]
    assert doc["radical_ann"] == ["x"]
    assert doc["supp_bound"] == [["x", "y"]]


def test_att_top_example():
    job = {"ideal": ["x*y"], "ring": {"variables": ["x", "y", "z"]}, "a": ["x", "z"], "command": "att-top"}
    code, doc = run(job)
    assert code == 0 and doc["attached"] == [["y"]] and doc["d"] == 2


def test_hypothesis_not_met():
    job = {"ideal": ["x"], "a": ["x"], "ring": {"variables": ["x", "y"]}, "command": "ann-top"}
    code, doc = run(job)
    assert code == 3
    assert doc["error"]["kind"] == "hypothesis-not-met"


def test_filtration_document():
    code, doc = run({"ideal": ["x^2", "x*y"], "command": "filtration"})
    assert code == 0 and doc["c"] == 1
    lv0, lv1 = doc["levels"]
    assert lv0["ideal"] == lv0["saturation"] == lv0["intersection"] == ["x"]
    assert lv1["ideal"] == ["1"]
    assert (lv0["ass_sub"], lv0["ass_quotient"], lv0["ass_layer"]) == ([["x", "y"]], [["x"]], [["x", "y"]])
    assert (lv1["ass_sub"], lv1["ass_quotient"], lv1["ass_layer"]) == ([["x"], ["x", "y"]], [], [["x"]])


def test_filtration_with_user_table():
    job = {
        "ideal": ["x*y"],
        "ring": {"variables": ["x", "y", "z"]},
        "a": ["x", "z"],
        "cd_table": [1, 2],
        "command": "filtration",
    }
    code, doc = run(job)
    assert code == 0
    assert [lv["ideal"] for lv in doc["levels"]] == [["x*y"], ["y"], ["1"]]
    job["cd_table"] = [2, 2]
    assert run(job)[0] == 1


def test_other_commands():
    assert run({"ideal": ["x^2", "x*y + y^2"], "command": "gb"})[1]["gb"] == ["y^3", "x^2", "x*y + y^2"]
    lex = run({"ideal": ["x - y^2", "y^3"], "command": "gb", "options": {"order": "lex"}})[1]
    assert lex["gb"] == ["x - y^2", "y^3"]
    assert run({"ideal": ["x^2", "x*y"], "command": "dim"})[1]["dim"] == 1
    doc = run({"ideal": ["x^2", "x*y"], "command": "primdec"})[1]
    assert doc["associated_primes"] == [["x"], ["x", "y"]]
    assert doc["minimal_primes"] == [["x"]]
    assert doc["components"] == [
        {"component": ["x"], "prime": ["x"], "dim": 1},
        {"component": ["x^2", "y"], "prime": ["x", "y"], "dim": 0},
    ]
    doc = run({"ideal": ["x*y"], "command": "hochster"})[1]
    assert doc["d"] == 1 and doc["nonvanishing"] and doc["facets"] == [["x"], ["y"]]
    doc = run({"ideal": ["x"], "ring": {"variables": ["x", "y"]}, "command": "hochster", "options": {"degree_box": 1}})[1]
    assert {tuple(r["degree"]): r["rank"] for r in doc["ranks"]}[(0, -1)] == 1


def test_user_decomposition_job():
    job = {
        "ideal": ["x*y - z^2"],
        "decomposition": [{"component": ["x*y - z^2"], "prime": ["x*y - z^2"]}],
        "command": "ann-top",
    }
    code, doc = run(job)
    assert code == 0 and doc["annihilator"] == ["x*y - z^2"]
    del job["decomposition"]
    code, doc = run(job)
    assert code == 1 and doc["error"]["kind"] == "unsupported"


@pytest.mark.parametrize(
    "job, code",
    [
        ({"ideal": ["x^-1"], "command": "dim"}, 2),
        ({"ideal": ["x"], "command": "frobnicate"}, 2),
        ({"command": "dim"}, 2),
        ([1, 2], 2),
        ({"ideal": ["x"], "ring": {"variables": ["x"], "characteristic": 4}, "command": "dim"}, 2),
        ({"ideal": ["1"], "ring": {"variables": ["x"]}, "command": "ann-top"}, 1),
        ({"ideal": ["x*y"], "a": ["x"], "command": "filtration"}, 1),
    ],
)
def test_error_exit_codes(job, code):
    got, doc = run(job)
    assert got == code
    assert set(doc) == {"error"} and doc["error"]["kind"] and doc["error"]["message"]


def test_parse_error_position():
    code, doc = run({"ideal": ["x+*y"], "command": "dim"})
    assert code == 2 and doc["error"]["position"] == 2


def test_theorem_violation_exit_code(monkeypatch):
    monkeypatch.setattr(cd, "intersect_all", lambda ideals, ring: Ideal.zero(ring))
    code, doc = run({"ideal": ["x^2", "x*y"], "command": "filtration"})
    assert code == 4 and doc["error"]["kind"] == "theorem-violation"


def test_main_reads_job_and_writes_output(tmp_path, monkeypatch, capsys):
    job = tmp_path / "job.json"
    job.write_text(json.dumps({"ideal": ["x^2", "x*y"], "a": ["x", "y"]}))
    out = tmp_path / "out.json"
    assert main(["ann-top", "--job", str(job), "--out", str(out)]) == 0
    first = out.read_bytes()
    assert json.loads(first)["annihilator"] == ["x"]
    assert main(["ann-top", "--job", str(job), "--out", str(out)]) == 0
    assert out.read_bytes() == first

    monkeypatch.setattr(sys, "stdin", io.StringIO('{"ideal": ["x"], "a": ["x"], "ring": {"variables": ["x", "y"]}}'))
    assert main(["ann-top", "--job", "-"]) == 3
    assert json.loads(capsys.readouterr().out)["error"]["kind"] == "hypothesis-not-met"

    job.write_text("{not json")
    assert main(["dim", "--job", str(job)]) == 2


def test_verify_structure_and_determinism():
    code, doc = run({"options": {"seed": 1, "instances": 10}}, "verify")
    assert code == 0 and doc["all_passed"]
    assert len(doc["properties"]) == 6 and len(doc["summary"]) == 6
    assert all(line.startswith("PASS") for line in doc["summary"])
    assert dumps(run({"options": {"seed": 1, "instances": 10}}, "verify")[1]) == dumps(doc)
    other = run({"options": {"seed": 2, "instances": 10}}, "verify")[1]
    assert other["seed"] == 2


def test_verify_unknown_option():
    assert run({"options": {"bogus": 1}}, "verify")[0] == 2


def test_verify_reports_counterexample_for_corrupted_intersection(monkeypatch):
    real = cd.intersect_all

    def corrupted(ideals, ring):
        # drop the last ideal whenever there is more than one
        return real(list(ideals)[:-1] if len(ideals) > 1 else ideals, ring)

    monkeypatch.setattr(cd, "intersect_all", corrupted)
    code, doc = run({"options": {"seed": 1, "instances": 10}}, "verify")
    assert code == 4 and not doc["all_passed"]
    failing = [p for p in doc["properties"] if p["failed"]]
    assert failing
    example = failing[0]["counterexamples"][0]
    assert example["ideal"] and example["failure"]
    # the counterexample is a re-runnable job
    rerun = {k: v for k, v in example.items() if k != "failure"}
    assert run(rerun)[0] != 0
    monkeypatch.setattr(cd, "intersect_all", real)
    assert run(rerun)[0] == 0


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "topcoh", "verify", "--seed", "3"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["seed"] == 3
