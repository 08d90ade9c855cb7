import json
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from ranklab.cli import main

SCHEMA = json.loads(resources.files("ranklab").joinpath("schema/report.schema.json").read_text())


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, "--json", *argv)
    report = json.loads(out)
    jsonschema.validate(report, SCHEMA)
    return code, report


@pytest.mark.parametrize(
    "argv,text",
    [
        (["rank", "eminimal"], "RS=1, ds=1"),
        (["rank", "full"], "RS=∞"),
        (["rank", "fin(n=2){00, 11}"], "RS=0, ds=2"),
        (["rank", "omegasum(eminimal)", "--oracle"], "oracle (atom bound 2): RS=2, ds=1"),
        (["spectrum-rd", "union(full, eminimal, eminimal)"], "O[(1,2)] ∪ {∞}"),
        (["spectrum-pt", "fin(n=2){00, 01, 11}"], "{1, 2, 3}"),
        (["spectrum-pt", "full"], "{continuum}"),
        (["check", "tt", "guard(Q0=1; full)", "Q0"], "true"),
        (["check", "generic", "fin(n=2){10, 11}", "Q1"], "false"),
        (["tower", "w+1", "2"], "RS=w+1, ds=2"),
        (["generic-theories", "eminimal"], "generic theories: 0"),
    ],
)
def test_verbs_print_results(capsys, argv, text):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and text in out


def test_restrict_and_closure(capsys):
    code, out, _ = run(capsys, "restrict", "eminimal", "Q0")
    assert code == 0 and "1 member(s)" in out
    code, out, _ = run(capsys, "closure", "eminimal")
    assert code == 0 and "adjoin(eminimal; {0})" in out


def test_separation(capsys):
    code, out, _ = run(capsys, "separate", "fin(n=2){00, 01}", "fin(n=2){11}")
    assert code == 0 and "Q" in out
    code, out, _ = run(capsys, "separate", "eminimal", "fin(n=1){0}")
    assert code == 0 and out.startswith("non-separable")


def test_delta_nabla_query(capsys):
    code, report = run_json(capsys, "delta-nabla", "fin(n=2){10, 11}", "--query", "Q1")
    assert code == 0
    assert report["result"]["query"] == {"sentence": "Q1", "in_delta": False, "in_nabla": True}


def test_least_gen(capsys):
    code, report = run_json(capsys, "least-gen", "fin(n=2){00, 11}")
    assert code == 0 and report["result"]["exists"] and all(r["verified"] for r in report["result"]["points"])
    code, _, _ = run(capsys, "least-gen", "full")
    assert code == 0


@pytest.mark.parametrize(
    "argv",
    [
        ["rank", "omegasum(eminimal)", "--oracle"],
        ["restrict", "fin(n=2){00, 11}", "Q0"],
        ["closure", "omegasum(eminimal)"],
        ["spectrum-rd", "tower(2, 1)"],
        ["spectrum-pt", "adjoin(eminimal; {0})"],
        ["check", "complete", "eminimal", "Q3"],
        ["separate", "eminimal", "fin(n=1){0}"],
        ["generic-theories", "full"],
        ["least-gen", "adjoin(eminimal; {0})"],
        ["tower", "w", "1"],
        ["verify", "oracle-agreement", "--budget", "3"],
    ],
)
def test_json_reports_match_the_schema(capsys, argv):
    code, report = run_json(capsys, *argv)
    assert code == 0 and report["ok"] and report["verb"] == argv[0]
    assert report["command"] == ["ranklab", "--json", *argv]
    assert "timing" not in report


def test_flags_before_or_after_the_verb(capsys):
    _, a = run_json(capsys, "--seed", "5", "verify", "spectra", "--budget", "2")
    code, out, _ = run(capsys, "verify", "spectra", "--json", "--budget", "2", "--seed", "5")
    b = json.loads(out)
    assert code == 0 and a["result"] == b["result"] and a["result"]["seed"] == 5


def test_reports_are_deterministic(capsys):
    first = run(capsys, "--json", "verify", "prop2", "--budget", "4", "--seed", "11")
    second = run(capsys, "--json", "verify", "prop2", "--budget", "4", "--seed", "11")
    assert first == second


def test_timing_is_opt_in(capsys):
    _, report = run_json(capsys, "--timing", "rank", "eminimal")
    assert report["timing"]["seconds"] >= 0


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["frobnicate"],
        ["rank"],
        ["rank", "union("],
        ["restrict", "eminimal", "Q0 &"],
        ["tower", "w+", "1"],
        ["tower", "2", "0"],
        ["--atom-bound", "4", "rank", "full"],
        ["--seed", "-1", "verify", "prop2"],
        ["verify", "nosuch"],
        ["check", "sometimes", "full", "Q0"],
    ],
)
def test_usage_and_syntax_errors_exit_2(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_domain_errors_exit_1(capsys):
    code, _, err = run(capsys, "least-gen", "eminimal")
    assert code == 1 and "error" in err
    code, report = run_json(capsys, "rank", "limsum(w, 0)", "--oracle", "--atom-bound", "1")
    assert code == 1 and not report["ok"] and "error" in report


def test_error_reports_match_the_schema(capsys):
    code, report = run_json(capsys, "rank", "union(")
    assert code == 2 and report["result"] is None and report["error"]


def test_console_script_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "ranklab.cli", "rank", "eminimal"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "RS=1, ds=1"
