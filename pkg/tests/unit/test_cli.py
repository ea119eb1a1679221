"""Tests of the fatpoints command line."""
import json

import pytest

from nornir_fatpoints.cli import EXIT_MISMATCH, EXIT_OK, EXIT_USAGE, main
from nornir_fatpoints.exceptions import DegenerateTrialError
from nornir_fatpoints.field_linalg import DEFAULT_PRIME
from nornir_fatpoints.ledger.types import AXIOM_IDS
from nornir_fatpoints.runner import SWEEP_COLUMNS


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    """Keep FATPOINTS_* variables of the calling shell out of the tests."""
    for name in ("PRIME", "SEED_BASE", "SEED_COUNT", "SEEDS", "JOBS", "OUTPUT_FORMAT", "OUT", "DEBUG"):
        monkeypatch.delenv(f"FATPOINTS_{name}", raising=False)


def _lines(capsys):
    return capsys.readouterr().out.strip().splitlines()


def test_version(capsys):
    assert main(["--version"]) == EXIT_OK
    assert capsys.readouterr().out.startswith("fatpoints ")


@pytest.mark.parametrize(
    "argv",
    [
        ["bogus"],
        ["--prime", "4", "ledger", "axioms"],
        ["--seeds", "1,x", "ledger", "axioms"],
        ["--jobs", "0", "ledger", "axioms"],
        ["betti", "0", "-1", "1"],
        ["hilbert", "1", "0", "0", "--k-max", "-1"],
        ["ledger", "replay", "0", "0", "11", "11", "11"],
        ["ledger", "sweep", "11"],
        ["ledger", "sweep", "13", "--k-max", "12"],
        ["scheme", "/nonexistent/scheme.txt"],
    ],
)
def test_usage_errors(argv):
    assert main(argv) == EXIT_USAGE


def test_ledger_axioms(capsys):
    assert main(["ledger", "axioms"]) == EXIT_OK
    lines = _lines(capsys)
    assert lines[0] == "axiom_id,citation"
    assert [line.split(",")[0] for line in lines[1:]] == list(AXIOM_IDS)


def test_ledger_replay_structured(capsys):
    assert main(["--format", "structured", "ledger", "replay", "0", "0", "14", "0", "12"]) == EXIT_OK
    document = json.loads(capsys.readouterr().out)
    assert document["config"]["prime"] == DEFAULT_PRIME
    assert document["certificate"]["terminal"] == "triple-points"


def test_ledger_replay_table(capsys):
    assert main(["ledger", "replay", "0", "0", "14", "0", "12"]) == EXIT_OK
    lines = _lines(capsys)
    assert lines[0].startswith("rule,k_before")
    assert lines[1].startswith("absorb-simples,12")
    assert lines[-1].startswith("axiom,")
    assert lines[-1].endswith("triple-points")


def test_ledger_replay_of_a_non_member():
    assert main(["ledger", "replay", "1", "0", "14", "0", "12"]) == EXIT_MISMATCH


def test_ledger_cover(capsys):
    assert main(["ledger", "cover", "0", "0", "15"]) == EXIT_OK
    lines = _lines(capsys)
    assert [line.split(",")[:2] for line in lines[1:]] == [["injective", "12"], ["surjective", "13"]]


def test_betti(capsys):
    assert main(["--seeds", "1,2,3", "--prime", "32003", "betti", "0", "0", "1"]) == EXIT_OK
    lines = _lines(capsys)
    assert lines[0].split(",")[0] == "seed"
    assert [line.split(",")[0] for line in lines[1:]] == ["1", "2", "3", "majority"]


def test_betti_exception_is_expected(capsys):
    assert main(["--seeds", "1,2,3", "--prime", "32003", "--format", "structured", "betti", "1", "1", "0"]) == EXIT_OK
    report = json.loads(capsys.readouterr().out)["report"]
    assert not report["majority_matches"]
    assert report["exception_expected"]
    assert report["as_expected"]


def test_hilbert(capsys):
    assert main(["--seeds", "1", "hilbert", "0", "1", "0", "--k-max", "3"]) == EXIT_OK
    lines = _lines(capsys)
    assert lines[0] == "seed,k,computed,expected,maximal"
    assert lines[-1] == "1,3,7,7,True"


def test_sweep(capsys):
    argv = ["--seeds", "1,2,3", "--prime", "32003", "sweep", "--a-max", "1", "--b-max", "1"]
    assert main(argv + ["--c-max", "0", "--length-max", "4"]) == EXIT_OK
    lines = _lines(capsys)
    assert lines[0] == ",".join(SWEEP_COLUMNS)
    assert [tuple(line.split(",")[:3]) for line in lines[1:]] == [("1", "0", "0"), ("0", "1", "0"), ("1", "1", "0")]


def test_scheme_file(tmp_path, capsys):
    scheme = tmp_path / "three.txt"
    scheme.write_text("1:0:0\n1:1:0\n1:0:1\n", encoding="utf8")
    assert main(["--prime", "32003", "--format", "structured", "scheme", str(scheme)]) == EXIT_OK
    report = json.loads(capsys.readouterr().out)["report"]
    assert report["generators"] == {"2": 3}


def test_out_file(tmp_path, capsys):
    target = tmp_path / "nested" / "axioms.csv"
    assert main(["--out", str(target), "ledger", "axioms"]) == EXIT_OK
    assert capsys.readouterr().out == ""
    assert target.read_text(encoding="utf8").startswith("axiom_id,citation")


@pytest.mark.parametrize(
    "command",
    [
        ["betti", "1", "1", "0"],
        ["sweep", "--a-max", "1", "--b-max", "1", "--c-max", "0", "--length-max", "4"],
    ],
)
def test_degenerate_exception_is_a_mismatch(monkeypatch, command):
    def fake_trial(*args, **kwargs):
        raise DegenerateTrialError("cap exceeded")

    monkeypatch.setattr("nornir_fatpoints.plugins.tasks.dispatcher.default.run_trial", fake_trial)
    assert main(["--seeds", "1,2,3", "--prime", "32003"] + command) == EXIT_MISMATCH
