r"""Tests the command line entry point and its exit codes."""
import json
from pathlib import Path
import pytest
from postlie.cli import EXIT_INVALID, EXIT_MISMATCH, EXIT_OK, EXIT_UNDECIDED, main
from postlie.construct import loop_window, sl
from postlie.io import window_to_json, write_json


def _json_out(capsys: pytest.CaptureFixture) -> dict:
    return json.loads(capsys.readouterr().out)


def test_algebra_check(capsys: pytest.CaptureFixture) -> None:
    """sl2 is valid, perfect and centerless."""
    assert main(["algebra", "check", "sl2", "--json", "-"]) == EXIT_OK
    data = _json_out(capsys)
    assert data["perfect"] and data["centerless"]
    assert data["dim"] == 3


def test_invalid_inputs(tmp_path: Path, capsys: pytest.CaptureFixture) -> None:
    """Unknown names, broken files and bad tables exit with code 2."""
    assert main(["algebra", "check", "so5"]) == EXIT_INVALID
    broken = tmp_path / "broken.json"
    broken.write_text("[1, 2", encoding="utf-8")
    assert main(["algebra", "check", str(broken)]) == EXIT_INVALID
    not_lie = tmp_path / "not_lie.json"
    write_json(
        {"dim": 3, "brackets": [[0, 1, [[2, "1"]]], [0, 2, [[0, "1"]]]]}, not_lie
    )
    assert main(["algebra", "check", str(not_lie)]) == EXIT_INVALID
    assert "Jacobi" in capsys.readouterr().err
    assert main(["cpa", "solve"]) == EXIT_INVALID


def test_cpa_solve_exit_codes(capsys: pytest.CaptureFixture) -> None:
    """A definite verdict exits 0, an inconclusive one exits 3."""
    assert main(["cpa", "solve", "sl2"]) == EXIT_OK
    assert "ZeroOnly" in capsys.readouterr().out
    assert main(["cpa", "solve", "r2", "--json", "-"]) == EXIT_UNDECIDED
    data = _json_out(capsys)
    assert data["verdict"] == "Inconclusive"
    assert data["manifest"]["algebra"] == "r2"
    assert "timings" not in data


def test_cpa_dcomm(capsys: pytest.CaptureFixture) -> None:
    """Dcomm(r2) is printed as a three-dimensional space."""
    assert main(["cpa", "dcomm", "r2", "--json", "-"]) == EXIT_OK
    assert _json_out(capsys)["dim"] == 3


def test_cpa_dcomm_window_file(tmp_path: Path, capsys: pytest.CaptureFixture) -> None:
    """A window file is decomposed by degree up to its own bound."""
    path = tmp_path / "window.json"
    write_json(window_to_json(loop_window(sl(2), 2)), path)
    assert main(["cpa", "dcomm", str(path)]) == EXIT_OK
    assert "dcomm dim" in capsys.readouterr().out


def test_cpa_verify(tmp_path: Path, capsys: pytest.CaptureFixture) -> None:
    """(x,x) -> y on r2 verifies; (y,y) -> y is reported and exits 1."""
    good = tmp_path / "good.json"
    write_json([[0, 0, 1, "1"]], good)
    assert main(["cpa", "verify", "r2", "--map", str(good)]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "ok"
    bad = tmp_path / "bad.json"
    write_json({"map": [[1, 1, 1, "1"]]}, bad)
    assert main(["cpa", "verify", "r2", "--map", str(bad)]) == EXIT_MISMATCH
    assert "post-lie" in capsys.readouterr().out


def test_cohomology_h2(tmp_path: Path, capsys: pytest.CaptureFixture) -> None:
    """abelian2 has one cocycle, no coboundaries and H^2 of dimension 1."""
    out = tmp_path / "h2.json"
    assert main(["cohomology", "h2", "abelian2", "--json", str(out)]) == EXIT_OK
    assert "H^2 1" in capsys.readouterr().out
    data = json.loads(out.read_text(encoding="utf-8"))
    assert (data["cocycle_dim"], data["coboundary_dim"], data["h2_dim"]) == (1, 0, 1)
    assert data["representative"]["dim"] == 2


def test_construct(capsys: pytest.CaptureFixture) -> None:
    """Constructions print JSON that records the run parameters."""
    assert main(["construct", "loop", "r2", "--window", "1", "--json", "-"]) == EXIT_OK
    data = _json_out(capsys)
    assert data["kind"] == "loop"
    assert data["bound"] == 1
    assert data["manifest"]["command"] == "construct loop"
    assert main(["construct", "witt", "--window", "2", "--json", "-"]) == EXIT_OK
    assert _json_out(capsys)["dim"] == 5
    assert main(["construct", "loop"]) == EXIT_INVALID


def test_verify_suite(capsys: pytest.CaptureFixture) -> None:
    """The loop correspondence suite passes."""
    assert main(["verify", "prop-p"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith("== prop-p")
    assert "[FAIL]" not in out
