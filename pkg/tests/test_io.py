r"""Tests the JSON codecs, deterministic output and algebra descriptors."""
import json
from pathlib import Path
import pytest
from postlie.bilinear import BilinearMap, dcomm_space
from postlie.construct import kac_moody_window, loop_window, r2, sl
from postlie.construct.window import AlgebraWindow
from postlie.cpa import cpa_solve
from postlie.errors import GradingIncompatible, JacobiViolation, UnknownFamily
from postlie.grading import GradedLieAlgebra
from postlie.io import (
    algebra_from_json,
    algebra_to_json,
    cocycle_from_json,
    cocycle_to_json,
    dumps,
    ideal_from_json,
    ideal_to_json,
    load_algebra,
    map_from_json,
    map_to_json,
    report_to_json,
    run_manifest,
    space_from_json,
    space_to_json,
    window_from_json,
    window_to_json,
    write_json,
)
from postlie.lie import Cocycle2

SL2_BRACKETS = [[0, 1, [[1, "2"]]], [0, 2, [[2, "-2"]]], [1, 2, [[0, "1"]]]]


def test_algebra_json() -> None:
    """sl2 is written on pairs i < j and read back to the same algebra."""
    data = algebra_to_json(sl(2))
    assert data["dim"] == 3
    assert data["labels"] == ["h", "e", "f"]
    assert data["brackets"] == SL2_BRACKETS
    assert data["name"] == "sl2"
    assert "grading" not in data
    assert algebra_from_json(data) == sl(2)


def test_graded_algebra_json() -> None:
    """Z/2 gradings are written as {"Zmod": 2} and come back attached."""
    data = algebra_to_json(load_algebra("sl2_z2"))  # type: ignore [arg-type]
    assert data["grading"] == {"group": {"Zmod": 2}, "degrees": [0, 1, 1]}
    decoded = algebra_from_json(data)
    assert isinstance(decoded, GradedLieAlgebra)
    assert decoded.grading.modulus == 2
    assert decoded.algebra == sl(2)


def test_algebra_json_errors() -> None:
    """Malformed fields, bad tables and bad gradings are rejected."""
    with pytest.raises(ValueError):
        algebra_from_json({"brackets": []})
    with pytest.raises(ValueError):
        algebra_from_json({"dim": True, "brackets": []})
    with pytest.raises(ValueError):
        algebra_from_json({"dim": 2, "brackets": [[0, 2, [[1, "1"]]]]})
    with pytest.raises(ValueError):
        algebra_from_json({"dim": 2, "brackets": [[0, 1, [[1, "1.5.2"]]]]})
    # [x,y] = z, [x,z] = x breaks Jacobi on (0, 1, 2)
    broken = {"dim": 3, "brackets": [[0, 1, [[2, "1"]]], [0, 2, [[0, "1"]]]]}
    with pytest.raises(JacobiViolation) as info:
        algebra_from_json(broken)
    assert info.value.triple == (0, 1, 2)
    graded = {
        "dim": 3,
        "brackets": [[0, 1, [[2, "1"]]]],
        "grading": {"group": "Z", "degrees": [1, 1, 1]},
    }
    with pytest.raises(GradingIncompatible):
        algebra_from_json(graded)
    graded["grading"] = {"group": "Q", "degrees": [1, 1, 2]}
    with pytest.raises(ValueError):
        algebra_from_json(graded)
    graded["grading"] = {"group": {"Zmod": 0}, "degrees": [1, 1, 2]}
    with pytest.raises(ValueError):
        algebra_from_json(graded)


def test_window_json() -> None:
    """Windows list their undefined brackets and keep the loop indexing."""
    window = loop_window(sl(2), 1)
    data = window_to_json(window)
    assert data["kind"] == "loop"
    assert data["undefined"] == [list(p) for p in window.undefined_pairs()]
    assert data["undefined"]
    decoded = window_from_json(data)
    assert decoded.defined_table() == window.defined_table()
    assert decoded.undefined_pairs() == window.undefined_pairs()
    assert decoded.index_of(1, 1) == window.index_of(1, 1)
    data["undefined"] = data["undefined"][1:]
    with pytest.raises(ValueError):
        window_from_json(data)


def test_kac_moody_window_json() -> None:
    """The named d and z vectors survive encoding."""
    window = kac_moody_window(sl(2), 1)
    decoded = window_from_json(json.loads(dumps(window_to_json(window))))
    assert decoded.special == window.special
    assert decoded.defined_table() == window.defined_table()


def test_map_and_space_json() -> None:
    """Maps are [i, j, k, "p/q"] rows; spaces are stored by canonical basis."""
    phi = BilinearMap(2, {(0, 0, 1): 1, (1, 1, 0): "1/2"})
    assert map_to_json(phi) == [[0, 0, 1, "1"], [1, 1, 0, "1/2"]]
    assert map_from_json(2, map_to_json(phi)) == phi
    with pytest.raises(ValueError):
        map_from_json(2, [[0, 0, "1"]])
    with pytest.raises(ValueError):
        map_from_json(2, {"map": []})
    space = dcomm_space(r2())
    data = space_to_json(space)
    assert data["kind"] == "Dcomm"
    assert data["dim"] == 3
    assert space_from_json(data) == space


def test_cocycle_and_ideal_json() -> None:
    """Cochains are written on pairs i < j; ideals by their generator text."""
    xi = Cocycle2(2, {(0, 1): 1})
    assert cocycle_to_json(xi) == {"dim": 2, "values": [[0, 1, "1"]]}
    assert cocycle_from_json(cocycle_to_json(xi)) == xi
    ideal = ideal_from_json({"nvars": 2, "generators": ["c1*c2", "c2^2"]})
    assert ideal_to_json(ideal) == {"nvars": 2, "generators": ["c1*c2", "c2^2"]}
    assert ideal_from_json({"nvars": 0, "generators": []}).is_empty
    with pytest.raises(ValueError):
        ideal_from_json({"nvars": 0, "generators": ["c1"]})


def test_report_is_deterministic() -> None:
    """Two runs serialize to the same text; timings only appear on request."""
    manifest = run_manifest("cpa solve", "r2")
    first = dumps(report_to_json(cpa_solve(r2()), manifest))
    second = dumps(report_to_json(cpa_solve(r2()), manifest))
    assert first == second
    assert first.endswith("\n")
    data = json.loads(first)
    assert list(data) == sorted(data)
    assert "timings" not in data
    assert data["manifest"]["seed"] == 42100
    assert data["verdict"] == "Inconclusive"
    timed = report_to_json(cpa_solve(sl(2)), timings={"solve_seconds": 0.5})
    assert timed["timings"] == {"solve_seconds": 0.5}
    assert timed["solution_dim"] == 0


def test_windowed_report_fields() -> None:
    """Window reports carry the per-degree dimensions with string keys."""
    data = report_to_json(cpa_solve(loop_window(sl(2), 1)))
    assert data["window"] == 1
    assert isinstance(data["survivors"], list)
    assert all(isinstance(k, str) for k in data["dcomm_degree_dims"])


def test_load_algebra(tmp_path: Path) -> None:
    """Files are decoded as algebras or windows; other strings are built-ins."""
    alg_file = tmp_path / "r2.json"
    write_json(algebra_to_json(r2()), alg_file)
    assert load_algebra(str(alg_file)) == r2()
    win_file = tmp_path / "window.json"
    write_json(window_to_json(loop_window(r2(), 2)), win_file)
    assert isinstance(load_algebra(str(win_file)), AlgebraWindow)
    assert load_algebra("heisenberg").dim == 3
    with pytest.raises(UnknownFamily):
        load_algebra("e8")
    broken = tmp_path / "broken.json"
    broken.write_text("{", encoding="utf-8")
    with pytest.raises(ValueError):
        load_algebra(str(broken))
