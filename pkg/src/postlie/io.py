r"""JSON encoding and decoding of algebras, windows, maps, spaces and reports.

Scalars are written as "p/q" or "p" strings. Algebras are objects

    {"dim": 3, "labels": ["h", "e", "f"],
     "brackets": [[0, 1, [[1, "2"]]], [0, 2, [[2, "-2"]]], [1, 2, [[0, "1"]]]],
     "grading": {"group": "Z", "degrees": [0, 1, -1]}}

with brackets listed on pairs i < j; the grading is optional and its group is
"Z" or {"Zmod": n}. Output is deterministic: keys are sorted and nothing
depends on the clock unless timings are requested explicitly.
"""

import json
from pathlib import Path
from typing import Any, Dict, Final, List, Mapping, Optional, Union
from typing_extensions import TypedDict
from .bilinear import BilinearMap, BilinearMapSpace
from .bilinear.core import SPACE_KIND_CUSTOM
from .construct.builtin import builtin
from .construct.window import AlgebraWindow
from .cpa.solve import CpaReport
from .grading.core import INTEGERS, GradedLieAlgebra, Grading, attach_grading
from .lie import Cocycle2, LieAlgebra
from .poly import DEFAULT_BUDGET, PolyIdeal, format_poly, make_ring, parse_poly
from .util import format_scalar, parse_scalar

DEFAULT_SEED: Final = 42100

AnyAlgebra = Union[LieAlgebra, GradedLieAlgebra, AlgebraWindow]

RunManifest = TypedDict(
    "RunManifest",
    {
        "command": str,
        "algebra": str,
        "window": Optional[int],
        "degree_bound": Optional[int],
        "budget": int,
        "seed": int,
        "output": Optional[str],
    },
)


def run_manifest(
    command: str,
    algebra: str,
    window: Optional[int] = None,
    degree_bound: Optional[int] = None,
    budget: int = DEFAULT_BUDGET["max_steps"],
    seed: int = DEFAULT_SEED,
    output: Optional[str] = None,
) -> RunManifest:
    """Collect the parameters that determine a run."""
    return {
        "command": command,
        "algebra": algebra,
        "window": window,
        "degree_bound": degree_bound,
        "budget": budget,
        "seed": seed,
        "output": output,
    }


def _require(data: Mapping[str, Any], key: str, kind: type) -> Any:
    if key not in data:
        raise ValueError(f"Missing field {key!r}.")
    value = data[key]
    if not isinstance(value, kind) or isinstance(value, bool):
        raise ValueError(f"Field {key!r} should be of type {kind.__name__}.")
    return value


def _int_keys(table: Mapping[int, int]) -> Dict[str, int]:
    return {str(k): v for k, v in table.items()}


def _vector_to_json(vec: Mapping[int, Any]) -> List[List[Any]]:
    return [[k, format_scalar(v)] for k, v in sorted(vec.items())]


def _vector_from_json(entries: Any) -> Dict[int, Any]:
    if not isinstance(entries, list):
        raise ValueError("A vector is a list of [index, scalar] pairs.")
    out = {}
    for entry in entries:
        if not (isinstance(entry, list) and len(entry) == 2):
            raise ValueError(f"Malformed vector entry {entry!r}.")
        out[int(entry[0])] = parse_scalar(str(entry[1]))
    return out


def grading_to_json(grading: Grading) -> Dict[str, Any]:
    """Encode a grading."""
    group: Any = "Z" if grading.modulus == INTEGERS else {"Zmod": grading.modulus}
    return {"group": group, "degrees": grading.degrees}


def grading_from_json(data: Mapping[str, Any]) -> Grading:
    """Decode a grading."""
    group = data.get("group")
    degrees = _require(data, "degrees", list)
    if group == "Z":
        return Grading(degrees, modulus=INTEGERS)
    if isinstance(group, dict) and isinstance(group.get("Zmod"), int):
        modulus = group["Zmod"]
        if modulus < 1:
            raise ValueError(f"Zmod needs a positive modulus, got {modulus}.")
        return Grading(degrees, modulus=modulus)
    raise ValueError(f"Unknown grading group {group!r}.")


def algebra_to_json(alg: Union[LieAlgebra, GradedLieAlgebra]) -> Dict[str, Any]:
    """Encode a Lie algebra, with its grading when it has one."""
    plain = alg.algebra if isinstance(alg, GradedLieAlgebra) else alg
    out: Dict[str, Any] = {
        "dim": plain.dim,
        "labels": plain.labels,
        "brackets": [
            [i, j, _vector_to_json(vec)]
            for (i, j), vec in sorted(plain.upper_table().items())
        ],
    }
    if plain.name is not None:
        out["name"] = plain.name
    if isinstance(alg, GradedLieAlgebra):
        out["grading"] = grading_to_json(alg.grading)
    return out


def algebra_from_json(data: Mapping[str, Any]) -> Union[LieAlgebra, GradedLieAlgebra]:
    r"""Decode and validate a Lie algebra.

    Raises ValueError on malformed input, AntisymmetryViolation or
    JacobiViolation on a bad bracket table and GradingIncompatible on a
    grading that does not fit it.
    """
    if not isinstance(data, dict):
        raise ValueError("An algebra is a JSON object.")
    dim = _require(data, "dim", int)
    labels = data.get("labels")
    table = {}
    for entry in _require(data, "brackets", list):
        if not (isinstance(entry, list) and len(entry) == 3):
            raise ValueError(f"Malformed bracket entry {entry!r}.")
        i, j = int(entry[0]), int(entry[1])
        if not (0 <= i < dim and 0 <= j < dim):
            raise ValueError(f"Bracket indices ({i},{j}) outside dimension {dim}.")
        vec = _vector_from_json(entry[2])
        if any(not 0 <= k < dim for k in vec):
            raise ValueError(
                f"Bracket ({i},{j}) has components outside dimension {dim}."
            )
        table[(i, j)] = vec
    alg = LieAlgebra(dim, labels, table, validate=True, name=data.get("name"))
    if "grading" in data:
        return attach_grading(alg, grading_from_json(data["grading"]))
    return alg


def window_to_json(window: AlgebraWindow) -> Dict[str, Any]:
    """Encode a window, listing the undefined brackets explicitly."""
    out: Dict[str, Any] = {
        "kind": window.kind,
        "bound": window.bound,
        "low": window.low,
        "high": window.high,
        "dim": window.dim,
        "labels": window.labels,
        "degrees": window.degrees,
        "brackets": [
            [i, j, _vector_to_json(vec)]
            for (i, j), vec in window.defined_table().items()
        ],
        "undefined": [[i, j] for i, j in window.undefined_pairs()],
        "special": dict(sorted(window.special.items())),
    }
    if window.name is not None:
        out["name"] = window.name
    if window.base is not None:
        out["base"] = algebra_to_json(window.base)
        out["base_indices"] = [window.base_index(i) for i in range(window.dim)]
    return out


def window_from_json(data: Mapping[str, Any]) -> AlgebraWindow:
    """Decode a window; the undefined markers must match the degree bounds."""
    labels = _require(data, "labels", list)
    degrees = _require(data, "degrees", list)
    table = {}
    for entry in _require(data, "brackets", list):
        table[(int(entry[0]), int(entry[1]))] = _vector_from_json(entry[2])
    base = None
    if "base" in data:
        decoded = algebra_from_json(data["base"])
        base = decoded if isinstance(decoded, GradedLieAlgebra) else None
        if base is None:
            base = attach_grading(decoded, Grading.trivial(decoded.dim))  # type: ignore
    window = AlgebraWindow(
        _require(data, "kind", str),
        _require(data, "bound", int),
        _require(data, "low", int),
        _require(data, "high", int),
        labels,
        degrees,
        table,
        base=base,
        base_indices=data.get("base_indices"),
        special=data.get("special"),
        name=data.get("name"),
    )
    if "undefined" in data:
        given = sorted((int(p[0]), int(p[1])) for p in data["undefined"])
        if given != window.undefined_pairs():
            raise ValueError(
                "Undefined-bracket markers do not match the window degrees."
            )
    return window


def map_to_json(phi: BilinearMap) -> List[List[Any]]:
    """Encode a map as [[i, j, k, "p/q"], ...]."""
    return [[i, j, k, format_scalar(v)] for i, j, k, v in phi.items()]


def map_from_json(dim: int, entries: Any) -> BilinearMap:
    """Decode a map on an algebra of the given dimension."""
    if not isinstance(entries, list):
        raise ValueError("A bilinear map is a list of [i, j, k, scalar] entries.")
    coeffs = {}
    for entry in entries:
        if not (isinstance(entry, list) and len(entry) == 4):
            raise ValueError(f"Malformed map entry {entry!r}.")
        key = (int(entry[0]), int(entry[1]), int(entry[2]))
        coeffs[key] = parse_scalar(str(entry[3]))
    return BilinearMap(dim, coeffs)


def space_to_json(space: BilinearMapSpace) -> Dict[str, Any]:
    """Encode a space of bilinear maps by its canonical basis."""
    return {
        "kind": space.kind,
        "ambient_dim": space.ambient_dim,
        "dim": space.dim,
        "basis": [map_to_json(phi) for phi in space.basis],
        "degrees": space.degrees,
    }


def space_from_json(data: Mapping[str, Any]) -> BilinearMapSpace:
    """Decode a space; degrees are kept only if the basis is already canonical."""
    dim = _require(data, "ambient_dim", int)
    basis = [map_from_json(dim, entries) for entries in _require(data, "basis", list)]
    kind = data.get("kind", SPACE_KIND_CUSTOM)
    space = BilinearMapSpace(dim, basis, kind=kind)
    degrees = data.get("degrees")
    if degrees is None:
        return space
    if [phi.flatten() for phi in space.basis] != [phi.flatten() for phi in basis]:
        raise ValueError("Graded spaces must be given by their canonical basis.")
    return BilinearMapSpace(dim, basis, kind=kind, degrees=degrees, canonical=True)


def cocycle_to_json(xi: Cocycle2) -> Dict[str, Any]:
    """Encode a 2-cochain by its values on pairs i < j."""
    values = [[i, j, format_scalar(v)] for (i, j), v in xi.items()]
    return {"dim": xi.dim, "values": values}


def cocycle_from_json(data: Mapping[str, Any]) -> Cocycle2:
    """Decode a 2-cochain."""
    dim = _require(data, "dim", int)
    values = {}
    for entry in _require(data, "values", list):
        values[(int(entry[0]), int(entry[1]))] = parse_scalar(str(entry[2]))
    return Cocycle2(dim, values)


def ideal_to_json(ideal: PolyIdeal) -> Dict[str, Any]:
    """Encode an ideal by its generators in canonical text form."""
    return {"nvars": ideal.nvars, "generators": ideal.strings()}


def ideal_from_json(data: Mapping[str, Any]) -> PolyIdeal:
    """Decode an ideal."""
    nvars = _require(data, "nvars", int)
    texts = _require(data, "generators", list)
    if nvars == 0:
        if texts:
            raise ValueError("Generators given for an ideal without variables.")
        return PolyIdeal(0)
    ring = make_ring(nvars)
    return PolyIdeal(nvars, [parse_poly(str(t), ring) for t in texts], ring)


def report_to_json(
    report: CpaReport,
    manifest: Optional[RunManifest] = None,
    timings: Optional[Dict[str, float]] = None,
) -> Dict[str, Any]:
    """Encode a CPA report; timings are included only when given."""
    out: Dict[str, Any] = {
        "name": report.name,
        "verdict": report.verdict,
        "dcomm_dim": report.dcomm_dim,
        "solution_dim": report.solution_dim,
        "solution_basis": [map_to_json(phi) for phi in report.basis],
        "witnesses": [map_to_json(phi) for phi in report.witnesses],
        "certificate": report.certificate,
        "ideal": ideal_to_json(report.ideal),
    }
    if report.window is not None:
        out["window"] = report.window.bound
        out["degree_bound"] = report.degree_bound
        out["dcomm_degree_dims"] = _int_keys(report.dcomm_degree_dims)
        out["solution_degree_dims"] = _int_keys(report.solution_degree_dims)
        out["survivors"] = report.survivors
    if manifest is not None:
        out["manifest"] = dict(manifest)
    if timings is not None:
        out["timings"] = dict(timings)
    return out


def dumps(data: Any) -> str:
    """Deterministic JSON text: sorted keys, two-space indent, final newline."""
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def write_json(data: Any, path: Union[str, Path]) -> None:
    """Write dumps(data) to a file."""
    Path(path).write_text(dumps(data), encoding="utf-8")


def read_json(path: Union[str, Path]) -> Any:
    """Read a JSON file; decoding errors surface as ValueError."""
    return json.loads(Path(path).read_text(encoding="utf-8"))


def load_algebra(source: str) -> AnyAlgebra:
    r"""Resolve an algebra descriptor.

    An existing file is read as JSON: objects with "kind" and "bound" are
    windows, anything else an algebra. Other descriptors are built-in names;
    UnknownFamily is raised for unknown ones.
    """
    path = Path(source)
    if path.is_file():
        data = read_json(path)
        if isinstance(data, dict) and "kind" in data and "bound" in data:
            return window_from_json(data)
        return algebra_from_json(data)
    return builtin(source)
