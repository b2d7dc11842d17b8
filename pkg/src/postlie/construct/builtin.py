r"""Named Lie algebras and their standard gradings.

Bases:

* sl(n): h_1..h_(n-1) with h_k = E_kk - E_(k+1)(k+1), then e_ij = E_ij for
  i < j, then f_ij = E_ji for i < j (both in lexicographic order). sl2 uses
  the labels h, e, f, so [h,e] = 2e, [h,f] = -2f and [e,f] = h.
* heisenberg: x, y, z with [x,y] = z.
* r2: x, y with [x,y] = y.
* abelian<n>: x1..xn.

Graded variants carry a suffix: _z for the integer grading by height (or by
word length for heisenberg), _z2 for the Chevalley Z/2 grading of sl2, _z1 for
the trivial grading.
"""

import re
from fractions import Fraction
from itertools import combinations
from typing import Callable, Dict, Final, List, Tuple, Union
from ..errors import UnknownFamily
from ..grading.core import INTEGERS, GradedLieAlgebra, Grading, attach_grading
from ..lie import LieAlgebra
from ..linalg import SparseVector

MatrixUnit = Dict[Tuple[int, int], Fraction]

GRADED_BUILTINS: Final = (
    "sl2_z",
    "sl2_z2",
    "sl2_z1",
    "sl3_z",
    "sl3_z1",
    "heisenberg_z",
)
PLAIN_BUILTINS: Final = ("sl2", "sl3", "heisenberg", "r2", "abelian<n>")


def _commutator(a: MatrixUnit, b: MatrixUnit) -> MatrixUnit:
    out: MatrixUnit = {}
    for (r, s), u in a.items():
        for (p, q), v in b.items():
            if s == p:
                out[(r, q)] = out.get((r, q), 0) + u * v
            if q == r:
                out[(p, s)] = out.get((p, s), 0) - u * v
    return {k: v for k, v in out.items() if v}


def sl(n: int) -> LieAlgebra:
    """The special linear algebra sl(n) in the matrix-unit basis."""
    if n < 2:
        raise ValueError(f"sl(n) needs n >= 2, got {n}.")
    one = Fraction(1)
    pairs = list(combinations(range(n), 2))
    mats: List[MatrixUnit] = [
        {(k, k): one, (k + 1, k + 1): -one} for k in range(n - 1)
    ]
    mats += [{(i, j): one} for i, j in pairs]
    mats += [{(j, i): one} for i, j in pairs]
    if n == 2:
        labels = ["h", "e", "f"]
    else:
        labels = [f"h{k + 1}" for k in range(n - 1)]
        labels += [f"e{i + 1}{j + 1}" for i, j in pairs]
        labels += [f"f{i + 1}{j + 1}" for i, j in pairs]
    off = {(i, j): n - 1 + a for a, (i, j) in enumerate(pairs)}
    off.update({(j, i): n - 1 + len(pairs) + a for a, (i, j) in enumerate(pairs)})

    def coordinates(mat: MatrixUnit) -> SparseVector:
        vec: SparseVector = {}
        # h_k coefficient is the partial trace of the first k diagonal entries
        acc = Fraction(0)
        for k in range(n - 1):
            acc += mat.get((k, k), 0)
            if acc:
                vec[k] = acc
        for (r, c), val in mat.items():
            if r != c:
                vec[off[(r, c)]] = val
        return vec

    table = {}
    for i, j in combinations(range(len(mats)), 2):
        vec = coordinates(_commutator(mats[i], mats[j]))
        if vec:
            table[(i, j)] = vec
    return LieAlgebra(len(mats), labels, table, validate=True, name=f"sl{n}")


def heisenberg() -> LieAlgebra:
    """The 3-dimensional Heisenberg algebra."""
    return LieAlgebra(3, ["x", "y", "z"], {(0, 1): {2: 1}}, name="heisenberg")


def r2() -> LieAlgebra:
    """The 2-dimensional non-abelian algebra."""
    return LieAlgebra(2, ["x", "y"], {(0, 1): {1: 1}}, name="r2")


def abelian(n: int) -> LieAlgebra:
    """The n-dimensional abelian algebra."""
    if n < 1:
        raise ValueError(f"Abelian algebras need n >= 1, got {n}.")
    return LieAlgebra(n, [f"x{i + 1}" for i in range(n)], {}, name=f"abelian{n}")


def _height_grading(n: int) -> Grading:
    """Z-grading of sl(n) by root height: e_ij has degree j - i."""
    pairs = list(combinations(range(n), 2))
    degrees = [0] * (n - 1)
    degrees += [j - i for i, j in pairs]
    degrees += [i - j for i, j in pairs]
    return Grading(degrees, modulus=INTEGERS)


def _sl2_z2() -> GradedLieAlgebra:
    return attach_grading(sl(2), Grading([0, 1, 1], modulus=2))


def _sl2_z() -> GradedLieAlgebra:
    return attach_grading(sl(2), _height_grading(2))


def _sl3_z() -> GradedLieAlgebra:
    return attach_grading(sl(3), _height_grading(3))


def _trivial(alg: LieAlgebra) -> GradedLieAlgebra:
    return attach_grading(alg, Grading.trivial(alg.dim))


def _heisenberg_z() -> GradedLieAlgebra:
    return attach_grading(heisenberg(), Grading([1, 1, 2], modulus=INTEGERS))


_BUILDERS: Final[Dict[str, Callable[[], Union[LieAlgebra, GradedLieAlgebra]]]] = {
    "sl2": lambda: sl(2),
    "sl3": lambda: sl(3),
    "heisenberg": heisenberg,
    "r2": r2,
    "sl2_z": _sl2_z,
    "sl2_z2": _sl2_z2,
    "sl2_z1": lambda: _trivial(sl(2)),
    "sl3_z": _sl3_z,
    "sl3_z1": lambda: _trivial(sl(3)),
    "heisenberg_z": _heisenberg_z,
}

_ABELIAN = re.compile(r"abelian(\d+)")


def builtin(name: str) -> Union[LieAlgebra, GradedLieAlgebra]:
    """Build a named algebra.

    Arguments:
    ---------
    name (string):
        One of sl2, sl3, heisenberg, r2, abelian<n> (e.g. abelian3), or a
        graded variant from GRADED_BUILTINS.

    Returns:
    -------
    A validated LieAlgebra, or a GradedLieAlgebra for the graded names.
    UnknownFamily is raised for anything else.
    """
    key = name.strip().lower()
    if key in _BUILDERS:
        return _BUILDERS[key]()
    match = _ABELIAN.fullmatch(key)
    if match and int(match.group(1)) >= 1:
        return abelian(int(match.group(1)))
    raise UnknownFamily(
        f"Unknown algebra {name!r}; known: "
        f"{', '.join((*PLAIN_BUILTINS, *GRADED_BUILTINS))}."
    )


def graded_builtins() -> Dict[str, GradedLieAlgebra]:
    """All graded built-ins, keyed by name."""
    out = {}
    for name in GRADED_BUILTINS:
        alg = builtin(name)
        assert isinstance(alg, GradedLieAlgebra)
        out[name] = alg
    return out
