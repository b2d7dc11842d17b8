r"""Windowed solver for the symmetric derivation maps of a degree window.

Unknowns are homogeneous maps phi_l of degree l for |l| <= B, so each block is
solved on its own: phi_l(b_a, b_b) has components only on window vectors c of
degree deg a + deg b + l. Symmetry is built into the unknowns, which are
indexed by (a <= b, c).

The derivation rule at (x, y, z) enters block l only when it is exact: [y,z]
must be defined, and phi_l(x,y), phi_l(x,z) and the output must all have
in-window degrees. Everything else is skipped, never truncated, so each kept
row holds on the infinite algebra.
"""

import logging
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Set, Tuple
from ..construct.window import AlgebraWindow
from ..errors import WindowTooSmall
from ..linalg import SparseVector, kernel_of_rows, span_basis
from .core import SPACE_KIND_DCOMM, BilinearMap, BilinearMapSpace

_LOG = logging.getLogger(__name__)

Key = Tuple[int, int, int]


def _key(a: int, b: int, c: int) -> Key:
    return (a, b, c) if a <= b else (b, a, c)


def _pair(a: int, b: int) -> Tuple[int, int]:
    return (a, b) if a <= b else (b, a)


def block_columns(window: AlgebraWindow, degree: int) -> Dict[Key, int]:
    """Unknowns (a <= b, c) of the degree block, mapped to column numbers."""
    cols: Dict[Key, int] = {}
    for a in range(window.dim):
        for b in range(a, window.dim):
            target = window.degree(a) + window.degree(b) + degree
            if not window.in_window(target):
                continue
            for c in window.indices_of_degree(target):
                cols[(a, b, c)] = len(cols)
    return cols


def exact_derivation_triple(
    window: AlgebraWindow, degree: int, x: int, y: int, z: int
) -> bool:
    """Whether the derivation rule of block degree at (x, y, z) is exact."""
    dx, dy, dz = window.degree(x), window.degree(y), window.degree(z)
    return (
        window.bracket(y, z) is not None
        and window.in_window(dx + dy + degree)
        and window.in_window(dx + dz + degree)
        and window.in_window(dx + dy + dz + degree)
    )


def _block_rows(
    window: AlgebraWindow, degree: int, cols: Dict[Key, int]
) -> Tuple[List[SparseVector], Set[Tuple[int, int]], int]:
    """Exact rows of one block, the argument pairs they touch and the triple count."""
    rows: List[SparseVector] = []
    touched: Set[Tuple[int, int]] = set()
    n_exact = 0

    def put(row: SparseVector, key: Key, val: Fraction) -> None:
        col = cols[key]
        new = row.get(col, 0) + val
        if new:
            row[col] = new
        else:
            row.pop(col, None)

    for x in range(window.dim):
        dx = window.degree(x)
        for y, z in combinations(range(window.dim), 2):
            if not exact_derivation_triple(window, degree, x, y, z):
                continue
            n_exact += 1
            touched.add(_pair(x, y))
            touched.add(_pair(x, z))
            dy, dz = window.degree(y), window.degree(z)
            by_output: Dict[int, SparseVector] = {
                w: {} for w in window.indices_of_degree(dx + dy + dz + degree)
            }
            # phi(x, [y,z])
            for u, val in window.bracket(y, z).items():  # type: ignore [union-attr]
                for w, row in by_output.items():
                    put(row, _key(x, u, w), val)
            # - [phi(x,y), z]
            for u in window.indices_of_degree(dx + dy + degree):
                for w, val in window.bracket(u, z).items():  # type: ignore [union-attr]
                    put(by_output[w], _key(x, y, u), -val)
            # - [y, phi(x,z)]
            for u in window.indices_of_degree(dx + dz + degree):
                for w, val in window.bracket(y, u).items():  # type: ignore [union-attr]
                    put(by_output[w], _key(x, z, u), -val)
            rows.extend(row for _, row in sorted(by_output.items()) if row)
    return rows, touched, n_exact


def _block_maps(
    window: AlgebraWindow, cols: Dict[Key, int], kernel: List[SparseVector]
) -> List[BilinearMap]:
    """Canonical basis of a block from kernel vectors in column coordinates."""
    keys = sorted(cols, key=cols.__getitem__)
    maps = []
    for vec in kernel:
        coeffs: Dict[Key, Fraction] = {}
        for col, val in vec.items():
            a, b, c = keys[col]
            coeffs[(a, b, c)] = val
            coeffs[(b, a, c)] = val
        maps.append(BilinearMap(window.dim, coeffs))
    n = window.dim
    flats = span_basis((phi.flatten() for phi in maps), n**3)
    return [BilinearMap.from_flat(n, v) for v in flats]


def windowed_dcomm_space(
    window: AlgebraWindow, degree_bound: Optional[int] = None
) -> BilinearMapSpace:
    r"""Symmetric derivation maps of the window, built from homogeneous blocks.

    Arguments:
    ---------
    window (AlgebraWindow):
        The window.
    degree_bound (integer or None):
        Largest |l| of the homogeneous unknowns; defaults to the window bound N.
        Must be at most 2N.

    Returns:
    -------
    BilinearMapSpace of kind Dcomm whose basis is homogeneous, with degrees
    recorded; degree_dims() gives the per-degree dimensions.

    Notes:
    -----
    Raises WindowTooSmall when the bound exceeds 2N, or when some argument
    pair (a, b) carrying unknowns of some degree is touched by no exact
    instance of the derivation rule. The exception lists the uncovered
    (degree, a, b) triples.
    """
    bound = window.bound if degree_bound is None else degree_bound
    if bound < 0:
        raise ValueError(f"Degree bound must be nonnegative, got {bound}.")
    if bound > 2 * window.bound:
        raise WindowTooSmall(
            f"Degree bound {bound} exceeds twice the window bound {window.bound}."
        )
    blocks: Dict[int, List[BilinearMap]] = {}
    uncovered: List[Tuple[int, int, int]] = []
    for degree in range(-bound, bound + 1):
        cols = block_columns(window, degree)
        if not cols:
            continue
        rows, touched, n_exact = _block_rows(window, degree, cols)
        pairs = sorted({key[:2] for key in cols})
        missing = [(degree, a, b) for a, b in pairs if (a, b) not in touched]
        if missing:
            uncovered.extend(missing)
            continue
        kernel = kernel_of_rows(rows, len(cols))
        _LOG.debug(
            "window %r, degree %d: %d unknowns, %d exact triples, kernel dim %d",
            window,
            degree,
            len(cols),
            n_exact,
            len(kernel),
        )
        if kernel:
            blocks[degree] = _block_maps(window, cols, kernel)
    if uncovered:
        raise WindowTooSmall(
            f"{len(uncovered)} argument pairs of {window!r} meet no exact constraint; "
            "enlarge the window or lower the degree bound.",
            uncovered,
        )
    return BilinearMapSpace.from_blocks(window.dim, blocks, SPACE_KIND_DCOMM)
