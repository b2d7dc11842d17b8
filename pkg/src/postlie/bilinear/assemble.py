r"""Assembles and solves the linear systems defining D, Dcomm, C and Dassoc.

All four spaces are kernels of systems in the coefficients lambda_{ij}^k of a
bilinear map phi, at the flat index (i*n + j)*n + k. For a product * (a Lie
bracket or a commutative associative product) the derivation rule

    phi(x, y*z) = phi(x,y)*z + y*phi(x,z)

gives one row per (x, y <= z, output coordinate w); the centroid rule

    phi(x, y*z) = phi(x,y)*z

gives one row per (x, y, z, w) with y and z ordered arbitrarily. Rows are
produced in lexicographic order of (x, y, z, w) so the assembled system, and
hence the canonical basis, is deterministic.
"""

import logging
from fractions import Fraction
from itertools import combinations, product
from typing import TYPE_CHECKING, Callable, Dict, Iterator, List
from ..linalg import SparseVector, kernel_of_rows
from ..lie import LieAlgebra
from .core import (
    SPACE_KIND_C,
    SPACE_KIND_D,
    SPACE_KIND_DASSOC,
    SPACE_KIND_DCOMM,
    BilinearMap,
    BilinearMapSpace,
)

if TYPE_CHECKING:
    from ..construct.algebras import CommutativeAlgebra

_LOG = logging.getLogger(__name__)

Product = Callable[[int, int], SparseVector]


def unknown_index(dim: int, i: int, j: int, k: int) -> int:
    """Flat column of lambda_{ij}^k."""
    return (i * dim + j) * dim + k


def _add(row: SparseVector, col: int, val: Fraction) -> None:
    new = row.get(col, 0) + val
    if new:
        row[col] = new
    else:
        row.pop(col, None)


def derivation_rows(
    dim: int, prod: Product, x: int, y: int, z: int, centroid: bool = False
) -> Dict[int, SparseVector]:
    """Rows of the derivation (or centroid) rule at (x, y, z), keyed by output w.

    Arguments:
    ---------
    dim (integer):
        Dimension of the algebra.
    prod (callable):
        prod(a, b) gives the coordinates of b_a * b_b.
    x, y, z (integers):
        Basis indices.
    centroid (boolean):
        If true, drop the y*phi(x,z) term.

    Returns:
    -------
    Dictionary w -> sparse row; rows that vanish identically are omitted.
    """
    rows: Dict[int, SparseVector] = {}
    # phi(x, y*z)
    for u, val in prod(y, z).items():
        for w in range(dim):
            _add(rows.setdefault(w, {}), unknown_index(dim, x, u, w), val)
    # - phi(x,y)*z
    for u in range(dim):
        for w, val in prod(u, z).items():
            _add(rows.setdefault(w, {}), unknown_index(dim, x, y, u), -val)
    if not centroid:
        # - y*phi(x,z)
        for u in range(dim):
            for w, val in prod(y, u).items():
                _add(rows.setdefault(w, {}), unknown_index(dim, x, z, u), -val)
    return {w: row for w, row in sorted(rows.items()) if row}


def symmetry_rows(dim: int) -> Iterator[SparseVector]:
    """Rows lambda_{ij}^k - lambda_{ji}^k for i < j."""
    for i, j in combinations(range(dim), 2):
        for k in range(dim):
            yield {
                unknown_index(dim, i, j, k): Fraction(1),
                unknown_index(dim, j, i, k): Fraction(-1),
            }


def derivation_system(dim: int, prod: Product) -> Iterator[SparseVector]:
    """Rows of the derivation rule for a product symmetric or antisymmetric in y, z."""
    for x in range(dim):
        for y in range(dim):
            for z in range(y, dim):
                yield from derivation_rows(dim, prod, x, y, z).values()


def centroid_system(dim: int, prod: Product) -> Iterator[SparseVector]:
    """Rows of the centroid rule."""
    for x, y, z in product(range(dim), repeat=3):
        yield from derivation_rows(dim, prod, x, y, z, centroid=True).values()


def solve_system(dim: int, rows: Iterator[SparseVector], kind: str) -> BilinearMapSpace:
    """Kernel of a system in the dim**3 coefficients, as a space of maps."""
    rows = list(rows)
    kernel = kernel_of_rows(rows, dim**3)
    _LOG.debug(
        "%s: %d rows on %d unknowns, kernel dim %d",
        kind,
        len(rows),
        dim**3,
        len(kernel),
    )
    maps = [BilinearMap.from_flat(dim, v) for v in kernel]
    return BilinearMapSpace(dim, maps, kind=kind)


def d_space(alg: LieAlgebra) -> BilinearMapSpace:
    r"""Maps phi with every phi(x, .) a derivation.

    Arguments:
    ---------
    alg (LieAlgebra):
        The algebra.

    Returns:
    -------
    BilinearMapSpace of kind D, one kernel computation with dim**3 unknowns.
    """
    return solve_system(alg.dim, derivation_system(alg.dim, alg.bracket), SPACE_KIND_D)


def dcomm_space(alg: LieAlgebra) -> BilinearMapSpace:
    """Symmetric maps in D, with the symmetry rows in the same kernel pass."""
    n = alg.dim
    rows: List[SparseVector] = list(symmetry_rows(n))
    rows.extend(derivation_system(n, alg.bracket))
    return solve_system(n, iter(rows), SPACE_KIND_DCOMM)


def c_space(alg: LieAlgebra) -> BilinearMapSpace:
    """Maps phi with every phi(x, .) in the centroid."""
    return solve_system(alg.dim, centroid_system(alg.dim, alg.bracket), SPACE_KIND_C)


def d_space_assoc(coeffs: "CommutativeAlgebra") -> BilinearMapSpace:
    """Maps alpha on a commutative associative algebra with alpha(a, .) a derivation."""
    return solve_system(
        coeffs.dim, derivation_system(coeffs.dim, coeffs.product), SPACE_KIND_DASSOC
    )
