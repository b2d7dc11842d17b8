r"""Scalar 2-cocycles, coboundaries and H^2 of a Lie algebra.

A 2-cochain is an antisymmetric bilinear form xi; it is a cocycle when
xi([x,y],z) + xi([y,z],x) + xi([z,x],y) = 0. Coboundaries are the forms
f([x,y]) for linear functionals f. Cochains are flattened over pairs i < j in
lexicographic order.
"""

import logging
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Mapping, Optional, Sequence, Tuple
from ..errors import DimensionMismatch
from ..linalg import SparseVector, kernel_of_rows, span_basis
from ..util import ScalarLike, add_into, as_scalar
from .core import LieAlgebra, Subspace
from .invariants import _cached

_LOG = logging.getLogger(__name__)


def _pair_index(i: int, j: int, dim: int) -> int:
    """Position of the pair (i, j), i < j, in lexicographic order."""
    return i * dim - i * (i + 1) // 2 + (j - i - 1)


class Cocycle2:
    r"""Scalar-valued antisymmetric bilinear form xi(b_i, b_j) = xi_{ij}.

    The name reflects its main use; whether a form is actually a cocycle of a
    given algebra is checked by is_cocycle.
    """

    def __init__(self, dim: int, values: Mapping[Tuple[int, int], ScalarLike]) -> None:
        """Initialize from values on pairs; either order is accepted.

        Arguments:
        ---------
        dim (integer):
            Dimension of the algebra the form lives on.
        values (mapping):
            (i, j) -> xi(b_i, b_j). A pair and its reverse must agree up to sign;
            diagonal values must be zero.
        """
        self._dim = dim
        self._values: Dict[Tuple[int, int], Fraction] = {}
        for (i, j), val in values.items():
            frac = as_scalar(val)
            if not (0 <= i < dim and 0 <= j < dim):
                raise DimensionMismatch(f"Pair ({i},{j}) outside dimension {dim}.")
            if i == j:
                if frac:
                    raise ValueError("A 2-cochain must vanish on the diagonal.")
                continue
            key, sval = ((i, j), frac) if i < j else ((j, i), -frac)
            if key in self._values and self._values[key] != sval:
                raise ValueError(f"Inconsistent values for pair {key}.")
            if sval:
                self._values[key] = sval

    @classmethod
    def from_flat(cls, dim: int, flat: Mapping[int, Fraction]) -> "Cocycle2":
        """Inverse of flatten."""
        pairs = list(combinations(range(dim), 2))
        return cls(dim, {pairs[ind]: val for ind, val in flat.items()})

    @classmethod
    def from_matrix(cls, rows: Sequence[Sequence[ScalarLike]]) -> "Cocycle2":
        """Create from a full antisymmetric matrix."""
        dim = len(rows)
        for i in range(dim):
            for j in range(dim):
                if as_scalar(rows[i][j]) != -as_scalar(rows[j][i]):
                    raise ValueError("Cochain matrix is not antisymmetric.")
        return cls(dim, {(i, j): rows[i][j] for i, j in combinations(range(dim), 2)})

    @property
    def dim(self) -> int:
        """Dimension of the underlying algebra."""
        return self._dim

    def value(self, i: int, j: int) -> Fraction:
        """xi(b_i, b_j)."""
        if i == j:
            return Fraction(0)
        if i < j:
            return self._values.get((i, j), Fraction(0))
        return -self._values.get((j, i), Fraction(0))

    def __call__(
        self, u: Mapping[int, Fraction], v: Mapping[int, Fraction]
    ) -> Fraction:
        total = Fraction(0)
        for i, a in u.items():
            for j, b in v.items():
                total += a * b * self.value(i, j)
        return total

    def items(self) -> List[Tuple[Tuple[int, int], Fraction]]:
        """Nonzero values on pairs i < j, in order."""
        return sorted(self._values.items())

    def matrix(self) -> List[List[Fraction]]:
        """Full antisymmetric matrix."""
        return [[self.value(i, j) for j in range(self._dim)] for i in range(self._dim)]

    def flatten(self) -> SparseVector:
        """Sparse vector over pairs i < j."""
        items = sorted(self._values.items())
        return {_pair_index(i, j, self._dim): v for (i, j), v in items}

    def is_zero(self) -> bool:
        """Whether the form vanishes."""
        return not self._values

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Cocycle2):
            return NotImplemented
        return self._dim == other.dim and self._values == other._values

    def __hash__(self) -> int:
        return hash((self._dim, tuple(self.items())))

    def __repr__(self) -> str:
        body = ", ".join(f"({i},{j}): {v}" for (i, j), v in self.items())
        return f"Cocycle2({self._dim}; {{{body}}})"


def cocycle_residual(alg: LieAlgebra, xi: Cocycle2, i: int, j: int, k: int) -> Fraction:
    """Cyclic sum xi([b_i,b_j],b_k) + xi([b_j,b_k],b_i) + xi([b_k,b_i],b_j)."""
    total = Fraction(0)
    for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
        total += xi(alg.bracket(a, b), {c: Fraction(1)})
    return total


def is_cocycle(alg: LieAlgebra, xi: Cocycle2) -> bool:
    """Check the cocycle identity on all basis triples."""
    if xi.dim != alg.dim:
        return False
    return all(
        not cocycle_residual(alg, xi, i, j, k)
        for i, j, k in combinations(range(alg.dim), 3)
    )


def two_cocycles(alg: LieAlgebra) -> List[Cocycle2]:
    """Canonical basis of the 2-cocycles."""

    def compute() -> List[Cocycle2]:
        n = alg.dim
        npairs = n * (n - 1) // 2
        rows = []
        for i, j, k in combinations(range(n), 3):
            row: SparseVector = {}
            for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                for u, val in alg.bracket(a, b).items():
                    if u == c:
                        continue
                    sign = 1 if u < c else -1
                    pair = _pair_index(min(u, c), max(u, c), n)
                    add_into(row, {pair: val}, Fraction(sign))
            rows.append(row)
        kern = kernel_of_rows(rows, npairs)
        _LOG.debug("cocycles of %r: dim %d", alg, len(kern))
        return [Cocycle2.from_flat(n, v) for v in kern]

    return _cached(alg, "cocycles", compute)


def coboundaries(alg: LieAlgebra) -> List[Cocycle2]:
    """Canonical basis of the coboundaries f([x,y])."""

    def compute() -> List[Cocycle2]:
        n = alg.dim
        spanning = []
        for m in range(n):
            vals = {
                (i, j): alg.bracket(i, j).get(m, 0)
                for i, j in combinations(range(n), 2)
            }
            spanning.append(Cocycle2(n, vals).flatten())
        basis = span_basis(spanning, n * (n - 1) // 2)
        return [Cocycle2.from_flat(n, v) for v in basis]

    return _cached(alg, "coboundaries", compute)


def h2_dim(alg: LieAlgebra) -> int:
    """Dimension of the second cohomology with trivial coefficients."""
    return len(two_cocycles(alg)) - len(coboundaries(alg))


def is_coboundary(alg: LieAlgebra, xi: Cocycle2) -> bool:
    """Exact membership of xi in the coboundary space."""
    npairs = alg.dim * (alg.dim - 1) // 2
    space = Subspace(npairs, [c.flatten() for c in coboundaries(alg)])
    return space.contains(xi.flatten())


def pick_nontrivial_cocycle(alg: LieAlgebra) -> Optional[Cocycle2]:
    """First cocycle basis element outside the coboundaries; None when H^2 = 0."""
    if h2_dim(alg) == 0:
        return None
    for xi in two_cocycles(alg):
        if not is_coboundary(alg, xi):
            return xi
    # unreachable when the dimension count above is right
    raise AssertionError("H^2 is nonzero but every cocycle basis element is trivial.")
