r"""Commutative associative unital algebras used as coefficient rings.

The algebras here are finite-dimensional with a distinguished basis. Each basis
vector may carry an integer weight (the power of t it stands for); the weights
define the Euler-type derivation a -> weight(a) * a whenever that map is a
derivation of the product.
"""

from fractions import Fraction
from itertools import combinations_with_replacement, product
from typing import Dict, List, Mapping, Optional, Sequence, Tuple
from ..errors import DimensionMismatch, NotADerivation
from ..lie import LinearMap
from ..linalg import SparseVector
from ..util import ScalarLike, add_into, as_scalar


class CommutativeAlgebra:
    r"""Commutative associative algebra with unit, given by structure constants.

    Products b_a b_b = sum_m s_{ab}^m b_m are stored sparsely and completed by
    symmetry.
    """

    def __init__(
        self,
        dim: int,
        labels: Optional[Sequence[str]],
        table: Mapping[Tuple[int, int], Mapping[int, ScalarLike]],
        unit: Mapping[int, ScalarLike],
        weights: Optional[Sequence[int]] = None,
        name: Optional[str] = None,
        validate: bool = True,
    ) -> None:
        """Initialize from a product table.

        Arguments:
        ---------
        dim (integer):
            Dimension.
        labels (list of strings or None):
            Basis labels; defaults to a0, a1, ...
        table (mapping):
            (a, b) -> {m: s_{ab}^m}; either order of a pair may be given.
        unit (mapping):
            Coordinates of the unit element.
        weights (list of integers or None):
            Optional t-weight of each basis vector.
        name (string or None):
            Name used in labels and reports.
        validate (boolean):
            If true, commutativity, associativity and the unit are checked on
            all basis elements; a ValueError is raised on failure.
        """
        if labels is None:
            labels = [f"a{i}" for i in range(dim)]
        if len(labels) != dim:
            raise DimensionMismatch(f"Got {len(labels)} labels for dimension {dim}.")
        if weights is not None and len(weights) != dim:
            raise DimensionMismatch(f"Got {len(weights)} weights for dimension {dim}.")
        self._dim = dim
        self._labels = list(labels)
        self._weights = None if weights is None else [int(w) for w in weights]
        self.name = name
        self._table: Dict[Tuple[int, int], SparseVector] = {}
        for (a, b), vec in table.items():
            clean = {m: as_scalar(v) for m, v in vec.items()}
            clean = {m: v for m, v in clean.items() if v}
            for key in ((a, b), (b, a)):
                if key in self._table and self._table[key] != clean:
                    raise ValueError(f"Product table is not commutative on {(a, b)}.")
                if clean:
                    self._table[key] = clean
        self._unit = {k: as_scalar(v) for k, v in unit.items() if as_scalar(v)}
        if validate:
            self._validate()

    def _validate(self) -> None:
        n = self._dim
        for a, b, c in product(range(n), repeat=3):
            lhs = self.multiply(self.product(a, b), {c: Fraction(1)})
            rhs = self.multiply({a: Fraction(1)}, self.product(b, c))
            if lhs != rhs:
                raise ValueError(f"Product is not associative on {(a, b, c)}.")
        for a in range(n):
            if self.multiply(self._unit, {a: Fraction(1)}) != {a: Fraction(1)}:
                raise ValueError(f"Unit does not act as identity on basis vector {a}.")

    @property
    def dim(self) -> int:
        """Dimension."""
        return self._dim

    @property
    def labels(self) -> List[str]:
        """Basis labels."""
        return self._labels

    @property
    def unit(self) -> SparseVector:
        """Coordinates of the unit."""
        return dict(self._unit)

    @property
    def weights(self) -> Optional[List[int]]:
        """t-weights of the basis vectors, if any."""
        return None if self._weights is None else list(self._weights)

    def product(self, a: int, b: int) -> SparseVector:
        """Coordinates of b_a b_b. Do not mutate."""
        return self._table.get((a, b), _EMPTY)

    def multiply(
        self, u: Mapping[int, Fraction], v: Mapping[int, Fraction]
    ) -> SparseVector:
        """Product of two coordinate vectors."""
        out: SparseVector = {}
        for a, x in u.items():
            for b, y in v.items():
                vec = self._table.get((a, b))
                if vec:
                    add_into(out, vec, x * y)
        return out

    def structure_constants(self) -> List[Tuple[int, int, int, Fraction]]:
        """Nonzero constants (a, b, m, s) with a <= b."""
        return [
            (a, b, m, val)
            for a, b in combinations_with_replacement(range(self._dim), 2)
            for m, val in sorted(self.product(a, b).items())
        ]

    def __repr__(self) -> str:
        name = f" {self.name}" if self.name else ""
        return f"CommutativeAlgebra({self._dim}-dim{name})"


_EMPTY: SparseVector = {}


def _power_label(i: int) -> str:
    if i == 0:
        return "1"
    if i == 1:
        return "t"
    return f"t^{i}"


def truncated_polynomial_algebra(n: int) -> CommutativeAlgebra:
    """K[t]/(t^n) on the basis 1, t, ..., t^(n-1), weights 0..n-1."""
    if n < 1:
        raise ValueError(f"Truncation order must be at least 1, got {n}.")
    table = {
        (i, j): {i + j: 1}
        for i, j in combinations_with_replacement(range(n), 2)
        if i + j < n
    }
    return CommutativeAlgebra(
        n,
        [_power_label(i) for i in range(n)],
        table,
        unit={0: 1},
        weights=list(range(n)),
        name=f"Q[t]/(t^{n})",
    )


def square_zero_algebra(
    k: int,
    labels: Optional[Sequence[str]] = None,
    weights: Optional[Sequence[int]] = None,
) -> CommutativeAlgebra:
    """K + V with dim V = k and V V = 0.

    Arguments:
    ---------
    k (integer):
        Dimension of the square-zero part.
    labels (list of strings or None):
        Labels of the k square-zero basis vectors.
    weights (list of integers or None):
        Weights of the k square-zero basis vectors; the unit has weight 0.
        Any weights give a derivation since all products inside V vanish.
    """
    if labels is None:
        labels = [f"v{i + 1}" for i in range(k)]
    table = {(0, i): {i: 1} for i in range(k + 1)}
    return CommutativeAlgebra(
        k + 1,
        ["1", *labels],
        table,
        unit={0: 1},
        weights=None if weights is None else [0, *weights],
        name=f"K+V{k}",
    )


def contracted_laurent_algebra() -> CommutativeAlgebra:
    """Span of 1, t, t^-1 with t t^-1 = 0 and t^2 = t^-2 = 0; weights 0, 1, -1."""
    alg = square_zero_algebra(2, labels=["t", "t^-1"], weights=[1, -1])
    alg.name = "Q[t,t^-1]/contracted"
    return alg


def is_algebra_derivation(alg: CommutativeAlgebra, dmap: LinearMap) -> bool:
    """Check D(ab) = D(a)b + aD(b) on all basis pairs."""
    if dmap.dim != alg.dim:
        return False
    for a, b in combinations_with_replacement(range(alg.dim), 2):
        lhs = dmap(alg.product(a, b))
        rhs = alg.multiply(dmap.image(a), {b: Fraction(1)})
        add_into(rhs, alg.multiply({a: Fraction(1)}, dmap.image(b)), Fraction(1))
        if lhs != rhs:
            return False
    return True


def euler_derivation(alg: CommutativeAlgebra) -> LinearMap:
    """The weight derivation b_a -> weight(a) b_a (t d/dt on polynomial bases).

    Raises NotADerivation if the algebra has no weights or the weights do not
    define a derivation.
    """
    if alg.weights is None:
        raise NotADerivation(f"{alg!r} carries no weights.")
    dmap = LinearMap(alg.dim, [{a: w} for a, w in enumerate(alg.weights)])
    if not is_algebra_derivation(alg, dmap):
        raise NotADerivation(f"Weights of {alg!r} do not define a derivation.")
    return dmap
