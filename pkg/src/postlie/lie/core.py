r"""Provides objects describing finite-dimensional Lie algebras.

Algebras are given by structure constants over the rationals: [b_i, b_j] =
sum_k c_{ij}^k b_k. Constants are stored sparsely, one mapping k -> c_{ij}^k per
ordered pair with a nonzero bracket.

BracketAlgebra is the interface shared by true Lie algebras and by the degree
windows of constructions.window, whose bracket is only partially defined.
"""

from abc import ABC, abstractmethod
from fractions import Fraction
from itertools import combinations
from typing import (
    TYPE_CHECKING,
    Any,
    Dict,
    Iterable,
    Iterator,
    List,
    Mapping,
    Optional,
    Sequence,
    Tuple,
    Union,
)
from ..errors import AntisymmetryViolation, DimensionMismatch, JacobiViolation
from ..linalg import Matrix, SparseVector, span_basis, solve_linear
from ..util import ScalarLike, add_into, as_scalar, dense

if TYPE_CHECKING:
    from ..construct.extension import ExtensionSpec

BracketTable = Mapping[Tuple[int, int], Mapping[int, ScalarLike]]


class BracketAlgebra(ABC):
    r"""Interface for algebras given on a basis by a (possibly partial) bracket.

    bracket(i, j) returns the coordinates of [b_i, b_j], or None when the
    bracket is not defined (only windows have undefined brackets).
    """

    @property
    @abstractmethod
    def dim(self) -> int:
        """Number of basis vectors."""

    @property
    @abstractmethod
    def labels(self) -> List[str]:
        """Basis labels, one per basis vector."""

    @abstractmethod
    def bracket(self, i: int, j: int) -> Optional[SparseVector]:
        """Coordinates of [b_i, b_j]; None if undefined. Do not mutate."""

    @property
    def is_partial(self) -> bool:
        """Whether some brackets may be undefined."""
        return False

    def bracket_vectors(
        self, u: Mapping[int, Fraction], v: Mapping[int, Fraction]
    ) -> Optional[SparseVector]:
        """Bracket of two sparse coordinate vectors; None if any term is undefined."""
        out: SparseVector = {}
        for i, ui in u.items():
            for j, vj in v.items():
                term = self.bracket(i, j)
                if term is None:
                    return None
                add_into(out, term, ui * vj)
        return out

    def label(self, i: int) -> str:
        """Label of basis vector i."""
        return self.labels[i]

    def format_vector(self, vec: Mapping[int, Fraction]) -> str:
        """Human readable form of a coordinate vector, e.g. "2*e - h"."""
        if not vec:
            return "0"
        parts = []
        for ind, val in sorted(vec.items()):
            if val == 1:
                parts.append(self.labels[ind])
            elif val == -1:
                parts.append(f"-{self.labels[ind]}")
            else:
                parts.append(f"{val}*{self.labels[ind]}")
        return " + ".join(parts).replace("+ -", "- ")


class LieAlgebra(BracketAlgebra):
    r"""Finite-dimensional Lie algebra over the rationals.

    Instances are immutable once validated. Invariants that are costly to
    compute (center, derived subalgebra, ...) are cached per instance by the
    functions in lie.invariants.
    """

    def __init__(
        self,
        dim: int,
        labels: Optional[Sequence[str]],
        table: BracketTable,
        validate: bool = True,
        extension: Optional["ExtensionSpec"] = None,
        name: Optional[str] = None,
    ) -> None:
        r"""Initialize from a sparse bracket table.

        Arguments:
        ---------
        dim (integer):
            Dimension of the algebra.
        labels (list of strings or None):
            Basis labels; defaults to b0, b1, ...
        table (mapping):
            Maps (i, j) to a mapping k -> c_{ij}^k. Either order of a pair may
            be given; missing pairs bracket to zero and the other order is
            completed by antisymmetry.
        validate (boolean):
            If true, the Jacobi identity is checked on all basis triples.
        extension (ExtensionSpec or None):
            Set by the extension builders to describe how the algebra was built.
        name (string or None):
            Optional descriptive name used in reports.

        Notes:
        -----
        Raises AntisymmetryViolation if both orders of a pair are given with
        inconsistent values or if a diagonal bracket is nonzero, and
        JacobiViolation (with the offending triple) if validation fails.
        """
        if dim < 0:
            raise ValueError(f"Dimension must be nonnegative, got {dim}.")
        if labels is None:
            labels = [f"b{i}" for i in range(dim)]
        if len(labels) != dim:
            raise DimensionMismatch(f"Got {len(labels)} labels for dimension {dim}.")
        self._dim = dim
        self._labels = list(labels)
        self._table = _complete_table(dim, table)
        self.extension = extension
        self.name = name
        # invariant cache filled lazily by lie.invariants
        self._cache: Dict[str, Any] = {}
        if validate:
            self.check_jacobi()

    @property
    def dim(self) -> int:
        """Dimension."""
        return self._dim

    @property
    def labels(self) -> List[str]:
        """Basis labels."""
        return self._labels

    def bracket(self, i: int, j: int) -> SparseVector:
        """Coordinates of [b_i, b_j] (never None). Do not mutate."""
        return self._table.get((i, j), _EMPTY)

    def bracket_vectors(  # type: ignore [override]
        self, u: Mapping[int, Fraction], v: Mapping[int, Fraction]
    ) -> SparseVector:
        """Bracket of two sparse coordinate vectors."""
        out: SparseVector = {}
        for i, ui in u.items():
            for j, vj in v.items():
                term = self._table.get((i, j))
                if term:
                    add_into(out, term, ui * vj)
        return out

    def structure_constants(self) -> Iterator[Tuple[int, int, int, Fraction]]:
        """Nonzero constants (i, j, k, c_{ij}^k) with i < j, in lexicographic order."""
        for (i, j), vec in sorted(self._table.items()):
            if i < j:
                for k, val in sorted(vec.items()):
                    yield i, j, k, val

    def upper_table(self) -> Dict[Tuple[int, int], SparseVector]:
        """Copy of the table restricted to pairs i < j."""
        return {key: dict(val) for key, val in self._table.items() if key[0] < key[1]}

    def ad_matrix(self, i: int) -> Matrix:
        """Matrix of ad b_i; column j holds the coordinates of [b_i, b_j]."""
        cols = [dense(self.bracket(i, j), self._dim) for j in range(self._dim)]
        return Matrix.from_rows(
            [[cols[j][k] for j in range(self._dim)] for k in range(self._dim)],
            cols=self._dim,
        )

    @property
    def is_abelian(self) -> bool:
        """Whether every bracket vanishes."""
        return not self._table

    def jacobi_residual(self, i: int, j: int, k: int) -> SparseVector:
        """Cyclic sum [[b_i,b_j],b_k] + [[b_j,b_k],b_i] + [[b_k,b_i],b_j]."""
        out: SparseVector = {}
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            for u, val in self.bracket(a, b).items():
                add_into(out, self.bracket(u, c), val)
        return out

    def check_jacobi(self) -> None:
        """Raise JacobiViolation on the first basis triple failing Jacobi."""
        for i, j, k in combinations(range(self._dim), 3):
            res = self.jacobi_residual(i, j, k)
            if res:
                raise JacobiViolation((i, j, k), res)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self._dim == other.dim and self._table == other._table

    def __hash__(self) -> int:
        return hash((self._dim, tuple(self.structure_constants())))

    def __repr__(self) -> str:
        name = f" {self.name}" if self.name else ""
        return f"LieAlgebra({self._dim}-dim{name})"


_EMPTY: SparseVector = {}


def _complete_table(
    dim: int, table: BracketTable
) -> Dict[Tuple[int, int], SparseVector]:
    """Convert input constants to Fractions and complete antisymmetry."""
    out: Dict[Tuple[int, int], SparseVector] = {}
    for (i, j), vec in table.items():
        for ind in (i, j, *vec.keys()):
            if not 0 <= ind < dim:
                raise DimensionMismatch(
                    f"Bracket entry ({i},{j}) refers to index {ind} outside "
                    f"dimension {dim}."
                )
        clean = {k: as_scalar(v) for k, v in vec.items()}
        clean = {k: v for k, v in clean.items() if v}
        if i == j:
            if clean:
                raise AntisymmetryViolation(
                    (i, j), f"[b_{i}, b_{i}] must vanish, got {clean}."
                )
            continue
        neg = {k: -v for k, v in clean.items()}
        for key, val in (((i, j), clean), ((j, i), neg)):
            if key in out and out[key] != val:
                raise AntisymmetryViolation(
                    (i, j),
                    f"Inconsistent values given for [b_{i}, b_{j}] and [b_{j}, b_{i}].",
                )
            out[key] = val
    return {key: val for key, val in out.items() if val}


def from_structure_constants(
    dim: int,
    labels: Optional[Sequence[str]],
    table: BracketTable,
    name: Optional[str] = None,
) -> LieAlgebra:
    """Create a validated Lie algebra from a sparse bracket table.

    Arguments:
    ---------
    dim (integer):
        Dimension.
    labels (list of strings or None):
        Basis labels.
    table (mapping):
        (i, j) -> {k: c_{ij}^k}. Upper triangular input suffices.
    name (string or None):
        Optional name for reports.

    Returns:
    -------
    A LieAlgebra; raises AntisymmetryViolation or JacobiViolation on bad input.

    Example:
    -------
        from_structure_constants(3, ["h", "e", "f"],
                                 {(0, 1): {1: 2}, (0, 2): {2: -2}, (1, 2): {0: 1}})
    is sl2 in its Chevalley basis.
    """
    return LieAlgebra(dim, labels, table, validate=True, name=name)


def change_basis(
    alg: LieAlgebra, columns: Sequence[Sequence[ScalarLike]], name: Optional[str] = None
) -> LieAlgebra:
    """Re-express an algebra in a new basis.

    Arguments:
    ---------
    alg (LieAlgebra):
        Algebra to transform.
    columns (square matrix as list of rows):
        Change of basis matrix P; new basis vector b'_j = sum_k P[k][j] b_k.
        Must be invertible.
    name (string or None):
        Name of the result.

    Returns:
    -------
    LieAlgebra whose structure constants are those of alg in the new basis.
    """
    n = alg.dim
    pmat = Matrix.from_rows(columns, cols=n)
    if pmat.rows != n:
        raise DimensionMismatch("Change of basis matrix must be square.")
    new_vectors = [
        {k: pmat[k, j] for k in range(n) if pmat[k, j]} for j in range(n)
    ]
    if len(span_basis(new_vectors, n)) != n:
        raise ValueError("Change of basis matrix is singular.")
    table: Dict[Tuple[int, int], Dict[int, Fraction]] = {}
    for i, j in combinations(range(n), 2):
        old = alg.bracket_vectors(new_vectors[i], new_vectors[j])
        if not old:
            continue
        solved = solve_linear(pmat, dense(old, n))
        # pmat is invertible, so the system is always consistent
        assert solved is not None
        coords = {k: v for k, v in enumerate(solved[0]) if v}
        table[(i, j)] = coords
    return LieAlgebra(
        n,
        [f"{lab}'" for lab in alg.labels],
        table,
        validate=True,
        name=name if name is not None else alg.name,
    )


class Subspace:
    r"""Subspace of a coordinate space, stored by its canonical basis.

    The basis is the reduced row echelon basis, so two Subspace objects are
    equal exactly when they describe the same subspace.
    """

    def __init__(self, ambient: int, vectors: Iterable[Mapping[int, Fraction]]) -> None:
        """Initialize from any spanning family of sparse vectors."""
        self._ambient = ambient
        self._basis = span_basis(vectors, ambient)

    @classmethod
    def from_dense(
        cls, ambient: int, vectors: Iterable[Sequence[ScalarLike]]
    ) -> "Subspace":
        """Create from dense coordinate vectors."""
        return cls(
            ambient,
            [
                {i: as_scalar(v) for i, v in enumerate(vec) if as_scalar(v)}
                for vec in vectors
            ],
        )

    @property
    def ambient(self) -> int:
        """Dimension of the surrounding space."""
        return self._ambient

    @property
    def dim(self) -> int:
        """Dimension of the subspace."""
        return len(self._basis)

    @property
    def basis(self) -> List[SparseVector]:
        """Canonical basis as sparse vectors."""
        return [dict(v) for v in self._basis]

    def dense_basis(self) -> List[List[Fraction]]:
        """Canonical basis as dense vectors."""
        return [dense(v, self._ambient) for v in self._basis]

    def contains(self, vector: Mapping[int, Fraction]) -> bool:
        """Membership test by reduction against the canonical basis."""
        out = {k: v for k, v in vector.items() if v}
        for row in self._basis:
            piv = min(row)
            coeff = out.get(piv)
            if coeff:
                add_into(out, row, -coeff)
        return not out

    def __le__(self, other: "Subspace") -> bool:
        if self._ambient != other.ambient:
            return False
        return all(other.contains(v) for v in self._basis)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self._ambient == other.ambient and self._basis == other._basis

    def __hash__(self) -> int:
        rows = tuple(tuple(sorted(v.items())) for v in self._basis)
        return hash((self._ambient, rows))

    def __repr__(self) -> str:
        return f"Subspace(dim {self.dim} in {self._ambient})"


class LinearMap:
    r"""Linear endomorphism of an algebra, acting on basis coordinates.

    Stored by the images of the basis vectors. The flattened form used by the
    constraint solvers puts the entry (row k, column j), i.e. coordinate k of
    the image of b_j, at index k*dim + j.
    """

    def __init__(self, dim: int, images: Sequence[Mapping[int, ScalarLike]]) -> None:
        """Initialize from the images of the basis vectors (sparse)."""
        if len(images) != dim:
            raise DimensionMismatch(f"Need {dim} images, got {len(images)}.")
        self._dim = dim
        self._images = [
            {k: as_scalar(v) for k, v in img.items() if as_scalar(v)} for img in images
        ]

    @classmethod
    def from_matrix(
        cls, mat: Union[Matrix, Sequence[Sequence[ScalarLike]]]
    ) -> "LinearMap":
        """Create from a square matrix whose column j is the image of b_j."""
        if not isinstance(mat, Matrix):
            mat = Matrix.from_rows(mat)
        if mat.rows != mat.cols:
            raise DimensionMismatch("A linear endomorphism needs a square matrix.")
        return cls(
            mat.rows,
            [{k: mat[k, j] for k in range(mat.rows)} for j in range(mat.cols)],
        )

    @classmethod
    def from_flat(cls, dim: int, flat: Mapping[int, Fraction]) -> "LinearMap":
        """Inverse of flatten."""
        images: List[Dict[int, Fraction]] = [{} for _ in range(dim)]
        for ind, val in flat.items():
            k, j = divmod(ind, dim)
            images[j][k] = val
        return cls(dim, images)

    @classmethod
    def identity(cls, dim: int) -> "LinearMap":
        """Identity map."""
        return cls(dim, [{i: 1} for i in range(dim)])

    @classmethod
    def zero(cls, dim: int) -> "LinearMap":
        """Zero map."""
        return cls(dim, [{} for _ in range(dim)])

    @property
    def dim(self) -> int:
        """Size of the algebra acted upon."""
        return self._dim

    @property
    def matrix(self) -> Matrix:
        """Dense matrix, column j = image of b_j."""
        return Matrix.from_rows(
            [
                [self._images[j].get(k, Fraction(0)) for j in range(self._dim)]
                for k in range(self._dim)
            ],
            cols=self._dim,
        )

    def image(self, j: int) -> SparseVector:
        """Image of basis vector j. Do not mutate."""
        return self._images[j]

    def __call__(self, vector: Mapping[int, Fraction]) -> SparseVector:
        out: SparseVector = {}
        for j, val in vector.items():
            add_into(out, self._images[j], val)
        return out

    def flatten(self) -> SparseVector:
        """Sparse flat form, entry (k, j) at index k*dim + j."""
        out = {}
        for j, img in enumerate(self._images):
            for k, val in img.items():
                out[k * self._dim + j] = val
        return dict(sorted(out.items()))

    def __add__(self, other: "LinearMap") -> "LinearMap":
        out = [dict(img) for img in self._images]
        for j, img in enumerate(other._images):
            add_into(out[j], img, Fraction(1))
        return LinearMap(self._dim, out)

    def scale(self, factor: ScalarLike) -> "LinearMap":
        """Scalar multiple."""
        frac = as_scalar(factor)
        images = [{k: v * frac for k, v in img.items()} for img in self._images]
        return LinearMap(self._dim, images)

    def is_zero(self) -> bool:
        """Whether the map vanishes."""
        return not any(self._images)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearMap):
            return NotImplemented
        return self._dim == other.dim and self._images == other._images

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.flatten().items())))

    def __repr__(self) -> str:
        return f"LinearMap({self.matrix.to_lists()})"
