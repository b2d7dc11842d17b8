r"""Provides objects describing bilinear maps on an algebra and spaces of them.

A bilinear map phi on an n-dimensional algebra is the tensor lambda_{ij}^k with
phi(b_i, b_j) = sum_k lambda_{ij}^k b_k. The flattened form used by the linear
solvers puts lambda_{ij}^k at index (i*n + j)*n + k.
"""

from fractions import Fraction
from typing import (
    Dict,
    Final,
    Iterable,
    Iterator,
    List,
    Mapping,
    Optional,
    Sequence,
    Tuple,
)
from ..errors import DimensionMismatch
from ..linalg import Echelon, SparseVector, span_basis
from ..lie import Subspace
from ..util import ScalarLike, add_into, as_scalar

SPACE_KIND_D: Final = "D"
SPACE_KIND_DCOMM: Final = "Dcomm"
SPACE_KIND_C: Final = "C"
SPACE_KIND_DASSOC: Final = "Dassoc"
SPACE_KIND_CUSTOM: Final = "Custom"
SPACE_KINDS: Final = (
    SPACE_KIND_D,
    SPACE_KIND_DCOMM,
    SPACE_KIND_C,
    SPACE_KIND_DASSOC,
    SPACE_KIND_CUSTOM,
)


class BilinearMap:
    r"""Bilinear map phi: L x L -> L given by its coefficient tensor.

    Stored sparsely as (i, j) -> {k: lambda_{ij}^k}. Instances are treated as
    immutable.
    """

    def __init__(
        self, dim: int, coefficients: Mapping[Tuple[int, int, int], ScalarLike]
    ) -> None:
        """Initialize from coefficients (i, j, k) -> lambda_{ij}^k."""
        self._dim = dim
        self._values: Dict[Tuple[int, int], SparseVector] = {}
        for (i, j, k), val in coefficients.items():
            if not (0 <= i < dim and 0 <= j < dim and 0 <= k < dim):
                raise DimensionMismatch(
                    f"Coefficient index {(i, j, k)} outside dimension {dim}."
                )
            frac = as_scalar(val)
            if frac:
                self._values.setdefault((i, j), {})[k] = frac

    @classmethod
    def from_values(
        cls,
        dim: int,
        values: Mapping[Tuple[int, int], Mapping[int, ScalarLike]],
        symmetric: bool = False,
    ) -> "BilinearMap":
        """Create from pair values; symmetric=True fills (j, i) from (i, j)."""
        coeffs: Dict[Tuple[int, int, int], ScalarLike] = {}
        for (i, j), vec in values.items():
            for k, val in vec.items():
                coeffs[(i, j, k)] = val
                if symmetric:
                    coeffs[(j, i, k)] = val
        return cls(dim, coeffs)

    @classmethod
    def from_flat(cls, dim: int, flat: Mapping[int, Fraction]) -> "BilinearMap":
        """Inverse of flatten."""
        coeffs = {}
        for ind, val in flat.items():
            ij, k = divmod(ind, dim)
            i, j = divmod(ij, dim)
            coeffs[(i, j, k)] = val
        return cls(dim, coeffs)

    @classmethod
    def zero(cls, dim: int) -> "BilinearMap":
        """The zero map."""
        return cls(dim, {})

    @property
    def dim(self) -> int:
        """Dimension of the algebra the map acts on."""
        return self._dim

    def value(self, i: int, j: int) -> SparseVector:
        """Coordinates of phi(b_i, b_j). Do not mutate."""
        return self._values.get((i, j), _EMPTY)

    def __call__(
        self, u: Mapping[int, Fraction], v: Mapping[int, Fraction]
    ) -> SparseVector:
        out: SparseVector = {}
        for i, a in u.items():
            for j, b in v.items():
                vec = self._values.get((i, j))
                if vec:
                    add_into(out, vec, a * b)
        return out

    def pairs(self) -> List[Tuple[int, int]]:
        """Basis pairs with a nonzero value, in order."""
        return sorted(self._values)

    def items(self) -> Iterator[Tuple[int, int, int, Fraction]]:
        """Nonzero coefficients (i, j, k, lambda) in lexicographic order."""
        for (i, j) in sorted(self._values):
            for k, val in sorted(self._values[(i, j)].items()):
                yield i, j, k, val

    def flatten(self) -> SparseVector:
        """Sparse flat vector, lambda_{ij}^k at (i*dim + j)*dim + k."""
        n = self._dim
        return {(i * n + j) * n + k: v for i, j, k, v in self.items()}

    @property
    def is_symmetric(self) -> bool:
        """Whether lambda_{ij}^k = lambda_{ji}^k for all indices."""
        return all(self.value(j, i) == vec for (i, j), vec in self._values.items())

    def is_zero(self) -> bool:
        """Whether every coefficient vanishes."""
        return not self._values

    def __add__(self, other: "BilinearMap") -> "BilinearMap":
        if other.dim != self._dim:
            raise DimensionMismatch("Cannot add bilinear maps of different dimension.")
        flat = self.flatten()
        add_into(flat, other.flatten(), Fraction(1))
        return BilinearMap.from_flat(self._dim, flat)

    def __sub__(self, other: "BilinearMap") -> "BilinearMap":
        return self + other.scale(-1)

    def scale(self, factor: ScalarLike) -> "BilinearMap":
        """Scalar multiple."""
        frac = as_scalar(factor)
        coeffs = {(i, j, k): v * frac for i, j, k, v in self.items()}
        return BilinearMap(self._dim, coeffs)

    @staticmethod
    def combination(
        dim: int, coeffs: Sequence[ScalarLike], maps: Sequence["BilinearMap"]
    ) -> "BilinearMap":
        """Linear combination sum_a coeffs[a] * maps[a]."""
        if len(coeffs) != len(maps):
            raise DimensionMismatch("Need one coefficient per map.")
        flat: SparseVector = {}
        for coeff, phi in zip(coeffs, maps):
            add_into(flat, phi.flatten(), as_scalar(coeff))
        return BilinearMap.from_flat(dim, flat)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BilinearMap):
            return NotImplemented
        return self._dim == other.dim and self._values == other._values

    def __hash__(self) -> int:
        return hash((self._dim, tuple(self.items())))

    def __repr__(self) -> str:
        body = ", ".join(f"({i},{j})->{k}:{v}" for i, j, k, v in self.items())
        return f"BilinearMap({self._dim}; {body})"


_EMPTY: SparseVector = {}


def _pivot(phi: BilinearMap) -> int:
    return min(phi.flatten(), default=-1)


class BilinearMapSpace:
    r"""Linear space of bilinear maps, stored by a canonical basis.

    The basis is the reduced row echelon basis of the flattened tensors, in
    pivot order. Spaces produced by the windowed solver are made of
    homogeneous blocks with disjoint supports; their degrees travel along in
    the degrees list (None where unknown).
    """

    def __init__(
        self,
        dim: int,
        basis: Sequence[BilinearMap],
        kind: str = SPACE_KIND_CUSTOM,
        degrees: Optional[Sequence[Optional[int]]] = None,
        canonical: bool = False,
    ) -> None:
        """Initialize a space.

        Arguments:
        ---------
        dim (integer):
            Dimension of the algebra the maps act on.
        basis (list of BilinearMap):
            Spanning maps.
        kind (string):
            One of SPACE_KINDS.
        degrees (list or None):
            Degree of each basis map, if homogeneous; only kept when the basis
            is already canonical.
        canonical (boolean):
            If true, the basis is trusted to be the canonical reduced basis.
            Otherwise it is re-reduced (and degrees are dropped).
        """
        if kind not in SPACE_KINDS:
            raise ValueError(
                f"Unknown space kind {kind!r}; expected one of {SPACE_KINDS}."
            )
        for phi in basis:
            if phi.dim != dim:
                raise DimensionMismatch("Basis map dimension differs from the space.")
        self._dim = dim
        self._kind = kind
        if canonical:
            self._basis = list(basis)
            self._degrees: Optional[List[Optional[int]]] = (
                None if degrees is None else list(degrees)
            )
            if self._degrees is not None and len(self._degrees) != len(self._basis):
                raise DimensionMismatch("Need one degree per basis map.")
        else:
            flats = span_basis((phi.flatten() for phi in basis), dim**3)
            self._basis = [BilinearMap.from_flat(dim, v) for v in flats]
            self._degrees = None

    @classmethod
    def from_blocks(
        cls, dim: int, blocks: Mapping[int, Sequence[BilinearMap]], kind: str
    ) -> "BilinearMapSpace":
        """Assemble from homogeneous canonical blocks with disjoint supports."""
        tagged = [(phi, deg) for deg, maps in blocks.items() for phi in maps]
        tagged.sort(key=lambda x: _pivot(x[0]))
        return cls(
            dim,
            [x[0] for x in tagged],
            kind=kind,
            degrees=[x[1] for x in tagged],
            canonical=True,
        )

    @property
    def ambient_dim(self) -> int:
        """Dimension of the algebra the maps act on."""
        return self._dim

    @property
    def dim(self) -> int:
        """Dimension of the space."""
        return len(self._basis)

    def __len__(self) -> int:
        return len(self._basis)

    @property
    def basis(self) -> List[BilinearMap]:
        """Canonical basis."""
        return list(self._basis)

    @property
    def kind(self) -> str:
        """Defining kind (D, Dcomm, C, Dassoc, Custom)."""
        return self._kind

    @property
    def degrees(self) -> Optional[List[Optional[int]]]:
        """Degrees of the basis maps, when known."""
        return None if self._degrees is None else list(self._degrees)

    def degree_dims(self) -> Dict[int, int]:
        """Number of basis maps per degree (empty if degrees are unknown)."""
        out: Dict[int, int] = {}
        for deg in self._degrees or []:
            if deg is not None:
                out[deg] = out.get(deg, 0) + 1
        return dict(sorted(out.items()))

    def flat_subspace(self) -> Subspace:
        """The space as a Subspace of the flattened tensors."""
        return Subspace(self._dim**3, [phi.flatten() for phi in self._basis])

    def contains(self, phi: BilinearMap) -> bool:
        """Exact membership test."""
        return phi.dim == self._dim and self.flat_subspace().contains(phi.flatten())

    def coordinates(self, phi: BilinearMap) -> Optional[List[Fraction]]:
        """Coefficients of phi in the basis, or None if phi is not in the space."""
        flat = phi.flatten()
        coords = []
        for basis_map in self._basis:
            bflat = basis_map.flatten()
            piv = min(bflat)
            coeff = flat.get(piv, Fraction(0))
            coords.append(coeff)
            add_into(flat, bflat, -coeff)
        if flat:
            return None
        return coords

    def combination(self, coeffs: Sequence[ScalarLike]) -> BilinearMap:
        """The map sum_a coeffs[a] * basis[a]."""
        return BilinearMap.combination(self._dim, coeffs, self._basis)

    def __le__(self, other: "BilinearMapSpace") -> bool:
        return all(other.contains(phi) for phi in self._basis)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BilinearMapSpace):
            return NotImplemented
        return self.flat_subspace() == other.flat_subspace()

    def __hash__(self) -> int:
        return hash(self.flat_subspace())

    def __repr__(self) -> str:
        return f"BilinearMapSpace({self._kind}, dim {self.dim}, ambient {self._dim})"


def independent(maps: Iterable[BilinearMap], dim: int) -> bool:
    """Whether the maps are linearly independent."""
    maps = list(maps)
    ech = Echelon(dim**3)
    ech.extend((phi.flatten() for phi in maps), presort=False)
    return ech.rank == len(maps)
