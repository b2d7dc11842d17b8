r"""Degree decomposition of bilinear maps on graded algebras.

A bilinear map has degree g when phi(L_h, L_f) lies in L_{h+f+g}. Every map
splits uniquely into homogeneous pieces, one per g, by sorting its
coefficients lambda_{ij}^k on deg(k) - deg(i) - deg(j). For the spaces D and
D_comm of a graded algebra each piece of a member is again a member, so those
spaces have homogeneous bases.
"""

from typing import Dict, Final, List, Literal, Union
from ..bilinear.core import BilinearMap, BilinearMapSpace
from ..linalg import span_basis
from .core import Grading

MIXED_DEGREE: Final = "mixed"

Degree = Union[int, Literal["mixed"]]


def coefficient_degree(grading: Grading, i: int, j: int, k: int) -> int:
    """Degree carried by the coefficient lambda_{ij}^k."""
    return grading.reduce(grading.degree(k) - grading.degree(i) - grading.degree(j))


def homogeneous_parts(phi: BilinearMap, grading: Grading) -> Dict[int, BilinearMap]:
    """Split a map into its nonzero homogeneous pieces, keyed by degree."""
    if len(grading) != phi.dim:
        raise ValueError("Grading and map have different dimensions.")
    buckets: Dict[int, Dict[tuple, object]] = {}
    for i, j, k, val in phi.items():
        deg = coefficient_degree(grading, i, j, k)
        buckets.setdefault(deg, {})[(i, j, k)] = val
    return {
        deg: BilinearMap(phi.dim, coeffs)  # type: ignore [arg-type]
        for deg, coeffs in sorted(buckets.items())
    }


def degree_of(phi: BilinearMap, grading: Grading) -> Degree:
    """Degree of a homogeneous map, or MIXED_DEGREE.

    The zero map has degree 0 by convention.
    """
    parts = homogeneous_parts(phi, grading)
    if not parts:
        return 0
    if len(parts) == 1:
        return next(iter(parts))
    return MIXED_DEGREE


class HomogeneousDecomposition:
    r"""A space of bilinear maps re-based into homogeneous components."""

    def __init__(
        self, dim: int, components: Dict[int, List[BilinearMap]], kind: str
    ) -> None:
        """Initialize from canonical component bases keyed by degree."""
        self._dim = dim
        self._components = {g: list(v) for g, v in sorted(components.items()) if v}
        self._kind = kind

    @property
    def components(self) -> Dict[int, List[BilinearMap]]:
        """Component bases keyed by degree (empty components omitted)."""
        return {g: list(v) for g, v in self._components.items()}

    def dims(self) -> Dict[int, int]:
        """Dimension per degree."""
        return {g: len(v) for g, v in self._components.items()}

    @property
    def total_dim(self) -> int:
        """Sum of the component dimensions."""
        return sum(len(v) for v in self._components.values())

    def space(self) -> BilinearMapSpace:
        """Re-sum the components into a single space."""
        return BilinearMapSpace.from_blocks(self._dim, self._components, self._kind)

    def __repr__(self) -> str:
        return f"HomogeneousDecomposition({self.dims()})"


def decompose_bilinear_space(
    space: BilinearMapSpace, grading: Grading
) -> HomogeneousDecomposition:
    """Re-base a space of bilinear maps so every basis element is homogeneous.

    Arguments:
    ---------
    space (BilinearMapSpace):
        A space closed under taking homogeneous parts, such as D or D_comm of a
        graded algebra.
    grading (Grading):
        Grading of the algebra the maps act on.

    Returns:
    -------
    HomogeneousDecomposition whose component bases together form a basis of
    space. An AssertionError is raised if the space is not closed under taking
    homogeneous parts, which for D and D_comm would indicate a bug.
    """
    dim = space.ambient_dim
    pieces: Dict[int, List[BilinearMap]] = {}
    for phi in space.basis:
        for deg, part in homogeneous_parts(phi, grading).items():
            pieces.setdefault(deg, []).append(part)
    components = {
        deg: [
            BilinearMap.from_flat(dim, v)
            for v in span_basis((p.flatten() for p in parts), dim**3)
        ]
        for deg, parts in pieces.items()
    }
    decomp = HomogeneousDecomposition(dim, components, space.kind)
    assert decomp.total_dim == space.dim, (
        f"Homogeneous pieces span dimension {decomp.total_dim}, space has {space.dim}."
    )
    for part in (p for parts in components.values() for p in parts):
        assert space.contains(part), "A homogeneous piece left the space."
    return decomp
