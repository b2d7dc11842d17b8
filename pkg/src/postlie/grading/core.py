r"""Gradings of algebras by the integers or by a cyclic group Z/n.

A grading assigns a degree to each basis vector; it is compatible with the
bracket when [b_i, b_j] only has components of degree deg(i) + deg(j).
Integer gradings use modulus 0; Z/n gradings store degrees reduced to 0..n-1.
"""

from typing import Dict, Final, List, Optional, Sequence, Union
from ..errors import DimensionMismatch, GradingIncompatible, InvalidGrading
from ..lie import BracketAlgebra, LieAlgebra

INTEGERS: Final = 0


class Grading:
    r"""Assignment of a group element to every basis vector.

    The group is Z when modulus is 0 and Z/modulus otherwise.
    """

    def __init__(self, degrees: Sequence[int], modulus: int = INTEGERS) -> None:
        """Initialize a grading.

        Arguments:
        ---------
        degrees (list of integers):
            Degree of each basis vector. For Z/n, any integer representative is
            accepted and reduced.
        modulus (integer):
            0 for the integers, n >= 1 for Z/n.
        """
        if modulus < 0:
            raise InvalidGrading(
                f"Modulus must be 0 (integers) or positive, got {modulus}."
            )
        self._modulus = modulus
        self._degrees = [self.reduce(int(d)) for d in degrees]

    @classmethod
    def trivial(cls, dim: int) -> "Grading":
        """Everything in degree 0 of Z/1."""
        return cls([0] * dim, modulus=1)

    @property
    def modulus(self) -> int:
        """0 for Z, n for Z/n."""
        return self._modulus

    @property
    def is_cyclic(self) -> bool:
        """Whether the group is finite cyclic."""
        return self._modulus > 0

    @property
    def group(self) -> str:
        """Name of the grading group, "Z" or "Z/n"."""
        return "Z" if self._modulus == INTEGERS else f"Z/{self._modulus}"

    @property
    def degrees(self) -> List[int]:
        """Degrees of the basis vectors."""
        return list(self._degrees)

    def __len__(self) -> int:
        return len(self._degrees)

    def degree(self, i: int) -> int:
        """Degree of basis vector i."""
        return self._degrees[i]

    def reduce(self, value: int) -> int:
        """Canonical representative of a group element."""
        return value % self._modulus if self._modulus else value

    def add(self, *values: int) -> int:
        """Group sum."""
        return self.reduce(sum(values))

    def component(self, value: int) -> List[int]:
        """Basis indices of the given degree."""
        target = self.reduce(value)
        return [i for i, d in enumerate(self._degrees) if d == target]

    def components(self) -> Dict[int, List[int]]:
        """All nonempty homogeneous components, keyed by degree."""
        out: Dict[int, List[int]] = {}
        for i, d in enumerate(self._degrees):
            out.setdefault(d, []).append(i)
        return dict(sorted(out.items()))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Grading):
            return NotImplemented
        return self._modulus == other.modulus and self._degrees == other._degrees

    def __hash__(self) -> int:
        return hash((self._modulus, tuple(self._degrees)))

    def __repr__(self) -> str:
        return f"Grading({self.group}, {self._degrees})"


def check_grading(alg: BracketAlgebra, grading: Grading) -> None:
    """Raise GradingIncompatible on the first pair whose bracket leaves its degree.

    Undefined brackets of partial algebras are skipped.
    """
    if len(grading) != alg.dim:
        raise DimensionMismatch(
            f"Grading has {len(grading)} degrees for an algebra of dimension {alg.dim}."
        )
    for i in range(alg.dim):
        for j in range(i + 1, alg.dim):
            vec = alg.bracket(i, j)
            if not vec:
                continue
            target = grading.add(grading.degree(i), grading.degree(j))
            stray = [k for k in sorted(vec) if grading.degree(k) != target]
            if stray:
                raise GradingIncompatible((i, j), stray)


class GradedLieAlgebra:
    r"""A Lie algebra together with a compatible grading."""

    def __init__(self, algebra: LieAlgebra, grading: Grading) -> None:
        """Initialize; use attach_grading for validation."""
        self._algebra = algebra
        self._grading = grading

    @property
    def algebra(self) -> LieAlgebra:
        """Underlying algebra."""
        return self._algebra

    @property
    def grading(self) -> Grading:
        """The grading."""
        return self._grading

    @property
    def dim(self) -> int:
        """Dimension."""
        return self._algebra.dim

    @property
    def labels(self) -> List[str]:
        """Basis labels."""
        return self._algebra.labels

    @property
    def name(self) -> Optional[str]:
        """Name of the underlying algebra."""
        return self._algebra.name

    def __repr__(self) -> str:
        return f"GradedLieAlgebra({self._algebra!r}, {self._grading.group})"


def attach_grading(alg: LieAlgebra, grading: Grading) -> GradedLieAlgebra:
    """Validate a grading against the bracket and bundle the two.

    Raises GradingIncompatible with the offending pair and stray components.
    """
    check_grading(alg, grading)
    return GradedLieAlgebra(alg, grading)


def as_graded(alg: Union[LieAlgebra, GradedLieAlgebra]) -> GradedLieAlgebra:
    """Graded view of an algebra, using the trivial Z/1 grading if none is given."""
    if isinstance(alg, GradedLieAlgebra):
        return alg
    return GradedLieAlgebra(alg, Grading.trivial(alg.dim))


def underlying(alg: Union[LieAlgebra, GradedLieAlgebra]) -> LieAlgebra:
    """The plain algebra behind a possibly graded one."""
    return alg.algebra if isinstance(alg, GradedLieAlgebra) else alg
