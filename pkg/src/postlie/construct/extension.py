r"""One-dimensional extensions of a Lie algebra.

semidirect_by_derivation adjoins an element D acting on L by a derivation;
central_extension adjoins a central element z through a 2-cocycle. In both
cases the new basis vector is appended last, and the result remembers how it
was built through its extension attribute.
"""

import logging
from fractions import Fraction
from itertools import combinations
from typing import Dict, Final, NamedTuple, Optional, Sequence, Tuple
from ..errors import HypothesisViolated, NotACocycle, NotADerivation
from ..lie import (
    Cocycle2,
    LieAlgebra,
    LinearMap,
    is_coboundary,
    is_cocycle,
    is_derivation,
    is_inner_derivation,
    pick_nontrivial_cocycle,
)
from ..linalg import SparseVector
from .algebras import (
    CommutativeAlgebra,
    contracted_laurent_algebra,
    euler_derivation,
    truncated_polynomial_algebra,
)
from .current import current_algebra, lift_derivation

_LOG = logging.getLogger(__name__)

SEMIDIRECT_KIND: Final = "semidirect"
CENTRAL_KIND: Final = "central"

TRUNCATION_DEGREES: Final = (2, 3, 4)


class ExtensionSpec:
    r"""Records how an extension L + K*new was built.

    Attributes:
    ----------
    kind:
        SEMIDIRECT_KIND or CENTRAL_KIND.
    base:
        The algebra L being extended.
    new_label:
        Label of the adjoined basis vector (index base.dim).
    derivation:
        The derivation D for semidirect extensions, else None.
    cocycle:
        The cocycle xi for central extensions, else None.
    is_outer:
        For semidirect extensions, whether D is not inner (computed).
    is_nontrivial:
        For central extensions, whether xi is not a coboundary (computed).
    """

    def __init__(
        self,
        kind: str,
        base: LieAlgebra,
        new_label: str,
        derivation: Optional[LinearMap] = None,
        cocycle: Optional[Cocycle2] = None,
    ) -> None:
        """Initialize and compute the outer/nontrivial flags."""
        if kind not in (SEMIDIRECT_KIND, CENTRAL_KIND):
            raise ValueError(f"Unknown extension kind {kind!r}.")
        self.kind = kind
        self.base = base
        self.new_label = new_label
        self.derivation = derivation
        self.cocycle = cocycle
        self.is_outer: Optional[bool] = None
        self.is_nontrivial: Optional[bool] = None
        if derivation is not None:
            self.is_outer = not is_inner_derivation(base, derivation)
        if cocycle is not None:
            self.is_nontrivial = not is_coboundary(base, cocycle)

    @property
    def new_index(self) -> int:
        """Index of the adjoined basis vector."""
        return self.base.dim

    def __repr__(self) -> str:
        return f"ExtensionSpec({self.kind}, base={self.base!r}, new={self.new_label})"


def semidirect_by_derivation(
    alg: LieAlgebra, dmap: LinearMap, label: str = "D", name: Optional[str] = None
) -> LieAlgebra:
    """The semidirect sum L + K*D with [D, x] = D(x).

    Arguments:
    ---------
    alg (LieAlgebra):
        The algebra L.
    dmap (LinearMap):
        A derivation of L; NotADerivation is raised otherwise.
    label (string):
        Label of the new basis vector.
    name (string or None):
        Name of the result.

    Returns:
    -------
    LieAlgebra of dimension dim L + 1 whose extension attribute records D and
    whether it is outer.
    """
    if not is_derivation(alg, dmap):
        raise NotADerivation(f"The given map is not a derivation of {alg!r}.")
    n = alg.dim
    table: Dict[Tuple[int, int], SparseVector] = alg.upper_table()
    for j in range(n):
        img = dmap.image(j)
        if img:
            table[(j, n)] = {k: -v for k, v in img.items()}
    spec = ExtensionSpec(SEMIDIRECT_KIND, alg, label, derivation=dmap)
    _LOG.debug("semidirect extension of %r, outer=%s", alg, spec.is_outer)
    return LieAlgebra(
        n + 1,
        [*alg.labels, label],
        table,
        validate=True,
        extension=spec,
        name=name if name is not None else f"({alg.name or 'L'})+K{label}",
    )


def central_extension(
    alg: LieAlgebra, xi: Cocycle2, label: str = "z", name: Optional[str] = None
) -> LieAlgebra:
    """The central extension with bracket [x,y] + xi(x,y) z.

    Arguments:
    ---------
    alg (LieAlgebra):
        The algebra L.
    xi (Cocycle2):
        A 2-cocycle of L; NotACocycle is raised otherwise.
    label (string):
        Label of the central element.
    name (string or None):
        Name of the result.

    Returns:
    -------
    LieAlgebra of dimension dim L + 1 whose extension attribute records xi and
    whether it is a coboundary.
    """
    if xi.dim != alg.dim or not is_cocycle(alg, xi):
        raise NotACocycle(f"The given form is not a 2-cocycle of {alg!r}.")
    n = alg.dim
    table: Dict[Tuple[int, int], SparseVector] = {}
    for i, j in combinations(range(n), 2):
        vec = dict(alg.bracket(i, j))
        val = xi.value(i, j)
        if val:
            vec[n] = val
        if vec:
            table[(i, j)] = vec
    spec = ExtensionSpec(CENTRAL_KIND, alg, label, cocycle=xi)
    _LOG.debug("central extension of %r, nontrivial=%s", alg, spec.is_nontrivial)
    return LieAlgebra(
        n + 1,
        [*alg.labels, label],
        table,
        validate=True,
        extension=spec,
        name=name if name is not None else f"({alg.name or 'L'})+K{label}",
    )


def unit_vector(index: int) -> SparseVector:
    """Coordinate vector of a single basis element."""
    return {index: Fraction(1)}


def euler_extension(
    alg: LieAlgebra, coeffs: CommutativeAlgebra, label: str = "D"
) -> LieAlgebra:
    """The semidirect sum (L (x) A) + K*D with D = id (x) Euler derivation of A."""
    current = current_algebra(alg, coeffs)
    dmap = lift_derivation(alg, coeffs, euler_derivation(coeffs))
    return semidirect_by_derivation(
        current, dmap, label=label, name=f"({current.name})+K{label}"
    )


class ExtendableCurrent(NamedTuple):
    """An Euler extension with H^2 != 0 and a nontrivial cocycle on it.

    fallback is true when the contracted Laurent base had to be used.
    """

    algebra: LieAlgebra
    cocycle: Cocycle2
    coefficients: CommutativeAlgebra
    fallback: bool


def extendable_euler_extension(
    alg: LieAlgebra, degrees: Sequence[int] = TRUNCATION_DEGREES
) -> ExtendableCurrent:
    r"""First Euler extension of a current algebra of alg with H^2 != 0.

    Arguments:
    ---------
    alg (LieAlgebra):
        The algebra L.
    degrees (sequence of integers):
        Truncation degrees n of the bases Q[t]/(t^n), tried in order.

    Returns:
    -------
    ExtendableCurrent. When every truncated base gives H^2 = 0 the contracted
    Laurent base is used and the fallback flag is set; HypothesisViolated is
    raised if that base has H^2 = 0 too.
    """
    for n in degrees:
        coeffs = truncated_polynomial_algebra(n)
        ext = euler_extension(alg, coeffs)
        xi = pick_nontrivial_cocycle(ext)
        _LOG.debug("%r: H^2 %s", ext, "nonzero" if xi is not None else "zero")
        if xi is not None:
            return ExtendableCurrent(ext, xi, coeffs, False)
    coeffs = contracted_laurent_algebra()
    ext = euler_extension(alg, coeffs)
    xi = pick_nontrivial_cocycle(ext)
    if xi is None:
        raise HypothesisViolated("some Euler extension has nonzero H^2", ext)
    _LOG.info("no truncated base has H^2 != 0; falling back to %s", coeffs.name)
    return ExtendableCurrent(ext, xi, coeffs, True)
