r"""Direct evaluation of the identities defining D, Dcomm, C and CPA structures.

The functions here recompute every identity from the bracket and the map on
basis vectors. They share no code with the assemblers, so solver output can be
re-verified after the fact.

On windows only exact instances are evaluated. The map is split into its
homogeneous parts; the derivation rule is linear and is checked part by part.
For the quadratic identity at (x, y, z) and output w, every pair of degrees
(l1, l2) with l1 + l2 = deg w - deg x - deg y - deg z contributes through
phi_l1(x, phi_l2(y,z)); the instance is exact when [x,y] is defined and each
intermediate phi_l2(y,z), phi_l2(x,z) has in-window degree. This rule,
exact_post_lie_instance, is the one definition of exactness; the quadratic
ideal in cpa.ideal imports it.
"""

from fractions import Fraction
from itertools import combinations, product
from typing import Dict, Final, Iterable, List, NamedTuple, Optional, Tuple
from ..lie import BracketAlgebra
from ..linalg import SparseVector
from ..util import add_into
from .core import BilinearMap

SYMMETRY: Final = "symmetry"
DERIVATION: Final = "derivation"
CENTROID: Final = "centroid"
POST_LIE: Final = "post-lie"


class Violation(NamedTuple):
    """First failing instance of an identity."""

    identity: str
    triple: Tuple[int, ...]
    residual: SparseVector

    def describe(self, alg: BracketAlgebra) -> str:
        """Human readable description using the basis labels."""
        labels = ", ".join(alg.label(i) for i in self.triple)
        residual = alg.format_vector(self.residual)
        return f"{self.identity} fails at ({labels}): residual {residual}"


def _basis(i: int) -> Dict[int, Fraction]:
    return {i: Fraction(1)}


def _degree_parts(alg: BracketAlgebra, phi: BilinearMap) -> Dict[int, BilinearMap]:
    """Homogeneous parts of phi for a window; a single part 0 otherwise."""
    degrees = getattr(alg, "degrees", None)
    if not alg.is_partial or degrees is None:
        return {0: phi}
    buckets: Dict[int, Dict[Tuple[int, int, int], Fraction]] = {}
    for i, j, k, val in phi.items():
        buckets.setdefault(degrees[k] - degrees[i] - degrees[j], {})[(i, j, k)] = val
    return {deg: BilinearMap(phi.dim, c) for deg, c in sorted(buckets.items())}


def _in_window(alg: BracketAlgebra, degree: int) -> bool:
    if not alg.is_partial:
        return True
    return alg.in_window(degree)  # type: ignore [attr-defined]


def _degree(alg: BracketAlgebra, i: int) -> int:
    return alg.degree(i) if alg.is_partial else 0  # type: ignore [attr-defined]


def check_symmetry(phi: BilinearMap) -> Optional[Violation]:
    """Check phi(x,y) = phi(y,x) on basis pairs."""
    for i, j in combinations(range(phi.dim), 2):
        res = dict(phi.value(i, j))
        add_into(res, phi.value(j, i), Fraction(-1))
        if res:
            return Violation(SYMMETRY, (i, j), res)
    return None


def check_derivation(
    alg: BracketAlgebra, phi: BilinearMap, centroid: bool = False
) -> Optional[Violation]:
    r"""Check phi(x,[y,z]) = [phi(x,y),z] + [y,phi(x,z)] on exact basis triples.

    With centroid=True the second term is dropped and all ordered (y, z) are
    checked.
    """
    n = alg.dim
    for deg, part in _degree_parts(alg, phi).items():
        for x, y, z in product(range(n), repeat=3):
            if not centroid and y >= z:
                continue
            yz = alg.bracket(y, z)
            if yz is None:
                continue
            dx, dy, dz = _degree(alg, x), _degree(alg, y), _degree(alg, z)
            if not (
                _in_window(alg, dx + dy + deg)
                and _in_window(alg, dx + dz + deg)
                and _in_window(alg, dx + dy + dz + deg)
            ):
                continue
            lhs = part(_basis(x), yz)
            first = alg.bracket_vectors(part.value(x, y), _basis(z))
            assert first is not None
            add_into(lhs, first, Fraction(-1))
            if not centroid:
                second = alg.bracket_vectors(_basis(y), part.value(x, z))
                assert second is not None
                add_into(lhs, second, Fraction(-1))
            if lhs:
                return Violation(CENTROID if centroid else DERIVATION, (x, y, z), lhs)
    return None


def exact_post_lie_instance(
    alg: BracketAlgebra,
    degrees: Iterable[int],
    x: int,
    y: int,
    z: int,
    output_degree: int,
) -> bool:
    r"""Whether the identity at (x, y, z) is exact for outputs of the given degree.

    [x,y] must be defined, and for every split l1 + l2 of the total shift with
    both parts in degrees, phi_l2(y,z) and phi_l2(x,z) must have in-window
    degree. The quadratic ideal of the solver keeps exactly these instances.
    """
    if not alg.is_partial:
        return True
    if alg.bracket(x, y) is None:
        return False
    degs = set(degrees)
    dx, dy, dz = _degree(alg, x), _degree(alg, y), _degree(alg, z)
    shift = output_degree - dx - dy - dz
    for l2 in degs:
        if shift - l2 not in degs:
            continue
        if not (_in_window(alg, dy + dz + l2) and _in_window(alg, dx + dz + l2)):
            return False
    return True


def check_post_lie(
    alg: BracketAlgebra, phi: BilinearMap, degrees: Optional[Iterable[int]] = None
) -> Optional[Violation]:
    r"""Check phi([x,y],z) = phi(x,phi(y,z)) - phi(y,phi(x,z)) on exact instances.

    Arguments:
    ---------
    alg (BracketAlgebra):
        Lie algebra or window.
    phi (BilinearMap):
        The map to check.
    degrees (iterable of integers or None):
        For windows, the degrees the map may have components in; an instance
        is skipped when one of these could leave the window. Defaults to the
        degrees actually present in phi.
    """
    n = alg.dim
    parts = _degree_parts(alg, phi)
    degs = sorted(parts) if degrees is None else sorted(set(degrees))
    for x, y in combinations(range(n), 2):
        for z in range(n):
            xy = alg.bracket(x, y)
            lhs = phi(xy, _basis(z)) if xy is not None else {}
            inner = dict(phi(_basis(x), phi.value(y, z)))
            add_into(inner, phi(_basis(y), phi.value(x, z)), Fraction(-1))
            add_into(inner, lhs, Fraction(-1))
            for w in sorted(inner):
                if not exact_post_lie_instance(alg, degs, x, y, z, _degree(alg, w)):
                    continue
                return Violation(POST_LIE, (x, y, z), {w: inner[w]})
    return None


def check_cpa(
    alg: BracketAlgebra, phi: BilinearMap, degrees: Optional[Iterable[int]] = None
) -> List[Violation]:
    """Check every identity group; the first violation of each failing group."""
    out = []
    for found in (
        check_symmetry(phi),
        check_derivation(alg, phi),
        check_post_lie(alg, phi, degrees),
    ):
        if found is not None:
            out.append(found)
    return out
