r"""Assembles the quadratic ideal of the post-Lie identity over a space of maps.

Given a basis phi_1..phi_m of symmetric derivation maps, the map
phi = sum_a c_a phi_a is written as a table of linear polynomials in the c_a.
For every x < y, every z and every output coordinate w the identity

    phi([x,y],z) - phi(x,phi(y,z)) + phi(y,phi(x,z)) = 0

gives one polynomial, linear in c from the left side and quadratic from the
right. Generators are made monic and deduplicated; they are emitted in the
lexicographic order of (x, y, z, w).

On windows an instance is kept only when it is exact for every map with
homogeneous components of degree in a given set; the default set is
-B..B, the degrees the windowed solver allows.
"""

import logging
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple
from sympy.polys.rings import PolyElement, PolyRing
from ..bilinear import BilinearMap, exact_post_lie_instance
from ..lie import BracketAlgebra
from ..poly import PolyIdeal, make_ring, to_qq

_LOG = logging.getLogger(__name__)

PolyVector = Dict[int, PolyElement]


def generic_map_table(
    ring: PolyRing, basis: Sequence[BilinearMap]
) -> Dict[Tuple[int, int], PolyVector]:
    """Table (i, j) -> {k: sum_a c_a lambda^a_{ij}^k} of the generic map."""
    table: Dict[Tuple[int, int], PolyVector] = {}
    for var, phi in zip(ring.gens, basis):
        for i, j, k, val in phi.items():
            entry = table.setdefault((i, j), {})
            entry[k] = entry.get(k, ring.zero) + var * to_qq(val)
    return {key: {k: p for k, p in vec.items() if p} for key, vec in table.items()}


def apply_generic(
    table: Dict[Tuple[int, int], PolyVector],
    x: int,
    vec: PolyVector,
    out: PolyVector,
    sign: int,
) -> None:
    """out += sign * phi(b_x, vec) for a polynomial-valued vector vec."""
    for u, coeff in vec.items():
        for w, poly in table.get((x, u), {}).items():
            out[w] = out.get(w, coeff.ring.zero) + sign * coeff * poly


def window_degree_set(alg: BracketAlgebra, degree_bound: Optional[int]) -> Set[int]:
    """Degrees -B..B for windows (B defaults to the window bound); {0} otherwise."""
    if not alg.is_partial:
        return {0}
    bound = alg.bound if degree_bound is None else degree_bound  # type: ignore
    return set(range(-bound, bound + 1))


def cpa_quadratic_ideal(
    alg: BracketAlgebra,
    basis: Sequence[BilinearMap],
    degrees: Optional[Iterable[int]] = None,
) -> PolyIdeal:
    r"""Ideal in c1..cm of the post-Lie identity for phi = sum_a c_a basis[a].

    Arguments:
    ---------
    alg (BracketAlgebra):
        Lie algebra or window.
    basis (list of BilinearMap):
        Basis of the symmetric derivation maps (for windows, homogeneous maps
        of degrees in the degree set).
    degrees (iterable of integers or None):
        For windows, the degree set used for exactness; defaults to -N..N.

    Returns:
    -------
    PolyIdeal with one generator per nonvanishing (x < y, z, w) instance,
    made monic and deduplicated; the empty ideal when basis is empty.
    """
    nvars = len(basis)
    if nvars == 0:
        return PolyIdeal(0)
    ring = make_ring(nvars)
    table = generic_map_table(ring, basis)
    degs = window_degree_set(alg, None) if degrees is None else set(degrees)
    n = alg.dim
    gens: List[PolyElement] = []
    skipped = 0
    for x, y in combinations(range(n), 2):
        xy = alg.bracket(x, y)
        for z in range(n):
            out: PolyVector = {}
            if xy is not None:
                # phi([x,y], z)
                for v, val in xy.items():
                    for w, poly in table.get((v, z), {}).items():
                        out[w] = out.get(w, ring.zero) + poly * to_qq(val)
            apply_generic(table, x, table.get((y, z), {}), out, -1)
            apply_generic(table, y, table.get((x, z), {}), out, 1)
            for w in sorted(out):
                poly = out[w]
                if not poly:
                    continue
                if alg.is_partial and not exact_post_lie_instance(
                    alg, degs, x, y, z, alg.degree(w)  # type: ignore [attr-defined]
                ):
                    skipped += 1
                    continue
                gens.append(poly.monic())
    ideal = PolyIdeal(nvars, gens, ring)
    _LOG.debug(
        "post-Lie ideal: %d variables, %d generators, %d inexact instances skipped",
        nvars,
        len(ideal),
        skipped,
    )
    return ideal
