r"""Classical linear invariants of a Lie algebra.

Each invariant is the kernel (or span) of an exact linear system built from the
structure constants. Results are cached on the algebra object, which is
immutable.
"""

import logging
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from typing import Any, Callable, Dict, List, TypeVar
from ..linalg import Matrix, SparseVector, kernel_of_rows, span_basis
from ..util import add_into
from .core import LieAlgebra, LinearMap, Subspace

_LOG = logging.getLogger(__name__)

T = TypeVar("T")


def _cached(alg: LieAlgebra, key: str, compute: Callable[[], T]) -> T:
    # pylint: disable=protected-access
    cache: Dict[str, Any] = alg._cache
    if key not in cache:
        cache[key] = compute()
    return cache[key]


def center(alg: LieAlgebra) -> Subspace:
    """Center {x : [x, L] = 0}, the kernel of the stacked ad-matrices."""

    def compute() -> Subspace:
        n = alg.dim
        rows: List[SparseVector] = []
        for j in range(n):
            # coordinate k of [x, b_j] = sum_i x_i c_{ij}^k
            by_k: Dict[int, SparseVector] = {}
            for i in range(n):
                for k, val in alg.bracket(i, j).items():
                    by_k.setdefault(k, {})[i] = val
            rows.extend(by_k[k] for k in sorted(by_k))
        return Subspace(n, kernel_of_rows(rows, n))

    return _cached(alg, "center", compute)


def derived_subalgebra(alg: LieAlgebra) -> Subspace:
    """Span of all brackets [b_i, b_j]."""
    return _cached(
        alg,
        "derived",
        lambda: Subspace(
            alg.dim,
            [alg.bracket(i, j) for i, j in combinations(range(alg.dim), 2)],
        ),
    )


def is_perfect(alg: LieAlgebra) -> bool:
    """Whether [L, L] = L."""
    return derived_subalgebra(alg).dim == alg.dim


def is_centerless(alg: LieAlgebra) -> bool:
    """Whether the center is zero."""
    return center(alg).dim == 0


def _flat(k: int, j: int, n: int) -> int:
    # coordinate k of the image of b_j, see LinearMap.flatten
    return k * n + j


def derivation_space(alg: LieAlgebra) -> List[LinearMap]:
    r"""Basis of the derivations {D : D[x,y] = [Dx,y] + [x,Dy]}.

    Returns:
    -------
    Canonical kernel basis, as LinearMap objects.
    """

    def compute() -> List[LinearMap]:
        n = alg.dim
        rows = []
        for i, j in combinations(range(n), 2):
            out: Dict[int, SparseVector] = {}
            # D([b_i, b_j])
            for u, val in alg.bracket(i, j).items():
                for m in range(n):
                    add_into(out.setdefault(m, {}), {_flat(m, u, n): val}, Fraction(1))
            # - [D b_i, b_j] - [b_i, D b_j]
            for k in range(n):
                for m, val in alg.bracket(k, j).items():
                    add_into(out.setdefault(m, {}), {_flat(k, i, n): val}, Fraction(-1))
                for m, val in alg.bracket(i, k).items():
                    add_into(out.setdefault(m, {}), {_flat(k, j, n): val}, Fraction(-1))
            rows.extend(out[m] for m in sorted(out))
        kern = kernel_of_rows(rows, n * n)
        _LOG.debug("derivations of %r: dim %d", alg, len(kern))
        return [LinearMap.from_flat(n, v) for v in kern]

    return _cached(alg, "derivations", compute)


def inner_derivation_space(alg: LieAlgebra) -> List[LinearMap]:
    """Canonical basis of the image of ad."""

    def compute() -> List[LinearMap]:
        n = alg.dim
        ads = [
            LinearMap(n, [alg.bracket(i, j) for j in range(n)]).flatten()
            for i in range(n)
        ]
        return [LinearMap.from_flat(n, v) for v in span_basis(ads, n * n)]

    return _cached(alg, "inner", compute)


def all_derivations_inner(alg: LieAlgebra) -> bool:
    """Whether every derivation is inner (dimensions agree)."""
    return len(derivation_space(alg)) == len(inner_derivation_space(alg))


def is_derivation(alg: LieAlgebra, dmap: LinearMap) -> bool:
    """Check the derivation rule on all basis pairs."""
    n = alg.dim
    if dmap.dim != n:
        return False
    for i, j in combinations(range(n), 2):
        lhs = dmap(alg.bracket(i, j))
        rhs = alg.bracket_vectors(dmap.image(i), {j: Fraction(1)})
        add_into(rhs, alg.bracket_vectors({i: Fraction(1)}, dmap.image(j)), Fraction(1))
        if lhs != rhs:
            return False
    return True


def is_inner_derivation(alg: LieAlgebra, dmap: LinearMap) -> bool:
    """Whether dmap lies in the span of the ad b_i."""
    inner = Subspace(alg.dim**2, [d.flatten() for d in inner_derivation_space(alg)])
    return inner.contains(dmap.flatten())


def centroid(alg: LieAlgebra) -> List[LinearMap]:
    """Basis of the centroid {g : g[x,y] = [gx, y]}."""

    def compute() -> List[LinearMap]:
        n = alg.dim
        rows = []
        for i in range(n):
            for j in range(n):
                out: Dict[int, SparseVector] = {}
                for u, val in alg.bracket(i, j).items():
                    for m in range(n):
                        row = out.setdefault(m, {})
                        add_into(row, {_flat(m, u, n): val}, Fraction(1))
                for k in range(n):
                    for m, val in alg.bracket(k, j).items():
                        row = out.setdefault(m, {})
                        add_into(row, {_flat(k, i, n): val}, Fraction(-1))
                rows.extend(out[m] for m in sorted(out))
        return [LinearMap.from_flat(n, v) for v in kernel_of_rows(rows, n * n)]

    return _cached(alg, "centroid", compute)


def is_central(alg: LieAlgebra) -> bool:
    """Whether the centroid consists of the scalars only."""
    return len(centroid(alg)) == 1


def skew_invariance_kernel(alg: LieAlgebra) -> List[LinearMap]:
    r"""Basis of {w : [w x, y] + [x, w y] = 0 for all x, y}.

    This is the linear part of the third condition of the vanishing corollary;
    the extra requirement that the image be abelian is not imposed, so a zero
    kernel is a sufficient condition.
    """

    def compute() -> List[LinearMap]:
        n = alg.dim
        rows = []
        for i, j in combinations_with_replacement(range(n), 2):
            out: Dict[int, SparseVector] = {}
            for k in range(n):
                for m, val in alg.bracket(k, j).items():
                    add_into(out.setdefault(m, {}), {_flat(k, i, n): val}, Fraction(1))
                for m, val in alg.bracket(i, k).items():
                    add_into(out.setdefault(m, {}), {_flat(k, j, n): val}, Fraction(1))
            rows.extend(out[m] for m in sorted(out) if out[m])
        return [LinearMap.from_flat(n, v) for v in kernel_of_rows(rows, n * n)]

    return _cached(alg, "skew_kernel", compute)


def killing_form(alg: LieAlgebra) -> Matrix:
    r"""Killing form kappa(b_i, b_j) = trace(ad b_i ad b_j).

    Invariance kappa([x,y],z) = kappa(x,[y,z]) is asserted on all basis triples.
    """

    def compute() -> Matrix:
        n = alg.dim
        entries = []
        for i in range(n):
            for j in range(n):
                total = Fraction(0)
                for k in range(n):
                    for m, val in alg.bracket(j, k).items():
                        total += val * alg.bracket(i, m).get(k, 0)
                entries.append(total)
        kmat = Matrix(n, n, entries)
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    lhs = sum(
                        (v * kmat[u, k] for u, v in alg.bracket(i, j).items()),
                        Fraction(0),
                    )
                    rhs = sum(
                        (v * kmat[i, u] for u, v in alg.bracket(j, k).items()),
                        Fraction(0),
                    )
                    assert lhs == rhs, f"Killing form not invariant on {(i, j, k)}"
        return kmat

    return _cached(alg, "killing", compute)


def killing_value(alg: LieAlgebra, u: SparseVector, v: SparseVector) -> Fraction:
    """Killing form on two coordinate vectors."""
    kmat = killing_form(alg)
    return sum(
        (a * b * kmat[i, j] for i, a in u.items() for j, b in v.items()), Fraction(0)
    )
