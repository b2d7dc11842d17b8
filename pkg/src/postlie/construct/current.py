r"""Current Lie algebras L (x) A and maps lifted to them.

The basis of L (x) A is x (x) a for x in the basis of L and a in the basis of
A, ordered with the A index running fastest: index(x, a) = x*dim(A) + a. The
bracket is [x (x) a, y (x) b] = [x,y] (x) ab.
"""

from fractions import Fraction
from itertools import combinations
from typing import Dict, Optional, Tuple
from ..bilinear.core import BilinearMap
from ..lie import Cocycle2, LieAlgebra, LinearMap, killing_form
from ..linalg import SparseVector
from .algebras import CommutativeAlgebra


def tensor_index(alg: LieAlgebra, coeffs: CommutativeAlgebra, x: int, a: int) -> int:
    """Index of x (x) a in the basis of the current algebra."""
    del alg
    return x * coeffs.dim + a


def _tensor(vec_l: SparseVector, vec_a: SparseVector, adim: int) -> SparseVector:
    out: SparseVector = {}
    for k, u in vec_l.items():
        for m, v in vec_a.items():
            out[k * adim + m] = u * v
    return out


def current_algebra(
    alg: LieAlgebra, coeffs: CommutativeAlgebra, name: Optional[str] = None
) -> LieAlgebra:
    r"""The current algebra L (x) A.

    Arguments:
    ---------
    alg (LieAlgebra):
        The Lie algebra L.
    coeffs (CommutativeAlgebra):
        The commutative associative algebra A.
    name (string or None):
        Name of the result; defaults to "L(x)A" from the input names.

    Returns:
    -------
    LieAlgebra of dimension dim L * dim A, Jacobi revalidated.
    """
    adim = coeffs.dim
    labels = [
        f"{xl}*{al}" if al != "1" else xl
        for xl in alg.labels
        for al in coeffs.labels
    ]
    n = alg.dim * adim
    table: Dict[Tuple[int, int], SparseVector] = {}
    for i, j in combinations(range(n), 2):
        x, a = divmod(i, adim)
        y, b = divmod(j, adim)
        vec = _tensor(alg.bracket(x, y), coeffs.product(a, b), adim)
        if vec:
            table[(i, j)] = vec
    if name is None:
        name = f"{alg.name or 'L'}(x){coeffs.name or 'A'}"
    return LieAlgebra(n, labels, table, validate=True, name=name)


def lift_derivation(
    alg: LieAlgebra, coeffs: CommutativeAlgebra, alpha: LinearMap
) -> LinearMap:
    """The map id (x) alpha on L (x) A: x (x) a -> x (x) alpha(a)."""
    adim = coeffs.dim
    images = []
    for x in range(alg.dim):
        for a in range(adim):
            images.append(_tensor({x: Fraction(1)}, alpha.image(a), adim))
    return LinearMap(alg.dim * adim, images)


def tensor_lift(
    alg: LieAlgebra, coeffs: CommutativeAlgebra, phi: BilinearMap, alpha: BilinearMap
) -> BilinearMap:
    """The bilinear map (x (x) a, y (x) b) -> phi(x,y) (x) alpha(a,b) on L (x) A."""
    adim = coeffs.dim
    n = alg.dim * adim
    values: Dict[Tuple[int, int], SparseVector] = {}
    for (x, y) in phi.pairs():
        for (a, b) in alpha.pairs():
            vec = _tensor(phi.value(x, y), alpha.value(a, b), adim)
            if vec:
                values[(x * adim + a, y * adim + b)] = vec
    return BilinearMap.from_values(n, values)


def multiplication_map(coeffs: CommutativeAlgebra, twist: LinearMap) -> BilinearMap:
    """The bilinear map (a, b) -> twist(a) b on A."""
    values: Dict[Tuple[int, int], SparseVector] = {}
    for a in range(coeffs.dim):
        for b in range(coeffs.dim):
            vec = coeffs.multiply(twist.image(a), {b: Fraction(1)})
            if vec:
                values[(a, b)] = vec
    return BilinearMap.from_values(coeffs.dim, values)


def pairing_cocycle(
    alg: LieAlgebra, coeffs: CommutativeAlgebra, omega: Cocycle2
) -> Cocycle2:
    r"""The form xi(x (x) a, y (x) b) = kappa(x, y) omega(a, b) on L (x) A.

    kappa is the Killing form of L. The result is a 2-cocycle whenever omega is
    antisymmetric with omega(ab, c) + omega(bc, a) + omega(ca, b) = 0; callers
    building extensions validate it anyway.
    """
    adim = coeffs.dim
    kmat = killing_form(alg)
    values: Dict[Tuple[int, int], Fraction] = {}
    # omega lists pairs a < b, so each unordered pair of tensors appears once
    for (a, b), wval in omega.items():
        for x in range(alg.dim):
            for y in range(alg.dim):
                if kmat[x, y]:
                    values[(x * adim + a, y * adim + b)] = kmat[x, y] * wval
    return Cocycle2(alg.dim * adim, values)
