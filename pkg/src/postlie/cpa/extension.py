r"""Structure of CPA maps on one-dimensional extensions L + K*E.

E is the adjoined vector: a derivation D for semidirect sums, a central z for
central extensions. A symmetric map Phi on the extension splits along the
direct sum as

    Phi(x, y) = phi(x, y) + lam(x, y) E
    Phi(x, E) = psi(x) + mu(x) E
    Phi(E, E) = a + eta E

for x, y in L. For nontrivial central extensions of centerless algebras on
which every CPA structure vanishes, the CPA structures are exactly the
z-valued symmetric forms vanishing on [L,L] + Kz; lemma2_predicted_space
builds that space.
"""

import logging
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Dict, List, Tuple
from ..bilinear import BilinearMap, BilinearMapSpace
from ..construct.extension import CENTRAL_KIND
from ..errors import HypothesisViolated
from ..lie import LieAlgebra, LinearMap, center, derived_subalgebra
from ..linalg import SparseVector, kernel_of_rows
from .solve import DEFAULT_SOLVE_OPTIONS, ZERO_ONLY, SolveOptions, cpa_solve

_LOG = logging.getLogger(__name__)


class ExtensionDecomposition:
    r"""Components (phi, lam, psi, mu, a, eta) of a symmetric map on L + K*E.

    Attributes:
    ----------
    base_dim:
        dim L; E has index base_dim.
    phi:
        BilinearMap on L.
    lam:
        Scalar form on L as {(i, j): value}, symmetric.
    psi:
        LinearMap on L.
    mu:
        Linear functional on L as {i: value}.
    a:
        Element of L.
    eta:
        Scalar.
    """

    def __init__(
        self,
        base_dim: int,
        phi: BilinearMap,
        lam: Dict[Tuple[int, int], Fraction],
        psi: LinearMap,
        mu: SparseVector,
        a: SparseVector,
        eta: Fraction,
    ) -> None:
        """Initialize."""
        self.base_dim = base_dim
        self.phi = phi
        self.lam = dict(lam)
        self.psi = psi
        self.mu = dict(mu)
        self.a = dict(a)
        self.eta = eta

    def reassemble(self) -> BilinearMap:
        """The symmetric map on the extension described by the components."""
        n = self.base_dim
        coeffs: Dict[Tuple[int, int, int], Fraction] = {}
        for i, j, k, val in self.phi.items():
            coeffs[(i, j, k)] = val
        for (i, j), val in self.lam.items():
            coeffs[(i, j, n)] = val
        for i in range(n):
            for k, val in self.psi.image(i).items():
                coeffs[(i, n, k)] = val
                coeffs[(n, i, k)] = val
        for i, val in self.mu.items():
            coeffs[(i, n, n)] = val
            coeffs[(n, i, n)] = val
        for k, val in self.a.items():
            coeffs[(n, n, k)] = val
        if self.eta:
            coeffs[(n, n, n)] = self.eta
        return BilinearMap(n + 1, coeffs)

    def is_zero(self) -> bool:
        """Whether every component vanishes."""
        return (
            self.phi.is_zero()
            and not self.lam
            and self.psi.is_zero()
            and not self.mu
            and not self.a
            and not self.eta
        )

    def __repr__(self) -> str:
        return (
            f"ExtensionDecomposition(phi={self.phi!r}, lam={self.lam}, "
            f"psi={self.psi!r}, "
            f"mu={self.mu}, a={self.a}, eta={self.eta})"
        )


def decompose_extension_map(
    phi: BilinearMap, ext: LieAlgebra
) -> ExtensionDecomposition:
    r"""Split a symmetric map on an extension along L + K*E.

    Arguments:
    ---------
    phi (BilinearMap):
        Symmetric map on ext.
    ext (LieAlgebra):
        Algebra built by semidirect_by_derivation or central_extension.

    Returns:
    -------
    ExtensionDecomposition whose reassemble() gives phi back.

    Notes:
    -----
    Raises ValueError if ext is not an extension, if the dimensions differ, or
    if phi is not symmetric.
    """
    spec = ext.extension
    if spec is None:
        raise ValueError(f"{ext!r} was not built as a one-dimensional extension.")
    if phi.dim != ext.dim:
        raise ValueError("Map dimension differs from the extension.")
    if not phi.is_symmetric:
        raise ValueError("Only symmetric maps decompose along the extension.")
    n = spec.new_index
    base_coeffs: Dict[Tuple[int, int, int], Fraction] = {}
    lam: Dict[Tuple[int, int], Fraction] = {}
    images: List[SparseVector] = [{} for _ in range(n)]
    mu: SparseVector = {}
    a: SparseVector = {}
    eta = Fraction(0)
    for i, j, k, val in phi.items():
        if i < n and j < n:
            if k < n:
                base_coeffs[(i, j, k)] = val
            else:
                lam[(i, j)] = val
        elif i < n:
            if k < n:
                images[i][k] = val
            else:
                mu[i] = val
        elif j == n:
            if k < n:
                a[k] = val
            else:
                eta = val
    return ExtensionDecomposition(
        n, BilinearMap(n, base_coeffs), lam, LinearMap(n, images), mu, a, eta
    )


def _functionals_off_derived(ext: LieAlgebra) -> List[SparseVector]:
    """Functionals on ext vanishing on [L,L] (L the base) and on the new vector."""
    spec = ext.extension
    assert spec is not None
    n = spec.new_index
    rows = [dict(vec) for vec in derived_subalgebra(spec.base).basis]
    rows.append({n: Fraction(1)})
    return kernel_of_rows(rows, n + 1)


def lemma2_predicted_space(
    ext: LieAlgebra, options: SolveOptions = DEFAULT_SOLVE_OPTIONS
) -> BilinearMapSpace:
    r"""Predicted CPA structures of a nontrivial central extension.

    Arguments:
    ---------
    ext (LieAlgebra):
        Algebra built by central_extension from a base L.
    options (SolveOptions):
        Used to confirm that every CPA structure on L vanishes.

    Returns:
    -------
    Space of z-valued symmetric maps vanishing whenever an argument lies in
    [L,L] + Kz, with basis (f_a f_b + f_b f_a) z for a < b and f_a f_a z,
    where f_1..f_q span the functionals vanishing on [L,L] + Kz. Its
    dimension is q(q+1)/2.

    Notes:
    -----
    Raises HypothesisViolated naming the failed hypothesis: the extension must
    be central and nontrivial, L centerless, and cpa_solve(L) ZeroOnly.
    """
    spec = ext.extension
    if spec is None or spec.kind != CENTRAL_KIND:
        raise HypothesisViolated("the algebra is a central extension")
    if not spec.is_nontrivial:
        raise HypothesisViolated(
            "the extending cocycle is not a coboundary", spec.cocycle
        )
    base = spec.base
    cen = center(base)
    if cen.dim:
        raise HypothesisViolated("the base algebra is centerless", cen.basis[0])
    report = cpa_solve(base, options)
    if report.verdict != ZERO_ONLY:
        witness = report.witnesses[0] if report.witnesses else report.verdict
        raise HypothesisViolated("every CPA structure on the base vanishes", witness)
    n = spec.new_index
    funcs = _functionals_off_derived(ext)
    maps = []
    for fa, fb in combinations_with_replacement(funcs, 2):
        coeffs: Dict[Tuple[int, int, int], Fraction] = {}
        for i, u in fa.items():
            for j, v in fb.items():
                coeffs[(i, j, n)] = coeffs.get((i, j, n), Fraction(0)) + u * v
                if fa is not fb:
                    coeffs[(j, i, n)] = coeffs.get((j, i, n), Fraction(0)) + u * v
        maps.append(BilinearMap(ext.dim, coeffs))
    q = len(funcs)
    _LOG.info("%r: predicted CPA space of dim %d (q = %d)", ext, len(maps), q)
    return BilinearMapSpace(ext.dim, maps)
