r"""Brute-force CPA solving on all dim^3 structure coefficients.

Here the unknowns are every lambda_{ij}^k at once and the three identities
(symmetry, the derivation rule, the post-Lie identity) are written straight
into one polynomial system. Only the zero-set classification is shared with
cpa_solve, so agreement between the two is a meaningful cross-check on
small algebras.
"""

import logging
from itertools import combinations
from typing import Dict, List, NamedTuple, Optional, Tuple
import numpy as np
from sympy.polys.rings import PolyElement
from ..construct.builtin import abelian, heisenberg, r2, sl
from ..lie import LieAlgebra, change_basis
from ..poly import DEFAULT_BUDGET, GroebnerBudget, PolyIdeal, make_ring, to_qq
from .solve import (
    DEFAULT_SOLVE_OPTIONS,
    INCONCLUSIVE,
    LINEAR_SPACE,
    ZERO_ONLY,
    SolveOptions,
    classify_ideal,
    cpa_solve,
)

_LOG = logging.getLogger(__name__)


def direct_cpa_ideal(alg: LieAlgebra) -> PolyIdeal:
    r"""The CPA system in the n^3 unknowns lambda_{ij}^k, c at (i*n + j)*n + k.

    Symmetry and the derivation rule give linear generators, the post-Lie
    identity quadratic ones.
    """
    n = alg.dim
    if n == 0:
        return PolyIdeal(0)
    ring = make_ring(n**3)
    gens = ring.gens

    def lam(i: int, j: int, k: int) -> PolyElement:
        return gens[(i * n + j) * n + k]

    def phi(i: int, vec: Dict[int, PolyElement]) -> Dict[int, PolyElement]:
        """phi(b_i, vec) for a vector with polynomial coordinates."""
        out: Dict[int, PolyElement] = {}
        for u, coeff in vec.items():
            for k in range(n):
                out[k] = out.get(k, ring.zero) + coeff * lam(i, u, k)
        return out

    def column(i: int, j: int) -> Dict[int, PolyElement]:
        return {k: lam(i, j, k) for k in range(n)}

    def bracket_with(vec: Dict[int, PolyElement], j: int) -> Dict[int, PolyElement]:
        """[vec, b_j]."""
        out: Dict[int, PolyElement] = {}
        for u, coeff in vec.items():
            for k, val in alg.bracket(u, j).items():
                out[k] = out.get(k, ring.zero) + coeff * to_qq(val)
        return out

    polys: List[PolyElement] = []
    for i, j in combinations(range(n), 2):
        for k in range(n):
            polys.append(lam(i, j, k) - lam(j, i, k))
    for x in range(n):
        for y, z in combinations(range(n), 2):
            # phi(x,[y,z]) - [phi(x,y),z] + [phi(x,z),y]
            out: Dict[int, PolyElement] = {}
            for u, val in alg.bracket(y, z).items():
                for k in range(n):
                    out[k] = out.get(k, ring.zero) + lam(x, u, k) * to_qq(val)
            for k, p in bracket_with(column(x, y), z).items():
                out[k] = out.get(k, ring.zero) - p
            for k, p in bracket_with(column(x, z), y).items():
                out[k] = out.get(k, ring.zero) + p
            polys.extend(out[k] for k in sorted(out))
    for x, y in combinations(range(n), 2):
        for z in range(n):
            # phi([x,y],z) - phi(x,phi(y,z)) + phi(y,phi(x,z))
            out = {}
            for u, val in alg.bracket(x, y).items():
                for k in range(n):
                    out[k] = out.get(k, ring.zero) + lam(u, z, k) * to_qq(val)
            for k, p in phi(x, column(y, z)).items():
                out[k] = out.get(k, ring.zero) - p
            for k, p in phi(y, column(x, z)).items():
                out[k] = out.get(k, ring.zero) + p
            polys.extend(out[k] for k in sorted(out))
    return PolyIdeal(n**3, [p.monic() for p in polys if p], ring)


class OracleResult(NamedTuple):
    """Verdict of the direct solve and the dimension of a linear solution set."""

    verdict: str
    solution_dim: Optional[int]


def direct_cpa_solve(
    alg: LieAlgebra, budget: GroebnerBudget = DEFAULT_BUDGET
) -> OracleResult:
    """Classify the zero set of direct_cpa_ideal."""
    found = classify_ideal(direct_cpa_ideal(alg), budget)
    if found.verdict == LINEAR_SPACE:
        return OracleResult(LINEAR_SPACE, len(found.directions))
    if found.verdict == ZERO_ONLY:
        return OracleResult(ZERO_ONLY, 0)
    return OracleResult(INCONCLUSIVE, None)


def _unipotent(n: int, rng: np.random.Generator) -> List[List[int]]:
    """Random upper unitriangular integer matrix with entries in [-2, 2]."""
    mat = np.eye(n, dtype=int)
    for i in range(n):
        for j in range(i + 1, n):
            mat[i, j] = int(rng.integers(-2, 3))
    return [[int(v) for v in row] for row in mat]


def oracle_sample(seed: int) -> List[Tuple[str, LieAlgebra]]:
    r"""The algebras of dimension <= 3 compared against the direct solver.

    sl2, r2 and the Heisenberg algebra appear in a basis changed by a seeded
    unipotent integer matrix; abelian1 and abelian2 as they are.
    """
    rng = np.random.default_rng(seed)
    out = []
    for alg in (sl(2), r2(), heisenberg()):
        mat = _unipotent(alg.dim, rng)
        out.append((f"{alg.name}'", change_basis(alg, mat, name=f"{alg.name}'")))
    out.append(("abelian1", abelian(1)))
    out.append(("abelian2", abelian(2)))
    return out


class OracleComparison(NamedTuple):
    """One row of the oracle comparison."""

    name: str
    structured: OracleResult
    direct: OracleResult

    @property
    def agrees(self) -> bool:
        """Whether verdict and solution dimension coincide."""
        return self.structured == self.direct


def compare_with_oracle(
    alg: LieAlgebra, name: str, options: SolveOptions = DEFAULT_SOLVE_OPTIONS
) -> OracleComparison:
    """Run cpa_solve and the direct solver on the same algebra."""
    report = cpa_solve(alg, options)
    structured = OracleResult(report.verdict, report.solution_dim)
    direct = direct_cpa_solve(alg, options["budget"])
    if structured != direct:
        _LOG.info("%s: structured %s, direct %s", name, structured, direct)
    return OracleComparison(name, structured, direct)
