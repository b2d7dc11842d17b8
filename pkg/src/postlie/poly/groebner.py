r"""Buchberger's algorithm with budgets, normal forms and ideal membership.

The algorithm is the improved Buchberger of Becker and Weispfenning with the
Gebauer-Moeller criteria, run on sympy's sparse polynomials over QQ. Pairs are
selected by the normal strategy (smallest lcm of leading monomials) with ties
broken by pair index, and every new basis element is made monic, so the run
and its reduced output are deterministic.
"""

import logging
from typing import List, Optional, Sequence, Set, Tuple
from typing_extensions import TypedDict
from sympy.polys.rings import PolyElement, PolyRing
from ..errors import ResourceLimit
from .core import PolyIdeal

_LOG = logging.getLogger(__name__)

GroebnerBudget = TypedDict(
    "GroebnerBudget",
    {
        "max_steps": int,
        "max_terms": int,
        "max_basis": int,
    },
)
DEFAULT_BUDGET: GroebnerBudget = {
    "max_steps": int(1e5),
    "max_terms": 2**63 - 1,
    "max_basis": int(1e4),
}


def spoly(p1: PolyElement, p2: PolyElement, ring: PolyRing) -> PolyElement:
    """S-polynomial of two monic polynomials."""
    lcm = ring.monomial_lcm(p1.LM, p2.LM)
    m1 = ring.monomial_div(lcm, p1.LM)
    m2 = ring.monomial_div(lcm, p2.LM)
    return p1.mul_monom(m1) - p2.mul_monom(m2)


def _interreduce(polys: Sequence[PolyElement]) -> List[PolyElement]:
    """Reduce each input against the previous ones until nothing changes."""
    out = list(polys)
    while True:
        cur, out = out, []
        for i, p in enumerate(cur):
            r = p.rem(cur[:i])
            if r:
                out.append(r.monic())
        if out == cur:
            return out


def buchberger(
    polys: Sequence[PolyElement],
    ring: PolyRing,
    budget: Optional[GroebnerBudget] = None,
) -> List[PolyElement]:
    r"""Reduced Groebner basis of the ideal generated by polys.

    Arguments:
    ---------
    polys (sequence of PolyElement):
        Generators, all in ring.
    ring (PolyRing):
        Polynomial ring over QQ.
    budget (GroebnerBudget or None):
        Step, term and basis size caps; defaults to DEFAULT_BUDGET.

    Returns:
    -------
    List of monic polynomials forming the reduced Groebner basis, sorted by
    decreasing leading monomial. The zero ideal gives []; the unit ideal
    gives [1].

    Notes:
    -----
    Raises ResourceLimit when a cap is exceeded; its stats record the number
    of S-pairs reduced, the pairs left and the current basis size.
    """
    if budget is None:
        budget = DEFAULT_BUDGET
    order = ring.order
    f = _interreduce([p for p in polys if p])
    if not f:
        return []

    index = {}
    for i, h in enumerate(f):
        index[h] = i
    basis: Set[int] = set()
    pairs: Set[Tuple[int, int]] = set()
    steps = 0
    zero_reductions = 0

    def stats() -> dict:
        return {
            "steps": steps,
            "zero_reductions": zero_reductions,
            "pairs_left": len(pairs),
            "basis_size": len(basis),
        }

    def normal(g: PolyElement, among: Sequence[int]) -> Optional[int]:
        h = g.rem([f[j] for j in among])
        if not h:
            return None
        if len(h) > budget["max_terms"]:
            raise ResourceLimit(
                f"Intermediate polynomial with {len(h)} terms exceeds the term cap.",
                stats(),
            )
        h = h.monic()
        if h not in index:
            index[h] = len(f)
            f.append(h)
        return index[h]

    def update(ih: int) -> None:
        nonlocal basis, pairs
        mh = f[ih].LM
        cands = sorted(basis)
        keep = []
        for pos, ig in enumerate(cands):
            mg = f[ig].LM
            lcm_hg = ring.monomial_lcm(mh, mg)
            if ring.monomial_mul(mh, mg) == lcm_hg:
                keep.append((ig, True))
                continue
            others = [ip for ip in cands[pos + 1 :]] + [p for p, _ in keep]
            if not any(
                ring.monomial_div(lcm_hg, ring.monomial_lcm(mh, f[ip].LM))
                for ip in others
            ):
                keep.append((ig, False))
        new_pairs = {(ih, ig) for ig, coprime in keep if not coprime}
        old_pairs = set()
        for ig1, ig2 in pairs:
            lcm12 = ring.monomial_lcm(f[ig1].LM, f[ig2].LM)
            if (
                not ring.monomial_div(lcm12, mh)
                or ring.monomial_lcm(f[ig1].LM, mh) == lcm12
                or ring.monomial_lcm(f[ig2].LM, mh) == lcm12
            ):
                old_pairs.add((ig1, ig2))
        pairs = old_pairs | new_pairs
        basis = {ig for ig in basis if not ring.monomial_div(f[ig].LM, mh)}
        basis.add(ih)

    for ih in sorted(range(len(f)), key=lambda i: (order(f[i].LM), i)):
        update(ih)

    while pairs:
        pair = min(
            pairs,
            key=lambda pr: (order(ring.monomial_lcm(f[pr[0]].LM, f[pr[1]].LM)), pr),
        )
        pairs.remove(pair)
        steps += 1
        if steps > budget["max_steps"]:
            raise ResourceLimit(
                f"Buchberger exceeded {budget['max_steps']} S-pair steps.", stats()
            )
        h = spoly(f[pair[0]], f[pair[1]], ring)
        among = sorted(basis, key=lambda g: (order(f[g].LM), g))
        ih = normal(h, among)
        if ih is None:
            zero_reductions += 1
            continue
        update(ih)
        if len(basis) > budget["max_basis"]:
            raise ResourceLimit(
                f"Groebner basis grew beyond {budget['max_basis']} elements.", stats()
            )

    reduced = []
    for ig in sorted(basis):
        ih = normal(f[ig], sorted(basis - {ig}))
        if ih is not None:
            reduced.append(f[ih])
    reduced.sort(key=lambda p: order(p.LM), reverse=True)
    _LOG.debug(
        "buchberger: %d steps, %d zero reductions, %d basis elements",
        steps,
        zero_reductions,
        len(reduced),
    )
    return reduced


def groebner(
    ideal: PolyIdeal, budget: Optional[GroebnerBudget] = None
) -> List[PolyElement]:
    """Reduced Groebner basis of an ideal, cached on the ideal."""
    if ideal.groebner_basis is None:
        if ideal.ring is None or ideal.is_empty:
            ideal.groebner_basis = []
        else:
            ideal.groebner_basis = buchberger(ideal.generators, ideal.ring, budget)
    return list(ideal.groebner_basis)


def normal_form(poly: PolyElement, basis: Sequence[PolyElement]) -> PolyElement:
    """Remainder of poly on division by a Groebner basis."""
    if not basis:
        return poly
    return poly.rem(list(basis))


def ideal_membership(
    poly: PolyElement, ideal: PolyIdeal, budget: Optional[GroebnerBudget] = None
) -> bool:
    """Whether poly lies in the ideal."""
    if not poly:
        return True
    return not normal_form(poly, groebner(ideal, budget))


def is_unit_ideal(basis: Sequence[PolyElement]) -> bool:
    """Whether a reduced Groebner basis is [1]."""
    return len(basis) == 1 and basis[0].is_ground and bool(basis[0])
