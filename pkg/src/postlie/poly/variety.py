r"""Certificates about the zero set of an ideal over the algebraic closure.

All ideals handled here come from systems that vanish at the origin. The two
questions asked are whether the origin is the only common zero, and whether
the common zeros form exactly a given linear (or affine) subspace.
"""

import logging
from fractions import Fraction
from typing import List, Mapping, Optional, Sequence
from sympy import QQ
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyElement, PolyRing
from ..errors import ResourceLimit
from ..linalg import SparseVector, kernel_of_rows
from .core import Monomial, PolyIdeal, from_qq, has_constant_term, make_ring, to_qq
from .groebner import (
    DEFAULT_BUDGET,
    GroebnerBudget,
    buchberger,
    groebner,
    is_unit_ideal,
    normal_form,
)

_LOG = logging.getLogger(__name__)

PARAMETER_PREFIX = "t"
RABINOWITSCH_VARIABLE = "y"


def _pure_power(monom: Monomial) -> Optional[int]:
    """Index of the only variable in a monomial, or None."""
    support = [i for i, e in enumerate(monom) if e]
    return support[0] if len(support) == 1 else None


def _divides(small: Monomial, big: Monomial) -> bool:
    return all(a <= b for a, b in zip(small, big))


def count_standard_monomials(
    leading: Sequence[Monomial], nvars: int, limit: int = DEFAULT_BUDGET["max_steps"]
) -> int:
    """Number of monomials divisible by no leading monomial.

    The count is finite only when every variable has a pure power among the
    leading monomials; the caller must check that first. Raises ResourceLimit
    when more than limit monomials are visited.
    """
    count = 0
    stack: List[tuple] = [(tuple([0] * nvars), 0)]
    while stack:
        monom, first = stack.pop()
        if any(_divides(lm, monom) for lm in leading):
            continue
        count += 1
        if count > limit:
            raise ResourceLimit(
                f"More than {limit} standard monomials.", {"standard_monomials": count}
            )
        # extend only with variables >= first so each monomial is visited once
        for var in range(first, nvars):
            nxt = list(monom)
            nxt[var] += 1
            stack.append((tuple(nxt), var))
    return count


def _check_origin(ideal: PolyIdeal) -> None:
    for poly in ideal.generators:
        if has_constant_term(poly):
            raise ValueError("Generators must vanish at the origin.")


def variety_is_origin_only(
    ideal: PolyIdeal, budget: Optional[GroebnerBudget] = None
) -> bool:
    r"""Whether the origin is the only common zero of the ideal.

    Arguments:
    ---------
    ideal (PolyIdeal):
        Ideal whose generators all vanish at the origin.
    budget (GroebnerBudget or None):
        Budget for the Groebner computation.

    Returns:
    -------
    True iff every variable has a pure power among the leading monomials of
    the reduced basis (so the variety is finite) and every variable is
    nilpotent modulo the ideal (so that finite set is the origin).

    Notes:
    -----
    Raises ValueError if some generator has a nonzero constant term.
    """
    if ideal.nvars == 0:
        return True
    _check_origin(ideal)
    basis = groebner(ideal, budget)
    if not basis:
        return False
    leading = [p.LM for p in basis]
    powered = {_pure_power(lm) for lm in leading}
    if any(var not in powered for var in range(ideal.nvars)):
        _LOG.debug("variety has positive dimension: some variable lacks a pure power")
        return False
    limit = (budget or DEFAULT_BUDGET)["max_steps"]
    quotient_dim = count_standard_monomials(leading, ideal.nvars, limit)
    _LOG.debug("zero-dimensional ideal, quotient dimension %d", quotient_dim)
    ring = ideal.ring
    assert ring is not None
    for var in ring.gens:
        power = normal_form(var, basis)
        for _ in range(quotient_dim):
            if not power:
                break
            power = normal_form(power * var, basis)
        if power:
            _LOG.debug("%s is not nilpotent modulo the ideal", var)
            return False
    return True


def radical_contains(
    poly: PolyElement, ideal: PolyIdeal, budget: Optional[GroebnerBudget] = None
) -> bool:
    r"""Whether poly vanishes on every common zero of the ideal.

    Tries plain membership first, then the Rabinowitsch trick: poly is in the
    radical iff 1 lies in the ideal extended by 1 - y*poly in one extra
    variable y.
    """
    basis = groebner(ideal, budget)
    if not normal_form(poly, basis):
        return True
    ring = poly.ring
    names = [str(sym) for sym in ring.symbols] + [RABINOWITSCH_VARIABLE]
    bigger = PolyRing(names, QQ, grlex)

    def lift(p: PolyElement) -> PolyElement:
        return bigger.from_dict({monom + (0,): coeff for monom, coeff in p.terms()})

    y = bigger.gens[-1]
    gens = [lift(p) for p in basis] + [bigger.one - y * lift(poly)]
    return is_unit_ideal(buchberger(gens, bigger, budget))


def substitute(
    poly: PolyElement, images: Sequence[PolyElement], target: PolyRing
) -> PolyElement:
    """Replace the i-th variable of poly by images[i], a polynomial of target."""
    out = target.zero
    for monom, coeff in poly.terms():
        term = target(coeff)
        for exp, img in zip(monom, images):
            if exp:
                term *= img**exp
        out += term
    return out


def parameterization(
    nvars: int,
    vectors: Sequence[Mapping[int, Fraction]],
    offset: Optional[Mapping[int, Fraction]] = None,
) -> List[PolyElement]:
    """Images c_i = offset_i + sum_j t_j * vectors[j][i] in QQ[t1..tk]."""
    ring = make_ring(max(len(vectors), 1), PARAMETER_PREFIX)
    images = []
    for i in range(nvars):
        img = ring.zero
        if offset and offset.get(i):
            img += ring(to_qq(offset[i]))
        for t, vec in zip(ring.gens, vectors):
            val = vec.get(i)
            if val:
                img += t * to_qq(val)
        images.append(img)
    return images


def defining_forms(
    nvars: int,
    vectors: Sequence[Mapping[int, Fraction]],
    offset: Optional[Mapping[int, Fraction]] = None,
) -> List[SparseVector]:
    """Linear forms cutting out the span of vectors (through offset).

    Each form l is returned as a sparse vector over c-indices, with the
    constant -l(offset) stored at index nvars.
    """
    forms = kernel_of_rows(vectors, nvars)
    if not offset:
        return forms
    out = []
    for form in forms:
        shift = -sum((val * offset.get(i, 0) for i, val in form.items()), Fraction(0))
        full = dict(form)
        if shift:
            full[nvars] = shift
        out.append(full)
    return out


def variety_equals_affine_subspace(
    ideal: PolyIdeal,
    vectors: Sequence[Mapping[int, Fraction]],
    offset: Optional[Mapping[int, Fraction]] = None,
    budget: Optional[GroebnerBudget] = None,
) -> bool:
    r"""Whether the common zeros of the ideal are exactly an affine subspace.

    Arguments:
    ---------
    ideal (PolyIdeal):
        The ideal in c1..cm.
    vectors (list of sparse vectors):
        Directions spanning the subspace, in c-coordinates.
    offset (sparse vector or None):
        Base point; the origin when None.
    budget (GroebnerBudget or None):
        Budget for every Groebner computation involved.

    Returns:
    -------
    True iff (a) every generator vanishes identically on the parameterized
    subspace, and (b) every defining linear form of the subspace lies in the
    radical of the ideal, i.e. no common zero lies off the subspace.
    """
    nvars = ideal.nvars
    if nvars == 0:
        return True
    images = parameterization(nvars, vectors, offset)
    target = images[0].ring
    for poly in ideal.generators:
        if substitute(poly, images, target):
            _LOG.debug("generator does not vanish on the subspace")
            return False
    ring = ideal.ring
    assert ring is not None
    for form in defining_forms(nvars, vectors, offset):
        lin = ring.zero
        for i, val in form.items():
            coeff = to_qq(val)
            lin += ring(coeff) if i == nvars else ring.gens[i] * coeff
        if not radical_contains(lin, ideal, budget):
            _LOG.debug("common zeros leave the subspace")
            return False
    return True


def linear_part(basis: Sequence[PolyElement], nvars: int) -> List[SparseVector]:
    r"""Zero set of the degree-one elements of a Groebner basis, as directions.

    Every common zero of the ideal lies in the returned linear subspace. The
    elements are assumed to vanish at the origin; an element with a constant
    term raises ValueError.
    """
    rows: List[SparseVector] = []
    for poly in basis:
        if max(sum(m) for m in poly.monoms()) > 1:
            continue
        if has_constant_term(poly):
            raise ValueError("Groebner basis element with a constant term.")
        row: SparseVector = {}
        for monom, coeff in poly.terms():
            row[monom.index(1)] = from_qq(coeff)
        rows.append(row)
    return kernel_of_rows(rows, nvars)
