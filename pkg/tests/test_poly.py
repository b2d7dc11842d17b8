r"""Tests polynomial ideals, Groebner bases and the variety certificates."""
from fractions import Fraction
from typing import List
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.polys.rings import PolyElement
from postlie.errors import ResourceLimit
from postlie.poly import (
    DEFAULT_BUDGET,
    PolyIdeal,
    format_poly,
    from_terms,
    groebner,
    ideal_membership,
    is_unit_ideal,
    linear_part,
    make_ring,
    normal_form,
    parse_poly,
    radical_contains,
    variety_equals_affine_subspace,
    variety_is_origin_only,
)


def _ideal(nvars: int, texts: List[str]) -> PolyIdeal:
    ring = make_ring(nvars)
    return PolyIdeal(nvars, [parse_poly(t, ring) for t in texts], ring)


def test_format_parse() -> None:
    """Canonical text uses p/q coefficients, ^ powers and decreasing terms."""
    ring = make_ring(3)
    poly = from_terms(ring, {(2, 0, 1): Fraction(3, 2), (0, 1, 0): Fraction(-1)})
    assert format_poly(poly) == "3/2*c1^2*c3 - c2"
    assert parse_poly("3/2*c1^2*c3 - c2", ring) == poly
    assert format_poly(ring.zero) == "0"
    with pytest.raises(ValueError):
        parse_poly("c1 + x", ring)
    with pytest.raises(ValueError):
        parse_poly("c9", ring)


def test_ideal_container() -> None:
    """Zero and duplicate generators are dropped."""
    ring = make_ring(2)
    c1, c2 = ring.gens
    ideal = PolyIdeal(2, [c1 * c2, ring.zero, c1 * c2], ring)
    assert len(ideal) == 1
    assert ideal.strings() == ["c1*c2"]
    assert PolyIdeal(0).is_empty
    with pytest.raises(ValueError):
        make_ring(0)


def test_groebner_basis() -> None:
    """The reduced basis of a small ideal and the unit ideal."""
    ideal = _ideal(2, ["c1^2 - c2", "c1*c2"])
    basis = groebner(ideal)
    assert [format_poly(p) for p in basis] == ["c1^2 - c2", "c1*c2", "c2^2"]
    unit = _ideal(2, ["c1 - 1", "c1"])
    assert is_unit_ideal(groebner(unit))
    assert groebner(_ideal(1, [])) == []


def test_membership() -> None:
    """Membership by normal form, radical membership by the extra variable."""
    ideal = _ideal(2, ["c1^2"])
    ring = ideal.ring
    assert ring is not None
    c1, c2 = ring.gens
    assert ideal_membership(c1**3 + c1**2 * c2, ideal)
    assert not ideal_membership(c1, ideal)
    assert radical_contains(c1, ideal)
    assert not radical_contains(c2, ideal)


def test_budget_exceeded() -> None:
    """A zero step budget stops at the first S-pair with progress counters."""
    ideal = _ideal(2, ["c1^2 + c2", "c1*c2 + c1"])
    budget = {**DEFAULT_BUDGET, "max_steps": 0}
    with pytest.raises(ResourceLimit) as info:
        groebner(ideal, budget)  # type: ignore [arg-type]
    assert info.value.stats["steps"] == 1


def test_origin_only() -> None:
    """Finite nilpotent quotients certify that only the origin is a zero."""
    assert variety_is_origin_only(_ideal(2, ["c1^2", "c2^2"]))
    assert variety_is_origin_only(_ideal(2, ["c1^2 - c2", "c2^2"]))
    assert not variety_is_origin_only(_ideal(2, ["c1*c2"]))
    # finite but with the nonzero point (1, 1)
    assert not variety_is_origin_only(_ideal(2, ["c1^2 - c1", "c2 - c1"]))
    with pytest.raises(ValueError):
        variety_is_origin_only(_ideal(1, ["c1 - 1"]))


def test_affine_subspace() -> None:
    """A zero set equal to the c2 axis, and one strictly larger than it."""
    axis = [{1: Fraction(1)}]
    assert variety_equals_affine_subspace(_ideal(2, ["c1^2", "c1*c2"]), axis)
    assert not variety_equals_affine_subspace(_ideal(2, ["c1*c2"]), axis)
    assert not variety_equals_affine_subspace(_ideal(2, ["c2^2"]), axis)


def test_linear_part() -> None:
    """Degree-one basis elements cut out the linear hull."""
    ideal = _ideal(2, ["c1^2", "c2^2"])
    hull = linear_part(groebner(ideal), 2)
    assert hull == [{0: Fraction(1)}, {1: Fraction(1)}]
    ideal = _ideal(3, ["c1 - c2", "c3^2"])
    hull = linear_part(groebner(ideal), 3)
    assert hull == [{0: Fraction(1), 1: Fraction(1)}, {2: Fraction(1)}]


small_polys = st.lists(
    st.tuples(
        st.integers(min_value=0, max_value=2),
        st.integers(min_value=0, max_value=2),
        st.integers(min_value=-3, max_value=3),
    ),
    min_size=1,
    max_size=4,
)


def _poly(terms: list) -> PolyElement:
    ring = make_ring(2)
    out = ring.zero
    for a, b, coeff in terms:
        out += coeff * ring.gens[0] ** a * ring.gens[1] ** b
    return out


@settings(deadline=None, max_examples=30)
@given(small_polys, small_polys, small_polys)
def test_generators_reduce_to_zero(f: list, g: list, h: list) -> None:
    """Generators and their combinations have normal form zero."""
    p, q = _poly(f), _poly(g)
    ring = p.ring
    ideal = PolyIdeal(2, [p, q], ring)
    basis = groebner(ideal)
    assert not normal_form(p, basis)
    assert not normal_form(q, basis)
    assert not normal_form(p * _poly(h) + q, basis)
