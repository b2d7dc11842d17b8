r"""Tests Lie algebra construction, invariants and low-degree cohomology."""
from fractions import Fraction
from typing import Final
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from postlie.construct import abelian, heisenberg, r2, sl
from postlie.errors import AntisymmetryViolation, JacobiViolation
from postlie.lie import (
    Cocycle2,
    LieAlgebra,
    LinearMap,
    all_derivations_inner,
    center,
    centroid,
    change_basis,
    coboundaries,
    derivation_space,
    derived_subalgebra,
    from_structure_constants,
    h2_dim,
    is_central,
    is_coboundary,
    is_cocycle,
    is_derivation,
    is_inner_derivation,
    is_perfect,
    killing_form,
    killing_value,
    pick_nontrivial_cocycle,
    two_cocycles,
)

SL2_TABLE: Final = {(0, 1): {1: 2}, (0, 2): {2: -2}, (1, 2): {0: 1}}


@pytest.fixture
def sl2() -> LieAlgebra:
    """sl2 in the Chevalley basis h, e, f."""
    return from_structure_constants(3, ["h", "e", "f"], SL2_TABLE, name="sl2")


def test_sl2_builtin_matches_table(sl2: LieAlgebra) -> None:
    """The matrix-unit construction reproduces the Chevalley constants."""
    assert sl(2) == sl2
    assert sl(2).labels == ["h", "e", "f"]


def test_antisymmetry_completed(sl2: LieAlgebra) -> None:
    """Only upper pairs are given; the reverse order is filled in."""
    assert sl2.bracket(1, 0) == {1: -2}
    assert sl2.bracket(2, 1) == {0: -1}
    assert sl2.bracket(1, 1) == {}


def test_inconsistent_table_rejected() -> None:
    """Diagonal brackets and mismatched pairs are invalid input."""
    with pytest.raises(AntisymmetryViolation):
        LieAlgebra(2, None, {(0, 0): {1: 1}})
    with pytest.raises(AntisymmetryViolation):
        LieAlgebra(2, None, {(0, 1): {1: 1}, (1, 0): {1: 1}})


def test_jacobi_violation_reports_triple() -> None:
    """[x,y]=x, [y,z]=y, [x,z]=z is antisymmetric but not a Lie algebra."""
    table = {(0, 1): {0: 1}, (1, 2): {1: 1}, (0, 2): {2: 1}}
    with pytest.raises(JacobiViolation) as info:
        from_structure_constants(3, ["x", "y", "z"], table)
    assert info.value.triple == (0, 1, 2)
    assert info.value.residual == {0: -1, 1: 1, 2: 1}


def test_sl2_invariants(sl2: LieAlgebra) -> None:
    """sl2 is perfect, centerless, central and has only inner derivations."""
    assert is_perfect(sl2)
    assert center(sl2).dim == 0
    assert len(derivation_space(sl2)) == 3
    assert all_derivations_inner(sl2)
    assert len(centroid(sl2)) == 1
    assert is_central(sl2)
    assert h2_dim(sl2) == 0
    assert pick_nontrivial_cocycle(sl2) is None


def test_heisenberg_invariants() -> None:
    """Check center, derived algebra, derivations and H^2 of the Heisenberg algebra."""
    alg = heisenberg()
    assert center(alg).dim == 1
    assert center(alg).contains({2: Fraction(1)})
    assert derived_subalgebra(alg).basis == [{2: Fraction(1)}]
    assert not is_perfect(alg)
    assert len(derivation_space(alg)) == 6
    assert not all_derivations_inner(alg)
    assert len(two_cocycles(alg)) == 3
    assert len(coboundaries(alg)) == 1
    assert h2_dim(alg) == 2
    xi = pick_nontrivial_cocycle(alg)
    assert xi is not None
    assert is_cocycle(alg, xi)
    assert not is_coboundary(alg, xi)


def test_small_algebras() -> None:
    """r2 has only inner derivations and no cohomology; abelian2 has H^2 = 1."""
    assert len(derivation_space(r2())) == 2
    assert all_derivations_inner(r2())
    assert h2_dim(r2()) == 0
    assert len(derivation_space(abelian(2))) == 4
    assert h2_dim(abelian(2)) == 1
    assert abelian(2).is_abelian


def test_killing_form_sl2(sl2: LieAlgebra) -> None:
    """kappa(h,h) = 8 and kappa(e,f) = 4; the form is symmetric."""
    kmat = killing_form(sl2)
    assert kmat[0, 0] == 8
    assert kmat[1, 2] == 4
    assert kmat[2, 1] == 4
    assert kmat[1, 1] == 0
    assert killing_value(sl2, {0: Fraction(1), 1: Fraction(1)}, {2: Fraction(1)}) == 4


def test_derivation_checks(sl2: LieAlgebra) -> None:
    """ad h is an inner derivation; the identity is not a derivation."""
    ad_h = LinearMap(3, [sl2.bracket(0, j) for j in range(3)])
    assert is_derivation(sl2, ad_h)
    assert is_inner_derivation(sl2, ad_h)
    assert not is_derivation(sl2, LinearMap.identity(3))


def test_change_basis(sl2: LieAlgebra) -> None:
    """Rescaling h rescales the constants accordingly."""
    scaled = change_basis(sl2, [[2, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert scaled.bracket(0, 1) == {1: 4}
    assert scaled.bracket(1, 2) == {0: Fraction(1, 2)}
    with pytest.raises(ValueError):
        change_basis(sl2, [[1, 0, 0], [0, 1, 0], [1, 1, 0]])


def test_cocycle_validation() -> None:
    """Cochains must be antisymmetric and vanish on the diagonal."""
    with pytest.raises(ValueError):
        Cocycle2(2, {(0, 0): 1})
    with pytest.raises(ValueError):
        Cocycle2(2, {(0, 1): 1, (1, 0): 1})
    xi = Cocycle2.from_matrix([[0, 3], [-3, 0]])
    assert xi.value(1, 0) == -3
    assert Cocycle2.from_flat(2, xi.flatten()) == xi


@settings(deadline=None)
@given(st.lists(st.integers(min_value=-3, max_value=3), min_size=6, max_size=6))
def test_derivations_closed_under_combination(coeffs: list) -> None:
    """Any combination of the derivation basis of the Heisenberg algebra is one."""
    alg = heisenberg()
    total = LinearMap.zero(3)
    for c, dmap in zip(coeffs, derivation_space(alg)):
        total = total + dmap.scale(c)
    assert is_derivation(alg, total)
