r"""Tests gradings and the homogeneous decomposition of bilinear map spaces."""
from typing import Dict, Tuple
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from postlie.bilinear import BilinearMap, BilinearMapSpace, d_space, dcomm_space
from postlie.construct import builtin, heisenberg, sl
from postlie.grading import (
    GradedLieAlgebra,
    Grading,
    as_graded,
    attach_grading,
    coefficient_degree,
    decompose_bilinear_space,
    degree_of,
    homogeneous_parts,
    underlying,
)

ROOT_GRADING = Grading([0, 1, -1])


def test_cyclic_grading() -> None:
    """Z/n degrees are reduced and added in the group."""
    grading = Grading([0, 3, -1], modulus=2)
    assert grading.degrees == [0, 1, 1]
    assert grading.group == "Z/2"
    assert grading.is_cyclic
    assert grading.add(1, 1) == 0
    assert grading.component(3) == [1, 2]
    assert Grading.trivial(3).group == "Z/1"
    assert not ROOT_GRADING.is_cyclic
    assert ROOT_GRADING.add(1, 1) == 2


def test_coefficient_degree() -> None:
    """lambda_{ij}^k has degree deg(k) - deg(i) - deg(j), reduced in the group."""
    assert coefficient_degree(ROOT_GRADING, 1, 1, 2) == -3
    assert coefficient_degree(Grading([0, 1, -1], modulus=2), 1, 1, 2) == 1


def test_graded_views() -> None:
    """Plain algebras are viewed with the trivial grading."""
    graded = attach_grading(heisenberg(), Grading([1, 1, 2]))
    assert graded.dim == 3
    assert underlying(graded) == heisenberg()
    viewed = as_graded(sl(2))
    assert viewed.grading == Grading.trivial(3)
    assert as_graded(graded) is graded


def test_parts_need_matching_dimension() -> None:
    """A grading of another size is rejected."""
    with pytest.raises(ValueError):
        homogeneous_parts(BilinearMap.zero(2), ROOT_GRADING)


def test_chevalley_decomposition_of_d() -> None:
    """Reducing the root degrees of D(sl2) mod 2 gives blocks of 5 and 4."""
    graded = builtin("sl2_z2")
    assert isinstance(graded, GradedLieAlgebra)
    space = d_space(graded.algebra)
    decomp = decompose_bilinear_space(space, graded.grading)
    assert decomp.dims() == {0: 5, 1: 4}
    assert decomp.total_dim == space.dim
    for deg, basis in decomp.components.items():
        assert all(degree_of(phi, graded.grading) == deg for phi in basis)


def test_heisenberg_decomposition() -> None:
    """Dcomm of the Z-graded Heisenberg algebra re-sums to itself."""
    graded = builtin("heisenberg_z")
    assert isinstance(graded, GradedLieAlgebra)
    space = dcomm_space(graded.algebra)
    decomp = decompose_bilinear_space(space, graded.grading)
    assert decomp.space() == space
    assert sum(decomp.dims().values()) == space.dim


def test_mixed_space_is_rejected() -> None:
    """A space not closed under homogeneous parts trips the consistency check."""
    mixed = BilinearMap(3, {(0, 0, 0): 1, (0, 0, 1): 1})
    with pytest.raises(AssertionError):
        decompose_bilinear_space(BilinearMapSpace(3, [mixed]), ROOT_GRADING)


coefficients = st.dictionaries(
    st.tuples(
        st.integers(min_value=0, max_value=2),
        st.integers(min_value=0, max_value=2),
        st.integers(min_value=0, max_value=2),
    ),
    st.integers(min_value=-5, max_value=5),
    max_size=8,
)


@settings(deadline=None)
@given(coefficients)
def test_parts_sum_to_map(coeffs: Dict[Tuple[int, int, int], int]) -> None:
    """Homogeneous parts are homogeneous and add back up to the map."""
    phi = BilinearMap(3, coeffs)
    parts = homogeneous_parts(phi, ROOT_GRADING)
    total = BilinearMap.zero(3)
    for deg, part in parts.items():
        assert degree_of(part, ROOT_GRADING) == deg
        assert not part.is_zero()
        total = total + part
    assert total == phi
