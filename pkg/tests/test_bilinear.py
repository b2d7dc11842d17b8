r"""Tests the linear spaces D, Dcomm, C and their checkers."""
from typing import Final
import pytest
from postlie.bilinear import (
    BilinearMap,
    BilinearMapSpace,
    c_space,
    check_cpa,
    check_derivation,
    check_post_lie,
    check_symmetry,
    d_space,
    d_space_assoc,
    dcomm_space,
    exact_post_lie_instance,
    independent,
    windowed_dcomm_space,
)
from postlie.bilinear.check import DERIVATION, POST_LIE, SYMMETRY
from postlie.construct import (
    abelian,
    current_algebra,
    loop_window,
    r2,
    sl,
    truncated_polynomial_algebra,
    witt_window,
)
from postlie.cpa import ideal
from postlie.errors import WindowTooSmall
from postlie.grading import Grading, decompose_bilinear_space

# (x,x) -> y on r2
R2_CPA: Final = {(0, 0, 1): 1}


def test_sl2_spaces() -> None:
    """D(sl2) = 9, C(sl2) = 3 and Dcomm(sl2) = 0."""
    alg = sl(2)
    assert d_space(alg).dim == 9
    assert c_space(alg).dim == 3
    assert dcomm_space(alg).dim == 0
    assert dcomm_space(alg) <= d_space(alg)


def test_centroid_maps_are_not_derivations() -> None:
    """(h, y) -> y is in C(sl2) but not in D(sl2): the identity is no derivation."""
    alg = sl(2)
    identity_at_h = BilinearMap(3, {(0, j, j): 1 for j in range(3)})
    assert c_space(alg).contains(identity_at_h)
    assert not d_space(alg).contains(identity_at_h)


def test_small_spaces() -> None:
    """Dcomm(r2) = 3; on abelian2 every map is in D and the symmetric ones in Dcomm."""
    assert dcomm_space(r2()).dim == 3
    assert d_space(abelian(2)).dim == 8
    assert dcomm_space(abelian(2)).dim == 6
    assert c_space(abelian(2)).dim == 8


def test_current_algebra_spaces() -> None:
    """D of sl2 (x) Q[t]/(t^2) and Q[t]/(t^3) have dimensions 42 and 99."""
    base = sl(2)
    dual = truncated_polynomial_algebra(2)
    assert d_space_assoc(dual).dim == 2
    assert d_space(current_algebra(base, dual)).dim == 42
    assert dcomm_space(current_algebra(base, dual)).dim == 0


@pytest.mark.slow
def test_current_algebra_cubic() -> None:
    """D of sl2 (x) Q[t]/(t^3) has dimension 99."""
    cubic = truncated_polynomial_algebra(3)
    assert d_space(current_algebra(sl(2), cubic)).dim == 99


def test_space_membership() -> None:
    """Canonical bases give exact membership and coordinates."""
    space = dcomm_space(r2())
    phi = BilinearMap(2, R2_CPA)
    assert space.contains(phi)
    coords = space.coordinates(phi)
    assert coords is not None
    assert space.combination(coords) == phi
    assert space.coordinates(BilinearMap(2, {(0, 1, 1): 1})) is None
    assert independent(space.basis, 2)
    assert not independent([phi, phi.scale(2)], 2)
    same = BilinearMapSpace(2, [b.scale(3) for b in space.basis], kind="Dcomm")
    assert same == space
    with pytest.raises(ValueError):
        BilinearMapSpace(2, [], kind="nonsense")


def test_checkers_accept_cpa() -> None:
    """(x,x) -> y on r2 passes every identity group."""
    assert check_cpa(r2(), BilinearMap(2, R2_CPA)) == []


def test_checkers_report_violations() -> None:
    """Each identity group reports its first failing basis instance."""
    alg = r2()
    asym = BilinearMap(2, {(0, 1, 1): 1})
    found = check_symmetry(asym)
    assert found is not None
    assert (found.identity, found.triple, found.residual) == (SYMMETRY, (0, 1), {1: 1})

    not_derivation = BilinearMap(2, {(0, 0, 0): 1})
    found = check_derivation(alg, not_derivation)
    assert found is not None
    assert (found.identity, found.triple, found.residual) == (
        DERIVATION,
        (0, 0, 1),
        {1: -1},
    )

    # (y,y) -> y is in Dcomm but fails the quadratic identity
    not_post_lie = BilinearMap(2, {(1, 1, 1): 1})
    assert dcomm_space(alg).contains(not_post_lie)
    found = check_post_lie(alg, not_post_lie)
    assert found is not None
    assert (found.identity, found.triple, found.residual) == (
        POST_LIE,
        (0, 1, 1),
        {1: -1},
    )
    assert "post-lie" in found.describe(alg)


def test_graded_decomposition_of_d() -> None:
    """D(sl2) splits by root degree with dimensions 1, 2, 3, 2, 1."""
    decomp = decompose_bilinear_space(d_space(sl(2)), Grading([0, 1, -1]))
    assert decomp.dims() == {-2: 1, -1: 2, 0: 3, 1: 2, 2: 1}
    assert decomp.space() == d_space(sl(2))


def test_windowed_dcomm_loop() -> None:
    """The degree-0 block of the sl2 loop window is zero, like Dcomm(sl2)."""
    space = windowed_dcomm_space(loop_window(sl(2), 2), 2)
    assert space.degree_dims().get(0, 0) == 0
    assert space.kind == "Dcomm"


def test_post_lie_exactness() -> None:
    """Instances need a defined [x,y] and in-window intermediate values."""
    assert exact_post_lie_instance(sl(2), {0}, 0, 1, 2, 0)
    window = loop_window(sl(2), 2)
    h_zero, e_zero, f_zero = (window.index_of(b, 0) for b in range(3))
    assert exact_post_lie_instance(window, {0}, h_zero, e_zero, f_zero, 0)
    h_two, e_one = window.index_of(0, 2), window.index_of(1, 1)
    # [h t^2, e t] has degree 3
    assert not exact_post_lie_instance(window, {0}, h_two, e_one, f_zero, 3)
    # phi_0(e t^2, e t) would have degree 3
    e_two = window.index_of(1, 2)
    assert not exact_post_lie_instance(window, {0}, h_zero, e_two, e_one, 3)
    assert ideal.exact_post_lie_instance is exact_post_lie_instance


def test_windowed_dcomm_abelian_degree_zero() -> None:
    """With bound 0 an abelian loop window only has symmetric degree-0 maps."""
    window = loop_window(abelian(1), 1)
    space = windowed_dcomm_space(window, 0)
    assert set(space.degree_dims()) <= {0}
    for phi in space.basis:
        assert phi.is_symmetric


def test_windowed_dcomm_bound_checked() -> None:
    """Degree bounds beyond twice the window bound are rejected."""
    with pytest.raises(WindowTooSmall):
        windowed_dcomm_space(witt_window(2), 5)
