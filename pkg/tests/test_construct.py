r"""Tests gradings, current algebras, extensions and degree windows."""
from fractions import Fraction
import pytest
from postlie.bilinear import BilinearMap
from postlie.construct import (
    abelian,
    base_map_from_loop,
    builtin,
    central_extension,
    contracted_laurent_algebra,
    current_algebra,
    euler_derivation,
    euler_extension,
    extendable_euler_extension,
    graded_builtins,
    heisenberg,
    kac_moody_window,
    lift_derivation,
    loop_lift,
    loop_window,
    pairing_cocycle,
    r2,
    semidirect_by_derivation,
    sl,
    square_zero_algebra,
    truncated_polynomial_algebra,
    witt_window,
)
from postlie.errors import (
    GradingIncompatible,
    InvalidGrading,
    NotACocycle,
    NotADerivation,
    UnknownFamily,
)
from postlie.grading import (
    MIXED_DEGREE,
    GradedLieAlgebra,
    Grading,
    attach_grading,
    degree_of,
    homogeneous_parts,
)
from postlie.lie import Cocycle2, LinearMap, is_cocycle


def test_sl2_gradings() -> None:
    """Root and Chevalley gradings of sl2 are compatible with the bracket."""
    root = attach_grading(sl(2), Grading([0, 1, -1]))
    assert root.grading.group == "Z"
    chevalley = attach_grading(sl(2), Grading([0, 1, -1], modulus=2))
    assert chevalley.grading.degrees == [0, 1, 1]
    assert chevalley.grading.components() == {0: [0], 1: [1, 2]}


def test_incompatible_grading() -> None:
    """Degree 1 on every Heisenberg generator sends [x,y] = z to the wrong degree."""
    with pytest.raises(GradingIncompatible) as info:
        attach_grading(heisenberg(), Grading([1, 1, 1]))
    assert info.value.pair == (0, 1)
    assert info.value.stray == [2]
    with pytest.raises(InvalidGrading):
        Grading([0], modulus=-1)


def test_homogeneous_parts() -> None:
    """Coefficient degrees are deg(k) - deg(i) - deg(j)."""
    grading = Grading([0, 1, -1])
    phi = BilinearMap(3, {(0, 0, 1): 1, (0, 0, 0): 2})
    parts = homogeneous_parts(phi, grading)
    assert sorted(parts) == [0, 1]
    assert degree_of(parts[1], grading) == 1
    assert degree_of(phi, grading) == MIXED_DEGREE
    assert degree_of(BilinearMap.zero(3), grading) == 0


def test_builtins() -> None:
    """Named algebras resolve, graded names carry gradings, unknown names fail."""
    assert builtin("abelian3").dim == 3
    assert builtin("SL3").dim == 8
    sl2_z2 = builtin("sl2_z2")
    assert isinstance(sl2_z2, GradedLieAlgebra)
    assert sl2_z2.grading.modulus == 2
    assert set(graded_builtins()) >= {"sl2_z", "sl2_z2", "heisenberg_z"}
    with pytest.raises(UnknownFamily):
        builtin("so5")


def test_truncated_polynomials() -> None:
    """Q[t]/(t^n) has the expected products and Euler derivation."""
    assert truncated_polynomial_algebra(1).dim == 1
    dual = truncated_polynomial_algebra(2)
    assert dual.product(1, 1) == {}
    cubic = truncated_polynomial_algebra(3)
    assert cubic.product(1, 1) == {2: 1}
    assert cubic.product(1, 2) == {}
    assert euler_derivation(cubic).image(2) == {2: 2}


def test_square_zero_algebras() -> None:
    """K + V multiplies only by the unit; the contracted Laurent base has weights."""
    zero = square_zero_algebra(2)
    assert zero.labels == ["1", "v1", "v2"]
    assert zero.product(0, 2) == {2: 1}
    assert zero.product(1, 2) == {}
    with pytest.raises(NotADerivation):
        euler_derivation(zero)
    laurent = contracted_laurent_algebra()
    assert laurent.weights == [0, 1, -1]
    assert laurent.product(1, 2) == {}
    assert euler_derivation(laurent).image(2) == {2: -1}


def test_pairing_cocycle() -> None:
    """kappa (x) omega is a cocycle of sl2 (x) the contracted Laurent base."""
    coeffs = contracted_laurent_algebra()
    omega = Cocycle2(3, {(1, 2): 1})
    xi = pairing_cocycle(sl(2), coeffs, omega)
    assert is_cocycle(current_algebra(sl(2), coeffs), xi)
    # kappa(h,h) = 8 and kappa(e,f) = 4
    assert xi.value(1, 2) == 8
    assert xi.value(4, 8) == 4
    assert xi.value(0, 3) == 0


def test_current_algebra() -> None:
    """sl2 (x) Q[t]/(t^2) has dimension 6 and the tensor bracket."""
    coeffs = truncated_polynomial_algebra(2)
    current = current_algebra(sl(2), coeffs)
    assert current.dim == 6
    assert current.labels[:2] == ["h", "h*t"]
    # [e (x) t, f (x) 1] = h (x) t
    assert current.bracket(3, 4) == {1: 1}


def test_semidirect_extension() -> None:
    """The lifted Euler derivation is an outer derivation of the current algebra."""
    coeffs = truncated_polynomial_algebra(2)
    ext = euler_extension(sl(2), coeffs)
    assert ext.dim == 7
    assert ext.extension is not None
    assert ext.extension.is_outer
    # [D, e (x) t] = e (x) t
    assert ext.bracket(6, 3) == {3: 1}
    with pytest.raises(NotADerivation):
        semidirect_by_derivation(sl(2), LinearMap.identity(3))
    current = current_algebra(sl(2), coeffs)
    dmap = lift_derivation(sl(2), coeffs, euler_derivation(coeffs))
    assert semidirect_by_derivation(current, dmap) == ext


def test_central_extension() -> None:
    """Extending abelian2 by xi(x,y) = 1 gives the Heisenberg algebra."""
    xi = Cocycle2(2, {(0, 1): 1})
    ext = central_extension(abelian(2), xi)
    assert ext == heisenberg()
    assert ext.extension is not None
    assert ext.extension.is_nontrivial
    trivial = central_extension(r2(), Cocycle2(2, {}))
    assert trivial.dim == 3
    assert trivial.bracket(0, 2) == {}
    with pytest.raises(NotACocycle):
        central_extension(sl(2), xi)


def test_extendable_euler_extension() -> None:
    """sl2 needs the contracted Laurent base to get a nontrivial cocycle."""
    found = extendable_euler_extension(sl(2))
    assert is_cocycle(found.algebra, found.cocycle)
    if found.fallback:
        assert found.algebra.dim == 10
    ext = central_extension(found.algebra, found.cocycle)
    assert ext.extension is not None
    assert ext.extension.is_nontrivial


def test_loop_window_dimensions() -> None:
    """Untwisted and Chevalley-twisted windows have the counted dimensions."""
    assert loop_window(sl(2), 1).dim == 9
    twisted = loop_window(builtin("sl2_z2"), 2)
    assert twisted.dim == 7
    e_top = twisted.index_of(1, 1)
    assert e_top is not None
    assert twisted.bracket(e_top, e_top) == {}
    with pytest.raises(InvalidGrading):
        loop_window(builtin("sl2_z"), 2)


def test_loop_window_undefined_brackets() -> None:
    """Brackets leaving the window are undefined, never zero."""
    window = loop_window(sl(2), 2)
    e_top, f_top = window.index_of(1, 2), window.index_of(2, 2)
    assert e_top is not None and f_top is not None
    assert window.bracket(e_top, f_top) is None
    assert (min(e_top, f_top), max(e_top, f_top)) in window.undefined_pairs()
    e_one, f_low = window.index_of(1, 1), window.index_of(2, -1)
    assert e_one is not None and f_low is not None
    assert window.bracket(e_one, f_low) == {window.index_of(0, 0): 1}


def test_witt_window() -> None:
    """[e_i, e_j] = (j - i) e_(i+j) inside the window."""
    window = witt_window(3)
    assert window.dim == 7
    e = {i: window.indices_of_degree(i)[0] for i in range(-3, 4)}
    assert window.bracket(e[-1], e[1]) == {e[0]: 2}
    assert window.bracket(e[1], e[2]) == {e[3]: 1}
    assert window.bracket(e[1], e[1]) == {}
    assert window.bracket(e[2], e[3]) is None
    one_sided = witt_window(3, one_sided=True)
    assert one_sided.dim == 5
    assert min(one_sided.degrees) == -1
    with pytest.raises(ValueError):
        witt_window(1)


def test_kac_moody_window() -> None:
    """Euler action, central z and the Killing cocycle on the untwisted sl2 window."""
    window = kac_moody_window(sl(2), 2)
    d, z = window.special["d"], window.special["z"]
    e_two = window.index_of(1, 2)
    e_one, f_low = window.index_of(1, 1), window.index_of(2, -1)
    h_zero = window.index_of(0, 0)
    assert window.bracket(d, e_two) == {e_two: 2}
    assert all(window.bracket(z, i) == {} for i in range(window.dim))
    assert window.bracket(e_one, f_low) == {h_zero: 1, z: 4}


def test_kac_moody_reduces_to_loop() -> None:
    """Without d and the cocycle, the Kac-Moody window is the loop window."""
    loop = loop_window(sl(2), 2)
    bare = kac_moody_window(sl(2), 2, with_derivation=False, with_cocycle=False)
    assert bare.dim == loop.dim
    assert bare.labels == loop.labels
    assert bare.degrees == loop.degrees
    assert bare.bound == loop.bound
    assert bare.defined_table() == loop.defined_table()
    assert bare.special == {}
    no_d = kac_moody_window(sl(2), 2, with_derivation=False)
    assert no_d.dim == loop.dim + 1
    assert no_d.special == {"z": loop.dim}
    no_z = kac_moody_window(sl(2), 2, with_cocycle=False)
    assert no_z.special == {"d": loop.dim}
    assert no_z.bracket(loop.dim, no_z.index_of(1, 2)) == {no_z.index_of(1, 2): 2}


def test_loop_lift_read_back() -> None:
    """Lifting (x,x) -> y on r2 to the loop window and reading it back is exact."""
    base = r2()
    phi = BilinearMap(2, {(0, 0, 1): 1})
    window = loop_window(base, 2)
    lifted = loop_lift(window, phi)
    assert degree_of(lifted, window.grading) == 0
    x_one, x_minus = window.index_of(0, 1), window.index_of(0, -1)
    y_zero = window.index_of(1, 0)
    assert lifted.value(x_one, x_minus) == {y_zero: Fraction(1)}
    assert base_map_from_loop(window, lifted) == phi
