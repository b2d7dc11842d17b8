r"""Tests the CPA solver, the condition checks and the extension predictions."""
from fractions import Fraction
from typing import Final
import pytest
from postlie.bilinear import BilinearMap, BilinearMapSpace, d_space
from postlie.construct import (
    abelian,
    central_extension,
    current_algebra,
    euler_extension,
    extendable_euler_extension,
    kac_moody_window,
    loop_window,
    multiplication_map,
    r2,
    sl,
    tensor_lift,
    truncated_polynomial_algebra,
)
from postlie.cpa import (
    DEFAULT_SOLVE_OPTIONS,
    FAILS,
    HOLDS_BY_COROLLARY,
    INCONCLUSIVE,
    LINEAR_SPACE,
    ZERO_ONLY,
    check_condition_C,
    classify_ideal,
    commutes,
    compare_with_oracle,
    cpa_quadratic_ideal,
    cpa_solve,
    decompose_extension_map,
    direct_cpa_ideal,
    direct_cpa_solve,
    lemma2_predicted_space,
    oracle_sample,
    solve_window_with_escalation,
    verify_cpa,
    window_degree_set,
)
from postlie.errors import HypothesisViolated
from postlie.lie import Cocycle2, LinearMap
from postlie.poly import PolyIdeal, make_ring, parse_poly

rseed: Final = 42100


def _ideal(nvars: int, *texts: str) -> PolyIdeal:
    ring = make_ring(nvars)
    return PolyIdeal(nvars, [parse_poly(t, ring) for t in texts], ring)


def test_classify_ideal() -> None:
    """Each classification step on a hand-sized ideal."""
    assert classify_ideal(PolyIdeal(0)).verdict == ZERO_ONLY
    empty = classify_ideal(PolyIdeal(2))
    assert empty.verdict == LINEAR_SPACE
    assert len(empty.directions) == 2
    assert classify_ideal(_ideal(2, "c1^2", "c2^2")).verdict == ZERO_ONLY
    line = classify_ideal(_ideal(2, "c1"))
    assert line.verdict == LINEAR_SPACE
    assert line.directions == [{1: Fraction(1)}]
    assert classify_ideal(_ideal(2, "c1*c2")).verdict == INCONCLUSIVE
    # c1^2 has no linear part; the c2 axis is supplied as the candidate
    squared = _ideal(2, "c1^2")
    assert classify_ideal(squared).verdict == INCONCLUSIVE
    found = classify_ideal(squared, candidate=[{1: Fraction(1)}])
    assert found.verdict == LINEAR_SPACE
    assert found.directions == [{1: Fraction(1)}]


def test_sl2_zero_only() -> None:
    """Every CPA structure on sl2 vanishes."""
    report = cpa_solve(sl(2))
    assert report.verdict == ZERO_ONLY
    assert report.dcomm_dim == 0
    assert report.solution_dim == 0
    assert report.solution_space().dim == 0
    assert "ZeroOnly" in report.summary()


def test_abelian_line() -> None:
    """On a one-dimensional algebra every symmetric map is a CPA structure."""
    report = cpa_solve(abelian(1))
    assert report.verdict == LINEAR_SPACE
    assert report.solution_dim == 1
    assert report.ideal.is_empty


def test_r2_not_linear() -> None:
    """The CPA structures on r2 form two parallel lines; witnesses are verified."""
    alg = r2()
    report = cpa_solve(alg)
    assert report.dcomm_dim == 3
    assert report.verdict == INCONCLUSIVE
    assert report.solution_dim is None
    assert report.certificate
    assert report.witnesses
    for phi in report.witnesses:
        assert not phi.is_zero()
        assert verify_cpa(alg, phi).ok
    with pytest.raises(ValueError):
        report.solution_space()


def test_r2_ideal_vanishes_on_known_structures() -> None:
    """The quadratic ideal vanishes at (x,x) -> y and (x,y) -> y."""
    alg = r2()
    report = cpa_solve(alg)
    maps = report.dcomm.basis
    for known in ({(0, 0, 1): 1}, {(0, 1, 1): 1, (1, 0, 1): 1}):
        coords = report.dcomm.coordinates(BilinearMap(2, known))
        assert coords is not None
        ideal = cpa_quadratic_ideal(alg, maps)
        point = [int(c) for c in coords]
        assert all(not p(*point) for p in ideal.generators)


def test_verify_rejects_map_dimension() -> None:
    """Maps must act on the algebra they are checked against."""
    with pytest.raises(ValueError):
        verify_cpa(sl(2), BilinearMap.zero(2))


def test_condition_C() -> None:
    """sl2 passes by the linear checks; r2 fails with a commuting witness."""
    found = check_condition_C(sl(2))
    assert found.verdict == HOLDS_BY_COROLLARY
    assert found.holds
    assert found.details["skew_kernel_dim"] == 0
    failed = check_condition_C(r2())
    assert failed.verdict == FAILS
    assert not failed.holds
    assert failed.witness is not None
    assert failed.witness.is_symmetric
    assert commutes(failed.witness)


def test_decompose_extension_map() -> None:
    """A symmetric map on L + KD splits into components and reassembles."""
    ext = euler_extension(sl(2), truncated_polynomial_algebra(2))
    d = ext.dim - 1
    coeffs = {(d, d, d): 1, (0, d, 2): 3, (d, 0, 2): 3, (1, 1, d): 2}
    phi = BilinearMap(ext.dim, coeffs)
    parts = decompose_extension_map(phi, ext)
    assert parts.eta == 1
    assert parts.psi.image(0) == {2: 3}
    assert parts.lam == {(1, 1): 2}
    assert parts.phi.is_zero()
    assert parts.reassemble() == phi
    assert not parts.is_zero()
    with pytest.raises(ValueError):
        decompose_extension_map(BilinearMap(ext.dim, {(0, d, 2): 1}), ext)
    with pytest.raises(ValueError):
        decompose_extension_map(BilinearMap.zero(3), sl(2))


def test_prediction_hypotheses() -> None:
    """The prediction refuses algebras outside its hypotheses."""
    with pytest.raises(HypothesisViolated):
        lemma2_predicted_space(sl(2))
    heis = central_extension(abelian(2), Cocycle2(2, {(0, 1): 1}))
    with pytest.raises(HypothesisViolated) as info:
        lemma2_predicted_space(heis)
    assert "centerless" in str(info.value)
    trivial = central_extension(sl(2), Cocycle2(3, {(1, 2): 1}))
    with pytest.raises(HypothesisViolated):
        lemma2_predicted_space(trivial)


def test_kac_moody_structure_verifies() -> None:
    """(d,d) -> z passes every exact instance on the Kac-Moody window."""
    window = kac_moody_window(sl(2), 3)
    d, z = window.special["d"], window.special["z"]
    phi = BilinearMap(window.dim, {(d, d, z): 1})
    assert verify_cpa(window, phi, window_degree_set(window, None)).ok
    wrong = BilinearMap(window.dim, {(d, d, d): 1})
    assert not verify_cpa(window, wrong, window_degree_set(window, None)).ok


@pytest.mark.slow
def test_kac_moody_solution_line() -> None:
    """The Kac-Moody window has a one-dimensional solution space."""
    window = kac_moody_window(sl(2), 3)
    d, z = window.special["d"], window.special["z"]
    report = cpa_solve(window)
    assert report.verdict == LINEAR_SPACE
    assert report.solution_dim == 1
    expected = BilinearMapSpace(window.dim, [BilinearMap(window.dim, {(d, d, z): 1})])
    assert report.solution_space() == expected


@pytest.mark.slow
def test_central_extension_prediction() -> None:
    """The central extension of the Euler extension matches the predicted line."""
    found = extendable_euler_extension(sl(2))
    ext = central_extension(found.algebra, found.cocycle)
    predicted = lemma2_predicted_space(ext)
    assert predicted.dim == 1
    report = cpa_solve(ext, DEFAULT_SOLVE_OPTIONS, candidate=predicted.basis)
    assert report.verdict == LINEAR_SPACE
    assert report.solution_space() == predicted


def test_tensor_lift_of_cpa_structure() -> None:
    """(x,x) -> y on r2 lifts with the product of A to a CPA structure on r2 (x) A."""
    coeffs = truncated_polynomial_algebra(2)
    phi = BilinearMap(2, {(0, 0, 1): 1})
    alpha = multiplication_map(coeffs, LinearMap.identity(2))
    lifted = tensor_lift(r2(), coeffs, phi, alpha)
    current = current_algebra(r2(), coeffs)
    # (x (x) 1, x (x) t) -> y (x) t
    assert lifted.value(0, 1) == {3: 1}
    assert lifted.value(1, 1) == {}
    assert d_space(current).contains(lifted)
    assert verify_cpa(current, lifted).ok


@pytest.mark.slow
def test_escalation_stops_without_survivors() -> None:
    """The loop window of sl2 needs no escalation."""
    reports = solve_window_with_escalation(lambda n: loop_window(sl(2), n), 2)
    assert len(reports) == 1
    assert reports[0].survivors == []
    assert reports[0].verdict == ZERO_ONLY


def test_direct_ideal_r2() -> None:
    """The direct system of r2: 2 symmetry, 4 derivation and 4 post-Lie generators."""
    ideal = direct_cpa_ideal(r2())
    assert ideal.nvars == 8
    assert len(ideal.generators) == 10
    # lambda_{ij}^k sits at (i*2 + j)*2 + k
    x_x_to_y = [0, 1, 0, 0, 0, 0, 0, 0]
    assert all(not p(*x_x_to_y) for p in ideal.generators)
    y_y_to_y = [0, 0, 0, 0, 0, 0, 0, 1]
    assert any(p(*y_y_to_y) for p in ideal.generators)
    assert direct_cpa_solve(abelian(1)) == (LINEAR_SPACE, 1)


def test_oracle_sample_is_seeded() -> None:
    """The oracle sample is a function of the seed."""
    first = oracle_sample(rseed)
    second = oracle_sample(rseed)
    names = [name for name, _ in first]
    assert names == ["sl2'", "r2'", "heisenberg'", "abelian1", "abelian2"]
    assert all(a == b for (_, a), (_, b) in zip(first, second))


@pytest.mark.slow
def test_oracle_agrees() -> None:
    """The structured and the direct solver agree on the sample."""
    for name, alg in oracle_sample(rseed):
        assert compare_with_oracle(alg, name).agrees, name
