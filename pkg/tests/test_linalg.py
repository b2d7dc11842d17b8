r"""Tests exact linear algebra: rref, kernels and linear solving.

Randomized checks draw small rational matrices with hypothesis; every property
is checked with exact equality.
"""
from fractions import Fraction
from typing import Final, List
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from postlie.errors import DimensionMismatch
from postlie.linalg import (
    Echelon,
    Matrix,
    kernel_basis,
    kernel_of_rows,
    rref,
    solve_linear,
    span_basis,
)

MAX_SHAPE: Final = 5

# seeds the numpy-drawn integer matrices
rseed: Final = 42100

fractions = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def matrices(draw: st.DrawFn) -> Matrix:
    """Small rational matrices."""
    rows = draw(st.integers(min_value=1, max_value=MAX_SHAPE))
    cols = draw(st.integers(min_value=1, max_value=MAX_SHAPE))
    entries = draw(st.lists(fractions, min_size=rows * cols, max_size=rows * cols))
    return Matrix(rows, cols, entries)


@pytest.fixture
def random_integer_matrix(seed: int = rseed) -> Matrix:
    """A 4x6 integer matrix of rank at most 3."""
    rng = np.random.default_rng(seed=seed)
    left = rng.integers(-3, 4, size=(4, 3))
    right = rng.integers(-3, 4, size=(3, 6))
    return Matrix.from_rows([[int(x) for x in row] for row in left @ right])


def test_rref_examples() -> None:
    """Check the reduced forms of identity, dependent and permuted matrices."""
    ident = Matrix.identity(2)
    res = rref(ident)
    assert res.reduced == ident
    assert res.pivot_columns == [0, 1]
    assert res.rank == 2

    res = rref(Matrix.from_rows([[1, 2], [2, 4]]))
    assert res.reduced == Matrix.from_rows([[1, 2], [0, 0]])
    assert res.pivot_columns == [0]
    assert res.rank == 1

    res = rref(Matrix.from_rows([[0, 1], [1, 0]]))
    assert res.reduced == ident
    assert res.rank == 2


def test_kernel_examples() -> None:
    """Check canonical kernels: full rank, one relation and the zero map."""
    assert kernel_basis(Matrix.identity(3)) == []
    assert kernel_basis(Matrix.from_rows([[1, -1]])) == [[1, 1]]
    zero = kernel_basis(Matrix.zeros(2, 3))
    assert zero == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


def test_solve_examples() -> None:
    """Check consistent, underdetermined and inconsistent systems."""
    solved = solve_linear(Matrix.identity(2), [1, 2])
    assert solved == ([1, 2], [])

    solved = solve_linear(Matrix.from_rows([[1, 1]]), [3])
    assert solved is not None
    particular, homogeneous = solved
    assert particular == [3, 0]
    assert homogeneous == [[-1, 1]]

    assert solve_linear(Matrix.from_rows([[1], [1]]), [1, 2]) is None


def test_solve_dimension_mismatch() -> None:
    """A right hand side of the wrong length is a contract violation."""
    with pytest.raises(DimensionMismatch):
        solve_linear(Matrix.identity(2), [1, 2, 3])


def test_floats_rejected() -> None:
    """Floats never enter exact matrices."""
    with pytest.raises(TypeError):
        Matrix(1, 1, [0.5])


def test_integer_matrix_rank(random_integer_matrix: Matrix) -> None:
    """Rank plus nullity equals the column count on a seeded low-rank matrix."""
    res = rref(random_integer_matrix)
    assert res.rank <= 3
    assert res.rank + len(kernel_basis(random_integer_matrix)) == 6


@settings(deadline=None)
@given(matrices())
def test_kernel_properties(m: Matrix) -> None:
    """Kernel vectors are annihilated and rank-nullity holds."""
    kernel = kernel_basis(m)
    for vec in kernel:
        assert all(x == 0 for x in m.apply(vec))
    assert rref(m).rank + len(kernel) == m.cols


@settings(deadline=None)
@given(matrices())
def test_rref_idempotent(m: Matrix) -> None:
    """Reducing a reduced matrix changes nothing."""
    reduced = rref(m).reduced
    assert rref(reduced).reduced == reduced


@settings(deadline=None)
@given(matrices(), st.data())
def test_solve_property(m: Matrix, data: st.DataObject) -> None:
    """Reported particular solutions solve the system exactly."""
    rhs: List[Fraction] = data.draw(
        st.lists(fractions, min_size=m.rows, max_size=m.rows)
    )
    solved = solve_linear(m, rhs)
    if solved is None:
        # inconsistent: rhs is outside the column span
        cols = [
            {i: m[i, j] for i in range(m.rows) if m[i, j]} for j in range(m.cols)
        ]
        rank = len(span_basis(cols, m.rows))
        aug = cols + [{i: v for i, v in enumerate(rhs) if v}]
        assert len(span_basis(aug, m.rows)) == rank + 1
        return
    particular, homogeneous = solved
    assert m.apply(particular) == list(rhs)
    assert homogeneous == kernel_basis(m)


@settings(deadline=None)
@given(matrices())
def test_echelon_matches_rref(m: Matrix) -> None:
    """Incremental elimination agrees with rref and kernel_of_rows."""
    ech = Echelon(m.cols)
    ech.extend(m.sparse_rows())
    assert ech.rank == rref(m).rank
    assert ech.pivot_columns == rref(m).pivot_columns
    assert len(kernel_of_rows(m.sparse_rows(), m.cols)) == m.cols - ech.rank
