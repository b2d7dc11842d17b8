"""Exact rational linear algebra: matrices, echelon forms, kernels and solving."""
# __init__ doesn't use the imported objects
# ruff: noqa: F401
from .hints import Scalar, Vector, SparseVector
from .core import (
    Matrix,
    Echelon,
    RrefResult,
    rref,
    kernel_basis,
    solve_linear,
    span_basis,
    kernel_of_rows,
)
