"""Gradings by Z and Z/n and degree decomposition of bilinear maps."""
# __init__ doesn't use the imported objects
# ruff: noqa: F401
from .core import (
    INTEGERS,
    Grading,
    GradedLieAlgebra,
    attach_grading,
    check_grading,
    as_graded,
    underlying,
)
from .decompose import (
    MIXED_DEGREE,
    Degree,
    coefficient_degree,
    homogeneous_parts,
    degree_of,
    HomogeneousDecomposition,
    decompose_bilinear_space,
)
