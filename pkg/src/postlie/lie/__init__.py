"""Lie algebras by structure constants and their linear invariants."""
# __init__ doesn't use the imported objects
# ruff: noqa: F401
from .core import (
    BracketAlgebra,
    LieAlgebra,
    LinearMap,
    Subspace,
    from_structure_constants,
    change_basis,
)
from .invariants import (
    center,
    derived_subalgebra,
    is_perfect,
    is_centerless,
    derivation_space,
    inner_derivation_space,
    all_derivations_inner,
    is_derivation,
    is_inner_derivation,
    centroid,
    is_central,
    skew_invariance_kernel,
    killing_form,
    killing_value,
)
from .cohomology import (
    Cocycle2,
    is_cocycle,
    two_cocycles,
    coboundaries,
    h2_dim,
    is_coboundary,
    pick_nontrivial_cocycle,
)
