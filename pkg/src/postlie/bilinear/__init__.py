"""Bilinear maps and the linear spaces D, Dcomm, C and Dassoc."""
# __init__ doesn't use the imported objects
# ruff: noqa: F401
from .core import (
    SPACE_KIND_D,
    SPACE_KIND_DCOMM,
    SPACE_KIND_C,
    SPACE_KIND_DASSOC,
    SPACE_KIND_CUSTOM,
    SPACE_KINDS,
    BilinearMap,
    BilinearMapSpace,
    independent,
)
from .assemble import (
    unknown_index,
    derivation_rows,
    d_space,
    dcomm_space,
    c_space,
    d_space_assoc,
)
from .window import windowed_dcomm_space, block_columns, exact_derivation_triple
from .check import (
    Violation,
    check_symmetry,
    check_derivation,
    check_post_lie,
    check_cpa,
    exact_post_lie_instance,
)
