"""Builders for current algebras, extensions, degree windows and named algebras."""
# __init__ doesn't use the imported objects
# ruff: noqa: F401
from .algebras import (
    CommutativeAlgebra,
    truncated_polynomial_algebra,
    square_zero_algebra,
    contracted_laurent_algebra,
    is_algebra_derivation,
    euler_derivation,
)
from .current import (
    tensor_index,
    current_algebra,
    lift_derivation,
    tensor_lift,
    multiplication_map,
    pairing_cocycle,
)
from .extension import (
    SEMIDIRECT_KIND,
    CENTRAL_KIND,
    TRUNCATION_DEGREES,
    ExtensionSpec,
    semidirect_by_derivation,
    central_extension,
    unit_vector,
    euler_extension,
    ExtendableCurrent,
    extendable_euler_extension,
)
from .window import (
    LOOP_KIND,
    WITT_KIND,
    KAC_MOODY_KIND,
    AlgebraWindow,
    loop_window,
    witt_window,
    kac_moody_window,
    loop_lift,
    base_map_from_loop,
)
from .builtin import (
    GRADED_BUILTINS,
    sl,
    heisenberg,
    r2,
    abelian,
    builtin,
    graded_builtins,
)
