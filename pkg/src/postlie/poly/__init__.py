"""Polynomial ideals over QQ, Groebner bases and variety certificates."""
# __init__ doesn't use the imported objects
# ruff: noqa: F401
from .core import (
    VARIABLE_PREFIX,
    Monomial,
    make_ring,
    to_qq,
    from_qq,
    from_terms,
    has_constant_term,
    format_poly,
    parse_poly,
    PolyIdeal,
)
from .groebner import (
    GroebnerBudget,
    DEFAULT_BUDGET,
    spoly,
    buchberger,
    groebner,
    normal_form,
    ideal_membership,
    is_unit_ideal,
)
from .variety import (
    count_standard_monomials,
    variety_is_origin_only,
    radical_contains,
    substitute,
    parameterization,
    defining_forms,
    variety_equals_affine_subspace,
    linear_part,
)
