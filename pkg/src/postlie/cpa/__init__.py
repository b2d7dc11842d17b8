"""Commutative post-Lie structures: quadratic ideal, solver, condition checks."""
# __init__ doesn't use the imported objects
# ruff: noqa: F401
from .ideal import (
    generic_map_table,
    window_degree_set,
    cpa_quadratic_ideal,
)
from .solve import (
    ZERO_ONLY,
    LINEAR_SPACE,
    INCONCLUSIVE,
    VERDICTS,
    DEFAULT_LOOP_WINDOW,
    DEFAULT_WITT_WINDOW,
    DEFAULT_ESCALATION,
    SolveOptions,
    DEFAULT_SOLVE_OPTIONS,
    VerificationResult,
    verify_cpa,
    Classification,
    classify_ideal,
    CpaReport,
    search_witnesses,
    cpa_solve,
    solve_window_with_escalation,
)
from .condition import (
    HOLDS_BY_COROLLARY,
    HOLDS_BY_DIRECT_CHECK,
    FAILS,
    CONDITION_INCONCLUSIVE,
    ConditionResult,
    commuting_ideal,
    commutes,
    check_condition_C,
)
from .extension import (
    ExtensionDecomposition,
    decompose_extension_map,
    lemma2_predicted_space,
)
from .oracle import (
    direct_cpa_ideal,
    OracleResult,
    direct_cpa_solve,
    oracle_sample,
    OracleComparison,
    compare_with_oracle,
)
