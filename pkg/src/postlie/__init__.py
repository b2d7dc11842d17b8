"""Exact computation of commutative post-Lie algebra structures.

A commutative post-Lie (CPA) structure on a Lie algebra L is a symmetric
bilinear map phi whose partial maps phi(x, .) are derivations and which
satisfies phi([x,y],z) = phi(x,phi(y,z)) - phi(y,phi(x,z)). This package
builds the algebras of interest (current, loop, Witt and Kac-Moody type, with
their derivation and central extensions), computes the linear spaces of
bilinear maps around the problem, and solves the quadratic part with Groebner
bases over the rationals.

The primary entry point is cpa_solve. Only the main routines are visible in the
package namespace; the subpackages hold the rest. See cli.py and the README for
the command line.
"""

# __init__ doesn't use the imported objects
# ruff: noqa: F401
from .errors import PostLieError, ResourceLimit
from .lie import LieAlgebra, from_structure_constants
from .construct import builtin, loop_window, witt_window, kac_moody_window
from .bilinear import BilinearMap, BilinearMapSpace, dcomm_space
from .cpa import cpa_solve, verify_cpa, check_condition_C, CpaReport
