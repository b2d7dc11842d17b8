"""Provides type definitions for exact linear algebra.

Currently these are just type aliases for hints.
"""
from fractions import Fraction
from typing import Dict, List

Scalar = Fraction
Vector = List[Fraction]
# column index -> nonzero value
SparseVector = Dict[int, Fraction]
