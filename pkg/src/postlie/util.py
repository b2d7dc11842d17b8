"""Provides basic scalar and sparse vector tools used in other submodules.

This module should not have dependencies on other package submodules.
"""
from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterable, List, Mapping, Tuple, TypeVar, Union

T = TypeVar("T")

ScalarLike = Union[int, str, Fraction, Rational]


def as_scalar(value: ScalarLike) -> Fraction:
    """Convert a value to an exact Fraction.

    Floats are rejected: a float has usually already been rounded, and
    silently turning it into a fraction would hide that.

    Arguments:
    ---------
    value:
        An int, a Fraction (or other exact rational), or a string in the
        "p/q" or "p" format.

    Returns:
    -------
    Fraction in lowest terms.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("Booleans are not scalars.")
    if isinstance(value, float):
        raise TypeError(f"Refusing to convert float {value!r} to an exact scalar.")
    if isinstance(value, str):
        return parse_scalar(value)
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    # sympy and gmpy rationals expose numerator/denominator
    try:
        return Fraction(int(value.numerator), int(value.denominator))  # type: ignore
    except AttributeError as e:
        raise TypeError(f"Cannot interpret {value!r} as an exact scalar.") from e


def parse_scalar(text: str) -> Fraction:
    """Parse a scalar written as "p/q" or "p"."""
    stripped = text.strip()
    if not stripped:
        raise ValueError("Empty scalar string.")
    try:
        return Fraction(stripped)
    except ValueError as e:
        raise ValueError(f"Malformed scalar {text!r}.") from e


def format_scalar(value: Fraction) -> str:
    """Format a scalar as "p/q", or "p" when the denominator is 1."""
    return str(value)


def sparse(vector: Iterable[ScalarLike]) -> Dict[int, Fraction]:
    """Drop zero entries of a dense vector."""
    out: Dict[int, Fraction] = {}
    for ind, val in enumerate(vector):
        frac = as_scalar(val)
        if frac:
            out[ind] = frac
    return out


def dense(vector: Mapping[int, Fraction], size: int) -> List[Fraction]:
    """Expand a sparse vector to a list of the given length."""
    out = [Fraction(0)] * size
    for ind, val in vector.items():
        out[ind] = val
    return out


def add_into(
    target: Dict[int, Fraction], source: Mapping[int, Fraction], factor: Fraction
) -> None:
    """Add factor*source to target in place, dropping entries that cancel."""
    if not factor:
        return
    for key, val in source.items():
        new = target.get(key, 0) + factor * val
        if new:
            target[key] = new
        else:
            target.pop(key, None)


def sort_items(table: Mapping[T, Fraction]) -> List[Tuple[T, Fraction]]:
    """Items of a sparse table in key order, for deterministic output."""
    return sorted(table.items(), key=lambda x: x[0])  # type: ignore
