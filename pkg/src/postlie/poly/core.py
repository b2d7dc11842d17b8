r"""Polynomial rings over the rationals and the PolyIdeal container.

Polynomials are sympy PolyElement objects over QQ in variables c1..cm with
graded lexicographic order (variables in basis order). They print and parse
in the grammar

    3/2*c1^2*c3 - c2

with terms in decreasing order and coefficients as p/q.
"""

import re
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple
from sympy import QQ
from sympy.parsing.sympy_parser import parse_expr
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyElement, PolyRing

VARIABLE_PREFIX = "c"

Monomial = Tuple[int, ...]


def make_ring(nvars: int, prefix: str = VARIABLE_PREFIX) -> PolyRing:
    """QQ[c1..cm] with grlex order; nvars must be positive."""
    if nvars < 1:
        raise ValueError(f"Polynomial rings need at least one variable, got {nvars}.")
    return PolyRing([f"{prefix}{i + 1}" for i in range(nvars)], QQ, grlex)


def to_qq(value: Fraction) -> object:
    """Fraction to a QQ element."""
    return QQ(value.numerator, value.denominator)


def from_qq(value: object) -> Fraction:
    """QQ element (or int) to a Fraction."""
    if isinstance(value, int):
        return Fraction(value)
    return Fraction(int(value.numerator), int(value.denominator))  # type: ignore


def from_terms(ring: PolyRing, terms: Dict[Monomial, Fraction]) -> PolyElement:
    """Polynomial from exponent tuples and Fraction coefficients."""
    return ring.from_dict({m: to_qq(c) for m, c in terms.items() if c})


def has_constant_term(poly: PolyElement) -> bool:
    """Whether the polynomial does not vanish at the origin."""
    return bool(poly.get(poly.ring.zero_monom, 0))


def _format_monomial(ring: PolyRing, monom: Monomial) -> str:
    parts = []
    for sym, exp in zip(ring.symbols, monom):
        if exp == 1:
            parts.append(str(sym))
        elif exp > 1:
            parts.append(f"{sym}^{exp}")
    return "*".join(parts)


def format_poly(poly: PolyElement) -> str:
    """Canonical text form, e.g. "3/2*c1^2*c3 - c2"; the zero polynomial is "0"."""
    if not poly:
        return "0"
    ring = poly.ring
    out = ""
    for monom, coeff in poly.terms():
        frac = from_qq(coeff)
        mono = _format_monomial(ring, monom)
        mag = abs(frac)
        if mono:
            body = mono if mag == 1 else f"{mag}*{mono}"
        else:
            body = str(mag)
        if not out:
            out = f"-{body}" if frac < 0 else body
        else:
            out += f" - {body}" if frac < 0 else f" + {body}"
    return out


_TOKEN = re.compile(r"^[\sc0-9+\-*/^()]*$")


def parse_poly(text: str, ring: PolyRing) -> PolyElement:
    """Parse the canonical text form back into ring.

    Raises ValueError on characters outside the grammar or on unknown
    variables.
    """
    if not _TOKEN.match(text):
        raise ValueError(f"Malformed polynomial {text!r}.")
    names = {str(sym): sym for sym in ring.symbols}
    for var in re.findall(r"c\d+", text):
        if var not in names:
            raise ValueError(f"Unknown variable {var} in {text!r}.")
    expr = parse_expr(text.replace("^", "**"), local_dict=names, evaluate=True)
    return ring.from_expr(expr)


class PolyIdeal:
    r"""Ideal of QQ[c1..cm] given by generators.

    The reduced Groebner basis is computed on demand by poly.groebner and
    cached on the instance. With zero variables there is no ring and the
    ideal is necessarily empty.
    """

    def __init__(
        self,
        nvars: int,
        generators: Sequence[PolyElement] = (),
        ring: Optional[PolyRing] = None,
    ) -> None:
        """Initialize; zero generators are dropped and duplicates removed."""
        if ring is None and nvars > 0:
            ring = make_ring(nvars)
        self._ring = ring
        self._nvars = nvars
        seen = set()
        gens: List[PolyElement] = []
        for poly in generators:
            if poly and poly not in seen:
                seen.add(poly)
                gens.append(poly)
        if gens and ring is None:
            raise ValueError("Generators given for an ideal without variables.")
        self._generators = gens
        self.groebner_basis: Optional[List[PolyElement]] = None

    @property
    def nvars(self) -> int:
        """Number of variables."""
        return self._nvars

    @property
    def ring(self) -> Optional[PolyRing]:
        """The polynomial ring (None without variables)."""
        return self._ring

    @property
    def generators(self) -> List[PolyElement]:
        """Nonzero generators in insertion order."""
        return list(self._generators)

    @property
    def is_empty(self) -> bool:
        """Whether the ideal is the zero ideal."""
        return not self._generators

    def __len__(self) -> int:
        return len(self._generators)

    def strings(self) -> List[str]:
        """Generators in canonical text form."""
        return [format_poly(p) for p in self._generators]

    def __repr__(self) -> str:
        return f"PolyIdeal({self._nvars} vars, {len(self._generators)} generators)"
