r"""Finite degree windows of infinite-dimensional Z-graded Lie algebras.

A window keeps the basis vectors of degree low..high of a loop, Witt or
Kac-Moody type algebra. The bracket of two window elements is defined only
when the degree of the result lies in the window too; otherwise bracket
returns None. Windows never project: an undefined bracket is not zero, and the
solvers only use identities all of whose terms are defined, so every
constraint they derive holds on the infinite algebra.
"""

import logging
from fractions import Fraction
from itertools import combinations
from typing import Dict, Final, List, Mapping, Optional, Sequence, Tuple, Union
from ..bilinear.core import BilinearMap
from ..errors import InvalidGrading, JacobiViolation
from ..grading.core import INTEGERS, GradedLieAlgebra, Grading, as_graded
from ..lie import BracketAlgebra, LieAlgebra, killing_form
from ..linalg import SparseVector
from ..util import add_into

_LOG = logging.getLogger(__name__)

LOOP_KIND: Final = "loop"
WITT_KIND: Final = "witt"
KAC_MOODY_KIND: Final = "kac-moody"

DERIVATION_LABEL: Final = "d"
CENTRAL_LABEL: Final = "z"


class AlgebraWindow(BracketAlgebra):
    r"""Degree-truncated slice of a Z-graded algebra with a partial bracket.

    Basis vector i has Z-degree degrees[i] in [low, high]. For loop and
    Kac-Moody windows, base_index(i) gives the basis vector of the underlying
    finite-dimensional algebra (None for d and z), and the degree is the loop
    exponent.
    """

    def __init__(
        self,
        kind: str,
        bound: int,
        low: int,
        high: int,
        labels: Sequence[str],
        degrees: Sequence[int],
        table: Mapping[Tuple[int, int], SparseVector],
        base: Optional[GradedLieAlgebra] = None,
        base_indices: Optional[Sequence[Optional[int]]] = None,
        special: Optional[Dict[str, int]] = None,
        name: Optional[str] = None,
        validate: bool = True,
    ) -> None:
        """Initialize a window.

        Arguments:
        ---------
        kind (string):
            LOOP_KIND, WITT_KIND or KAC_MOODY_KIND.
        bound (integer):
            The window bound N.
        low, high (integers):
            Smallest and largest degree kept.
        labels (list of strings):
            Basis labels.
        degrees (list of integers):
            Z-degree of each basis vector.
        table (mapping):
            (i, j) -> coordinates of [b_i, b_j], for i < j with a defined,
            nonzero bracket.
        base (GradedLieAlgebra or None):
            Underlying algebra for loop and Kac-Moody windows.
        base_indices (list or None):
            Base basis index of each window vector (None for extra vectors).
        special (dict or None):
            Indices of named extra vectors ("d", "z").
        name (string or None):
            Name for reports.
        validate (boolean):
            If true, Jacobi is checked on every triple whose evaluation stays
            in the window.
        """
        self._kind = kind
        self._bound = bound
        self._low = low
        self._high = high
        self._labels = list(labels)
        self._degrees = [int(d) for d in degrees]
        self._base = base
        self._base_indices = (
            list(base_indices) if base_indices is not None else [None] * len(labels)
        )
        self.special = {} if special is None else dict(special)
        self.name = name
        self._table: Dict[Tuple[int, int], SparseVector] = {}
        for (i, j), vec in table.items():
            if not self.in_window(self._degrees[i] + self._degrees[j]):
                raise ValueError(
                    f"Bracket ({i},{j}) given for an out-of-window degree."
                )
            if vec:
                self._table[(i, j)] = dict(vec)
                self._table[(j, i)] = {k: -v for k, v in vec.items()}
        self._index: Dict[Tuple[Optional[int], int], int] = {}
        for i, (b, d) in enumerate(zip(self._base_indices, self._degrees)):
            if b is not None:
                self._index[(b, d)] = i
        if validate:
            self.check_jacobi()

    @property
    def dim(self) -> int:
        """Number of basis vectors in the window."""
        return len(self._labels)

    @property
    def labels(self) -> List[str]:
        """Basis labels."""
        return self._labels

    @property
    def is_partial(self) -> bool:
        """Windows have undefined brackets."""
        return True

    @property
    def kind(self) -> str:
        """Family of the windowed algebra."""
        return self._kind

    @property
    def bound(self) -> int:
        """Window bound N."""
        return self._bound

    @property
    def low(self) -> int:
        """Smallest degree in the window."""
        return self._low

    @property
    def high(self) -> int:
        """Largest degree in the window."""
        return self._high

    @property
    def one_sided(self) -> bool:
        """Whether the window is not symmetric around 0."""
        return self._low != -self._high

    @property
    def degrees(self) -> List[int]:
        """Z-degrees of the basis vectors."""
        return list(self._degrees)

    def degree(self, i: int) -> int:
        """Z-degree of basis vector i."""
        return self._degrees[i]

    @property
    def grading(self) -> Grading:
        """The Z-grading by degree."""
        return Grading(self._degrees, modulus=INTEGERS)

    @property
    def base(self) -> Optional[GradedLieAlgebra]:
        """Underlying graded algebra, if any."""
        return self._base

    def base_index(self, i: int) -> Optional[int]:
        """Base basis vector behind window vector i."""
        return self._base_indices[i]

    def index_of(self, base_index: int, exponent: int) -> Optional[int]:
        """Window index of base_index (x) t^exponent, if present."""
        return self._index.get((base_index, exponent))

    def in_window(self, degree: int) -> bool:
        """Whether a degree lies in the window."""
        return self._low <= degree <= self._high

    def indices_of_degree(self, degree: int) -> List[int]:
        """Basis vectors of the given degree."""
        return [i for i, d in enumerate(self._degrees) if d == degree]

    def bracket(self, i: int, j: int) -> Optional[SparseVector]:
        """Coordinates of [b_i, b_j], or None when its degree leaves the window."""
        if not self.in_window(self._degrees[i] + self._degrees[j]):
            return None
        return self._table.get((i, j), _EMPTY)

    def defined_table(self) -> Dict[Tuple[int, int], SparseVector]:
        """Nonzero defined brackets on pairs i < j."""
        return {k: dict(v) for k, v in sorted(self._table.items()) if k[0] < k[1]}

    def undefined_pairs(self) -> List[Tuple[int, int]]:
        """Pairs i < j whose bracket is undefined."""
        return [
            (i, j)
            for i, j in combinations(range(self.dim), 2)
            if not self.in_window(self._degrees[i] + self._degrees[j])
        ]

    def check_jacobi(self) -> None:
        """Check Jacobi on every triple whose complete evaluation is defined."""
        deg = self._degrees
        for i, j, k in combinations(range(self.dim), 3):
            if not (
                self.in_window(deg[i] + deg[j])
                and self.in_window(deg[j] + deg[k])
                and self.in_window(deg[k] + deg[i])
                and self.in_window(deg[i] + deg[j] + deg[k])
            ):
                continue
            out: SparseVector = {}
            for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                for u, val in self._table.get((a, b), _EMPTY).items():
                    add_into(out, self._table.get((u, c), _EMPTY), val)
            if out:
                raise JacobiViolation((i, j, k), out)

    def __repr__(self) -> str:
        name = f" {self.name}" if self.name else ""
        return f"AlgebraWindow({self._kind}{name}, N={self._bound}, dim {self.dim})"


_EMPTY: SparseVector = {}


def _cyclic(alg: Union[LieAlgebra, GradedLieAlgebra]) -> GradedLieAlgebra:
    graded = as_graded(alg)
    if not graded.grading.is_cyclic:
        raise InvalidGrading(
            f"Loop windows need a Z/n grading, got {graded.grading.group}."
        )
    return graded


def _loop_part(
    graded: GradedLieAlgebra, bound: int
) -> Tuple[List[str], List[int], List[int], Dict[Tuple[int, int], SparseVector]]:
    """Basis, degrees, base indices and bracket table of the loop window."""
    grading = graded.grading
    alg = graded.algebra
    labels: List[str] = []
    degrees: List[int] = []
    base_indices: List[int] = []
    index: Dict[Tuple[int, int], int] = {}
    for exp in range(-bound, bound + 1):
        for x in grading.component(exp):
            index[(x, exp)] = len(labels)
            labels.append(f"{alg.labels[x]}*t^{exp}")
            degrees.append(exp)
            base_indices.append(x)
    table: Dict[Tuple[int, int], SparseVector] = {}
    for p, q in combinations(range(len(labels)), 2):
        exp = degrees[p] + degrees[q]
        if abs(exp) > bound:
            continue
        vec = {}
        for k, val in alg.bracket(base_indices[p], base_indices[q]).items():
            # grading compatibility guarantees the target exists
            vec[index[(k, exp)]] = val
        if vec:
            table[(p, q)] = vec
    return labels, degrees, base_indices, table


def loop_window(alg: Union[LieAlgebra, GradedLieAlgebra], bound: int) -> AlgebraWindow:
    r"""Window |i| <= N of the (twisted) loop algebra sum_i L_{i mod n} (x) t^i.

    Arguments:
    ---------
    alg (LieAlgebra or GradedLieAlgebra):
        Base algebra with a Z/n grading; plain algebras get the trivial Z/1
        grading (untwisted loop algebra).
    bound (positive integer):
        Window bound N.

    Returns:
    -------
    AlgebraWindow with basis x (x) t^i for x homogeneous of degree i mod n; the
    bracket [x (x) t^i, y (x) t^j] = [x,y] (x) t^(i+j) is defined iff
    |i + j| <= N. Raises InvalidGrading for integer gradings.
    """
    if bound < 1:
        raise ValueError(f"Window bound must be positive, got {bound}.")
    graded = _cyclic(alg)
    labels, degrees, base_indices, table = _loop_part(graded, bound)
    _LOG.debug("loop window of %r, N=%d: dim %d", graded, bound, len(labels))
    return AlgebraWindow(
        LOOP_KIND,
        bound,
        -bound,
        bound,
        labels,
        degrees,
        table,
        base=graded,
        base_indices=base_indices,
        name=f"loop({graded.name or 'L'},{graded.grading.group})",
    )


def witt_window(bound: int, one_sided: bool = False) -> AlgebraWindow:
    r"""Window of the Witt algebra [e_i, e_j] = (j - i) e_(i+j).

    Arguments:
    ---------
    bound (integer >= 2):
        Largest index N.
    one_sided (boolean):
        If true, indices run over -1..N, else over -N..N.
    """
    if bound < 2:
        raise ValueError(f"Witt windows need N >= 2, got {bound}.")
    low = -1 if one_sided else -bound
    exps = list(range(low, bound + 1))
    table: Dict[Tuple[int, int], SparseVector] = {}
    for p, q in combinations(range(len(exps)), 2):
        i, j = exps[p], exps[q]
        if low <= i + j <= bound and j != i:
            table[(p, q)] = {exps.index(i + j): Fraction(j - i)}
    return AlgebraWindow(
        WITT_KIND,
        bound,
        low,
        bound,
        [f"e{i}" for i in exps],
        exps,
        table,
        name="witt(one-sided)" if one_sided else "witt",
    )


def kac_moody_window(
    alg: Union[LieAlgebra, GradedLieAlgebra],
    bound: int,
    with_derivation: bool = True,
    with_cocycle: bool = True,
) -> AlgebraWindow:
    r"""Window of the loop algebra extended by the Euler derivation d and central z.

    Arguments:
    ---------
    alg (LieAlgebra or GradedLieAlgebra):
        Simple base algebra with a Z/n grading (plain algebras are untwisted).
    bound (positive integer):
        Window bound N.
    with_derivation (boolean):
        If false, d is left out of the basis.
    with_cocycle (boolean):
        If false, the cocycle is dropped and z is left out of the basis. With
        both flags false the result has the basis, degrees and brackets of
        loop_window(alg, bound).

    Returns:
    -------
    AlgebraWindow on the loop window plus d and z (both of degree 0) with
    [d, x (x) t^i] = i x (x) t^i, z central, and
    [x (x) t^i, y (x) t^j] = [x,y] (x) t^(i+j) + i delta_(i+j,0) kappa(x,y) z,
    kappa the Killing form of the base.
    """
    if bound < 1:
        raise ValueError(f"Window bound must be positive, got {bound}.")
    graded = _cyclic(alg)
    base = graded.algebra
    labels, degrees, base_indices, table = _loop_part(graded, bound)
    n_loop = len(labels)
    special: Dict[str, int] = {}
    if with_derivation:
        d_ind = special[DERIVATION_LABEL] = n_loop
        for p in range(n_loop):
            if degrees[p]:
                # [x t^i, d] = -i x t^i
                table[(p, d_ind)] = {p: Fraction(-degrees[p])}
    if with_cocycle:
        z_ind = special[CENTRAL_LABEL] = n_loop + len(special)
        kmat = killing_form(base)
        for p, q in combinations(range(n_loop), 2):
            if degrees[p] + degrees[q] != 0:
                continue
            val = degrees[p] * kmat[base_indices[p], base_indices[q]]
            if val:
                table.setdefault((p, q), {})[z_ind] = val
    extra = list(special)
    _LOG.debug(
        "Kac-Moody window of %r, N=%d: dim %d", graded, bound, n_loop + len(extra)
    )
    return AlgebraWindow(
        KAC_MOODY_KIND,
        bound,
        -bound,
        bound,
        [*labels, *extra],
        [*degrees, *(0 for _ in extra)],
        table,
        base=graded,
        base_indices=[*base_indices, *(None for _ in extra)],
        special=special,
        name=f"kac-moody({graded.name or 'L'},{graded.grading.group})",
    )


def _representative(grading: Grading, value: int) -> int:
    """Smallest nonnegative integer in the class of value."""
    return grading.reduce(value) if grading.is_cyclic else value


def loop_lift(window: AlgebraWindow, phi: BilinearMap) -> BilinearMap:
    r"""Windowed map (x (x) t^i, y (x) t^j) -> phi(x,y) (x) t^(i+j).

    Entries whose output degree leaves the window are omitted. phi must have
    degree 0 for the base grading; otherwise some output has no window vector
    and a ValueError is raised.
    """
    base = window.base
    if base is None:
        raise ValueError("Only loop and Kac-Moody windows have a base algebra.")
    if phi.dim != base.dim:
        raise ValueError("Map dimension differs from the base algebra.")
    values: Dict[Tuple[int, int], SparseVector] = {}
    loop_indices = [p for p in range(window.dim) if window.base_index(p) is not None]
    for p in loop_indices:
        for q in loop_indices:
            exp = window.degree(p) + window.degree(q)
            if not window.in_window(exp):
                continue
            vec = phi.value(window.base_index(p), window.base_index(q))  # type: ignore
            out: SparseVector = {}
            for k, val in vec.items():
                target = window.index_of(k, exp)
                if target is None:
                    raise ValueError("Map is not of degree 0 for the base grading.")
                out[target] = val
            if out:
                values[(p, q)] = out
    return BilinearMap.from_values(window.dim, values)


def base_map_from_loop(window: AlgebraWindow, phi: BilinearMap) -> BilinearMap:
    r"""Read a base map back from the degree-0 part of a windowed map.

    For base vectors x, y of degrees r, s (smallest nonnegative representatives)
    the value phi(x,y) is the t^(r+s) part of Phi(x (x) t^r, y (x) t^s).
    """
    base = window.base
    if base is None:
        raise ValueError("Only loop and Kac-Moody windows have a base algebra.")
    grading = base.grading
    values: Dict[Tuple[int, int], SparseVector] = {}
    for x in range(base.dim):
        for y in range(base.dim):
            r = _representative(grading, grading.degree(x))
            s = _representative(grading, grading.degree(y))
            p, q = window.index_of(x, r), window.index_of(y, s)
            if p is None or q is None or not window.in_window(r + s):
                raise ValueError("Window too small to read back the base map.")
            out = {
                window.base_index(k): val  # type: ignore [misc]
                for k, val in phi.value(p, q).items()
                if window.degree(k) == r + s and window.base_index(k) is not None
            }
            if out:
                values[(x, y)] = out
    return BilinearMap.from_values(base.dim, values)
