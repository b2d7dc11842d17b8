r"""Exact rational linear algebra.

All routines work over fractions.Fraction and never round. Small problems go
through Matrix; the large constraint systems assembled elsewhere in the package
are fed row by row to Echelon, which keeps a sparse reduced row echelon form
and can stop as soon as the system has full column rank.
"""

import logging
from fractions import Fraction
from typing import (
    Dict,
    Iterable,
    Iterator,
    List,
    Mapping,
    NamedTuple,
    Optional,
    Sequence,
    Set,
    Tuple,
)
from ..errors import DimensionMismatch
from ..util import ScalarLike, as_scalar, dense
from .hints import SparseVector, Vector

_LOG = logging.getLogger(__name__)


class Matrix:
    r"""Immutable dense matrix of Fractions, stored row-major.

    Instances compare equal when shape and every entry agree.
    """

    def __init__(self, rows: int, cols: int, entries: Iterable[ScalarLike]) -> None:
        """Initialize from a flat row-major list of entries.

        Arguments:
        ---------
        rows (integer):
            Number of rows.
        cols (integer):
            Number of columns.
        entries (iterable of scalars):
            rows*cols values; anything as_scalar accepts.
        """
        if rows < 0 or cols < 0:
            raise ValueError(f"Matrix shape must be nonnegative, got ({rows},{cols}).")
        self._rows = rows
        self._cols = cols
        self._entries = tuple(as_scalar(x) for x in entries)
        if len(self._entries) != rows * cols:
            raise DimensionMismatch(
                f"Matrix of shape ({rows},{cols}) needs {rows * cols} entries, "
                f"got {len(self._entries)}."
            )

    @classmethod
    def from_rows(
        cls, rows: Sequence[Sequence[ScalarLike]], cols: Optional[int] = None
    ) -> "Matrix":
        """Create from a list of rows; cols is needed only when rows is empty."""
        if cols is None:
            if not rows:
                raise ValueError("Cannot infer column count of an empty row list.")
            cols = len(rows[0])
        entries: List[ScalarLike] = []
        for row in rows:
            if len(row) != cols:
                raise DimensionMismatch("Rows of a matrix must have equal length.")
            entries.extend(row)
        return cls(len(rows), cols, entries)

    @classmethod
    def from_sparse(cls, rows: Iterable[Mapping[int, Fraction]], cols: int) -> "Matrix":
        """Create from sparse rows (column -> value)."""
        return cls.from_rows([dense(r, cols) for r in rows], cols=cols)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        """Zero matrix of the given shape."""
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def identity(cls, size: int) -> "Matrix":
        """Identity matrix."""
        return cls(size, size, [int(i == j) for i in range(size) for j in range(size)])

    @property
    def rows(self) -> int:
        """Number of rows."""
        return self._rows

    @property
    def cols(self) -> int:
        """Number of columns."""
        return self._cols

    @property
    def entries(self) -> Tuple[Fraction, ...]:
        """Row-major entries."""
        return self._entries

    def __getitem__(self, key: Tuple[int, int]) -> Fraction:
        i, j = key
        return self._entries[i * self._cols + j]

    def row(self, i: int) -> Vector:
        """Row i as a list."""
        return list(self._entries[i * self._cols : (i + 1) * self._cols])

    def to_lists(self) -> List[Vector]:
        """All rows as lists."""
        return [self.row(i) for i in range(self._rows)]

    def sparse_rows(self) -> Iterator[SparseVector]:
        """Rows as sparse vectors."""
        for i in range(self._rows):
            yield {j: v for j, v in enumerate(self.row(i)) if v}

    def transpose(self) -> "Matrix":
        """Transposed copy."""
        return Matrix(
            self._cols,
            self._rows,
            [self[i, j] for j in range(self._cols) for i in range(self._rows)],
        )

    def apply(self, vector: Sequence[ScalarLike]) -> Vector:
        """Matrix-vector product."""
        if len(vector) != self._cols:
            raise DimensionMismatch(
                f"Vector of length {len(vector)} cannot multiply a matrix with "
                f"{self._cols} columns."
            )
        vec = [as_scalar(x) for x in vector]
        return [
            sum((a * b for a, b in zip(self.row(i), vec)), Fraction(0))
            for i in range(self._rows)
        ]

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self._cols != other.rows:
            raise DimensionMismatch(
                f"Cannot multiply ({self._rows},{self._cols}) by "
                f"({other.rows},{other.cols})."
            )
        cols = [[other[k, j] for k in range(other.rows)] for j in range(other.cols)]
        entries = []
        for i in range(self._rows):
            row = self.row(i)
            for col in cols:
                entries.append(sum((a * b for a, b in zip(row, col)), Fraction(0)))
        return Matrix(self._rows, other.cols, entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self._rows, self._cols, self._entries) == (
            other.rows,
            other.cols,
            other.entries,
        )

    def __hash__(self) -> int:
        return hash((self._rows, self._cols, self._entries))

    def __repr__(self) -> str:
        rows = (" ".join(str(x) for x in self.row(i)) for i in range(self._rows))
        body = "; ".join(rows)
        return f"Matrix({self._rows}x{self._cols}: [{body}])"


def _bitsize(row: Mapping[int, Fraction]) -> int:
    """Largest bit length of any entry of a sparse row."""
    return max(
        (v.numerator.bit_length() + v.denominator.bit_length() for v in row.values()),
        default=0,
    )


class Echelon:
    r"""Incrementally built reduced row echelon form.

    Rows are sparse mappings column -> value. Pivot rows are kept reduced
    against each other and each starts (with a 1) at its pivot column, so at any
    time the stored rows, sorted by pivot, are the reduced row echelon form of
    everything added so far.

    extend feeds rows in increasing order of coefficient bit length, so pivots
    come from the rows with the smallest entries. The final form does not
    depend on that order.
    """

    def __init__(self, ncols: int) -> None:
        """Start from the zero system on ncols columns."""
        self._ncols = ncols
        self._pivots: Dict[int, SparseVector] = {}
        # non-pivot column -> pivot columns whose rows have an entry there
        self._occurs: Dict[int, Set[int]] = {}
        self.rows_seen = 0

    @property
    def ncols(self) -> int:
        """Number of columns (unknowns)."""
        return self._ncols

    @property
    def rank(self) -> int:
        """Rank of the rows added so far."""
        return len(self._pivots)

    @property
    def full(self) -> bool:
        """Whether the rows added so far have full column rank."""
        return len(self._pivots) == self._ncols

    @property
    def pivot_columns(self) -> List[int]:
        """Pivot columns in increasing order."""
        return sorted(self._pivots)

    def reduce(self, row: Mapping[int, Fraction]) -> SparseVector:
        """Reduce a row against the current pivots; returns a new dict."""
        out = {c: v for c, v in row.items() if v}
        for col in [c for c in out if c in self._pivots]:
            # pivot rows vanish on every other pivot column, so a single pass
            # over the pivot columns present in the input suffices
            coeff = out.pop(col)
            for c, v in self._pivots[col].items():
                if c == col:
                    continue
                new = out.get(c, 0) - coeff * v
                if new:
                    out[c] = new
                else:
                    out.pop(c, None)
        return out

    def contains(self, row: Mapping[int, Fraction]) -> bool:
        """Whether row lies in the span of the rows added so far."""
        return not self.reduce(row)

    def add(self, row: Mapping[int, Fraction]) -> bool:
        """Add a row; returns True when the rank grew."""
        self.rows_seen += 1
        red = self.reduce(row)
        if not red:
            return False
        col = min(red)
        if col >= self._ncols or col < 0:
            raise DimensionMismatch(
                f"Row entry in column {col} of a {self._ncols}-column system."
            )
        inv = Fraction(1) / red[col]
        new_row = {c: v * inv for c, v in red.items()}
        for piv in sorted(self._occurs.pop(col, ())):
            prow = self._pivots[piv]
            coeff = prow.pop(col)
            for c, v in new_row.items():
                if c == col:
                    continue
                val = prow.get(c, 0) - coeff * v
                if val:
                    if c not in prow:
                        self._occurs.setdefault(c, set()).add(piv)
                    prow[c] = val
                elif c in prow:
                    del prow[c]
                    self._occurs[c].discard(piv)
        self._pivots[col] = new_row
        for c in new_row:
            if c != col:
                self._occurs.setdefault(c, set()).add(col)
        return True

    def extend(
        self, rows: Iterable[Mapping[int, Fraction]], presort: bool = True
    ) -> int:
        """Add many rows, stopping early once the system has full column rank.

        Arguments:
        ---------
        rows (iterable of sparse rows):
            Rows to add.
        presort (boolean):
            If true, rows are first sorted by the bit length of their largest
            entry and then by length (stable, so ties keep input order).

        Returns:
        -------
        The rank after adding.
        """
        if presort:
            rows = sorted(
                (r for r in rows if r), key=lambda r: (_bitsize(r), len(r))
            )
        for row in rows:
            if self.full:
                break
            self.add(row)
        _LOG.debug(
            "echelon: %d rows seen, rank %d of %d columns",
            self.rows_seen,
            self.rank,
            self._ncols,
        )
        return self.rank

    def reduced_rows(self) -> List[SparseVector]:
        """The reduced row echelon form, rows ordered by pivot column."""
        return [dict(sorted(self._pivots[c].items())) for c in sorted(self._pivots)]

    def pivot_row(self, col: int) -> SparseVector:
        """The stored row whose pivot is col."""
        return self._pivots[col]

    def kernel(self) -> List[SparseVector]:
        """Canonical basis of the right null space.

        One vector per free column f, with a 1 in slot f; vectors are ordered
        by free column.
        """
        basis = []
        for free in range(self._ncols):
            if free in self._pivots:
                continue
            vec: SparseVector = {free: Fraction(1)}
            for piv in self._occurs.get(free, ()):
                vec[piv] = -self._pivots[piv][free]
            basis.append(dict(sorted(vec.items())))
        return basis


class RrefResult(NamedTuple):
    """Output of rref."""

    reduced: Matrix
    pivot_columns: List[int]
    rank: int


def _echelon_of(m: Matrix) -> Echelon:
    ech = Echelon(m.cols)
    ech.extend(m.sparse_rows())
    return ech


def rref(m: Matrix) -> RrefResult:
    """Reduced row echelon form of a matrix.

    Arguments:
    ---------
    m (Matrix):
        Any matrix.

    Returns:
    -------
    RrefResult with the unique reduced form (same shape as m, zero rows at the
    bottom), the pivot columns and the rank.
    """
    ech = _echelon_of(m)
    rows = [dense(r, m.cols) for r in ech.reduced_rows()]
    rows.extend([[Fraction(0)] * m.cols for _ in range(m.rows - len(rows))])
    return RrefResult(
        reduced=Matrix.from_rows(rows, cols=m.cols),
        pivot_columns=ech.pivot_columns,
        rank=ech.rank,
    )


def kernel_basis(m: Matrix) -> List[Vector]:
    """Canonical basis of the right null space of m.

    Each vector has a 1 in its free-variable slot and zeros in the other free
    slots; vectors are ordered by free column.
    """
    return [dense(v, m.cols) for v in _echelon_of(m).kernel()]


def solve_linear(
    m: Matrix, rhs: Sequence[ScalarLike]
) -> Optional[Tuple[Vector, List[Vector]]]:
    """Solve m x = rhs exactly.

    Arguments:
    ---------
    m (Matrix):
        Coefficient matrix.
    rhs (sequence of scalars):
        Right hand side; its length must equal m.rows.

    Returns:
    -------
    None if the system is inconsistent; otherwise a tuple of a particular
    solution (free variables set to 0) and kernel_basis(m).
    """
    if len(rhs) != m.rows:
        raise DimensionMismatch(
            f"Right hand side has length {len(rhs)}, matrix has {m.rows} rows."
        )
    aug = Echelon(m.cols + 1)
    aug_rows = []
    for row, val in zip(m.sparse_rows(), rhs):
        frac = as_scalar(val)
        if frac:
            row[m.cols] = frac
        aug_rows.append(row)
    aug.extend(aug_rows)
    if m.cols in aug.pivot_columns:
        return None
    particular = [Fraction(0)] * m.cols
    for piv in aug.pivot_columns:
        particular[piv] = aug.pivot_row(piv).get(m.cols, Fraction(0))
    return particular, kernel_basis(m)


def span_basis(
    vectors: Iterable[Mapping[int, Fraction]], ncols: int
) -> List[SparseVector]:
    """Canonical (reduced row echelon) basis of the span of sparse vectors."""
    ech = Echelon(ncols)
    ech.extend(vectors)
    return ech.reduced_rows()


def kernel_of_rows(
    rows: Iterable[Mapping[int, Fraction]], ncols: int
) -> List[SparseVector]:
    """Canonical kernel basis of the system given by sparse rows."""
    ech = Echelon(ncols)
    ech.extend(rows)
    return ech.kernel()
