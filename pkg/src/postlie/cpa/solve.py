r"""Solves for commutative post-Lie structures and certifies the answer.

The pipeline is: symmetric derivation maps (a linear kernel), then the
quadratic ideal of the post-Lie identity on their coefficients, then a
Groebner-based classification of the ideal's zero set into one of three
verdicts:

    ZeroOnly      the origin is the only common zero;
    LinearSpace   the common zeros are exactly a linear subspace;
    Inconclusive  neither could be certified; the reduced basis is attached.

Resource overruns raise ResourceLimit and are never reported as a verdict.
"""

import logging
import warnings
from fractions import Fraction
from itertools import product
from typing import (
    Callable,
    Dict,
    Final,
    Iterable,
    List,
    NamedTuple,
    Optional,
    Sequence,
    Set,
)
from typing_extensions import TypedDict
from sympy.polys.rings import PolyElement
from ..bilinear import (
    BilinearMap,
    BilinearMapSpace,
    Violation,
    check_cpa,
    dcomm_space,
    windowed_dcomm_space,
)
from ..bilinear.core import SPACE_KIND_CUSTOM
from ..construct.window import AlgebraWindow
from ..lie import BracketAlgebra, LieAlgebra
from ..linalg import SparseVector, span_basis
from ..poly import (
    DEFAULT_BUDGET,
    GroebnerBudget,
    PolyIdeal,
    format_poly,
    groebner,
    linear_part,
    parameterization,
    substitute,
    variety_equals_affine_subspace,
    variety_is_origin_only,
)
from .ideal import cpa_quadratic_ideal, window_degree_set

_LOG = logging.getLogger(__name__)

ZERO_ONLY: Final = "ZeroOnly"
LINEAR_SPACE: Final = "LinearSpace"
INCONCLUSIVE: Final = "Inconclusive"
VERDICTS: Final = (ZERO_ONLY, LINEAR_SPACE, INCONCLUSIVE)

DEFAULT_LOOP_WINDOW: Final = 3
DEFAULT_WITT_WINDOW: Final = 4
DEFAULT_ESCALATION: Final = 2

SolveOptions = TypedDict(
    "SolveOptions",
    {
        "budget": GroebnerBudget,
        "degree_bound": Optional[int],
        "witness_search": int,
    },
)
DEFAULT_SOLVE_OPTIONS: SolveOptions = {
    "budget": DEFAULT_BUDGET,
    "degree_bound": None,
    "witness_search": 729,
}


class VerificationResult(NamedTuple):
    """Outcome of verify_cpa: ok, and the first violation of each failing identity."""

    ok: bool
    violations: List[Violation]


def verify_cpa(
    alg: BracketAlgebra, phi: BilinearMap, degrees: Optional[Iterable[int]] = None
) -> VerificationResult:
    r"""Check symmetry, the derivation rule and the post-Lie identity for phi.

    On windows only exact instances are checked; degrees is the set of map
    degrees used to decide exactness of the quadratic identity (see
    bilinear.check_post_lie).
    """
    if phi.dim != alg.dim:
        raise ValueError(
            f"Map of dimension {phi.dim} on an algebra of dimension {alg.dim}."
        )
    found = check_cpa(alg, phi, degrees)
    return VerificationResult(not found, found)


class Classification(NamedTuple):
    """Verdict on a zero set, with the subspace directions for LinearSpace."""

    verdict: str
    directions: List[SparseVector]
    groebner_basis: List[PolyElement]


def _vanishes_on(ideal: PolyIdeal, directions: Sequence[SparseVector]) -> bool:
    images = parameterization(ideal.nvars, directions)
    target = images[0].ring
    return all(not substitute(p, images, target) for p in ideal.generators)


def classify_ideal(
    ideal: PolyIdeal,
    budget: GroebnerBudget = DEFAULT_BUDGET,
    candidate: Optional[Sequence[SparseVector]] = None,
) -> Classification:
    r"""Classify the zero set of an ideal whose generators vanish at the origin.

    Arguments:
    ---------
    ideal (PolyIdeal):
        The ideal.
    budget (GroebnerBudget):
        Budget of every Groebner computation.
    candidate (list of sparse vectors or None):
        Directions of a predicted solution subspace, in variable coordinates.

    Returns:
    -------
    Classification. The steps are: no variables or no generators; the
    subspace S cut out by the degree-one part of the reduced basis (which
    contains every zero) being the origin, or lying entirely in the zero
    set; the candidate subspace; the origin-only test. If none applies the
    verdict is Inconclusive.
    """
    m = ideal.nvars
    if m == 0:
        return Classification(ZERO_ONLY, [], [])
    if ideal.is_empty:
        full = [{a: Fraction(1)} for a in range(m)]
        return Classification(LINEAR_SPACE, full, [])
    basis = groebner(ideal, budget)
    hull = linear_part(basis, m)
    _LOG.debug(
        "reduced basis of %d elements; linear hull of dim %d", len(basis), len(hull)
    )
    if not hull:
        return Classification(ZERO_ONLY, [], basis)
    if _vanishes_on(ideal, hull):
        return Classification(LINEAR_SPACE, hull, basis)
    if candidate is not None and variety_equals_affine_subspace(
        ideal, candidate, budget=budget
    ):
        return Classification(LINEAR_SPACE, span_basis(candidate, m), basis)
    if variety_is_origin_only(ideal, budget):
        return Classification(ZERO_ONLY, [], basis)
    return Classification(INCONCLUSIVE, [], basis)


class CpaReport:
    r"""Result of cpa_solve.

    Attributes:
    ----------
    name:
        Name of the algebra or window.
    dcomm:
        The space of symmetric derivation maps (the linear stage).
    ideal:
        Quadratic ideal on the coordinates of dcomm's basis.
    verdict:
        ZERO_ONLY, LINEAR_SPACE or INCONCLUSIVE.
    basis:
        Basis of the solution space for LINEAR_SPACE (homogeneous on
        windows), else empty.
    groebner_basis:
        Reduced Groebner basis backing the verdict.
    witnesses:
        Nonzero structures verified exactly.
    degree_bound:
        B for windowed runs, else None.
    solution_degrees:
        Degree of each solution basis map (windows only).
    """

    def __init__(
        self,
        name: str,
        dcomm: BilinearMapSpace,
        ideal: PolyIdeal,
        verdict: str,
        basis: Sequence[BilinearMap] = (),
        groebner_basis: Sequence[PolyElement] = (),
        witnesses: Sequence[BilinearMap] = (),
        window: Optional[AlgebraWindow] = None,
        degree_bound: Optional[int] = None,
        solution_degrees: Optional[Sequence[int]] = None,
    ) -> None:
        """Initialize."""
        if verdict not in VERDICTS:
            raise ValueError(f"Unknown verdict {verdict!r}.")
        self.name = name
        self.dcomm = dcomm
        self.ideal = ideal
        self.verdict = verdict
        self.basis = list(basis)
        self.groebner_basis = list(groebner_basis)
        self.witnesses = list(witnesses)
        self.window = window
        self.degree_bound = degree_bound
        self.solution_degrees = (
            None if solution_degrees is None else list(solution_degrees)
        )

    @property
    def dcomm_dim(self) -> int:
        """Dimension of the linear stage."""
        return self.dcomm.dim

    @property
    def dcomm_degree_dims(self) -> Dict[int, int]:
        """Per-degree dimensions of the linear stage (windows only)."""
        return self.dcomm.degree_dims()

    @property
    def solution_dim(self) -> Optional[int]:
        """Dimension of the solution set when it is certified linear."""
        if self.verdict == ZERO_ONLY:
            return 0
        if self.verdict == LINEAR_SPACE:
            return len(self.basis)
        return None

    @property
    def solution_degree_dims(self) -> Dict[int, int]:
        """Per-degree dimensions of the solution space (windows only)."""
        out: Dict[int, int] = {}
        for deg in self.solution_degrees or []:
            out[deg] = out.get(deg, 0) + 1
        return dict(sorted(out.items()))

    @property
    def survivors(self) -> List[int]:
        """Nonzero degrees that may carry solutions.

        For certified linear answers these are the nonzero degrees of the
        solution basis; for inconclusive ones, those of the linear stage.
        """
        if self.verdict == LINEAR_SPACE:
            dims = self.solution_degree_dims
        elif self.verdict == INCONCLUSIVE:
            dims = self.dcomm_degree_dims
        else:
            dims = {}
        return [deg for deg in dims if deg != 0]

    @property
    def is_definite(self) -> bool:
        """Whether the verdict is ZeroOnly or LinearSpace."""
        return self.verdict != INCONCLUSIVE

    @property
    def certificate(self) -> List[str]:
        """The reduced Groebner basis in canonical text form."""
        return [format_poly(p) for p in self.groebner_basis]

    def solution_space(self) -> BilinearMapSpace:
        """The certified solution space (zero for ZeroOnly)."""
        if self.verdict == INCONCLUSIVE:
            raise ValueError("Inconclusive reports have no certified solution space.")
        dim = self.dcomm.ambient_dim
        return BilinearMapSpace(dim, self.basis, kind=SPACE_KIND_CUSTOM)

    def summary(self) -> str:
        """One-line human-readable summary."""
        out = f"{self.name}: {self.verdict}, dcomm dim {self.dcomm_dim}"
        if self.verdict == LINEAR_SPACE:
            out += f", solution dim {len(self.basis)}"
        if self.degree_bound is not None:
            out += f", degree bound {self.degree_bound}"
            if self.verdict == LINEAR_SPACE:
                out += f", solution degrees {self.solution_degree_dims}"
            else:
                out += f", dcomm degrees {self.dcomm_degree_dims}"
        return out

    def __repr__(self) -> str:
        return f"CpaReport({self.summary()})"


def _graded_directions(
    directions: Sequence[SparseVector], var_degrees: Sequence[Optional[int]], nvars: int
) -> List[tuple]:
    """Homogeneous basis (degree, vector) of a degree-invariant subspace."""
    by_degree: Dict[int, List[SparseVector]] = {}
    for vec in directions:
        parts: Dict[int, SparseVector] = {}
        for a, val in vec.items():
            deg = var_degrees[a]
            assert deg is not None, "windowed basis maps must carry degrees"
            parts.setdefault(deg, {})[a] = val
        for deg, part in parts.items():
            by_degree.setdefault(deg, []).append(part)
    out = []
    for deg in sorted(by_degree):
        out.extend((deg, vec) for vec in span_basis(by_degree[deg], nvars))
    if len(out) != len(directions):
        raise AssertionError(
            f"Solution space of dim {len(directions)} has a graded span of "
            f"dim {len(out)}."
        )
    return out


def search_witnesses(
    ideal: PolyIdeal,
    maps: Sequence[BilinearMap],
    search: int,
    limit: int = 1,
) -> List[BilinearMap]:
    r"""Nonzero points of {-1,0,1}^m in the zero set, as maps sum_a c_a maps[a].

    Points are tried in lexicographic order, at most search of them; at most
    limit maps are returned.
    """
    m = len(maps)
    found: List[BilinearMap] = []
    if m == 0 or search <= 0:
        return found
    tried = 0
    for point in product((-1, 0, 1), repeat=m):
        if tried >= search or len(found) >= limit:
            break
        tried += 1
        if not any(point):
            continue
        if all(not p(*point) for p in ideal.generators):
            found.append(BilinearMap.combination(maps[0].dim, point, maps))
    _LOG.debug("witness search: %d points tried, %d found", tried, len(found))
    return found


def _check_witnesses(
    alg: BracketAlgebra, maps: Sequence[BilinearMap], degrees: Optional[Set[int]]
) -> None:
    for phi in maps:
        result = verify_cpa(alg, phi, degrees)
        if not result.ok:
            raise AssertionError(
                "Solver output fails the independent check: "
                + "; ".join(v.describe(alg) for v in result.violations)
            )


def cpa_solve(
    alg: BracketAlgebra,
    options: SolveOptions = DEFAULT_SOLVE_OPTIONS,
    candidate: Optional[Sequence[BilinearMap]] = None,
) -> CpaReport:
    r"""Solve for the commutative post-Lie structures on an algebra or window.

    Arguments:
    ---------
    alg (LieAlgebra or AlgebraWindow):
        The algebra.
    options (SolveOptions):
        Groebner budget, degree bound B for windows (None for the window
        bound) and the number of small points tried when looking for
        witnesses of inconclusive answers.
    candidate (list of BilinearMap or None):
        Spanning maps of a predicted solution space; used when the
        solution set is not visibly linear.

    Returns:
    -------
    CpaReport. Every basis map of a LinearSpace answer and every witness is
    re-verified with verify_cpa; a failure there is a bug and raises
    AssertionError.

    Notes:
    -----
    Raises ResourceLimit when the budget is exceeded and WindowTooSmall when
    the window leaves unknowns unconstrained.
    """
    name = getattr(alg, "name", None) or repr(alg)
    budget = options["budget"]
    window: Optional[AlgebraWindow] = None
    degree_bound: Optional[int] = None
    degset: Optional[Set[int]] = None
    if isinstance(alg, AlgebraWindow):
        window = alg
        degree_bound = options["degree_bound"]
        if degree_bound is None:
            degree_bound = alg.bound
        degset = window_degree_set(alg, degree_bound)
        dcomm = windowed_dcomm_space(alg, degree_bound)
    elif isinstance(alg, LieAlgebra):
        dcomm = dcomm_space(alg)
    else:
        raise TypeError(f"Cannot solve on {type(alg).__name__}.")
    maps = dcomm.basis
    ideal = cpa_quadratic_ideal(alg, maps, degset)
    _LOG.debug("%s: dcomm dim %d, %d generators", name, len(maps), len(ideal))

    cand_dirs: Optional[List[SparseVector]] = None
    if candidate is not None:
        cand_dirs = []
        for phi in candidate:
            coords = dcomm.coordinates(phi)
            if coords is None:
                _LOG.info("%s: candidate lies outside Dcomm, ignoring it", name)
                cand_dirs = None
                break
            cand_dirs.append({a: c for a, c in enumerate(coords) if c})

    found = classify_ideal(ideal, budget, cand_dirs)
    _LOG.info("%s: verdict %s", name, found.verdict)

    basis: List[BilinearMap] = []
    sol_degrees: Optional[List[int]] = None
    witnesses: List[BilinearMap] = []
    if found.verdict == LINEAR_SPACE:
        if window is not None:
            graded = _graded_directions(
                found.directions, dcomm.degrees or [], len(maps)
            )
            sol_degrees = [deg for deg, _ in graded]
            vecs = [vec for _, vec in graded]
        else:
            vecs = found.directions
        for vec in vecs:
            coeffs = [vec.get(a, Fraction(0)) for a in range(len(maps))]
            basis.append(BilinearMap.combination(alg.dim, coeffs, maps))
        witnesses = list(basis)
    elif found.verdict == INCONCLUSIVE:
        witnesses = search_witnesses(ideal, maps, options["witness_search"])
    elif window is not None:
        sol_degrees = []
    _check_witnesses(alg, witnesses, degset)
    return CpaReport(
        name,
        dcomm,
        ideal,
        found.verdict,
        basis=basis,
        groebner_basis=found.groebner_basis,
        witnesses=witnesses,
        window=window,
        degree_bound=degree_bound,
        solution_degrees=sol_degrees,
    )


WindowBuilder = Callable[[int], AlgebraWindow]


def solve_window_with_escalation(
    builder: WindowBuilder,
    bound: int,
    options: SolveOptions = DEFAULT_SOLVE_OPTIONS,
    max_extra: int = DEFAULT_ESCALATION,
) -> List[CpaReport]:
    r"""Solve on builder(N), re-solving at N+1, ... while nonzero degrees survive.

    Arguments:
    ---------
    builder (callable):
        Maps a window bound to a window.
    bound (positive integer):
        First window bound N.
    options (SolveOptions):
        As for cpa_solve; a fixed degree_bound is kept across runs, None
        follows the window bound.
    max_extra (integer):
        Largest number of extra runs.

    Returns:
    -------
    All reports, in order of increasing window bound. If the last one still
    has nonzero-degree survivors a warning is issued.
    """
    reports: List[CpaReport] = []
    for extra in range(max_extra + 1):
        n = bound + extra
        report = cpa_solve(builder(n), options)
        reports.append(report)
        if not report.survivors:
            break
        _LOG.info(
            "%s: nonzero degrees %s survive, escalating", report.name, report.survivors
        )
    if reports[-1].survivors:
        warnings.warn(
            f"Nonzero degrees {reports[-1].survivors} still survive at window bound "
            f"{bound + len(reports) - 1}.",
            stacklevel=2,
        )
    return reports

