r"""Exceptions raised by postlie.

Contract violations on user input derive from ValueError so callers that only
care about "bad input" can catch that. ResourceLimit is a RuntimeError: the
input was fine, the computation simply did not fit the configured budget.
"""

from typing import Any, Dict, List, Optional, Sequence, Tuple


class PostLieError(Exception):
    """Mixin shared by every exception raised on purpose by this package."""


class DimensionMismatch(PostLieError, ValueError):
    """Sizes of two objects that must agree do not."""


class AntisymmetryViolation(PostLieError, ValueError):
    """A bracket table assigns inconsistent values to [b_i,b_j] and [b_j,b_i]."""

    def __init__(self, pair: Tuple[int, int], message: str) -> None:
        super().__init__(message)
        self.pair = pair


class JacobiViolation(PostLieError, ValueError):
    """A bracket table fails the Jacobi identity.

    Attributes:
    ----------
    triple:
        Basis indices (i, j, k) on which the cyclic sum is nonzero.
    residual:
        The nonzero cyclic sum, as a sparse coordinate vector.
    """

    def __init__(self, triple: Tuple[int, int, int], residual: Dict[int, Any]) -> None:
        shown = {k: str(v) for k, v in sorted(residual.items())}
        super().__init__(
            f"Jacobi identity fails on basis triple {triple}; residual {shown}."
        )
        self.triple = triple
        self.residual = residual


class GradingIncompatible(PostLieError, ValueError):
    """A bracket leaves the graded component predicted by the degrees."""

    def __init__(self, pair: Tuple[int, int], stray: Sequence[int]) -> None:
        super().__init__(
            f"[b_{pair[0]}, b_{pair[1]}] has components {list(stray)} outside "
            "the expected degree."
        )
        self.pair = pair
        self.stray = list(stray)


class InvalidGrading(PostLieError, ValueError):
    """A grading has the wrong group or the wrong shape for the requested use."""


class NotADerivation(PostLieError, ValueError):
    """A linear map is not a derivation of the algebra it should act on."""


class NotACocycle(PostLieError, ValueError):
    """An antisymmetric form fails the 2-cocycle identity."""


class UnknownFamily(PostLieError, ValueError):
    """A built-in algebra name is not recognized."""


class WindowTooSmall(PostLieError, ValueError):
    """A window leaves some unknown without any exact constraint."""

    def __init__(self, message: str, uncovered: Optional[List[Any]] = None) -> None:
        super().__init__(message)
        self.uncovered = [] if uncovered is None else uncovered


class HypothesisViolated(PostLieError, ValueError):
    """An input fails a hypothesis that a prediction relies on."""

    def __init__(self, hypothesis: str, witness: Any = None) -> None:
        msg = f"Hypothesis violated: {hypothesis}."
        if witness is not None:
            msg += f" Witness: {witness}."
        super().__init__(msg)
        self.hypothesis = hypothesis
        self.witness = witness


class ResourceLimit(PostLieError, RuntimeError):
    """A computation exceeded its configured budget.

    Attributes:
    ----------
    stats:
        Progress counters at the time the limit was hit (e.g. S-pairs reduced,
        current basis size).
    """

    def __init__(self, message: str, stats: Optional[Dict[str, int]] = None) -> None:
        super().__init__(message)
        self.stats = {} if stats is None else dict(stats)
