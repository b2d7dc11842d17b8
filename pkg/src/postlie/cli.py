r"""Command line interface.

    postlie algebra check INPUT
    postlie cpa dcomm|solve|verify INPUT [--window N] [--kac-moody] [--witt [N]]
    postlie cohomology h2 INPUT
    postlie construct loop|witt|kac-moody|semidirect|central-ext [INPUT]
    postlie verify ID|all

INPUT is a built-in name (sl2, heisenberg, sl2_z2, ...) or a JSON file. Exit
codes: 0 definite success, 1 mismatch against an expectation, 2 invalid
input, 3 resource limit or inconclusive verdict. Logging goes to stderr.
"""

import argparse
import logging
import sys
import time
from typing import Any, Dict, Final, List, Optional, Sequence, Union
from .bilinear import dcomm_space, windowed_dcomm_space
from .construct import (
    TRUNCATION_DEGREES,
    central_extension,
    euler_extension,
    extendable_euler_extension,
    kac_moody_window,
    loop_window,
    truncated_polynomial_algebra,
    witt_window,
)
from .construct.window import AlgebraWindow
from .cpa import (
    DEFAULT_LOOP_WINDOW,
    DEFAULT_SOLVE_OPTIONS,
    DEFAULT_WITT_WINDOW,
    SolveOptions,
    cpa_solve,
    verify_cpa,
    window_degree_set,
)
from .errors import ResourceLimit
from .grading import GradedLieAlgebra, underlying
from .io import (
    DEFAULT_SEED,
    AnyAlgebra,
    RunManifest,
    algebra_to_json,
    cocycle_to_json,
    dumps,
    load_algebra,
    map_from_json,
    read_json,
    report_to_json,
    run_manifest,
    space_to_json,
    window_to_json,
    write_json,
)
from .lie import (
    LieAlgebra,
    center,
    coboundaries,
    derived_subalgebra,
    h2_dim,
    pick_nontrivial_cocycle,
    two_cocycles,
)
from .poly import DEFAULT_BUDGET, GroebnerBudget
from .suite import SUITES, run_suite, suite_to_json

_LOG = logging.getLogger(__name__)

EXIT_OK: Final = 0
EXIT_MISMATCH: Final = 1
EXIT_INVALID: Final = 2
EXIT_UNDECIDED: Final = 3


def _options(args: argparse.Namespace) -> SolveOptions:
    budget: GroebnerBudget = {**DEFAULT_BUDGET, "max_steps": args.budget}
    return {
        "budget": budget,
        "degree_bound": args.degree_bound,
        "witness_search": DEFAULT_SOLVE_OPTIONS["witness_search"],
    }


def _manifest(args: argparse.Namespace, command: str) -> RunManifest:
    return run_manifest(
        command,
        getattr(args, "input", None) or "",
        window=getattr(args, "window", None),
        degree_bound=args.degree_bound,
        budget=args.budget,
        seed=args.seed,
        output=args.json,
    )


def _emit(args: argparse.Namespace, data: Any, text: str) -> None:
    """Print the summary; write JSON to --json (stdout for "-")."""
    if args.json == "-":
        sys.stdout.write(dumps(data))
        return
    print(text)
    if args.json:
        write_json(data, args.json)


def _plain(alg: AnyAlgebra) -> Union[LieAlgebra, AlgebraWindow]:
    return underlying(alg) if isinstance(alg, GradedLieAlgebra) else alg


def _target(args: argparse.Namespace) -> Union[LieAlgebra, AlgebraWindow]:
    """The algebra or window a cpa command acts on."""
    if args.witt is not None:
        return witt_window(args.witt, one_sided=args.one_sided)
    if args.input is None:
        raise ValueError("An algebra is required unless --witt is given.")
    alg = load_algebra(args.input)
    if isinstance(alg, AlgebraWindow):
        return alg
    if args.kac_moody:
        return kac_moody_window(alg, args.window or DEFAULT_LOOP_WINDOW)
    if args.loop or args.window is not None:
        return loop_window(alg, args.window or DEFAULT_LOOP_WINDOW)
    return _plain(alg)


def cmd_algebra_check(args: argparse.Namespace) -> int:
    """Validate an algebra and print its basic invariants."""
    alg = load_algebra(args.input)
    if isinstance(alg, AlgebraWindow):
        data: Dict[str, Any] = {
            "valid": True,
            "kind": alg.kind,
            "dim": alg.dim,
            "undefined_brackets": len(alg.undefined_pairs()),
        }
        _emit(args, data, f"{alg!r}: valid, {data['undefined_brackets']} undefined")
        return EXIT_OK
    plain = underlying(alg)
    cen = center(plain)
    der = derived_subalgebra(plain)
    data = {
        "valid": True,
        "dim": plain.dim,
        "center_dim": cen.dim,
        "derived_dim": der.dim,
        "perfect": der.dim == plain.dim,
        "centerless": cen.dim == 0,
    }
    if isinstance(alg, GradedLieAlgebra):
        data["grading"] = alg.grading.group
    text = (
        f"{args.input}: valid, dim {plain.dim}, center dim {cen.dim}, "
        f"derived dim {der.dim}, perfect {data['perfect']}, "
        f"centerless {data['centerless']}"
    )
    _emit(args, data, text)
    return EXIT_OK


def cmd_cpa_dcomm(args: argparse.Namespace) -> int:
    """Print the space of symmetric derivation maps."""
    target = _target(args)
    if isinstance(target, AlgebraWindow):
        bound = target.bound if args.degree_bound is None else args.degree_bound
        space = windowed_dcomm_space(target, bound)
        text = f"{target.name}: dcomm dim {space.dim}, degrees {space.degree_dims()}"
    else:
        space = dcomm_space(target)
        text = f"{target.name or args.input}: dcomm dim {space.dim}"
    data = space_to_json(space)
    data["manifest"] = dict(_manifest(args, "cpa dcomm"))
    _emit(args, data, text)
    return EXIT_OK


def cmd_cpa_solve(args: argparse.Namespace) -> int:
    """Solve for CPA structures and print the report."""
    target = _target(args)
    start = time.perf_counter()
    report = cpa_solve(target, _options(args))
    timings = {"solve_seconds": time.perf_counter() - start} if args.timings else None
    data = report_to_json(report, _manifest(args, "cpa solve"), timings)
    _emit(args, data, report.summary())
    return EXIT_OK if report.is_definite else EXIT_UNDECIDED


def cmd_cpa_verify(args: argparse.Namespace) -> int:
    """Check a map given as JSON against the three CPA identities."""
    target = _target(args)
    entries = read_json(args.map)
    if isinstance(entries, dict):
        entries = entries.get("map")
    phi = map_from_json(target.dim, entries)
    degrees = None
    if isinstance(target, AlgebraWindow):
        degrees = sorted(window_degree_set(target, args.degree_bound))
    result = verify_cpa(target, phi, degrees)
    lines = [v.describe(target) for v in result.violations]
    data = {"ok": result.ok, "violations": lines}
    _emit(args, data, "ok" if result.ok else "\n".join(lines))
    return EXIT_OK if result.ok else EXIT_MISMATCH


def cmd_cohomology_h2(args: argparse.Namespace) -> int:
    """Print cocycle, coboundary and H^2 dimensions with a representative."""
    alg = load_algebra(args.input)
    if isinstance(alg, AlgebraWindow):
        raise ValueError("Cohomology needs a finite-dimensional algebra, not a window.")
    plain = underlying(alg)
    xi = pick_nontrivial_cocycle(plain)
    data: Dict[str, Any] = {
        "cocycle_dim": len(two_cocycles(plain)),
        "coboundary_dim": len(coboundaries(plain)),
        "h2_dim": h2_dim(plain),
        "representative": None if xi is None else cocycle_to_json(xi),
    }
    text = (
        f"{args.input}: cocycles {data['cocycle_dim']}, coboundaries "
        f"{data['coboundary_dim']}, H^2 {data['h2_dim']}"
    )
    if xi is not None:
        text += f", representative {xi!r}"
    _emit(args, data, text)
    return EXIT_OK


def _require_lie(source: Optional[str]) -> LieAlgebra:
    if source is None:
        raise ValueError("This construction needs an algebra.")
    alg = load_algebra(source)
    if isinstance(alg, AlgebraWindow):
        raise ValueError("Cannot build on a window.")
    return underlying(alg)


def cmd_construct(args: argparse.Namespace) -> int:
    """Build an algebra or window and print it as JSON."""
    family = args.family
    data: Dict[str, Any]
    if family == "witt":
        bound = args.window or DEFAULT_WITT_WINDOW
        data = window_to_json(witt_window(bound, one_sided=args.one_sided))
    elif family in ("loop", "kac-moody"):
        if args.input is None:
            raise ValueError(f"construct {family} needs an algebra.")
        alg = load_algebra(args.input)
        if isinstance(alg, AlgebraWindow):
            raise ValueError("Cannot build on a window.")
        build = loop_window if family == "loop" else kac_moody_window
        data = window_to_json(build(alg, args.window or DEFAULT_LOOP_WINDOW))
    elif family == "semidirect":
        coeffs = truncated_polynomial_algebra(args.truncation or TRUNCATION_DEGREES[0])
        data = algebra_to_json(euler_extension(_require_lie(args.input), coeffs))
    else:
        base = _require_lie(args.input)
        if args.truncation is not None:
            found = extendable_euler_extension(base, degrees=[args.truncation])
        else:
            found = extendable_euler_extension(base)
        ext = central_extension(found.algebra, found.cocycle)
        data = algebra_to_json(ext)
        data["cocycle"] = cocycle_to_json(found.cocycle)
        data["coefficients"] = found.coefficients.name
    data["manifest"] = dict(_manifest(args, f"construct {family}"))
    _emit(args, data, dumps(data).rstrip("\n"))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    """Run acceptance suites; exit 1 if any check fails."""
    ids: List[str] = list(SUITES) if args.suite == "all" else [args.suite]
    options = _options(args)
    results = []
    lines = []
    for suite in ids:
        result = run_suite(suite, options, args.seed)
        results.append(result)
        lines.append(f"== {suite}")
        lines.extend(c.line() for c in result.checks)
    data = {
        "suites": [suite_to_json(r) for r in results],
        "manifest": dict(_manifest(args, f"verify {args.suite}")),
    }
    _emit(args, data, "\n".join(lines))
    return EXIT_OK if all(r.passed for r in results) else EXIT_MISMATCH


def _common() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("-v", "--verbose", action="count", default=0)
    parent.add_argument("--budget", type=int, default=DEFAULT_BUDGET["max_steps"])
    parent.add_argument("--degree-bound", type=int, default=None)
    parent.add_argument("--seed", type=int, default=DEFAULT_SEED)
    parent.add_argument("--json", default=None, metavar="OUT")
    parent.add_argument("--timings", action="store_true")
    return parent


def _target_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("input", nargs="?", default=None)
    parser.add_argument("--window", type=int, default=None)
    parser.add_argument("--loop", action="store_true")
    parser.add_argument("--kac-moody", action="store_true")
    parser.add_argument(
        "--witt", type=int, nargs="?", const=DEFAULT_WITT_WINDOW, default=None
    )
    parser.add_argument("--one-sided", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    """The argument parser."""
    common = _common()
    parser = argparse.ArgumentParser(
        prog="postlie", description="Commutative post-Lie structures, exactly."
    )
    groups = parser.add_subparsers(dest="group", required=True)

    algebra = groups.add_parser("algebra").add_subparsers(dest="command", required=True)
    check = algebra.add_parser("check", parents=[common])
    check.add_argument("input")
    check.set_defaults(handler=cmd_algebra_check)

    cpa = groups.add_parser("cpa").add_subparsers(dest="command", required=True)
    for name, handler in (
        ("dcomm", cmd_cpa_dcomm),
        ("solve", cmd_cpa_solve),
        ("verify", cmd_cpa_verify),
    ):
        sub = cpa.add_parser(name, parents=[common])
        _target_flags(sub)
        if name == "verify":
            sub.add_argument("--map", required=True, metavar="FILE")
        sub.set_defaults(handler=handler)

    cohomology = groups.add_parser("cohomology").add_subparsers(
        dest="command", required=True
    )
    h2 = cohomology.add_parser("h2", parents=[common])
    h2.add_argument("input")
    h2.set_defaults(handler=cmd_cohomology_h2)

    construct = groups.add_parser("construct", parents=[common])
    construct.add_argument(
        "family", choices=("loop", "witt", "kac-moody", "semidirect", "central-ext")
    )
    construct.add_argument("input", nargs="?", default=None)
    construct.add_argument("--window", type=int, default=None)
    construct.add_argument("--one-sided", action="store_true")
    construct.add_argument("--truncation", type=int, default=None)
    construct.set_defaults(handler=cmd_construct)

    verify = groups.add_parser("verify", parents=[common])
    verify.add_argument("suite", choices=(*SUITES, "all"))
    verify.set_defaults(handler=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point; returns the exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)
    level = (logging.WARNING, logging.INFO, logging.DEBUG)[min(args.verbose, 2)]
    logging.basicConfig(
        level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s"
    )
    try:
        return args.handler(args)
    except ResourceLimit as e:
        print(f"resource limit: {e} {e.stats}", file=sys.stderr)
        return EXIT_UNDECIDED
    except (ValueError, OSError) as e:
        print(f"invalid input: {e}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
