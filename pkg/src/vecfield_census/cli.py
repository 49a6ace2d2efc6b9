"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 invalid input, 3 verification
failure.  All JSON payloads carry ``"schema": "vecfield-census/1"``.

For ``count --family all|generic`` the ``--n`` argument is the degree of the
field minus one (the class tables are usually indexed by degree).  For
``--family quasi|odd`` it indexes the string family directly: ``quasi``
counts length-N strings, ``odd`` counts valid strings of length 2N-1.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import formulas, oracle, report
from .bracketing import (
    count_quasi,
    count_valid,
    enumerate_valid,
    parse_string,
)
from .diagram import BoardDiagram
from .errors import (
    CapExceeded,
    CensusError,
    NoEdgeAtVertexOrBeyond,
    NotValid,
    OddLength,
    UnknownCharacter,
)
from .trees import GeneralizedTree

SCHEMA = "vecfield-census/1"


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # exit 1, not argparse's default 2
        raise _UsageError(message)


def _json_print(payload: dict) -> None:
    print(json.dumps({"schema": SCHEMA, **payload}, indent=2))


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_count(args) -> int:
    n, family, method = args.n, args.family, args.method
    if family == "all":
        value = {
            "closed": lambda: formulas.p_plus(n),
            "recursion": lambda: count_valid(2 * n),
            "oracle": lambda: oracle.burnside_orbit_count(n, cap=args.cap),
        }[method]()
    elif family == "generic":
        value = {
            "closed": lambda: formulas.sigma_generic(n),
            "recursion": lambda: formulas.catalan(n),
            "oracle": lambda: oracle.generic_orbit_count(n, cap=args.cap),
        }[method]()
    elif family == "quasi":
        value = {
            "closed": lambda: formulas.c_closed(n),
            "recursion": lambda: count_quasi(n),
            "oracle": lambda: oracle.quasi_count_exhaustive(n, cap=args.cap),
        }[method]()
    else:  # odd
        value = {
            "closed": lambda: formulas.q_closed(n),
            "recursion": lambda: count_valid(2 * n - 1),
            "oracle": lambda: sum(1 for _ in enumerate_valid(2 * n - 1)),
        }[method]()
    print(value)
    return 0


def _cmd_enumerate(args) -> int:
    if args.n < 0:
        raise _UsageError("--n must be >= 0")
    if args.format == "lines":
        for s in enumerate_valid(args.n):
            print(s)
    else:
        _json_print({"n": args.n, "strings": list(enumerate_valid(args.n))})
    return 0


def _cmd_orbits(args) -> int:
    reps = oracle.list_orbit_representatives(args.n, cap=args.cap)
    sized = [
        (s, BoardDiagram.from_bracketing(s).period()) for s in reps
    ]  # orbit size = period of any member
    if args.format == "lines":
        for s, size in sized:
            print(f"{s}\t{size}")
    else:
        _json_print(
            {
                "n": args.n,
                "orbits": [
                    {"representative": s, "size": size} for s, size in sized
                ],
            }
        )
    return 0


def _load_input(kind: str, text: str):
    if kind == "bracketing":
        return parse_string(text)
    data = json.loads(text)
    if kind == "diagram":
        return BoardDiagram.from_json_dict(data)
    return GeneralizedTree.from_json_dict(data)


def _to_bracketing(kind: str, obj) -> str:
    if kind == "bracketing":
        return obj
    return obj.to_bracketing()


def _cmd_convert(args) -> int:
    obj = _load_input(args.from_, args.input)
    s = _to_bracketing(args.from_, obj)
    if args.to == "bracketing":
        print(s)
    elif args.to == "diagram":
        _json_print(BoardDiagram.from_bracketing(s).to_json_dict())
    else:
        _json_print(GeneralizedTree.from_bracketing(s).to_json_dict())
    return 0


def _cmd_render(args) -> int:
    tree = GeneralizedTree.from_bracketing(parse_string(args.input))
    print(tree.to_dot())
    return 0


def _cmd_growth(args) -> int:
    if args.out_dir is None:
        print(report.growth_csv(args.n_max), end="")
    else:
        csv_path, png_path = report.write_growth_report(args.n_max, args.out_dir)
        print(csv_path)
        print(png_path)
    return 0


def _cmd_verify(args) -> int:
    reports = oracle.run_suite(
        full_max=args.n_max, generic_max=max(args.n_max, 8), cap=args.cap
    )
    passed = all(r.passed for r in reports)
    _json_print(
        {
            "passed": passed,
            "reports": [r.to_json_dict() for r in reports],
        }
    )
    return 0 if passed else 3


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="vecfield-census",
        description="Exact enumeration of bracketing configurations and "
        "their rotation classes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_cap(p):
        p.add_argument(
            "--cap",
            type=int,
            default=None,
            help="override the exhaustive-search cap (exponential runtime; "
            "the VECFIELD_ORACLE_CAP environment variable does the same)",
        )

    p = sub.add_parser("count", help="evaluate one exact count")
    p.add_argument("--family", required=True, choices=["generic", "all", "quasi", "odd"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument(
        "--method", choices=["closed", "recursion", "oracle"], default="closed"
    )
    add_cap(p)
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("enumerate", help="stream all valid strings of a length")
    p.add_argument("--n", type=int, required=True, help="string length")
    p.add_argument("--format", choices=["lines", "json"], default="lines")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("orbits", help="canonical orbit representatives")
    p.add_argument("--n", type=int, required=True, help="half the slot count")
    p.add_argument("--format", choices=["lines", "json"], default="lines")
    add_cap(p)
    p.set_defaults(func=_cmd_orbits)

    p = sub.add_parser("convert", help="convert between representations")
    p.add_argument(
        "--from",
        dest="from_",
        required=True,
        choices=["bracketing", "diagram", "tree"],
    )
    p.add_argument("--to", required=True, choices=["bracketing", "diagram", "tree"])
    p.add_argument("--input", required=True, help="text or JSON, per --from")
    p.set_defaults(func=_cmd_convert)

    p = sub.add_parser("render", help="Graphviz DOT of the tree of a string")
    p.add_argument("--input", required=True, help="bracketing string")
    p.add_argument("--format", choices=["dot"], default="dot")
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("growth", help="growth-rate report (CSV, optional figure)")
    p.add_argument("--n-max", type=int, default=60)
    p.add_argument(
        "--out-dir",
        default=None,
        help="write growth.csv and growth.png here instead of stdout",
    )
    p.set_defaults(func=_cmd_growth)

    p = sub.add_parser("verify", help="run the cross-check suite (JSON report)")
    p.add_argument(
        "--n-max",
        type=int,
        default=5,
        help="exhaustive depth for the orbit checks",
    )
    add_cap(p)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (
        UnknownCharacter,
        NotValid,
        OddLength,
        NoEdgeAtVertexOrBeyond,
        CapExceeded,
        json.JSONDecodeError,
        KeyError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CensusError as exc:  # NotDivisible etc.: internal bug signals
        raise AssertionError(f"internal invariant broke: {exc}") from exc


if __name__ == "__main__":
    sys.exit(main())
