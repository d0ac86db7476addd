"""Command-line surface for scripts and CI.

One subcommand per task: wheel, plane, build, verify, classify, search,
hall.  Digraphs and designs travel as the package's JSON schemas, with
"-" standing for stdin/stdout.  Exit codes: 0 success or property
holds, 1 property failure or not-friendship verdict, 2 usage, parse, or
input-contract errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from collections import Counter

from .construct import check_hall_condition, digraph_from_sbibd, fancy_wheel
from .designs import Design, projective_plane
from .digraph import Digraph
from .errors import InternalInvariantBroken, ToolkitError
from .search import SearchConfig, enumerate_friendship_digraphs
from .verify import CONSEQUENCE_CHECKS, NOT_FRIENDSHIP, classify, is_friendship


def _cycle_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="friendship",
        description="Construct, verify, classify, and enumerate friendship digraphs.",
    )
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--out", default="-", help="output path, '-' for stdout")
    shared.add_argument(
        "--format", choices=("json", "dot"), default="json", help="digraph output format"
    )
    shared.add_argument(
        "--quiet", action="store_true", help="suppress payload/report lines on stdout"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("wheel", parents=[shared], help="build a hub-and-cycles digraph")
    p.add_argument("--cycles", type=_cycle_list, required=True, help="e.g. 4,3,2")

    p = sub.add_parser("plane", parents=[shared], help="projective plane of prime-power order")
    p.add_argument("--q", type=int, required=True, help="plane order (prime power)")
    p.add_argument(
        "--emit",
        choices=("design", "digraph"),
        default="design",
        help="emit the incidence design or its friendship digraph",
    )

    p = sub.add_parser("build", parents=[shared], help="friendship digraph from a design file")
    p.add_argument("--design", required=True, help="design JSON path, '-' for stdin")
    p.add_argument("--seed", type=int, default=None, help="shuffle representative choice")

    p = sub.add_parser("verify", parents=[shared], help="check the friendship property")
    p.add_argument("--digraph", required=True, help="digraph JSON path, '-' for stdin")
    p.add_argument(
        "--all-props", action="store_true", help="also run the six consequence checks"
    )

    p = sub.add_parser("classify", parents=[shared], help="friendship classification verdict")
    p.add_argument("--digraph", required=True, help="digraph JSON path, '-' for stdin")

    p = sub.add_parser("search", parents=[shared], help="enumerate friendship digraphs")
    p.add_argument("--n", type=int, required=True, help="digraph order (2..7)")
    p.add_argument("--modulo-iso", action="store_true", help="one result per isomorphism class")
    p.add_argument("--max-results", type=int, default=None, help="stop after this many results")

    p = sub.add_parser("hall", parents=[shared], help="check Hall's condition on block complements")
    p.add_argument("--design", required=True, help="design JSON path, '-' for stdin")
    p.add_argument(
        "--exhaustive", action="store_true", help="scan all block subsets (small designs only)"
    )
    return parser


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _emit(args, payload: str) -> None:
    if args.out != "-":
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(payload if payload.endswith("\n") else payload + "\n")
    elif not args.quiet:
        print(payload)


def _digraph_payload(d: Digraph, fmt: str) -> str:
    return d.to_dot().rstrip("\n") if fmt == "dot" else d.to_json()


def _cmd_wheel(args) -> int:
    _emit(args, _digraph_payload(fancy_wheel(args.cycles), args.format))
    return 0


def _cmd_plane(args) -> int:
    design = projective_plane(args.q)
    if args.emit == "design":
        if args.format == "dot":
            raise ToolkitError("designs have no DOT form; use --emit digraph")
        _emit(args, design.to_json())
    else:
        _emit(args, _digraph_payload(digraph_from_sbibd(design), args.format))
    return 0


def _cmd_build(args) -> int:
    design = Design.from_json(_read_text(args.design))
    _emit(args, _digraph_payload(digraph_from_sbibd(design, seed=args.seed), args.format))
    return 0


def _cmd_verify(args) -> int:
    d = Digraph.from_json(_read_text(args.digraph))
    reports = [is_friendship(d)]
    if args.all_props:
        reports.extend(check(d) for check in CONSEQUENCE_CHECKS)
    if not args.quiet:
        for report in reports:
            print(report.to_json())
    return 0 if all(report.holds for report in reports) else 1


def _cmd_classify(args) -> int:
    verdict = classify(Digraph.from_json(_read_text(args.digraph)))
    if not args.quiet:
        print(verdict.to_json())
    return 1 if verdict.verdict == NOT_FRIENDSHIP else 0


def _cmd_search(args) -> int:
    config = SearchConfig(
        n=args.n, max_results=args.max_results, modulo_iso=args.modulo_iso
    )
    results = enumerate_friendship_digraphs(config)
    verdicts = Counter(classify(d).verdict for d in results)
    if not args.quiet:
        for d in results:
            print(d.to_json())
    summary = {
        "n": args.n,
        "count": len(results),
        "verdicts": {key: verdicts[key] for key in sorted(verdicts)},
    }
    print(json.dumps(summary, separators=(",", ":")))
    return 0


def _cmd_hall(args) -> int:
    design = Design.from_json(_read_text(args.design))
    report = check_hall_condition(design, exhaustive=args.exhaustive)
    if not args.quiet:
        print(json.dumps(report.to_json_dict(), separators=(",", ":")))
    return 0 if report.holds else 1


_HANDLERS = {
    "wheel": _cmd_wheel,
    "plane": _cmd_plane,
    "build": _cmd_build,
    "verify": _cmd_verify,
    "classify": _cmd_classify,
    "search": _cmd_search,
    "hall": _cmd_hall,
}


def run(argv=None) -> int:
    """Parse argv and dispatch; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return _HANDLERS[args.command](args)
    except InternalInvariantBroken:
        raise
    except (ToolkitError, OSError) as exc:
        print(f"friendship {args.command}: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
