"""Command-line frontend.

Every subcommand is a thin wrapper over the library: parse arguments, call
one function, print the result. Exit status 0 means success, 1 a domain
error (for example a digit occurring more than nine times), 2 a usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from typing import Any, Sequence

from .biography import biographies, cls, cv, is_biography
from .digits import NumbioError, parse
from .dynamics import (
    classify_seed,
    trajectory,
    verification_rows,
    verify_cycles,
)
from .graphs import build_reach_graph, render_dot
from .praise import find_praising_pairs, is_mutually_praising
from .selfdesc import enumerate_autobiographical, is_autobiographical


def _digit_arg(text: str) -> str:
    try:
        return parse(text)
    except NumbioError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _emit_json(payload: dict[str, Any]) -> None:
    print(json.dumps(payload, indent=2))


def _print_bool(value: bool, fmt: str, payload: dict[str, Any]) -> int:
    if fmt == "json":
        _emit_json(payload)
    else:
        print("true" if value else "false")
    return 0


def _check_range(args: argparse.Namespace) -> bool:
    if args.lo < 0 or args.lo > args.hi:
        print("error: --from must be >= 0 and no greater than --to", file=sys.stderr)
        return False
    return True


def _cmd_cv(args: argparse.Namespace) -> int:
    result = cv(args.value)
    if args.format == "json":
        _emit_json({"seed": args.value, "cv": result})
    else:
        print(result)
    return 0


def _cmd_cls(args: argparse.Namespace) -> int:
    result = cls(args.value)
    if args.format == "json":
        _emit_json({"seed": args.value, "cls": result})
    else:
        print(result)
    return 0


def _cmd_biographies(args: argparse.Namespace) -> int:
    result = biographies(args.value)
    if args.format == "json":
        _emit_json({"seed": args.value, "biographies": result})
    else:
        print("\n".join(result))
    return 0


def _cmd_isbio(args: argparse.Namespace) -> int:
    verdict = is_biography(args.m, args.n)
    return _print_bool(
        verdict, args.format, {"m": args.m, "n": args.n, "is_biography": verdict}
    )


def _cmd_autobio(args: argparse.Namespace) -> int:
    if args.enumerate:
        members = enumerate_autobiographical()
        if args.format == "json":
            _emit_json({"members": members})
        else:
            print("\n".join(members))
        return 0
    verdict = is_autobiographical(args.check)
    return _print_bool(
        verdict, args.format, {"value": args.check, "autobiographical": verdict}
    )


def _cmd_classify(args: argparse.Namespace) -> int:
    fate = classify_seed(args.value)
    if args.format == "json":
        _emit_json(
            {
                "seed": args.value,
                "verdict": fate.verdict.value,
                "failure_depth": fate.failure_depth,
            }
        )
    elif fate.is_infinite:
        print(fate.verdict.value)
    else:
        print(f"{fate.verdict.value} (iteration fails at step {fate.failure_depth})")
    return 0


def _cmd_seq(args: argparse.Namespace) -> int:
    t = trajectory(args.map_kind, args.value, args.max_steps)
    if args.format == "json":
        _emit_json(t.as_dict())
    else:
        print("prefix: " + " ".join(t.prefix))
        print("cycle: " + " ".join(t.cycle))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    if not _check_range(args):
        return 2
    if args.format == "csv":
        rows = verification_rows(args.map_kind, args.lo, args.hi, args.max_steps, args.jobs)
        writer = csv.writer(sys.stdout)
        writer.writerow(["seed", "prefix_len", "cycle_id"])
        writer.writerows(rows)
        return 0
    report = verify_cycles(args.map_kind, args.lo, args.hi, args.max_steps, args.jobs)
    if args.format == "json":
        _emit_json(report.as_dict())
        return 0
    data = report.as_dict()
    print(f"map: {data['map']}")
    print(f"range: {data['lo']}..{data['hi']}")
    print(f"checked: {data['checked']}")
    print(f"skipped: {data['skipped']}")
    print(f"max_prefix: {data['max_prefix']}")
    for entry in data["cycles"]:
        print("cycle " + " ".join(entry["members"]) + f": absorbed {entry['absorbed']}")
    if data["counterexamples"]:
        print("counterexamples: " + " ".join(data["counterexamples"]))
    else:
        print("counterexamples: none")
    return 0


def _cmd_praise(args: argparse.Namespace) -> int:
    if args.check is not None:
        a, b = args.check
        verdict = is_mutually_praising(a, b)
        return _print_bool(
            verdict, args.format, {"a": a, "b": b, "mutually_praising": verdict}
        )
    pairs = find_praising_pairs()
    if args.legit_only:
        pairs = [p for p in pairs if p.both_legitimate]
    if args.format == "json":
        _emit_json({"pairs": [p.as_dict() for p in pairs]})
    else:
        for p in pairs:
            label = "legit" if p.both_legitimate else "string"
            print(f"{p.a} {p.b} {label}")
    return 0


def _cmd_graph(args: argparse.Namespace) -> int:
    if not _check_range(args):
        return 2
    graph = build_reach_graph(args.map_kind, args.lo, args.hi, args.max_steps, args.jobs)
    sys.stdout.write(render_dot(graph))
    return 0


def _add_format(parser: argparse.ArgumentParser, choices: Sequence[str], default: str = "text") -> None:
    parser.add_argument("--format", choices=list(choices), default=default)


def _add_range(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--from", dest="lo", type=int, required=True, metavar="A")
    parser.add_argument("--to", dest="hi", type=int, required=True, metavar="B")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="numbio",
        description="Biographies of numbers: digit-count self-description and its dynamics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cv", help="shortest biography of a digit string")
    p.add_argument("value", type=_digit_arg, metavar="S")
    _add_format(p, ("text", "json"))
    p.set_defaults(handler=_cmd_cv)

    p = sub.add_parser("cls", help="longest biography of a digit string")
    p.add_argument("value", type=_digit_arg, metavar="S")
    _add_format(p, ("text", "json"))
    p.set_defaults(handler=_cmd_cls)

    p = sub.add_parser("biographies", help="all biographies, shortest first")
    p.add_argument("value", type=_digit_arg, metavar="S")
    _add_format(p, ("text", "json"))
    p.set_defaults(handler=_cmd_biographies)

    p = sub.add_parser("isbio", help="is M a biography of N?")
    p.add_argument("m", type=_digit_arg, metavar="M")
    p.add_argument("n", type=_digit_arg, metavar="N")
    _add_format(p, ("text", "json"))
    p.set_defaults(handler=_cmd_isbio)

    p = sub.add_parser("autobio", help="autobiographical numbers")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--enumerate", action="store_true")
    group.add_argument("--check", type=_digit_arg, metavar="S")
    _add_format(p, ("text", "json"))
    p.set_defaults(handler=_cmd_autobio)

    p = sub.add_parser("classify", help="can the biography iteration run forever?")
    p.add_argument("value", type=_digit_arg, metavar="S")
    _add_format(p, ("text", "json"))
    p.set_defaults(handler=_cmd_classify)

    for name, kind in (("cv-seq", "cv"), ("cls-seq", "cls")):
        p = sub.add_parser(name, help=f"iterated {kind} trajectory of a seed")
        p.add_argument("value", type=_digit_arg, metavar="S")
        p.add_argument("--max-steps", type=_positive_int, default=1000, metavar="K")
        _add_format(p, ("text", "json"))
        p.set_defaults(handler=_cmd_seq, map_kind=kind)

    for name, kind in (("verify-cv", "cv"), ("verify-cls", "cls")):
        p = sub.add_parser(name, help=f"check every seed in a range under the {kind} map")
        _add_range(p)
        p.add_argument("--max-steps", type=_positive_int, default=1000, metavar="K")
        p.add_argument("--jobs", type=_positive_int, default=1, metavar="K")
        _add_format(p, ("text", "json", "csv"))
        p.set_defaults(handler=_cmd_verify, map_kind=kind)

    p = sub.add_parser("praise", help="mutually-praising pairs")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--find", action="store_true")
    group.add_argument("--check", nargs=2, type=_digit_arg, metavar=("A", "B"))
    p.add_argument("--legit-only", action="store_true")
    _add_format(p, ("text", "json"))
    p.set_defaults(handler=_cmd_praise)

    p = sub.add_parser("graph", help="DOT graph of states reachable from a seed range")
    p.add_argument("--map", dest="map_kind", choices=("cv", "cls"), required=True)
    _add_range(p)
    p.add_argument("--max-steps", type=_positive_int, default=1000, metavar="K")
    p.add_argument("--jobs", type=_positive_int, default=1, metavar="K")
    _add_format(p, ("dot",), default="dot")
    p.set_defaults(handler=_cmd_graph)

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    """Run one invocation and return its exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed usage or help
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.handler(args)
    except BrokenPipeError:
        # the downstream consumer closed the pipe, e.g. `numbio ... | head`
        try:
            os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        except (OSError, ValueError, AttributeError):
            pass
        return 0
    except NumbioError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
