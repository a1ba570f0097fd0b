"""Command line front end.

Subcommands: realize, check-seq, check-pair, gale-ryser, degree-set,
enumerate.  Exit codes: 0 success, 1 usage or input errors, 2 when an
exhaustive-enumeration size guard is exceeded.  Output is deterministic:
identical argv always produces identical stdout.
"""

from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path

from .bipartite import gale_ryser, is_bipartite_s_graphical
from .core import is_connected, signed_degree_set
from .oracle import (
    OracleLimitError,
    connected_degree_sets,
    oracle_bipartite,
    oracle_s_graphical,
)
from .realize import realize_set
from .sgraphical import is_s_graphical_branching, is_s_graphical_deterministic
from .textio import ParseError, emit_dot, emit_graph, parse_graph

__all__ = ["cli_main", "main"]


class _UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # Values like "-6,-5" must stay values, not option strings; safe
        # because no option here starts with a digit.
        self._negative_number_matcher = re.compile(r"^-\d")

    # argparse exits with status 2 on bad usage, but 2 is reserved for size
    # guards here, so usage problems surface as exceptions instead.
    def error(self, message):
        raise _UsageError(message)


def _ints(text: str) -> list[int]:
    """Parse a comma-separated integer list, tolerating whitespace."""
    tokens = [t.strip() for t in text.split(",")]
    if tokens == [""]:
        raise ValueError("empty integer list")
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ValueError(f"not a comma-separated integer list: {text!r}") from None


def _word(value: bool) -> str:
    return "true" if value else "false"


def _cmd_realize(args) -> int:
    report = realize_set(_ints(args.set))
    graph = report.graph
    print(f"case: {report.case_used}")
    print(f"|U|={graph.p} |V|={graph.q}")
    if args.out:
        Path(args.out).write_text(emit_graph(graph))
    if args.dot:
        Path(args.dot).write_text(emit_dot(graph))
    return 0


def _cmd_check_seq(args) -> int:
    decide = {
        "branching": is_s_graphical_branching,
        "deterministic": is_s_graphical_deterministic,
        "oracle": oracle_s_graphical,
    }[args.method]
    print(f"s-graphical: {_word(decide(_ints(args.seq)))}")
    return 0


def _cmd_check_pair(args) -> int:
    decide = is_bipartite_s_graphical if args.method == "reduction" else oracle_bipartite
    print(f"s-graphical: {_word(decide(_ints(args.alpha), _ints(args.beta)))}")
    return 0


def _cmd_gale_ryser(args) -> int:
    print(f"graphical: {_word(gale_ryser(_ints(args.d), _ints(args.e)))}")
    return 0


def _cmd_degree_set(args) -> int:
    text = sys.stdin.read() if args.infile == "-" else Path(args.infile).read_text()
    graph = parse_graph(text)
    print("degree set: " + ",".join(str(x) for x in sorted(signed_degree_set(graph))))
    print(f"connected: {_word(is_connected(graph))}")
    return 0


def _cmd_enumerate(args) -> int:
    for degree_set in connected_degree_sets(args.p, args.q):
        print(",".join(str(x) for x in degree_set))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="sdegree", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    realize = sub.add_parser(
        "realize", help="construct a connected graph with a prescribed signed degree set"
    )
    realize.add_argument("--set", required=True, help="comma-separated integers")
    realize.add_argument("--out", help="write the edge-list document to this file")
    realize.add_argument("--dot", help="write DOT output to this file")
    realize.set_defaults(func=_cmd_realize)

    check_seq = sub.add_parser("check-seq", help="decide a signed degree sequence")
    check_seq.add_argument("--seq", required=True, help="comma-separated integers")
    check_seq.add_argument(
        "--method", choices=("branching", "deterministic", "oracle"), default="branching"
    )
    check_seq.set_defaults(func=_cmd_check_seq)

    check_pair = sub.add_parser(
        "check-pair", help="decide a bipartite signed degree sequence pair"
    )
    check_pair.add_argument("--alpha", required=True, help="U-side sequence")
    check_pair.add_argument("--beta", required=True, help="V-side sequence")
    check_pair.add_argument("--method", choices=("reduction", "oracle"), default="reduction")
    check_pair.set_defaults(func=_cmd_check_pair)

    ryser = sub.add_parser("gale-ryser", help="test an unsigned bipartite degree pair")
    ryser.add_argument("--d", required=True, help="non-increasing non-negative integers")
    ryser.add_argument("--e", required=True, help="non-negative integers")
    ryser.set_defaults(func=_cmd_gale_ryser)

    degree_set = sub.add_parser(
        "degree-set", help="report the signed degree set of an edge-list document"
    )
    degree_set.add_argument(
        "--in", dest="infile", required=True, help="edge-list file, or - for stdin"
    )
    degree_set.set_defaults(func=_cmd_degree_set)

    enum = sub.add_parser(
        "enumerate", help="list all realizable connected degree sets at a given size"
    )
    enum.add_argument("--p", type=int, required=True)
    enum.add_argument("--q", type=int, required=True)
    enum.add_argument(
        "--sets", action="store_true", required=True, help="list degree sets (the only mode)"
    )
    enum.set_defaults(func=_cmd_enumerate)
    return parser


def cli_main(argv: list[str] | None = None) -> int:
    """Run one command and return the process exit code (never exits itself)."""
    try:
        args = _build_parser().parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    try:
        return args.func(args)
    except OracleLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    raise SystemExit(cli_main(sys.argv[1:]))


if __name__ == "__main__":
    main()
