"""Command-line front end.

Decision results always travel on stdout, never in the exit code; exit 0
means the command ran to completion, 2 is a usage or input error, 3 means a
size cap was exceeded.  Output is byte-identical across runs for identical
inputs and flags, including under ``--parallel``; timing chatter goes to
stderr only.
"""

from __future__ import annotations

import argparse
import sys
from typing import Iterable, Sequence

from . import oracle
from .audit import audit, format_counterexamples, format_report
from .certificates import (
    Member,
    NonMember,
    dual_certify,
    format_certificate,
    parse_certificate,
    verify_nbp2,
)
from .deciders import decide_bp2, is_bp1, star_biclique_poly
from .graphs import CapacityError, Graph
from .graphio import edgelist_parse, g6_decode, g6_encode, named, random_graph
from .witnesses import StarBicliqueWitness, TwoBicliquePartition, partition_error, star_witness_error

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CAPACITY = 3


def _labels(values: Iterable[int]) -> str:
    return " ".join(str(v) for v in sorted(values))


def _sides_text(sides: tuple[frozenset[int], frozenset[int]]) -> str:
    return f"{_labels(sides[0])} / {_labels(sides[1])}"


def _partition_text(p: TwoBicliquePartition) -> str:
    return " | ".join(f"{_labels(part)} : {_sides_text(sides)}" for part, sides in p.parts)


def _star_text(w: StarBicliqueWitness) -> str:
    return (
        f"star {_labels(w.star_part)} center {w.center}"
        f" | biclique {_labels(w.biclique_part)} : {_sides_text(w.biclique_sides)}"
    )


def _read_graphs(args: argparse.Namespace) -> list[Graph]:
    if args.g6 is not None:
        return [g6_decode(args.g6)]
    if args.file == "-":
        text = sys.stdin.read()
    else:
        with open(args.file, "r", encoding="utf-8") as handle:
            text = handle.read()
    if getattr(args, "format", "g6") == "edgelist":
        return [edgelist_parse(text)]
    graphs = [g6_decode(line) for line in text.splitlines() if line.strip()]
    if not graphs:
        raise ValueError("no graphs in input")
    return graphs


def _add_graph_input(parser: argparse.ArgumentParser) -> None:
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--g6", help="graph6 string")
    source.add_argument("--file", help="path to input graphs ('-' for stdin)")
    parser.add_argument(
        "--format",
        choices=("g6", "edgelist"),
        default="g6",
        help="--file payload: graph6 lines (default) or one edge-list document",
    )


def _cmd_decide(args: argparse.Namespace) -> int:
    cap = args.max_n
    if cap != oracle.DEFAULT_CAP:
        print(f"warning: raising the oracle cap to {cap}; expect exponential running time", file=sys.stderr)
    if args.problem == "bp2" and args.method == "poly":
        print(
            "warning: the bp2 decision still enumerates vertex cuts exhaustively "
            "when the complement is 2-connected",
            file=sys.stderr,
        )
    for g in _read_graphs(args):
        code = g6_encode(g)
        witness = ""
        if args.problem == "bp1":
            if args.method == "poly":
                value = is_bp1(g)
            else:
                sides = oracle.bp1_oracle(g, cap=cap)
                value = sides is not None
                if sides is not None:
                    assert partition_error(g, TwoBicliquePartition(g.vertex_set, sides)) is None
                    witness = _sides_text(sides)
        elif args.problem == "bp2":
            if args.method == "poly":
                value = decide_bp2(g, cap=cap)
            else:
                part = oracle.bp2_oracle(g, cap=cap)
                value = part is not None
                if part is not None:
                    assert partition_error(g, part) is None
                    witness = _partition_text(part)
        else:
            if args.method == "poly":
                found = star_biclique_poly(g)
            else:
                found = oracle.star_biclique_oracle(g, cap=cap)
            value = found is not None
            if found is not None:
                assert star_witness_error(g, found) is None
                witness = _star_text(found)
        line = f"{code}\t{args.problem}={'true' if value else 'false'}"
        if witness:
            line += f"\twitness={witness}"
        print(line)
    return EXIT_OK


def _cmd_certify(args: argparse.Namespace) -> int:
    first = True
    for g in _read_graphs(args):
        if not first:
            print()
        first = False
        cert = dual_certify(g, cap=args.max_n)
        if isinstance(cert, Member):
            assert partition_error(g, cert.partition) is None
        print(format_certificate(cert))
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    with open(args.cert, "r", encoding="utf-8") as handle:
        cert = parse_certificate(handle.read())
    for g in _read_graphs(args):
        if isinstance(cert, Member):
            reason = partition_error(g, cert.partition)
            print("valid" if reason is None else f"invalid: {reason}")
        else:
            assert isinstance(cert, NonMember)
            outcome = verify_nbp2(g, cert.sequence)
            print("accept" if outcome.accepted else f"reject: {outcome.reason}")
    return EXIT_OK


def _cmd_audit(args: argparse.Namespace) -> int:
    progress = (lambda msg: print(msg, file=sys.stderr)) if args.progress else None
    report = audit(args.n_min, args.n_max, parallelism=args.parallel, progress=progress)
    print(format_report(report))
    if args.report:
        body = format_report(report) + "\n\n" + format_counterexamples(report) + "\n"
        with open(args.report, "w", encoding="utf-8") as handle:
            handle.write(body)
    print(f"completed in {report.wall_time:.1f}s", file=sys.stderr)
    return EXIT_OK


def _cmd_gen(args: argparse.Namespace) -> int:
    if args.random is not None:
        if args.name is not None or args.params:
            raise ValueError("--random cannot be combined with --name")
        n_text, p_text = args.random
        g = random_graph(int(n_text), float(p_text), args.seed)
    elif args.name is not None:
        g = named(args.name, *(int(p) for p in args.params))
    else:
        raise ValueError("one of --name or --random is required")
    print(g6_encode(g))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bp2cert",
        description="Decide, certify and audit two-biclique vertex partitions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_decide = sub.add_parser("decide", help="decide membership for input graphs")
    _add_graph_input(p_decide)
    p_decide.add_argument("--problem", choices=("bp1", "bp2", "star-biclique"), required=True)
    p_decide.add_argument("--method", choices=("poly", "oracle"), default="poly")
    p_decide.add_argument("--max-n", type=int, default=oracle.DEFAULT_CAP, help="raise the oracle size cap")
    p_decide.set_defaults(func=_cmd_decide)

    p_certify = sub.add_parser("certify", help="emit a membership or non-membership certificate")
    _add_graph_input(p_certify)
    p_certify.add_argument("--max-n", type=int, default=oracle.DEFAULT_CAP, help="raise the oracle size cap")
    p_certify.set_defaults(func=_cmd_certify)

    p_verify = sub.add_parser("verify", help="check a certificate file against input graphs")
    _add_graph_input(p_verify)
    p_verify.add_argument("--cert", required=True, help="certificate file path")
    p_verify.set_defaults(func=_cmd_verify)

    p_audit = sub.add_parser("audit", help="exhaustive claim audit over small graphs")
    p_audit.add_argument("--n-min", type=int, required=True)
    p_audit.add_argument("--n-max", type=int, required=True)
    p_audit.add_argument("--parallel", type=int, default=None, help="worker processes (default: all cores)")
    p_audit.add_argument("--report", help="write summary plus counterexample lists to this file")
    p_audit.add_argument("--progress", action="store_true", help="progress lines on stderr")
    p_audit.set_defaults(func=_cmd_audit)

    p_gen = sub.add_parser("gen", help="emit graph6 for a named or random graph")
    p_gen.add_argument("--name", help="empty|complete|path|cycle|complete_bipartite|star|disjoint_union_of_cycles")
    p_gen.add_argument("params", nargs="*", help="integer parameters for --name")
    p_gen.add_argument("--random", nargs=2, metavar=("N", "P"), help="random graph on N vertices, edge probability P")
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.set_defaults(func=_cmd_gen)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
