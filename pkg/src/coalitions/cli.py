"""Command-line interface.

One subcommand per library entry point.  Graph input comes from a file or
from standard input as '-'; graph6 is the default format (multi-line graph6
input produces one result line per graph), and the edge-list format is
selected by extension (.el, .edgelist) or by --format.  Exit codes: 0 for a
computed answer, 1 for answer-no under --status-exit, 2 for usage errors,
3 for precondition or format errors, 4 for an exceeded search guard.  The
CC_GUARD_N environment variable overrides the partition-search guard; an
explicit --guard flag wins over it.
"""

import argparse
import json
import os
import sys

from .domination import PARTITION_GUARD_DEFAULT, connected_domatic_number, gamma_c
from .errors import CoalitionsError, GraphFormatError, GuardExceededError, PreconditionError
from .family import in_family_f
from .graphs import (
    GENERATOR_FAMILIES,
    Graph,
    corona,
    emit_edgelist,
    emit_graph6,
    generate,
    iter_graph6_lines,
    parse_edgelist,
)
from .matrices import check_cc_equals_n, check_cc_equals_n_minus_1, edge_domination_matrix
from .oracle import cc_number, coalition_graph
from .verify import default_corpus, run_theorem_suite


def _read_text(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_graphs(path, fmt):
    """Load one or more graphs; graph6 unless the extension or --format says edge list."""
    text = _read_text(path)
    if fmt is None:
        fmt = "edgelist" if path.endswith((".el", ".edgelist")) else "g6"
    if fmt == "edgelist":
        return [parse_edgelist(text)]
    graphs = list(iter_graph6_lines(text))
    if not graphs:
        raise GraphFormatError("input contains no graphs")
    return graphs


def _resolve_guard(args):
    guard = getattr(args, "guard", None)
    if guard is not None:
        return guard
    env = os.environ.get("CC_GUARD_N")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise PreconditionError(f"CC_GUARD_N must be an integer, got {env!r}")
    return PARTITION_GUARD_DEFAULT


def _emit(args, payload, text):
    print(json.dumps(payload) if args.json else text)


def _write_lines(out, lines):
    body = "\n".join(lines) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(body)
    else:
        sys.stdout.write(body)


def _cmd_cc(args):
    guard = _resolve_guard(args)
    any_zero = False
    for g in _load_graphs(args.input, args.format):
        cc, witness = cc_number(g, guard)
        wit = None if witness is None else [sorted(p) for p in witness]
        _emit(args, {"cc": cc, "witness": wit},
              f"cc={cc} witness={'none' if wit is None else json.dumps(wit)}")
        if cc == 0:
            any_zero = True
    return 1 if args.status_exit and any_zero else 0


def _cmd_check_n(args):
    any_no = False
    for g in _load_graphs(args.input, args.format):
        decision = check_cc_equals_n(g)
        payload = decision.as_dict()
        del payload["variant"]
        if decision.answer:
            text = f"answer=yes witness={json.dumps(payload['witness'])}"
        else:
            text = f"answer=no reason={decision.reason}"
            any_no = True
        _emit(args, payload, text)
    return 1 if args.status_exit and any_no else 0


def _cmd_check_n1(args):
    any_no = False
    for g in _load_graphs(args.input, args.format):
        decision = check_cc_equals_n_minus_1(g, args.variant)
        payload = decision.as_dict()
        if decision.answer:
            text = (f"answer=yes variant={args.variant} "
                    f"witness={json.dumps(payload['witness'])}")
        else:
            text = f"answer=no variant={args.variant} reason={decision.reason}"
            any_no = True
        _emit(args, payload, text)
    return 1 if args.status_exit and any_no else 0


def _cmd_family_f(args):
    any_no = False
    for g in _load_graphs(args.input, args.format):
        member, trace = in_family_f(g)
        steps = [[v, r] for v, r in trace.steps]
        payload = {"member": member, "terminal": trace.terminal, "steps": steps}
        text = (f"member={'yes' if member else 'no'} terminal={trace.terminal} "
                f"steps={json.dumps(steps)}")
        _emit(args, payload, text)
        if not member:
            any_no = True
    return 1 if args.status_exit and any_no else 0


def _cmd_gamma_c(args):
    for g in _load_graphs(args.input, args.format):
        size, witness = gamma_c(g)
        wit = sorted(witness)
        _emit(args, {"gamma_c": size, "witness": wit},
              f"gamma_c={size} witness={json.dumps(wit)}")
    return 0


def _cmd_domatic(args):
    guard = _resolve_guard(args)
    for g in _load_graphs(args.input, args.format):
        k, parts = connected_domatic_number(g, guard)
        wit = [sorted(p) for p in parts]
        _emit(args, {"d_c": k, "witness": wit},
              f"d_c={k} witness={json.dumps(wit)}")
    return 0


def _cmd_gen(args):
    g = generate(args.family, args.params)
    text = emit_graph6(g) if args.format == "g6" else emit_edgelist(g)
    _write_lines(args.out, [text])
    return 0


def _cmd_corona(args):
    k1 = Graph(1, [])
    lines = [emit_graph6(corona(g, k1)) for g in _load_graphs(args.input, args.format)]
    _write_lines(args.out, lines)
    return 0


def _cmd_ccg(args):
    graphs = _load_graphs(args.input, args.format)
    if len(graphs) != 1:
        raise PreconditionError(f"ccg expects exactly one input graph, got {len(graphs)}")
    with open(args.partition, encoding="utf-8") as fh:
        try:
            raw = json.load(fh)
        except json.JSONDecodeError as exc:
            raise GraphFormatError(f"partition file is not valid JSON: {exc}")
    if not isinstance(raw, list) or not all(
        isinstance(p, list) and all(isinstance(v, int) for v in p) for p in raw
    ):
        raise GraphFormatError("partition file must hold an array of arrays of vertex ids")
    cg = coalition_graph(graphs[0], [frozenset(p) for p in raw])
    print(emit_graph6(cg.graph))
    return 0


def _cmd_dump_matrix(args):
    for g in _load_graphs(args.input, args.format):
        print(edge_domination_matrix(g).to_text())
    return 0


def _cmd_verify(args):
    guard = _resolve_guard(args)
    if args.corpus:
        graphs = iter_graph6_lines(_read_text(args.corpus))
        label = f"graph6 file {args.corpus}"
    else:
        graphs = default_corpus(args.n_max, args.connected_only)
        label = f"labeled graphs n <= {args.n_max}"
        if args.connected_only:
            label += ", connected only"
    ids = args.theorems.split(",") if args.theorems else None
    report = run_theorem_suite(graphs, ids, corpus_label=label, guard=guard)
    print(report.summary_text())
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(report.to_json() + "\n")
    return 1 if args.status_exit and report.failing() else 0


def _add_io_flags(sp, status=False, guard=False):
    sp.add_argument("input", help="graph file, or - for standard input")
    sp.add_argument("--format", choices=("g6", "edgelist"), default=None,
                    help="input format; default graph6 unless the extension is .el/.edgelist")
    sp.add_argument("--json", action="store_true", help="emit one JSON object per graph")
    if status:
        sp.add_argument("--status-exit", action="store_true",
                        help="exit 1 when any answer is no")
    if guard:
        sp.add_argument("--guard", type=int, default=None,
                        help=f"partition-search size guard (default {PARTITION_GUARD_DEFAULT}, or CC_GUARD_N)")


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="coalitions",
        description="Connected coalition numbers of small graphs: exact oracle, "
                    "polynomial checkers, generators, and a theorem verification harness.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("cc", help="exact connected coalition number with witness partition")
    _add_io_flags(sp, status=True, guard=True)
    sp.set_defaults(func=_cmd_cc)

    sp = sub.add_parser("check-n", help="polynomial decider for CC = n")
    _add_io_flags(sp, status=True)
    sp.set_defaults(func=_cmd_check_n)

    sp = sub.add_parser("check-n1", help="polynomial decider for CC = n-1")
    _add_io_flags(sp, status=True)
    sp.add_argument("--variant", choices=("paper", "strict"), default="strict",
                    help="paper: the pair rule as stated; strict: adds the non-CDS pair "
                         "guard and requires the CC = n check to fail (default)")
    sp.set_defaults(func=_cmd_check_n1)

    sp = sub.add_parser("family-f", help="membership in the peel family (CC = 0)")
    _add_io_flags(sp, status=True)
    sp.set_defaults(func=_cmd_family_f)

    sp = sub.add_parser("gamma-c", help="connected domination number with witness")
    _add_io_flags(sp)
    sp.set_defaults(func=_cmd_gamma_c)

    sp = sub.add_parser("domatic", help="connected domatic number with witness partition")
    _add_io_flags(sp, guard=True)
    sp.set_defaults(func=_cmd_domatic)

    sp = sub.add_parser("gen", help="generate a standard family member")
    sp.add_argument("family", choices=GENERATOR_FAMILIES)
    sp.add_argument("params", nargs="+", type=int, help="family parameters")
    sp.add_argument("--out", default=None, help="write to a file instead of standard output")
    sp.add_argument("--format", choices=("g6", "edgelist"), default="g6",
                    help="output format (default g6)")
    sp.set_defaults(func=_cmd_gen)

    sp = sub.add_parser("corona", help="attach one pendant to every vertex (corona with K_1)")
    sp.add_argument("input", help="graph file, or - for standard input")
    sp.add_argument("attach", choices=("k1",), help="what to attach (only k1 is supported)")
    sp.add_argument("--format", choices=("g6", "edgelist"), default=None,
                    help="input format; default graph6 unless the extension is .el/.edgelist")
    sp.add_argument("--out", default=None, help="write to a file instead of standard output")
    sp.set_defaults(func=_cmd_corona)

    sp = sub.add_parser("ccg", help="coalition graph of a valid partition, as graph6")
    sp.add_argument("input", help="graph file, or - for standard input")
    sp.add_argument("--format", choices=("g6", "edgelist"), default=None,
                    help="input format; default graph6 unless the extension is .el/.edgelist")
    sp.add_argument("--partition", required=True,
                    help="JSON file holding an array of arrays of vertex ids")
    sp.set_defaults(func=_cmd_ccg)

    sp = sub.add_parser("dump-matrix", help="edge-domination matrix in the plain text dump format")
    sp.add_argument("input", help="graph file, or - for standard input")
    sp.add_argument("--format", choices=("g6", "edgelist"), default=None,
                    help="input format; default graph6 unless the extension is .el/.edgelist")
    sp.set_defaults(func=_cmd_dump_matrix)

    sp = sub.add_parser("verify", help="run the theorem suite over a corpus")
    sp.add_argument("--n-max", type=int, default=6,
                    help="largest order for the built-in labeled corpus (default 6)")
    sp.add_argument("--connected-only", action="store_true",
                    help="restrict the built-in corpus to connected graphs")
    sp.add_argument("--theorems", default=None,
                    help="comma-separated theorem ids, e.g. t1,t5 (default: all)")
    sp.add_argument("--corpus", default=None,
                    help="graph6 file to verify instead of the built-in corpus")
    sp.add_argument("--out", default=None, help="write the JSON report to this file")
    sp.add_argument("--status-exit", action="store_true",
                    help="exit 1 when any asserted theorem has counterexamples")
    sp.add_argument("--guard", type=int, default=None,
                    help=f"partition-search size guard (default {PARTITION_GUARD_DEFAULT}, or CC_GUARD_N)")
    sp.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except GuardExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except (GraphFormatError, PreconditionError, CoalitionsError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
