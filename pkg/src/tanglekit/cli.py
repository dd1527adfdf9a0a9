"""Command-line front end.

Graphs come from stdin or ``--input`` in the text format (or as a graph
JSON document).  Exit codes: 1 parse error, 2 precondition violation,
3 budget exceeded, 4 a computed object failed a built-in consistency check.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence, TextIO

from . import serialize as ser
from .bits import items_of
from .branchwidth import branch_width, treewidth, verify_duality, verify_inequalities
from .connectivity import KIND_ALIASES, make_system, parse_matroid
from .errors import BudgetExceeded, FalsificationError, ParseError, PreconditionError
from .generators import NAMES, named_graph
from .graph import format_graph
from .kappa import enumerate_kappa_tangles, max_tangle_order
from .separations import DEFAULT_BUDGET, k_blocks, triconnected_components
from .tangles import enumerate_graph_tangles, max_graph_tangle_order, tangle_core

EXIT_PARSE, EXIT_PRECONDITION, EXIT_BUDGET, EXIT_FALSIFIED = 1, 2, 3, 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise PreconditionError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--input", metavar="FILE", help="read the input from FILE instead of stdin")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, metavar="N")

    p = _Parser(prog="tanglekit", description="Tangles, blocks and branch decompositions of small graphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", parents=[common], help="write a named graph")
    g.add_argument("name", choices=NAMES)
    g.add_argument("params", nargs="*", type=int)

    sub.add_parser("components", parents=[common], help="connected and biconnected components")
    b = sub.add_parser("blocks", parents=[common], help="k-blocks")
    b.add_argument("--k", type=int, required=True)
    sub.add_parser("torsos", parents=[common], help="triconnected components (torsos of 2-blocks)")
    t = sub.add_parser("tangles", parents=[common], help="graph tangles")
    t.add_argument("--order", type=int, help="only this order (default: every order up to the maximum)")

    systems = sorted(KIND_ALIASES)
    kt = sub.add_parser("kappa-tangles", parents=[common], help="tangles of a connectivity system")
    kt.add_argument("--order", type=int)
    kt.add_argument("--system", choices=systems, default="vertex")
    for name, helptext in (("branchwidth", "exact branch-width with a witness"),
                           ("duality", "branch-width against maximum tangle order")):
        s = sub.add_parser(name, parents=[common], help=helptext)
        s.add_argument("--system", choices=systems, default="vertex")
    sub.add_parser("treewidth", parents=[common], help="exact treewidth")
    sub.add_parser("inequalities", parents=[common], help="bw <= tw+1 <= max(3/2 bw, 2)")
    sub.add_parser("convert", parents=[common], help="rewrite a graph in canonical text or JSON")
    return p


def _read(args, stdin: TextIO) -> str:
    if args.input:
        try:
            with open(args.input) as fh:
                return fh.read()
        except OSError as exc:
            raise ParseError(f"cannot read {args.input}: {exc.strerror}") from None
    return stdin.read()


def _system(args, text: str):
    if KIND_ALIASES[args.system] == "matroid":
        head = text.lstrip().split(None, 1)[:1]
        if head and head[0] in ("rank-matrix", "graphic"):
            return make_system("matroid", parse_matroid(text))
    return make_system(args.system, ser.read_graph(text))


def _components_doc(g) -> dict:
    bic = k_blocks(g, 1)
    count = {}
    for blk in bic:
        for v in blk:
            count[v] = count.get(v, 0) + 1
    return {
        "kind": "components",
        "connected": g.is_connected(),
        "components": [items_of(c) for c in g.components()],
        "biconnected": [sorted(b) for b in bic],
        "cut_vertices": sorted(v for v, c in count.items() if c > 1),
    }


def run(args, stdin: TextIO) -> str:
    cmd = args.command
    if cmd == "gen":
        g = named_graph(args.name, args.params)
        return format_graph(g) if args.format == "text" else ser.dumps(ser.graph_doc(g))
    text = _read(args, stdin)
    budget = args.budget
    if cmd in ("kappa-tangles", "branchwidth", "duality"):
        system = _system(args, text)
        if cmd == "kappa-tangles":
            orders = [args.order] if args.order is not None else range(max_tangle_order(system, budget) + 1)
            tangles = [t for k in orders for t in enumerate_kappa_tangles(system, k, budget)]
            doc = ser.kappa_tangles_doc(system, tangles)
        elif cmd == "branchwidth":
            bw, d = branch_width(system, budget)
            doc = ser.branchwidth_doc(system, bw, d)
        else:
            doc = ser.duality_doc(system, verify_duality(system, budget))
    else:
        g = ser.read_graph(text)
        if cmd == "convert":
            return format_graph(g) if args.format == "text" else ser.dumps(ser.graph_doc(g))
        if cmd == "components":
            doc = _components_doc(g)
        elif cmd == "blocks":
            if args.k < 0:
                raise PreconditionError("--k must be nonnegative")
            doc = ser.blocks_doc(k_blocks(g, args.k))
        elif cmd == "torsos":
            doc = ser.torsos_doc(triconnected_components(g))
        elif cmd == "tangles":
            if args.order is not None:
                orders = [args.order]
            else:
                orders = range(1, max_graph_tangle_order(g) + 1)
            items = [(t, tangle_core(g, t)) for k in orders for t in enumerate_graph_tangles(g, k, budget)]
            doc = ser.tangles_doc(items)
        elif cmd == "treewidth":
            doc = {"kind": "treewidth", "value": treewidth(g)}
        elif cmd == "inequalities":
            doc = ser.inequalities_doc(verify_inequalities(g, budget))
        else:  # pragma: no cover - argparse restricts the choices
            raise PreconditionError(f"unknown command {cmd}")
    return ser.dumps(doc) if args.format == "json" else ser.render_text(doc)


def execute(argv: Sequence[str], stdin: TextIO, stdout: TextIO, stderr: TextIO) -> int:
    try:
        args = build_parser().parse_args(list(argv))
        stdout.write(run(args, stdin))
    except ParseError as exc:
        print(f"parse error: {exc}", file=stderr)
        return EXIT_PARSE
    except PreconditionError as exc:
        print(f"precondition violated: {exc}", file=stderr)
        return EXIT_PRECONDITION
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=stderr)
        return EXIT_BUDGET
    except FalsificationError as exc:
        print(f"consistency check failed: {exc}", file=stderr)
        return EXIT_FALSIFIED
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    return execute(sys.argv[1:] if argv is None else argv, sys.stdin, sys.stdout, sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
