"""Command-line front end.

Results go to stdout as one line of JSON (``gen`` prints an instance file
instead); diagnostics go to stderr.  Exit codes: 0 ok, 1 malformed input,
2 class precondition violated, 3 invalid certificate, 4 generator ran out
of attempts.
"""
from __future__ import annotations

import argparse
import json
import sys
import time

from .chordal_bipartite import is_chordal_bipartite, sci_chordal_bipartite
from .cograph import (
    format_decomposition,
    im_tree_cograph,
    parse_decomposition,
    realize,
    sci_tree_cograph,
)
from .errors import GeneratorExhausted, InputError, PreconditionError
from .exact import exact_chromatic_number, exact_clique_number, exact_max_independent_set, is_chordal
from .graph import Graph, format_dimacs, parse_dimacs
from .oracle import (
    EdgeColoring,
    coloring_document,
    line_graph_square,
    load_certificate,
    matching_document,
    max_induced_matching_oracle,
    read_certificate,
    strong_chromatic_index_oracle,
    verify_induced_matching,
    verify_strong_edge_coloring,
)
from .permutation import (
    Permutation,
    bp_strong_chromatic_index,
    format_permutation,
    graph_from_permutation,
    greedy_strong_coloring,
    max_trapezoid_clique,
    parse_permutation,
)
from . import testkit

EXIT_OK, EXIT_INPUT, EXIT_PRECONDITION, EXIT_INVALID, EXIT_EXHAUSTED = range(5)
DEFAULT_ORACLE_EDGES = 40

SCI_CLASSES = ("tree-cograph", "permutation", "bipperm", "chordal-bipartite", "oracle")
IM_CLASSES = ("tree-cograph", "oracle")
GEN_KINDS = ("tree", "decomposition", "permutation", "bipperm", "chordal-bipartite")


class _Parser(argparse.ArgumentParser):
    # usage mistakes are malformed input, not precondition failures
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _emit(doc: dict) -> None:
    print(json.dumps(doc, separators=(",", ":")))


def _oracle_cap(G: Graph, cap: int) -> None:
    if G.m > cap:
        raise PreconditionError(
            f"graph has {G.m} edges, above the oracle cap of {cap} (see --max-oracle-edges)"
        )


def read_any_graph(text: str) -> Graph:
    """Graph from a decomposition, permutation or DIMACS-like file, by content."""
    head = text.lstrip()
    if head.startswith("("):
        return realize(parse_decomposition(text))
    first = next((ln.split() for ln in head.splitlines() if ln.strip()), [])
    if first and first[0] in ("p", "c", "e"):
        return parse_dimacs(text)
    return graph_from_permutation(parse_permutation(text))


# --- subcommands -------------------------------------------------------------


def cmd_sci(args) -> int:
    text = _read(args.input)
    doc = {"problem": "sci", "class": args.cls}
    coloring = None
    if args.cls == "tree-cograph":
        doc["value"] = sci_tree_cograph(parse_decomposition(text))
    elif args.cls in ("permutation", "bipperm"):
        p = parse_permutation(text)
        G = graph_from_permutation(p)
        if args.cls == "bipperm":
            doc["value"] = bp_strong_chromatic_index(p)
        if args.certificate or args.cls == "permutation":
            coloring = greedy_strong_coloring(p)
            doc.setdefault("value", coloring.k)
            if coloring.k != doc["value"]:
                print(f"warning: greedy used {coloring.k} colors, value is {doc['value']}", file=sys.stderr)
    elif args.cls == "chordal-bipartite":
        doc["value"] = sci_chordal_bipartite(parse_dimacs(text))
    else:
        G = parse_dimacs(text)
        _oracle_cap(G, args.max_oracle_edges)
        k, coloring = strong_chromatic_index_oracle(G)
        doc["value"] = k
    if args.certificate:
        if coloring is None:
            print(f"note: class {args.cls} produces no coloring certificate", file=sys.stderr)
        else:
            assert verify_strong_edge_coloring(G, coloring) is None
            doc["coloring"] = coloring_document(G, coloring)["coloring"]
    _emit(doc)
    return EXIT_OK


def cmd_im(args) -> int:
    text = _read(args.input)
    if args.cls == "tree-cograph":
        t = parse_decomposition(text)
        G = realize(t)
        _, pairs = im_tree_cograph(t)
        chosen = [G.edge_id(u, v) for u, v in pairs]
    else:
        G = parse_dimacs(text)
        _oracle_cap(G, args.max_oracle_edges)
        _, chosen = max_induced_matching_oracle(G)
    bad = verify_induced_matching(G, chosen)
    if bad is not None:
        raise AssertionError(f"refusing to print an invalid matching: {bad.describe(G)}")
    _emit({"problem": "im", "class": args.cls, **matching_document(G, chosen)})
    return EXIT_OK


def cmd_color(args) -> int:
    p = parse_permutation(_read(args.input))
    G = graph_from_permutation(p)
    coloring = greedy_strong_coloring(p)
    clique = max_trapezoid_clique(p)
    doc = {"problem": "color", **coloring_document(G, coloring)}
    doc["clique"] = [[G.edges[e][0] + 1, G.edges[e][1] + 1] for e in sorted(clique)]
    doc["optimal"] = coloring.k == len(clique)
    if not doc["optimal"]:
        print(f"warning: greedy used {coloring.k} colors, clique bound is {len(clique)}", file=sys.stderr)
    _emit(doc)
    return EXIT_OK


def cmd_verify(args) -> int:
    G = read_any_graph(_read(args.input))
    doc = load_certificate(_read(args.certificate))
    kind, payload = read_certificate(G, doc)
    if kind == "coloring":
        bad = verify_strong_edge_coloring(G, payload)
        size = payload.k
    else:
        bad = verify_induced_matching(G, payload)
        size = len(set(payload))
    out = {"valid": bad is None, "kind": kind, "size": size, "violation": None}
    if bad is not None:
        out["violation"] = bad.describe(G)
    elif "value" in doc and doc["value"] != size:
        out["valid"] = False
        out["violation"] = {"claimed": doc["value"], "actual": size}
    _emit(out)
    return EXIT_OK if out["valid"] else EXIT_INVALID


def cmd_gen(args) -> int:
    if args.n < 1:
        raise InputError("--n must be positive")
    rng = testkit.SplitMix64(args.seed)
    if args.kind == "tree":
        text = format_dimacs(testkit.random_tree(args.n, rng), comment=f"random tree seed={args.seed}")
    elif args.kind == "decomposition":
        text = format_decomposition(testkit.random_decomposition(args.n, args.max_leaf_n, rng)) + "\n"
    elif args.kind == "permutation":
        order = list(range(1, args.n + 1))
        rng.shuffle(order)
        text = format_permutation(Permutation(tuple(order)))
    elif args.kind == "bipperm":
        text = format_permutation(testkit.random_bipartite_permutation(args.n, rng))
    else:
        G = testkit.random_chordal_bipartite(args.n, rng)
        text = format_dimacs(G, comment=f"random chordal bipartite seed={args.seed}")
    sys.stdout.write(text)
    return EXIT_OK


def cmd_oracle_stats(args) -> int:
    G = read_any_graph(_read(args.input))
    _oracle_cap(G, args.max_oracle_edges)
    H = line_graph_square(G)
    t0 = time.perf_counter()
    omega, _ = exact_clique_number(H)
    chi, _ = exact_chromatic_number(H)
    alpha, _ = exact_max_independent_set(H)
    elapsed = time.perf_counter() - t0
    _emit({
        "n": G.n,
        "m": G.m,
        "square_edges": H.m,
        "omega": omega,
        "chi": chi,
        "alpha": alpha,
        "square_chordal": bool(is_chordal(H)),
        "chordal_bipartite": bool(is_chordal_bipartite(G)),
        "seconds": round(elapsed, 4),
    })
    return EXIT_OK


# --- entry point -------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="strongedge", description="Strong edge coloring and induced matchings.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def oracle_cap(p):
        p.add_argument("--max-oracle-edges", type=int, default=DEFAULT_ORACLE_EDGES,
                       help="largest edge count the exact oracle accepts (default %(default)s)")

    p = sub.add_parser("sci", help="strong chromatic index")
    p.add_argument("--class", dest="cls", choices=SCI_CLASSES, required=True)
    p.add_argument("--input", required=True, help="instance file, or - for stdin")
    p.add_argument("--certificate", action="store_true", help="include a coloring when available")
    oracle_cap(p)
    p.set_defaults(func=cmd_sci)

    p = sub.add_parser("im", help="maximum induced matching")
    p.add_argument("--class", dest="cls", choices=IM_CLASSES, required=True)
    p.add_argument("--input", required=True)
    oracle_cap(p)
    p.set_defaults(func=cmd_im)

    p = sub.add_parser("color", help="greedy strong edge coloring of a permutation graph")
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("verify", help="check a coloring or matching certificate")
    p.add_argument("--input", required=True, help="graph, permutation or decomposition file")
    p.add_argument("--certificate", required=True, help="JSON certificate file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="print a seeded random instance")
    p.add_argument("kind", choices=GEN_KINDS)
    p.add_argument("--n", type=int, required=True, help="vertices, or leaves for a decomposition")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-leaf-n", type=int, default=4)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("oracle-stats", help="exact invariants of L(G)^2")
    p.add_argument("--input", required=True)
    oracle_cap(p)
    p.set_defaults(func=cmd_oracle_stats)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except PreconditionError as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except GeneratorExhausted as exc:
        print(f"generator exhausted: {exc}", file=sys.stderr)
        return EXIT_EXHAUSTED
