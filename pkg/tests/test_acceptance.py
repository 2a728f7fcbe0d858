"""Acceptance criteria: fast algorithms against the exact oracle.

Each ``criterion_*`` function returns ``(ok, detail)``.  Under pytest every
criterion is one test and a PASS/FAIL line per criterion is printed in the
terminal summary (see conftest.py).  Run this file directly to get just the
lines:  ``python tests/test_acceptance.py``.
"""
from __future__ import annotations

import itertools
import json
import os
import subprocess
import sys
import tempfile
import time
from functools import lru_cache

import networkx as nx
import pytest

from strongedge.chordal_bipartite import (
    HOLEY_SQUARE,
    is_chordal_bipartite,
    max_chain_subgraph_bruteforce,
    sci_chordal_bipartite,
)
from strongedge.cograph import im_tree_cograph, realize, sci_cotree, sci_tree, sci_tree_cograph
from strongedge.exact import exact_chromatic_number, exact_clique_number, is_chordal
from strongedge.graph import Graph, bipartition, complement
from strongedge.oracle import (
    line_graph_square,
    max_induced_matching_oracle,
    strong_chromatic_index_oracle,
    verify_induced_matching,
    verify_strong_edge_coloring,
)
from strongedge.patterns import contains_induced_pattern, has_induced_cycle_longer_than
from strongedge.permutation import (
    Permutation,
    bp_clique_sweep,
    bp_strong_chromatic_index,
    graph_from_permutation,
    greedy_strong_coloring,
    trapezoid_graph,
    trapezoid_model,
)
from strongedge.testkit import (
    SplitMix64,
    random_bipartite_permutation,
    random_c6_free_bipartite,
    random_chordal_bipartite,
    random_decomposition,
    random_tree,
)

RESULTS: dict[int, tuple[str, bool, str]] = {}


def _first(items, limit=3):
    items = list(items)
    more = f" (+{len(items) - limit} more)" if len(items) > limit else ""
    return ", ".join(map(str, items[:limit])) + more


# --- instance sets -----------------------------------------------------------


@lru_cache(None)
def random_trees():
    rng = SplitMix64(101)
    return [random_tree(rng.between(2, 14), rng) for _ in range(200)]


@lru_cache(None)
def random_decompositions():
    rng = SplitMix64(303)
    out = []
    while len(out) < 200:
        t = random_decomposition(rng.between(1, 5), 4, rng)
        G = realize(t)
        if G.m <= 36:
            out.append((t, G))
    return out


@lru_cache(None)
def permutation_set():
    perms = [Permutation(p) for n in range(1, 8) for p in itertools.permutations(range(1, n + 1))]
    rng = SplitMix64(606)
    for _ in range(200):
        order = list(range(1, rng.between(1, 10) + 1))
        rng.shuffle(order)
        perms.append(Permutation(tuple(order)))
    return perms


@lru_cache(None)
def bipartite_permutation_set():
    perms = []
    for n in range(1, 9):
        for p in itertools.permutations(range(1, n + 1)):
            G = graph_from_permutation(Permutation(p))
            if G.is_connected() and bipartition(G):
                perms.append(Permutation(p))
    exhaustive = len(perms)
    rng = SplitMix64(808)
    for i in range(100):
        perms.append(random_bipartite_permutation(9 + i % 4, rng))
    return perms, exhaustive


# --- criteria ----------------------------------------------------------------


def criterion_1():
    bad = []
    for T in random_trees():
        k = sci_tree(T)
        if k != strong_chromatic_index_oracle(T)[0] or k != exact_clique_number(line_graph_square(T))[0]:
            bad.append(T.edges)
    return not bad, f"{len(random_trees())} trees, {len(bad)} mismatches {_first(bad)}"


def criterion_2():
    bad = []
    shapes = 0
    for n in range(1, 8):
        trees = [Graph(1)] if n == 1 else [Graph(n, T.edges) for T in nx.nonisomorphic_trees(n)]
        for T in trees:
            shapes += 1
            C = complement(T)
            if sci_cotree(n) != strong_chromatic_index_oracle(C)[0]:
                bad.append(("sci", T.edges))
            if exact_clique_number(line_graph_square(C))[0] != C.m:
                bad.append(("clique", T.edges))
    return not bad, f"{shapes} tree shapes, {len(bad)} mismatches {_first(bad)}"


def criterion_3():
    bad = [
        t for t, G in random_decompositions()
        if sci_tree_cograph(t) != strong_chromatic_index_oracle(G)[0]
    ]
    return not bad, f"{len(random_decompositions())} decompositions, {len(bad)} mismatches"


def criterion_4():
    bad = []
    for t, G in random_decompositions():
        size, pairs = im_tree_cograph(t)
        ids = [G.edge_id(u, v) for u, v in pairs]
        if size != max_induced_matching_oracle(G)[0] or verify_induced_matching(G, ids) is not None:
            bad.append(t)
    return not bad, f"{len(random_decompositions())} decompositions, {len(bad)} failures"


def criterion_5():
    small = [G for _, G in random_decompositions() if G.n <= 14]
    g_holes = sum(has_induced_cycle_longer_than(G, 4) is not None for G in small)
    sq_holes = sum(has_induced_cycle_longer_than(line_graph_square(G), 4) is not None for G in small)
    not_chordal = gems = 0
    first_gem = None
    for T in random_trees():
        H = line_graph_square(T)
        not_chordal += not is_chordal(H)
        if contains_induced_pattern(H, "gem") is not None:
            gems += 1
            first_gem = first_gem or T.edges
    ok = not (g_holes or sq_holes or not_chordal or gems)
    detail = (
        f"{len(small)} tree-cographs: {g_holes} with a hole in G, {sq_holes} in L2; "
        f"{len(random_trees())} trees: {not_chordal} with non-chordal L2, {gems} with a gem in L2"
    )
    if first_gem:
        detail += f" (first: tree edges {first_gem})"
    return ok, detail


def criterion_6():
    bad = []
    for p in permutation_set():
        G = graph_from_permutation(p)
        if trapezoid_graph(trapezoid_model(p), G).edges != line_graph_square(G).edges:
            bad.append(p.bottom)
    return not bad, f"{len(permutation_set())} permutations, {len(bad)} mismatches {_first(bad)}"


def criterion_7():
    bad = []
    for p in permutation_set():
        G = graph_from_permutation(p)
        coloring = greedy_strong_coloring(p)
        chi = exact_chromatic_number(line_graph_square(G))[0]
        if verify_strong_edge_coloring(G, coloring) is not None or coloring.k != chi:
            bad.append(p.bottom)
    return not bad, f"{len(permutation_set())} permutations, {len(bad)} non-optimal {_first(bad)}"


def criterion_8():
    perms, exhaustive = bipartite_permutation_set()
    bad = []
    short = []
    for p in perms:
        G = graph_from_permutation(p)
        oracle = strong_chromatic_index_oracle(G)[0]
        if bp_strong_chromatic_index(p) != oracle:
            bad.append(p.bottom)
        swept = max((len(e) for _, _, e in bp_clique_sweep(p)), default=0)
        if swept != oracle:
            short.append(p.bottom)
    note = f"; left sweep alone falls short on {len(short)} ({_first(short, 1)})"
    return not bad, f"{exhaustive} exhaustive + {len(perms) - exhaustive} seeded, {len(bad)} mismatches{note}"


def criterion_9():
    G = HOLEY_SQUARE
    cb = bool(is_chordal_bipartite(G))
    sq = bool(is_chordal(line_graph_square(G)))
    k = sci_chordal_bipartite(G)
    oracle = strong_chromatic_index_oracle(G)[0]
    return cb and not sq and k == oracle, f"chordal bipartite={cb}, L2 chordal={sq}, sci={k}, oracle={oracle}"


def criterion_10():
    rng = SplitMix64(1010)
    bad = []
    sizes = []
    while len(sizes) < 100:
        G = random_c6_free_bipartite(rng.between(7, 12), rng, p=0.3 + 0.5 * rng.random())
        if G.m < 6:
            continue
        sizes.append(G.m)
        if exact_clique_number(line_graph_square(G))[0] != max_chain_subgraph_bruteforce(G)[0]:
            bad.append(G.edges)
    return not bad, (
        f"{len(sizes)} C6-free bipartite graphs, m in [{min(sizes)},{max(sizes)}], "
        f"{len(bad)} mismatches {_first(bad, 1)}"
    )


def criterion_11():
    rng = SplitMix64(1111)
    bad = []
    sizes = []
    while len(sizes) < 100:
        G = random_chordal_bipartite(rng.between(8, 14), rng, p=0.3 + 0.5 * rng.random())
        if not 6 <= G.m <= 36:
            continue
        sizes.append(G.m)
        H = line_graph_square(G)
        if exact_chromatic_number(H)[0] != exact_clique_number(H)[0]:
            bad.append(G.edges)
    return not bad, (
        f"{len(sizes)} chordal bipartite graphs, m in [{min(sizes)},{max(sizes)}], "
        f"{len(bad)} with chi != omega"
    )


def _run(*args, stdin=None):
    proc = subprocess.run(
        [sys.executable, "-m", "strongedge", *args],
        capture_output=True, text=True, input=stdin,
    )
    return proc.returncode, proc.stdout, proc.stderr


def criterion_12():
    problems = []
    pipelines = [
        ("decomposition", "tree-cograph", ["sci"], ["im"]),
        ("permutation", "permutation", ["sci", "--certificate"], []),
        ("bipperm", "bipperm", ["sci", "--certificate"], []),
        ("chordal-bipartite", "chordal-bipartite", ["sci"], []),
        ("tree", "oracle", ["sci", "--certificate"], ["im"]),
    ]
    with tempfile.TemporaryDirectory() as tmp:
        def path(name, text=None):
            full = os.path.join(tmp, name)
            if text is not None:
                with open(full, "w") as fh:
                    fh.write(text)
            return full

        for kind, cls, sci_args, im_args in pipelines:
            code, out, err = _run("gen", kind, "--n", "6", "--seed", "3")
            if code:
                problems.append(f"gen {kind} exit {code}: {err.strip()}")
                continue
            inst = path(f"{kind}.in", out)
            runs = [[sci_args[0], "--class", cls, "--input", inst, *sci_args[1:]]]
            if im_args:
                runs.append(["im", "--class", cls, "--input", inst])
            for argv in runs:
                code, out, err = _run(*argv)
                if code:
                    problems.append(f"{' '.join(argv[:3])} exit {code}: {err.strip()}")
                    continue
                doc = json.loads(out)
                if "coloring" in doc or "matching" in doc:
                    cert = path("cert.json", out)
                    code, out, err = _run("verify", "--input", inst, "--certificate", cert)
                    if code or not json.loads(out)["valid"]:
                        problems.append(f"verify after {argv[0]} {cls}: exit {code} {out.strip()}")
        if _run("gen", "chordal-bipartite", "--n", "10", "--seed", "2")[0]:
            problems.append("gen chordal-bipartite n=10")

        # documented failure codes
        p4 = path("p4.graph", "p edge 4 3\ne 1 2\ne 2 3\ne 3 4\n")
        bad_cert = path("bad.json", json.dumps({"coloring": [[1, 2, 0], [2, 3, 1], [3, 4, 0]]}))
        absent = path("absent.json", json.dumps({"matching": [[1, 3]]}))
        expected = [
            (["sci", "--class", "oracle", "--input", path("junk", "p edge 2 1\ne 1 9\n")], 1),
            (["sci", "--class", "tree-cograph", "--input", path("cyc", "(tree 3 (1 2) (1 3) (2 3))")], 1),
            (["sci", "--class", "bipperm", "--input", path("tri.perm", "3\n3 2 1\n")], 2),
            (["sci", "--class", "chordal-bipartite", "--input", path("c6", "p edge 6 6\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 6\ne 1 6\n")], 2),
            (["verify", "--input", p4, "--certificate", bad_cert], 3),
            (["verify", "--input", p4, "--certificate", absent], 1),
            (["gen", "bipperm", "--n", "0"], 1),
        ]
        for argv, want in expected:
            code = _run(*argv)[0]
            if code != want:
                problems.append(f"{' '.join(argv[:3])}: exit {code}, expected {want}")
    return not problems, f"{len(pipelines)} pipelines, {len(expected)} error cases; {'; '.join(problems) or 'all as documented'}"


CRITERIA = [
    (1, "tree formula d(x)+d(y)-1", criterion_1),
    (2, "co-tree formula C(n,2)-(n-1)", criterion_2),
    (3, "tree-cograph sci recursion", criterion_3),
    (4, "tree-cograph induced matching recursion", criterion_4),
    (5, "hole and gem freeness of small squares", criterion_5),
    (6, "trapezoid model fidelity", criterion_6),
    (7, "greedy trapezoid coloring optimality", criterion_7),
    (8, "bipartite permutation sci", criterion_8),
    (9, "eight-vertex chordal bipartite regression", criterion_9),
    (10, "chain subgraph correspondence", criterion_10),
    (11, "perfection of L(G)^2 for chordal bipartite", criterion_11),
    (12, "CLI end to end", criterion_12),
]


def _check(number, name, fn):
    start = time.perf_counter()
    ok, detail = fn()
    RESULTS[number] = (name, ok, f"{detail.strip()} [{time.perf_counter() - start:.1f}s]")
    return ok, detail


GEM_NOTE = (
    "L(T)^2 is not gem-free for every tree: for the path P6, L(P6)^2 is the square "
    "of P5, which is itself a gem. Chordality holds; see test_structure.py."
)
KNOWN_FALSE = {5: GEM_NOTE}


def _params():
    for number, name, fn in CRITERIA:
        marks = [pytest.mark.xfail(strict=True, reason=KNOWN_FALSE[number])] if number in KNOWN_FALSE else []
        yield pytest.param(number, name, fn, id=f"criterion_{number:02d}", marks=marks)


@pytest.mark.parametrize("number,name,fn", list(_params()))
def test_criterion(number, name, fn):
    ok, detail = _check(number, name, fn)
    assert ok, detail


def summary_lines():
    for number in sorted(RESULTS):
        name, ok, detail = RESULTS[number]
        yield f"{'PASS' if ok else 'FAIL'} {number:2d} {name}: {detail}"


if __name__ == "__main__":
    for number, name, fn in CRITERIA:
        ok, detail = _check(number, name, fn)
        print(f"{'PASS' if ok else 'FAIL'} {number:2d} {name}: {RESULTS[number][2]}", flush=True)
