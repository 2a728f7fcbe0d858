"""Chordal bipartite graphs, chain graphs, and chain subgraphs.

For a chordal bipartite graph ``L(G)^2`` is perfect, so the strong
chromatic index is the clique number of ``L(G)^2``.  We compute that number
exactly by branch and bound; this is exponential in the worst case and
meant for graphs with a few dozen edges.
"""
from __future__ import annotations

from .errors import PreconditionError
from .exact import exact_clique_number
from .graph import Graph, Verdict, bipartition, bits, from_edge_list
from .oracle import line_graph_square
from .patterns import contains_induced_pattern, has_induced_cycle_longer_than

# chordal bipartite, yet L(G)^2 has a hole
HOLEY_SQUARE = from_edge_list(8, [(1, 3), (3, 4), (3, 5), (2, 4), (4, 6), (5, 6), (5, 7), (6, 8)])


def is_chordal_bipartite(G: Graph) -> Verdict:
    """Bipartite with no induced cycle on more than four vertices.

    Witness: the side labels, or an odd cycle, or a long chordless cycle.
    """
    sides = bipartition(G)
    if not sides:
        return sides
    hole = has_induced_cycle_longer_than(G, 4)
    if hole is not None:
        return Verdict(False, hole)
    return sides


def _require_chordal_bipartite(G: Graph) -> None:
    verdict = is_chordal_bipartite(G)
    if not verdict:
        cycle = [v + 1 for v in verdict.witness]
        kind = "odd cycle" if len(cycle) % 2 else "induced cycle"
        raise PreconditionError(f"graph is not chordal bipartite; {kind} {cycle}", cycle)


def sci_chordal_bipartite(G: Graph) -> int:
    _require_chordal_bipartite(G)
    return exact_clique_number(line_graph_square(G))[0]


def chordal_bipartite_clique(G: Graph) -> tuple[int, ...]:
    """A maximum clique of ``L(G)^2`` as EdgeIds: the lower-bound certificate."""
    _require_chordal_bipartite(G)
    return exact_clique_number(line_graph_square(G))[1]


def is_chain_graph(G: Graph) -> Verdict:
    """Chain graph test.

    On success the witness lists one side's vertices with nested
    neighbourhoods, smallest first.  Otherwise it is an induced K3, C5 or
    2K2, given as a vertex tuple.
    """
    sides = bipartition(G)
    if not sides:
        for name in ("K3", "C5", "2K2"):
            found = contains_induced_pattern(G, name)
            if found is not None:
                return Verdict(False, found)
        raise AssertionError("non-bipartite graph without K3, C5 or 2K2")
    one = [v for v in range(G.n) if sides.witness[v] == 0]
    one.sort(key=lambda v: (G.degree(v), v))
    for a, b in zip(one, one[1:]):
        extra = G.adj[a] & ~G.adj[b]
        if extra:
            # b has more neighbours than a, so both differences are non-empty
            x = next(bits(extra))
            y = next(bits(G.adj[b] & ~G.adj[a]))
            return Verdict(False, (a, x, b, y))
    return Verdict(True, tuple(one))


def _is_chain_subset(G: Graph, chosen: list[int], side) -> bool:
    nbr: dict[int, int] = {}
    for e in chosen:
        u, v = G.edges[e]
        a, b = (u, v) if side[u] == 0 else (v, u)
        nbr[a] = nbr.get(a, 0) | 1 << b
    sets = sorted(nbr.values(), key=int.bit_count)
    return all(s & ~t == 0 for s, t in zip(sets, sets[1:]))


def max_chain_subgraph_bruteforce(G: Graph) -> tuple[int, tuple[int, ...]]:
    """Largest edge set of ``G`` whose own graph is a chain graph.

    Such a set is always a clique of ``L(G)^2`` (two disjoint edges of a
    chain graph are joined by one of its edges), so the search enumerates
    cliques of ``L(G)^2`` with a size bound and tests each for the chain
    property.  Being a chain is not inherited by subsets, so it is only
    tested, never used to prune.
    """
    sides = bipartition(G)
    if not sides:
        cycle = [v + 1 for v in sides.witness]
        raise PreconditionError(f"graph is not bipartite; odd cycle {cycle}", cycle)
    side = sides.witness
    H = line_graph_square(G)
    best: list[int] = []
    current: list[int] = []

    def grow(cand: int) -> None:
        nonlocal best
        if len(current) > len(best) and _is_chain_subset(G, current, side):
            best = list(current)
        while cand:
            if len(current) + cand.bit_count() <= len(best):
                return
            e = (cand & -cand).bit_length() - 1
            cand &= ~(1 << e)
            current.append(e)
            grow(cand & H.adj[e])
            current.pop()

    grow((1 << G.m) - 1)
    return len(best), tuple(sorted(best))
