"""Exhaustive induced-subgraph search for small fixed patterns.

Intended for desk-scale graphs (tens of vertices).  Both searches are exact;
worst-case running time is exponential.
"""
from __future__ import annotations

import re

from .errors import InputError
from .graph import Graph, bits, cycle, path, star

_CATALOGUE = {
    "K3": lambda: cycle(3),
    "2K2": lambda: Graph(4, [(0, 1), (2, 3)]),
    "claw": lambda: star(3),
    # P4 0-1-2-3 plus a hub adjacent to all of it
    "gem": lambda: Graph(5, [(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)]),
    "P4": lambda: path(4),
}


def pattern_graph(name: str) -> Graph:
    """Look up a pattern by name: K3, 2K2, claw, gem, P4, or Ck for k >= 3."""
    if name in _CATALOGUE:
        return _CATALOGUE[name]()
    match = re.fullmatch(r"C(\d+)", name)
    if match and int(match.group(1)) >= 3:
        return cycle(int(match.group(1)))
    raise InputError(f"unknown pattern {name!r}")


def _search_order(P: Graph) -> list[int]:
    # BFS per component so most pattern vertices have a mapped neighbor already
    order, seen = [], set()
    for s in sorted(range(P.n), key=lambda v: -P.degree(v)):
        if s in seen:
            continue
        seen.add(s)
        queue = [s]
        while queue:
            v = queue.pop(0)
            order.append(v)
            for w in P.neighbors(v):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    return order


def find_induced(G: Graph, P: Graph) -> tuple[int, ...] | None:
    """Embed ``P`` as an induced subgraph of ``G``.

    Returns the image of pattern vertex ``i`` at position ``i``, or ``None``.
    """
    if P.n > G.n:
        return None
    if P.n == 0:
        return ()
    order = _search_order(P)
    need = [P.degree(p) for p in range(P.n)]
    gdeg = G.degrees()
    image = [-1] * P.n
    full = (1 << G.n) - 1

    def extend(depth: int, used: int) -> bool:
        if depth == P.n:
            return True
        p = order[depth]
        cand = full & ~used
        for q in order[:depth]:
            if P.has_edge(p, q):
                cand &= G.adj[image[q]]
            else:
                cand &= ~G.adj[image[q]]
        for v in bits(cand):
            if gdeg[v] < need[p]:
                continue
            image[p] = v
            if extend(depth + 1, used | 1 << v):
                return True
        image[p] = -1
        return False

    if extend(0, 0):
        return tuple(image)
    return None


def contains_induced_pattern(G: Graph, pattern: str) -> tuple[int, ...] | None:
    """Witness vertex tuple for an induced copy of the named pattern, else ``None``."""
    P = pattern_graph(pattern)
    witness = find_induced(G, P)
    if witness is not None:
        assert G.induced(witness) == P, "pattern embedding is not induced"
    return witness


def has_induced_cycle_longer_than(G: Graph, k: int) -> tuple[int, ...] | None:
    """Find a chordless cycle with more than ``k`` vertices, or ``None``.

    Grows induced paths from each start vertex ``s`` through vertices larger
    than ``s`` only, so every cycle is found from its minimum vertex.
    """
    if k < 3:
        raise ValueError("k must be at least 3")
    adj = G.adj

    def grow(route: list[int], blocked: int, s: int, above: int):
        # blocked: closed neighbourhoods of route[1:-1]; a new vertex may not touch them
        last = route[-1]
        for v in bits(adj[last] & above & ~blocked):
            if adj[s] >> v & 1:
                if len(route) >= 2 and len(route) + 1 > k:
                    return route + [v]
                continue
            found = grow(route + [v], blocked | adj[last] | 1 << last, s, above)
            if found:
                return found
        return None

    for s in range(G.n):
        above = ~((1 << (s + 1)) - 1)
        for first in bits(adj[s] & above):
            found = grow([s, first], 0, s, above)
            if found:
                return tuple(found)
    return None
