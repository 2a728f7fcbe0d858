"""Exact solvers over bitset graphs.

All three are branch and bound and exponential in the worst case; they are
meant for graphs with at most a few dozen vertices, which is the scale the
oracle runs at.
"""
from __future__ import annotations

from .graph import Graph, Verdict, bits, complement
from .patterns import has_induced_cycle_longer_than


def _degree_order(G: Graph) -> list[int]:
    return sorted(range(G.n), key=lambda v: (-G.degree(v), v))


def exact_clique_number(G: Graph) -> tuple[int, tuple[int, ...]]:
    """Maximum clique size and a witness clique (sorted vertex tuple).

    Tomita-style search: candidates are greedily colored and the color
    count bounds how much any extension can add.
    """
    if G.n == 0:
        return 0, ()
    order = _degree_order(G)
    pos = {v: i for i, v in enumerate(order)}
    # relabel so low bits are high-degree vertices
    adj = [0] * G.n
    for i, v in enumerate(order):
        for w in bits(G.adj[v]):
            adj[i] |= 1 << pos[w]

    best: list[int] = [order[0]]
    best_size = 1
    current: list[int] = []

    def color_sort(cand: int) -> tuple[list[int], list[int]]:
        verts, bounds = [], []
        uncolored = cand
        k = 0
        while uncolored:
            k += 1
            q = uncolored
            while q:
                v = (q & -q).bit_length() - 1
                q &= ~adj[v] & ~(1 << v)
                uncolored &= ~(1 << v)
                verts.append(v)
                bounds.append(k)
        return verts, bounds

    def expand(cand: int) -> None:
        nonlocal best, best_size
        verts, bounds = color_sort(cand)
        for i in range(len(verts) - 1, -1, -1):
            if len(current) + bounds[i] <= best_size:
                return
            v = verts[i]
            current.append(v)
            nxt = cand & adj[v]
            if nxt:
                expand(nxt)
            elif len(current) > best_size:
                best_size = len(current)
                best = [order[u] for u in current]
            current.pop()
            cand &= ~(1 << v)

    expand((1 << G.n) - 1)
    witness = tuple(sorted(best))
    assert all(G.has_edge(a, b) for i, a in enumerate(witness) for b in witness[i + 1:])
    return best_size, witness


def exact_max_independent_set(G: Graph) -> tuple[int, tuple[int, ...]]:
    """Maximum independent set via a maximum clique of the complement."""
    size, witness = exact_clique_number(complement(G))
    assert not any(G.has_edge(a, b) for i, a in enumerate(witness) for b in witness[i + 1:])
    return size, witness


def greedy_coloring(G: Graph) -> list[int]:
    """DSATUR greedy coloring; colors are 0-based."""
    color = [-1] * G.n
    forbidden = [0] * G.n
    deg = G.degrees()
    for _ in range(G.n):
        v = max(
            (u for u in range(G.n) if color[u] < 0),
            key=lambda u: (forbidden[u].bit_count(), deg[u], -u),
        )
        c = (~forbidden[v] & (forbidden[v] + 1)).bit_length() - 1
        color[v] = c
        for w in bits(G.adj[v]):
            forbidden[w] |= 1 << c
    return color


def _k_coloring(G: Graph, k: int, clique: tuple[int, ...]) -> list[int] | None:
    """Backtracking search for a proper k-coloring, DSATUR branching.

    The clique is precolored ``0..len(clique)-1``, which removes most color
    symmetry; beyond that only one fresh color is ever tried per branch.
    """
    n = G.n
    color = [-1] * n
    counts = [[0] * k for _ in range(n)]
    forbidden = [0] * n
    deg = G.degrees()

    def assign(v, c):
        color[v] = c
        for w in bits(G.adj[v]):
            counts[w][c] += 1
            forbidden[w] |= 1 << c

    def unassign(v, c):
        color[v] = -1
        for w in bits(G.adj[v]):
            counts[w][c] -= 1
            if not counts[w][c]:
                forbidden[w] &= ~(1 << c)

    for c, v in enumerate(clique):
        assign(v, c)
    full = (1 << k) - 1

    def search(remaining: int, used: int) -> bool:
        if remaining == 0:
            return True
        v, best_key = -1, None
        for u in range(n):
            if color[u] >= 0:
                continue
            sat = forbidden[u].bit_count()
            if sat >= k:
                return False
            key = (sat, deg[u])
            if best_key is None or key > best_key:
                v, best_key = u, key
        free = full & ~forbidden[v]
        for c in bits(free):
            if c > used:
                break
            assign(v, c)
            if search(remaining - 1, used + (c == used)):
                return True
            unassign(v, c)
        return False

    if search(n - len(clique), len(clique)):
        return color
    return None


def exact_chromatic_number(G: Graph) -> tuple[int, list[int]]:
    """Chromatic number and a proper coloring (list indexed by vertex).

    Tries ``k = omega, omega+1, ...`` below the DSATUR upper bound.  The
    empty graph on zero vertices needs 0 colors; any other edgeless graph 1.
    """
    if G.n == 0:
        return 0, []
    upper = greedy_coloring(G)
    ub = max(upper) + 1
    omega, clique = exact_clique_number(G)
    for k in range(omega, ub):
        coloring = _k_coloring(G, k, clique)
        if coloring is not None:
            assert is_proper_coloring(G, coloring)
            return k, coloring
    return ub, upper


def is_proper_coloring(G: Graph, color) -> bool:
    return all(color[u] != color[v] for u, v in G.edges)


def is_chordal(G: Graph) -> Verdict:
    """Chordality by repeated simplicial-vertex elimination.

    Witness: the perfect elimination ordering on success, otherwise a
    chordless cycle of length at least 4 inside the part that could not be
    eliminated.
    """
    alive = (1 << G.n) - 1
    peo = []
    while alive:
        for v in bits(alive):
            nb = G.adj[v] & alive
            if all((nb & ~(1 << u)) & ~G.adj[u] == 0 for u in bits(nb)):
                peo.append(v)
                alive &= ~(1 << v)
                break
        else:
            rest = list(bits(alive))
            hole = has_induced_cycle_longer_than(G.induced(rest), 3)
            assert hole is not None
            return Verdict(False, tuple(rest[i] for i in hole))
    return Verdict(True, tuple(peo))
