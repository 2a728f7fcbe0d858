"""Undirected simple graphs with bitset adjacency.

Vertices are ``0..n-1`` internally; every file format and every public
constructor taking "external" pairs is 1-based.  ``adj[v]`` is an int whose
bit ``u`` is set iff ``uv`` is an edge.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Any, Iterable, Sequence

from .errors import InputError

A, B = 0, 1


@dataclass(frozen=True)
class Verdict:
    """Outcome of a recognition test.

    Truthiness follows ``ok``.  ``witness`` is a certificate for whichever
    answer was given: an ordering or labeling when ``ok``, an obstruction
    (cycle, pattern embedding) otherwise.
    """

    ok: bool
    witness: Any = None

    def __bool__(self) -> bool:
        return self.ok


def bits(mask: int):
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable undirected simple graph.

    ``edges`` is the canonical sorted tuple of pairs ``(u, v)`` with ``u < v``;
    an edge's position in it is its EdgeId.
    """

    __slots__ = ("n", "edges", "adj", "_index")

    def __init__(self, n: int, pairs: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise InputError(f"negative vertex count {n}")
        adj = [0] * n
        canon = []
        for pair in pairs:
            u, v = pair
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u + 1},{v + 1}) out of range 1..{n}")
            if u == v:
                raise InputError(f"self-loop at ({u + 1},{v + 1})")
            if adj[u] >> v & 1:
                raise InputError(f"duplicate edge ({u + 1},{v + 1})")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            canon.append((u, v) if u < v else (v, u))
        canon.sort()
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(canon)
        self.adj: tuple[int, ...] = tuple(adj)
        self._index = None

    @classmethod
    def from_adjacency(cls, adj: Sequence[int]) -> "Graph":
        n = len(adj)
        return cls(n, ((u, v) for u in range(n) for v in bits(adj[u] >> (u + 1) << (u + 1))))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edge_id(self, u: int, v: int) -> int:
        if self._index is None:
            self._index = {e: i for i, e in enumerate(self.edges)}
        key = (u, v) if u < v else (v, u)
        try:
            return self._index[key]
        except KeyError:
            raise InputError(f"({u + 1},{v + 1}) is not an edge") from None

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Subgraph induced on ``vertices``, relabeled ``0..k-1`` in the given order."""
        pos = {v: i for i, v in enumerate(vertices)}
        return Graph(
            len(vertices),
            ((pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos),
        )

    def components(self) -> list[list[int]]:
        seen = 0
        comps = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = 1 << s
            frontier = comp
            while frontier:
                nxt = 0
                for v in bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(list(bits(comp)))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def external_edges(self) -> list[list[int]]:
        return [[u + 1, v + 1] for u, v in self.edges]

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def from_edge_list(n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from 1-based vertex pairs."""
    shifted = []
    for pair in pairs:
        u, v = pair
        if not (1 <= u <= n and 1 <= v <= n):
            raise InputError(f"edge ({u},{v}) out of range 1..{n}")
        shifted.append((u - 1, v - 1))
    return Graph(n, shifted)


def empty(n: int) -> Graph:
    return Graph(n)


def complete(n: int) -> Graph:
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def path(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise InputError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def star(leaves: int) -> Graph:
    return Graph(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def complement(G: Graph) -> Graph:
    full = (1 << G.n) - 1
    return Graph.from_adjacency([full & ~G.adj[v] & ~(1 << v) for v in range(G.n)])


def disjoint_union(G1: Graph, G2: Graph) -> Graph:
    """Vertices of ``G2`` are shifted up by ``G1.n``."""
    k = G1.n
    return Graph(k + G2.n, list(G1.edges) + [(u + k, v + k) for u, v in G2.edges])


def join(G1: Graph, G2: Graph) -> Graph:
    """Disjoint union plus every edge between the two sides."""
    k = G1.n
    cross = [(u, k + v) for u in range(k) for v in range(G2.n)]
    return Graph(k + G2.n, list(G1.edges) + [(u + k, v + k) for u, v in G2.edges] + cross)


def bipartition(G: Graph) -> Verdict:
    """Two-color ``G`` by BFS.

    On success the witness is a tuple of side labels (``A``/``B``); otherwise
    it is a shortest odd cycle as a vertex sequence.  Each component's
    smallest vertex goes to side ``A``.
    """
    side = [-1] * G.n
    for s in range(G.n):
        if side[s] != -1:
            continue
        if _bfs_conflict(G, s, side) is not None:
            best = None
            for r in _component(G, s):
                found = _bfs_conflict(G, r, [-1] * G.n)
                if found is not None and (best is None or len(found) < len(best)):
                    best = found
            return Verdict(False, best)
    return Verdict(True, tuple(side))


def _component(G: Graph, s: int) -> list[int]:
    return next(c for c in G.components() if s in c)


def _bfs_conflict(G: Graph, s: int, side: list[int]):
    """Label ``s``'s component in ``side``; return an odd cycle on conflict.

    Levels are processed in order, so the first conflict found is at the
    lowest possible level and the cycle is shortest among those through
    ``s``.
    """
    parent = {s: -1}
    side[s] = A
    queue = deque([s])
    while queue:
        u = queue.popleft()
        for w in bits(G.adj[u]):
            if side[w] == -1:
                side[w] = 1 - side[u]
                parent[w] = u
                queue.append(w)
            elif side[w] == side[u]:
                return _odd_cycle(parent, u, w)
    return None


def _odd_cycle(parent: dict[int, int], u: int, w: int) -> tuple[int, ...]:
    # u and w are adjacent at equal BFS parity; splice their tree paths at the LCA
    up = [u]
    while parent[up[-1]] != -1:
        up.append(parent[up[-1]])
    on_up = {v: i for i, v in enumerate(up)}
    down = [w]
    while down[-1] not in on_up:
        down.append(parent[down[-1]])
    lca = down[-1]
    return tuple(up[: on_up[lca] + 1] + down[-2::-1])


# --- DIMACS-like graph files ------------------------------------------------


def parse_dimacs(text: str) -> Graph:
    n = declared = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise InputError(f"line {lineno}: second problem line")
            if len(parts) != 4 or parts[1] != "edge":
                raise InputError(f"line {lineno}: expected 'p edge <n> <m>'")
            n, declared = _ints(parts[2:], lineno)
            if n < 0 or declared < 0:
                raise InputError(f"line {lineno}: negative size")
        elif parts[0] == "e":
            if n is None:
                raise InputError(f"line {lineno}: edge before problem line")
            if len(parts) != 3:
                raise InputError(f"line {lineno}: expected 'e <u> <v>'")
            pairs.append(tuple(_ints(parts[1:], lineno)))
        else:
            raise InputError(f"line {lineno}: unknown line type {parts[0]!r}")
    if n is None:
        raise InputError("missing 'p edge' line")
    if len(pairs) != declared:
        raise InputError(f"header declares {declared} edges, file has {len(pairs)}")
    return from_edge_list(n, pairs)


def _ints(tokens, lineno):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise InputError(f"line {lineno}: expected integers, got {' '.join(tokens)!r}") from None


def format_dimacs(G: Graph, comment: str | None = None) -> str:
    lines = [f"c {comment}"] if comment else []
    lines.append(f"p edge {G.n} {G.m}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in G.edges)
    return "\n".join(lines) + "\n"
