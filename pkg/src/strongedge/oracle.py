"""Line graphs, their squares, and the brute-force ground truth built on them.

A strong edge coloring of ``G`` is a proper vertex coloring of ``L(G)^2``
and an induced matching is an independent set there, so the exact solvers
in :mod:`strongedge.exact` applied to ``line_graph_square(G)`` give the
true strong chromatic index and induced matching number.  Every fast
algorithm in the package is tested against these.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InputError
from .exact import exact_chromatic_number, exact_max_independent_set
from .graph import Graph


class EdgeGraph(Graph):
    """A graph whose vertices are the EdgeIds of ``base``."""

    __slots__ = ("base",)

    def __init__(self, base: Graph, pairs: Iterable[tuple[int, int]]):
        super().__init__(base.m, pairs)
        self.base = base


def line_graph(G: Graph) -> EdgeGraph:
    E = G.edges
    return EdgeGraph(
        G,
        (
            (i, j)
            for i in range(len(E))
            for j in range(i + 1, len(E))
            if set(E[i]) & set(E[j])
        ),
    )


def line_graph_square(G: Graph) -> EdgeGraph:
    """``L(G)^2``: two edges are adjacent when they meet or an edge of G joins them."""
    closed = [a | 1 << v for v, a in enumerate(G.adj)]
    E = G.edges
    reach = [closed[a] | closed[b] for a, b in E]
    ends = [1 << a | 1 << b for a, b in E]
    return EdgeGraph(
        G,
        (
            (i, j)
            for i in range(len(E))
            for j in range(i + 1, len(E))
            if reach[i] & ends[j]
        ),
    )


@dataclass(frozen=True)
class EdgeColoring:
    """``colors[e]`` is the color of EdgeId ``e``."""

    colors: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(set(self.colors))

    def classes(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for e, c in enumerate(self.colors):
            out.setdefault(c, []).append(e)
        return out


@dataclass(frozen=True)
class Violation:
    """Two edges that may not share a color class / matching."""

    first: int
    second: int
    color: int | None = None

    def describe(self, G: Graph) -> dict:
        out = {"edges": [[u + 1, v + 1] for u, v in (G.edges[self.first], G.edges[self.second])]}
        if self.color is not None:
            out["color"] = self.color
        return out


def _conflict(G: Graph, e: int, f: int) -> bool:
    a, b = G.edges[e]
    c, d = G.edges[f]
    near = G.adj[a] | G.adj[b] | 1 << a | 1 << b
    return bool(near & (1 << c | 1 << d))


def verify_induced_matching(G: Graph, edges: Iterable[int]) -> Violation | None:
    """``None`` if the EdgeIds form an induced matching, else an offending pair."""
    chosen = sorted(set(edges))
    for e in chosen:
        if not 0 <= e < G.m:
            raise InputError(f"unknown EdgeId {e}")
    for i, e in enumerate(chosen):
        for f in chosen[i + 1:]:
            if _conflict(G, e, f):
                return Violation(e, f)
    return None


def verify_strong_edge_coloring(G: Graph, coloring: EdgeColoring | Sequence[int]) -> Violation | None:
    """``None`` if every color class is an induced matching."""
    colors = coloring.colors if isinstance(coloring, EdgeColoring) else tuple(coloring)
    if len(colors) != G.m or any(c is None for c in colors):
        raise InputError("coloring does not cover every edge")
    for c, members in EdgeColoring(colors).classes().items():
        bad = verify_induced_matching(G, members)
        if bad is not None:
            return Violation(bad.first, bad.second, c)
    return None


def strong_chromatic_index_oracle(G: Graph) -> tuple[int, EdgeColoring]:
    k, coloring = exact_chromatic_number(line_graph_square(G))
    result = EdgeColoring(tuple(coloring))
    assert verify_strong_edge_coloring(G, result) is None
    return k, result


def max_induced_matching_oracle(G: Graph) -> tuple[int, tuple[int, ...]]:
    size, chosen = exact_max_independent_set(line_graph_square(G))
    assert verify_induced_matching(G, chosen) is None
    return size, chosen


# --- certificate documents ---------------------------------------------------


def coloring_document(G: Graph, coloring: EdgeColoring, **extra) -> dict:
    doc = dict(extra)
    doc["value"] = coloring.k
    doc["coloring"] = [[u + 1, v + 1, c] for (u, v), c in zip(G.edges, coloring.colors)]
    return doc


def matching_document(G: Graph, edges: Iterable[int], **extra) -> dict:
    chosen = sorted(edges)
    doc = dict(extra)
    doc["value"] = len(chosen)
    doc["matching"] = [[G.edges[e][0] + 1, G.edges[e][1] + 1] for e in chosen]
    return doc


def read_certificate(G: Graph, doc: dict) -> tuple[str, object]:
    """Decode a certificate document against ``G``.

    Returns ``("coloring", EdgeColoring)`` or ``("matching", edge ids)``.
    Unknown edges, uncolored edges and malformed entries raise InputError.
    """
    if not isinstance(doc, dict):
        raise InputError("certificate must be a JSON object")
    try:
        if "coloring" in doc:
            colors: list[int | None] = [None] * G.m
            for entry in doc["coloring"]:
                u, v, c = (int(x) for x in entry)
                if c < 0:
                    raise InputError(f"negative color {c}")
                e = _external_edge(G, u, v)
                if colors[e] is not None and colors[e] != c:
                    raise InputError(f"edge ({u},{v}) colored twice")
                colors[e] = c
            if any(c is None for c in colors):
                missing = G.edges[colors.index(None)]
                raise InputError(f"edge ({missing[0] + 1},{missing[1] + 1}) is uncolored")
            return "coloring", EdgeColoring(tuple(colors))
        if "matching" in doc:
            chosen = []
            for entry in doc["matching"]:
                u, v = (int(x) for x in entry)
                chosen.append(_external_edge(G, u, v))
            return "matching", tuple(chosen)
    except (TypeError, ValueError) as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"malformed certificate entry: {exc}") from None
    raise InputError("certificate has neither 'coloring' nor 'matching'")


def _external_edge(G: Graph, u: int, v: int) -> int:
    if not (1 <= u <= G.n and 1 <= v <= G.n):
        raise InputError(f"certificate vertex out of range in ({u},{v})")
    return G.edge_id(u - 1, v - 1)


def load_certificate(text: str) -> dict:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"certificate is not JSON: {exc}") from None
