"""Tree-cographs given by a binary decomposition tree.

Leaves are trees or complements of trees; internal nodes are joins or
disjoint unions.  The strong chromatic index and the maximum induced
matching are folded bottom-up over the decomposition tree without ever
realizing the graph, so both run in time linear in its size.

File format (whitespace-insensitive s-expressions, 1-based leaf vertices)::

    expr := (join expr expr) | (union expr expr) | leaf
    leaf := (tree N pair*) | (cotree N pair*)
    pair := (U V)
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Union as TypingUnion

from .errors import InputError, PreconditionError
from .graph import Graph, complement, disjoint_union, join


@dataclass(frozen=True)
class TreeLeaf:
    tree: Graph

    @property
    def n(self) -> int:
        return self.tree.n


@dataclass(frozen=True)
class CoTreeLeaf:
    """Realizes the complement of ``tree``."""

    tree: Graph

    @property
    def n(self) -> int:
        return self.tree.n


@dataclass(frozen=True)
class Join:
    left: "DecompTree"
    right: "DecompTree"


@dataclass(frozen=True)
class Union:
    left: "DecompTree"
    right: "DecompTree"


DecompTree = TypingUnion[TreeLeaf, CoTreeLeaf, Join, Union]


def check_tree(T: Graph) -> None:
    """Raise PreconditionError unless ``T`` is a tree (connected, m = n-1)."""
    if T.n == 0:
        raise PreconditionError("a tree needs at least one vertex")
    if T.m != T.n - 1 or not T.is_connected():
        raise PreconditionError(
            f"not a tree: n={T.n}, m={T.m}, {len(T.components())} component(s)"
        )


def fold(t: DecompTree, leaf: Callable, node: Callable):
    """Post-order fold without recursion; ``node(kind, left, right)``."""
    stack = [(t, False)]
    out = []
    while stack:
        cur, expanded = stack.pop()
        if isinstance(cur, (TreeLeaf, CoTreeLeaf)):
            out.append(leaf(cur))
        elif expanded:
            right = out.pop()
            left = out.pop()
            out.append(node(type(cur), left, right))
        else:
            stack.append((cur, True))
            stack.append((cur.right, False))
            stack.append((cur.left, False))
    return out[0]


def realize(t: DecompTree) -> Graph:
    """Build the graph; the left child always takes the lower vertex numbers."""

    def leaf(x):
        return x.tree if isinstance(x, TreeLeaf) else complement(x.tree)

    def node(kind, g1, g2):
        return join(g1, g2) if kind is Join else disjoint_union(g1, g2)

    return fold(t, leaf, node)


def vertex_count(t: DecompTree) -> int:
    return fold(t, lambda x: x.n, lambda kind, a, b: a + b)


# --- strong chromatic index --------------------------------------------------


def sci_tree(T: Graph) -> int:
    """Max over edges xy of d(x) + d(y) - 1; this is the clique number of L(T)^2."""
    check_tree(T)
    deg = T.degrees()
    return max((deg[x] + deg[y] - 1 for x, y in T.edges), default=0)


def sci_cotree(n: int) -> int:
    """Every pair of edges in the complement of a tree is within distance two,
    so all C(n,2) - (n-1) of them need distinct colors."""
    if n < 1:
        raise PreconditionError("n must be positive")
    return n * (n - 1) // 2 - (n - 1)


def sci_tree_cograph(t: DecompTree) -> int:
    def leaf(x):
        value = sci_tree(x.tree) if isinstance(x, TreeLeaf) else sci_cotree(x.n)
        return x.n, value

    def node(kind, a, b):
        (n1, v1), (n2, v2) = a, b
        if kind is Union:
            return n1 + n2, max(v1, v2)
        # cross edges X are pairwise close and close to every edge on both sides
        return n1 + n2, n1 * n2 + v1 + v2

    return fold(t, leaf, node)[1]


# --- maximum induced matching ------------------------------------------------


def im_tree(T: Graph) -> tuple[int, list[int]]:
    """Maximum induced matching of a tree by a rooted dynamic program.

    Per vertex ``v`` (rooted at 0):

    * ``free[v]``  -- best in the subtree with ``v`` unmatched;
    * ``up[v]``    -- ``v`` matched to its parent, so all children unmatched;
    * ``down[v]``  -- ``v`` matched to one child ``c``, which is in state ``up``,
      every other child unmatched.

    A child of an unmatched vertex may be unmatched or matched downward; it
    cannot be matched upward.  Returns ``(size, EdgeIds)``.
    """
    check_tree(T)
    n = T.n
    parent = [-1] * n
    order = [0]
    seen = [False] * n
    seen[0] = True
    for v in order:
        for w in T.neighbors(v):
            if not seen[w]:
                seen[w] = True
                parent[w] = v
                order.append(w)
    children = [[] for _ in range(n)]
    for v in order[1:]:
        children[parent[v]].append(v)

    NEG = -1
    free = [0] * n
    up = [0] * n
    down = [NEG] * n
    pick = [-1] * n
    for v in reversed(order):
        kids = children[v]
        base = sum(free[c] for c in kids)
        up[v] = base
        free[v] = sum(max(free[c], down[c]) for c in kids)
        for c in kids:
            cand = 1 + base - free[c] + up[c]
            if cand > down[v]:
                down[v], pick[v] = cand, c

    matched = []
    # (vertex, state) with state in {"free", "up", "down"}
    stack = [(0, "down" if down[0] > free[0] else "free")]
    while stack:
        v, state = stack.pop()
        if state == "down":
            c = pick[v]
            matched.append(T.edge_id(v, c))
            stack.append((c, "up"))
            stack.extend((k, "free") for k in children[v] if k != c)
        elif state == "up":
            stack.extend((k, "free") for k in children[v])
        else:
            stack.extend((k, "down" if down[k] > free[k] else "free") for k in children[v])
    size = max(free[0], down[0])
    assert len(matched) == size
    return size, sorted(matched)


def im_tree_cograph(t: DecompTree) -> tuple[int, list[tuple[int, int]]]:
    """Maximum induced matching size and its edges as 0-based vertex pairs of
    ``realize(t)``."""

    def leaf(x):
        T = x.tree
        if isinstance(x, TreeLeaf):
            size, ids = im_tree(T)
            return x.n, [T.edges[e] for e in ids]
        if x.n < 3:
            return x.n, []
        # a leaf l and any vertex other than l and its neighbour are non-adjacent in T
        l = next(v for v in range(T.n) if T.degree(v) == 1)
        p = T.neighbors(l)[0]
        w = next(v for v in range(T.n) if v not in (l, p))
        return x.n, [(min(l, w), max(l, w))]

    def node(kind, a, b):
        (n1, m1), (n2, m2) = a, b
        shifted = [(u + n1, v + n1) for u, v in m2]
        if kind is Union:
            return n1 + n2, m1 + shifted
        best = max((m1, shifted, [(0, n1)]), key=len)
        return n1 + n2, best

    edges = fold(t, leaf, node)[1]
    return len(edges), edges


# --- text format -------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\()|(\))|([A-Za-z]+)|(-?\d+)|(\S))")


def _tokenize(text: str):
    pos = 0
    tokens = []
    while True:
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        if m.group(5):
            raise InputError(f"unexpected character {m.group(5)!r} at offset {m.start(5)}")
        start = m.start(m.lastindex)
        tokens.append((m.group(m.lastindex), start, m.lastindex))
        pos = m.end()
    if text[pos:].strip():
        raise InputError(f"unexpected input at offset {pos}")
    return tokens


def parse_decomposition(text: str) -> DecompTree:
    """Parse and validate a decomposition tree; leaf edge lists must be trees."""
    tokens = _tokenize(text)
    i = 0

    def peek():
        return tokens[i] if i < len(tokens) else (None, len(text), 0)

    def expect(kind: int, what: str):
        nonlocal i
        tok = peek()
        if tok[2] != kind:
            found = "end of input" if tok[0] is None else repr(tok[0])
            raise InputError(f"expected {what} at offset {tok[1]}, found {found}")
        i += 1
        return tok

    def integer():
        return int(expect(4, "an integer")[0])

    def leaf(open_tok, word, at):
        if word not in ("tree", "cotree"):
            raise InputError(f"unknown node keyword {word!r} at offset {at}")
        n = integer()
        if n < 1:
            raise InputError(f"leaf at offset {open_tok[1]} needs a positive vertex count")
        pairs = []
        while peek()[2] == 1:
            expect(1, "'('")
            pairs.append((integer(), integer()))
            expect(2, "')' closing an edge")
        expect(2, "')' closing a leaf")
        return (TreeLeaf if word == "tree" else CoTreeLeaf)(_leaf_tree(n, pairs, open_tok[1]))

    # explicit stack of open binary nodes, so nesting depth is not bounded by recursion
    pending = []
    while True:
        open_tok = expect(1, "'('")
        word, at, _ = expect(3, "a node keyword")
        if word in ("join", "union"):
            pending.append((Join if word == "join" else Union, []))
            continue
        node = leaf(open_tok, word, at)
        while pending and len(pending[-1][1]) == 1:
            kind, kids = pending.pop()
            expect(2, "')' closing a binary node")
            node = kind(kids[0], node)
        if not pending:
            tree = node
            break
        pending[-1][1].append(node)

    if i != len(tokens):
        raise InputError(f"trailing input at offset {tokens[i][1]}")
    return tree


def _leaf_tree(n: int, pairs, offset: int) -> Graph:
    # union-find: report the first pair that closes a cycle
    root = list(range(n + 1))

    def find(x):
        while root[x] != x:
            root[x] = root[root[x]]
            x = root[x]
        return x

    for u, v in pairs:
        if not (1 <= u <= n and 1 <= v <= n) or u == v:
            raise InputError(f"leaf at offset {offset}: bad edge ({u} {v}) for n={n}")
        ru, rv = find(u), find(v)
        if ru == rv:
            raise InputError(f"leaf at offset {offset} is not a tree: edge ({u} {v}) closes a cycle")
        root[ru] = rv
    if len(pairs) != n - 1:
        lonely = next(v for v in range(2, n + 1) if find(v) != find(1))
        raise InputError(
            f"leaf at offset {offset} is not a tree: disconnected, vertex {lonely} unreachable from 1"
        )
    return Graph(n, [(u - 1, v - 1) for u, v in pairs])


def format_decomposition(t: DecompTree) -> str:
    def leaf(x):
        word = "tree" if isinstance(x, TreeLeaf) else "cotree"
        edges = "".join(f" ({u + 1} {v + 1})" for u, v in x.tree.edges)
        return f"({word} {x.n}{edges})"

    def node(kind, a, b):
        return f"({'join' if kind is Join else 'union'} {a} {b})"

    return fold(t, leaf, node)
