"""Seeded instance generators for tests and experiments.

Randomness comes from SplitMix64 (Steele, Lea and Flood), written out here
so that a seed produces the same instance on every platform and Python
version.  Integers in a range are drawn by rejection, never by a biased
modulo.
"""
from __future__ import annotations

from .cograph import CoTreeLeaf, DecompTree, Join, TreeLeaf, Union
from .errors import GeneratorExhausted, PreconditionError
from .graph import Graph, bipartition
from .permutation import Permutation

MASK64 = (1 << 64) - 1
ATTEMPTS = 1000


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)``."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - (1 << 64) % bound
        while True:
            x = self.next_u64()
            if x < limit:
                return x % bound

    def between(self, lo: int, hi: int) -> int:
        """Uniform integer in ``[lo, hi]``."""
        return lo + self.below(hi - lo + 1)

    def random(self) -> float:
        return (self.next_u64() >> 11) / float(1 << 53)

    def choice(self, seq):
        return seq[self.below(len(seq))]

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]


def _rng(seed) -> SplitMix64:
    return seed if isinstance(seed, SplitMix64) else SplitMix64(seed)


def random_tree(n: int, seed) -> Graph:
    """Uniform labeled tree on ``n`` vertices by decoding a random Pruefer sequence."""
    if n < 1:
        raise PreconditionError("a tree needs at least one vertex")
    rng = _rng(seed)
    if n == 1:
        return Graph(1)
    code = [rng.below(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in code:
        degree[v] += 1
    edges = []
    for v in code:
        leaf = degree.index(1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = (i for i in range(n) if degree[i] == 1)
    edges.append((u, w))
    return Graph(n, ((min(a, b), max(a, b)) for a, b in edges))


def random_decomposition(leaves: int, max_leaf_n: int, seed) -> DecompTree:
    if leaves < 1 or max_leaf_n < 1:
        raise PreconditionError("need at least one leaf of at least one vertex")
    rng = _rng(seed)

    def build(k: int) -> DecompTree:
        if k == 1:
            T = random_tree(rng.between(1, max_leaf_n), rng)
            return TreeLeaf(T) if rng.below(2) else CoTreeLeaf(T)
        left = rng.between(1, k - 1)
        kind = Join if rng.below(2) else Union
        return kind(build(left), build(k - left))

    return build(leaves)


def random_321_avoiding(n: int, rng: SplitMix64) -> Permutation:
    """Grow the bottom line left to right.

    A permutation has no decreasing triple exactly when every entry is
    either larger than all before it or the smallest value still unused, so
    each step picks uniformly among those options.
    """
    remaining = list(range(1, n + 1))
    out = []
    top = 0
    for _ in range(n):
        options = [remaining[0]] + [v for v in remaining[1:] if v > top]
        v = rng.choice(options)
        remaining.remove(v)
        out.append(v)
        top = max(top, v)
    return Permutation(tuple(out))


def _diagram_connected(p: Permutation) -> bool:
    # a prefix holding exactly 1..k splits the diagram in two
    high = 0
    for i, v in enumerate(p.bottom[:-1]):
        high = max(high, v)
        if high == i + 1:
            return False
    return True


def random_bipartite_permutation(n: int, seed) -> Permutation:
    """A permutation whose graph is bipartite and connected.

    Candidates avoid the pattern 321 by construction (a permutation graph
    is bipartite exactly then); disconnected ones are rejected.
    """
    if n < 1:
        raise PreconditionError("n must be positive")
    rng = _rng(seed)
    for _ in range(ATTEMPTS):
        p = random_321_avoiding(n, rng)
        if _diagram_connected(p):
            return p
    raise GeneratorExhausted(f"no connected bipartite permutation of size {n} after {ATTEMPTS} tries")


def random_bipartite(n: int, p: float, seed) -> Graph:
    """Each vertex picks a side by coin flip; cross pairs are edges with probability ``p``."""
    rng = _rng(seed)
    side = [rng.below(2) for _ in range(n)]
    return Graph(
        n,
        (
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if side[u] != side[v] and rng.random() < p
        ),
    )


def random_chordal_bipartite(n: int, seed, p: float = 0.4, attempts: int = 10 * ATTEMPTS) -> Graph:
    """Rejection sample :func:`random_bipartite` until it is chordal bipartite."""
    from .chordal_bipartite import is_chordal_bipartite

    if not 1 <= n <= 14:
        raise PreconditionError("n must lie in 1..14")
    rng = _rng(seed)
    for _ in range(attempts):
        G = random_bipartite(n, p, rng)
        if is_chordal_bipartite(G):
            return G
    raise GeneratorExhausted(f"no chordal bipartite graph on {n} vertices after {attempts} tries")


def random_c6_free_bipartite(n: int, seed, p: float = 0.4, max_edges: int = 18,
                             attempts: int = 10 * ATTEMPTS) -> Graph:
    from .patterns import contains_induced_pattern

    rng = _rng(seed)
    for _ in range(attempts):
        G = random_bipartite(n, p, rng)
        if G.m <= max_edges and contains_induced_pattern(G, "C6") is None:
            assert bipartition(G)
            return G
    raise GeneratorExhausted(f"no C6-free bipartite graph on {n} vertices after {attempts} tries")
