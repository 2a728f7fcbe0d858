import pytest

from strongedge.chordal_bipartite import (
    HOLEY_SQUARE,
    chordal_bipartite_clique,
    is_chain_graph,
    is_chordal_bipartite,
    max_chain_subgraph_bruteforce,
    sci_chordal_bipartite,
)
from strongedge.errors import PreconditionError
from strongedge.exact import is_chordal
from strongedge.graph import Graph, complete, cycle, join, empty, star
from strongedge.oracle import line_graph_square, strong_chromatic_index_oracle
from strongedge.patterns import contains_induced_pattern
from strongedge.testkit import SplitMix64, random_bipartite

TWO_K2 = Graph(4, [(0, 1), (2, 3)])


def test_recognition_examples():
    assert is_chordal_bipartite(cycle(4))
    v = is_chordal_bipartite(cycle(6))
    assert not v and sorted(v.witness) == list(range(6))
    assert is_chordal_bipartite(HOLEY_SQUARE)
    assert not is_chordal_bipartite(complete(3))


def test_sci_examples():
    assert sci_chordal_bipartite(cycle(4)) == 4
    assert sci_chordal_bipartite(star(3)) == 3
    assert sci_chordal_bipartite(HOLEY_SQUARE) == strong_chromatic_index_oracle(HOLEY_SQUARE)[0] == 6
    assert len(chordal_bipartite_clique(HOLEY_SQUARE)) == 6


def test_sci_precondition_carries_witness():
    with pytest.raises(PreconditionError) as info:
        sci_chordal_bipartite(cycle(6))
    assert sorted(info.value.witness) == [1, 2, 3, 4, 5, 6]
    with pytest.raises(PreconditionError, match="odd cycle"):
        sci_chordal_bipartite(cycle(5))


def test_holey_square_has_a_hole():
    v = is_chordal(line_graph_square(HOLEY_SQUARE))
    assert not v and len(v.witness) >= 4


def test_chain_examples():
    assert is_chain_graph(star(3))
    v = is_chain_graph(TWO_K2)
    assert not v and sorted(v.witness) == [0, 1, 2, 3]
    assert is_chain_graph(cycle(4))


def test_chain_witnesses():
    v = is_chain_graph(complete(3))
    assert not v and len(v.witness) == 3
    v = is_chain_graph(cycle(5))
    assert not v and len(v.witness) == 5
    v = is_chain_graph(cycle(7))
    assert not v and Graph(4, [(0, 1), (2, 3)]) == cycle(7).induced(v.witness)


def test_chain_ordering_is_nested():
    G = join(empty(3), empty(4))
    v = is_chain_graph(G)
    nbrs = [G.adj[x] for x in v.witness]
    assert all(a & ~b == 0 for a, b in zip(nbrs, nbrs[1:]))


def test_chain_consistency_with_patterns():
    rng = SplitMix64(9)
    for _ in range(80):
        G = random_bipartite(rng.between(2, 9), 0.5, rng)
        forbidden = any(contains_induced_pattern(G, p) for p in ("K3", "2K2", "C5"))
        assert bool(is_chain_graph(G)) != forbidden


def test_max_chain_examples():
    assert max_chain_subgraph_bruteforce(TWO_K2)[0] == 1
    assert max_chain_subgraph_bruteforce(cycle(4))[0] == 4
    size, edges = max_chain_subgraph_bruteforce(cycle(6))
    assert size == 3
    sub = Graph(6, [cycle(6).edges[e] for e in edges])
    assert is_chain_graph(sub)
    with pytest.raises(PreconditionError):
        max_chain_subgraph_bruteforce(complete(3))


def test_chain_is_not_closed_under_subsets():
    # P4 is a chain graph, dropping its middle edge leaves 2K2
    assert is_chain_graph(Graph(4, [(0, 1), (1, 2), (2, 3)]))
    assert not is_chain_graph(TWO_K2)
