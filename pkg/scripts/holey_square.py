"""The eight-vertex chordal bipartite graph whose L(G)^2 is not chordal.

    python scripts/holey_square.py
"""
from strongedge.chordal_bipartite import (
    HOLEY_SQUARE,
    chordal_bipartite_clique,
    is_chain_graph,
    is_chordal_bipartite,
    max_chain_subgraph_bruteforce,
    sci_chordal_bipartite,
)
from strongedge.exact import is_chordal
from strongedge.oracle import line_graph_square, strong_chromatic_index_oracle


def edge_names(G, ids):
    return [f"{u + 1}-{v + 1}" for u, v in (G.edges[e] for e in ids)]


def main():
    G = HOLEY_SQUARE
    print("edges:", " ".join(f"{u}-{v}" for u, v in G.external_edges()))
    print("chordal bipartite:", bool(is_chordal_bipartite(G)))
    verdict = is_chordal(line_graph_square(G))
    print("L(G)^2 chordal:", bool(verdict), "hole:", edge_names(G, verdict.witness))
    print("strong chromatic index:", sci_chordal_bipartite(G))
    print("maximum clique of L(G)^2:", edge_names(G, chordal_bipartite_clique(G)))
    k, coloring = strong_chromatic_index_oracle(G)
    print("oracle:", k, {c: edge_names(G, ids) for c, ids in sorted(coloring.classes().items())})
    size, edges = max_chain_subgraph_bruteforce(G)
    print("largest chain subgraph:", size, edge_names(G, edges))
    print("G itself a chain graph:", bool(is_chain_graph(G)))


if __name__ == "__main__":
    main()
