"""Search trees by size for a gem inside L(T)^2, and confirm chordality.

    python scripts/tree_square_gems.py --max-n 10

Uses networkx only to enumerate non-isomorphic trees.
"""
from __future__ import annotations

import argparse
from dataclasses import dataclass

import networkx as nx

from strongedge.exact import is_chordal
from strongedge.graph import Graph
from strongedge.oracle import line_graph_square
from strongedge.patterns import contains_induced_pattern


@dataclass
class Config:
    max_n: int = 10


def main():
    parser = argparse.ArgumentParser(description="gems in squares of tree line graphs")
    parser.add_argument("--max-n", type=int, default=Config.max_n)
    cfg = Config(parser.parse_args().max_n)
    print(f"{'n':>3} {'trees':>6} {'with gem':>9} {'not chordal':>12}")
    smallest = None
    for n in range(2, cfg.max_n + 1):
        trees = gems = non_chordal = 0
        for t in nx.nonisomorphic_trees(n):
            T = Graph(n, sorted(tuple(sorted(e)) for e in t.edges))
            H = line_graph_square(T)
            trees += 1
            non_chordal += not is_chordal(H)
            found = contains_induced_pattern(H, "gem")
            if found is not None:
                gems += 1
                if smallest is None:
                    smallest = (T, [T.edges[e] for e in found])
        print(f"{n:>3} {trees:>6} {gems:>9} {non_chordal:>12}")
    if smallest:
        T, gem = smallest
        print(f"smallest: tree {T.external_edges()}, gem on edges {[(u + 1, v + 1) for u, v in gem]}")


if __name__ == "__main__":
    main()
