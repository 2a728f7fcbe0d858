"""Where the left-to-right clique sweep falls short, and where L(G)^2 has holes.

    python scripts/sweep_gap.py --max-n 9

Runs over every connected bipartite permutation graph up to ``max_n``.
For each n it reports how many instances there are, on how many the best
swept clique is below the clique number, and on how many L(G)^2 is not
chordal, followed by the smallest example of each.
"""
from __future__ import annotations

import argparse
import itertools
from dataclasses import dataclass

from strongedge.exact import is_chordal
from strongedge.graph import bipartition
from strongedge.oracle import line_graph_square
from strongedge.permutation import (
    Permutation,
    bp_clique_sweep,
    bp_strong_chromatic_index,
    graph_from_permutation,
)


@dataclass
class Config:
    max_n: int = 9


def main():
    parser = argparse.ArgumentParser(description="clique sweep shortfall and holes in L(G)^2")
    parser.add_argument("--max-n", type=int, default=Config.max_n)
    cfg = Config(parser.parse_args().max_n)
    first_short = first_hole = None
    print(f"{'n':>3} {'graphs':>7} {'sweep short':>12} {'L2 not chordal':>15}")
    for n in range(2, cfg.max_n + 1):
        total = short = holes = 0
        for perm in itertools.permutations(range(1, n + 1)):
            p = Permutation(perm)
            G = graph_from_permutation(p)
            if not (G.is_connected() and bipartition(G)):
                continue
            total += 1
            omega = bp_strong_chromatic_index(p)
            swept = max(len(e) for _, _, e in bp_clique_sweep(p))
            if swept < omega:
                short += 1
                first_short = first_short or (perm, swept, omega)
            verdict = is_chordal(line_graph_square(G))
            if not verdict:
                holes += 1
                if first_hole is None:
                    hole = [tuple(x + 1 for x in G.edges[e]) for e in verdict.witness]
                    first_hole = (perm, hole)
        print(f"{n:>3} {total:>7} {short:>12} {holes:>15}")
    if first_short:
        perm, swept, omega = first_short
        print(f"smallest shortfall: {' '.join(map(str, perm))}: sweep {swept}, clique number {omega}")
    if first_hole:
        perm, hole = first_hole
        print(f"smallest hole: {' '.join(map(str, perm))}: edges {hole}")


if __name__ == "__main__":
    main()
