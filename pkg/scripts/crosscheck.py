"""Cross-check every class-specific algorithm against the oracle on seeded batches.

    python scripts/crosscheck.py --count 300 --seed 7

Prints one row per class: instances, mismatches, mean edges, wall time.
"""
from __future__ import annotations

import argparse
import time
from dataclasses import dataclass, fields

from strongedge.chordal_bipartite import sci_chordal_bipartite
from strongedge.cograph import im_tree_cograph, realize, sci_tree_cograph
from strongedge.oracle import max_induced_matching_oracle, strong_chromatic_index_oracle
from strongedge.permutation import (
    Permutation,
    bp_strong_chromatic_index,
    graph_from_permutation,
    greedy_strong_coloring,
)
from strongedge.testkit import (
    SplitMix64,
    random_bipartite_permutation,
    random_chordal_bipartite,
    random_decomposition,
)


@dataclass
class Config:
    count: int = 200
    seed: int = 7
    max_edges: int = 36
    leaves: int = 5
    max_leaf_n: int = 4
    perm_n: int = 10
    bipperm_n: int = 12
    cb_n: int = 14


def tree_cograph_cases(cfg, rng):
    while True:
        t = random_decomposition(rng.between(1, cfg.leaves), cfg.max_leaf_n, rng)
        G = realize(t)
        if G.m <= cfg.max_edges:
            yield G, lambda t=t, G=G: (
                (sci_tree_cograph(t), strong_chromatic_index_oracle(G)[0]),
                (im_tree_cograph(t)[0], max_induced_matching_oracle(G)[0]),
            )


def permutation_cases(cfg, rng):
    while True:
        order = list(range(1, rng.between(1, cfg.perm_n) + 1))
        rng.shuffle(order)
        p = Permutation(tuple(order))
        G = graph_from_permutation(p)
        if G.m <= cfg.max_edges:
            yield G, lambda p=p, G=G: ((greedy_strong_coloring(p).k, strong_chromatic_index_oracle(G)[0]),)


def bipperm_cases(cfg, rng):
    while True:
        p = random_bipartite_permutation(rng.between(2, cfg.bipperm_n), rng)
        G = graph_from_permutation(p)
        if G.m <= cfg.max_edges:
            yield G, lambda p=p, G=G: ((bp_strong_chromatic_index(p), strong_chromatic_index_oracle(G)[0]),)


def chordal_bipartite_cases(cfg, rng):
    while True:
        G = random_chordal_bipartite(rng.between(2, cfg.cb_n), rng, p=0.3 + 0.5 * rng.random())
        if G.m <= cfg.max_edges:
            yield G, lambda G=G: ((sci_chordal_bipartite(G), strong_chromatic_index_oracle(G)[0]),)


def run(cfg: Config) -> list[tuple]:
    rows = []
    for name, source in [
        ("tree-cograph", tree_cograph_cases),
        ("permutation", permutation_cases),
        ("bipperm", bipperm_cases),
        ("chordal-bipartite", chordal_bipartite_cases),
    ]:
        rng = SplitMix64(cfg.seed)
        cases = source(cfg, rng)
        bad = edges = 0
        start = time.perf_counter()
        for _ in range(cfg.count):
            G, check = next(cases)
            edges += G.m
            bad += any(fast != truth for fast, truth in check())
        rows.append((name, cfg.count, bad, edges / cfg.count, time.perf_counter() - start))
    return rows


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for f in fields(Config):
        parser.add_argument(f"--{f.name.replace('_', '-')}", type=int, default=f.default)
    cfg = Config(**{k: v for k, v in vars(parser.parse_args()).items()})
    print(f"{'class':<18} {'count':>6} {'wrong':>6} {'mean m':>7} {'secs':>7}")
    for name, count, bad, mean_m, secs in run(cfg):
        print(f"{name:<18} {count:>6} {bad:>6} {mean_m:>7.1f} {secs:>7.2f}")


if __name__ == "__main__":
    main()
