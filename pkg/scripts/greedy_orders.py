"""Exhaustive comparison of first-fit and best-fit trapezoid coloring.

    python scripts/greedy_orders.py --max-n 8

For every permutation up to ``max_n`` both rules are compared with the
clique number of L(G)^2 (a maximum antichain of trapezoids).  Prints the
failure counts per n and the first failing permutation for each rule.
"""
from __future__ import annotations

import argparse
import itertools
from dataclasses import dataclass

from strongedge.permutation import Permutation, greedy_strong_coloring, max_trapezoid_clique


@dataclass
class Config:
    max_n: int = 8


def run(cfg: Config):
    first_bad = {"first": None, "best": None}
    for n in range(1, cfg.max_n + 1):
        fails = {"first": 0, "best": 0}
        for perm in itertools.permutations(range(1, n + 1)):
            p = Permutation(perm)
            omega = len(max_trapezoid_clique(p))
            for rule in fails:
                if greedy_strong_coloring(p, rule).k != omega:
                    fails[rule] += 1
                    first_bad[rule] = first_bad[rule] or (perm, greedy_strong_coloring(p, rule).k, omega)
        yield n, fails
    yield None, first_bad


def main():
    parser = argparse.ArgumentParser(description="first-fit vs best-fit trapezoid coloring")
    parser.add_argument("--max-n", type=int, default=Config.max_n)
    cfg = Config(parser.parse_args().max_n)
    print(f"{'n':>3} {'first-fit wrong':>16} {'best-fit wrong':>15}")
    for n, info in run(cfg):
        if n is None:
            for rule, hit in info.items():
                if hit:
                    perm, used, omega = hit
                    print(f"{rule}-fit first failure: {' '.join(map(str, perm))} uses {used}, clique number {omega}")
                else:
                    print(f"{rule}-fit: no failure")
        else:
            print(f"{n:>3} {info['first']:>16} {info['best']:>15}")


if __name__ == "__main__":
    main()
