#!/usr/bin/env python3
"""Regenerates graph6_corpus.txt: 100 pinned random graphs encoded with
networkx, used as the reference oracle for the graph6 codec tests.

Line format:  n;u-v,u-v,...;g6
"""
import random

import networkx as nx

SIZES = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 14, 16, 18, 20,
         24, 28, 32, 40, 48, 56, 61, 62, 63, 64, 70, 80, 90, 100]
DENSITIES = [0.0, 0.1, 0.25, 0.5, 0.75, 0.9]


def main():
    rng = random.Random(20240611)
    lines = []
    i = 0
    while len(lines) < 100:
        n = SIZES[i % len(SIZES)]
        p = DENSITIES[(i // len(SIZES)) % len(DENSITIES)]
        i += 1
        g = nx.gnp_random_graph(n, p, seed=rng.randrange(2**31))
        edges = sorted((min(u, v), max(u, v)) for u, v in g.edges())
        g6 = nx.to_graph6_bytes(g, header=False).decode().strip()
        edge_str = ",".join(f"{u}-{v}" for u, v in edges)
        lines.append(f"{n};{edge_str};{g6}")
    with open("graph6_corpus.txt", "w") as f:
        f.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
