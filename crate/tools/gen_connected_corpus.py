#!/usr/bin/env python3
"""Emit every connected simple graph on 1..=N vertices (up to isomorphism) in graph6.

Graphs on n vertices are produced by attaching a new vertex to every connected
graph on n-1 vertices with every non-empty neighbour set.  Every connected
graph has a non-cut vertex, so this reaches all of them; duplicates are removed
by bucketing on a Weisfeiler-Lehman hash and checking isomorphism in-bucket.
"""
import sys
from itertools import combinations

import networkx as nx


def extend(graphs, n):
    buckets = {}
    out = []
    for g in graphs:
        for size in range(1, n):
            for nbrs in combinations(range(n - 1), size):
                h = g.copy()
                h.add_node(n - 1)
                h.add_edges_from((n - 1, v) for v in nbrs)
                key = (tuple(sorted(d for _, d in h.degree())),
                       nx.weisfeiler_lehman_graph_hash(h, iterations=3))
                bucket = buckets.setdefault(key, [])
                if any(nx.is_isomorphic(h, o) for o in bucket):
                    continue
                bucket.append(h)
                out.append(h)
    return out


def main():
    max_n = int(sys.argv[1]) if len(sys.argv) > 1 else 8
    level = [nx.empty_graph(1)]
    for n in range(1, max_n + 1):
        if n > 1:
            level = extend(level, n)
        print(f"n={n}: {len(level)}", file=sys.stderr)
        for g in level:
            sys.stdout.write(nx.to_graph6_bytes(g, header=False).decode())


if __name__ == "__main__":
    main()
