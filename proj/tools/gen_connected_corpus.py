#!/usr/bin/env python3
"""Write every connected graph on 2..N vertices (up to isomorphism) as graph6.

Graphs on n vertices are grown from the connected graphs on n-1 vertices by
attaching a new vertex to every non-empty neighbour subset; every connected
graph has a non-cut vertex, so this reaches all of them. Duplicates are removed
with a Weisfeiler-Lehman hash bucket followed by an exact isomorphism test.

Usage: gen_connected_corpus.py [max_n] > connected.g6
"""
import itertools
import sys

import networkx as nx


def grow(graphs, n):
    buckets = {}
    out = []
    for g in graphs:
        for r in range(1, n):
            for nbrs in itertools.combinations(range(n - 1), r):
                h = g.copy()
                h.add_node(n - 1)
                h.add_edges_from((n - 1, u) for u in nbrs)
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
    level = [nx.complete_graph(2)]
    for n in range(2, max_n + 1):
        if n > 2:
            level = grow(level, n)
        for g in level:
            sys.stdout.write(nx.to_graph6_bytes(g, header=False).decode())
        sys.stderr.write(f"n={n}: {len(level)}\n")


if __name__ == "__main__":
    main()
