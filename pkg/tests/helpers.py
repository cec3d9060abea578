"""Shared test helpers: compact edge notation and independent oracles.

Edge strings look like "4>3 3>0 2>1r": whitespace-separated i>j items,
an "r" suffix marking a red edge.  The brute-force forest oracle here
deliberately uses a different generation and acyclicity strategy than
the library (it ranges over *all* out-edge maps including the option of
no edge at every node, and tests acyclicity by bounded walking) so that
count comparisons are a genuine cross-check.
"""

import itertools

from redhotpotato import BLACK, RED, ColoredFunctionalGraph, GraphPair, TaggedPair


def graph(n, edges_str):
    edges = []
    for item in edges_str.split():
        red = item.endswith("r")
        if red:
            item = item[:-1]
        i, j = item.split(">")
        edges.append((int(i), int(j), RED if red else BLACK))
    return ColoredFunctionalGraph.from_edges(n, edges)


def pair(n, s1, s2):
    return GraphPair(graph(n, s1), graph(n, s2))


def tp(n, s1, s2, tag):
    return TaggedPair(pair(n, s1, s2), tag)


def edge_set(g):
    """Edges as a set of (i, j, color) for order-free comparison."""
    return set(g.edges())


def _walk_terminates(out_map, start, n):
    v = start
    for _ in range(n + 2):
        if out_map[v] is None:
            return True
        v = out_map[v]
    return False


def brute_force_forest_count(n, roots, meta=None):
    """Count forests rooted exactly at ``roots`` by ranging over every
    out-edge map on nodes 0..n (each node: no edge, or any target)."""
    roots = frozenset(roots)
    options = [[None] + [t for t in range(n + 1) if t != v] for v in range(n + 1)]
    count = 0
    for choice in itertools.product(*options):
        out_map = dict(enumerate(choice))
        if frozenset(v for v, t in out_map.items() if t is None) != roots:
            continue
        if not all(_walk_terminates(out_map, v, n) for v in range(n + 1)):
            continue
        if meta is not None and not _meta_reaches(out_map, meta[0], meta[1], n):
            continue
        count += 1
    return count


def _meta_reaches(out_map, i, j, n):
    v = i
    for _ in range(n + 2):
        if v == j:
            return True
        if out_map[v] is None:
            return False
        v = out_map[v]
    return False
