#!/usr/bin/env python3
# A complete run of the red-hot-potato bijection on a 5-node pair.
#
# The driver starts from a pair in S0 (a tree rooted at 0 and a
# three-forest rooted at 0, 1, 2, all edges black), includes it into S1
# with phi0, and then alternates the edge-moving involution phi1 with a
# recoloring involution (phi0 on S1-shapes, phi2 on S2-shapes) until the
# pair is an all-black, acyclic, non-forbidden pair of two-forests --
# an element of S3.  Red edges mark the cycles being juggled in between;
# the pair of trailing root sets tells you which shape each slot is in.

from redhotpotato import (ColoredFunctionalGraph, GraphPair, red_hot_potato,
                          red_hot_potato_inverse)


def show(graph):
    edges = ", ".join(f"{i}>{j}{'r' if c == 'red' else ''}" for i, j, c in graph.edges())
    roots = ",".join(map(str, sorted(graph.roots())))
    return f"[{edges:<28}] roots {{{roots}}}"


slot1 = ColoredFunctionalGraph.from_edges(4, [(4, 3), (3, 0), (2, 1), (1, 4)])
slot2 = ColoredFunctionalGraph.from_edges(4, [(4, 2), (3, 4)])
start = GraphPair(slot1, slot2)

final, trace = red_hot_potato(start)
for step in trace.steps:
    name = step.involution or "start"
    print(f"{name:>6} [{step.tag}]  {show(step.pair.slot1)}   {show(step.pair.slot2)}")

print()
print(f"{trace.iterations} involution applications; "
      f"the edge multiset never changed: {start.weight_monomial() == final.weight_monomial()}")

back, _ = red_hot_potato_inverse(final)
print(f"running the chain backward from the result recovers the start: {back == start}")
