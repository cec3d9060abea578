"""Colored functional digraphs and pairs of them.

A graph on nodes 0..n where every node has at most one out-edge and no
self-loops.  Edges are black or red.  Roots are exactly the nodes with
no out-edge; in an acyclic graph every node's out-path ends at a root,
so these graphs house rooted forests as well as cycle-bearing graphs.

A GraphPair holds two such graphs on the same node set.  Pairs are
classified into the signed sets S0..S3:

  S0  all-black acyclic pair, one slot with out-edges at every node
      1..n (a tree rooted at 0), the other at 3..n (a three-forest
      rooted at 0, 1, 2);
  S1  same out-degree shape, cycles colored red or black (each cycle
      uniformly), all other edges black;
  S2  out-edges of nodes 1 and 2 in different slots (so one slot has
      out-edges at {1,3..n}, the other at {2,3..n}); cycles colorable,
      and a forbidden meta-cycle, when present, counts as one colorable
      unit;
  S3  all-black acyclic S2-shape with no forbidden meta-cycle (a
      non-forbidden pair of two-forests rooted {0,2} and {0,1}).

The sign of an S1/S2 element is the parity of its red cycles, the
forbidden meta-cycle counting as a single cycle.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Tuple

BLACK = "black"
RED = "red"

S0 = "S0"
S1 = "S1"
S2 = "S2"
S3 = "S3"
INVALID = "Invalid"


class Cycle(NamedTuple):
    """A directed cycle: nodes in walk order from the smallest, plus the
    set of edge colors found on it."""
    nodes: Tuple[int, ...]
    colors: frozenset

    @property
    def is_red(self) -> bool:
        return self.colors == frozenset({RED})


@dataclass(frozen=True)
class ColoredFunctionalGraph:
    """Out-degree <= 1 digraph on nodes 0..n with black/red edges.

    ``out`` maps each node to its (target, color) out-edge, or None.
    Stored as a tuple indexed by node, which makes equality and hashing
    structural.
    """

    n: int
    out: tuple

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be >= 0")
        if len(self.out) != self.n + 1:
            raise ValueError("out-edge table must cover nodes 0..n")
        for i, e in enumerate(self.out):
            if e is None:
                continue
            j, color = e
            if j == i:
                raise ValueError(f"self-loop at node {i}")
            if not 0 <= j <= self.n:
                raise ValueError(f"edge target {j} outside nodes 0..{self.n}")
            if color not in (BLACK, RED):
                raise ValueError(f"unknown color {color!r}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable) -> "ColoredFunctionalGraph":
        """Edges as (i, j) or (i, j, color) tuples; duplicates rejected."""
        out = [None] * (n + 1)
        for e in edges:
            if len(e) == 2:
                i, j = e
                color = BLACK
            else:
                i, j, color = e
            if not 0 <= i <= n:
                raise ValueError(f"edge source {i} outside nodes 0..{n}")
            if out[i] is not None:
                raise ValueError(f"node {i} has two out-edges")
            out[i] = (j, color)
        return cls(n, tuple(out))

    @classmethod
    def empty(cls, n: int) -> "ColoredFunctionalGraph":
        return cls(n, (None,) * (n + 1))

    def out_edge(self, i: int) -> Optional[tuple]:
        return self.out[i]

    def edges(self) -> Tuple[tuple, ...]:
        """All edges as (i, j, color), ordered by source node."""
        return tuple((i, e[0], e[1]) for i, e in enumerate(self.out) if e is not None)

    def roots(self) -> frozenset:
        return frozenset(i for i in range(self.n + 1) if self.out[i] is None)

    def cycles(self) -> Tuple[Cycle, ...]:
        """All directed cycles (node-disjoint in a functional graph),
        ordered by smallest member node."""
        state = [0] * (self.n + 1)  # 0 new, 1 on current walk, 2 done
        found = []
        for start in range(self.n + 1):
            if state[start] != 0:
                continue
            path = []
            v = start
            while state[v] == 0:
                state[v] = 1
                path.append(v)
                e = self.out[v]
                if e is None:
                    break
                v = e[0]
            else:
                if state[v] == 1:
                    cyc = path[path.index(v):]
                    low = cyc.index(min(cyc))
                    nodes = tuple(cyc[low:] + cyc[:low])
                    colors = frozenset(self.out[u][1] for u in nodes)
                    found.append(Cycle(nodes, colors))
            for u in path:
                state[u] = 2
        return tuple(sorted(found, key=lambda c: c.nodes[0]))

    def is_acyclic(self) -> bool:
        return not self.cycles()

    def all_black(self) -> bool:
        return all(e is None or e[1] == BLACK for e in self.out)

    def meta_edge_exists(self, i: int, j: int) -> bool:
        """True iff following out-edges from i reaches j before any dead
        end or cycle.  i == j counts via the empty path."""
        seen = set()
        v = i
        while True:
            if v == j:
                return True
            if v in seen:
                return False
            seen.add(v)
            e = self.out[v]
            if e is None:
                return False
            v = e[0]

    def meta_path(self, i: int, j: int) -> Optional[Tuple[tuple, ...]]:
        """The edges along the meta-edge i -> j, or None if absent."""
        if not self.meta_edge_exists(i, j):
            return None
        path = []
        v = i
        while v != j:
            t, color = self.out[v]
            path.append((v, t))
            v = t
        return tuple(path)

    def recolor_edges(self, edges: Iterable[tuple], color: str) -> "ColoredFunctionalGraph":
        """New graph with the given (i, j) edges set to ``color``."""
        wanted = set(edges)
        out = list(self.out)
        for i, j in wanted:
            e = out[i]
            if e is None or e[0] != j:
                raise KeyError(f"edge ({i},{j}) not present")
            out[i] = (j, color)
        return ColoredFunctionalGraph(self.n, tuple(out))


@dataclass(frozen=True)
class PairClass:
    """Total classification of a GraphPair: S0/S1/S2/S3 or Invalid plus
    a diagnostic explaining why."""
    kind: str
    reason: Optional[str] = None

    @property
    def is_valid(self) -> bool:
        return self.kind != INVALID


@dataclass(frozen=True)
class GraphPair:
    """Two colored functional graphs on the same node set.

    Node 0 has no out-edge in either slot and nodes 1 and 2 have at most
    one out-edge between the two slots (enforced here); everything finer
    is the business of classify().  The A-graph is the slot holding node
    1's out-edge, whenever node 1 has one.
    """

    slot1: ColoredFunctionalGraph
    slot2: ColoredFunctionalGraph

    def __post_init__(self):
        if self.slot1.n != self.slot2.n:
            raise ValueError("slots must share the node set")
        if self.slot1.out[0] is not None or self.slot2.out[0] is not None:
            raise ValueError("node 0 may not have an out-edge")
        for v in (1, 2):
            if v > self.n:
                continue
            if sum(1 for g in (self.slot1, self.slot2) if g.out[v] is not None) > 1:
                raise ValueError(f"node {v} has out-edges in both slots")

    @property
    def n(self) -> int:
        return self.slot1.n

    @property
    def slots(self) -> Tuple[ColoredFunctionalGraph, ColoredFunctionalGraph]:
        return (self.slot1, self.slot2)

    def slot(self, idx: int) -> ColoredFunctionalGraph:
        return self.slots[idx]

    def a_slot(self) -> Optional[int]:
        """Index of the slot with node 1's out-edge (the A-graph), if any."""
        if self.n >= 1:
            if self.slot1.out[1] is not None:
                return 0
            if self.slot2.out[1] is not None:
                return 1
        return None

    def with_slot(self, idx: int, graph: ColoredFunctionalGraph) -> "GraphPair":
        if idx == 0:
            return GraphPair(graph, self.slot2)
        return GraphPair(self.slot1, graph)

    def all_black(self) -> bool:
        return self.slot1.all_black() and self.slot2.all_black()

    def is_acyclic(self) -> bool:
        return self.slot1.is_acyclic() and self.slot2.is_acyclic()

    # -- classification ------------------------------------------------------

    def _shape(self) -> Optional[str]:
        """S1 for out-edges of 1 and 2 in the same slot, S2 for different
        slots, None if the out-degree skeleton is wrong."""
        if self.n < 2:
            return None
        for v in range(3, self.n + 1):
            if self.slot1.out[v] is None or self.slot2.out[v] is None:
                return None
        s1 = self._holder(1)
        s2 = self._holder(2)
        if s1 is None or s2 is None:
            return None
        return S1 if s1 == s2 else S2

    def _holder(self, v: int) -> Optional[int]:
        if self.slot1.out[v] is not None:
            return 0
        if self.slot2.out[v] is not None:
            return 1
        return None

    def forbidden_meta_cycle(self) -> Optional[Tuple[Tuple[tuple, ...], Tuple[tuple, ...]]]:
        """Both meta-paths of the forbidden meta-cycle, or None.

        Defined on pairs whose nodes 1 and 2 have out-edges in different
        slots: the slot holding node 1's out-edge plays the roots-{0,2}
        role and must have a meta-edge 1 -> 2, the other the roots-{0,1}
        role with a meta-edge 2 -> 1.  Returned as
        (path within slot1, path within slot2), each a tuple of (i, j)
        edges.
        """
        h1, h2 = self._holder(1), self._holder(2)
        if h1 is None or h2 is None or h1 == h2:
            raise ValueError("forbidden meta-cycle needs out-edges of 1 and 2 in different slots")
        slot_02 = self.slot(h1)   # holds node 1's out-edge
        slot_01 = self.slot(h2)   # holds node 2's out-edge
        p12 = slot_02.meta_path(1, 2)
        p21 = slot_01.meta_path(2, 1)
        if p12 is None or p21 is None:
            return None
        by_slot = {h1: p12, h2: p21}
        return (by_slot[0], by_slot[1])

    def _fmc_edges(self) -> Optional[frozenset]:
        """Edges of the forbidden meta-cycle as (slot, i, j), or None."""
        fmc = self.forbidden_meta_cycle()
        if fmc is None:
            return None
        return frozenset({(0, i, j) for i, j in fmc[0]} | {(1, i, j) for i, j in fmc[1]})

    def classify(self) -> PairClass:
        if self.n < 2:
            return PairClass(INVALID, "pairs need at least nodes 0, 1, 2")
        shape = self._shape()
        if shape is None:
            return PairClass(INVALID, "out-degree shape: node 0 rootless, nodes 1 and 2 "
                                      "one out-edge each, nodes 3..n one per slot")
        if shape == S1:
            ok, why = self._coloring_valid(fmc_edges=None)
            if not ok:
                return PairClass(INVALID, why)
            if self.all_black() and self.is_acyclic():
                return PairClass(S0)
            return PairClass(S1)
        fmc_edges = self._fmc_edges()
        ok, why = self._coloring_valid(fmc_edges)
        if not ok:
            return PairClass(INVALID, why)
        if self.all_black() and self.is_acyclic() and fmc_edges is None:
            return PairClass(S3)
        return PairClass(S2)

    def _coloring_valid(self, fmc_edges: Optional[frozenset]):
        """Red edges only on cycles (or the forbidden meta-cycle), every
        cycle uniformly colored, the meta-cycle monochromatic as a unit."""
        cycle_edges = set()
        for idx, g in enumerate(self.slots):
            for cyc in g.cycles():
                if len(cyc.colors) != 1:
                    return False, f"cycle {cyc.nodes} in slot {idx + 1} mixes colors"
                for v in cyc.nodes:
                    cycle_edges.add((idx, v, g.out[v][0]))
        if fmc_edges is not None:
            fmc_colors = set()
            for idx, i, j in fmc_edges:
                fmc_colors.add(self.slot(idx).out[i][1])
            if len(fmc_colors) != 1:
                return False, "forbidden meta-cycle mixes colors"
        allowed = cycle_edges | (fmc_edges or frozenset())
        for idx, g in enumerate(self.slots):
            for i, j, color in g.edges():
                if color == RED and (idx, i, j) not in allowed:
                    return False, f"red edge {i}->{j} in slot {idx + 1} is not on a cycle"
        return True, None

    def red_cycle_count(self) -> int:
        """Red ordinary cycles plus one if the forbidden meta-cycle is red."""
        count = sum(1 for g in self.slots for cyc in g.cycles() if cyc.is_red)
        if self._shape() == S2:
            fmc = self._fmc_edges()
            if fmc:
                idx, i, j = next(iter(fmc))
                if self.slot(idx).out[i][1] == RED:
                    count += 1
        return count

    def sign(self) -> int:
        cls = self.classify()
        if not cls.is_valid:
            raise ValueError(f"sign of invalid pair: {cls.reason}")
        return -1 if self.red_cycle_count() % 2 else 1

    def weight_monomial(self) -> Counter:
        """Multiset of directed edges across both slots, colors ignored."""
        monomial = Counter()
        for g in self.slots:
            for i, j, _ in g.edges():
                monomial[(i, j)] += 1
        return monomial

    def canonical(self) -> "GraphPair":
        """Slots reordered with the A-graph (node 1's out-edge) first.

        For S2/S3 shapes this puts the roots-{0,2} forest first, which is
        how matched pairs are conventionally listed; used for slot-order-
        insensitive set comparisons.
        """
        if self.a_slot() == 1:
            return GraphPair(self.slot2, self.slot1)
        return self


# --- JSON and DOT -----------------------------------------------------------
#
# Pair JSON: {"n": 4, "slots": [{"edges": [{"from": 4, "to": 3,
#             "color": "black"}, ...]}, {...}]}

def graph_to_json(g: ColoredFunctionalGraph) -> dict:
    return {"edges": [{"from": i, "to": j, "color": c} for i, j, c in g.edges()]}


def graph_from_json(n: int, data: dict) -> ColoredFunctionalGraph:
    edges = [(e["from"], e["to"], e.get("color", BLACK)) for e in data.get("edges", [])]
    return ColoredFunctionalGraph.from_edges(n, edges)


def pair_to_json(p: GraphPair) -> dict:
    return {"n": p.n, "slots": [graph_to_json(p.slot1), graph_to_json(p.slot2)]}


def pair_from_json(data: dict) -> GraphPair:
    if not isinstance(data, dict) or "n" not in data or "slots" not in data:
        raise ValueError('pair JSON needs "n" and "slots" fields')
    slots = data["slots"]
    if len(slots) != 2:
        raise ValueError("pair JSON needs exactly two slots")
    n = data["n"]
    return GraphPair(graph_from_json(n, slots[0]), graph_from_json(n, slots[1]))


def graph_to_dot(g: ColoredFunctionalGraph, name: str = "G") -> str:
    """DOT rendering: red edges dashed, roots starred."""
    lines = [f"digraph {name} {{"]
    roots = g.roots()
    for v in range(g.n + 1):
        label = f"{v}*" if v in roots else str(v)
        lines.append(f'  n{v} [label="{label}"];')
    for i, j, color in g.edges():
        style = " [color=red, style=dashed]" if color == RED else ""
        lines.append(f"  n{i} -> n{j}{style};")
    lines.append("}")
    return "\n".join(lines)


def pair_to_dot(p: GraphPair, name: str = "pair") -> str:
    """Both slots as clusters in one DOT digraph."""
    lines = [f"digraph {name} {{"]
    for idx, g in enumerate(p.slots):
        lines.append(f"  subgraph cluster_{idx} {{")
        lines.append(f'    label="slot{idx + 1}";')
        roots = g.roots()
        for v in range(g.n + 1):
            label = f"{v}*" if v in roots else str(v)
            lines.append(f'    s{idx}_{v} [label="{label}"];')
        for i, j, color in g.edges():
            style = " [color=red, style=dashed]" if color == RED else ""
            lines.append(f"    s{idx}_{i} -> s{idx}_{j}{style};")
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines)
