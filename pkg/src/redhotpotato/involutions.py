"""The three sign-reversing involutions phi0, phi1, phi2.

phi0 and phi2 are the recoloring involutions: they swap copies between
S0 and S1 (resp. S3 and S2) and otherwise flip the color of one selected
cycle.  phi1 is the edge-moving involution: it moves node 1's out-edge
between the slots when that edge is black, and otherwise performs the
crabwalk over the red edges of both slots to decide which meta-edges to
exchange.

Elements are carried as TaggedPair values because membership in the
chain is not determined by the pair alone: an all-black acyclic pair of
the S1 shape is a copy of an S0 element, and the tag says which of the
two signed sets it currently lives in.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional, Tuple

from .graphs import (BLACK, RED, S0, S1, S2, S3, ColoredFunctionalGraph,
                     GraphPair)

DARK = "dark"
LIGHT = "light"
FORWARD = "forward"
BACKWARD = "backward"


class InvariantViolation(RuntimeError):
    """An impossible state was reached; signals an implementation bug,
    not bad input."""


@dataclass(frozen=True)
class TaggedPair:
    """A pair together with the signed set (S0..S3) it currently inhabits."""
    pair: GraphPair
    tag: str

    def __post_init__(self):
        if self.tag not in (S0, S1, S2, S3):
            raise ValueError(f"unknown tag {self.tag!r}")


def tagged(pair: GraphPair, tag: str) -> TaggedPair:
    return TaggedPair(pair, tag)


class CrabwalkStep(NamedTuple):
    edge: Tuple[int, int]
    shade: str       # dark = red edge of A, light = red edge of B
    direction: str   # forward along dark, backward along light


@dataclass(frozen=True)
class CrabwalkTrace:
    steps: Tuple[CrabwalkStep, ...]
    end_node: int
    end_shade: str


@dataclass(frozen=True)
class SelectedCycle:
    """The cycle a recoloring involution will flip: an ordinary cycle in
    one slot, or the forbidden meta-cycle as a unit."""
    kind: str                      # "ordinary" or "forbidden"
    slot: Optional[int]            # slot index for ordinary cycles
    nodes: frozenset
    edges: Tuple[tuple, ...]       # (slot, i, j)


def _shaped(x: TaggedPair, tags: Tuple[str, ...], op: str) -> str:
    """Validate x for an involution expecting the given tags; returns the
    structural class kind."""
    if x.tag not in tags:
        raise ValueError(f"{op} expects a pair tagged {' or '.join(tags)}, got {x.tag}")
    cls = x.pair.classify()
    if not cls.is_valid:
        raise ValueError(f"{op} on invalid pair: {cls.reason}")
    family = {S0: (S0,), S1: (S0, S1), S2: (S2, S3), S3: (S3,)}[x.tag]
    if cls.kind not in family:
        raise ValueError(f"{op}: pair tagged {x.tag} but classifies {cls.kind}")
    return cls.kind


def select_cycle(p: GraphPair) -> SelectedCycle:
    """The cycle whose color the recoloring involutions flip.

    Ordinary cycles in the A-graph win, the one containing the largest
    node; failing that, the analogous cycle in B; the forbidden
    meta-cycle is chosen only when neither slot has an ordinary cycle.
    """
    a = p.a_slot()
    if a is None:
        raise ValueError("select_cycle needs node 1 to have an out-edge")
    for idx in (a, 1 - a):
        g = p.slot(idx)
        cycles = g.cycles()
        if cycles:
            best = max(cycles, key=lambda c: max(c.nodes))
            edges = tuple((idx, v, g.out[v][0]) for v in best.nodes)
            return SelectedCycle("ordinary", idx, frozenset(best.nodes), edges)
    fmc = p.forbidden_meta_cycle()
    if fmc is None:
        raise ValueError("select_cycle on a pair with no cycle")
    edges = tuple((0, i, j) for i, j in fmc[0]) + tuple((1, i, j) for i, j in fmc[1])
    nodes = frozenset(i for _, i, _ in edges) | frozenset(j for _, _, j in edges)
    return SelectedCycle("forbidden", None, nodes, edges)


def _flip_selected(p: GraphPair) -> GraphPair:
    sel = select_cycle(p)
    slot_edges = [dict(), dict()]
    for idx, i, j in sel.edges:
        slot_edges[idx][(i, j)] = True
    current = p.slot(sel.edges[0][0]).out[sel.edges[0][1]][1]
    new_color = RED if current == BLACK else BLACK
    g1 = p.slot1.recolor_edges(slot_edges[0], new_color) if slot_edges[0] else p.slot1
    g2 = p.slot2.recolor_edges(slot_edges[1], new_color) if slot_edges[1] else p.slot2
    return GraphPair(g1, g2)


def phi0(x: TaggedPair) -> TaggedPair:
    """Recoloring involution between S0 and S1.

    S0 elements are their own copies inside S1 (and back); every other
    S1 element has a cycle, whose selected representative changes color.
    """
    kind = _shaped(x, (S0, S1), "phi0")
    if x.tag == S0:
        return TaggedPair(x.pair, S1)
    if kind == S0:
        return TaggedPair(x.pair, S0)
    return TaggedPair(_flip_selected(x.pair), S1)


def phi2(x: TaggedPair) -> TaggedPair:
    """Recoloring involution between S3 and S2; the forbidden meta-cycle
    counts as a flippable cycle."""
    kind = _shaped(x, (S2, S3), "phi2")
    if x.tag == S3:
        return TaggedPair(x.pair, S2)
    if kind == S3:
        return TaggedPair(x.pair, S3)
    return TaggedPair(_flip_selected(x.pair), S2)


def crabwalk(p: GraphPair) -> CrabwalkTrace:
    """Alternating traversal over the red edges of both slots.

    Dark edges are the red edges of A (the slot with node 1's out-edge),
    light edges the red edges of B.  Starting along the dark edge out of
    node 1, travel forward along dark edges; on arriving at a node with a
    light in-edge, travel that light edge backward; on reaching a node
    with a dark out-edge, go forward again.  Arrival at node 1 or node 2
    stops the walk immediately, before any direction switch.  Every edge
    is traversed at most once; a repeat means the input was out of range.
    """
    a = p.a_slot()
    if a is None:
        raise ValueError("crabwalk needs node 1 to have an out-edge")
    slot_a, slot_b = p.slot(a), p.slot(1 - a)
    edge_1 = slot_a.out[1]
    if edge_1 is None or edge_1[1] != RED:
        raise ValueError("crabwalk needs node 1's out-edge to be red")

    dark_out = {i: j for i, j, c in slot_a.edges() if c == RED}
    light_out = {i: j for i, j, c in slot_b.edges() if c == RED}
    light_in = {}
    for i, j in light_out.items():
        if j in light_in:
            raise InvariantViolation(f"two light in-edges at node {j}")
        light_in[j] = i

    steps = []
    seen = set()

    def traverse(edge: Tuple[int, int], shade: str, direction: str) -> None:
        if (shade, edge) in seen:
            raise InvariantViolation(f"crabwalk revisits {shade} edge {edge}")
        seen.add((shade, edge))
        steps.append(CrabwalkStep(edge, shade, direction))

    def go_forward(pos: int) -> int:
        if pos not in dark_out:
            raise InvariantViolation(f"forward walk stranded at node {pos}")
        traverse((pos, dark_out[pos]), DARK, FORWARD)
        return dark_out[pos]

    def go_backward(pos: int) -> int:
        if pos not in light_in:
            raise InvariantViolation(f"backward walk stranded at node {pos}")
        traverse((light_in[pos], pos), LIGHT, BACKWARD)
        return light_in[pos]

    # The direction-switch tests depend on how the walk arrived: after a
    # dark (forward) step, a light in-edge at the arrival node turns the
    # walk around; after a light (backward) step, a dark out-edge does.
    # Arrival at node 1 or 2 stops the walk before any switch.
    pos = go_forward(1)
    while pos not in (1, 2):
        if steps[-1].shade == DARK:
            pos = go_backward(pos) if pos in light_in else go_forward(pos)
        else:
            pos = go_forward(pos) if pos in dark_out else go_backward(pos)
    return CrabwalkTrace(tuple(steps), pos, steps[-1].shade)


def phi1(x: TaggedPair) -> TaggedPair:
    """Edge-moving involution on S1 and S2.

    Black edge out of node 1: move it to the other slot.  Red: run the
    crabwalk, move every traversed dark edge from A to B and every
    traversed light edge from B to A, then rebalance by moving the black
    out-edge of any node left with two out-edges in one slot and none in
    the other.  The result is again a valid S1- or S2-shaped pair; an
    invalid result signals a bug rather than bad input.
    """
    _shaped(x, (S1, S2), "phi1")
    p = x.pair
    a = p.a_slot()
    if a is None:
        raise ValueError("phi1 needs node 1 to have an out-edge")
    target, color = p.slot(a).out[1]

    # out-edge lists per slot, mutable during the exchange
    table = [{v: [] for v in range(p.n + 1)} for _ in range(2)]
    for idx, g in enumerate(p.slots):
        for i, j, c in g.edges():
            table[idx][i].append((j, c))

    def move(idx_from: int, i: int, j: int) -> None:
        entry = next(e for e in table[idx_from][i] if e[0] == j)
        table[idx_from][i].remove(entry)
        table[1 - idx_from][i].append(entry)

    if color == BLACK:
        move(a, 1, target)
    else:
        walk = crabwalk(p)
        for step in walk.steps:
            i, j = step.edge
            move(a if step.shade == DARK else 1 - a, i, j)
        for v in range(p.n + 1):
            counts = (len(table[0][v]), len(table[1][v]))
            if counts in ((2, 0), (0, 2)):
                full = 0 if counts[0] == 2 else 1
                blacks = [e for e in table[full][v] if e[1] == BLACK]
                if len(blacks) != 1:
                    raise InvariantViolation(
                        f"rebalance at node {v}: expected exactly one black out-edge")
                table[full][v].remove(blacks[0])
                table[1 - full][v].append(blacks[0])

    graphs = []
    for idx in range(2):
        edges = []
        for v in range(p.n + 1):
            if len(table[idx][v]) > 1:
                raise InvariantViolation(f"node {v} kept two out-edges in slot {idx + 1}")
            for j, c in table[idx][v]:
                edges.append((v, j, c))
        graphs.append(ColoredFunctionalGraph.from_edges(p.n, edges))
    result = GraphPair(graphs[0], graphs[1])

    cls = result.classify()
    if not cls.is_valid:
        raise InvariantViolation(f"phi1 produced an invalid pair: {cls.reason}")
    return TaggedPair(result, S1 if cls.kind in (S0, S1) else S2)
