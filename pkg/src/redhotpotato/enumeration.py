"""Exhaustive generation of rooted forests and the signed sets S0..S3.

Everything here generates all out-edge maps and filters.  At desk scale
(n <= 6) that is fast and unmissably correct, and the deterministic
lexicographic order (by node, then target) keeps golden tests stable.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Tuple

from .graphs import RED, ColoredFunctionalGraph, GraphPair
from .matrices import WeightedDigraph


@dataclass(frozen=True)
class RootSpec:
    """A forest family R_U, optionally constrained to contain a meta-edge.

    ``roots`` is the exact root set (must contain 0); ``meta_constraint``
    (i, j) keeps only forests where node i sits in the tree rooted at j.
    """

    n: int
    roots: frozenset
    meta_constraint: Optional[Tuple[int, int]] = None

    def __post_init__(self):
        object.__setattr__(self, "roots", frozenset(self.roots))
        if not self.roots:
            raise ValueError("root set may not be empty")
        if 0 not in self.roots:
            raise ValueError("node 0 must be a root")
        if not all(0 <= r <= self.n for r in self.roots):
            raise ValueError(f"roots outside nodes 0..{self.n}")
        if self.meta_constraint is not None:
            i, j = self.meta_constraint
            if not (0 <= i <= self.n and 0 <= j <= self.n):
                raise ValueError("meta constraint nodes out of range")


def _out_edge_maps(n: int, movers: Tuple[int, ...]) -> Iterator[ColoredFunctionalGraph]:
    """All black graphs on 0..n whose out-edges sit exactly on ``movers``,
    in lexicographic (node, target) order."""
    targets = [[t for t in range(n + 1) if t != v] for v in movers]
    for choice in itertools.product(*targets):
        yield ColoredFunctionalGraph.from_edges(
            n, [(v, t) for v, t in zip(movers, choice)])


def enumerate_forests(spec: RootSpec) -> Iterator[ColoredFunctionalGraph]:
    """All all-black forests whose root set equals spec.roots, filtered by
    the meta constraint when present."""
    movers = tuple(v for v in range(spec.n + 1) if v not in spec.roots)
    for g in _out_edge_maps(spec.n, movers):
        if not g.is_acyclic():
            continue
        if spec.meta_constraint is not None:
            i, j = spec.meta_constraint
            if not g.meta_edge_exists(i, j):
                continue
        yield g


def count_forests(spec: RootSpec) -> int:
    return sum(1 for _ in enumerate_forests(spec))


def _require_pair_scale(n: int):
    if n < 2:
        raise ValueError("signed sets need at least nodes 0, 1, 2 (n >= 2)")


def enumerate_S0(n: int) -> Iterator[GraphPair]:
    """R_0 x R_{0,1,2}: trees rooted at 0 paired with three-forests."""
    _require_pair_scale(n)
    threes = list(enumerate_forests(RootSpec(n, frozenset({0, 1, 2}))))
    for tree in enumerate_forests(RootSpec(n, frozenset({0}))):
        for forest in threes:
            yield GraphPair(tree, forest)


def enumerate_S3(n: int) -> Iterator[GraphPair]:
    """Two-forest pairs (rooted {0,2}, rooted {0,1}) minus the forbidden
    ones (meta-edge 1->2 in the first and 2->1 in the second)."""
    _require_pair_scale(n)
    seconds = list(enumerate_forests(RootSpec(n, frozenset({0, 1}))))
    for f in enumerate_forests(RootSpec(n, frozenset({0, 2}))):
        f_forbidden = f.meta_edge_exists(1, 2)
        for g in seconds:
            if f_forbidden and g.meta_edge_exists(2, 1):
                continue
            yield GraphPair(f, g)


def _color_units(pair: GraphPair, with_fmc: bool):
    """Colorable units of a pair: each ordinary cycle, plus the forbidden
    meta-cycle as a single unit.  A unit is a tuple of (slot, i, j)."""
    units = []
    for idx, g in enumerate(pair.slots):
        for cyc in g.cycles():
            units.append(tuple((idx, v, g.out[v][0]) for v in cyc.nodes))
    if with_fmc:
        fmc = pair.forbidden_meta_cycle()
        if fmc is not None:
            unit = tuple((0, i, j) for i, j in fmc[0]) + tuple((1, i, j) for i, j in fmc[1])
            units.append(unit)
    return units


def _colorings(pair: GraphPair, with_fmc: bool) -> Iterator[Tuple[GraphPair, int]]:
    units = _color_units(pair, with_fmc)
    for reds in itertools.product((False, True), repeat=len(units)):
        slots = [dict(), dict()]
        for unit, red in zip(units, reds):
            if not red:
                continue
            for idx, i, j in unit:
                slots[idx][(i, j)] = RED
        g1 = pair.slot1.recolor_edges(slots[0], RED) if slots[0] else pair.slot1
        g2 = pair.slot2.recolor_edges(slots[1], RED) if slots[1] else pair.slot2
        sign = -1 if sum(reds) % 2 else 1
        yield GraphPair(g1, g2), sign


def enumerate_S1_signed(n: int) -> Iterator[Tuple[GraphPair, int]]:
    """Every S1 element with its sign: slot1 carries out-edges of 1..n,
    slot2 of 3..n, crossed with all cycle colorings."""
    _require_pair_scale(n)
    movers1 = tuple(range(1, n + 1))
    movers2 = tuple(range(3, n + 1))
    bases2 = list(_out_edge_maps(n, movers2))
    for g1 in _out_edge_maps(n, movers1):
        for g2 in bases2:
            yield from _colorings(GraphPair(g1, g2), with_fmc=False)


def enumerate_S2_signed(n: int) -> Iterator[Tuple[GraphPair, int]]:
    """Every S2 element with its sign: slot1 carries out-edges of {1,3..n},
    slot2 of {2,3..n}; the forbidden meta-cycle is one colorable unit."""
    _require_pair_scale(n)
    movers1 = (1,) + tuple(range(3, n + 1))
    movers2 = (2,) + tuple(range(3, n + 1))
    bases2 = list(_out_edge_maps(n, movers2))
    for g1 in _out_edge_maps(n, movers1):
        for g2 in bases2:
            yield from _colorings(GraphPair(g1, g2), with_fmc=True)


def forest_weight_sum(spec: RootSpec, W: WeightedDigraph) -> Fraction:
    """Sum over the family of the product of edge weights."""
    total = Fraction(0)
    for g in enumerate_forests(spec):
        term = Fraction(1)
        for i, j, _ in g.edges():
            term *= W.weight(i, j)
        total += term
    return total


def pair_weight(pair: GraphPair, W: WeightedDigraph) -> Fraction:
    """Product of edge weights over both slots of a pair."""
    term = Fraction(1)
    for (i, j), mult in pair.weight_monomial().items():
        term *= W.weight(i, j) ** mult
    return term


def random_s1_pair(n: int, rng) -> GraphPair:
    """A uniformly-shaped random S1 element: random out-edge maps, each
    cycle independently recolored red with probability 1/2."""
    _require_pair_scale(n)
    g1 = _random_map(n, tuple(range(1, n + 1)), rng)
    g2 = _random_map(n, tuple(range(3, n + 1)), rng)
    return _random_coloring(GraphPair(g1, g2), with_fmc=False, rng=rng)


def random_s2_pair(n: int, rng) -> GraphPair:
    _require_pair_scale(n)
    g1 = _random_map(n, (1,) + tuple(range(3, n + 1)), rng)
    g2 = _random_map(n, (2,) + tuple(range(3, n + 1)), rng)
    return _random_coloring(GraphPair(g1, g2), with_fmc=True, rng=rng)


def _random_map(n: int, movers: Tuple[int, ...], rng) -> ColoredFunctionalGraph:
    edges = []
    for v in movers:
        t = rng.choice([u for u in range(n + 1) if u != v])
        edges.append((v, t))
    return ColoredFunctionalGraph.from_edges(n, edges)


def _random_coloring(pair: GraphPair, with_fmc: bool, rng) -> GraphPair:
    units = _color_units(pair, with_fmc)
    slots = [dict(), dict()]
    for unit in units:
        if rng.random() < 0.5:
            for idx, i, j in unit:
                slots[idx][(i, j)] = RED
    g1 = pair.slot1.recolor_edges(slots[0], RED) if slots[0] else pair.slot1
    g2 = pair.slot2.recolor_edges(slots[1], RED) if slots[1] else pair.slot2
    return GraphPair(g1, g2)
