"""The Red Hot Potato driver: chaining phi0, phi1, phi2 into a bijection.

Starting from an all-black pair (tree, three-forest) in S0, the driver
includes it into S1 via phi0 and then alternates phi1 with the
recoloring involution matching the current shape (phi0 on S1-shapes,
phi2 on S2-shapes) until phi1 lands on a copy of an S3 element, which
phi2 then carries into S3.  Running the same chain from the S3 end
yields the inverse map.

Termination is guaranteed by the involution-principle path structure;
the iteration cap only guards against implementation bugs, and arriving
back at an S0 copy mid-chain (or an S3 copy on the inverse run) is
reported as a theory violation rather than silently accepted.
"""

from __future__ import annotations

import statistics
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, NamedTuple, Optional, Tuple

from .enumeration import (enumerate_S0, enumerate_S1_signed,
                          enumerate_S2_signed, enumerate_S3, pair_weight,
                          random_s1_pair, random_s2_pair)
from .graphs import RED, S0, S1, S2, S3, GraphPair, pair_to_dot, pair_to_json
from .involutions import DARK, TaggedPair, crabwalk, phi0, phi1, phi2
from .matrices import WeightedDigraph, rational_to_json

DEFAULT_CAP = 10 ** 6


class TheoryViolation(RuntimeError):
    """The chain did something the involution principle forbids; this
    means a bug in the involutions, never bad input."""


class RhpStep(NamedTuple):
    involution: Optional[str]   # None for the initial snapshot
    pair: GraphPair
    tag: str


@dataclass(frozen=True)
class RhpTrace:
    """Ordered log of one driver run: the initial pair plus one snapshot
    per involution application."""
    steps: Tuple[RhpStep, ...]

    @property
    def initial(self) -> GraphPair:
        return self.steps[0].pair

    @property
    def final(self) -> GraphPair:
        return self.steps[-1].pair

    @property
    def iterations(self) -> int:
        return len(self.steps) - 1

    def snapshots(self) -> Tuple[GraphPair, ...]:
        return tuple(s.pair for s in self.steps)


def _run_chain(x: TaggedPair, stop_kind: str, error_kind: str,
               include, recolor_for, cap: int) -> Tuple[GraphPair, RhpTrace]:
    steps: List[RhpStep] = [RhpStep(None, x.pair, x.tag)]

    def record(name, y):
        steps.append(RhpStep(name, y.pair, y.tag))
        if len(steps) - 1 > cap:
            raise TheoryViolation(f"iteration cap {cap} exceeded")

    cur = include(x)
    record(include.__name__, cur)
    while True:
        cur = phi1(cur)
        record("phi1", cur)
        kind = cur.pair.classify().kind
        if kind == error_kind:
            raise TheoryViolation(
                f"mid-chain arrival at an {error_kind} copy; the involution "
                "principle forbids returning to the start set")
        if kind == stop_kind:
            final_name, final = recolor_for[kind](cur)
            record(final_name, final)
            return final.pair, RhpTrace(tuple(steps))
        name, cur = recolor_for[S1 if kind in (S0, S1) else S2](cur)
        record(name, cur)


def red_hot_potato(x: GraphPair, cap: int = DEFAULT_CAP) -> Tuple[GraphPair, RhpTrace]:
    """Map an S0 pair to its S3 partner, returning the full trace."""
    if x.classify().kind != S0:
        raise ValueError("red_hot_potato needs a pair in S0 "
                         "(all-black tree rooted 0 + three-forest rooted 0,1,2)")
    recolor = {S1: lambda t: ("phi0", phi0(t)), S2: lambda t: ("phi2", phi2(t)),
               S3: lambda t: ("phi2", phi2(t))}
    return _run_chain(TaggedPair(x, S0), stop_kind=S3, error_kind=S0,
                      include=phi0, recolor_for=recolor, cap=cap)


def red_hot_potato_inverse(y: GraphPair, cap: int = DEFAULT_CAP) -> Tuple[GraphPair, RhpTrace]:
    """Map an S3 pair back to its unique S0 preimage."""
    if y.classify().kind != S3:
        raise ValueError("red_hot_potato_inverse needs a pair in S3 "
                         "(all-black non-forbidden two-forest pair)")
    recolor = {S1: lambda t: ("phi0", phi0(t)), S2: lambda t: ("phi2", phi2(t)),
               S0: lambda t: ("phi0", phi0(t))}
    return _run_chain(TaggedPair(y, S3), stop_kind=S0, error_kind=S3,
                      include=phi2, recolor_for=recolor, cap=cap)


# --- verification drivers ---------------------------------------------------

@dataclass
class ForestIdentityReport:
    n: int
    seed: int
    s0_size: int = 0
    s3_size: int = 0
    chain_lengths: Tuple[int, int, float] = (0, 0, 0.0)   # min, max, mean
    weighted_sums: Optional[Tuple[Fraction, Fraction]] = None
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        out = {
            "n": self.n,
            "seed": self.seed,
            "s0_size": self.s0_size,
            "s3_size": self.s3_size,
            "chain_min": self.chain_lengths[0],
            "chain_max": self.chain_lengths[1],
            "chain_mean": self.chain_lengths[2],
            "passed": self.passed,
            "failures": list(self.failures),
        }
        if self.weighted_sums is not None:
            out["weighted_sum_s0"] = rational_to_json(self.weighted_sums[0])
            out["weighted_sum_s3"] = rational_to_json(self.weighted_sums[1])
        return out


def verify_forest_identity(n: int, weights: Optional[WeightedDigraph] = None,
                           seed: int = 0, cap: int = DEFAULT_CAP) -> ForestIdentityReport:
    """Run the bijection over all of S0 and check it lands bijectively on
    S3 with weight monomials conserved; with weights, also compare the
    two sides of the identity as exact numbers."""
    report = ForestIdentityReport(n=n, seed=seed)
    s3_keys = {p.canonical() for p in enumerate_S3(n)}
    report.s3_size = len(s3_keys)
    seen = {}
    lengths = []
    weighted_lhs = Fraction(0)
    weighted_rhs = Fraction(0)
    for x in enumerate_S0(n):
        report.s0_size += 1
        try:
            y, trace = red_hot_potato(x, cap=cap)
        except (TheoryViolation, ValueError) as exc:
            report.failures.append(f"driver failed on {pair_to_json(x)}: {exc}")
            continue
        lengths.append(trace.iterations)
        if y.classify().kind != S3:
            report.failures.append(f"output not in S3 for {pair_to_json(x)}")
            continue
        key = y.canonical()
        if key in seen:
            report.failures.append(
                f"collision: {pair_to_json(x)} and {pair_to_json(seen[key])} share an output")
        seen[key] = x
        if key not in s3_keys:
            report.failures.append(f"output of {pair_to_json(x)} is not an enumerated S3 pair")
        if y.weight_monomial() != x.weight_monomial():
            report.failures.append(f"weight monomial not conserved for {pair_to_json(x)}")
        if weights is not None:
            weighted_lhs += pair_weight(x, weights)
            weighted_rhs += pair_weight(y, weights)
    if report.s0_size != report.s3_size:
        report.failures.append(f"|S0| = {report.s0_size} differs from |S3| = {report.s3_size}")
    missed = report.s3_size - len(seen)
    if missed:
        report.failures.append(f"{missed} S3 pairs were never hit")
    if lengths:
        report.chain_lengths = (min(lengths), max(lengths),
                                round(statistics.mean(lengths), 3))
    if weights is not None:
        report.weighted_sums = (weighted_lhs, weighted_rhs)
        if weighted_lhs != weighted_rhs:
            report.failures.append(
                f"weighted sums differ: {weighted_lhs} != {weighted_rhs}")
    return report


@dataclass
class InvolutionSuiteReport:
    n: int
    seed: int
    exhaustive: bool
    checked: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "seed": self.seed,
            "exhaustive": self.exhaustive,
            "checked": self.checked,
            "passed": self.passed,
            "failures": list(self.failures),
        }


def _check_element(pair: GraphPair, report: InvolutionSuiteReport) -> None:
    """Involution, range, parity, endpoint and conservation checks for one
    S1- or S2-shaped element."""
    kind = pair.classify().kind
    tag = S1 if kind in (S0, S1) else S2
    x = TaggedPair(pair, tag)
    report.checked += 1

    def fail(msg: str) -> None:
        report.failures.append(f"{msg}: {pair_to_json(pair)}")

    # recoloring involutions on non-copies flip the sign
    if kind in (S1, S2):
        flip = phi0 if kind == S1 else phi2
        y = flip(x)
        if y.pair.sign() != -pair.sign():
            fail(f"{flip.__name__} did not reverse the sign")
        if flip(y).pair != pair:
            fail(f"{flip.__name__} is not an involution")

    # phi1: involution, shape transitions, parity behavior, conservation
    y = phi1(x)
    back = phi1(y)
    if back.pair != pair or back.tag != tag:
        fail("phi1 twice did not restore the element")
    if y.pair.weight_monomial() != pair.weight_monomial():
        fail("phi1 changed the weight monomial")
    before = pair.red_cycle_count() % 2
    after = y.pair.red_cycle_count() % 2
    if tag == S1:
        if y.tag != S2:
            fail("phi1 sent an S1 element somewhere other than S2")
        if before != after:
            fail("S1->S2 transition changed red-cycle parity")
    else:
        if y.tag == S1 and before != after:
            fail("S2->S1 transition changed red-cycle parity")
        if y.tag == S2 and before == after:
            fail("S2->S2 transition kept red-cycle parity")

    # range conditions on the output
    out = y.pair
    cls = out.classify()
    if not cls.is_valid:
        fail(f"phi1 output invalid ({cls.reason})")
    for slot in out.slots:
        if slot.out[0] is not None:
            fail("phi1 output gave node 0 an out-edge")
    for v in (1, 2):
        total = sum(1 for slot in out.slots if slot.out[v] is not None)
        if total != 1:
            fail(f"phi1 output: node {v} has {total} out-edges")
    for v in range(3, out.n + 1):
        if any(slot.out[v] is None for slot in out.slots):
            fail(f"phi1 output: node {v} lost its out-edge in one slot")

    # crabwalk endpoint behavior when node 1's edge is red
    a = pair.a_slot()
    if pair.slot(a).out[1][1] == RED:
        walk = crabwalk(pair)
        if walk.end_node not in (1, 2):
            fail(f"crabwalk ended at node {walk.end_node}")
        if tag == S1 and walk.end_shade != DARK:
            fail("crabwalk from an S1 element ended on a light edge")


def verify_involution_suite(n: int, samples: int = 10_000, seed: int = 0) -> InvolutionSuiteReport:
    """Exhaustive for n <= 3, sampled (``samples`` random elements of each
    shape) above."""
    if n < 2:
        raise ValueError("involution suite needs n >= 2")
    exhaustive = n <= 3
    report = InvolutionSuiteReport(n=n, seed=seed, exhaustive=exhaustive)
    if exhaustive:
        for p, _ in enumerate_S1_signed(n):
            _check_element(p, report)
        for p, _ in enumerate_S2_signed(n):
            _check_element(p, report)
    else:
        import random
        rng = random.Random(seed)
        for _ in range(samples // 2):
            _check_element(random_s1_pair(n, rng), report)
            _check_element(random_s2_pair(n, rng), report)
    return report


# --- trace export -----------------------------------------------------------

def trace_to_json(trace: RhpTrace) -> dict:
    """{"steps": [{"involution": ..., "pair": ..., "class": ...}], ...}"""
    return {
        "steps": [{"involution": s.involution, "pair": pair_to_json(s.pair),
                   "class": s.tag} for s in trace.steps],
        "iterations": trace.iterations,
    }


def trace_to_dots(trace: RhpTrace) -> List[str]:
    """One DOT document per snapshot, in chain order."""
    return [pair_to_dot(s.pair, name=f"step_{i}") for i, s in enumerate(trace.steps)]
