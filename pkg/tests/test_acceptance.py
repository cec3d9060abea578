"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines.
"""

import random
import time

from helpers import brute_force_forest_count, pair

from redhotpotato import (RationalMatrix, RootSpec, WeightedDigraph,
                          count_forests, det_bareiss, det_cofactor,
                          det_condensation, enumerate_S0, enumerate_S3,
                          forest_weight_sum, lewis_carroll_residual,
                          lewis_carroll_terms, pair_weight, red_hot_potato,
                          red_hot_potato_inverse, verify_involution_suite)
from test_bijection import WORKED_FINAL, WORKED_INITIAL, WORKED_STEPS


def announce(num, detail, failures, started):
    elapsed = time.monotonic() - started
    status = "PASS" if not failures else "FAIL"
    print(f"criterion {num}: {status} ({elapsed:.2f}s) - {detail}")
    assert not failures, failures


def test_criterion_1_example_matrix_reproduction():
    started = time.monotonic()
    failures = []
    M = RationalMatrix.from_rows([[3, 7, 0, 0], [8, 1, 0, 0], [0, 0, 4, 0], [0, 0, 0, 2]])
    terms = lewis_carroll_terms(M)
    if terms != (-424, 8, 24, 8, 56, 64):
        failures.append(f"determinants {terms}")
    if terms[0] * terms[1] != terms[2] * terms[3] - terms[4] * terms[5]:
        failures.append("identity does not balance")
    if lewis_carroll_residual(M) != 0:
        failures.append("nonzero residual")
    announce(1, "example matrix: -424, 8, 24, 8, 56, 64 and -424*8 = 24*8 - 56*64",
             failures, started)


def test_criterion_2_golden_trace():
    started = time.monotonic()
    failures = []
    x = pair(4, *WORKED_INITIAL)
    final, trace = red_hot_potato(x)
    if final != pair(4, *WORKED_FINAL):
        failures.append(f"final pair {final}")
    got = [(s.involution, s.pair, s.tag) for s in trace.steps[1:]]
    want = [(name, pair(4, s1, s2), tag) for name, s1, s2, tag in WORKED_STEPS]
    if trace.steps[0][1:] != (x, "S0"):
        failures.append("initial snapshot wrong")
    for i, (g, w) in enumerate(zip(got, want)):
        if g != w:
            failures.append(f"step {i + 1}: got {g[0]} -> {g[1]}, want {w[0]} -> {w[1]}")
    if len(got) != len(want):
        failures.append(f"{len(got)} steps, want {len(want)}")
    # steps 8 and 9 must be a black-edge phi1 move (pure slot change of
    # node 1's edge) followed by recoloring exactly the A-cycle
    prev, move, recolor = (s.pair for s in trace.steps[7:10])
    if move.weight_monomial() != prev.weight_monomial():
        failures.append("step 8 is not a pure move")
    moved = prev.slot(prev.a_slot()).out[1]
    if moved is None or moved[1] != "black" or move.a_slot() == prev.a_slot():
        failures.append("step 8 does not move node 1's black edge across")
    a = move.a_slot()
    flipped = {(i, j) for i, j, c in recolor.slot(a).edges() if c == "red"}
    cycle_edges = {(i, move.slot(a).out[i][0])
                   for cyc in move.slot(a).cycles() for i in cyc.nodes}
    if flipped != cycle_edges:
        failures.append("step 9 does not recolor exactly the A-cycle")
    announce(2, "worked 5-node run matches every recorded snapshot", failures, started)


def test_criterion_3_three_matched_pairs_at_n2():
    started = time.monotonic()
    failures = []
    matches = {
        (("1>0 2>1", ""), ("1>0", "2>1")),
        (("1>0 2>0", ""), ("1>0", "2>0")),
        (("1>2 2>0", ""), ("1>2", "2>0")),
    }
    got = set()
    for x in enumerate_S0(2):
        y, _ = red_hot_potato(x)
        got.add((x, y.canonical()))
    want = {(pair(2, *a), pair(2, *b)) for a, b in matches}
    if got != want:
        failures.append(f"matched pairs differ: {got ^ want}")
    announce(3, "n=2 bijection yields exactly the three displayed matched pairs",
             failures, started)


def test_criterion_4_exhaustive_bijection_n3_n4():
    started = time.monotonic()
    failures = []
    expected_sizes = {3: 48, 4: 1875}
    for n, expected in expected_sizes.items():
        oracle = (brute_force_forest_count(n, {0})
                  * brute_force_forest_count(n, {0, 1, 2}))
        oracle_s3 = (brute_force_forest_count(n, {0, 2})
                     * brute_force_forest_count(n, {0, 1})
                     - brute_force_forest_count(n, {0, 2}, (1, 2))
                     * brute_force_forest_count(n, {0, 1}, (2, 1)))
        if oracle != expected or oracle_s3 != expected:
            failures.append(f"n={n}: brute-force counts {oracle}, {oracle_s3}")
        s3 = {p.canonical() for p in enumerate_S3(n)}
        outputs = set()
        count = 0
        for x in enumerate_S0(n):
            count += 1
            y, _ = red_hot_potato(x)
            key = y.canonical()
            if key in outputs:
                failures.append(f"n={n}: output collision at {key}")
            outputs.add(key)
            if key not in s3:
                failures.append(f"n={n}: output outside S3")
            if y.weight_monomial() != x.weight_monomial():
                failures.append(f"n={n}: weight monomial changed")
            back, _ = red_hot_potato_inverse(y)
            if back != x:
                failures.append(f"n={n}: inverse does not round-trip")
        if count != expected or outputs != s3:
            failures.append(f"n={n}: |S0|={count}, hit {len(outputs)} of {len(s3)} S3 pairs")
    announce(4, "bijection total/injective/surjective/conserving at n=3 (48) and n=4 (1875), "
                "counts brute-forced, inverse round-trips", failures, started)


def test_criterion_5_involution_suite():
    started = time.monotonic()
    failures = []
    exhaustive = verify_involution_suite(3)
    if not (exhaustive.passed and exhaustive.exhaustive):
        failures.extend(exhaustive.failures[:5])
    sampled = verify_involution_suite(4, samples=10_000, seed=0)
    if not sampled.passed or sampled.checked < 10_000:
        failures.extend(sampled.failures[:5])
    announce(5, f"involution/range/parity/sign checks: n=3 exhaustive "
                f"({exhaustive.checked} elements), n=4 sampled ({sampled.checked})",
             failures, started)


def test_criterion_6_matrix_tree_checks():
    started = time.monotonic()
    failures = []
    rng = random.Random(6)
    for n in range(2, 6):
        W = WeightedDigraph.random_integer(n, rng)
        A = W.laplacian()
        for U in ({0}, {0, 1}, {0, 2}, {0, 1, 2}):
            det = A.minor(U, U).det()
            total = forest_weight_sum(RootSpec(n, frozenset(U)), W)
            if det != total:
                failures.append(f"n={n} roots {U}: det {det} != sum {total}")
        cross = A.minor({0, 2}, {0, 1}).det() * A.minor({0, 1}, {0, 2}).det()
        forbidden = (forest_weight_sum(RootSpec(n, frozenset({0, 2}), (1, 2)), W)
                     * forest_weight_sum(RootSpec(n, frozenset({0, 1}), (2, 1)), W))
        if cross != forbidden:
            failures.append(f"n={n} cross: {cross} != {forbidden}")
    announce(6, "Laplacian minors equal forest sums (same-index and cross) for n <= 5",
             failures, started)


def test_criterion_7_identity_equivalence_loop():
    started = time.monotonic()
    failures = []
    rng = random.Random(7)
    for n in range(2, 5):
        W = WeightedDigraph.random_integer(n, rng)
        A = W.laplacian()
        lhs = sum(pair_weight(p, W) for p in enumerate_S0(n))
        rhs = sum(pair_weight(p, W) for p in enumerate_S3(n))
        via_dets = A.minor({0}, {0}).det() * A.minor({0, 1, 2}, {0, 1, 2}).det()
        if not lhs == rhs == via_dets:
            failures.append(f"n={n}: {lhs}, {rhs}, {via_dets}")
    announce(7, "sum over S0 = sum over S3 = det(A_{0,0}) * det(A_{012,012}) for n <= 4",
             failures, started)


def test_criterion_8_lewis_carroll_sweep():
    started = time.monotonic()
    failures = []
    rng = random.Random(8)
    for i in range(200):
        size = 3 + i % 5
        rows = [[rng.randint(-9, 9) for _ in range(size)] for _ in range(size)]
        if i % 10 == 0 and size >= 4:
            # engineer a singular interior: condensation must take its fallback
            for r in (1, 2):
                for c in (1, 2):
                    rows[r][c] = 1
        M = RationalMatrix.from_rows(rows)
        if lewis_carroll_residual(M) != 0:
            failures.append(f"matrix {i}: nonzero residual")
        reference = det_bareiss(M)
        if det_cofactor(M) != reference or det_condensation(M) != reference:
            failures.append(f"matrix {i}: determinant methods disagree")
    announce(8, "200 seeded matrices (sizes 3..7, zero interiors included): "
                "residual 0 and all three determinant methods agree", failures, started)
