#!/usr/bin/env python3
# Closing the loop: the forest identity as exact numbers, three ways.
#
#   sum over S0 of a_F * a_G   (pairs tree x three-forest)
# = sum over S3 of a_F * a_G   (non-forbidden two-forest pairs)
# = det(A_{0,0}) * det(A_{012,012})
#
# The first two are equal because the bijection conserves each pair's
# edge multiset, so putting the weights back after the unweighted
# bijection matches term for term.  The third ties the sums to the
# determinant identity through the matrix-tree correspondence.

import random

from redhotpotato import (WeightedDigraph, enumerate_S0, enumerate_S3,
                          pair_weight, verify_forest_identity)

rng = random.Random(42)
for n in (2, 3, 4):
    W = WeightedDigraph.random_integer(n, rng, lo=-3, hi=3)
    A = W.laplacian()
    s0_sum = sum(pair_weight(p, W) for p in enumerate_S0(n))
    s3_sum = sum(pair_weight(p, W) for p in enumerate_S3(n))
    dets = A.minor({0}, {0}).det() * A.minor({0, 1, 2}, {0, 1, 2}).det()
    print(f"n = {n}: S0 sum = {s0_sum}, S3 sum = {s3_sum}, determinant product = {dets}")

print()
report = verify_forest_identity(4, weights=WeightedDigraph.random_integer(4, rng))
print(f"full bijection check at n = 4: |S0| = {report.s0_size}, |S3| = {report.s3_size}, "
      f"passed = {report.passed}")
print(f"chain length (involution applications per run): "
      f"min {report.chain_lengths[0]}, max {report.chain_lengths[1]}, "
      f"mean {report.chain_lengths[2]}")
