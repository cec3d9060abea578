#!/usr/bin/env python3
# The matrix-tree bridge between determinants and forest sums.
#
# Give every edge i->j of the complete digraph on 0..n a weight a_ij and
# form the Laplacian A (off-diagonal -a_ij, diagonal row sums, so every
# row sums to zero).  Deleting equal row and column sets U leaves a minor
# whose determinant is the weighted count of forests rooted exactly at U.
# The unequal-index product det(A_{02,01}) * det(A_{01,02}) counts the
# forbidden pairs instead.  Finally, pad_to_laplacian embeds *any* square
# matrix as such a minor, which is what makes the forest identity imply
# the determinant identity.

import random

from redhotpotato import (RationalMatrix, RootSpec, WeightedDigraph,
                          forest_weight_sum, pad_to_laplacian)

rng = random.Random(0)
n = 4
W = WeightedDigraph.random_integer(n, rng, lo=-4, hi=4)
A = W.laplacian()

for U in ({0}, {0, 1}, {0, 2}, {0, 1, 2}):
    det = A.minor(U, U).det()
    total = forest_weight_sum(RootSpec(n, frozenset(U)), W)
    print(f"roots {sorted(U)}: det(A_U,U) = {str(det):>8}   forest sum = {str(total):>8}")

cross = A.minor({0, 2}, {0, 1}).det() * A.minor({0, 1}, {0, 2}).det()
forbidden = (forest_weight_sum(RootSpec(n, frozenset({0, 2}), (1, 2)), W)
             * forest_weight_sum(RootSpec(n, frozenset({0, 1}), (2, 1)), W))
print(f"cross minors: det(A_02,01) * det(A_01,02) = {cross} = forbidden-pair sum = {forbidden}")
print()

M = RationalMatrix.from_rows([[3, 7, 0, 0], [8, 1, 0, 0], [0, 0, 4, 0], [0, 0, 0, 2]])
padded = pad_to_laplacian(M)
print("padding a plain matrix into a Laplacian and cutting row/column 0 returns it:",
      padded.laplacian().minor({0}, {0}) == M)
