#!/usr/bin/env python3
# Counting rooted forests and the signed sets behind the forest identity.
#
# R_U is the family of forests on nodes 0..n rooted exactly at U; a
# superscript like 1->2 keeps only forests where node 1 sits in the tree
# rooted at 2.  The identity
#
#   |R_0| * |R_{0,1,2}|  =  |R_{0,2}| * |R_{0,1}| - |R_{0,2}^{1->2}| * |R_{0,1}^{2->1}|
#
# says pairs (tree, three-forest) are equinumerous with non-forbidden pairs
# of two-forests.  The signed sets S1 and S2 interpolate between the two
# sides: their signed element counts collapse to |S0| and |S3| because
# recoloring a cycle flips the sign and cancels everything else.

from redhotpotato import (RootSpec, count_forests, enumerate_S1_signed,
                          enumerate_S2_signed)

for n in (2, 3, 4):
    r0 = count_forests(RootSpec(n, frozenset({0})))
    r012 = count_forests(RootSpec(n, frozenset({0, 1, 2})))
    r02 = count_forests(RootSpec(n, frozenset({0, 2})))
    r01 = count_forests(RootSpec(n, frozenset({0, 1})))
    f02 = count_forests(RootSpec(n, frozenset({0, 2}), (1, 2)))
    f01 = count_forests(RootSpec(n, frozenset({0, 1}), (2, 1)))
    print(f"n = {n}")
    print(f"  |R_0| = {r0}   |R_012| = {r012}   |R_02| = {r02}   |R_01| = {r01}")
    print(f"  forbidden: |R_02^(1->2)| = {f02}   |R_01^(2->1)| = {f01}")
    print(f"  {r0} * {r012} = {r0 * r012}   vs   "
          f"{r02} * {r01} - {f02} * {f01} = {r02 * r01 - f02 * f01}")
    if n <= 3:
        s1 = list(enumerate_S1_signed(n))
        s2 = list(enumerate_S2_signed(n))
        print(f"  |S1| = {len(s1)} elements, signed sum = {sum(s for _, s in s1)}")
        print(f"  |S2| = {len(s2)} elements, signed sum = {sum(s for _, s in s2)}")
    print()
