#!/usr/bin/env python3
# The Lewis Carroll identity at work on a concrete matrix:
#
#   det(M) * det(M_{12,12}) = det(M_{2,2}) * det(M_{1,1}) - det(M_{2,1}) * det(M_{1,2})
#
# where M_{U,W} removes the rows labelled U and the columns labelled W.
# Everything is exact rational arithmetic, so the equality is literal.

from redhotpotato import (RationalMatrix, det_bareiss, det_cofactor,
                          det_condensation, lewis_carroll_residual,
                          lewis_carroll_terms)

M = RationalMatrix.from_rows([
    [3, 7, 0, 0],
    [8, 1, 0, 0],
    [0, 0, 4, 0],
    [0, 0, 0, 2],
])

print("M =")
print(M)
print()

d, d1212, d22, d11, d21, d12 = lewis_carroll_terms(M)
print(f"det(M)          = {d}")
print(f"det(M_12,12)    = {d1212}")
print(f"det(M_2,2)      = {d22}")
print(f"det(M_1,1)      = {d11}")
print(f"det(M_2,1)      = {d21}")
print(f"det(M_1,2)      = {d12}")
print()
print(f"left side : {d} * {d1212} = {d * d1212}")
print(f"right side: {d22} * {d11} - {d21} * {d12} = {d22 * d11 - d21 * d12}")
print(f"residual  : {lewis_carroll_residual(M)}")
print()

# Three independent determinant engines agree: fraction-free elimination,
# cofactor expansion, and iterated condensation (which applies the identity
# above to nested corner minors, falling back to cofactor expansion whenever
# an interior minor vanishes).
print("bareiss      :", det_bareiss(M))
print("cofactor     :", det_cofactor(M))
print("condensation :", det_condensation(M))
