"""Exact rational matrices with persistent integer row/column labels.

The matrices here are small and exact: entries are ``fractions.Fraction``
and every determinant routine returns an exact value.  Labels are carried
so that taking a minor by label sets behaves like the usual M_{U,W}
notation (remove the rows labelled U and the columns labelled W) and
survives nesting.

Three independent determinant routines are provided:

* ``det_bareiss`` -- fraction-free elimination (the default engine),
* ``det_cofactor`` -- direct first-row expansion, used as an oracle,
* ``det_condensation`` -- iterated 2x2 condensation on contiguous
  blocks, falling back to cofactor expansion whenever an interior
  minor vanishes.

The determinant of the empty 0x0 matrix is 1 by convention; the 2x2
base case of the Lewis Carroll identity and the condensation recursion
both rely on it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence


def to_rational(value) -> Fraction:
    """Coerce an int, "p/q" string, or Fraction to an exact Fraction.

    Floats are rejected: silent binary-float conversion would defeat the
    exactness guarantees the identities depend on.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational entry")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"expected exact rational (int, 'p/q' or Fraction), got {type(value).__name__}")


def rational_to_json(value: Fraction):
    """Render a Fraction as an int when possible, else a "p/q" string."""
    if value.denominator == 1:
        return int(value)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class RationalMatrix:
    """Immutable rational matrix with labelled rows and columns."""

    entries: tuple
    row_labels: tuple
    col_labels: tuple

    def __post_init__(self):
        if len(self.row_labels) != len(self.entries):
            raise ValueError("row label count does not match row count")
        for row in self.entries:
            if len(row) != len(self.col_labels):
                raise ValueError("matrix is not rectangular")
        if len(set(self.row_labels)) != len(self.row_labels):
            raise ValueError("duplicate row labels")
        if len(set(self.col_labels)) != len(self.col_labels):
            raise ValueError("duplicate column labels")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], row_labels=None, col_labels=None,
                  labels=None) -> "RationalMatrix":
        """Build a matrix from nested sequences; labels default to 1..k."""
        entries = tuple(tuple(to_rational(x) for x in row) for row in rows)
        ncols = len(entries[0]) if entries else 0
        if labels is not None:
            row_labels = col_labels = tuple(labels)
        if row_labels is None:
            row_labels = tuple(range(1, len(entries) + 1))
        if col_labels is None:
            col_labels = tuple(range(1, ncols + 1))
        return cls(entries, tuple(row_labels), tuple(col_labels))

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def ncols(self) -> int:
        return len(self.col_labels)

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def entry(self, i: int, j: int) -> Fraction:
        """Entry by position (0-based)."""
        return self.entries[i][j]

    def row_sum(self, i: int) -> Fraction:
        return sum(self.entries[i], Fraction(0))

    def minor(self, U: Iterable[int], W: Iterable[int]) -> "RationalMatrix":
        """Remove the rows labelled U and the columns labelled W."""
        U = frozenset(U)
        W = frozenset(W)
        unknown_rows = U - set(self.row_labels)
        unknown_cols = W - set(self.col_labels)
        if unknown_rows or unknown_cols:
            raise KeyError(f"unknown labels: rows {sorted(unknown_rows)}, cols {sorted(unknown_cols)}")
        keep_r = [i for i, lab in enumerate(self.row_labels) if lab not in U]
        keep_c = [j for j, lab in enumerate(self.col_labels) if lab not in W]
        entries = tuple(tuple(self.entries[i][j] for j in keep_c) for i in keep_r)
        return RationalMatrix(entries,
                              tuple(self.row_labels[i] for i in keep_r),
                              tuple(self.col_labels[j] for j in keep_c))

    def det(self, method: str = "bareiss") -> Fraction:
        return DET_METHODS[method](self)

    def transpose(self) -> "RationalMatrix":
        entries = tuple(tuple(self.entries[i][j] for i in range(self.nrows))
                        for j in range(self.ncols))
        return RationalMatrix(entries, self.col_labels, self.row_labels)

    def swap_rows(self, i: int, j: int) -> "RationalMatrix":
        rows = list(self.entries)
        rows[i], rows[j] = rows[j], rows[i]
        labels = list(self.row_labels)
        labels[i], labels[j] = labels[j], labels[i]
        return RationalMatrix(tuple(rows), tuple(labels), self.col_labels)

    def __str__(self) -> str:
        header = "      " + " ".join(f"{lab:>8}" for lab in self.col_labels)
        lines = [header]
        for lab, row in zip(self.row_labels, self.entries):
            lines.append(f"{lab:>4} | " + " ".join(f"{str(x):>8}" for x in row))
        return "\n".join(lines)


def _require_square(M: RationalMatrix):
    if not M.is_square:
        raise ValueError(f"determinant needs a square matrix, got {M.nrows}x{M.ncols}")


def det_bareiss(M: RationalMatrix) -> Fraction:
    """Fraction-free (Bareiss) determinant.

    Rational entries are cleared to integers row by row; the elimination
    itself runs over integers with exact divisions only.
    """
    _require_square(M)
    k = M.nrows
    if k == 0:
        return Fraction(1)
    denom = 1
    a = []
    for row in M.entries:
        scale = math.lcm(*(x.denominator for x in row))
        a.append([int(x * scale) for x in row])
        denom *= scale
    sign = 1
    prev = 1
    for col in range(k - 1):
        if a[col][col] == 0:
            for r in range(col + 1, k):
                if a[r][col] != 0:
                    a[col], a[r] = a[r], a[col]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = a[col][col]
        for i in range(col + 1, k):
            for j in range(col + 1, k):
                a[i][j] = (a[i][j] * pivot - a[i][col] * a[col][j]) // prev
            a[i][col] = 0
        prev = pivot
    return Fraction(sign * a[k - 1][k - 1], denom)


def det_cofactor(M: RationalMatrix) -> Fraction:
    """First-row cofactor expansion; exponential, used as an oracle."""
    _require_square(M)

    def expand(rows: tuple) -> Fraction:
        k = len(rows)
        if k == 0:
            return Fraction(1)
        if k == 1:
            return rows[0][0]
        total = Fraction(0)
        sign = 1
        for j in range(k):
            if rows[0][j] != 0:
                sub = tuple(r[:j] + r[j + 1:] for r in rows[1:])
                total += sign * rows[0][j] * expand(sub)
            sign = -sign
        return total

    return expand(M.entries)


def det_condensation(M: RationalMatrix) -> Fraction:
    """Determinant by iterated condensation on contiguous blocks.

    det(X) * det(interior) = det(TL) * det(BR) - det(TR) * det(BL)
    where the four blocks drop one boundary row and column each and the
    interior drops both.  When the interior determinant vanishes, the
    affected block is evaluated by cofactor expansion instead.
    """
    _require_square(M)
    cache: dict = {}

    def block(top: int, left: int, size: int) -> Fraction:
        key = (top, left, size)
        if key in cache:
            return cache[key]
        if size == 0:
            value = Fraction(1)
        elif size == 1:
            value = M.entries[top][left]
        else:
            interior = block(top + 1, left + 1, size - 2)
            if interior == 0:
                sub = RationalMatrix.from_rows(
                    [r[left:left + size] for r in M.entries[top:top + size]])
                value = det_cofactor(sub)
            else:
                tl = block(top, left, size - 1)
                br = block(top + 1, left + 1, size - 1)
                tr = block(top, left + 1, size - 1)
                bl = block(top + 1, left, size - 1)
                value = (tl * br - tr * bl) / interior
        cache[key] = value
        return value

    return block(0, 0, M.nrows)


DET_METHODS = {
    "bareiss": det_bareiss,
    "cofactor": det_cofactor,
    "condensation": det_condensation,
}


def lewis_carroll_terms(M: RationalMatrix):
    """The six determinants of the Lewis Carroll identity, in the order
    det(M), det(M_{12,12}), det(M_{2,2}), det(M_{1,1}), det(M_{2,1}), det(M_{1,2})."""
    if not M.is_square or M.nrows < 2:
        raise ValueError("need a square matrix of size >= 2")
    for lab in (1, 2):
        if lab not in M.row_labels or lab not in M.col_labels:
            raise ValueError("row and column labels must include 1 and 2")
    return (
        M.det(),
        M.minor({1, 2}, {1, 2}).det(),
        M.minor({2}, {2}).det(),
        M.minor({1}, {1}).det(),
        M.minor({2}, {1}).det(),
        M.minor({1}, {2}).det(),
    )


def lewis_carroll_residual(M: RationalMatrix) -> Fraction:
    """det(M)det(M_{12,12}) - det(M_{2,2})det(M_{1,1}) + det(M_{2,1})det(M_{1,2}).

    Always zero; computing it verifies the implementation, not the identity.
    """
    d, d1212, d22, d11, d21, d12 = lewis_carroll_terms(M)
    return d * d1212 - d22 * d11 + d21 * d12


@dataclass(frozen=True, eq=True)
class WeightedDigraph:
    """Edge weights a_ij on the complete digraph over nodes 0..n.

    Absent edges weigh zero; self-loops are not allowed.
    """

    n: int
    weights: Mapping = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (i, j), w in self.weights.items():
            if i == j:
                raise ValueError(f"self-loop weight at node {i}")
            if not (0 <= i <= self.n and 0 <= j <= self.n):
                raise ValueError(f"edge ({i},{j}) outside nodes 0..{self.n}")
            w = to_rational(w)
            if w != 0:
                clean[(i, j)] = w
        object.__setattr__(self, "weights", clean)

    def weight(self, i: int, j: int) -> Fraction:
        return self.weights.get((i, j), Fraction(0))

    def laplacian(self) -> RationalMatrix:
        """Row-sum-zero Laplacian: off-diagonal -a_ij, diagonal sum_k a_ik."""
        size = self.n + 1
        rows = []
        for i in range(size):
            row = []
            for j in range(size):
                if i == j:
                    row.append(sum((self.weight(i, k) for k in range(size) if k != i),
                                   Fraction(0)))
                else:
                    row.append(-self.weight(i, j))
            rows.append(row)
        return RationalMatrix.from_rows(rows, labels=range(size))

    @classmethod
    def complete(cls, n: int, value=1) -> "WeightedDigraph":
        w = to_rational(value)
        return cls(n, {(i, j): w for i in range(n + 1) for j in range(n + 1) if i != j})

    @classmethod
    def random_integer(cls, n: int, rng, lo: int = -9, hi: int = 9) -> "WeightedDigraph":
        return cls(n, {(i, j): rng.randint(lo, hi)
                       for i in range(n + 1) for j in range(n + 1) if i != j})


def laplacian(W: WeightedDigraph) -> RationalMatrix:
    return W.laplacian()


def pad_to_laplacian(M: RationalMatrix) -> WeightedDigraph:
    """Weights on nodes 0..n whose Laplacian restricted to labels 1..n is M.

    Requires M square with labels exactly 1..n.  Node 0 absorbs each row
    sum (a_i0 = sum of row i) and emits nothing (a_0j = 0), which makes
    every row of the padded Laplacian sum to zero while leaving the
    original entries intact.
    """
    n = M.nrows
    expected = tuple(range(1, n + 1))
    if not M.is_square or M.row_labels != expected or M.col_labels != expected:
        raise ValueError("need a square matrix with row and column labels 1..n")
    weights = {}
    for i in range(n):
        for j in range(n):
            if i != j:
                weights[(i + 1, j + 1)] = -M.entries[i][j]
        weights[(i + 1, 0)] = M.row_sum(i)
    return WeightedDigraph(n, weights)


# --- JSON formats -----------------------------------------------------------
#
# Matrix:  {"labels": [1, 2, ...], "rows": [[3, "7/2", ...], ...]}
# Weights: {"n": 4, "weights": [{"from": 1, "to": 0, "value": 3}, ...]}

def matrix_from_json(data: dict) -> RationalMatrix:
    if not isinstance(data, dict) or "rows" not in data:
        raise ValueError('matrix JSON needs a "rows" field')
    rows = data["rows"]
    labels = data.get("labels")
    if labels is None:
        labels = list(range(1, len(rows) + 1))
    return RationalMatrix.from_rows(rows, labels=labels)


def matrix_to_json(M: RationalMatrix) -> dict:
    if M.row_labels != M.col_labels:
        raise ValueError("only matrices with equal row/column labels serialize")
    return {
        "labels": list(M.row_labels),
        "rows": [[rational_to_json(x) for x in row] for row in M.entries],
    }


def weights_from_json(data: dict) -> WeightedDigraph:
    if not isinstance(data, dict) or "n" not in data:
        raise ValueError('weights JSON needs an "n" field')
    weights = {}
    for item in data.get("weights", []):
        weights[(item["from"], item["to"])] = to_rational(item["value"])
    return WeightedDigraph(data["n"], weights)


def weights_to_json(W: WeightedDigraph) -> dict:
    items = [{"from": i, "to": j, "value": rational_to_json(w)}
             for (i, j), w in sorted(W.weights.items())]
    return {"n": W.n, "weights": items}
