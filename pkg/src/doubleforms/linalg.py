"""Exact rational linear algebra: rank, solving, nullspaces, projections.

Everything here works over Fractions (or ints) and never approximates.
Rank uses fraction-free Bareiss elimination on denominator-cleared rows to
keep intermediate integers small; projections keep an integer orthogonal
basis with gcd reduction after every step.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm


def _integer_row(row) -> list[int]:
    """Clear denominators and divide out the content of a rational row."""
    fracs = [Fraction(v) for v in row]
    scale = lcm(*(f.denominator for f in fracs)) if fracs else 1
    ints = [int(f * scale) for f in fracs]
    content = 0
    for v in ints:
        content = gcd(content, v)
    if content > 1:
        ints = [v // content for v in ints]
    return ints


def rank(matrix) -> int:
    """Exact rank by fraction-free (Bareiss) elimination."""
    rows = [_integer_row(r) for r in matrix if any(r)]
    if not rows:
        return 0
    cols = len(rows[0])
    rnk = 0
    prev = 1
    for c in range(cols):
        pivot = next((i for i in range(rnk, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[rnk], rows[pivot] = rows[pivot], rows[rnk]
        piv_row = rows[rnk]
        piv = piv_row[c]
        for i in range(rnk + 1, len(rows)):
            row = rows[i]
            if row[c]:
                f = row[c]
                for k in range(c, cols):
                    row[k] = (piv * row[k] - f * piv_row[k]) // prev
            else:
                for k in range(c, cols):
                    row[k] = (piv * row[k]) // prev
        prev = piv
        rnk += 1
        if rnk == len(rows):
            break
    return rnk


def _rref(matrix):
    """Reduced row echelon form over Fractions; returns (rows, pivot_cols)."""
    rows = [[Fraction(v) for v in r] for r in matrix]
    if not rows:
        return rows, []
    cols = len(rows[0])
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = Fraction(1) / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def solve(matrix, rhs) -> list[Fraction] | None:
    """One exact solution of matrix @ x = rhs, or None if inconsistent.

    Fraction-free Bareiss forward elimination on the augmented system (row
    scaling leaves the solution set unchanged), then rational back
    substitution.  Free variables are set to zero.
    """
    if not matrix:
        return [] if not any(rhs) else None
    cols = len(matrix[0])
    rows = [_integer_row(list(row) + [b]) for row, b in zip(matrix, rhs)]
    pivots: list[int] = []
    rank_so_far = 0
    prev = 1
    for c in range(cols):
        pivot = next((i for i in range(rank_so_far, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[rank_so_far], rows[pivot] = rows[pivot], rows[rank_so_far]
        piv_row = rows[rank_so_far]
        piv = piv_row[c]
        for i in range(rank_so_far + 1, len(rows)):
            row = rows[i]
            f = row[c]
            if f:
                for k in range(c, cols + 1):
                    row[k] = (piv * row[k] - f * piv_row[k]) // prev
            elif prev != piv:
                for k in range(c, cols + 1):
                    row[k] = (piv * row[k]) // prev
        prev = piv
        pivots.append(c)
        rank_so_far += 1
        if rank_so_far == len(rows):
            break
    for i in range(rank_so_far, len(rows)):
        if rows[i][cols]:
            return None  # zero row with nonzero rhs: inconsistent
    solution = [Fraction(0)] * cols
    for r in range(len(pivots) - 1, -1, -1):
        c = pivots[r]
        row = rows[r]
        acc = Fraction(row[cols])
        for k in range(c + 1, cols):
            if row[k] and solution[k]:
                acc -= row[k] * solution[k]
        solution[c] = acc / row[c]
    return solution


def nullspace(matrix) -> list[list[Fraction]]:
    """A basis of the kernel, one vector per free column of the RREF."""
    if not matrix:
        return []
    cols = len(matrix[0])
    rows, pivots = _rref(matrix)
    pivot_set = set(pivots)
    basis = []
    for free in range(cols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * cols
        vec[free] = Fraction(1)
        for r, c in enumerate(pivots):
            vec[c] = -rows[r][free]
        basis.append(vec)
    return basis


def _dot_int(a, b) -> int:
    return sum(x * y for x, y in zip(a, b) if x and y)


def _reduce_content(vec: list[int]) -> list[int]:
    content = 0
    for v in vec:
        content = gcd(content, v)
    if content > 1:
        return [v // content for v in vec]
    return vec


class KernelProjector:
    """Orthogonal projection onto the kernel of a constraint matrix.

    Gram-Schmidt (without normalization) orthogonalizes the constraint rows
    into an integer basis of the row space; projecting subtracts the
    row-space component.  Exact, deterministic, and cached by callers.
    """

    def __init__(self, constraint_rows):
        basis: list[list[int]] = []
        norms: list[int] = []
        for row in constraint_rows:
            vec = _integer_row(row)
            if not any(vec):
                continue
            for b, nb in zip(basis, norms):
                d = _dot_int(vec, b)
                if d:
                    vec = _reduce_content([nb * x - d * y for x, y in zip(vec, b)])
            if any(vec):
                basis.append(vec)
                norms.append(_dot_int(vec, vec))
        self.basis = basis
        self.norms = norms

    def project(self, vector) -> list[Fraction]:
        out = [Fraction(v) for v in vector]
        for b, nb in zip(self.basis, self.norms):
            d = sum(x * y for x, y in zip(out, b) if y and x)
            if d:
                f = Fraction(d, nb)
                out = [x - f * y if y else x for x, y in zip(out, b)]
        return out
