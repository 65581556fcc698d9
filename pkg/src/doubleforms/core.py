"""Exact bigraded algebra of double forms on Euclidean n-space.

A double form of bidegree (p, q) is a bilinear form on Lambda^p x Lambda^q,
skew-symmetric within each argument block, stored as its C(n,p) x C(n,q)
coefficient array over the basis e_I (x) e_J with index sets in lexicographic
order.  The basis is orthonormal and self-dual:

    coeffs[rank I][rank J] == value of the form on (e_I, e_J).

All coefficients are exact rationals, so every algebraic identity exercised
by the test suite is checked with equality, never with tolerances.  Forms are
immutable after construction and all operations are pure.

Conventions pinned here (and enforced by the oracle tests):

* products extend (e_I (x) e_J) . (e_K (x) e_L) = sign(I,K) sign(J,L)
  e_{I u K} (x) {J u L}, matching the 1/(p! r! s! q!) permutation-sum
  evaluation of wedge products of multilinear forms;
* the contraction sums over one orthonormal vector inserted in front of both
  argument blocks, and is the inner-product adjoint of multiplication by g;
* the Hodge star acts factor-wise through complement signs, so that
  star(omega)(. , .) == omega(star . , star .).
"""

from __future__ import annotations

import itertools
import os
from fractions import Fraction
from math import comb, factorial

from .exterior import (
    MAX_DIMENSION,
    BasisError,
    IndexSet,
    complement_sign_mask,
    mask_to_indices,
    subset_masks,
    wedge_sign_masks,
    _mask_rank_table,
)

Scalar = Fraction

DEFAULT_CELL_BUDGET = 10**7

_cell_budget = int(os.environ.get("DOUBLEFORMS_CELL_BUDGET", DEFAULT_CELL_BUDGET))


class DoubleFormError(ValueError):
    """Base class for algebra errors."""


class DegreeError(DoubleFormError):
    """Bidegree out of range for the requested operation."""


class DimensionMismatchError(DoubleFormError):
    """Operands live over different ambient dimensions or bidegrees."""


class CellBudgetError(DoubleFormError):
    """Coefficient array would exceed the configured cell budget."""


class BianchiRequiredError(DoubleFormError):
    """Operation is only defined on first-Bianchi-identity tensors."""


class IdentityError(DoubleFormError):
    """An exact identity that must hold by construction failed to."""


def cell_budget() -> int:
    return _cell_budget


def set_cell_budget(budget: int) -> None:
    """Override the allocation cap (cells = C(n,p)*C(n,q)) at runtime.

    The initial value comes from DOUBLEFORMS_CELL_BUDGET, default 10**7.
    """
    global _cell_budget
    if not isinstance(budget, int) or budget < 1:
        raise DoubleFormError(f"cell budget must be a positive integer, got {budget!r}")
    _cell_budget = budget


def as_scalar(value) -> Fraction:
    """Coerce ints and Fractions to the exact rational scalar type."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise DoubleFormError(f"expected an exact rational scalar, got {value!r}")


_ZERO = Fraction(0)


class DoubleForm:
    """An element of D^{p,q} over R^n with exact rational coefficients."""

    __slots__ = ("n", "p", "q", "coeffs")

    def __init__(self, n: int, p: int, q: int, coeffs=None):
        if not isinstance(n, int) or not 1 <= n <= MAX_DIMENSION:
            raise DegreeError(f"ambient dimension must be in [1, {MAX_DIMENSION}], got {n!r}")
        if not (isinstance(p, int) and isinstance(q, int) and 0 <= p <= n and 0 <= q <= n):
            raise DegreeError(f"bidegree ({p!r}, {q!r}) out of range for n={n}")
        rows, cols = comb(n, p), comb(n, q)
        if rows * cols > _cell_budget:
            raise CellBudgetError(
                f"refusing a {rows}x{cols} coefficient array for D^({p},{q}) at n={n}: "
                f"{rows * cols} cells exceed the budget of {_cell_budget} "
                "(see set_cell_budget / DOUBLEFORMS_CELL_BUDGET)"
            )
        self.n = n
        self.p = p
        self.q = q
        if coeffs is None:
            self.coeffs = [[_ZERO] * cols for _ in range(rows)]
        else:
            if len(coeffs) != rows or any(len(row) != cols for row in coeffs):
                raise DimensionMismatchError(
                    f"coefficient array must be {rows}x{cols} for D^({p},{q}) at n={n}"
                )
            self.coeffs = [[as_scalar(v) for v in row] for row in coeffs]

    # -- basic structure ---------------------------------------------------

    @property
    def row_masks(self) -> tuple[int, ...]:
        return subset_masks(self.n, self.p)

    @property
    def col_masks(self) -> tuple[int, ...]:
        return subset_masks(self.n, self.q)

    def entries(self):
        """Yield (mask_I, mask_J, coefficient) over nonzero coefficients."""
        cols = self.col_masks
        for mask_i, row in zip(self.row_masks, self.coeffs):
            for mask_j, value in zip(cols, row):
                if value:
                    yield mask_i, mask_j, value

    def is_zero(self) -> bool:
        return not any(any(row) for row in self.coeffs)

    def scalar_value(self) -> Fraction:
        """The single coefficient of a (0,0)-form."""
        if self.p or self.q:
            raise DegreeError(f"scalar_value needs bidegree (0,0), got ({self.p},{self.q})")
        return self.coeffs[0][0]

    def __getitem__(self, key) -> Fraction:
        """Coefficient at (I, J), with I, J strictly increasing index tuples."""
        left, right = key
        i = left if isinstance(left, IndexSet) else IndexSet.from_indices(self.n, left)
        j = right if isinstance(right, IndexSet) else IndexSet.from_indices(self.n, right)
        if i.n != self.n or j.n != self.n:
            raise DimensionMismatchError("index sets live over a different n")
        if i.k != self.p or j.k != self.q:
            raise DegreeError(f"index sets must have sizes ({self.p},{self.q})")
        return self.coeffs[_mask_rank_table(self.n, self.p)[i.mask]][
            _mask_rank_table(self.n, self.q)[j.mask]
        ]

    def __eq__(self, other) -> bool:
        if not isinstance(other, DoubleForm):
            return NotImplemented
        return (
            self.n == other.n
            and self.p == other.p
            and self.q == other.q
            and self.coeffs == other.coeffs
        )

    __hash__ = None

    def __repr__(self) -> str:
        nnz = sum(1 for _ in self.entries())
        return f"DoubleForm(n={self.n}, p={self.p}, q={self.q}, nonzero={nnz})"

    def _require_same_space(self, other: "DoubleForm") -> None:
        if not isinstance(other, DoubleForm):
            raise DimensionMismatchError(f"expected a DoubleForm, got {other!r}")
        if self.n != other.n:
            raise DimensionMismatchError(
                f"ambient dimensions differ: {self.n} vs {other.n}"
            )

    def _require_same_bidegree(self, other: "DoubleForm") -> None:
        self._require_same_space(other)
        if (self.p, self.q) != (other.p, other.q):
            raise DimensionMismatchError(
                f"bidegrees differ: ({self.p},{self.q}) vs ({other.p},{other.q})"
            )

    # -- linear structure --------------------------------------------------

    def __add__(self, other: "DoubleForm") -> "DoubleForm":
        self._require_same_bidegree(other)
        out = DoubleForm(self.n, self.p, self.q)
        out.coeffs = [
            [a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.coeffs, other.coeffs)
        ]
        return out

    def __sub__(self, other: "DoubleForm") -> "DoubleForm":
        self._require_same_bidegree(other)
        out = DoubleForm(self.n, self.p, self.q)
        out.coeffs = [
            [a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.coeffs, other.coeffs)
        ]
        return out

    def __neg__(self) -> "DoubleForm":
        return self.scale(Fraction(-1))

    def scale(self, value) -> "DoubleForm":
        s = as_scalar(value)
        out = DoubleForm(self.n, self.p, self.q)
        out.coeffs = [[s * a for a in row] for row in self.coeffs]
        return out

    def __rmul__(self, value) -> "DoubleForm":
        return self.scale(value)

    def __truediv__(self, value) -> "DoubleForm":
        return self.scale(Fraction(1) / as_scalar(value))

    def __mul__(self, other):
        if isinstance(other, DoubleForm):
            return self.mul(other)
        return self.scale(other)

    # -- the graded product ------------------------------------------------

    def mul(self, other: "DoubleForm") -> "DoubleForm":
        """Graded product into D^{p+r, q+s}.

        On basis elements this is sign(I,K) sign(J,L) e_{I u K} (x) e_{J u L};
        degree overflow past n returns the zero form of the clamped degree,
        matching Lambda^{>n} = 0.
        """
        self._require_same_space(other)
        n = self.n
        p_out = self.p + other.p
        q_out = self.q + other.q
        out = DoubleForm(n, min(p_out, n), min(q_out, n))
        if p_out > n or q_out > n:
            return out
        row_rank = _mask_rank_table(n, p_out)
        col_rank = _mask_rank_table(n, q_out)
        rows = out.coeffs
        for mi, mj, a in self.entries():
            for mk, ml, b in other.entries():
                s1 = wedge_sign_masks(mi, mk)
                if not s1:
                    continue
                s2 = wedge_sign_masks(mj, ml)
                if not s2:
                    continue
                row = rows[row_rank[mi | mk]]
                col = col_rank[mj | ml]
                row[col] += (s1 * s2) * a * b
        return out

    def mul_g_power(self, power: int) -> "DoubleForm":
        """Left multiplication by g^power; power 0 is the identity."""
        if not isinstance(power, int) or power < 0:
            raise DegreeError(f"g-power must be a nonnegative integer, got {power!r}")
        result = self
        g = make_g(self.n)
        for _ in range(power):
            result = g.mul(result)
        return result

    # -- contraction, inner product, star ----------------------------------

    def contract(self) -> "DoubleForm":
        """Trace over one vector inserted in front of both blocks.

        c w (x..., y...) = sum_j w(e_j ^ x..., e_j ^ y...); the zero form of
        the clamped degree when p or q is 0.
        """
        n, p, q = self.n, self.p, self.q
        if p == 0 or q == 0:
            return DoubleForm(n, max(p - 1, 0), max(q - 1, 0))
        out = DoubleForm(n, p - 1, q - 1)
        row_rank = _mask_rank_table(n, p - 1)
        col_rank = _mask_rank_table(n, q - 1)
        rows = out.coeffs
        for mi, mj, value in self.entries():
            common = mi & mj
            while common:
                bit = common & -common
                common ^= bit
                ri = mi ^ bit
                rj = mj ^ bit
                sign = wedge_sign_masks(bit, ri) * wedge_sign_masks(bit, rj)
                rows[row_rank[ri]][col_rank[rj]] += sign * value
        return out

    def inner(self, other: "DoubleForm") -> Fraction:
        """Inner product; distinct bidegrees are declared orthogonal."""
        self._require_same_space(other)
        if (self.p, self.q) != (other.p, other.q):
            return _ZERO
        total = _ZERO
        for ra, rb in zip(self.coeffs, other.coeffs):
            for a, b in zip(ra, rb):
                if a and b:
                    total += a * b
        return total

    def norm_sq(self) -> Fraction:
        return self.inner(self)

    def hodge(self) -> "DoubleForm":
        """Factor-wise Hodge star, D^{p,q} -> D^{n-p,n-q}.

        Satisfies **w = (-1)^((p+q)(n-p-q)) w and the metric-contraction
        duality g w = (-1)^(n(p+q)) *c*w, whose sign is +1 on every
        even-total bidegree (all square ones in particular).
        """
        n = self.n
        out = DoubleForm(n, n - self.p, n - self.q)
        row_rank = _mask_rank_table(n, n - self.p)
        col_rank = _mask_rank_table(n, n - self.q)
        full = (1 << n) - 1
        rows = out.coeffs
        for mi, mj, value in self.entries():
            sign = complement_sign_mask(n, mi) * complement_sign_mask(n, mj)
            rows[row_rank[full ^ mi]][col_rank[full ^ mj]] = sign * value
        return out

    # -- symmetry and the Bianchi sum ---------------------------------------

    def transpose(self) -> "DoubleForm":
        """Swap the tensor factors: D^{p,q} -> D^{q,p}."""
        out = DoubleForm(self.n, self.q, self.p)
        out.coeffs = [list(col) for col in zip(*self.coeffs)]
        return out

    def is_symmetric(self) -> bool:
        if self.p != self.q:
            raise DegreeError(f"is_symmetric needs p == q, got ({self.p},{self.q})")
        c = self.coeffs
        size = len(c)
        return all(c[i][j] == c[j][i] for i in range(size) for j in range(i + 1, size))

    def bianchi_sum(self) -> "DoubleForm":
        """First Bianchi sum into D^{p+1, q-1}.

        B w (x_1 ^ ... ^ x_{p+1}, y...) = sum_j (-1)^j w(x_1 ^ ...^j^... , x_j ^ y...),
        with the hat marking omission; the zero form when q = 0 (or p = n).
        """
        n, p, q = self.n, self.p, self.q
        if q == 0:
            return DoubleForm(n, min(p + 1, n), 0)
        if p == n:
            return DoubleForm(n, n, q - 1)
        out = DoubleForm(n, p + 1, q - 1)
        row_rank = _mask_rank_table(n, p + 1)
        col_rank = _mask_rank_table(n, q - 1)
        rows = out.coeffs
        for mi, mj, value in self.entries():
            movable = mj & ~mi
            while movable:
                bit = movable & -movable
                movable ^= bit
                new_i = mi | bit
                new_j = mj ^ bit
                # slot of the moved index inside the enlarged first block is
                # 1-based; pulling it out of the second block costs one swap
                # per smaller remaining index.
                flips = (mi & (bit - 1)).bit_count() + 1 + (new_j & (bit - 1)).bit_count()
                signed = -value if flips & 1 else value
                rows[row_rank[new_i]][col_rank[new_j]] += signed
        return out

    # -- evaluation as a multilinear form -----------------------------------

    def evaluate(self, x_vectors, y_vectors) -> Fraction:
        """Value on (x_1 ^ ... ^ x_p, y_1 ^ ... ^ y_q) for rational vectors."""
        xs = [_coerce_vector(self.n, v) for v in x_vectors]
        ys = [_coerce_vector(self.n, v) for v in y_vectors]
        if len(xs) != self.p or len(ys) != self.q:
            raise DimensionMismatchError(
                f"need {self.p} x-vectors and {self.q} y-vectors, "
                f"got {len(xs)} and {len(ys)}"
            )
        row_dets = _wedge_coordinates(self.n, xs, self.p)
        col_dets = _wedge_coordinates(self.n, ys, self.q)
        total = _ZERO
        for row, rd in zip(self.coeffs, row_dets):
            if not rd:
                continue
            for value, cd in zip(row, col_dets):
                if value and cd:
                    total += value * rd * cd
        return total


def _coerce_vector(n: int, vector) -> list[Fraction]:
    vec = [as_scalar(v) for v in vector]
    if len(vec) != n:
        raise DimensionMismatchError(f"vector length {len(vec)} != ambient dimension {n}")
    return vec


def _wedge_coordinates(n: int, vectors, k: int) -> list[Fraction]:
    """Coordinates of v_1 ^ ... ^ v_k over the lex-ordered basis of Lambda^k."""
    out = []
    for mask in subset_masks(n, k):
        idx = mask_to_indices(mask)
        out.append(_det([[vec[i] for i in idx] for vec in vectors]))
    return out


def _det(rows) -> Fraction:
    """Determinant of a small square rational matrix by exact elimination."""
    size = len(rows)
    if size == 0:
        return Fraction(1)
    m = [list(r) for r in rows]
    det = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if m[r][col]), None)
        if pivot is None:
            return _ZERO
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = Fraction(1) / m[col][col]
        for r in range(col + 1, size):
            if m[r][col]:
                f = m[r][col] * inv
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return det


def _permutation_sign(perm) -> int:
    inversions = 0
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                inversions += 1
    return -1 if inversions & 1 else 1


# -- constructors -----------------------------------------------------------


def make_zero(n: int, p: int, q: int) -> DoubleForm:
    """The zero element of D^{p,q}."""
    return DoubleForm(n, p, q)


def make_basis(n: int, left, right) -> DoubleForm:
    """The basis element e_I (x) e_J."""
    i = left if isinstance(left, IndexSet) else IndexSet.from_indices(n, left)
    j = right if isinstance(right, IndexSet) else IndexSet.from_indices(n, right)
    if i.n != n or j.n != n:
        raise DimensionMismatchError("index sets must live over the given n")
    out = DoubleForm(n, i.k, j.k)
    out.coeffs[_mask_rank_table(n, i.k)[i.mask]][_mask_rank_table(n, j.k)[j.mask]] = Fraction(1)
    return out


def make_g(n: int) -> DoubleForm:
    """The metric tensor g = sum_i e_i (x) e_i in D^{1,1}."""
    out = DoubleForm(n, 1, 1)
    one = Fraction(1)
    for i in range(n):
        out.coeffs[i][i] = one
    return out


def make_scalar(n: int, value) -> DoubleForm:
    """A scalar as the corresponding (0,0)-form."""
    out = DoubleForm(n, 0, 0)
    out.coeffs[0][0] = as_scalar(value)
    return out


# -- independent evaluation oracle ------------------------------------------


def eval_oracle(left: DoubleForm, right: DoubleForm, x_vectors, y_vectors) -> Fraction:
    """Evaluate (left . right) on vector tuples by the raw permutation sum.

    This is the literal double shuffle sum with prefactor
    1/(p! r! s! q!), summing over all of S_{p+r} x S_{q+s}.  It never calls
    mul and exists solely as an independent cross-check of the product; it is
    exempt from any performance expectations.
    """
    left._require_same_space(right)
    xs = [_coerce_vector(left.n, v) for v in x_vectors]
    ys = [_coerce_vector(left.n, v) for v in y_vectors]
    p, r = left.p, right.p
    q, s = left.q, right.q
    if len(xs) != p + r or len(ys) != q + s:
        raise DimensionMismatchError(
            f"need {p + r} x-vectors and {q + s} y-vectors, got {len(xs)} and {len(ys)}"
        )
    prefactor = Fraction(1, factorial(p) * factorial(r) * factorial(s) * factorial(q))
    total = _ZERO
    for sigma in itertools.permutations(range(p + r)):
        sig_sign = _permutation_sign(sigma)
        left_x = [xs[i] for i in sigma[:p]]
        right_x = [xs[i] for i in sigma[p:]]
        for rho in itertools.permutations(range(q + s)):
            rho_sign = _permutation_sign(rho)
            value = left.evaluate(left_x, [ys[j] for j in rho[:q]])
            if value:
                value *= right.evaluate(right_x, [ys[j] for j in rho[q:]])
            if value:
                total += sig_sign * rho_sign * value
    return prefactor * total
