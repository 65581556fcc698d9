"""Orthonormal exterior-basis combinatorics on R^n.

Basis k-vectors e_{i1} ^ ... ^ e_{ik} are labeled by strictly increasing
index tuples, stored as bitmasks of width n, and ordered lexicographically
within each (n, k) stratum.  Lexicographic order is the single canonical
order used for array layout and serialization throughout the package.

All signs the double-form algebra needs come from two primitives: the sign
of a shuffle merging two disjoint index sets (wedge products) and the sign
of an index set against its complement (Hodge star).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb

# Coefficient arrays grow like C(n,p)*C(n,q); by n = 16 a single (8,8) plane
# already has ~1.6e8 cells, so larger n is refused outright.
MAX_DIMENSION = 16


class BasisError(ValueError):
    """Invalid ambient dimension or index set."""


def _check_dimension(n: int) -> None:
    if not isinstance(n, int) or not 1 <= n <= MAX_DIMENSION:
        raise BasisError(
            f"ambient dimension must be an integer in [1, {MAX_DIMENSION}], got {n!r}"
        )


def mask_to_indices(mask: int) -> tuple[int, ...]:
    """Bit positions of a mask, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


@lru_cache(maxsize=None)
def subset_masks(n: int, k: int) -> tuple[int, ...]:
    """All k-subsets of [0, n) as bitmasks, in lexicographic index order."""
    _check_dimension(n)
    if not 0 <= k <= n:
        raise BasisError(f"subset size must be in [0, {n}], got {k!r}")
    return tuple(
        sum(1 << i for i in combo) for combo in itertools.combinations(range(n), k)
    )


@lru_cache(maxsize=None)
def _mask_rank_table(n: int, k: int) -> dict[int, int]:
    return {mask: r for r, mask in enumerate(subset_masks(n, k))}


def mask_rank(n: int, mask: int) -> int:
    """Lexicographic rank of a subset mask among subsets of the same size."""
    return _mask_rank_table(n, mask.bit_count())[mask]


def wedge_sign_masks(a: int, b: int) -> int:
    """Sign of e_A ^ e_B relative to e_{A|B}; 0 when A and B intersect.

    The sign is the parity of the number of transpositions sorting the
    concatenation (A ascending, B ascending), i.e. (-1)^{#{(x,y) in AxB : x > y}}.
    """
    if a & b:
        return 0
    inversions = 0
    rest = b
    while rest:
        low = rest & -rest
        rest ^= low
        inversions += (a >> low.bit_length()).bit_count()
    return -1 if inversions & 1 else 1


def complement_sign_mask(n: int, a: int) -> int:
    """Sign s with e_A ^ e_{A^c} = s * e_0 ^ ... ^ e_{n-1}."""
    return wedge_sign_masks(a, ((1 << n) - 1) ^ a)


@dataclass(frozen=True)
class IndexSet:
    """A strictly increasing tuple of basis indices in [0, n), as a bitmask."""

    n: int
    mask: int

    def __post_init__(self) -> None:
        _check_dimension(self.n)
        if not isinstance(self.mask, int) or self.mask < 0 or self.mask >> self.n:
            raise BasisError(f"index mask {self.mask!r} out of range for n={self.n}")

    @classmethod
    def from_indices(cls, n: int, indices) -> "IndexSet":
        idx = tuple(indices)
        _check_dimension(n)
        for i in idx:
            if not isinstance(i, int) or not 0 <= i < n:
                raise BasisError(f"index {i!r} out of range [0, {n})")
        if any(b <= a for a, b in zip(idx, idx[1:])):
            raise BasisError(f"indices must be strictly increasing, got {idx}")
        return cls(n, sum(1 << i for i in idx))

    @property
    def indices(self) -> tuple[int, ...]:
        return mask_to_indices(self.mask)

    @property
    def k(self) -> int:
        return self.mask.bit_count()

    def __len__(self) -> int:
        return self.k

    def complement(self) -> "IndexSet":
        return IndexSet(self.n, ((1 << self.n) - 1) ^ self.mask)

    def __repr__(self) -> str:
        return f"IndexSet(n={self.n}, indices={self.indices})"


def rank(index_set: IndexSet) -> int:
    """Lexicographic rank of a k-subset among all k-subsets of [0, n).

    Computed arithmetically (combinatorial number system); agrees with the
    position in subset_masks, which enumerates via itertools.
    """
    n = index_set.n
    idx = index_set.indices
    k = len(idx)
    r = 0
    prev = -1
    for t, i in enumerate(idx):
        for v in range(prev + 1, i):
            r += comb(n - 1 - v, k - t - 1)
        prev = i
    return r


def unrank(n: int, k: int, r: int) -> IndexSet:
    """Inverse of rank: the r-th k-subset of [0, n) in lexicographic order."""
    masks = subset_masks(n, k)
    if not 0 <= r < len(masks):
        raise BasisError(f"rank {r!r} out of range [0, {len(masks)})")
    return IndexSet(n, masks[r])


def wedge_sign(left: IndexSet, right: IndexSet) -> tuple[int, IndexSet]:
    """Sign and merged index set of e_I ^ e_K; sign 0 when I and K overlap."""
    if left.n != right.n:
        raise BasisError("wedge_sign requires index sets over the same n")
    return (
        wedge_sign_masks(left.mask, right.mask),
        IndexSet(left.n, left.mask | right.mask),
    )


def complement_sign(index_set: IndexSet) -> tuple[int, IndexSet]:
    """Sign s and complement I^c with star(e_I) = s * e_{I^c}."""
    return complement_sign_mask(index_set.n, index_set.mask), index_set.complement()
