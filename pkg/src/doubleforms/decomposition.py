"""Orthogonal decomposition of D^{p,p} into effective components.

Every square-bidegree double form splits orthogonally as

    w = w_p + g.w_{p-1} + g^2.w_{p-2} + ... + g^p.w_0,

where each w_k lives in E^{k,k} = Ker c (the effective forms) and the
projections have a closed form in powers of g and c, no linear solving
involved.  For the Riemann curvature tensor this is the classical
Weyl / traceless-Ricci / scalar split, and w_p is the conformal (Weyl)
component.

When 2p > n the closed-form coefficients are not defined, but multiplication
by g^{2p-n} is an isomorphism from D^{n-p,n-p} onto D^{p,p}; decompose then
divides out the forced g-power by exact linear solving and decomposes the
quotient, so the same entry point covers every p.

The module also carries the closed-form Hodge star on first-Bianchi tensors
(contractions only, no complement signs), its expression through effective
components, and the exact rank of multiplication by g-powers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from . import linalg
from .core import (
    BianchiRequiredError,
    DegreeError,
    DoubleForm,
    DoubleFormError,
    make_zero,
)


@dataclass(frozen=True)
class EffectiveDecomposition:
    """Components [w_0, ..., w_p] with w_k effective in D^{k,k}."""

    n: int
    p: int
    components: tuple[DoubleForm, ...]

    def __post_init__(self) -> None:
        if len(self.components) != self.p + 1:
            raise DegreeError(
                f"need {self.p + 1} components for degree {self.p}, "
                f"got {len(self.components)}"
            )
        for k, comp in enumerate(self.components):
            if comp.n != self.n or (comp.p, comp.q) != (k, k):
                raise DegreeError(
                    f"component {k} must lie in D^({k},{k}) over n={self.n}, "
                    f"got ({comp.p},{comp.q}) over n={comp.n}"
                )

    def reconstruct(self) -> DoubleForm:
        """Sum of g^{p-k} . w_k, the inverse of decompose."""
        total = make_zero(self.n, self.p, self.p)
        for k, comp in enumerate(self.components):
            total = total + comp.mul_g_power(self.p - k)
        return total


def reconstruct(decomposition: EffectiveDecomposition) -> DoubleForm:
    return decomposition.reconstruct()


def is_effective(form: DoubleForm) -> bool:
    """Whether the contraction annihilates the form (w in Ker c)."""
    return form.contract().is_zero()


def _iter_contract(form: DoubleForm, times: int) -> DoubleForm:
    for _ in range(times):
        form = form.contract()
    return form


def decompose(form: DoubleForm) -> EffectiveDecomposition:
    """Split w in D^{p,p} into effective components.

    Closed form for 2p <= n:

        w_k = (n-p-k)!/((p-k)!(n-2k)!) [ c^{p-k} w
              + sum_{r=1}^{k} (-1)^r / prod_{i=0}^{r-1}(n-2k+2+i)
                              (g^r / r!) c^{p-k+r} w ].
    """
    if form.p != form.q:
        raise DegreeError(f"decompose needs p == q, got ({form.p},{form.q})")
    n, p = form.n, form.p
    if 2 * p > n:
        quotient = divide_g_power(form, 2 * p - n)
        inner = decompose(quotient)
        padded = list(inner.components)
        padded += [make_zero(n, k, k) for k in range(n - p + 1, p + 1)]
        return EffectiveDecomposition(n, p, tuple(padded))
    contractions = [form]
    for _ in range(p):
        contractions.append(contractions[-1].contract())
    components = []
    for k in range(p + 1):
        lead = Fraction(factorial(n - p - k), factorial(p - k) * factorial(n - 2 * k))
        acc = contractions[p - k]
        for r in range(1, k + 1):
            denominator = factorial(r)
            for i in range(r):
                denominator *= n - 2 * k + 2 + i
            term = contractions[p - k + r].mul_g_power(r)
            acc = acc + term.scale(Fraction((-1) ** r, denominator))
        components.append(acc.scale(lead))
    return EffectiveDecomposition(n, p, tuple(components))


def project_conformal(form: DoubleForm) -> DoubleForm:
    """The top effective component w_p (the Weyl part for curvature tensors)."""
    return decompose(form).components[form.p]


# -- multiplication by g-powers as a matrix ----------------------------------


def _cell_index(n: int, p: int, q: int, row: int, col: int) -> int:
    return row * comb(n, q) + col


def g_power_matrix(n: int, p: int, q: int, power: int) -> list[list[int]]:
    """Matrix of w -> g^power . w from D^{p,q} to D^{p+power,q+power}.

    Rows are target cells, columns source basis elements, both in
    lexicographic cell order.  Entries are integers.
    """
    if not (0 <= p <= n and 0 <= q <= n):
        raise DegreeError(f"bidegree ({p},{q}) out of range for n={n}")
    if power < 0:
        raise DegreeError(f"g-power must be nonnegative, got {power}")
    source_dim = comb(n, p) * comb(n, q)
    if p + power > n or q + power > n:
        return [[0] * source_dim]
    target_dim = comb(n, p + power) * comb(n, q + power)
    matrix = [[0] * source_dim for _ in range(target_dim)]
    from .core import make_basis
    from .exterior import subset_masks, _mask_rank_table

    row_rank = _mask_rank_table(n, p + power)
    col_rank = _mask_rank_table(n, q + power)
    col = 0
    for mask_i in subset_masks(n, p):
        for mask_j in subset_masks(n, q):
            image = make_basis(
                n,
                _indices(mask_i),
                _indices(mask_j),
            ).mul_g_power(power)
            for mi, mj, value in image.entries():
                cell = _cell_index(n, p + power, q + power, row_rank[mi], col_rank[mj])
                matrix[cell][col] = int(value)
            col += 1
    return matrix


def _indices(mask: int) -> tuple[int, ...]:
    from .exterior import mask_to_indices

    return mask_to_indices(mask)


def map_rank(n: int, p: int, q: int, power: int) -> int:
    """Exact rank of multiplication by g^power on D^{p,q}.

    Full source dimension exactly when p + q + power <= n (injectivity),
    full target dimension exactly when the map is onto.
    """
    return linalg.rank(g_power_matrix(n, p, q, power))


def divide_g_power(form: DoubleForm, power: int) -> DoubleForm:
    """The unique x with g^power . x = form, when the division is forced.

    Used for 2p > n where multiplication by g^{2p-n} from D^{n-p,n-p} is an
    isomorphism; raises if no exact preimage exists.
    """
    n = form.n
    source_p, source_q = form.p - power, form.q - power
    if source_p < 0 or source_q < 0:
        raise DegreeError(f"cannot divide a ({form.p},{form.q})-form by g^{power}")
    matrix = g_power_matrix(n, source_p, source_q, power)
    rhs = [value for row in form.coeffs for value in row]
    solution = linalg.solve(matrix, rhs)
    if solution is None:
        raise DoubleFormError(f"form is not divisible by g^{power}")
    cols = comb(n, source_q)
    out = make_zero(n, source_p, source_q)
    for index, value in enumerate(solution):
        out.coeffs[index // cols][index % cols] = value
    return out


# -- closed-form Hodge star on Bianchi tensors --------------------------------


def _require_bianchi_symmetric(form: DoubleForm, who: str) -> None:
    if form.p != form.q:
        raise DegreeError(f"{who} needs a square bidegree, got ({form.p},{form.q})")
    if not form.is_symmetric():
        raise BianchiRequiredError(f"{who} needs a symmetric form")
    if not form.bianchi_sum().is_zero():
        raise BianchiRequiredError(f"{who} needs the first Bianchi identity to hold")


def star_bianchi(form: DoubleForm, k: int) -> DoubleForm:
    """star(g^{k-p} w) / (k-p)! through contractions only, for Bianchi w.

    Equals  sum_{r=max(0,p-n+k)}^{p} (-1)^{r+p}/r! g^{n-k-p+r}/(n-k-p+r)! c^r w
    and must agree with the direct Hodge star; validates the symmetry and
    Bianchi preconditions eagerly since the identity does not hold without
    them.
    """
    _require_bianchi_symmetric(form, "star_bianchi")
    n, p = form.n, form.p
    if not 1 <= p <= k <= n:
        raise DegreeError(f"need 1 <= p <= k <= n, got p={p}, k={k}, n={n}")
    contractions = [form]
    for _ in range(p):
        contractions.append(contractions[-1].contract())
    result = make_zero(n, n - k, n - k)
    for r in range(max(0, p - n + k), p + 1):
        coefficient = Fraction(
            (-1) ** (r + p), factorial(r) * factorial(n - k - p + r)
        )
        result = result + contractions[r].mul_g_power(n - k - p + r).scale(coefficient)
    return result


def star_in_components(
    decomposition: EffectiveDecomposition, g_power: int = 0
) -> DoubleForm:
    """star(g^l w) assembled from the effective components of w.

        star(g^l w) = sum_{i=0}^{min(p, n-p-l)}
                      (p-i+l)! (-1)^i / (n-p-l-i)!  g^{n-p-l-i} . w_i

    Requires every component to be symmetric, Bianchi, and effective, which
    is what decompose produces from a symmetric Bianchi input.
    """
    n, p = decomposition.n, decomposition.p
    if g_power < 0:
        raise DegreeError(f"g-power must be nonnegative, got {g_power}")
    for k, comp in enumerate(decomposition.components):
        if k == 0:
            continue
        _require_bianchi_symmetric(comp, "star_in_components (component)")
        if not is_effective(comp):
            raise BianchiRequiredError(
                f"star_in_components needs effective components; "
                f"component {k} has a nonzero contraction"
            )
    target = max(n - p - g_power, 0)
    result = make_zero(n, target, target)
    upper = min(p, n - p - g_power)
    for i in range(0, upper + 1):
        coefficient = Fraction(
            factorial(p - i + g_power) * (-1) ** i, factorial(n - p - g_power - i)
        )
        term = decomposition.components[i].mul_g_power(n - p - g_power - i)
        result = result + term.scale(coefficient)
    return result
