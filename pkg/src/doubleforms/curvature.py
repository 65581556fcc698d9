"""Curvature structures and their invariants over one tangent space.

Everything is pointwise linear algebra: a curvature tensor is a symmetric
square-bidegree double form satisfying the first Bianchi identity, the
stand-in for the Riemann tensor and its Gauss-Kronecker powers.  On top of
the double-form algebra this module provides

* model constructors: constant sectional curvature (lambda/2 g^2),
  hypersurfaces of Euclidean space (B^2/2 by the Gauss equation),
  conformally flat models (g.h), and Riemannian products;
* sectional curvatures of arbitrary tensors on rational frames, with Gram
  normalization standing in for orthonormal bases;
* the (p,q)-curvature tensors star(g^{n-2q-p} R^q)/(n-2q-p)!, whose
  sectional curvatures specialize to the p-curvatures (q=1), to the scalar
  invariants h_{2q} (p=0), and to generalized Einstein tensors (p=1);
* the alternating-contraction pairing that computes star(w.t) on middle
  bidegree, and the sign classification of h_4 for Einstein and conformally
  flat scalar-flat tensors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .core import (
    BianchiRequiredError,
    DegreeError,
    DoubleForm,
    DoubleFormError,
    IdentityError,
    as_scalar,
    make_g,
    make_scalar,
    make_zero,
)
from .decomposition import decompose
from .exterior import subset_masks, mask_to_indices, _mask_rank_table


@dataclass(frozen=True)
class CurvatureTensor:
    """A symmetric (p,p) double form, optionally certified Bianchi.

    Certification is verified eagerly: constructing with
    certified_bianchi=True checks B(form) == 0 exactly.
    """

    form: DoubleForm
    certified_bianchi: bool = True

    def __post_init__(self) -> None:
        if self.form.p != self.form.q:
            raise DegreeError(
                f"curvature tensors need p == q, got ({self.form.p},{self.form.q})"
            )
        if not self.form.is_symmetric():
            raise DoubleFormError("curvature tensors must be symmetric")
        if self.certified_bianchi and not self.form.bianchi_sum().is_zero():
            raise BianchiRequiredError(
                "form does not satisfy the first Bianchi identity"
            )

    @property
    def n(self) -> int:
        return self.form.n

    @property
    def p(self) -> int:
        return self.form.p


# -- model constructors -------------------------------------------------------


def make_constant_curvature(n: int, curvature) -> CurvatureTensor:
    """R = (lambda/2) g^2, the constant-sectional-curvature model."""
    if n < 2:
        raise DegreeError(f"constant curvature models need n >= 2, got {n}")
    lam = as_scalar(curvature)
    form = make_g(n).mul(make_g(n)).scale(lam / 2)
    return CurvatureTensor(form)


def make_hypersurface(second_fundamental: DoubleForm) -> CurvatureTensor:
    """R = B^2/2 for a symmetric shape operator B, per the Gauss equation."""
    b = second_fundamental
    if (b.p, b.q) != (1, 1):
        raise DegreeError(f"the shape operator must be a (1,1)-form, got ({b.p},{b.q})")
    if not b.is_symmetric():
        raise DoubleFormError("the shape operator must be symmetric")
    return CurvatureTensor(b.mul(b).scale(Fraction(1, 2)))


def make_conformally_flat(h: DoubleForm) -> CurvatureTensor:
    """R = g.h for a symmetric (1,1)-form h (vanishing Weyl part)."""
    if (h.p, h.q) != (1, 1):
        raise DegreeError(f"the conformal factor must be a (1,1)-form, got ({h.p},{h.q})")
    if not h.is_symmetric():
        raise DoubleFormError("the conformal factor must be symmetric")
    return CurvatureTensor(make_g(h.n).mul(h))


def make_product(first: CurvatureTensor, second: CurvatureTensor) -> CurvatureTensor:
    """Curvature of a Riemannian product: disjoint embeddings summed.

    The first factor keeps indices [0, n1), the second moves to [n1, n1+n2).
    """
    if first.p != second.p:
        raise DegreeError(
            f"product factors must share the degree, got {first.p} and {second.p}"
        )
    n = first.n + second.n
    total = _embed(first.form, n, 0) + _embed(second.form, n, first.n)
    return CurvatureTensor(
        total, first.certified_bianchi and second.certified_bianchi
    )


def _embed(form: DoubleForm, n_total: int, offset: int) -> DoubleForm:
    out = make_zero(n_total, form.p, form.q)
    row_rank = _mask_rank_table(n_total, form.p)
    col_rank = _mask_rank_table(n_total, form.q)
    for mask_i, mask_j, value in form.entries():
        out.coeffs[row_rank[mask_i << offset]][col_rank[mask_j << offset]] = value
    return out


def power(tensor: CurvatureTensor, exponent: int) -> CurvatureTensor:
    """The Gauss-Kronecker power R^q in the curvature algebra."""
    if not isinstance(exponent, int) or exponent < 1:
        raise DegreeError(f"power needs a positive integer exponent, got {exponent!r}")
    form = tensor.form
    for _ in range(exponent - 1):
        form = form.mul(tensor.form)
    return CurvatureTensor(form, tensor.certified_bianchi)


# -- frames and sectional curvature -------------------------------------------


class FrameError(DoubleFormError):
    """Degenerate or malformed tangent frame."""


@dataclass(frozen=True)
class Frame:
    """A spanning set of rational vectors for a tangent p-plane.

    Linear independence is equivalent to a nonzero Gram determinant, which
    equals the squared norm of the wedge of the vectors; sectional values
    divide by it, so any basis of the plane gives the orthonormal value.
    """

    n: int
    vectors: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        if not self.vectors:
            raise FrameError("a frame needs at least one vector")
        for vec in self.vectors:
            if len(vec) != self.n:
                raise FrameError(f"frame vectors must have length {self.n}")
        if not any(self.wedge_coordinates()):
            raise FrameError("frame vectors are linearly dependent")

    @classmethod
    def from_vectors(cls, n: int, vectors) -> "Frame":
        return cls(n, tuple(tuple(as_scalar(v) for v in vec) for vec in vectors))

    @classmethod
    def coordinate(cls, n: int, indices) -> "Frame":
        """The plane spanned by the listed standard basis vectors."""
        idx = tuple(indices)
        if len(set(idx)) != len(idx):
            raise FrameError(f"coordinate plane indices must be distinct, got {idx}")
        if any(not 0 <= i < n for i in idx):
            raise FrameError(f"coordinate index out of range [0, {n}): {idx}")
        vectors = tuple(
            tuple(Fraction(1) if j == i else Fraction(0) for j in range(n)) for i in idx
        )
        return cls(n, vectors)

    @property
    def size(self) -> int:
        return len(self.vectors)

    def wedge_coordinates(self) -> list[Fraction]:
        """Coordinates of v_1 ^ ... ^ v_p over the lexicographic basis."""
        from .core import _wedge_coordinates

        return _wedge_coordinates(self.n, [list(v) for v in self.vectors], self.size)

    def gram(self) -> Fraction:
        """Gram determinant = squared norm of the wedge of the vectors."""
        return sum(c * c for c in self.wedge_coordinates())

    def with_vector(self, vector) -> "Frame":
        """The frame extended by one more vector."""
        extra = tuple(as_scalar(v) for v in vector)
        return Frame(self.n, self.vectors + (extra,))


def orthogonal_complement(frame: Frame) -> Frame:
    """An exact basis of the orthogonal complement of the spanned plane.

    Rational Gram-Schmidt without normalization: residuals of the standard
    basis vectors against the plane (and each other).  For coordinate frames
    this returns the complementary coordinate vectors.
    """
    n = frame.n
    ortho = []
    for vec in frame.vectors:
        ortho.append(_residual(list(vec), ortho))
    complement = []
    for i in range(n):
        unit = [Fraction(1) if j == i else Fraction(0) for j in range(n)]
        residual = _residual(unit, ortho + complement)
        if any(residual):
            complement.append(residual)
    if len(complement) != n - frame.size:
        raise FrameError("frame vectors are linearly dependent")
    return Frame(n, tuple(tuple(v) for v in complement))


def _residual(vector, ortho_basis):
    for b in ortho_basis:
        num = sum(x * y for x, y in zip(vector, b))
        if num:
            den = sum(y * y for y in b)
            f = num / den
            vector = [x - f * y for x, y in zip(vector, b)]
    return vector


def sectional_curvature(form: DoubleForm, plane: Frame) -> Fraction:
    """K(P) = w(V, V) / <V, V> for V the wedge of the frame vectors."""
    if form.n != plane.n:
        raise DegreeError(
            f"form over n={form.n} cannot be evaluated on a frame over n={plane.n}"
        )
    if form.p != plane.size or form.q != plane.size:
        raise DegreeError(
            f"sectional curvature of a ({form.p},{form.q})-form needs a "
            f"{form.p}-plane, got {plane.size} vectors"
        )
    coords = plane.wedge_coordinates()
    gram = sum(c * c for c in coords)
    if not gram:
        raise FrameError("frame vectors are linearly dependent")
    value = Fraction(0)
    for row, ci in zip(form.coeffs, coords):
        if not ci:
            continue
        for entry, cj in zip(row, coords):
            if entry and cj:
                value += entry * ci * cj
    return value / gram


# -- the (p,q)-curvatures ------------------------------------------------------


def _require_pq_range(tensor: CurvatureTensor, p: int, q: int) -> None:
    n = tensor.n
    if not (isinstance(q, int) and 1 <= q and 2 * q <= n):
        raise DegreeError(f"need 1 <= q <= n/2, got q={q!r} at n={n}")
    if not (isinstance(p, int) and 0 <= p <= n - 2 * q):
        raise DegreeError(f"need 0 <= p <= n - 2q, got p={p!r} at n={n}, q={q}")


def pq_curvature_tensor(tensor: CurvatureTensor, p: int, q: int) -> DoubleForm:
    """star(g^{n-2q-p} R^q) / (n-2q-p)!, a symmetric Bianchi (p,p)-form."""
    _require_pq_range(tensor, p, q)
    n = tensor.n
    margin = n - 2 * q - p
    lifted = power(tensor, q).form.mul_g_power(margin)
    return lifted.hodge().scale(Fraction(1, factorial(margin)))


def pq_sectional(tensor: CurvatureTensor, p: int, q: int, plane: Frame | None) -> Fraction:
    """s_{(p,q)}(P), the sectional curvature of the (p,q)-curvature tensor."""
    if p == 0:
        if plane is not None:
            raise DegreeError("s_{(0,q)} is a scalar; pass plane=None")
        return weyl_invariant(tensor, q)
    if plane is None:
        raise DegreeError(f"s_({p},{q}) needs a {p}-plane")
    return sectional_curvature(pq_curvature_tensor(tensor, p, q), plane)


def weyl_invariant(tensor: CurvatureTensor, q: int) -> Fraction:
    """h_{2q} = c^{2q} R^q / (2q)!, the 2q-th scalar curvature invariant.

    h_2 is half the scalar curvature; for even n, h_n is the Gauss-Bonnet
    integrand up to the tube-formula normalization.
    """
    n = tensor.n
    if not (isinstance(q, int) and 1 <= q and 2 * q <= n):
        raise DegreeError(f"need 1 <= q <= n/2, got q={q!r} at n={n}")
    form = power(tensor, q).form
    for _ in range(2 * q):
        form = form.contract()
    return form.scalar_value() / factorial(2 * q)


def einstein_tensor(tensor: CurvatureTensor, q: int) -> DoubleForm:
    """T_{2q} = h_{2q} g - c^{2q-1} R^q / (2q-1)!, the 2q-Einstein tensor.

    For q=1 this is the classical Einstein tensor (c^2R/2) g - cR.  The
    contraction form is used rather than star(g^{n-2q-1} R^q)/(n-2q-1)!
    because it stays defined at 2q = n (where the trace is zero) and the two
    agree whenever 2q < n.
    """
    n = tensor.n
    if not (isinstance(q, int) and 1 <= q and 2 * q <= n):
        raise DegreeError(f"need 1 <= q <= n/2, got q={q!r} at n={n}")
    h = weyl_invariant(tensor, q)
    form = power(tensor, q).form
    for _ in range(2 * q - 1):
        form = form.contract()
    return h * make_g(n) - form.scale(Fraction(1, factorial(2 * q - 1)))


def p_curvature(tensor: CurvatureTensor, p: int, plane: Frame) -> Fraction:
    """s_p = s_{(p,1)}; half the scalar curvature at p=0, sectional at p=n-2."""
    return pq_sectional(tensor, p, 1, plane)


# -- alternating-contraction pairing ------------------------------------------


def avez_pairing(left: DoubleForm, right: DoubleForm) -> Fraction:
    """star(w.t) for middle-bidegree Bianchi forms, via contractions only.

        star(w.t) = sum_{r=0}^{p} (-1)^{r+p} / (r!)^2 <c^r w, c^r t>,  n = 2p.

    Specializing t = w = R at n = 4 gives h_4 = |R|^2 - |cR|^2 + |c^2R|^2/4.
    """
    left._require_same_space(right)
    if left.p != left.q or (left.p, left.q) != (right.p, right.q):
        raise DegreeError(
            f"the pairing needs equal square bidegrees, got "
            f"({left.p},{left.q}) and ({right.p},{right.q})"
        )
    p = left.p
    if left.n != 2 * p:
        raise DegreeError(f"the pairing needs n == 2p, got n={left.n}, p={p}")
    if not left.bianchi_sum().is_zero() or not right.bianchi_sum().is_zero():
        raise BianchiRequiredError("the pairing needs both forms to be Bianchi")
    total = Fraction(0)
    cl, cr = left, right
    for r in range(p + 1):
        if r:
            cl = cl.contract()
            cr = cr.contract()
        sign = (-1) ** (r + p)
        total += Fraction(sign, factorial(r) ** 2) * cl.inner(cr)
    return total


# -- predicates ----------------------------------------------------------------


def _require_riemann_like(tensor: CurvatureTensor, who: str) -> None:
    if tensor.p != 2:
        raise DegreeError(f"{who} applies to (2,2) curvature tensors, got p={tensor.p}")


def is_einstein(tensor: CurvatureTensor) -> bool:
    """Whether the Ricci contraction is proportional to the metric: cR = (c^2R/n) g."""
    _require_riemann_like(tensor, "is_einstein")
    ricci = tensor.form.contract()
    scalar = ricci.contract().scalar_value()
    return ricci == (scalar / tensor.n) * make_g(tensor.n)


def is_conformally_flat_algebraic(tensor: CurvatureTensor) -> bool:
    """Whether the effective degree-2 (Weyl) component vanishes.

    Meaningful for n >= 4; below that the Weyl component vanishes
    identically and the predicate is trivially true.
    """
    _require_riemann_like(tensor, "is_conformally_flat_algebraic")
    return decompose(tensor.form).components[2].is_zero()


def has_constant_sectional(form: DoubleForm, p: int) -> Fraction | None:
    """The constant c with w = c g^p/p!, or None if w is not of that shape."""
    if (form.p, form.q) != (p, p):
        raise DegreeError(f"expected a ({p},{p})-form, got ({form.p},{form.q})")
    model = make_scalar(form.n, 1).mul_g_power(p).scale(Fraction(1, factorial(p)))
    candidate = form.coeffs[0][0]  # model has value 1 on every diagonal cell
    return candidate if form == candidate * model else None


# -- reports -------------------------------------------------------------------


@dataclass(frozen=True)
class H4SignReport:
    """Sign classification for the second scalar invariant h_4."""

    h4: Fraction
    classification: str  # flat | einstein | conformally_flat_scalar_flat | hypothesis_not_met
    inequality_holds: bool | None


def sign_report_h4(tensor: CurvatureTensor) -> H4SignReport:
    """Evaluate h_4 against the applicable sign theorem, if any.

    Einstein tensors have h_4 >= 0 with equality only when flat; conformally
    flat tensors with zero scalar curvature have h_4 <= 0 with equality only
    when flat.  When neither hypothesis applies no sign claim is made.
    """
    _require_riemann_like(tensor, "sign_report_h4")
    if tensor.n < 4:
        raise DegreeError(f"h_4 needs n >= 4, got n={tensor.n}")
    h4 = weyl_invariant(tensor, 2)
    if tensor.form.is_zero():
        return H4SignReport(h4, "flat", h4 == 0)
    scalar = tensor.form.contract().contract().scalar_value()
    if is_einstein(tensor):
        return H4SignReport(h4, "einstein", h4 > 0)
    if scalar == 0 and is_conformally_flat_algebraic(tensor):
        return H4SignReport(h4, "conformally_flat_scalar_flat", h4 < 0)
    return H4SignReport(h4, "hypothesis_not_met", None)


@dataclass(frozen=True)
class InvariantRow:
    q: int
    weyl: Fraction
    einstein: DoubleForm


@dataclass(frozen=True)
class SectionalSample:
    p: int
    q: int
    plane: tuple[int, ...]
    value: Fraction


@dataclass(frozen=True)
class InvariantReport:
    """Invariants per q, with the trace identity revalidated on demand."""

    n: int
    rows: tuple[InvariantRow, ...]
    samples: tuple[SectionalSample, ...] = ()
    h4_sign: H4SignReport | None = None

    def validate_trace(self) -> None:
        """Check sum_i T_{2q}(e_i, e_i) == (n - 2q) h_{2q} for every row."""
        for row in self.rows:
            trace = row.einstein.contract().scalar_value()
            expected = (self.n - 2 * row.q) * row.weyl
            if trace != expected:
                raise IdentityError(
                    f"trace of T_{2 * row.q} is {trace}, expected {expected}"
                )


def build_invariant_report(
    tensor: CurvatureTensor,
    max_q: int,
    samples: tuple[SectionalSample, ...] = (),
) -> InvariantReport:
    """Invariants for q = 1..max_q; requires 2 max_q <= n."""
    n = tensor.n
    if not (isinstance(max_q, int) and 1 <= max_q and 2 * max_q <= n):
        raise DegreeError(f"need 1 <= max_q <= n/2, got max_q={max_q!r} at n={n}")
    rows = tuple(
        InvariantRow(q, weyl_invariant(tensor, q), einstein_tensor(tensor, q))
        for q in range(1, max_q + 1)
    )
    h4_sign = sign_report_h4(tensor) if n >= 4 else None
    report = InvariantReport(n, rows, samples, h4_sign)
    report.validate_trace()
    return report
