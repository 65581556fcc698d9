"""JSON schemas and deterministic rendering for forms, models, and reports.

Rationals travel as canonical lowest-term strings ("3", "-7/2"); denominators
must be positive.  Emission is byte-deterministic: sorted keys, fixed
indentation, entries in lexicographic cell order.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from math import comb

from .core import (
    BianchiRequiredError,
    DoubleForm,
    DoubleFormError,
    make_zero,
)
from .curvature import (
    CurvatureTensor,
    H4SignReport,
    InvariantReport,
    InvariantRow,
    SectionalSample,
    make_conformally_flat,
    make_constant_curvature,
    make_hypersurface,
    make_product,
)
from .decomposition import EffectiveDecomposition
from .exterior import IndexSet, mask_to_indices, _mask_rank_table


class SchemaError(ValueError):
    """Malformed input; the message carries the offending field path."""

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")


_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def rational_to_str(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def rational_from_str(text, path: str = "value") -> Fraction:
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str):
        raise SchemaError(path, f"expected a rational string, got {text!r}")
    if not _RATIONAL_RE.match(text):
        raise SchemaError(
            path,
            f"expected 'num' or 'num/den' with positive denominator, got {text!r}",
        )
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise SchemaError(path, "zero denominator")
    return Fraction(int(num), int(den)) if den else Fraction(int(num))


def decimal6(value: Fraction) -> str:
    """Six significant digits, exact decimal division (no float round trip)."""
    value = Fraction(value)
    with localcontext() as ctx:
        ctx.prec = 6
        return str(Decimal(value.numerator) / Decimal(value.denominator))


def dumps_canonical(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _expect_dict(obj, path: str) -> dict:
    if not isinstance(obj, dict):
        raise SchemaError(path, f"expected an object, got {type(obj).__name__}")
    return obj


def _expect_int(obj, path: str) -> int:
    if not isinstance(obj, int) or isinstance(obj, bool):
        raise SchemaError(path, f"expected an integer, got {obj!r}")
    return obj


def _expect_list(obj, path: str) -> list:
    if not isinstance(obj, list):
        raise SchemaError(path, f"expected an array, got {type(obj).__name__}")
    return obj


def _expect_keys(obj: dict, path: str, required: set[str], optional: set[str] = frozenset()):
    missing = required - obj.keys()
    if missing:
        raise SchemaError(path, f"missing required field(s): {sorted(missing)}")
    unknown = obj.keys() - required - optional
    if unknown:
        raise SchemaError(path, f"unknown field(s): {sorted(unknown)}")


# -- DoubleForm ---------------------------------------------------------------


def form_to_dict(form: DoubleForm) -> dict:
    entries = []
    for mask_i, mask_j, value in form.entries():
        entries.append(
            [list(mask_to_indices(mask_i)), list(mask_to_indices(mask_j)), rational_to_str(value)]
        )
    return {"n": form.n, "p": form.p, "q": form.q, "entries": entries}


def form_from_dict(obj, path: str = "form") -> DoubleForm:
    obj = _expect_dict(obj, path)
    _expect_keys(obj, path, {"n", "p", "q", "entries"})
    n = _expect_int(obj["n"], f"{path}.n")
    p = _expect_int(obj["p"], f"{path}.p")
    q = _expect_int(obj["q"], f"{path}.q")
    try:
        form = make_zero(n, p, q)
    except DoubleFormError as exc:
        raise SchemaError(path, str(exc)) from exc
    entries = _expect_list(obj["entries"], f"{path}.entries")
    row_rank = _mask_rank_table(n, p)
    col_rank = _mask_rank_table(n, q)
    last = None
    for index, entry in enumerate(entries):
        epath = f"{path}.entries[{index}]"
        entry = _expect_list(entry, epath)
        if len(entry) != 3:
            raise SchemaError(epath, f"expected [I, J, value], got {entry!r}")
        left = _read_index_set(entry[0], n, p, f"{epath}[0]")
        right = _read_index_set(entry[1], n, q, f"{epath}[1]")
        value = rational_from_str(entry[2], f"{epath}[2]")
        key = (row_rank[left.mask], col_rank[right.mask])
        if last is not None and key <= last:
            raise SchemaError(epath, "entries must be strictly sorted by (rank I, rank J)")
        last = key
        if value:
            form.coeffs[key[0]][key[1]] = value
    return form


def _read_index_set(obj, n: int, size: int, path: str) -> IndexSet:
    indices = _expect_list(obj, path)
    for i in indices:
        _expect_int(i, f"{path}[]")
    try:
        index_set = IndexSet.from_indices(n, indices)
    except ValueError as exc:
        raise SchemaError(path, str(exc)) from exc
    if index_set.k != size:
        raise SchemaError(path, f"expected {size} indices, got {index_set.k}")
    return index_set


# -- EffectiveDecomposition ----------------------------------------------------


def decomposition_to_dict(decomposition: EffectiveDecomposition) -> dict:
    return {
        "n": decomposition.n,
        "p": decomposition.p,
        "components": [form_to_dict(c) for c in decomposition.components],
    }


def decomposition_from_dict(obj, path: str = "decomposition") -> EffectiveDecomposition:
    obj = _expect_dict(obj, path)
    _expect_keys(obj, path, {"n", "p", "components"})
    n = _expect_int(obj["n"], f"{path}.n")
    p = _expect_int(obj["p"], f"{path}.p")
    comps = _expect_list(obj["components"], f"{path}.components")
    forms = tuple(
        form_from_dict(c, f"{path}.components[{k}]") for k, c in enumerate(comps)
    )
    try:
        return EffectiveDecomposition(n, p, forms)
    except DoubleFormError as exc:
        raise SchemaError(path, str(exc)) from exc


# -- ModelSpec ------------------------------------------------------------------


MODEL_KINDS = ("constant", "hypersurface", "conformally_flat", "product", "explicit")


@dataclass(frozen=True)
class ModelSpec:
    """Declarative description of a model curvature tensor."""

    model: str
    n: int
    curvature: Fraction | None = None
    eigenvalues: tuple[Fraction, ...] | None = None
    h_matrix: tuple[tuple[Fraction, ...], ...] | None = None
    factors: tuple["ModelSpec", ...] | None = None
    form: DoubleForm | None = None


def model_spec_from_dict(obj, path: str = "spec") -> ModelSpec:
    obj = _expect_dict(obj, path)
    if "model" not in obj:
        raise SchemaError(path, "missing required field(s): ['model']")
    kind = obj["model"]
    if kind not in MODEL_KINDS:
        raise SchemaError(f"{path}.model", f"unknown model kind {kind!r}; expected one of {MODEL_KINDS}")
    if kind == "constant":
        _expect_keys(obj, path, {"model", "n", "lambda"})
        n = _expect_int(obj["n"], f"{path}.n")
        lam = rational_from_str(obj["lambda"], f"{path}.lambda")
        return ModelSpec("constant", n, curvature=lam)
    if kind == "hypersurface":
        _expect_keys(obj, path, {"model", "eigenvalues"}, optional={"n"})
        raw = _expect_list(obj["eigenvalues"], f"{path}.eigenvalues")
        if not raw:
            raise SchemaError(f"{path}.eigenvalues", "needs at least one eigenvalue")
        eigen = tuple(
            rational_from_str(v, f"{path}.eigenvalues[{i}]") for i, v in enumerate(raw)
        )
        n = _expect_int(obj["n"], f"{path}.n") if "n" in obj else len(eigen)
        if n != len(eigen):
            raise SchemaError(f"{path}.n", f"n={n} but {len(eigen)} eigenvalues given")
        return ModelSpec("hypersurface", n, eigenvalues=eigen)
    if kind == "conformally_flat":
        _expect_keys(obj, path, {"model", "h_matrix"}, optional={"n"})
        raw = _expect_list(obj["h_matrix"], f"{path}.h_matrix")
        size = len(raw)
        matrix = []
        for i, row in enumerate(raw):
            row = _expect_list(row, f"{path}.h_matrix[{i}]")
            if len(row) != size:
                raise SchemaError(f"{path}.h_matrix[{i}]", f"expected {size} columns, got {len(row)}")
            matrix.append(
                tuple(rational_from_str(v, f"{path}.h_matrix[{i}][{j}]") for j, v in enumerate(row))
            )
        for i in range(size):
            for j in range(i + 1, size):
                if matrix[i][j] != matrix[j][i]:
                    raise SchemaError(f"{path}.h_matrix", f"matrix is not symmetric at ({i},{j})")
        n = _expect_int(obj["n"], f"{path}.n") if "n" in obj else size
        if n != size:
            raise SchemaError(f"{path}.n", f"n={n} but the matrix is {size}x{size}")
        return ModelSpec("conformally_flat", n, h_matrix=tuple(matrix))
    if kind == "product":
        _expect_keys(obj, path, {"model", "factors"}, optional={"n"})
        raw = _expect_list(obj["factors"], f"{path}.factors")
        if len(raw) < 2:
            raise SchemaError(f"{path}.factors", "a product needs at least two factors")
        factors = tuple(
            model_spec_from_dict(f, f"{path}.factors[{i}]") for i, f in enumerate(raw)
        )
        n = sum(f.n for f in factors)
        if "n" in obj and _expect_int(obj["n"], f"{path}.n") != n:
            raise SchemaError(f"{path}.n", f"n={obj['n']} but the factors sum to {n}")
        return ModelSpec("product", n, factors=factors)
    # explicit
    _expect_keys(obj, path, {"model", "form"}, optional={"n"})
    form = form_from_dict(obj["form"], f"{path}.form")
    if "n" in obj and _expect_int(obj["n"], f"{path}.n") != form.n:
        raise SchemaError(f"{path}.n", f"n={obj['n']} but the form lives over n={form.n}")
    return ModelSpec("explicit", form.n, form=form)


def model_spec_to_dict(spec: ModelSpec) -> dict:
    if spec.model == "constant":
        return {"model": "constant", "n": spec.n, "lambda": rational_to_str(spec.curvature)}
    if spec.model == "hypersurface":
        return {
            "model": "hypersurface",
            "n": spec.n,
            "eigenvalues": [rational_to_str(v) for v in spec.eigenvalues],
        }
    if spec.model == "conformally_flat":
        return {
            "model": "conformally_flat",
            "n": spec.n,
            "h_matrix": [[rational_to_str(v) for v in row] for row in spec.h_matrix],
        }
    if spec.model == "product":
        return {
            "model": "product",
            "n": spec.n,
            "factors": [model_spec_to_dict(f) for f in spec.factors],
        }
    return {"model": "explicit", "n": spec.n, "form": form_to_dict(spec.form)}


def build_curvature_tensor(spec: ModelSpec) -> CurvatureTensor:
    """Instantiate the described model as a certified curvature tensor."""
    if spec.model == "constant":
        return make_constant_curvature(spec.n, spec.curvature)
    if spec.model == "hypersurface":
        shape = make_zero(spec.n, 1, 1)
        for i, value in enumerate(spec.eigenvalues):
            shape.coeffs[i][i] = value
        return make_hypersurface(shape)
    if spec.model == "conformally_flat":
        h = make_zero(spec.n, 1, 1)
        for i, row in enumerate(spec.h_matrix):
            for j, value in enumerate(row):
                h.coeffs[i][j] = value
        return make_conformally_flat(h)
    if spec.model == "product":
        tensors = [build_curvature_tensor(f) for f in spec.factors]
        result = tensors[0]
        for tensor in tensors[1:]:
            result = make_product(result, tensor)
        return result
    try:
        return CurvatureTensor(spec.form, certified_bianchi=True)
    except BianchiRequiredError as exc:
        raise SchemaError("spec.form", str(exc)) from exc
    except DoubleFormError as exc:
        raise SchemaError("spec.form", str(exc)) from exc


# -- InvariantReport -------------------------------------------------------------


def report_to_dict(report: InvariantReport) -> dict:
    out = {
        "n": report.n,
        "invariants": [
            {
                "q": row.q,
                "h": rational_to_str(row.weyl),
                "h_decimal": decimal6(row.weyl),
                "T": form_to_dict(row.einstein),
            }
            for row in report.rows
        ],
        "samples": [
            {
                "p": s.p,
                "q": s.q,
                "plane": list(s.plane),
                "value": rational_to_str(s.value),
                "value_decimal": decimal6(s.value),
            }
            for s in report.samples
        ],
    }
    if report.h4_sign is not None:
        out["h4_sign"] = {
            "h4": rational_to_str(report.h4_sign.h4),
            "h4_decimal": decimal6(report.h4_sign.h4),
            "classification": report.h4_sign.classification,
            "inequality_holds": report.h4_sign.inequality_holds,
        }
    else:
        out["h4_sign"] = None
    return out


def report_from_dict(obj, path: str = "report") -> InvariantReport:
    obj = _expect_dict(obj, path)
    _expect_keys(obj, path, {"n", "invariants", "samples", "h4_sign"})
    n = _expect_int(obj["n"], f"{path}.n")
    rows = []
    for i, row in enumerate(_expect_list(obj["invariants"], f"{path}.invariants")):
        rpath = f"{path}.invariants[{i}]"
        row = _expect_dict(row, rpath)
        _expect_keys(row, rpath, {"q", "h", "h_decimal", "T"})
        rows.append(
            InvariantRow(
                _expect_int(row["q"], f"{rpath}.q"),
                rational_from_str(row["h"], f"{rpath}.h"),
                form_from_dict(row["T"], f"{rpath}.T"),
            )
        )
    samples = []
    for i, sample in enumerate(_expect_list(obj["samples"], f"{path}.samples")):
        spath = f"{path}.samples[{i}]"
        sample = _expect_dict(sample, spath)
        _expect_keys(sample, spath, {"p", "q", "plane", "value", "value_decimal"})
        samples.append(
            SectionalSample(
                _expect_int(sample["p"], f"{spath}.p"),
                _expect_int(sample["q"], f"{spath}.q"),
                tuple(_expect_int(v, f"{spath}.plane[]") for v in _expect_list(sample["plane"], f"{spath}.plane")),
                rational_from_str(sample["value"], f"{spath}.value"),
            )
        )
    h4_sign = None
    if obj["h4_sign"] is not None:
        hpath = f"{path}.h4_sign"
        hobj = _expect_dict(obj["h4_sign"], hpath)
        _expect_keys(hobj, hpath, {"h4", "h4_decimal", "classification", "inequality_holds"})
        h4_sign = H4SignReport(
            rational_from_str(hobj["h4"], f"{hpath}.h4"),
            hobj["classification"],
            hobj["inequality_holds"],
        )
    report = InvariantReport(n, tuple(rows), tuple(samples), h4_sign)
    report.validate_trace()  # emitted reports must re-validate on load
    return report


def report_to_table(report: InvariantReport) -> str:
    """Plain-text rendering with rationals and a 6-significant-digit column."""
    lines = [f"n = {report.n}", "", "q    h_{2q}            h_{2q} (decimal)"]
    for row in report.rows:
        lines.append(f"{row.q:<4} {rational_to_str(row.weyl):<17} {decimal6(row.weyl)}")
    for row in report.rows:
        lines.append("")
        lines.append(f"T_{2 * row.q} nonzero entries:")
        empty = True
        for mask_i, mask_j, value in row.einstein.entries():
            i = mask_to_indices(mask_i)[0]
            j = mask_to_indices(mask_j)[0]
            lines.append(f"  T[{i},{j}] = {rational_to_str(value):<14} {decimal6(value)}")
            empty = False
        if empty:
            lines.append("  (zero)")
    if report.samples:
        lines.append("")
        lines.append("p    q    plane           s_{(p,q)}         (decimal)")
        for s in report.samples:
            plane = ",".join(str(i) for i in s.plane)
            lines.append(
                f"{s.p:<4} {s.q:<4} {plane:<15} {rational_to_str(s.value):<17} {decimal6(s.value)}"
            )
    if report.h4_sign is not None:
        lines.append("")
        sign = report.h4_sign
        holds = "n/a" if sign.inequality_holds is None else str(sign.inequality_holds).lower()
        lines.append(
            f"h_4 = {rational_to_str(sign.h4)} ({decimal6(sign.h4)}); "
            f"classification: {sign.classification}; sign theorem holds: {holds}"
        )
    return "\n".join(lines) + "\n"
