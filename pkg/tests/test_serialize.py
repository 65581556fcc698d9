"""JSON schemas: canonical rationals, forms, model specs, reports."""

import json
import random
from fractions import Fraction

import pytest

from doubleforms import decompose, make_basis, make_g, make_zero
from doubleforms.core import IdentityError
from doubleforms.curvature import build_invariant_report
from doubleforms.serialize import (
    ModelSpec,
    SchemaError,
    build_curvature_tensor,
    decimal6,
    decomposition_from_dict,
    decomposition_to_dict,
    dumps_canonical,
    form_from_dict,
    form_to_dict,
    model_spec_from_dict,
    model_spec_to_dict,
    rational_from_str,
    rational_to_str,
    report_from_dict,
    report_to_dict,
    report_to_table,
)
from doubleforms.verify import random_bianchi, random_form

F = Fraction


def test_rational_strings():
    assert rational_to_str(F(3)) == "3"
    assert rational_to_str(F(-7, 2)) == "-7/2"
    assert rational_from_str("6/4") == F(3, 2)
    assert rational_from_str("-5") == F(-5)
    assert rational_from_str(4) == F(4)
    for bad in ("1/-2", "1.5", "", "a", "1/0", True, None):
        with pytest.raises(SchemaError):
            rational_from_str(bad)


def test_decimal_rendering():
    assert decimal6(F(6)) == "6"
    assert decimal6(F(1, 6)) == "0.166667"
    assert decimal6(F(-22, 7)) == "-3.14286"
    assert decimal6(F(10**40)) == "1.00000E+40"


def test_form_round_trip():
    rng = random.Random("serialize-form")
    for n, p, q in ((4, 2, 2), (5, 2, 1), (3, 0, 0), (4, 0, 2)):
        form = random_form(rng, n, p, q)
        data = form_to_dict(form)
        assert form_from_dict(data) == form
        # canonical emission is stable through JSON text
        text = dumps_canonical(data)
        assert form_from_dict(json.loads(text)) == form
    zero = make_zero(4, 2, 2)
    assert form_to_dict(zero)["entries"] == []
    assert form_from_dict(form_to_dict(zero)).is_zero()


def test_form_schema_errors():
    good = form_to_dict(make_g(3))
    for mutate, expected_bit in (
        (lambda d: d.pop("n"), "missing"),
        (lambda d: d.update(extra=1), "unknown"),
        (lambda d: d.update(n="3"), "integer"),
        (lambda d: d.update(p=7), "bidegree"),
        (lambda d: d["entries"].append([[0], [0], "1"]), "sorted"),
        (lambda d: d["entries"][0].append("x"), "expected"),
        (lambda d: d["entries"][0].__setitem__(0, [0, 1]), "indices"),
        (lambda d: d["entries"][0].__setitem__(2, "1/-1"), "denominator"),
        (lambda d: d["entries"][0].__setitem__(0, [3]), "range"),
        (lambda d: d["entries"][0].__setitem__(0, [0, 0]), "increasing"),
    ):
        data = json.loads(json.dumps(good))
        mutate(data)
        with pytest.raises(SchemaError) as err:
            form_from_dict(data)
        assert expected_bit.lower() in str(err.value).lower()


def test_schema_error_carries_field_path():
    data = form_to_dict(make_g(3))
    data["entries"][1][2] = "bogus"
    with pytest.raises(SchemaError) as err:
        form_from_dict(data, path="input")
    assert "input.entries[1][2]" in str(err.value)


def test_decomposition_round_trip():
    rng = random.Random("serialize-dec")
    d = decompose(random_bianchi(rng, 4, 2))
    data = decomposition_to_dict(d)
    back = decomposition_from_dict(data)
    assert back == d
    data["components"].pop()
    with pytest.raises(SchemaError):
        decomposition_from_dict(data)


def test_model_spec_parsing():
    spec = model_spec_from_dict({"model": "constant", "n": 4, "lambda": "1"})
    assert spec.curvature == F(1, 1)
    assert model_spec_from_dict(model_spec_to_dict(spec)) == spec
    hyper = model_spec_from_dict(
        {"model": "hypersurface", "eigenvalues": ["1", "1", "1", "0"]}
    )
    assert hyper.n == 4 and hyper.eigenvalues == (1, 1, 1, 0)
    assert build_curvature_tensor(hyper).form == build_curvature_tensor(
        model_spec_from_dict(model_spec_to_dict(hyper))
    ).form
    product = model_spec_from_dict(
        {
            "model": "product",
            "factors": [
                {"model": "constant", "n": 2, "lambda": "1"},
                {"model": "constant", "n": 2, "lambda": "1"},
            ],
        }
    )
    assert product.n == 4
    assert model_spec_from_dict(model_spec_to_dict(product)) == product
    conf = model_spec_from_dict(
        {"model": "conformally_flat", "h_matrix": [["1", "0"], ["0", "-1"]]}
    )
    assert conf.n == 2


def test_model_spec_schema_errors():
    cases = [
        ({}, "model"),
        ({"model": "torus"}, "unknown model"),
        ({"model": "constant", "n": 4}, "lambda"),
        ({"model": "constant", "n": 4, "lambda": "1/-2"}, "denominator"),
        ({"model": "hypersurface", "eigenvalues": []}, "at least one"),
        ({"model": "hypersurface", "eigenvalues": ["1"], "n": 3}, "eigenvalues"),
        ({"model": "conformally_flat", "h_matrix": [["1", "2"], ["0", "1"]]}, "symmetric"),
        ({"model": "conformally_flat", "h_matrix": [["1", "2"]]}, "columns"),
        ({"model": "product", "factors": [{"model": "constant", "n": 2, "lambda": "1"}]}, "two factors"),
        ({"model": "constant", "n": 4, "lambda": "1", "extra": 0}, "unknown"),
    ]
    for data, expected_bit in cases:
        with pytest.raises(SchemaError) as err:
            model_spec_from_dict(data)
        assert expected_bit.lower() in str(err.value).lower()


def test_explicit_model_requires_bianchi():
    good = form_to_dict(make_g(4).mul(make_g(4)))
    spec = model_spec_from_dict({"model": "explicit", "form": good})
    assert build_curvature_tensor(spec).p == 2
    bad_form = make_basis(4, (0, 1), (2, 3)) + make_basis(4, (2, 3), (0, 1))
    bad = model_spec_from_dict({"model": "explicit", "form": form_to_dict(bad_form)})
    with pytest.raises(SchemaError):
        build_curvature_tensor(bad)


def test_report_round_trip_and_trace_validation():
    from doubleforms import make_constant_curvature, make_product

    report = build_invariant_report(
        make_product(make_constant_curvature(2, 1), make_constant_curvature(2, 1)), 2
    )
    data = report_to_dict(report)
    back = report_from_dict(data)
    assert back.rows == report.rows
    assert back.h4_sign == report.h4_sign
    # tampering with a scalar invariant must fail the trace identity on load
    tampered = json.loads(json.dumps(data))
    tampered["invariants"][0]["h"] = "3"
    with pytest.raises(IdentityError):
        report_from_dict(tampered)


def test_report_table_rendering():
    from doubleforms import make_constant_curvature

    report = build_invariant_report(make_constant_curvature(4, 1), 2)
    table = report_to_table(report)
    assert "n = 4" in table
    assert "6" in table  # h_2 = h_4 = 6 on the unit sphere
    assert "T_2 nonzero entries:" in table
    assert "einstein" in table


def test_dumps_canonical_is_deterministic():
    payload = {"b": 1, "a": [3, 2], "nested": {"z": "1/2", "y": None}}
    assert dumps_canonical(payload) == dumps_canonical(json.loads(json.dumps(payload)))
    assert dumps_canonical(payload).endswith("\n")
