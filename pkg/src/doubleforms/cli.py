"""Command-line front end.

Commands:
  invariants --spec FILE --max-q Q [--format json|table]
  pq         --spec FILE --p P --q Q --plane i,j,... [--format json|table]
  decompose  --input FORM.json
  verify     --suite NAME [--n N] [--trials T] [--seed S]

Exit codes: 0 success, 1 identity failure, 2 usage or schema error.  Output
on stdout is byte-identical for identical inputs; timing goes to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import serialize, verify
from .core import DoubleFormError, IdentityError
from .curvature import (
    Frame,
    InvariantReport,
    SectionalSample,
    build_invariant_report,
    pq_sectional,
)
from .decomposition import decompose
from .serialize import SchemaError


def _load_json(path: str):
    try:
        with open(path, "rb") as handle:
            return json.load(handle)
    except OSError as exc:
        raise SchemaError(path, f"cannot read file: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SchemaError(path, f"malformed JSON: {exc}") from exc


def run_invariants(spec: serialize.ModelSpec, max_q: int) -> InvariantReport:
    """Invariant table for a model; trace identity asserted before emission."""
    tensor = serialize.build_curvature_tensor(spec)
    return build_invariant_report(tensor, max_q)


def _cmd_invariants(args) -> int:
    spec = serialize.model_spec_from_dict(_load_json(args.spec))
    report = run_invariants(spec, args.max_q)
    if args.format == "table":
        sys.stdout.write(serialize.report_to_table(report))
    else:
        sys.stdout.write(serialize.dumps_canonical(serialize.report_to_dict(report)))
    return 0


def _parse_plane(text: str) -> tuple[int, ...]:
    try:
        indices = tuple(int(part) for part in text.split(",") if part != "")
    except ValueError as exc:
        raise SchemaError("--plane", f"expected comma-separated integers, got {text!r}") from exc
    if not indices:
        raise SchemaError("--plane", "needs at least one index")
    return indices


def _cmd_pq(args) -> int:
    spec = serialize.model_spec_from_dict(_load_json(args.spec))
    tensor = serialize.build_curvature_tensor(spec)
    plane = _parse_plane(args.plane) if args.p > 0 else ()
    if args.p > 0 and len(plane) != args.p:
        raise SchemaError("--plane", f"expected {args.p} indices, got {len(plane)}")
    frame = Frame.coordinate(tensor.n, plane) if args.p > 0 else None
    value = pq_sectional(tensor, args.p, args.q, frame)
    report = InvariantReport(
        tensor.n, (), (SectionalSample(args.p, args.q, plane, value),), None
    )
    if args.format == "table":
        sys.stdout.write(serialize.report_to_table(report))
    else:
        sys.stdout.write(serialize.dumps_canonical(serialize.report_to_dict(report)))
    return 0


def _cmd_decompose(args) -> int:
    form = serialize.form_from_dict(_load_json(args.input))
    result = decompose(form)
    if result.reconstruct() != form:
        raise IdentityError("decomposition failed to reconstruct its input")
    sys.stdout.write(
        serialize.dumps_canonical(serialize.decomposition_to_dict(result))
    )
    return 0


def _cmd_verify(args) -> int:
    dims = [args.n] if args.n is not None else [4, 5]
    started = time.perf_counter()
    outcomes = [verify.run_verify(args.suite, n, args.trials, args.seed) for n in dims]
    elapsed = time.perf_counter() - started
    if len(outcomes) == 1:
        payload = outcomes[0].to_dict()
    else:
        payload = {"runs": [o.to_dict() for o in outcomes]}
    sys.stdout.write(serialize.dumps_canonical(payload))
    print(f"verify: {sum(o.cases for o in outcomes)} cases in {elapsed:.2f}s", file=sys.stderr)
    return 0 if all(o.ok for o in outcomes) else 1


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="doubleforms",
        description="Exact double-form algebra: curvature invariants and identity suites.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_inv = sub.add_parser("invariants", help="h_{2q} and T_{2q} tables for a model")
    p_inv.add_argument("--spec", required=True, help="model spec JSON file")
    p_inv.add_argument("--max-q", type=int, required=True, dest="max_q")
    p_inv.add_argument("--format", choices=("json", "table"), default="json")
    p_inv.set_defaults(func=_cmd_invariants)

    p_pq = sub.add_parser("pq", help="s_{(p,q)} on a coordinate plane")
    p_pq.add_argument("--spec", required=True)
    p_pq.add_argument("--p", type=int, required=True)
    p_pq.add_argument("--q", type=int, required=True)
    p_pq.add_argument("--plane", default="", help="comma-separated indices, e.g. 0,1")
    p_pq.add_argument("--format", choices=("json", "table"), default="json")
    p_pq.set_defaults(func=_cmd_pq)

    p_dec = sub.add_parser("decompose", help="effective components of a (p,p)-form")
    p_dec.add_argument("--input", required=True, help="DoubleForm JSON file")
    p_dec.set_defaults(func=_cmd_decompose)

    p_ver = sub.add_parser("verify", help="run an identity suite")
    p_ver.add_argument("--suite", required=True)
    p_ver.add_argument("--n", type=int, default=None, help="dimension (default: 4 and 5)")
    p_ver.add_argument("--trials", type=int, default=50)
    p_ver.add_argument("--seed", type=int, default=0)
    p_ver.set_defaults(func=_cmd_verify)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except verify.UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except IdentityError as exc:
        print(f"identity failure: {exc}", file=sys.stderr)
        return 1
    except DoubleFormError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
