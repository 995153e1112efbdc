"""Command-line front end.

Every analysis command reads a group from ``--group FILE`` or builds the
counterexample group with ``--example P``.  ``--format record`` prints one
JSON object instead of text.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources

from trinv.action import effective_norm, orbit_data
from trinv.errors import TrinvError
from trinv.group import classify, example_generators, example_group
from trinv.invariants import DEFAULT_FALSIFY_DEGREE, hilbert_falsify, hilbert_function, hsop_check, invariant_basis
from trinv.parsing import dump_group_document, group_document, parse_group_file, parse_poly, parse_poly_list
from trinv.poly import render
from trinv import report
from trinv.verdict import classify_polynomiality


def fixture_path(name: str):
    return resources.files("trinv") / "fixtures" / name


def _load(args):
    if args.example is not None:
        return example_group(args.example)
    if args.group is None:
        raise TrinvError("one of --group or --example is required")
    return parse_group_file(args.group)


def cmd_order(args, g):
    return {"order": g.order}, f"|G| = {g.order}"


def cmd_classify(args, g):
    rows = []
    for m in g.elements:
        rc = classify(m)
        rows.append({"matrix": m.rows(), "class": rc.kind.value, "triangular": rc.triangular.value})
    text = "\n".join(f"{r['matrix']}  {r['class']}  {r['triangular']}" for r in rows)
    return {"elements": rows}, text


def cmd_invariants(args, g):
    basis = [render(f) for f in invariant_basis(g, args.degree)]
    text = f"degree {args.degree}: dimension {len(basis)}" + "".join(f"\n  {f}" for f in basis)
    return {"degree": args.degree, "dimension": len(basis), "basis": basis}, text


def cmd_hilbert(args, g):
    hf = hilbert_function(g, args.max_degree)
    return report.hilbert_record(hf), "dims: " + " ".join(map(str, hf.dims))


def cmd_norm(args, g):
    f = parse_poly(args.poly, g.p)
    data = orbit_data(g, f)
    norm = effective_norm(g, f)
    rec = {"poly": render(f), "stabilizer_order": data.stabilizer_order,
           "cosets": len(data.coset_reps), "norm": render(norm), "degree": norm.degree()}
    text = (f"|St| = {data.stabilizer_order}, {len(data.coset_reps)} cosets\n"
            f"EN = {rec['norm']}  (degree {rec['degree']})")
    return rec, text


def cmd_certify(args, g):
    polys = parse_poly_list(args.polys, g.p)
    cert = hsop_check(g, polys, args.nmax)
    return report.hsop_record(cert), report.hsop_text(cert)


def cmd_falsify(args, g):
    rep = hilbert_falsify(g, args.max_degree)
    return report.falsifier_record(rep), report.falsifier_text(rep)


def cmd_verdict(args, g):
    v = classify_polynomiality(g, cross_check=args.cross_check, falsify_degree=args.max_degree)
    return report.verdict_record(v), report.verdict_text(v)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="trinv", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group()
    src.add_argument("--group", help="group file (JSON, schema 1)")
    src.add_argument("--example", type=int, metavar="P", help="use the counterexample group over F_P")
    common.add_argument("--format", choices=["text", "record"], default="text")

    def add(name, func, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=func)
        return sp

    add("order", cmd_order, "size of the generated group")
    add("classify", cmd_classify, "reflection class of every element")
    add("invariants", cmd_invariants, "basis of invariants of one degree").add_argument(
        "--degree", type=int, required=True)
    add("hilbert", cmd_hilbert, "dimensions of invariant spaces").add_argument(
        "--max-degree", type=int, required=True)
    add("norm", cmd_norm, "effective norm of a polynomial").add_argument("--poly", required=True)
    sp = add("certify", cmd_certify, "check three invariants form a polynomial basis")
    sp.add_argument("--polys", required=True, help="three comma-separated polynomials")
    sp.add_argument("--nmax", type=int, default=None)
    add("falsify", cmd_falsify, "rule out degree triples via the Hilbert function").add_argument(
        "--max-degree", type=int, default=DEFAULT_FALSIFY_DEGREE)
    sp = add("verdict", cmd_verdict, "decide polynomiality of the invariant ring")
    sp.add_argument("--cross-check", action="store_true")
    sp.add_argument("--max-degree", type=int, default=DEFAULT_FALSIFY_DEGREE)

    ex = sub.add_parser("example", help="print the counterexample group file")
    ex.add_argument("--p", type=int, required=True)
    ex.set_defaults(func=None)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "example":
            example_group(args.p)
            doc = group_document(args.p, example_generators(args.p), f"D_p x Z_p counterexample, p={args.p}")
            print(dump_group_document(doc), end="")
            return 0
        g = _load(args)
        record, text = args.func(args, g)
    except (TrinvError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.format == "record":
        print(json.dumps({"command": args.command, **record}, sort_keys=True))
    else:
        print(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
