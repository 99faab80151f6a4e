"""Command-line front end.

Verbs: dim, basis, eval, verify, specht, faithful, gram, moebius, labels.
Exit codes: 0 on success/pass, 1 on verification failure, 2 on usage or
parse errors.  ``--json`` switches every verb to machine-readable output;
``--seed`` fixes the randomized checks.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from .algebra_core import (
    AlgebraElement,
    basis_keys,
    dimension,
    form,
    format_element,
    format_key,
    verify_relations,
)
from .combinatorics import enumerate_labels
from .exactmath import row_reduce
from .parsing import ParseError, parse_word
from .specht import classification_report, specht_module
from .tensor_rep import faithfulness_certificate, tensor_relation_report

# default resource guards; n! * Bell(n) growth makes larger n impractical
_SYMBOLIC_GUARD = 6
_MODULE_GUARD = 4
_GRAM_GUARD = 3

_DEFAULT_SEED = 0


def _guard(n: int, limit: int, verb: str, force: bool):
    if n < 1:
        raise SystemExit2("n must be at least 1")
    if n > limit and not force:
        raise SystemExit2(
            "%s is guarded to n <= %d (basis size grows as n!*Bell(n)); "
            "pass --force to override" % (verb, limit)
        )


class SystemExit2(Exception):
    """Usage-level error: reported on stderr with exit code 2."""


def _emit(report, as_json: bool, text_lines):
    if as_json:
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _label_json(label):
    return [
        {"lambda": list(lam), "m": m, "mu": list(mu)} for lam, m, mu in label
    ]


def _cmd_dim(args) -> int:
    _guard(args.n, _SYMBOLIC_GUARD, "dim", args.force)
    d = dimension(args.n)
    _emit({"n": args.n, "dimension": d}, args.json, [str(d)])
    return 0


def _cmd_basis(args) -> int:
    _guard(args.n, _SYMBOLIC_GUARD, "basis", args.force)
    keys = basis_keys(args.n)
    names = [format_key(a, w) for a, w in keys]
    _emit(
        {"n": args.n, "size": len(names), "basis": names}, args.json, names
    )
    return 0


def _cmd_eval(args) -> int:
    _guard(args.n, _SYMBOLIC_GUARD, "eval", args.force)
    el = parse_word(args.expr, args.n)
    _emit(
        {"n": args.n, "expr": args.expr, "value": el.to_json()},
        args.json,
        [format_element(el)],
    )
    return 0


def _cmd_verify(args) -> int:
    _guard(args.n, _SYMBOLIC_GUARD, "verify", args.force)
    if args.tensor:
        report = tensor_relation_report(args.n, random.Random(args.seed))
    else:
        report = verify_relations(args.n)
    lines = [
        "%s: %s" % (d["relation"], "pass" if d["pass"] else "FAIL")
        for d in report["relations"]
        if not d["pass"]
    ]
    lines.append(
        "relations n=%d: %s (%d instances)"
        % (
            args.n,
            "all pass" if report["pass"] else "FAILURES above",
            len(report["relations"]),
        )
    )
    _emit(report, args.json, lines)
    return 0 if report["pass"] else 1


def _cmd_specht(args) -> int:
    _guard(args.n, _MODULE_GUARD, "specht", args.force)
    if args.label is not None:
        labels = enumerate_labels(args.n)
        if not 1 <= args.label <= len(labels):
            raise SystemExit2(
                "label index %d out of range 1..%d" % (args.label, len(labels))
            )
        label = labels[args.label - 1]
        mod = specht_module(label, args.n)
        report = {
            "n": args.n,
            "label": _label_json(label),
            "dim": mod.dim,
        }
        _emit(report, args.json, ["label %d: dim %d" % (args.label, mod.dim)])
        return 0
    report = classification_report(args.n)
    lines = []
    for i, (lab, d) in enumerate(zip(report["labels"], report["dims"]), 1):
        lines.append("%2d  %-40s dim %d" % (i, lab, d))
    lines.append(
        "sum of squares: %d  (algebra dimension %d)%s"
        % (
            report["sumSquares"],
            report["dimAlgebra"],
            "  -- equal" if report["equal"] else "",
        )
    )
    _emit(report, args.json, lines)
    return 0 if report["sumSquares"] <= report["dimAlgebra"] else 1


def _cmd_faithful(args) -> int:
    _guard(args.n, _MODULE_GUARD, "faithful", args.force)
    report = faithfulness_certificate(
        args.n, random.Random(args.seed), force=args.force
    )
    _emit(
        report,
        args.json,
        [
            "rank %d of expected %d: %s"
            % (
                report["rank"],
                report["expected"],
                "pass" if report["pass"] else "FAIL",
            )
        ],
    )
    return 0 if report["pass"] else 1


def _parse_point(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise SystemExit2("bad rational point %r: %s" % (text, exc))


def _cmd_gram(args) -> int:
    _guard(args.n, _GRAM_GUARD, "gram", args.force)
    point = Fraction(1) if args.u1 or args.at is None else _parse_point(args.at)
    keys = basis_keys(args.n)
    elements = [AlgebraElement.basis(a, w) for a, w in keys]
    rows = []
    for x in elements:
        row = {}
        for j, y in enumerate(elements):
            val = form(x, y).eval(point)
            if val:
                row[j] = val
        rows.append(row)
    rank = len(row_reduce(rows))
    report = {
        "n": args.n,
        "at": str(point),
        "size": len(keys),
        "rank": rank,
        "full_rank": rank == len(keys),
    }
    _emit(
        report,
        args.json,
        [
            "Gram matrix at u=%s: rank %d of %d (%s)"
            % (
                point,
                rank,
                len(keys),
                "full" if report["full_rank"] else "DEGENERATE",
            )
        ],
    )
    return 0 if report["full_rank"] else 1


def _cmd_moebius(args) -> int:
    from .algebra_core import moebius_coefficient
    from .combinatorics import sp_enumerate, sp_moebius, SetPartition

    _guard(args.n, _MODULE_GUARD, "moebius", args.force)
    top = SetPartition.top(args.n)
    entries = []
    lines = []
    ok = True
    for a in sp_enumerate(args.n):
        brute = moebius_coefficient(a)
        lattice = sp_moebius(a, top)
        agree = brute == lattice
        ok = ok and agree
        entries.append(
            {
                "A0": a.to_json(),
                "brute": str(brute),
                "lattice_moebius": str(lattice),
                "agree": agree,
            }
        )
        lines.append(
            "%-24s coeff %-8s mu(A0,top) %-8s %s"
            % (a, brute, lattice, "ok" if agree else "MISMATCH")
        )
    lines.append(
        "all brute-force coefficients match the lattice Moebius value"
        if ok
        else "MISMATCHES above"
    )
    _emit({"n": args.n, "entries": entries, "pass": ok}, args.json, lines)
    return 0 if ok else 1


def _cmd_labels(args) -> int:
    labels = enumerate_labels(args.n)
    report = {
        "n": args.n,
        "count": len(labels),
        "labels": [_label_json(lab) for lab in labels],
    }
    lines = ["%2d  %s" % (i, lab) for i, lab in enumerate(labels, 1)]
    lines.append("%d labels" % len(labels))
    _emit(report, args.json, lines)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="braidties",
        description="Exact arithmetic and verification for the "
        "braids-and-ties algebra.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(verb, func, **kwargs):
        p = sub.add_parser(verb, **kwargs)
        p.add_argument("--n", type=int, required=True, help="algebra size")
        p.add_argument("--json", action="store_true", help="JSON output")
        p.add_argument(
            "--seed", type=int, default=_DEFAULT_SEED, help="randomness seed"
        )
        p.add_argument(
            "--force", action="store_true", help="override the n guard"
        )
        p.set_defaults(func=func)
        return p

    add("dim", _cmd_dim, help="print the dimension n!*Bell(n)")
    add("basis", _cmd_basis, help="list the normal-form basis")
    p = add("eval", _cmd_eval, help="normalize a generator expression")
    p.add_argument("--expr", required=True, help="expression, e.g. 'T1*T1'")
    p = add("verify", _cmd_verify, help="run the defining-relation suite")
    p.add_argument(
        "--tensor",
        action="store_true",
        help="check the relations as tensor-space operators",
    )
    p = add("specht", _cmd_specht, help="classify the simple modules")
    p.add_argument(
        "--label", type=int, help="1-based index of a single label to build"
    )
    p = add("faithful", _cmd_faithful, help="faithfulness certificate")
    p.add_argument(
        "--points",
        type=int,
        default=1,
        help="extra random evaluation points (n=4 strategy)",
    )
    p = add("gram", _cmd_gram, help="rank of the Gram matrix of the form")
    p.add_argument("--at", help="rational evaluation point P/Q")
    p.add_argument(
        "--u1", action="store_true", help="evaluate at u=1 (the default)"
    )
    add("moebius", _cmd_moebius, help="Moebius coefficients, brute vs lattice")
    add("labels", _cmd_labels, help="enumerate the classification labels")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except ParseError as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return 2
    except SystemExit2 as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
