"""Command line surface: conversions, operator words, membership, graph export,
property suites and finite-crystal enumeration.

Exit codes: 0 success, 1 usage or parse failure, 2 property violation or
failed membership where membership was required.
"""

import argparse
import csv
import json
import os
import sys

from .blambda import blambda_rc_set
from .checks import run_suites
from .errors import MalformedInputError, NotInCrystalError
from .forward import is_member_rcinf, rc_from_forward
from .graph import crystal_graph, to_dot, to_jsonl
from .rc import apply_f_word
from .reverse import is_member_rcinf_reverse, rc_from_reverse
from .serialize import (canonical_dumps, psi_from_json, psi_to_json, rc_from_json,
                        rc_to_json, tableau_from_json, tableau_to_json,
                        weight_from_json, x_from_json, x_to_json)
from .tableaux import (MarginallyLargeReverseTableau, MarginallyLargeTableau,
                       apply_f_mlrt, apply_f_mlt, forward_from_mlt,
                       mlrt_from_reverse, mlt_from_forward, reverse_from_mlrt)

USAGE_ERROR, VIOLATION = 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


def _read_json(path):
    text = sys.stdin.read() if path in (None, "-") else open(path).read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInputError(f"input is not JSON: {exc}") from exc


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


def _parse_word(text):
    if not text:
        return []
    try:
        return [int(tok) for tok in text.split(",")]
    except ValueError as exc:
        raise MalformedInputError(f"bad word {text!r}: {exc}") from exc


def _parse_ns(text):
    try:
        if ":" in text:
            lo, hi = text.split(":")
            ns = list(range(int(lo), int(hi) + 1))
        else:
            ns = [int(tok) for tok in text.split(",")]
    except ValueError as exc:
        raise MalformedInputError(f"bad rank list {text!r}: {exc}") from exc
    if not ns or any(n < 1 for n in ns):
        raise MalformedInputError(f"bad rank list {text!r}")
    return ns


def _parse_object(obj):
    """Dispatch rc / mlt / mlrt input on its schema."""
    if "parts" in obj:
        return rc_from_json(obj)
    if "counts" in obj:
        return tableau_from_json(obj)
    raise MalformedInputError("object is neither a rigged configuration nor a tableau")


def cmd_convert(args) -> int:
    obj = _read_json(args.path)
    src, dst = args.src, args.to
    x = psi = None
    if src == "x":
        x = x_from_json(obj)
        rc = rc_from_forward(x)
    elif src == "psi":
        psi = psi_from_json(obj)
        rc = rc_from_reverse(psi)
    elif src == "mlt":
        T = tableau_from_json(obj)
        if not isinstance(T, MarginallyLargeTableau):
            raise MalformedInputError("expected a tableau with model mlt")
        x = forward_from_mlt(T)
        rc = rc_from_forward(x)
    elif src == "mlrt":
        R = tableau_from_json(obj)
        if not isinstance(R, MarginallyLargeReverseTableau):
            raise MalformedInputError("expected a tableau with model mlrt")
        psi = reverse_from_mlrt(R)
        rc = rc_from_reverse(psi)
    else:
        rc = rc_from_json(obj)

    if dst == "rc":
        _emit(rc_to_json(rc))
        return 0
    if dst in ("x", "mlt") and x is None:
        decision = is_member_rcinf(rc)
        if not decision.member:
            print(f"not a member of the model (stage: {decision.reason})", file=sys.stderr)
            return VIOLATION
        x = decision.exponents
    if dst in ("psi", "mlrt") and psi is None:
        decision = is_member_rcinf_reverse(rc)
        if not decision.member:
            print(f"not a member of the model (stage: {decision.reason})", file=sys.stderr)
            return VIOLATION
        psi = decision.exponents
    if dst == "x":
        _emit(x_to_json(x))
    elif dst == "psi":
        _emit(psi_to_json(psi))
    elif dst == "mlt":
        _emit(tableau_to_json(mlt_from_forward(x)))
    else:
        _emit(tableau_to_json(mlrt_from_reverse(psi)))
    return 0


def cmd_apply(args) -> int:
    word = _parse_word(args.word)
    target = _parse_object(_read_json(args.path))
    try:
        if isinstance(target, MarginallyLargeTableau):
            for i in word:
                target = apply_f_mlt(target, i)
            _emit(tableau_to_json(target))
        elif isinstance(target, MarginallyLargeReverseTableau):
            for i in word:
                target = apply_f_mlrt(target, i)
            _emit(tableau_to_json(target))
        else:
            target = apply_f_word(target, word)
            _emit(rc_to_json(target))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    return 0


def _decision_json(decision, to_json):
    if decision.member:
        return {"member": True, "exponents": to_json(decision.exponents)}
    return {"member": False, "reason": decision.reason}


def cmd_member(args) -> int:
    rc = rc_from_json(_read_json(args.path))
    if args.side == "forward":
        _emit(dict(_decision_json(is_member_rcinf(rc), x_to_json), side="forward"))
    elif args.side == "reverse":
        _emit(dict(_decision_json(is_member_rcinf_reverse(rc), psi_to_json), side="reverse"))
    else:
        fwd = _decision_json(is_member_rcinf(rc), x_to_json)
        rev = _decision_json(is_member_rcinf_reverse(rc), psi_to_json)
        _emit({"side": "both", "forward": fwd, "reverse": rev,
               "agree": fwd["member"] == rev["member"]})
    return 0


def cmd_graph(args) -> int:
    nodes, edges, depths = crystal_graph(args.n, args.depth)
    text = to_dot(nodes, edges) if args.format == "dot" else to_jsonl(edges)
    sys.stdout.write(text)
    if args.render:
        from .plotting import save_graph_figure
        save_graph_figure(nodes, edges, depths, args.render)
        print(f"figure written to {args.render}", file=sys.stderr)
    return 0


def cmd_check(args) -> int:
    ns = _parse_ns(args.n)
    report = run_suites(ns, args.bound, args.samples, args.seed)
    _emit([{key: item[key] for key in ("lemma", "indices", "lhs", "rhs")}
           for item in report["violations"]])
    checked = sum(row["samples"] for row in report["rows"])
    print(f"{checked} samples checked, {len(report['violations'])} violations",
          file=sys.stderr)
    if args.out_dir:
        os.makedirs(args.out_dir, exist_ok=True)
        with open(os.path.join(args.out_dir, "report.json"), "w") as fh:
            json.dump(report, fh, indent=2, sort_keys=True)
        with open(os.path.join(args.out_dir, "report.csv"), "w", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=["side", "n", "samples", "bad_samples"])
            writer.writeheader()
            writer.writerows(report["rows"])
        from .plotting import save_check_figure
        save_check_figure(report, os.path.join(args.out_dir, "report.png"))
        print(f"report files written to {args.out_dir}", file=sys.stderr)
    return VIOLATION if report["violations"] else 0


def cmd_blambda(args) -> int:
    if args.lam is not None:
        lam = tuple(int(tok) for tok in args.lam.split(","))
        n = args.n if args.n else len(lam)
    else:
        n, lam = weight_from_json(_read_json(args.path))
    if len(lam) != n or any(v < 0 for v in lam):
        raise MalformedInputError(f"weight {lam} does not match rank {n}")
    elements = blambda_rc_set(lam, n, args.side)
    serialized = sorted(canonical_dumps(rc_to_json(el.rc)) for el in elements)
    _emit({
        "n": n,
        "lambda": list(lam),
        "side": args.side,
        "count": len(serialized),
        "elements": [json.loads(s) for s in serialized],
    })
    return 0


def build_parser() -> _Parser:
    parser = _Parser(prog="riggedcrystals")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("--in", dest="path", default=None,
                       help="input file (defaults to stdin)")

    p = sub.add_parser("convert", help="convert between the five object kinds")
    add_input(p)
    p.add_argument("--from", dest="src", required=True,
                   choices=["x", "psi", "rc", "mlt", "mlrt"])
    p.add_argument("--to", required=True, choices=["x", "psi", "rc", "mlt", "mlrt"])
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("apply", help="apply a lowering-operator word")
    add_input(p)
    p.add_argument("--word", default="", help="comma-separated indices, applied left to right")
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("member", help="decide membership of a rigged configuration")
    add_input(p)
    p.add_argument("--side", default="both", choices=["forward", "reverse", "both"])
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("graph", help="export the crystal ball as dot or jsonl")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--format", default="dot", choices=["dot", "jsonl"])
    p.add_argument("--render", default=None, help="also draw the graph to this image file")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("check", help="run the randomized inequality suites")
    p.add_argument("--n", default="3:5", help="ranks, e.g. 3:5 or 3,4,5")
    p.add_argument("--bound", type=int, default=6)
    p.add_argument("--samples", type=int, default=10000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out-dir", default=None,
                   help="write report.json, report.csv and report.png here")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("blambda", help="enumerate a finite highest weight crystal")
    add_input(p)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--lambda", dest="lam", default=None,
                   help="comma-separated weight values (alternative to JSON input)")
    p.add_argument("--side", default="forward", choices=["forward", "reverse"])
    p.set_defaults(func=cmd_blambda)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except MalformedInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except NotInCrystalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return VIOLATION
    except (FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
