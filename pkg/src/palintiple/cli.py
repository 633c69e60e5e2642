"""Command-line front end.

Exit codes: 0 success, 1 usage or parameter error, 2 verification failure or
counterexample, 3 I/O or checkpoint error.  Payload goes to stdout and
diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from math import gcd

from . import harness
from .digits import DigitString, check_parameters, concatenate, verify_palintiple
from .errors import BadParameters, CheckpointCorrupt, PalintipleError
from .graph import (
    build_graph,
    digraph_isomorphic,
    enumerate_palintiples,
    is_1089_type,
    min_digits,
    trim_graph,
)
from .scanner import CONGRUENCE, enumerate_mode, figure1_csv, figure1_dataset, scan_bases
from .theory import (
    build_shifted_symmetric,
    congruence_solutions,
    enumerate_r_sequences,
    generate_symmetric,
    pair_class,
)

EXIT_OK, EXIT_USAGE, EXIT_FAILED, EXIT_IO = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")


def _pair(args) -> tuple[int, int]:
    check_parameters(args.n, args.b)
    return args.n, args.b


def _digits(args) -> DigitString:
    if args.value:
        if args.b > 10:
            raise UsageError("--value is only accepted for b <= 10")
        try:
            value = int(args.digits)
        except ValueError:
            raise UsageError(f"not an integer: {args.digits!r}") from None
        if value < 0:
            raise UsageError("value must be non-negative")
        return DigitString.parse(".".join(str(value)), args.b)
    return DigitString.parse(args.digits, args.b)


def cmd_verify(args) -> int:
    n, b = _pair(args)
    d = _digits(args)
    try:
        rec = verify_palintiple(d, n)
    except PalintipleError as exc:
        if args.json:
            _emit({"valid": False, "error": type(exc).__name__, "message": str(exc)})
        print(f"not a palintiple: {exc}", file=sys.stderr)
        return EXIT_FAILED
    if args.json:
        _emit({"valid": True, "record": rec.to_dict()})
    elif args.command == "classify":
        print("carries: " + ",".join(map(str, rec.carries.carries)))
        print(f"class: {rec.cls}")
    else:
        print(rec.cls)
    return EXIT_OK


def cmd_pair_class(args) -> int:
    n, b = _pair(args)
    pc = pair_class(n, b)
    if args.json:
        _emit(
            {
                "n": n,
                "b": b,
                "pair_class": pc.value,
                "gcd": gcd(b - n, n * n - 1),
                "congruence_solutions": congruence_solutions(n, b),
            }
        )
    else:
        print(pc)
    return EXIT_OK


def cmd_construct(args) -> int:
    n, b = _pair(args)
    if args.family == "shifted":
        sols = congruence_solutions(n, b)
        if not sols:
            raise UsageError(f"({n},{b}) has no shifted-symmetric palintiples")
        c = sols[0] if args.carry is None else args.carry
        if c not in sols:
            raise UsageError(f"carry {c} is not one of {sols}")
        records = [build_shifted_symmetric(n, b, c, args.count)]
        if args.repeat > 1:
            records = [concatenate(records[0], args.repeat)]
    else:
        if args.len is None:
            raise UsageError("construct symmetric needs --len")
        if b % (n + 1):
            raise UsageError(f"{n + 1} does not divide {b}")
        records = [generate_symmetric(n, b, r) for r in enumerate_r_sequences(args.len - 1)]
    if args.json:
        _emit({"n": n, "b": b, "family": args.family, "palintiples": [r.to_dict() for r in records]})
    else:
        for r in records:
            print(r.digits)
    return EXIT_OK


def cmd_min_digits(args) -> int:
    n, b = _pair(args)
    md = min_digits(n, b)
    if args.json:
        _emit({"n": n, "b": b, "min_digits": md})
    else:
        print("none" if md is None else md)
    return EXIT_OK


def cmd_exists(args) -> int:
    n, b = _pair(args)
    exists = min_digits(n, b) is not None
    if args.json:
        _emit({"n": n, "b": b, "exists": exists})
    else:
        print(str(exists).lower())
    return EXIT_OK


def cmd_enumerate(args) -> int:
    n, b = _pair(args)
    if args.len < 2:
        raise UsageError("--len must be at least 2")
    records = enumerate_palintiples(n, b, args.len)
    if args.json:
        _emit(
            {
                "n": n,
                "b": b,
                "digit_count": args.len,
                "palintiples": [r.to_dict() for r in records],
            }
        )
    else:
        for r in records:
            print(r.digits)
    return EXIT_OK


def cmd_graph(args) -> int:
    n, b = _pair(args)
    g = build_graph(n, b, materialize=True) if args.full else trim_graph(n, b)
    if args.dot:
        sys.stdout.write(g.to_dot())
    elif args.json:
        _emit(g.to_dict())
    else:
        for u, v, lab in g.edges():
            print(f"{u} -> {v} [{lab}]")
    return EXIT_OK


def cmd_iso(args) -> int:
    check_parameters(args.n1, args.b1)
    check_parameters(args.n2, args.b2)
    result = digraph_isomorphic(trim_graph(args.n1, args.b1), trim_graph(args.n2, args.b2))
    if args.json:
        _emit({"first": [args.n1, args.b1], "second": [args.n2, args.b2], "isomorphic": result})
    else:
        print(str(result).lower())
    return EXIT_OK


def cmd_is_1089(args) -> int:
    n, b = _pair(args)
    result = is_1089_type(n, b)
    if args.json:
        _emit({"n": n, "b": b, "is_1089_type": result})
    else:
        print(str(result).lower())
    return EXIT_OK


def _write(text: str, path) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def cmd_figure1(args) -> int:
    if not 3 <= args.b_from <= args.b_to:
        raise UsageError("need 3 <= --from <= --to")
    rows = figure1_dataset(args.b_from, args.b_to)
    if args.json:
        _emit(
            {
                "from": args.b_from,
                "to": args.b_to,
                "rows": [
                    {
                        "base": r.base,
                        "n": r.n,
                        "digit_count": r.digit_count,
                        "d0": r.d0,
                        "dk": r.dk,
                        "digits": r.digits,
                    }
                    for r in rows
                ],
            }
        )
        if args.out:
            _write(figure1_csv(rows), args.out)
    else:
        _write(figure1_csv(rows), args.out)
    return EXIT_OK


def cmd_scan(args) -> int:
    if not 3 <= args.b_from <= args.b_to:
        raise UsageError("need 3 <= --from <= --to")
    mode = CONGRUENCE if args.mode == "congruence" else enumerate_mode(args.depth)
    summary = scan_bases(
        args.b_from,
        args.b_to,
        mode,
        parallelism=args.jobs,
        checkpoint_path=args.checkpoint,
        early_exit=not args.full,
    )
    if args.json:
        out = summary.to_dict()
        out["reports"] = [r.to_dict() for r in summary.reports]
        _emit(out)
        if args.out:
            _write(summary.to_csv(), args.out)
    else:
        _write(summary.to_csv(), args.out)
    for note in summary.notes:
        print(f"note: {note}", file=sys.stderr)
    if summary.theorem6_violations:
        print(
            f"inconsistency: strongly symmetric bases with composite b+1: "
            f"{summary.theorem6_violations}",
            file=sys.stderr,
        )
        return EXIT_FAILED
    return EXIT_OK


def cmd_conjecture(args) -> int:
    cid = args.id
    lo, hi = args.bases
    if cid in harness.CHECKS:
        report = harness.CHECKS[cid](hi, args.depth, b_min=lo)
        ok = report.ok
        payload = report.to_dict()
        lines = [f"{cid}: {report.verdict} (checked {report.checked}; bases {lo}..{hi}; digits <= {args.depth})"]
        lines += [f"  counterexample: {c.to_dict()}" for c in report.counterexamples]
    elif cid == "reg1":
        report = harness.ConjectureReport(
            "reg1", {"b_min": lo, "b_max": hi, "d_max": args.depth}
        )
        for b in range(lo, hi + 1):
            for n in range(2, b):
                if b % (n + 1) == 0:
                    sub = harness.check_reg1_generator(n, b, args.depth)
                    report.checked += sub.checked
                    report.counterexamples += sub.counterexamples
        ok = report.ok
        payload = report.to_dict()
        lines = [f"reg1: {report.verdict} (checked {report.checked}; bases {lo}..{hi}; digits <= {args.depth})"]
        lines += [f"  counterexample: {c.to_dict()}" for c in report.counterexamples]
    elif cid == "equivalences":
        reports = [
            harness.check_equivalences(n, b, args.depth)
            for b in range(lo, hi + 1)
            for n in range(2, b)
        ]
        ok = all(r.consistent for r in reports)
        payload = {
            "conjecture": "equivalences",
            "bounds": {"b_min": lo, "b_max": hi, "d_max": args.depth},
            "checked": len(reports),
            "pairs": [r.to_dict() for r in reports],
            "verdict": harness.NO_COUNTEREXAMPLE if ok else harness.COUNTEREXAMPLE_FOUND,
        }
        lines = [f"equivalences: {payload['verdict']} (pairs {len(reports)}; bases {lo}..{hi}; digits <= {args.depth})"]
        lines += [
            f"  inconsistent: ({r.n},{r.b}) {r.values}" for r in reports if not r.consistent
        ]
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown conjecture {cid!r}")
    if args.json:
        _emit(payload)
    else:
        print("\n".join(lines))
    return EXIT_OK if ok else EXIT_FAILED


def _bases(text: str) -> tuple[int, int]:
    try:
        if ":" in text:
            lo, hi = (int(x) for x in text.split(":", 1))
        else:
            lo, hi = 3, int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected B_MAX or B_MIN:B_MAX, got {text!r}") from None
    if not 3 <= lo <= hi:
        raise argparse.ArgumentTypeError("need 3 <= B_MIN <= B_MAX")
    return lo, hi


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="palintiple", description="Compute with numbers that are multiples of their digit reversal.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def pair(sp):
        sp.add_argument("n", type=int)
        sp.add_argument("b", type=int)
        sp.add_argument("--json", action="store_true")
        return sp

    for name in ("verify", "classify"):
        sp = pair(sub.add_parser(name, help=f"{name} a digit string"))
        sp.add_argument("digits", help='most significant first, dot separated, e.g. "8.7.9.1.2"')
        sp.add_argument("--value", action="store_true", help="read DIGITS as a plain integer (b <= 10)")
        sp.set_defaults(func=cmd_verify)

    pair(sub.add_parser("pair-class")).set_defaults(func=cmd_pair_class)

    sp = sub.add_parser("construct", help="build symmetric or shifted-symmetric palintiples")
    sp.add_argument("family", choices=["shifted", "symmetric"])
    pair(sp)
    sp.add_argument("--count", type=int, default=2, help="digit count (shifted)")
    sp.add_argument("--carry", type=int, default=None, help="interior carry (shifted)")
    sp.add_argument("--repeat", type=int, default=1, help="concatenate the result this many times")
    sp.add_argument("--len", type=int, default=None, help="digit count (symmetric)")
    sp.set_defaults(func=cmd_construct)

    pair(sub.add_parser("min-digits")).set_defaults(func=cmd_min_digits)
    pair(sub.add_parser("exists")).set_defaults(func=cmd_exists)

    sp = pair(sub.add_parser("enumerate"))
    sp.add_argument("--len", type=int, required=True)
    sp.set_defaults(func=cmd_enumerate)

    sp = pair(sub.add_parser("graph", help="trimmed carry-pair graph"))
    sp.add_argument("--dot", action="store_true")
    sp.add_argument("--full", action="store_true", help="emit the whole n x n lattice")
    sp.set_defaults(func=cmd_graph)

    sp = sub.add_parser("iso", help="compare two trimmed graphs")
    for name in ("n1", "b1", "n2", "b2"):
        sp.add_argument(name, type=int)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_iso)

    pair(sub.add_parser("is-1089")).set_defaults(func=cmd_is_1089)

    sp = sub.add_parser("figure1", help="minimal palintiples as CSV")
    sp.add_argument("--from", dest="b_from", type=int, default=3)
    sp.add_argument("--to", dest="b_to", type=int, default=100)
    sp.add_argument("--out")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_figure1)

    sp = sub.add_parser("scan", help="classify a range of bases")
    sp.add_argument("--from", dest="b_from", type=int, default=3)
    sp.add_argument("--to", dest="b_to", type=int, required=True)
    sp.add_argument("--mode", choices=["congruence", "enumerate"], default="congruence")
    sp.add_argument("--depth", type=int, default=8, help="digit bound for --mode enumerate")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--checkpoint")
    sp.add_argument("--out")
    sp.add_argument("--full", action="store_true", help="report every n, no early exit")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("conjecture", help="bounded empirical check")
    sp.add_argument("id", choices=[*harness.CHECKS, "reg1", "equivalences"])
    sp.add_argument("--bases", type=_bases, default=(3, 20), help="B_MAX or B_MIN:B_MAX")
    sp.add_argument("--depth", type=int, default=6)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_conjecture)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr)
    try:
        return args.func(args)
    except (UsageError, BadParameters) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CheckpointCorrupt as exc:
        print(f"checkpoint error: {exc}", file=sys.stderr)
        return EXIT_IO
    except PalintipleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


def main() -> None:
    sys.exit(run())
