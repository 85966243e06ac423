"""Command-line front end: ``dedsum {sum,inv,cf,jacobi,check,verify,scan}``.

Exit status is 0 on success, 1 when a verification finds violations and 2
for usage or domain errors.  Results go to stdout, progress to stderr.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys

from . import exactmath as em
from .confrac import cf_expand
from .dedekind import dedekind_sum, mu
from .permutation import inversions
from .theorems import PairClassification, classify_pair
from .verify import THEOREMS, scan, verify

SCAN_FIELDS = ("b", "a1", "a2", "s1", "s2", "delta12s", "ladder", "equal", "cond_c", "jabuka")


class UsageError(Exception):
    pass


def scan_record(pc: PairClassification) -> dict:
    """ScanRecord as a JSON-ready dict; rationals as ``num/den`` strings."""
    return {
        "b": pc.b, "a1": pc.a1, "a2": pc.a2,
        "s1": em.render(pc.s1), "s2": em.render(pc.s2), "delta12s": em.render(pc.delta12s),
        "ladder": pc.ladder, "equal": pc.equal, "cond_c": pc.cond_c, "jabuka": pc.jabuka,
    }


def _csv_cell(value) -> str:
    if value is None:
        return "none"
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _text_cell(value) -> str:
    # human text: integral rationals print bare
    if isinstance(value, str) and value.endswith("/1"):
        return value[:-2]
    return _csv_cell(value)


class Emitter:
    def __init__(self, fmt: str, out=None):
        self.fmt = fmt
        self.out = out or sys.stdout
        self._writer = None

    def json(self, obj):
        self.out.write(json.dumps(obj) + "\n")

    def csv_rows(self, fields, rows):
        w = csv.writer(self.out, lineterminator="\n")
        w.writerow(fields)
        for row in rows:
            w.writerow([_csv_cell(row[f]) for f in fields])

    def pairs(self, record: dict):
        if self.fmt == "json":
            self.json(record)
        elif self.fmt == "csv":
            self.csv_rows(list(record), [record])
        else:
            for key, value in record.items():
                self.out.write(f"{key} = {_text_cell(value)}\n")


def _coprime_args(a: int, b: int):
    if a < 1 or b < 1:
        raise UsageError(f"a and b must be positive, got {a} {b}")
    em.require_coprime(a, b)


def cmd_sum(args, emit: Emitter):
    _coprime_args(args.a, args.b)
    s = dedekind_sum(args.a, args.b, args.method or "bhk")
    record = {"a": args.a, "b": args.b, "s": em.render(s)}
    if args.all:
        from .confrac import alt_sum, digit_sum
        record.update(
            T=alt_sum(args.a, args.b),
            D=digit_sum(args.a, args.b),
            **{"a*": em.mod_inverse(args.a, args.b)},
            mu=mu(args.a, args.b),
            I=inversions(args.a, args.b, "meyer"),
        )
    if emit.fmt == "text":
        del record["a"], record["b"]
    emit.pairs(record)
    return 0


def cmd_inv(args, emit: Emitter):
    _coprime_args(args.a, args.b)
    method = args.method or "fast"
    record = {"a": args.a, "b": args.b, "I": inversions(args.a, args.b, method), "method": method}
    if emit.fmt == "text":
        record = {"I": record["I"]}
    emit.pairs(record)
    return 0


def cmd_cf(args, emit: Emitter):
    _coprime_args(args.a, args.b)
    if args.b == 1:
        raise UsageError("continued fraction needs b >= 2")
    cf = cf_expand(args.a % args.b, args.b)
    if emit.fmt == "text":
        emit.out.write(f"digits = [0; {', '.join(map(str, cf.digits))}]\n")
        emit.pairs({"T": cf.alt_sum, "D": cf.digit_sum})
    else:
        emit.pairs({"a": args.a, "b": args.b, "digits": " ".join(map(str, cf.digits)) if emit.fmt == "csv"
                    else list(cf.digits), "T": cf.alt_sum, "D": cf.digit_sum})
    return 0


def cmd_jacobi(args, emit: Emitter):
    value = em.jacobi(args.a, args.b)
    if emit.fmt == "text":
        emit.out.write(f"{value}\n")
    else:
        emit.pairs({"a": args.a, "b": args.b, "jacobi": value})
    return 0


def cmd_check(args, emit: Emitter):
    for a in (args.a1, args.a2):
        _coprime_args(a, args.b)
    emit.pairs(scan_record(classify_pair(args.a1, args.a2, args.b)))
    return 0


def cmd_verify(args, emit: Emitter):
    names = THEOREMS if args.theorem == "all" else (args.theorem,)
    if args.theorem != "all" and args.theorem not in THEOREMS:
        raise UsageError(f"unknown theorem {args.theorem!r}; expected all or one of {', '.join(THEOREMS)}")
    reports = [verify(t, args.b_min, args.b_max, args.jobs, args.progress) for t in names]
    for r in reports:
        status = "pass" if r.passed else "fail"
        record = {"theorem": r.theorem, "b_min": r.b_min, "b_max": r.b_max, "checked": r.checked,
                  "violations": [list(v) for v in r.violations], "status": status}
        if emit.fmt == "json":
            emit.json(record)
        elif emit.fmt == "csv":
            record["violations"] = ";".join(" ".join(map(str, v)) for v in r.violations)
            emit.csv_rows(list(record), [record])
        else:
            emit.out.write(f"{r.theorem}: b={r.b_min}..{r.b_max} checked={r.checked} "
                           f"violations={len(r.violations)} {status.upper()}\n")
            for v in r.violations:
                emit.out.write("  " + " ".join(map(str, v)) + "\n")
    return 0 if all(r.passed for r in reports) else 1


def cmd_scan(args, emit: Emitter):
    rows = (scan_record(pc) for pc in scan(args.b_min, args.b_max, args.predicate, args.jobs, args.progress))
    if emit.fmt == "json":
        for row in rows:
            emit.json(row)
    else:
        emit.csv_rows(SCAN_FIELDS, rows)
    return 0


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    group = fmt.add_mutually_exclusive_group()
    group.add_argument("--json", dest="fmt", action="store_const", const="json", help="emit JSON")
    group.add_argument("--csv", dest="fmt", action="store_const", const="csv", help="emit CSV")

    sweep = argparse.ArgumentParser(add_help=False)
    sweep.add_argument("--jobs", type=int, default=1, help="worker processes (default 1)")
    sweep.add_argument("--progress", action="store_true", help="report progress on stderr")

    parser = argparse.ArgumentParser(prog="dedsum", description="Dedekind sums, inversions and their congruences.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sum", parents=[fmt], help="Dedekind sum s(a, b)")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("--method", choices=["def", "bhk"])
    p.add_argument("--all", action="store_true", help="also print T, D, a*, mu and I")
    p.set_defaults(func=cmd_sum)

    p = sub.add_parser("inv", parents=[fmt], help="inversion number I(a, b)")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("--method", choices=["naive", "fast", "meyer"])
    p.set_defaults(func=cmd_inv)

    p = sub.add_parser("cf", parents=[fmt], help="odd-length continued fraction of a/b with T and D")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.set_defaults(func=cmd_cf)

    p = sub.add_parser("jacobi", parents=[fmt], help="Jacobi symbol (a/b), b odd")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.set_defaults(func=cmd_jacobi)

    p = sub.add_parser("check", parents=[fmt], help="classify 12s(a1, b) - 12s(a2, b)")
    p.add_argument("a1", type=int)
    p.add_argument("a2", type=int)
    p.add_argument("b", type=int)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("verify", parents=[fmt, sweep], help="exhaustively verify a theorem over b_min..b_max")
    p.add_argument("theorem", help=f"all or one of: {', '.join(THEOREMS)}")
    p.add_argument("b_min", type=int)
    p.add_argument("b_max", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", parents=[fmt, sweep], help="list pairs (a1 < a2 < b) matching a predicate")
    p.add_argument("b_min", type=int)
    p.add_argument("b_max", type=int)
    p.add_argument("predicate", help="equal | cond-c-not-equal | ladder=none|1|2|4|8")
    p.set_defaults(func=cmd_scan)
    return parser


def main(argv=None, out=None) -> int:
    args = build_parser().parse_args(argv)
    emit = Emitter(args.fmt or "text", out)
    try:
        return args.func(args, emit)
    except (UsageError, em.DomainError) as exc:
        print(f"dedsum {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except em.ConsistencyError as exc:
        print(f"dedsum {args.command}: internal inconsistency: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
