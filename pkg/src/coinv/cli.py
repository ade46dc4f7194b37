"""Command-line driver: ``coinv verify``, ``coinv straighten`` and ``coinv table``.

Every command prints one JSON run report (tables may instead be written as
CSV).  Exit status is 0 on pass, 1 on fail and 2 on a usage or capacity error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
import time
from fractions import Fraction
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations
from typing import Optional, Sequence

from coinv._limits import CapacityError
from coinv.checks import VERIFIERS
from coinv.groups import format_window
from coinv.polyring import format_monomial, parse_monomial
from coinv.reptheory import (
    character_table, descent_rep_character, format_label, inner_product, irreducible_labels,
    bn_character, sn_character,
)
from coinv.report import _jsonable
from coinv.shapes import lambda_S1S2, parse_partition
from coinv.straighten import basis, straighten

EXIT_PASS, EXIT_FAIL, EXIT_ERROR = 0, 1, 2

TABLES = ("descent-basis", "signed-descent-basis", "characters-a", "characters-b", "multiplicities")

# defaults used when a flag is omitted
_DEFAULT_CUTOFF = {
    "thm7.2": 8, "thm7.3": 8, "thm7.4": 8, "cor-gessel": 5, "lemma-tau": 6,
    "lemma-tau-b": 6, "traces": 6, "phi-a": 7, "phi-b": 7,
}
_DEFAULT_N = {"phi-a": 5, "phi-b": 5}


class UsageError(ValueError):
    pass


def _decimal(text: str) -> int:
    if not re.fullmatch(r"[0-9]+", text):
        raise argparse.ArgumentTypeError(f"expected a decimal integer, got {text!r}")
    return int(text)


def _set(text: str) -> tuple[int, ...]:
    text = text.strip()
    if text in ("", "-", "∅"):
        return ()
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if not re.fullmatch(r"[0-9]+", tok):
            raise argparse.ArgumentTypeError(f"expected comma-separated decimal integers, got {text!r}")
        out.append(int(tok))
    return tuple(sorted(set(out)))


def _run_report(command: str, parameters: dict, status: str, counts: Optional[dict] = None,
                wall_time_ms: float = 0.0, payload=None, witness=None) -> dict:
    out = {
        "command": command,
        "parameters": parameters,
        "status": status,
        "counts": counts or {},
        "wall_time_ms": round(wall_time_ms, 3),
    }
    if witness is not None:
        out["witness"] = witness
    if payload is not None:
        out["payload"] = payload
    return _jsonable(out)


def _verify_kwargs(name: str, args: argparse.Namespace) -> dict:
    _, params = VERIFIERS[name]
    values = {}
    for p in params:
        if p == "n":
            v = args.n if args.n is not None else _DEFAULT_N.get(name)
            if v is None:
                raise UsageError(f"verify {name} needs --n")
        elif p == "cutoff":
            v = args.cutoff if args.cutoff is not None else _DEFAULT_CUTOFF[name]
        elif p == "shape":
            if args.shape is None:
                raise UsageError(f"verify {name} needs --shape")
            v = args.shape
        elif p == "shape2":
            v = args.shape2 if args.shape2 is not None else ()
        elif p == "type":
            v = args.type
        values[p] = v
    return values


def run_verify(name: str, params: dict) -> dict:
    """Run one verification and return its run report (used by worker processes too)."""
    func, _ = VERIFIERS[name]
    try:
        report = func(*params.values())
    except (CapacityError, ValueError) as exc:
        return _run_report("verify " + name, params, "error", payload={"error": str(exc)})
    counts = dict(report.counts)
    counts.update(lhs_terms=report.lhs_terms, rhs_terms=report.rhs_terms)
    return _run_report("verify " + name, params, report.status, counts, report.wall_time_ms,
                       witness=report.first_discrepancy)


def cmd_verify(args: argparse.Namespace) -> list[dict]:
    for name in args.names:
        if name not in VERIFIERS:
            raise UsageError(f"unknown verification {name!r}; choose from {', '.join(VERIFIERS)}")
    jobs = [(name, _verify_kwargs(name, args)) for name in args.names]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            return list(pool.map(run_verify, *zip(*jobs)))
    return [run_verify(name, params) for name, params in jobs]


def cmd_straighten(args: argparse.Namespace) -> list[dict]:
    if args.monomial is None:
        raise UsageError("straighten needs --monomial")
    try:
        m = parse_monomial(args.monomial)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    start = time.perf_counter()
    expansion = straighten(m, args.type)
    verified = expansion.expand().terms == {m: 1}
    elapsed = (time.perf_counter() - start) * 1000.0
    payload = expansion.to_json()
    payload["verified"] = verified
    return [_run_report("straighten", {"monomial": format_monomial(m), "type": args.type},
                        "pass" if verified else "fail", {"terms": len(expansion.terms)}, elapsed, payload)]


def _subsets(n: int, start: int = 1) -> list[tuple[int, ...]]:
    items = range(start, n + 1)
    return [c for k in range(len(items) + 1) for c in combinations(items, k)]


def build_table(what: str, n: int, set1: Optional[tuple[int, ...]] = None,
                set2: Optional[tuple[int, ...]] = None) -> tuple[list[str], list[list]]:
    """Header and rows of one of the named tables, in a fixed order.

    ``set1``/``set2`` restrict a multiplicity table to one choice of descent data.
    """
    if what == "descent-basis":
        return ["perm", "exponents"], [[str(g), format_monomial(m)] for g, m in basis("A", n)]
    if what == "signed-descent-basis":
        # underlying permutation first, then sign pattern with positive entries first
        rows = sorted(basis("B", n), key=lambda gm: [(abs(a), a < 0) for a in gm[0].window])
        return ["perm", "exponents"], [[str(g), format_monomial(m)] for g, m in rows]
    if what in ("characters-a", "characters-b"):
        irreps, classes, rows = character_table("A" if what == "characters-a" else "B", n)
        header = ["irreducible"] + [format_label(c) for c in classes]
        return header, [[format_label(lam)] + list(row) for lam, row in zip(irreps, rows)]
    if what == "multiplicities-a":
        irreps = [(mu, sn_character(mu)) for mu in irreducible_labels("A", n)]
        rows = []
        for S in [set1] if set1 is not None else _subsets(n - 1):
            chi = descent_rep_character("A", n, S)
            rows += [[format_window(S), format_label(mu), inner_product(chi, irr)] for mu, irr in irreps]
        return ["S", "irreducible", "multiplicity"], rows
    if what == "multiplicities-b":
        irreps = [(lab, bn_character(*lab)) for lab in irreducible_labels("B", n)]
        rows = []
        for S1 in [set1] if set1 is not None else _subsets(n - 1):
            for S2 in [set2 or ()] if set1 is not None or set2 is not None else _subsets(n):
                if not lambda_S1S2(S1, S2, n)[1]:
                    continue
                chi = descent_rep_character("B", n, S1, S2)
                rows += [[format_window(S1), format_window(S2), format_label(lab), inner_product(chi, irr)]
                         for lab, irr in irreps]
        return ["S1", "S2", "irreducible", "multiplicity"], rows
    raise UsageError(f"unknown table {what!r}; choose from {', '.join(TABLES)}")


def _csv_text(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([f"{v.numerator}/{v.denominator}" if isinstance(v, Fraction) else v for v in row])
    return buf.getvalue()


def cmd_table(args: argparse.Namespace) -> tuple[list[dict], Optional[str]]:
    if args.what not in TABLES:
        raise UsageError(f"unknown table {args.what!r}; choose from {', '.join(TABLES)}")
    if args.n is None:
        raise UsageError("table needs --n")
    what = args.what
    if what == "multiplicities":
        what += "-" + args.type.lower()
    start = time.perf_counter()
    header, rows = build_table(what, args.n, args.set1, args.set2)
    elapsed = (time.perf_counter() - start) * 1000.0
    if args.format == "csv":
        return [], _csv_text(header, rows)
    params = {"table": args.what, "n": args.n}
    if args.what == "multiplicities":
        params["type"] = args.type
        if args.set1 is not None:
            params["set"] = list(args.set1)
        if args.set2 is not None:
            params["set2"] = list(args.set2)
    payload = {"columns": header, "rows": rows}
    return [_run_report("table", params, "pass", {"rows": len(rows)}, elapsed, payload)], None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=_decimal)
    common.add_argument("--type", choices=("A", "B"), default="A")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--out", metavar="FILE")
    common.add_argument("--jobs", type=_decimal, default=1)
    common.add_argument("--set", type=_set, dest="set1", help="restrict multiplicities to one descent set")
    common.add_argument("--set2", type=_set, help="negative set for type-B multiplicities")

    parser = argparse.ArgumentParser(prog="coinv", description="Descent bases of coinvariant algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common], help="run one or more identity checks")
    v.add_argument("names", nargs="+", metavar="NAME", help=", ".join(VERIFIERS))
    v.add_argument("--shape", type=parse_partition)
    v.add_argument("--shape2", type=parse_partition)
    v.add_argument("--cutoff", type=_decimal)

    s = sub.add_parser("straighten", parents=[common], help="expand a monomial in the descent basis")
    s.add_argument("--monomial", help="comma-separated exponent vector, e.g. 2,1,1")

    t = sub.add_parser("table", parents=[common], help="dump a basis, character or multiplicity table")
    t.add_argument("what", metavar="TABLE", help=", ".join(TABLES))
    return parser


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.jobs < 1:
        parser.error("--jobs must be at least 1")
    if args.command != "table" and args.format == "csv":
        parser.error("--format csv is only available for tables")
    raw = None
    try:
        if args.command == "verify":
            reports = cmd_verify(args)
        elif args.command == "straighten":
            reports = cmd_straighten(args)
        else:
            reports, raw = cmd_table(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"coinv: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (CapacityError, ValueError) as exc:
        reports = [_run_report(args.command, {}, "error", payload={"error": str(exc)})]
    if raw is not None:
        _emit(raw, args.out)
        return EXIT_PASS
    doc = reports[0] if len(reports) == 1 else {"runs": reports}
    _emit(json.dumps(doc, indent=2, ensure_ascii=False) + "\n", args.out)
    statuses = {r["status"] for r in reports}
    if "error" in statuses:
        return EXIT_ERROR
    return EXIT_FAIL if "fail" in statuses else EXIT_PASS


if __name__ == "__main__":
    sys.exit(main())
