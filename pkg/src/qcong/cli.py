"""Command-line front end: verify, fsearch, suite, report.

Exit codes: 0 success, 1 check failure or table mismatch, 2 usage
errors.  Conjectural failures are flagged in the output but never break
the exit code of ``verify``.  Records are always emitted in sorted
order and without timing fields, so identical configurations produce
byte-identical output regardless of --jobs.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from dataclasses import dataclass, field

from .records import CheckRecord, ERROR, FAIL, INAPPLICABLE, PASS
from . import exponents, runner, suite
from .ring import is_prime

ENV_OUT_DIR = "QCONG_OUT"
DEFAULT_PS = (3, 5, 7, 11, 13)
DEFAULT_MS = tuple(range(1, 9))


class UsageError(Exception):
    pass


def parse_int_list(spec: str) -> list[int]:
    """Lists and ranges: "5,7,11", "3..13", "1..25:odd", "2..20:4"."""
    values: list[int] = []
    for part in spec.split(","):
        part = part.strip()
        if not part:
            continue
        if ".." not in part:
            values.append(int(part))
            continue
        lo_text, rest = part.split("..", 1)
        step_text = None
        if ":" in rest:
            rest, step_text = rest.split(":", 1)
        lo, hi = int(lo_text), int(rest)
        if step_text is None:
            values.extend(range(lo, hi + 1))
        elif step_text == "odd":
            values.extend(v for v in range(lo, hi + 1) if v % 2 == 1)
        elif step_text == "even":
            values.extend(v for v in range(lo, hi + 1) if v % 2 == 0)
        else:
            values.extend(range(lo, hi + 1, int(step_text)))
    return sorted(set(values))


def parse_primes(spec: str) -> list[int]:
    """Odd primes in the given list/range; composite endpoints are fine."""
    return [v for v in parse_int_list(spec) if is_prime(v) and v != 2]


@dataclass
class RunConfig:
    command: str
    check_ids: list[str] = field(default_factory=list)
    ps: list[int] = field(default_factory=lambda: list(DEFAULT_PS))
    ms: list[int] = field(default_factory=lambda: list(DEFAULT_MS))
    rs: list[int] | None = None          # None: r sweeps 1..2m per m
    mod_power: int = 2
    jobs: int = 1
    out: str | None = None
    fmt: str = "text"
    cap: int | None = None

    def __post_init__(self):
        if not self.ps:
            raise UsageError("no odd primes in the requested --p range")
        if not self.ms:
            raise UsageError("empty --m range")
        if self.rs is not None and not self.rs:
            raise UsageError("empty --r range")


def _open_out(path: str | None):
    if path is None or path == "-":
        return sys.stdout, False
    if not os.path.isabs(path):
        base = os.environ.get(ENV_OUT_DIR)
        if base:
            os.makedirs(base, exist_ok=True)
            path = os.path.join(base, path)
    return open(path, "w", encoding="utf-8"), True


def _record_text(rec: CheckRecord) -> str:
    marker = {PASS: "PASS", FAIL: "FAIL", INAPPLICABLE: "SKIP", ERROR: "ERR!"}
    params = " ".join(f"{k}={v}" for k, v in rec.params.items())
    line = f"{marker[rec.status]} {rec.check_id} {params}"
    if rec.conjectural:
        line += " [conjectural]"
    if rec.status in (FAIL, ERROR) and rec.witness is not None:
        line += f" witness={json.dumps(rec.witness, sort_keys=True, default=str)}"
    return line


def _write_records(records, fmt: str, out) -> None:
    if fmt == "jsonl":
        for rec in records:
            out.write(json.dumps(rec.to_json_dict(), sort_keys=True,
                                 default=str) + "\n")
    else:
        for rec in records:
            out.write(_record_text(rec) + "\n")


def cmd_verify(args) -> int:
    ids = args.checks or sorted(runner.REGISTRY)
    unknown = [c for c in ids if c not in runner.REGISTRY]
    if unknown:
        raise UsageError(f"unknown check ids: {', '.join(unknown)} "
                         f"(try --list)")
    if args.format == "csv":
        raise UsageError("csv output is reserved for fsearch tables; "
                         "use text or jsonl here")
    cfg = RunConfig(
        command="verify", check_ids=ids,
        ps=parse_primes(args.p) if args.p else list(DEFAULT_PS),
        ms=parse_int_list(args.m) if args.m else list(DEFAULT_MS),
        rs=parse_int_list(args.r) if args.r else None,
        mod_power=args.mod_power, jobs=args.jobs, out=args.out,
        fmt=args.format, cap=args.cap_n)
    tasks = runner.iter_tasks(cfg.check_ids, cfg.ps, cfg.ms, cfg.rs, cfg.cap)
    records = runner.execute(tasks, cfg.jobs)
    out, close = _open_out(cfg.out)
    try:
        _write_records(records, cfg.fmt, out)
    finally:
        if close:
            out.close()
    proven_bad = [r for r in records
                  if r.status in (FAIL, ERROR) and not r.conjectural]
    conj_bad = [r for r in records if r.status == FAIL and r.conjectural]
    if conj_bad:
        print(f"note: {len(conj_bad)} conjectural finding(s); see output",
              file=sys.stderr)
    return 1 if proven_bad else 0


def _f_records_to_csv(records, out) -> None:
    writer = csv.writer(out)
    writer.writerow(["p", "m", "r", "f", "method", "status"])
    for rec in records:
        writer.writerow([rec.p, rec.m, rec.r,
                         "" if rec.f is None else rec.f,
                         rec.method, rec.status])


def cmd_fsearch(args) -> int:
    if not (args.p and args.m and args.r):
        raise UsageError("fsearch needs --p, --m and --r")
    ps = parse_primes(args.p)
    ms = parse_int_list(args.m)
    rs = parse_int_list(args.r)
    if not ps or not ms or not rs:
        raise UsageError("empty parameter range")
    tuples = [(p, m, r) for p in ps for m in ms for r in rs
              if m % p != 0 and r % m != 0]
    records = exponents.emit_f_table(tuples, brute=args.brute,
                                     bound=args.bound,
                                     mod_power=args.mod_power,
                                     jobs=args.jobs)
    out, close = _open_out(args.out)
    try:
        if args.format == "csv":
            _f_records_to_csv(records, out)
        elif args.format == "jsonl":
            for rec in records:
                out.write(json.dumps(rec.to_json_dict(), sort_keys=True) + "\n")
        else:
            for rec in records:
                shown = "?" if rec.f is None else rec.f
                note = f"  ({rec.note})" if rec.note else ""
                out.write(f"f({rec.p},{rec.m},{rec.r}) = {shown}"
                          f"  [{rec.status}, {rec.method}]{note}\n")
    finally:
        if close:
            out.close()
    if args.expected:
        mismatches = _compare_expected(records, args.expected)
        if mismatches:
            for line in mismatches:
                print(f"mismatch: {line}", file=sys.stderr)
            return 1
    return 0


def _compare_expected(records, path: str) -> list[str]:
    """Compare against a CSV of p,m,r,f rows (header optional)."""
    table = {(rec.p, rec.m, rec.r): rec for rec in records}
    problems = []
    with open(path, newline="", encoding="utf-8") as handle:
        for row in csv.reader(handle):
            if not row or row[0].strip().lower() == "p":
                continue
            p, m, r, f = (int(cell) for cell in row[:4])
            rec = table.get((p, m, r))
            if rec is None:
                problems.append(f"({p},{m},{r}) expected {f}, not computed")
            elif rec.f != f:
                problems.append(f"({p},{m},{r}) expected {f}, got {rec.f} "
                                f"[{rec.status}]")
    return problems


def cmd_suite(args) -> int:
    return suite.run_suite(args.level)


def cmd_report(args) -> int:
    try:
        if args.input == "-":
            lines = sys.stdin.read().splitlines()
        else:
            with open(args.input, encoding="utf-8") as handle:
                lines = handle.read().splitlines()
    except OSError as exc:
        raise UsageError(str(exc))
    rows = []
    for i, line in enumerate(lines, 1):
        line = line.strip()
        if not line:
            continue
        try:
            rows.append(json.loads(line))
        except json.JSONDecodeError:
            raise UsageError(f"line {i} is not valid JSON")
    counts: dict[tuple[str, str], int] = {}
    failures = []
    f_grid: dict[tuple[int, int], list[tuple[int, object]]] = {}
    for row in rows:
        key = (row.get("check_id", "?"), row.get("status", "?"))
        counts[key] = counts.get(key, 0) + 1
        if row.get("status") in (FAIL, ERROR, "not_a_power"):
            failures.append(row)
        if "f" in row:
            params = row.get("params", {})
            f_grid.setdefault((params.get("p"), params.get("m")), []).append(
                (params.get("r"), row.get("f")))
    for (cid, status), n in sorted(counts.items()):
        print(f"{cid:24s} {status:13s} {n}")
    if f_grid:
        print()
        for (p, m), cells in sorted(f_grid.items()):
            body = "  ".join(f"r={r}:{'?' if f is None else f}"
                             for r, f in sorted(cells))
            print(f"p={p} m={m}:  {body}")
    if failures:
        print()
        for row in failures:
            print(f"{row.get('status')}: {row.get('check_id')} "
                  f"{row.get('params')} "
                  f"witness={json.dumps(row.get('witness'), sort_keys=True)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qcong",
        description="Exact verification of q-congruences in Q[q]/[p]^r.")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run named checks over ranges")
    verify.add_argument("checks", nargs="*",
                        help="check ids (default: all; see --list)")
    verify.add_argument("--list", action="store_true",
                        help="list available check ids and exit")
    verify.add_argument("--p", help='odd primes, e.g. "3..13" or "5,7"')
    verify.add_argument("--m", help='steps m, e.g. "1..8"')
    verify.add_argument("--r", help='shifts r (default: 1..2m per m)')
    verify.add_argument("--mod-power", type=int, choices=(1, 2), default=2)
    verify.add_argument("--cap-n", type=int, default=None,
                        help="override identity size caps")
    verify.add_argument("--jobs", type=int, default=1)
    verify.add_argument("--out", default=None, help="output path (default stdout)")
    verify.add_argument("--format", choices=("text", "jsonl", "csv"),
                        default="text")
    verify.set_defaults(func=cmd_verify)

    fsearch = sub.add_parser("fsearch",
                             help="compute the aligning exponent table")
    fsearch.add_argument("--p", required=True)
    fsearch.add_argument("--m", required=True)
    fsearch.add_argument("--r", required=True)
    fsearch.add_argument("--brute", action="store_true",
                         help="cross-check with the scanning oracle")
    fsearch.add_argument("--bound", type=int, default=None,
                         help="scan window for --brute (default p^2)")
    fsearch.add_argument("--mod-power", type=int, choices=(1, 2), default=2)
    fsearch.add_argument("--expected", default=None,
                         help="CSV of p,m,r,f rows to compare against")
    fsearch.add_argument("--jobs", type=int, default=1)
    fsearch.add_argument("--out", default=None)
    fsearch.add_argument("--format", choices=("text", "jsonl", "csv"),
                         default="text")
    fsearch.set_defaults(func=cmd_fsearch)

    suite_parser = sub.add_parser("suite", help="run the acceptance suite")
    suite_parser.add_argument("level", choices=("quick", "full"))
    suite_parser.set_defaults(func=cmd_suite)

    report = sub.add_parser("report", help="summarize a JSONL record file")
    report.add_argument("input", help='path to JSON-lines records, or "-"')
    report.set_defaults(func=cmd_report)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    if getattr(args, "list", False):
        for cid in sorted(runner.REGISTRY):
            flag = " (conjectural)" if runner.REGISTRY[cid].conjectural else ""
            print(f"{cid}{flag}")
        return 0
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
