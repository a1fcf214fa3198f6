"""Command-line front end.

Data files are JSON objects::

    {"kind": "or",  "h": 0, "n": 16, "branch": [8], "boundary": [], "one_sided": [3, 1]}
    {"kind": "op",  "h": 0, "n": 5,  "thetas": [1, 1, 3], "etas": []}
    {"kind": "pre", "h": 0, "m": 8,  "thetas": [4], "etas": [3, 1]}

Exit status: 0 on success or "true", 1 on invalid data or "false", 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .data_model import OpData, OrData, PreData
from .equivalence import canon_or, eq_or
from .errors import BudgetExceeded, PeriodAtlasError
from .large_period import check_table, classes_in_range, enumerate_classes, max_period
from .monodromy_oracle import oracle_genus, oracle_genus_or
from .op_maps import canon_op, genus_op, power_op, validate_op
from .or_maps import genus_or, lift_predata, power_or, predata_of, validate_or


class UsageError(Exception):
    pass


def load_data(path: str):
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from exc
    return data_from_json(obj)


def data_from_json(obj: dict):
    if not isinstance(obj, dict):
        raise UsageError("data file must hold a JSON object")
    kind = obj.get("kind")
    try:
        if kind == "or":
            return OrData(obj["h"], obj["n"], tuple(obj.get("branch", ())),
                          tuple(obj.get("boundary", ())), tuple(obj.get("one_sided", ())))
        if kind == "op":
            return OpData(obj["h"], obj["n"], tuple(obj.get("thetas", ())), tuple(obj.get("etas", ())))
        if kind == "pre":
            return PreData(obj["h"], obj["m"], tuple(obj.get("thetas", ())), tuple(obj.get("etas", ())))
    except KeyError as exc:
        raise UsageError(f"missing field {exc.args[0]!r} for kind {kind!r}") from exc
    raise UsageError(f"unknown kind {kind!r}; expected 'or', 'op' or 'pre'")


def data_to_json(d) -> dict:
    if isinstance(d, OrData):
        return {"kind": "or", "h": d.h, "n": d.n, "branch": list(d.branch),
                "boundary": list(d.boundary), "one_sided": list(d.one_sided)}
    if isinstance(d, PreData):
        return {"kind": "pre", "h": d.h, "m": d.m, "thetas": list(d.thetas), "etas": list(d.etas)}
    return {"kind": "op", "h": d.h, "n": d.n, "thetas": list(d.thetas), "etas": list(d.etas)}


class Output:
    def __init__(self, as_json: bool, stream=None):
        self.as_json = as_json
        self.stream = stream or sys.stdout

    def emit(self, text: str, obj: dict):
        if self.as_json:
            line = json.dumps(obj, sort_keys=True, separators=(",", ":"))
        else:
            line = text
        print(line, file=self.stream)


def _validate(d):
    return validate_or(d) if isinstance(d, OrData) else validate_op(d)


# ---------------------------------------------------------------- subcommands

def cmd_validate(args, out):
    d = load_data(args.file)
    rep = _validate(d)
    if out.as_json:
        out.emit("", {"data": str(d), **rep.as_dict()})
    else:
        out.emit(f"{d}: {'valid' if rep.valid else 'invalid'}", {})
        for c in rep.conditions:
            mark = "ok  " if c.passed else "FAIL"
            out.emit(f"  {mark} {c.name}" + (f" ({c.detail})" if c.detail and not c.passed else ""), {})
        if rep.genus is not None and rep.valid:
            out.emit(f"  genus {rep.genus}", {})
    return 0 if rep.valid else 1


def cmd_genus(args, out):
    d = load_data(args.file)
    g = genus_or(d) if isinstance(d, OrData) else genus_op(d)
    out.emit(str(g), {"data": str(d), "genus": g})
    return 0


def cmd_canon(args, out):
    d = load_data(args.file)
    if isinstance(d, OrData):
        key = canon_or(d)
        rep = key.data()
        out.emit(str(rep), {"canon": data_to_json(rep), "orientable_quotient": key.shape[5]})
    else:
        rep = canon_op(d)
        out.emit(str(rep), {"canon": data_to_json(rep)})
    return 0


def cmd_eq(args, out):
    d1, d2 = load_data(args.file1), load_data(args.file2)
    if isinstance(d1, OrData) != isinstance(d2, OrData):
        same = False
    elif isinstance(d1, OrData):
        same = eq_or(d1, d2)
    else:
        same = type(d1) is type(d2) and canon_op(d1) == canon_op(d2)
    out.emit("equivalent" if same else "not equivalent", {"equivalent": same})
    return 0 if same else 1


def cmd_predata(args, out):
    d = load_data(args.file)
    if not isinstance(d, OrData):
        raise UsageError("predata needs orientation reversing data (kind 'or')")
    p = predata_of(d)
    out.emit(str(p), {"pre": data_to_json(p)})
    return 0


def cmd_lift(args, out):
    d = load_data(args.file)
    if isinstance(d, OrData):
        raise UsageError("lift needs pre-data (kind 'pre' or 'op')")
    p = PreData(d.h, d.period, d.thetas, d.etas)
    lifts = lift_predata(p)
    for lift in lifts:
        rep = validate_or(lift)
        out.emit(f"{lift}  {'valid' if rep.valid else 'invalid'}",
                 {"data": data_to_json(lift), "valid": rep.valid, "genus": rep.genus})
    return 0


def cmd_power(args, out):
    d = load_data(args.file)
    res = power_or(d, args.r) if isinstance(d, OrData) else power_op(d, args.r)
    out.emit(str(res), {"data": data_to_json(res), "r": args.r})
    return 0


def cmd_enumerate(args, out):
    g = args.g
    if args.n is not None:
        records = enumerate_classes(g, args.n)
    else:
        records = classes_in_range(g, args.min_period)
    for rec in records:
        out.emit(f"n={rec.n:<4} {str(rec.representative):<36} pre {str(rec.pre):<28} {rec.quotient}",
                 {"g": rec.g, "n": rec.n, "data": data_to_json(rec.representative),
                  "pre": data_to_json(rec.pre), "quotient": str(rec.quotient),
                  "x": list(rec.x_list), "y": list(rec.y_list)})
    if not out.as_json:
        out.emit(f"{len(records)} classes", {})
    return 0


def cmd_tables(args, out):
    report = check_table(args.check, args.g_max)
    for c in report.checks:
        rec = c.record
        out.emit(f"g={rec.g:<3} n={rec.n:<4} {str(rec.representative):<36} {c.table}: "
                 f"{', '.join(c.rows) if c.ok else 'NO MATCH'}",
                 {"g": rec.g, "n": rec.n, "data": data_to_json(rec.representative),
                  "table": c.table, "rows": list(c.rows), "ok": c.ok})
    for note in report.notes:
        out.emit(note, {"note": note})
    summary = f"{args.check}: {len(report.checks)} classes checked, {len(report.mismatches)} mismatches"
    out.emit(summary, {"table": args.check, "checked": len(report.checks),
                       "mismatches": len(report.mismatches), "ok": report.ok})
    return 0 if report.ok else 1


def cmd_oracle(args, out):
    d = load_data(args.file)
    if isinstance(d, OrData):
        formula, cycles = genus_or(d), oracle_genus_or(d, check=False)
    else:
        formula, cycles = genus_op(d), oracle_genus(d, check=False)
    agree = formula == cycles
    out.emit(f"formula {formula}, cycle count {cycles}: {'agree' if agree else 'DISAGREE'}",
             {"formula": formula, "cycle_count": cycles, "agree": agree})
    return 0 if agree else 1


def cmd_max_period(args, out):
    n = max_period(args.g)
    out.emit(str(n), {"g": args.g, "max_period": n})
    return 0


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="one JSON object per line")

    parser = argparse.ArgumentParser(prog="period-atlas",
                                     description="Classify periodic maps of surfaces from their data.")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, fn, help_ in (("validate", cmd_validate, "check realizability conditions"),
                            ("genus", cmd_genus, "genus of the surface"),
                            ("canon", cmd_canon, "canonical representative"),
                            ("predata", cmd_predata, "pre-data of orientation reversing data"),
                            ("lift", cmd_lift, "all orientation reversing data over pre-data"),
                            ("oracle", cmd_oracle, "genus by cycle counting vs the formula")):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("file")
        p.set_defaults(func=fn)

    p = sub.add_parser("eq", parents=[common], help="are two data conjugate")
    p.add_argument("file1")
    p.add_argument("file2")
    p.set_defaults(func=cmd_eq)

    p = sub.add_parser("power", parents=[common], help="data of the r-th power")
    p.add_argument("file")
    p.add_argument("-r", type=int, required=True)
    p.set_defaults(func=cmd_power)

    p = sub.add_parser("enumerate", parents=[common], help="all orientation reversing classes of a genus")
    p.add_argument("-g", type=int, required=True)
    grp = p.add_mutually_exclusive_group()
    grp.add_argument("-n", type=int)
    grp.add_argument("--min-period", type=int, default=2)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("tables", parents=[common], help="check a classification table")
    p.add_argument("--check", choices=["t0", "bc2", "bc4", "bc3", "4g-4"], required=True)
    p.add_argument("--g-max", type=int, required=True)
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("max-period", parents=[common], help="largest orientation reversing period")
    p.add_argument("-g", type=int, required=True)
    p.set_defaults(func=cmd_max_period)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    out = Output(args.json)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"period-atlas: error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, BudgetExceeded, PeriodAtlasError) as exc:
        print(f"period-atlas: {exc}", file=sys.stderr)
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
