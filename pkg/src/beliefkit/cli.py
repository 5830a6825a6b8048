"""Command-line front end.

Exit codes: 0 success, 1 validation or parse error, 2 computation error
(total conflict, undefined measure), 3 mismatch against the published tables.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from pathlib import Path

from . import golden, metrics
from .errors import BeliefError, DomainError, ValidationError
from .frame import same_frame
from .fusion import Rule, combine_many, rule_specificity_report
from .io import format_bba, load_document

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_COMPUTE = 2
EXIT_MISMATCH = 3

_DEFAULTS = {"format": "text", "contr_c": metrics.DEFAULT_CONTRADICTION_C, "approach": "both", "out": None}


def _exit_code(exc: Exception) -> int:
    if isinstance(exc, DomainError):
        return EXIT_COMPUTE
    return EXIT_INVALID


def _err(msg: str) -> None:
    print(f"beliefkit: {msg}", file=sys.stderr)


def _num(x, fmt: str) -> str:
    if x is None:
        return "NA" if fmt == "csv" else "n/a"
    return f"{x:.6f}" if fmt == "csv" else f"{x:.4f}"


def _report_columns(approach: str) -> list[str]:
    cols = list(metrics.REPORT_COLUMNS)
    if approach == "1":
        cols.remove("degree_specificity_2")
    elif approach == "2":
        cols.remove("degree_specificity_1")
    return cols


def _write(text: str, out) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_measures(args) -> int:
    cols = _report_columns(args.approach)
    names = [metrics.REPORT_COLUMNS[c] for c in cols]
    rows = []
    status = EXIT_OK
    for path in args.files:
        try:
            doc = load_document(path)
            rep = metrics.measure_report(doc.bba, c=args.contr_c)
        except (BeliefError, OSError) as exc:
            _err(f"{path}: {exc}")
            status = max(status, _exit_code(exc))
            continue
        label = doc.name or Path(path).stem
        notes = "; ".join(f"{metrics.REPORT_COLUMNS[k]}: {v}" for k, v in rep.reasons.items()
                          if k in cols)
        rows.append((label, [getattr(rep, c) for c in cols], notes))

    lines = []
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["bba", *names, "notes"])
        for label, vals, notes in rows:
            w.writerow([label, *(_num(v, "csv") for v in vals), notes])
        lines.append(buf.getvalue())
    else:
        width = max([len("bba")] + [len(r[0]) for r in rows])
        lines.append(f"{'bba':<{width}}" + "".join(f"{n:>9}" for n in names) + "\n")
        for label, vals, notes in rows:
            lines.append(f"{label:<{width}}" + "".join(f"{_num(v, 'text'):>9}" for v in vals) + "\n")
            if notes:
                lines.append(f"{'':<{width}}  absent: {notes}\n")
    _write("".join(lines), args.out)
    return status


def _load_all(paths):
    docs = [load_document(p) for p in paths]
    same_frame(*(d.bba for d in docs))
    return docs


def cmd_combine(args) -> int:
    docs = _load_all(args.files)
    if len(docs) < 2:
        raise ValidationError("combine needs at least two bba files")
    out = combine_many(args.rule, [d.bba for d in docs])
    _write(format_bba(out, name=Rule.parse(args.rule).value), args.out)
    return EXIT_OK


def cmd_compare(args) -> int:
    a, b = _load_all([args.file_a, args.file_b])
    rules = [Rule.parse(r) for r in args.rules.split(",")] if args.rules else list(Rule)
    rows = rule_specificity_report(a.bba, b.bba, rules)
    frame = a.bba.frame
    support = sorted({bits for r in rows if r.combined is not None for bits, _ in r.combined.items()})
    subsets = [frame.format_bits(bits) for bits in support]
    show1 = args.approach in ("both", "1")
    show2 = args.approach in ("both", "2")
    header = ["column", *subsets]
    if show1:
        header += ["m_s1", "dS1"]
    if show2:
        header += ["m_s2", "dS2"]
    header.append("error")

    table = []
    for r in rows:
        cells = [r.label]
        cells += [_num(r.combined.mass_bits(bits), args.format) if r.combined else "" for bits in support]
        if show1:
            cells += [str(r.x_max_1) if r.x_max_1 else "", _num(r.specificity_1, args.format)]
        if show2:
            cells += [str(r.x_max_2) if r.x_max_2 else "", _num(r.specificity_2, args.format)]
        cells.append(r.error or "")
        table.append(cells)

    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(table)
        text = buf.getvalue()
    else:
        widths = [max(len(str(row[i])) for row in [header, *table]) for i in range(len(header))]
        text = "".join(
            "  ".join(f"{str(c):>{w}}" for c, w in zip(row, widths)).rstrip() + "\n"
            for row in [header, *table]
        )
    _write(text, args.out)
    return EXIT_COMPUTE if any(r.failed for r in rows) else EXIT_OK


def cmd_distance(args) -> int:
    a, b = _load_all([args.file_a, args.file_b])
    d = metrics.jousselme_distance(a.bba, b.bba)
    _write(_num(d, "csv") + "\n", args.out)
    return EXIT_OK


def cmd_autoconflict(args) -> int:
    doc = load_document(args.file)
    value = metrics.auto_conflict(doc.bba, args.order)
    _write(_num(value, "csv") + "\n", args.out)
    return EXIT_OK


def cmd_paper_tables(args) -> int:
    text, failures = golden.render_report()
    _write(text, args.out)
    if failures:
        _err(f"{len(failures)} value(s) deviate from the published tables:")
        for c in failures:
            print("  " + c.describe(), file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def _add_common(p: argparse.ArgumentParser, suppress: bool) -> None:
    default = argparse.SUPPRESS if suppress else None
    p.add_argument("--format", choices=["text", "csv"], default=default)
    p.add_argument("--contr-c", type=float, default=default, dest="contr_c",
                   help="normalization constant of the contradiction (default 2)")
    p.add_argument("--approach", choices=["1", "2", "both"], default=default,
                   help="which most-specific-bba approach to report (default both)")
    p.add_argument("--out", default=default, help="write output to this file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="beliefkit", description=__doc__.splitlines()[0])
    _add_common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("measures", help="uncertainty measures of each bba file")
    p.add_argument("files", nargs="+")
    p.set_defaults(func=cmd_measures)

    p = sub.add_parser("combine", help="combine bba files with one rule")
    p.add_argument("--rule", required=True, help=", ".join(r.value for r in Rule))
    p.add_argument("files", nargs="+")
    p.set_defaults(func=cmd_combine)

    p = sub.add_parser("compare", help="degree of specificity of each rule's output")
    p.add_argument("--rules", default=None, help="comma-separated rules (default all)")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("distance", help="Jousselme distance between two bbas")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("autoconflict", help="auto-conflict of order N")
    p.add_argument("-n", type=int, required=True, dest="order")
    p.add_argument("file")
    p.set_defaults(func=cmd_autoconflict)

    p = sub.add_parser("paper-tables", help="recompute the published tables and check them")
    p.set_defaults(func=cmd_paper_tables)

    for sp in sub.choices.values():
        _add_common(sp, suppress=True)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse uses 2 for usage errors; here 2 means a computation error
        return EXIT_OK if exc.code == 0 else EXIT_INVALID
    for key, value in _DEFAULTS.items():
        if getattr(args, key, None) is None:
            setattr(args, key, value)
    try:
        return args.func(args)
    except (BeliefError, OSError) as exc:
        _err(str(exc))
        return _exit_code(exc)


if __name__ == "__main__":
    sys.exit(main())
