"""Command-line interface.

Subcommands cover state inspection, counting, max fillings, placement
enumeration, generating functions, the verification suite, and file
exports.  All output is deterministic; `verify` exits nonzero when any
check fails.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import analysis, gf, io_export, refdata
from .counting import (brute_force_enumerate, count_table, max_fill_table)
from .words import enumerate_states

GF_RECORD_GRAMMAR = "record := kind SP int SP int SP int SP int NL " \
                    "(kind 'a' numerator / 'b' denominator; ints are " \
                    "cols, x-exponent, y-exponent, coefficient)"


def _cmd_states(args):
    space = enumerate_states(args.cols)
    if args.format == "json":
        print(json.dumps({"cols": args.cols, "count": len(space),
                          "words": list(space.words)}))
    else:
        for w in space.words:
            print(w)
        print("%d states for width %d" % (len(space), args.cols))
    return 0


def _cmd_count(args):
    table = count_table(args.cols, args.rows)
    row = table.row(args.rows)
    for d, v in enumerate(row):
        print("%d %d" % (d, v))
    return 0


def _cmd_table(args):
    table = count_table(args.cols, args.rows_max)
    if args.format == "csv":
        sys.stdout.write(io_export.write_table_csv(table))
        return 0
    width = max(len(str(v)) for r in range(table.rows_max + 1)
                for v in table.row(r))
    for r in range(table.rows_max + 1):
        print(" ".join(str(v).rjust(width) for v in table.row(r)))
    return 0


def _cmd_maxfill(args):
    fills = max_fill_table(args.rows_max, args.cols_max)
    for r in range(1, args.rows_max + 1):
        print(" ".join(str(fills[(r, c)]).rjust(3)
                       for c in range(1, args.cols_max + 1)))
    return 0


def _cmd_enumerate(args):
    found = brute_force_enumerate(args.rows, args.cols, args.dominoes)
    for k, placement in enumerate(found):
        coords = " ".join("(%d,%d)-(%d,%d)" % (a[0], a[1], b[0], b[1])
                          for a, b in placement)
        print("%d: %s" % (k, coords))
    print("%d placements" % len(found))
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        for k, placement in enumerate(found):
            name = io_export.board_filename(args.rows, args.cols,
                                            args.dominoes, k)
            with open(os.path.join(args.out, name), "w") as fh:
                fh.write(io_export.render_svg(placement, args.rows, args.cols))
        print("wrote %d files to %s" % (len(found), args.out))
    return 0


def _gf_for(cols, engine):
    if engine == "both":
        a = gf.cached_gf(cols, "eliminate")
        b = gf.cached_gf(cols, "fit")
        if a != b:
            raise SystemExit("engines disagree for width %d" % cols)
        return a
    return gf.cached_gf(cols, engine)


def _cmd_gf(args):
    g = _gf_for(args.cols, args.engine)
    if args.format == "paper-gf":
        sys.stdout.write(io_export.write_gf_file(g, args.cols))
    elif args.format == "json":
        print(json.dumps({
            "cols": args.cols,
            "num": [[i, j, v] for (i, j), v in sorted(g.num.terms.items())],
            "den": [[i, j, v] for (i, j), v in sorted(g.den.terms.items())],
        }))
    else:
        print("num: %s" % g.num)
        print("den: %s" % g.den)
    return 0


def _cmd_export_gf(args):
    g = _gf_for(args.cols, args.engine)
    path = args.out
    if os.path.isdir(path):
        path = os.path.join(path, io_export.gf_filename(args.cols))
    with open(path, "w") as fh:
        fh.write(io_export.write_gf_file(g, args.cols))
    print("wrote %s" % path)
    return 0


def _cmd_export_table(args):
    table = count_table(args.cols, args.rows_max)
    with open(args.out, "w") as fh:
        fh.write(io_export.write_table_csv(table))
    print("wrote %s" % args.out)
    return 0


def _cmd_render(args):
    found = brute_force_enumerate(args.rows, args.cols, args.dominoes)
    if args.index is not None:
        if not 0 <= args.index < len(found):
            raise SystemExit("index %d out of range (%d placements)"
                             % (args.index, len(found)))
        with open(args.out, "w") as fh:
            fh.write(io_export.render_svg(found[args.index], args.rows,
                                          args.cols))
        print("wrote %s" % args.out)
        return 0
    os.makedirs(args.out, exist_ok=True)
    for k, placement in enumerate(found):
        name = io_export.board_filename(args.rows, args.cols, args.dominoes, k)
        with open(os.path.join(args.out, name), "w") as fh:
            fh.write(io_export.render_svg(placement, args.rows, args.cols))
    print("wrote %d files to %s" % (len(found), args.out))
    return 0


# -- verification suite ---------------------------------------------------------


def _verify_tables(checks):
    for c, rows in sorted(refdata.COUNT_ROWS.items()):
        table = count_table(c, max(rows))
        ok_rows = sum(1 for r, vals in rows.items()
                      if table.row(r) == tuple(vals))
        checks.append(("reference-table-width-%d" % c, ok_rows == len(rows),
                       "%d/%d rows match" % (ok_rows, len(rows))))
    for c, rows in sorted(refdata.PARTIAL_ROWS.items()):
        table = count_table(c, max(rows))
        for r, cells in rows.items():
            bad = {d: (v, table.value(r, d)) for d, v in cells.items()
                   if table.value(r, d) != v}
            checks.append(("reference-partial-row-%dx%d" % (r, c), not bad,
                           "all %d printed cells match" % len(cells)
                           if not bad else "mismatches: %s" % bad))
    diag = analysis.diagonal_slice(max(refdata.SQUARE_ROWS))
    ok = all(diag[r] == vals for r, vals in refdata.SQUARE_ROWS.items())
    checks.append(("reference-square-table", ok, ""))
    bad = []
    for (r, c), v in sorted(refdata.MAX_FILL.items()):
        got = max_fill_table(r, c)[(r, c)]
        if (r, c) in refdata.MISPRINTED_MAX_FILL:
            printed, true = refdata.MISPRINTED_MAX_FILL[(r, c)]
            if got != true or got == printed:
                bad.append((r, c, v, got))
        elif got != v:
            bad.append((r, c, v, got))
    checks.append(("reference-max-fill", not bad,
                   "two known misprints corrected" if not bad
                   else "mismatches: %s" % bad))


def _verify_gfs(checks, cols_max):
    from .polys import BiPoly, RationalGF

    for c, (num, den) in sorted(refdata.GF_TERMS.items()):
        if c > cols_max:
            continue
        want = RationalGF(BiPoly(num), BiPoly(den))
        got = gf.cached_gf(c, "fit")
        checks.append(("reference-gf-width-%d" % c, got == want, ""))
    for c in range(1, cols_max + 1):
        rep = gf.verify_gf(c)
        for name, ok, detail in rep.checks:
            checks.append(("width-%d-%s" % (c, name), ok, detail))
    for c in sorted({cc for cc, _ in refdata.PUBLISHED_SLICES}):
        if c > cols_max:
            continue
        rep = analysis.published_slice_report(c)
        for d, ok in rep.items():
            if (c, d) in refdata.MISPRINTED_SLICES:
                checks.append(("printed-slice-%d-%d-misprint" % (c, d), not ok,
                               "mismatch with counts expected and found"))
            else:
                checks.append(("printed-slice-%d-%d" % (c, d), ok, ""))
    for c, (num, den) in sorted(refdata.ROW_SUM_GF.items()):
        if c > cols_max:
            continue
        want = RationalGF(BiPoly({(i, 0): v for i, v in enumerate(num) if v}),
                          BiPoly({(i, 0): v for i, v in enumerate(den) if v}))
        checks.append(("reference-row-sum-gf-width-%d" % c,
                       analysis.row_sum_gf(c) == want, ""))


def _verify_conjectures(checks, r_max, c_max):
    reports = [analysis.check_d0_closed_form(r_max, c_max),
               analysis.check_d1_closed_form(r_max, c_max),
               analysis.check_d2_formula(max(r_max, 3), max(c_max, 3))]
    reports.extend(analysis.check_maxfill_conjectures(r_max, c_max))
    reports.extend(analysis.check_narrow_max_fill(30))
    for rep in reports:
        detail = rep.domain_checked if rep.ok else \
            "counterexample %s" % (rep.counterexample,)
        checks.append((rep.name, rep.ok, detail))


def _cmd_verify(args):
    checks = []
    if args.suite in ("all", "tables"):
        _verify_tables(checks)
    if args.suite in ("all", "gfs"):
        _verify_gfs(checks, args.cols_max)
    if args.suite in ("all", "conjectures"):
        _verify_conjectures(checks, args.rows_max, args.cols_max)
    failed = [c for c in checks if not c[1]]
    if args.report == "json":
        print(json.dumps({"ok": not failed,
                          "checks": [{"name": n, "ok": ok, "detail": d}
                                     for n, ok, d in checks]}))
    else:
        for name, ok, detail in checks:
            line = "%-40s %s" % (name, "ok" if ok else "FAIL")
            if detail:
                line += "  (%s)" % detail
            print(line)
        print("%d checks, %d failed" % (len(checks), len(failed)))
    return 1 if failed else 0


def build_parser():
    ap = argparse.ArgumentParser(
        prog="nonbond",
        description="Exact counts and generating functions for placements "
                    "of mutually non-adjacent dominoes on rectangular "
                    "boards. Export format: " + GF_RECORD_GRAMMAR)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("states", help="row words for one board width")
    p.add_argument("--cols", type=int, required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(fn=_cmd_states)

    p = sub.add_parser("count", help="counts per domino number for one board")
    p.add_argument("--cols", type=int, required=True)
    p.add_argument("--rows", type=int, required=True)
    p.set_defaults(fn=_cmd_count)

    p = sub.add_parser("table", help="full count table for one width")
    p.add_argument("--cols", type=int, required=True)
    p.add_argument("--rows-max", type=int, required=True)
    p.add_argument("--format", choices=["csv", "text"], default="text")
    p.set_defaults(fn=_cmd_table)

    p = sub.add_parser("maxfill", help="largest domino count per board size")
    p.add_argument("--rows-max", type=int, required=True)
    p.add_argument("--cols-max", type=int, required=True)
    p.set_defaults(fn=_cmd_maxfill)

    p = sub.add_parser("enumerate", help="list every placement of d dominoes")
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--cols", type=int, required=True)
    p.add_argument("--dominoes", type=int, required=True)
    p.add_argument("--out", help="directory for one SVG per placement")
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("gf", help="generating function for one width")
    p.add_argument("--cols", type=int, required=True)
    p.add_argument("--engine", choices=["eliminate", "fit", "both"],
                   default="fit")
    p.add_argument("--format", choices=["paper-gf", "json", "pretty"],
                   default="pretty")
    p.set_defaults(fn=_cmd_gf)

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("--suite", choices=["all", "tables", "gfs", "conjectures"],
                   default="all")
    p.add_argument("--rows-max", type=int, default=10)
    p.add_argument("--cols-max", type=int, default=4)
    p.add_argument("--report", choices=["json", "text"], default="text")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("export-gf",
                       help="write coefficient records (%s)" % GF_RECORD_GRAMMAR)
    p.add_argument("--cols", type=int, required=True)
    p.add_argument("--engine", choices=["eliminate", "fit", "both"],
                   default="fit")
    p.add_argument("--out", required=True)
    p.set_defaults(fn=_cmd_export_gf)

    p = sub.add_parser("export-table", help="write one count table as CSV")
    p.add_argument("--cols", type=int, required=True)
    p.add_argument("--rows-max", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(fn=_cmd_export_table)

    p = sub.add_parser("render", help="draw placements as SVG")
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--cols", type=int, required=True)
    p.add_argument("--dominoes", type=int, required=True)
    p.add_argument("--index", type=int, help="render just this placement")
    p.add_argument("--out", required=True,
                   help="output file (with --index) or directory")
    p.set_defaults(fn=_cmd_render)

    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
