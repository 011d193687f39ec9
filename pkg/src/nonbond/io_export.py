"""Serialization of results: coefficient files, CSV tables, SVG boards.

The coefficient file format is line oriented, one record per nonzero
term: `<a|b> <c> <i> <j> <value>` with kind `a` for numerator and `b`
for denominator terms of x^i y^j on width-c boards.  Writers emit a
fixed order (numerator first, exponents ascending); readers accept any
order and any run of blanks between fields.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET
from dataclasses import dataclass

from .counting import CountTable, is_valid_placement
from .polys import BiPoly, RationalGF


@dataclass(frozen=True)
class GfFileRecord:
    kind: str  # 'a' = numerator term, 'b' = denominator term
    c: int
    i: int
    j: int
    coeff: int

    def line(self):
        return "%s %d %d %d %d" % (self.kind, self.c, self.i, self.j,
                                   self.coeff)


def gf_records(gf, c):
    """Records for a normalized GF, numerator first, exponents ascending."""
    if gf.num.const_term != 1 or gf.den.const_term != 1:
        raise ValueError("constant terms must both be +1 before export")
    recs = []
    for kind, poly in (("a", gf.num), ("b", gf.den)):
        for (i, j) in sorted(poly.terms):
            recs.append(GfFileRecord(kind, c, i, j, poly.terms[(i, j)]))
    return recs


def write_gf_file(gf, c):
    return "\n".join(r.line() for r in gf_records(gf, c)) + "\n"


def read_gf_file(text):
    """Parse a coefficient file back into (c, RationalGF).

    Order-insensitive; rejects malformed lines, mixed column counts,
    duplicate records, and missing constant terms.
    """
    num = {}
    den = {}
    c_seen = None
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 5 or parts[0] not in ("a", "b"):
            raise ValueError("line %d: malformed record %r" % (lineno, raw))
        try:
            c, i, j, coeff = (int(p) for p in parts[1:])
        except ValueError:
            raise ValueError("line %d: malformed record %r" % (lineno, raw))
        if c < 1 or i < 0 or j < 0:
            raise ValueError("line %d: malformed record %r" % (lineno, raw))
        if c_seen is None:
            c_seen = c
        elif c != c_seen:
            raise ValueError("line %d: column count %d conflicts with %d"
                             % (lineno, c, c_seen))
        key = (parts[0], i, j)
        if key in seen:
            raise ValueError("line %d: duplicate record for %s x^%d y^%d"
                             % (lineno, parts[0], i, j))
        seen.add(key)
        if coeff:
            (num if parts[0] == "a" else den)[(i, j)] = coeff
    if c_seen is None:
        raise ValueError("no records found")
    if num.get((0, 0)) is None or den.get((0, 0)) is None:
        raise ValueError("missing constant term record")
    return c_seen, RationalGF(BiPoly(num), BiPoly(den))


def gf_filename(c):
    return "gf%d" % c


# -- CSV tables ---------------------------------------------------------------


def write_table_csv(table):
    """Ragged CSV: header `r,d0,d1,...`, one row per r up to its max fill."""
    width = table.max_d() + 1
    lines = ["r," + ",".join("d%d" % d for d in range(width))]
    for r in range(table.rows_max + 1):
        lines.append(",".join([str(r)] + [str(v) for v in table.row(r)]))
    return "\n".join(lines) + "\n"


def read_table_csv(text, cols):
    """Inverse of write_table_csv; the board width is not stored in the CSV."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("r,"):
        raise ValueError("missing header row")
    rows = []
    for expect_r, ln in enumerate(lines[1:]):
        cells = ln.split(",")
        if int(cells[0]) != expect_r:
            raise ValueError("row keys must count up from 0")
        rows.append(tuple(int(v) for v in cells[1:] if v.strip()))
    return CountTable(cols, rows)


# -- SVG boards ---------------------------------------------------------------

CELL = 20  # square cell edge, user units
INSET = 2  # domino rectangle inset from its cell bounds


def render_svg(placement, r, c):
    """Draw a placement on an r x c board as a standalone SVG document.

    Grid of unit-stroke square cells with one inset rectangle per
    domino; geometry is deterministic so documents can be compared and
    re-parsed.
    """
    if not is_valid_placement(r, c, placement):
        raise ValueError("placement is not valid for a %d x %d board" % (r, c))
    w, h = c * CELL, r * CELL
    parts = [
        '<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 %d %d" '
        'width="%d" height="%d">' % (w, h, w, h),
        '<rect x="0" y="0" width="%d" height="%d" fill="white"/>' % (w, h),
    ]
    for k in range(r + 1):
        parts.append('<line x1="0" y1="%d" x2="%d" y2="%d" '
                     'stroke="black" stroke-width="1"/>' % (k * CELL, w, k * CELL))
    for k in range(c + 1):
        parts.append('<line x1="%d" y1="0" x2="%d" y2="%d" '
                     'stroke="black" stroke-width="1"/>' % (k * CELL, k * CELL, h))
    for dom in sorted(placement):
        (r1, c1), (r2, c2) = dom
        x = c1 * CELL + INSET
        y = r1 * CELL + INSET
        dw = (c2 - c1 + 1) * CELL - 2 * INSET
        dh = (r2 - r1 + 1) * CELL - 2 * INSET
        parts.append('<rect class="domino" x="%d" y="%d" width="%d" '
                     'height="%d" fill="#444"/>' % (x, y, dw, dh))
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def parse_svg_placement(text):
    """Recover the domino cell pairs from a rendered document."""
    root = ET.fromstring(text)
    ns = "{http://www.w3.org/2000/svg}"
    doms = []
    for rect in root.iter(ns + "rect"):
        if rect.get("class") != "domino":
            continue
        x = int(rect.get("x")) - INSET
        y = int(rect.get("y")) - INSET
        dw = int(rect.get("width")) + 2 * INSET
        dh = int(rect.get("height")) + 2 * INSET
        r1, c1 = y // CELL, x // CELL
        r2 = r1 + dh // CELL - 1
        c2 = c1 + dw // CELL - 1
        doms.append(((r1, c1), (r2, c2)))
    return tuple(sorted(doms))


def board_filename(r, c, d, k):
    return "board_%dx%d_d%d_%d.svg" % (r, c, d, k)
