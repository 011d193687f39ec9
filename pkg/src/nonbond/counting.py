"""Exact counts of non-bonding domino placements.

The main counter is a row DP over the width-c state space; the number of
arrangements of d dominoes on an r x c board is the coefficient of y^d in
the r-th row polynomial.  A bitboard backtracking enumerator, independent
of the word model, serves as the oracle for small boards.
"""

from __future__ import annotations

from functools import lru_cache

from . import _kernels
from .words import enumerate_states, word_weight, successors

# Row DP supported widths.  Wider boards work in principle but the state
# space (which grows ~2.15x per column) and edge set get expensive.
DP_COLS_LIMIT = 12

# Brute force keeps the whole board in one machine word.
BRUTE_FORCE_CELL_LIMIT = 64


class CountTable:
    """Counts D(r, c, d) for one width c and all r up to rows_max.

    rows[r] is the tuple (D(r,c,0), ..., D(r,c,dbar)) with the trailing
    zero tail removed; D(r,c,0) = 1 always.
    """

    def __init__(self, cols, rows):
        self.cols = cols
        self.rows_max = len(rows) - 1
        self._rows = rows

    def row(self, r):
        return self._rows[r]

    def value(self, r, d):
        row = self._rows[r]
        return row[d] if 0 <= d < len(row) else 0

    def dbar(self, r):
        """Largest d with a nonzero count in row r."""
        return len(self._rows[r]) - 1

    def row_sum(self, r):
        return sum(self._rows[r])

    def max_d(self):
        return max(len(row) for row in self._rows) - 1

    def __eq__(self, other):
        return (isinstance(other, CountTable) and self.cols == other.cols
                and self._rows == other._rows)

    def __repr__(self):
        return "CountTable(cols=%d, rows_max=%d)" % (self.cols, self.rows_max)


@lru_cache(maxsize=None)
def _dp_arrays(c):
    """CSR of incoming transitions per target state, plus per-state data."""
    space = enumerate_states(c)
    n = len(space)
    incoming = [[] for _ in range(n)]
    for a, word in enumerate(space.words):
        for tgt in successors(word):
            incoming[space.index[tgt]].append(a)
    in_ptr = [0]
    in_src = []
    for srcs in incoming:
        in_src.extend(srcs)
        in_ptr.append(len(in_src))
    weights = [word_weight(w) for w in space.words]
    terminal = [k for k, w in enumerate(space.words) if "u" not in w]
    start = space.index[space.all_zero()]
    return in_ptr, in_src, weights, terminal, start


def _unpack_counts(packed, bits):
    """Split a packed DP value back into per-d counts."""
    mask = (1 << bits) - 1
    out = []
    while packed:
        digit = packed & mask
        # The bit budget is sized so no slot ever runs into its neighbour;
        # tripping this means the bound below is wrong.
        assert digit.bit_length() < bits - 1
        out.append(digit)
        packed >>= bits
    return out


def count_table(c, r_max):
    """CountTable for width c, rows 0..r_max."""
    if not 1 <= c <= DP_COLS_LIMIT:
        raise ValueError("width %d outside supported range 1..%d" % (c, DP_COLS_LIMIT))
    if r_max < 0:
        raise ValueError("r_max must be nonnegative")
    in_ptr, in_src, weights, terminal, start = _dp_arrays(c)
    # Any family of placements on a k x c board injects into markings of
    # its cells by {empty, starts-horizontal, starts-vertical}, so every
    # intermediate count is below 3^cells; add slack for the terminal sum.
    cells = (r_max + 1) * c
    bits = (3 ** cells).bit_length() + 24
    shifts = [w * bits for w in weights]
    packed = _kernels.dp_rows(len(weights), in_ptr, in_src, shifts, start,
                              terminal, r_max)
    rows = [tuple(_unpack_counts(p, bits)) or (0,) for p in packed]
    return CountTable(c, rows)


def max_fill(r, c):
    """Largest d with D(r, c, d) > 0."""
    if r < 1 or c < 1:
        raise ValueError("board sides must be >= 1")
    if min(r, c) > DP_COLS_LIMIT:
        raise ValueError("board width %d outside supported range" % min(r, c))
    table = count_table(min(r, c), max(r, c))
    return table.dbar(max(r, c))


def max_fill_table(r_max, c_max):
    """dict (r, c) -> max fill, for 1 <= r <= r_max, 1 <= c <= c_max."""
    out = {}
    for c in range(1, c_max + 1):
        if c > min(r_max, DP_COLS_LIMIT) and c > DP_COLS_LIMIT:
            raise ValueError("width %d outside supported range" % c)
    for r in range(1, r_max + 1):
        for c in range(1, c_max + 1):
            if (c, r) in out:
                out[(r, c)] = out[(c, r)]
            else:
                out[(r, c)] = max_fill(r, c)
    return out


def symmetry_check(c1, c2, r_max):
    """True iff the c1- and c2-wide tables agree on their transposed cells.

    The cube symmetry D(r,c,d) = D(c,r,d) makes row c2 of the width-c1
    table and row c1 of the width-c2 table count the same boards.
    """
    if c1 > r_max or c2 > r_max:
        return True  # no overlapping entries to compare
    t1 = count_table(c1, r_max)
    t2 = count_table(c2, r_max)
    return t1.row(c2) == t2.row(c1)


# --- brute-force oracle ---------------------------------------------------


def _check_board(r, c):
    if r < 1 or c < 1:
        raise ValueError("board sides must be >= 1")
    if r * c > BRUTE_FORCE_CELL_LIMIT:
        raise ValueError("board has %d cells; brute force handles at most %d"
                         % (r * c, BRUTE_FORCE_CELL_LIMIT))


def _to_placements(r, c, raw):
    out = []
    for board in raw:
        out.append(tuple((divmod(a, c), divmod(b, c)) for a, b in board))
    return out


def brute_force_enumerate(r, c, d):
    """Every placement of exactly d dominoes, in canonical order.

    Canonical order: dominoes sorted by (row, col) of their first square
    with horizontal before vertical, placements emitted in lexicographic
    order of that sorting.  Independent of the row-DP code path.
    """
    _check_board(r, c)
    if d < 0:
        raise ValueError("d must be nonnegative")
    if d > r * c // 2:
        return []
    _, found = _kernels.enumerate_boards(r, c, d, True)
    return _to_placements(r, c, found)


def count_placements_by_d(r, c):
    """Counts of placements per d by exhaustive enumeration (oracle)."""
    _check_board(r, c)
    counts, _ = _kernels.enumerate_boards(r, c, -1, False)
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return list(counts)


def placement_cells(placement):
    cells = []
    for dom in placement:
        cells.extend(dom)
    return cells


def is_non_bonding(placement):
    """Pairwise check: squares of distinct dominoes at L1 distance >= 2."""
    for k in range(len(placement)):
        for m in range(k + 1, len(placement)):
            for (r1, c1) in placement[k]:
                for (r2, c2) in placement[m]:
                    if abs(r1 - r2) + abs(c1 - c2) < 2:
                        return False
    return True


def is_valid_placement(r, c, placement):
    """Full soundness check: on board, domino shape, no overlap, non-bonding."""
    seen = set()
    for dom in placement:
        (r1, c1), (r2, c2) = dom
        if not (0 <= r1 <= r2 < r and 0 <= c1 < c and 0 <= c2 < c):
            return False
        if (r2 - r1, c2 - c1) not in ((0, 1), (1, 0)):
            return False
        for cell in dom:
            if cell in seen:
                return False
            seen.add(cell)
    return is_non_bonding(placement)
