"""Pure-Python kernels: row DP and bitboard enumeration.

Same interface as the compiled module; selected when the extension is
missing or when NONBOND_BACKEND=pure.
"""

from __future__ import annotations

BACKEND = "pure"


def dp_rows(n_states, in_ptr, in_src, shifts, start, terminal, rows):
    """Run the row transfer `rows` times from the all-empty virtual row.

    Per-state values are vectors of counts indexed by domino total d,
    packed into one big int (a fixed bit window per d slot; shifts[b] is
    the window width times the number of dominoes state b starts).
    Returns the packed terminal sum after 0..rows transitions; entry r
    encodes the counts for a board of r rows.
    """
    in_ptr = list(in_ptr)
    in_src = list(in_src)
    shifts = list(shifts)
    terminal = list(terminal)
    vec = [0] * n_states
    vec[start] = 1
    totals = [sum(vec[t] for t in terminal)]
    for _ in range(rows):
        new = [0] * n_states
        for b in range(n_states):
            s = 0
            for k in range(in_ptr[b], in_ptr[b + 1]):
                s += vec[in_src[k]]
            if s:
                new[b] = s << shifts[b]
        vec = new
        totals.append(sum(vec[t] for t in terminal))
    return totals


def _candidates(rows, cols):
    """All dominoes in canonical order: by (row, col) of the first square,
    horizontal before vertical.  Returns (cell pairs, occupancy masks,
    halo masks, prune bounds keyed by candidate index)."""
    cells = []
    for cell in range(rows * cols):
        r, c = divmod(cell, cols)
        if c + 1 < cols:
            cells.append((cell, cell + 1))
        if r + 1 < rows:
            cells.append((cell, cell + cols))
    masks = []
    halos = []
    bounds = []
    per_row = (cols + 1) // 2
    for a, b in cells:
        mask = (1 << a) | (1 << b)
        halo = mask
        for sq in (a, b):
            r, c = divmod(sq, cols)
            if r > 0:
                halo |= 1 << (sq - cols)
            if r + 1 < rows:
                halo |= 1 << (sq + cols)
            if c > 0:
                halo |= 1 << (sq - 1)
            if c + 1 < cols:
                halo |= 1 << (sq + 1)
        masks.append(mask)
        halos.append(halo)
        r, c = divmod(a, cols)
        # Anchors in one row sit >= 2 columns apart, so a row holds at most
        # (cols+1)//2 dominoes; a valid upper bound on what can still fit.
        bounds.append((cols - c + 1) // 2 + per_row * (rows - r - 1))
    return cells, masks, halos, bounds


def enumerate_boards(rows, cols, want_d, collect):
    """Backtracking enumeration of non-bonding placements.

    want_d < 0: visit every placement; counts[k] = number of placements
    of exactly k dominoes.  want_d >= 0: count (and optionally collect)
    only placements of exactly want_d dominoes, pruning branches whose
    row-capacity bound cannot reach want_d.  Placements are collected in
    canonical candidate order as tuples of cell-index pairs.
    """
    cells, masks, halos, bounds = _candidates(rows, cols)
    m = len(cells)
    counts = [0] * (rows * cols // 2 + 1)
    found = [] if collect else None
    chosen = []

    def visit(start, occupied, placed):
        if want_d < 0:
            counts[placed] += 1
            if found is not None:
                found.append(tuple(chosen))
        elif placed == want_d:
            counts[placed] += 1
            if found is not None:
                found.append(tuple(chosen))
            return
        for j in range(start, m):
            if want_d >= 0 and placed + bounds[j] < want_d:
                break  # bounds[] is non-increasing in j
            if halos[j] & occupied:
                continue
            chosen.append(cells[j])
            visit(j + 1, occupied | masks[j], placed + 1)
            chosen.pop()

    visit(0, 0, 0)
    return counts, found
