# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels: row DP and bitboard enumeration.

Same interface as the pure module.  Boards beyond 64 cells fall back to
the pure enumerator so the occupancy always fits one machine word.
"""

from cpython cimport array
from libc.stdlib cimport free, malloc

import array

BACKEND = "compiled"


def dp_rows(int n_states, in_ptr, in_src, shifts, int start, terminal,
            int rows):
    """Run the row transfer `rows` times from the all-empty virtual row.

    Per-state values are vectors of counts indexed by domino total d,
    packed into one big int (a fixed bit window per d slot; shifts[b] is
    the window width times the number of dominoes state b starts).
    Returns the packed terminal sum after 0..rows transitions; entry r
    encodes the counts for a board of r rows.
    """
    cdef array.array ptr_a = array.array("i", list(in_ptr))
    cdef array.array src_a = array.array("i", list(in_src))
    cdef array.array sh_a = array.array("i", list(shifts))
    cdef array.array term_a = array.array("i", list(terminal))
    cdef int[:] ptr = ptr_a
    cdef int[:] src = src_a
    cdef int[:] sh = sh_a
    cdef int[:] term = term_a
    cdef int nt = term.shape[0]
    cdef list vec = [0] * n_states
    cdef list new
    cdef list totals
    cdef int b, k, r, i
    cdef object s, tot

    vec[start] = 1
    tot = 0
    for i in range(nt):
        tot = tot + vec[term[i]]
    totals = [tot]
    for r in range(rows):
        new = [0] * n_states
        for b in range(n_states):
            s = 0
            for k in range(ptr[b], ptr[b + 1]):
                s = s + vec[src[k]]
            if s:
                new[b] = s << sh[b]
        vec = new
        tot = 0
        for i in range(nt):
            tot = tot + vec[term[i]]
        totals.append(tot)
    return totals


cdef struct Search:
    int m
    int want_d
    unsigned long long *masks
    unsigned long long *halos
    int *bounds
    long long *counts
    int *chosen


cdef void _visit(Search *s, int start, unsigned long long occupied,
                 int placed, list found, list cells):
    cdef int j, i
    if s.want_d < 0:
        s.counts[placed] += 1
        if found is not None:
            found.append(tuple([cells[s.chosen[i]] for i in range(placed)]))
    elif placed == s.want_d:
        s.counts[placed] += 1
        if found is not None:
            found.append(tuple([cells[s.chosen[i]] for i in range(placed)]))
        return
    for j in range(start, s.m):
        if s.want_d >= 0 and placed + s.bounds[j] < s.want_d:
            break  # bounds[] is non-increasing in j
        if s.halos[j] & occupied:
            continue
        s.chosen[placed] = j
        _visit(s, j + 1, occupied | s.masks[j], placed + 1, found, cells)


def enumerate_boards(int rows, int cols, int want_d, bint collect):
    """Backtracking enumeration of non-bonding placements.

    want_d < 0: visit every placement; counts[k] = number of placements
    of exactly k dominoes.  want_d >= 0: count (and optionally collect)
    only placements of exactly want_d dominoes, pruning branches whose
    row-capacity bound cannot reach want_d.  Placements are collected in
    canonical candidate order as tuples of cell-index pairs.
    """
    from . import _pure

    if rows * cols > 64:
        return _pure.enumerate_boards(rows, cols, want_d, collect)
    cells, py_masks, py_halos, py_bounds = _pure._candidates(rows, cols)
    cdef int m = len(cells)
    cdef int n_counts = rows * cols // 2 + 1
    cdef list found = [] if collect else None
    cdef Search s
    cdef int i
    s.m = m
    s.want_d = want_d
    s.masks = <unsigned long long *> malloc(m * sizeof(unsigned long long))
    s.halos = <unsigned long long *> malloc(m * sizeof(unsigned long long))
    s.bounds = <int *> malloc(m * sizeof(int))
    s.counts = <long long *> malloc(n_counts * sizeof(long long))
    s.chosen = <int *> malloc((n_counts + 1) * sizeof(int))
    if (s.masks is NULL or s.halos is NULL or s.bounds is NULL
            or s.counts is NULL or s.chosen is NULL):
        free(s.masks); free(s.halos); free(s.bounds)
        free(s.counts); free(s.chosen)
        raise MemoryError()
    try:
        for i in range(m):
            s.masks[i] = py_masks[i]
            s.halos[i] = py_halos[i]
            s.bounds[i] = py_bounds[i]
        for i in range(n_counts):
            s.counts[i] = 0
        _visit(&s, 0, 0, 0, found, cells)
        counts = [s.counts[i] for i in range(n_counts)]
    finally:
        free(s.masks); free(s.halos); free(s.bounds)
        free(s.counts); free(s.chosen)
    return counts, found
