# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled exact elimination kernel.

Twin of ``_elim_py.py``; same algorithm, same pivot choices, identical
output.  Entries are arbitrary-precision Python ints (exactness is the
whole point); the speedup comes from compiled loop and dict traffic.
"""

from math import gcd as _gcd

BACKEND = "cython"


cdef object _content(dict row):
    cdef object g = 0
    for v in row.values():
        g = _gcd(g, v)
        if g == 1:
            return g
    return g


cdef dict _strip_normalize(dict row):
    cdef object g = _content(row)
    if g > 1:
        for c in row:
            row[c] = row[c] // g
    return row


cdef dict _combine(dict target, object tval, dict pivot_row, object pval):
    cdef dict out = {}
    cdef object w
    for c, v in target.items():
        out[c] = pval * v
    for c, v in pivot_row.items():
        w = out.get(c, 0) - tval * v
        if w:
            out[c] = w
        else:
            out.pop(c, None)
    return _strip_normalize(out)


def rref(rows, bint full=True):
    """See _elim_py.rref; returns (piv_cols, piv_rows)."""
    cdef list work = []
    cdef dict row, new, prow
    cdef dict col_count = {}
    cdef object pcol, pval, c, v
    cdef Py_ssize_t i, k, best
    for r in rows:
        row = {c: v for c, v in (<dict?>r).items() if v}
        if row:
            work.append(_strip_normalize(row))
    cdef Py_ssize_t nrows = len(work)
    cdef list alive = [True] * nrows
    for row in work:
        for c in row:
            col_count[c] = col_count.get(c, 0) + 1

    cdef list finished = []
    cdef Py_ssize_t n_alive = nrows
    while n_alive:
        best = -1
        best_key = None
        for i in range(nrows):
            if not alive[i]:
                continue
            row = work[i]
            key = (len(row), i)
            if best_key is None or key < best_key:
                best_key = key
                best = i
        prow = work[best]
        alive[best] = False
        n_alive -= 1
        for c in prow:
            col_count[c] -= 1
        pcol = None
        pkey = None
        for c, v in prow.items():
            key = (col_count[c], (v if v > 0 else -v).bit_length(), c)
            if pkey is None or key < pkey:
                pkey = key
                pcol = c
        if prow[pcol] < 0:
            for c in prow:
                prow[c] = -prow[c]
        pval = prow[pcol]

        for i in range(nrows):
            if not alive[i]:
                continue
            row = work[i]
            if pcol not in row:
                continue
            for c in row:
                col_count[c] -= 1
            new = _combine(row, row[pcol], prow, pval)
            work[i] = new
            if new:
                for c in new:
                    col_count[c] = col_count.get(c, 0) + 1
            else:
                alive[i] = False
                n_alive -= 1
        if full:
            for k in range(len(finished)):
                fc, frow = finished[k]
                if pcol in <dict>frow:
                    finished[k] = (fc, _combine(<dict>frow, (<dict>frow)[pcol], prow, pval))
        finished.append((pcol, prow))

    finished.sort(key=lambda t: t[0])
    return [t[0] for t in finished], [t[1] for t in finished]
