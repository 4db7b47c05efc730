"""Pure-Python exact elimination kernel.

Twin of ``_elim_cy.pyx``; the two must stay in algorithmic lock-step and
produce byte-identical results (same pivot choices, same normalized rows).

Rows are sparse dicts {column: int} with no stored zeros.  Elimination is
integer cross-multiplication followed by content removal, which keeps every
intermediate value exact and controls coefficient growth on the sparse
+-1-dominated matrices this package produces.  Pivoting is Markowitz-style:
shortest row first, then the column with fewest occurrences among active
rows, with bit-length and index tie-breaks for determinism.
"""

from math import gcd

BACKEND = "python"


def _content(row):
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return 1
    return g


def _strip_normalize(row):
    g = _content(row)
    if g > 1:
        for c in row:
            row[c] //= g
    return row


def _combine(target, tval, pivot_row, pval):
    """Return pval*target - tval*pivot_row, content-normalized."""
    out = {}
    for c, v in target.items():
        out[c] = pval * v
    for c, v in pivot_row.items():
        w = out.get(c, 0) - tval * v
        if w:
            out[c] = w
        else:
            out.pop(c, None)
    return _strip_normalize(out)


def rref(rows, full=True):
    """Reduced row echelon form over Q with integer rows.

    rows: list of {col: int}.  Input dicts are not mutated.
    Returns (piv_cols, piv_rows), sorted by pivot column.  Each returned row
    has gcd 1, a positive entry at its pivot column, and zeros at every other
    pivot column (the latter only when full=True).
    """
    work = []
    for r in rows:
        row = {c: v for c, v in r.items() if v}
        if row:
            work.append(_strip_normalize(row))
    alive = [True] * len(work)
    col_count = {}
    for row in work:
        for c in row:
            col_count[c] = col_count.get(c, 0) + 1

    finished = []  # list of (piv_col, row)
    n_alive = len(work)
    while n_alive:
        best = -1
        best_key = None
        for i, row in enumerate(work):
            if not alive[i]:
                continue
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

        for i, row in enumerate(work):
            if not alive[i] or pcol not in row:
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
            for k, (fc, frow) in enumerate(finished):
                if pcol in frow:
                    finished[k] = (fc, _combine(frow, frow[pcol], prow, pval))
        finished.append((pcol, prow))

    finished.sort(key=lambda t: t[0])
    return [t[0] for t in finished], [t[1] for t in finished]
