"""Exact rational sparse linear algebra.

Scalars are ``fractions.Fraction`` (the field is Q; nothing here ever
rounds).  Vectors are sparse dicts {index: Fraction}, matrices sparse dicts
{(row, col): Fraction}.  Rank / kernel / solve run on an integer elimination
kernel; the compiled kernel is used when available, with the pure-Python
twin as fallback (set EPSLIE_PURE_PYTHON=1 to force it).
"""

from __future__ import annotations

import os
from fractions import Fraction
from math import lcm

if os.environ.get("EPSLIE_PURE_PYTHON"):
    from . import _elim_py as _elim
else:
    try:
        from . import _elim_cy as _elim  # type: ignore[attr-defined]
    except ImportError:
        from . import _elim_py as _elim

BACKEND = _elim.BACKEND

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


class ShapeError(ValueError):
    pass


# ---------------------------------------------------------------------------
# sparse vectors


def vec_clean(v):
    return {k: x for k, x in v.items() if x}

def vec_add(a, b):
    out = dict(a)
    for k, x in b.items():
        y = out.get(k, ZERO) + x
        if y:
            out[k] = y
        else:
            out.pop(k, None)
    return out

def vec_sub(a, b):
    return vec_add(a, {k: -x for k, x in b.items()})

def vec_scale(a, c):
    c = Fraction(c)
    if not c:
        return {}
    return {k: c * x for k, x in a.items()}

def vec_axpy(out, c, v):
    """out += c*v in place (out a plain dict)."""
    if not c:
        return out
    for k, x in v.items():
        y = out.get(k, ZERO) + c * x
        if y:
            out[k] = y
        else:
            out.pop(k, None)
    return out

def vec_eq(a, b):
    return vec_clean(a) == vec_clean(b)

def vec_is_zero(a):
    return not any(a.values())


def vec_primitive(v):
    """Scale to integer entries with gcd 1 and positive leading entry."""
    v = vec_clean(v)
    if not v:
        return {}
    mult = lcm(*[x.denominator for x in v.values()])
    ints = {k: int(x * mult) for k, x in v.items()}
    from math import gcd
    g = 0
    for x in ints.values():
        g = gcd(g, x)
    lead = ints[min(ints)]
    sign = -1 if lead < 0 else 1
    return {k: Fraction(x, sign * g) for k, x in ints.items()}


# ---------------------------------------------------------------------------
# span tracking (incremental echelon basis)


class SpanTracker:
    """Incremental reduced echelon span of sparse rational vectors.

    Basis rows have pivot entry 1, are fully reduced against each other,
    and are returned sorted by pivot index, so the basis of a given span is
    independent of insertion order.
    """

    def __init__(self, vectors=()):
        self.rows = {}  # pivot index -> normalized row
        for v in vectors:
            self.add(v)

    @property
    def dim(self):
        return len(self.rows)

    def reduce(self, vec):
        v = vec_clean(vec)
        for p in sorted(set(v) & set(self.rows)):
            c = v.get(p)
            if c:
                vec_axpy(v, -c, self.rows[p])
        # second pass: reductions can reintroduce earlier pivots
        changed = True
        while changed:
            changed = False
            for p in list(v):
                if p in self.rows and v[p]:
                    vec_axpy(v, -v[p], self.rows[p])
                    changed = True
        return v

    def contains(self, vec):
        return not self.reduce(vec)

    def add(self, vec):
        """Insert vec; returns True when the span grows."""
        v = self.reduce(vec)
        if not v:
            return False
        p = min(v)
        inv = ONE / v[p]
        v = {k: inv * x for k, x in v.items()}
        for q, row in self.rows.items():
            c = row.get(p)
            if c:
                vec_axpy(row, -c, v)
        self.rows[p] = v
        return True

    def basis(self):
        return [dict(self.rows[p]) for p in sorted(self.rows)]

    def express(self, vec):
        """Coordinates of vec over basis() plus irreducible remainder."""
        v = vec_clean(vec)
        pivots = sorted(self.rows)
        coords = {}
        for i, p in enumerate(pivots):
            c = v.get(p)
            if c:
                coords[i] = c
                vec_axpy(v, -c, self.rows[p])
        return coords, v


# ---------------------------------------------------------------------------
# matrices


class RationalSparseMatrix:
    """Immutable-by-convention sparse matrix over Q.

    entries maps (row, col) to a nonzero Fraction; shape is fixed at
    construction.  Elimination results are cached, so do not mutate entries
    after construction.
    """

    def __init__(self, rows, cols, entries=None):
        if rows < 0 or cols < 0:
            raise ShapeError("negative dimensions")
        self.rows = rows
        self.cols = cols
        self.entries = {}
        if entries:
            for (r, c), v in entries.items():
                if not (0 <= r < rows and 0 <= c < cols):
                    raise ShapeError("entry (%d,%d) outside %dx%d" % (r, c, rows, cols))
                v = Fraction(v)
                if v:
                    self.entries[(r, c)] = v
        self._rref = None
        self._coldex = None

    # construction helpers -------------------------------------------------

    @classmethod
    def identity(cls, n):
        return cls(n, n, {(i, i): ONE for i in range(n)})

    @classmethod
    def zero(cls, rows, cols):
        return cls(rows, cols)

    @classmethod
    def from_dense(cls, dense):
        rows = len(dense)
        cols = len(dense[0]) if rows else 0
        ent = {}
        for r, row in enumerate(dense):
            if len(row) != cols:
                raise ShapeError("ragged dense input")
            for c, v in enumerate(row):
                v = Fraction(v)
                if v:
                    ent[(r, c)] = v
        return cls(rows, cols, ent)

    @classmethod
    def from_columns(cls, columns, rows):
        ent = {}
        for c, col in enumerate(columns):
            for r, v in col.items():
                if v:
                    ent[(r, c)] = Fraction(v)
        return cls(rows, len(columns), ent)

    @staticmethod
    def block_diag(blocks):
        r0 = c0 = 0
        ent = {}
        for b in blocks:
            for (r, c), v in b.entries.items():
                ent[(r0 + r, c0 + c)] = v
            r0 += b.rows
            c0 += b.cols
        return RationalSparseMatrix(r0, c0, ent)

    # basic queries ---------------------------------------------------------

    def get(self, r, c):
        return self.entries.get((r, c), ZERO)

    def is_zero(self):
        return not self.entries

    def __eq__(self, other):
        return (
            isinstance(other, RationalSparseMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __repr__(self):
        return "RationalSparseMatrix(%dx%d, %d nonzero)" % (
            self.rows,
            self.cols,
            len(self.entries),
        )

    def to_triplets(self):
        """Debug dump: sorted (row, col, "p/q") triplets."""
        out = []
        for (r, c) in sorted(self.entries):
            v = self.entries[(r, c)]
            out.append((r, c, str(v)))
        return out

    def row_dicts(self):
        rows = [dict() for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            rows[r][c] = v
        return rows

    def column(self, c):
        return {r: v for (r, cc), v in self.entries.items() if cc == c}

    def columns(self):
        cols = [dict() for _ in range(self.cols)]
        for (r, c), v in self.entries.items():
            cols[c][r] = v
        return cols

    # arithmetic ------------------------------------------------------------

    def transpose(self):
        return RationalSparseMatrix(
            self.cols, self.rows, {(c, r): v for (r, c), v in self.entries.items()}
        )

    def add(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeError("add shape mismatch")
        ent = dict(self.entries)
        for k, v in other.entries.items():
            w = ent.get(k, ZERO) + v
            if w:
                ent[k] = w
            else:
                ent.pop(k, None)
        return RationalSparseMatrix(self.rows, self.cols, ent)

    def sub(self, other):
        return self.add(other.scale(-1))

    def scale(self, c):
        c = Fraction(c)
        if not c:
            return RationalSparseMatrix(self.rows, self.cols)
        return RationalSparseMatrix(
            self.rows, self.cols, {k: c * v for k, v in self.entries.items()}
        )

    def multiply(self, other):
        if self.cols != other.rows:
            raise ShapeError("multiply shape mismatch")
        rows_self = self.row_dicts()
        rows_other = other.row_dicts()
        ent = {}
        for r, row in enumerate(rows_self):
            acc = {}
            for k, v in row.items():
                vec_axpy(acc, v, rows_other[k])
            for c, v in acc.items():
                ent[(r, c)] = v
        return RationalSparseMatrix(self.rows, other.cols, ent)

    def apply(self, vec):
        """M * v for a sparse column vector {index: Fraction}."""
        if self._coldex is None:
            cd = {}
            for (r, c), v in self.entries.items():
                cd.setdefault(c, {})[r] = v
            self._coldex = cd
        out = {}
        for c, x in vec.items():
            if not x:
                continue
            if c >= self.cols:
                raise ShapeError("vector index %d outside %d cols" % (c, self.cols))
            col = self._coldex.get(c)
            if col:
                vec_axpy(out, x, col)
        return out

    # elimination-backed queries ---------------------------------------------

    def _int_rows(self, extra_col=None):
        """Integer-scaled rows; extra_col appends a column from a vector."""
        rows = [dict() for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            rows[r][c] = v
        if extra_col is not None:
            for r, v in extra_col.items():
                if v:
                    rows[r][self.cols] = v
        out = []
        for row in rows:
            if not row:
                out.append({})
                continue
            mult = lcm(*[v.denominator for v in row.values()])
            out.append({c: int(v * mult) for c, v in row.items()})
        return out

    def rref(self):
        if self._rref is None:
            self._rref = _elim.rref(self._int_rows())
        return self._rref

    def rank(self):
        return len(self.rref()[0])

    def kernel_basis(self):
        """Basis of the right null space {x : Mx = 0}, sorted by free column."""
        piv_cols, piv_rows = self.rref()
        pivset = set(piv_cols)
        out = []
        for f in range(self.cols):
            if f in pivset:
                continue
            v = {f: ONE}
            for p, row in zip(piv_cols, piv_rows):
                if f in row:
                    v[p] = Fraction(-row[f], row[p])
            out.append(v)
        return out

    def image_membership(self, b):
        """Solve Mx = b; returns a solution vector or None when b is not in
        the image.  Solutions are verified by substitution.

        Works on the kernel of [M | -b], which is independent of the pivot
        order (the sparsity-driven pivoting may well pivot inside the
        appended column)."""
        if isinstance(b, (list, tuple)):
            b = {i: Fraction(v) for i, v in enumerate(b) if v}
        else:
            b = {i: Fraction(v) for i, v in b.items() if v}
        if any(i >= self.rows for i in b):
            raise ShapeError("rhs longer than row count")
        neg = {i: -v for i, v in b.items()}
        piv_cols, piv_rows = _elim.rref(self._int_rows(extra_col=neg))
        aug = self.cols
        pivset = set(piv_cols)
        sol = None
        for f in range(aug + 1):
            if f in pivset:
                continue
            v = {f: ONE}
            for p, row in zip(piv_cols, piv_rows):
                if f in row:
                    v[p] = Fraction(-row[f], row[p])
            if v.get(aug):
                sol = v
                break
        if sol is None:
            return None
        scale = sol.pop(aug)
        x = {j: c / scale for j, c in sol.items() if c}
        if not vec_eq(self.apply(x), b):
            raise ArithmeticError("solver produced an invalid solution")
        return x

    def det(self):
        """Exact determinant of a square matrix (dense Bareiss)."""
        if self.rows != self.cols:
            raise ShapeError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return ONE
        m = [[self.get(r, c) for c in range(n)] for r in range(n)]
        sign = 1
        for k in range(n):
            if not m[k][k]:
                for i in range(k + 1, n):
                    if m[i][k]:
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return ZERO
            for i in range(k + 1, n):
                if m[i][k]:
                    f = m[i][k] / m[k][k]
                    for j in range(k, n):
                        m[i][j] -= f * m[k][j]
        det = Fraction(sign)
        for k in range(n):
            det *= m[k][k]
        return det


def stack_rows(mats):
    """Vertical stack; all matrices must share the column count."""
    if not mats:
        raise ShapeError("nothing to stack")
    cols = mats[0].cols
    ent = {}
    r0 = 0
    for m in mats:
        if m.cols != cols:
            raise ShapeError("stack column mismatch")
        for (r, c), v in m.entries.items():
            ent[(r0 + r, c)] = v
        r0 += m.rows
    return RationalSparseMatrix(r0, cols, ent)
