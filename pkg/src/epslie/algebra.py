"""Color Lie algebras / Lie superalgebras with exact structure constants.

An algebra is a homogeneous basis (labels + degrees over a commutation
factor) together with sparse rational structure constants.  Only the upper
triangle (i <= j) is stored; the other triangle is produced through the
skew-symmetry rule <A,B> = -eps(a,b) <B,A>, so skew-symmetry holds by
construction once the input is consistent.
"""

from __future__ import annotations

from fractions import Fraction

from .exactlin import SpanTracker, vec_add, vec_axpy, vec_clean, vec_is_zero
from .grading import CommutationFactor


class AlgebraError(ValueError):
    pass


def degree_of_vector(group, degrees, vec):
    """Common degree of a homogeneous vector; None for zero, error if mixed."""
    deg = None
    for i, c in vec.items():
        if not c:
            continue
        d = group.reduce(degrees[i])
        if deg is None:
            deg = d
        elif deg != d:
            raise AlgebraError("vector is not homogeneous: degrees %s and %s" % (deg, d))
    return deg


def split_components(group, degrees, vec):
    """Homogeneous components of a vector, keyed by degree."""
    parts = {}
    for i, c in vec.items():
        if c:
            parts.setdefault(group.reduce(degrees[i]), {})[i] = c
    return parts


def graded_echelon(group, degrees, vectors):
    """Deterministic echelon basis of a span of homogeneous vectors."""
    trackers = {}
    for v in vectors:
        if vec_is_zero(v):
            continue
        d = degree_of_vector(group, degrees, v)
        trackers.setdefault(d, SpanTracker()).add(v)
    out = []
    for d in sorted(trackers):
        out.extend(trackers[d].basis())
    return out


class ValidationReport:
    def __init__(self):
        self.problems = []

    @property
    def ok(self):
        return not self.problems

    def note(self, kind, where, detail):
        self.problems.append((kind, where, detail))

    def __repr__(self):
        if self.ok:
            return "ValidationReport(ok)"
        return "ValidationReport(%d problems; first: %s)" % (
            len(self.problems),
            self.problems[0],
        )


class EpsLieAlgebra:
    def __init__(self, factor: CommutationFactor, labels, degrees, brackets):
        """brackets: {(i, j): {k: coeff}}; either triangle may be given, but
        when both are present they must agree under skew-symmetry."""
        self.factor = factor
        self.group = factor.group
        self.labels = list(labels)
        self.degrees = [self.group.reduce(d) for d in degrees]
        if len(self.labels) != len(self.degrees):
            raise AlgebraError("labels and degrees length mismatch")
        n = len(self.labels)
        table = {}
        for (i, j), vec in brackets.items():
            if not (0 <= i < n and 0 <= j < n):
                raise AlgebraError("bracket index out of range: (%d,%d)" % (i, j))
            vec = vec_clean({k: Fraction(c) for k, c in vec.items()})
            if i <= j:
                key, val = (i, j), vec
            else:
                e = factor.eps(self.degrees[i], self.degrees[j])
                key, val = (j, i), {k: -e * c for k, c in vec.items()}
            if key in table:
                if table[key] != val:
                    raise AlgebraError(
                        "inconsistent skew pair for %s,%s" % (self.labels[i], self.labels[j])
                    )
            else:
                table[key] = val
        self.table = table

    @property
    def dim(self):
        return len(self.labels)

    def parity(self, i):
        return self.factor.parity(self.degrees[i])

    def bracket_basis(self, i, j):
        if i <= j:
            return self.table.get((i, j), {})
        vec = self.table.get((j, i))
        if not vec:
            return {}
        e = self.factor.eps(self.degrees[i], self.degrees[j])
        return {k: -e * c for k, c in vec.items()}

    def bracket(self, x, y):
        out = {}
        for i, a in x.items():
            if not a:
                continue
            for j, b in y.items():
                c = a * b
                if c:
                    vec_axpy(out, c, self.bracket_basis(i, j))
        return out

    def ad_matrix(self, i):
        """Matrix of <e_i, .> in the basis, as {(row, col): coeff}."""
        ent = {}
        for j in range(self.dim):
            for k, c in self.bracket_basis(i, j).items():
                ent[(k, j)] = c
        return ent

    # ------------------------------------------------------------------ checks

    def validate(self):
        """Exact check of homogeneity, skew-symmetry and the Jacobi identity."""
        rep = ValidationReport()
        g = self.group
        for (i, j), vec in sorted(self.table.items()):
            want = g.add(self.degrees[i], self.degrees[j])
            for k, c in vec.items():
                if g.reduce(self.degrees[k]) != want:
                    rep.note(
                        "homogeneity",
                        (self.labels[i], self.labels[j]),
                        "component %s has degree %s, expected %s"
                        % (self.labels[k], self.degrees[k], want),
                    )
        for i in range(self.dim):
            if self.parity(i) == 1 and not vec_is_zero(self.bracket_basis(i, i)):
                rep.note(
                    "skew-symmetry",
                    (self.labels[i], self.labels[i]),
                    "even element with nonzero self-bracket",
                )
        for i in range(self.dim):
            di = self.degrees[i]
            for j in range(self.dim):
                eij = self.factor.eps(di, self.degrees[j])
                for k in range(j, self.dim):
                    lhs = self.bracket({i: 1}, self.bracket_basis(j, k))
                    rhs = self.bracket(self.bracket_basis(i, j), {k: 1})
                    vec_axpy(rhs, eij, self.bracket({j: 1}, self.bracket_basis(i, k)))
                    if vec_clean(lhs) != vec_clean(rhs):
                        rep.note(
                            "jacobi",
                            (self.labels[i], self.labels[j], self.labels[k]),
                            "adjoint derivation identity fails",
                        )
        return rep

    # -------------------------------------------------------------- structure

    def derived_subalgebra(self):
        vecs = []
        for i in range(self.dim):
            for j in range(i, self.dim):
                v = self.bracket_basis(i, j)
                if v:
                    vecs.append(v)
        return graded_echelon(self.group, self.degrees, vecs)

    def is_perfect(self):
        return len(self.derived_subalgebra()) == self.dim

    def center(self):
        """Echelon basis of {x : <x, e_j> = 0 for all j}."""
        from .exactlin import RationalSparseMatrix

        rowdex = {}
        ent = {}
        for i in range(self.dim):
            for j in range(self.dim):
                for k, c in self.bracket_basis(i, j).items():
                    r = rowdex.setdefault((j, k), len(rowdex))
                    ent[(r, i)] = c
        mat = RationalSparseMatrix(len(rowdex), self.dim, ent)
        vecs = []
        for v in mat.kernel_basis():
            vecs.extend(split_components(self.group, self.degrees, v).values())
        return graded_echelon(self.group, self.degrees, vecs)

    # ------------------------------------------------------------ subquotients

    def subquotient(self, sub_vectors, ideal_vectors=(), label_prefix=None):
        """Quotient of the subalgebra spanned by sub_vectors by the ideal
        spanned by ideal_vectors.  All spanning vectors must be homogeneous;
        closure of the span and invariance of the ideal are verified.

        Returns (algebra, representatives) where representatives[a] is the
        parent-coordinate vector representing new basis element a.
        """
        g = self.group
        sub = graded_echelon(g, self.degrees, [vec_clean(v) for v in sub_vectors])
        ideal = graded_echelon(g, self.degrees, [vec_clean(v) for v in ideal_vectors])
        sub_span = SpanTracker(sub)
        ideal_span = SpanTracker(ideal)
        for v in ideal:
            if not sub_span.contains(v):
                raise AlgebraError("ideal is not contained in the subalgebra")
        for a in sub:
            for b in sub:
                if not sub_span.contains(self.bracket(a, b)):
                    raise AlgebraError("sub_vectors do not span a subalgebra")
            for b in ideal:
                if not ideal_span.contains(self.bracket(a, b)):
                    raise AlgebraError("ideal_vectors do not span an ideal")

        comp = SpanTracker()
        reps = []
        for v in sub:
            w = ideal_span.reduce(v)
            if comp.add(w):
                reps = comp.basis()
        reps = comp.basis()
        rep_deg = [degree_of_vector(g, self.degrees, v) for v in reps]
        rep_pos = {}
        sorted_reps = sorted(
            range(len(reps)), key=lambda a: (rep_deg[a], min(reps[a]))
        )
        reps = [reps[a] for a in sorted_reps]
        rep_deg = [rep_deg[a] for a in sorted_reps]
        for a, v in enumerate(reps):
            rep_pos[min(v)] = a

        def express(vec):
            w = ideal_span.reduce(vec)
            coords, rem = comp.express(w)
            if rem:
                raise AlgebraError("vector escapes the subalgebra span")
            out = {}
            pivots = sorted(comp.rows)
            for ci, c in coords.items():
                out[rep_pos[pivots[ci]]] = c
            return out

        prefix = label_prefix if label_prefix is not None else ""
        labels = ["%s[%s]" % (prefix, self.labels[min(v)]) for v in reps]
        brackets = {}
        for a in range(len(reps)):
            for b in range(a, len(reps)):
                w = self.bracket(reps[a], reps[b])
                coords = express(w)
                if coords:
                    brackets[(a, b)] = coords
        out = EpsLieAlgebra(self.factor, labels, rep_deg, brackets)
        report = out.validate()
        if not report.ok:
            raise AlgebraError("subquotient failed validation: %r" % report)
        return out, reps

    # ------------------------------------------------------------------- maps

    def homomorphism_defect(self, other, matrix):
        """Pairs (i, j) where the linear map given by matrix (columns = images
        of this algebra's basis, as vectors over other's basis) fails
        phi<x,y> = <phi x, phi y>; empty list means homomorphism."""
        cols = [dict() for _ in range(self.dim)]
        for (r, c), v in matrix.entries.items():
            cols[c][r] = v
        bad = []
        for i in range(self.dim):
            for j in range(i, self.dim):
                img = matrix.apply(self.bracket_basis(i, j))
                direct = other.bracket(cols[i], cols[j])
                if vec_clean(img) != vec_clean(direct):
                    bad.append((i, j))
        return bad
