"""Finite-dimensional graded modules over a color Lie algebra.

A module is a homogeneous basis plus one representation matrix per algebra
basis element.  All constructions (duals, tensors, shifts, sub/quotients,
symmetric and skew squares) carry the grading and the commutation-factor
signs; validate() checks homogeneity and bracket compatibility exactly.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import (
    AlgebraError,
    EpsLieAlgebra,
    ValidationReport,
    degree_of_vector,
    graded_echelon,
    split_components,
)
from .exactlin import (
    ONE,
    RationalSparseMatrix,
    SpanTracker,
    stack_rows,
    vec_axpy,
    vec_clean,
    vec_is_zero,
)


class ModuleError(ValueError):
    pass


class GradedModule:
    def __init__(self, algebra: EpsLieAlgebra, labels, degrees, action, parent=None,
                 embedding=None, projection=None):
        self.algebra = algebra
        self.group = algebra.group
        self.factor = algebra.factor
        self.labels = list(labels)
        self.degrees = [self.group.reduce(d) for d in degrees]
        self.action = list(action)
        if len(self.labels) != len(self.degrees):
            raise ModuleError("labels and degrees length mismatch")
        if len(self.action) != algebra.dim:
            raise ModuleError("need one action matrix per algebra basis element")
        d = len(self.labels)
        for m in self.action:
            if (m.rows, m.cols) != (d, d):
                raise ModuleError("action matrix shape mismatch")
        self.parent = parent
        self.embedding = embedding    # columns = basis vectors in parent coords
        self.projection = projection  # parent coords -> this module's coords

    @property
    def dim(self):
        return len(self.labels)

    def apply_basis(self, i, vec):
        return self.action[i].apply(vec)

    def act(self, avec, vec):
        """Action of an algebra vector (any) on a module vector."""
        out = {}
        for i, c in avec.items():
            if c:
                vec_axpy(out, c, self.apply_basis(i, vec))
        return out

    def validate(self):
        rep = ValidationReport()
        g = self.group
        L = self.algebra
        for i, m in enumerate(self.action):
            for (r, c), v in m.entries.items():
                want = g.add(L.degrees[i], self.degrees[c])
                if g.reduce(self.degrees[r]) != want:
                    rep.note(
                        "homogeneity",
                        (L.labels[i], self.labels[c]),
                        "lands on %s of degree %s, expected %s"
                        % (self.labels[r], self.degrees[r], want),
                    )
        for i in range(L.dim):
            for j in range(i, L.dim):
                lhs = RationalSparseMatrix(self.dim, self.dim)
                for k, c in L.bracket_basis(i, j).items():
                    lhs = lhs.add(self.action[k].scale(c))
                e = L.factor.eps(L.degrees[i], L.degrees[j])
                rhs = self.action[i].multiply(self.action[j]).sub(
                    self.action[j].multiply(self.action[i]).scale(e)
                )
                if lhs != rhs:
                    rep.note(
                        "bracket-compatibility",
                        (L.labels[i], L.labels[j]),
                        "rho(<A,B>) != rho(A)rho(B) - eps rho(B)rho(A)",
                    )
        return rep

    def vector_degree(self, vec):
        return degree_of_vector(self.group, self.degrees, vec)

    def __repr__(self):
        return "GradedModule(dim %d over dim-%d algebra)" % (self.dim, self.algebra.dim)


# ---------------------------------------------------------------------------
# constructions


def trivial(L, sigma=None, dim=1, labels=None, degrees=None):
    """Trivial module; by default one-dimensional concentrated in sigma."""
    g = L.group
    if degrees is None:
        sigma = g.zero() if sigma is None else g.reduce(sigma)
        degrees = [sigma] * dim
    if labels is None:
        labels = ["1"] if len(degrees) == 1 else ["u%d" % k for k in range(len(degrees))]
    zero = RationalSparseMatrix(len(degrees), len(degrees))
    return GradedModule(L, labels, degrees, [zero] * L.dim)


def adjoint(L):
    mats = [RationalSparseMatrix(L.dim, L.dim, L.ad_matrix(i)) for i in range(L.dim)]
    return GradedModule(L, list(L.labels), list(L.degrees), mats)


def dual(V):
    """Graded contragredient: (A.f)(x) = -eps(alpha, phi) f(A.x) for f of
    degree phi, which makes the pairing invariant."""
    L = V.algebra
    g = V.group
    degrees = [g.neg(d) for d in V.degrees]
    mats = []
    for i in range(L.dim):
        ent = {}
        for (r, c), v in V.action[i].entries.items():
            # e_i . f_r  has  (e_i . f_r)(x_c-image ...) : transpose with sign
            e = V.factor.eps(L.degrees[i], V.degrees[r])
            ent[(c, r)] = -e * v
        mats.append(RationalSparseMatrix(V.dim, V.dim, ent))
    labels = [lab + "'" for lab in V.labels]
    return GradedModule(L, labels, degrees, mats)


def coadjoint(L):
    return dual(adjoint(L))


def tensor(V, W):
    if V.algebra is not W.algebra:
        raise ModuleError("tensor factors live over different algebras")
    L = V.algebra
    g = V.group
    dv, dw = V.dim, W.dim
    labels = []
    degrees = []
    for a in range(dv):
        for b in range(dw):
            labels.append("%s⊗%s" % (V.labels[a], W.labels[b]))
            degrees.append(g.add(V.degrees[a], W.degrees[b]))
    mats = []
    for i in range(L.dim):
        ent = {}
        for (a2, a), v in V.action[i].entries.items():
            for b in range(dw):
                ent[(a2 * dw + b, a * dw + b)] = ent.get((a2 * dw + b, a * dw + b), 0) + v
        for (b2, b), v in W.action[i].entries.items():
            for a in range(dv):
                e = V.factor.eps(L.degrees[i], V.degrees[a])
                key = (a * dw + b2, a * dw + b)
                ent[key] = ent.get(key, 0) + e * v
        mats.append(RationalSparseMatrix(dv * dw, dv * dw, {k: v for k, v in ent.items() if v}))
    return GradedModule(L, labels, degrees, mats)


def direct_sum(V, W):
    if V.algebra is not W.algebra:
        raise ModuleError("summands live over different algebras")
    labels = list(V.labels) + list(W.labels)
    degrees = list(V.degrees) + list(W.degrees)
    mats = [
        RationalSparseMatrix.block_diag([V.action[i], W.action[i]])
        for i in range(V.algebra.dim)
    ]
    return GradedModule(V.algebra, labels, degrees, mats)


def shift(V, sigma):
    """Gradation shift: a vector of degree d gets degree d - sigma; the
    action is unchanged."""
    g = V.group
    sigma = g.reduce(sigma)
    degrees = [g.sub(d, sigma) for d in V.degrees]
    return GradedModule(V.algebra, list(V.labels), degrees, list(V.action))


def twist(V, omega_matrix):
    """Module with action rho(omega(e_i)): pull-back along an algebra
    endomorphism given by columns in the basis."""
    L = V.algebra
    cols = omega_matrix.columns()
    mats = []
    for i in range(L.dim):
        m = RationalSparseMatrix(V.dim, V.dim)
        for j, c in cols[i].items():
            m = m.add(V.action[j].scale(c))
        mats.append(m)
    return GradedModule(L, list(V.labels), list(V.degrees), mats)


# ---------------------------------------------------------------------------
# subspaces


def invariants_subspace(V):
    """Echelon basis of the simultaneous kernel of the action (= H^0)."""
    if V.algebra.dim == 0:
        return graded_echelon(V.group, V.degrees, [{a: ONE} for a in range(V.dim)])
    stacked = stack_rows(V.action)
    vecs = []
    for v in stacked.kernel_basis():
        vecs.extend(split_components(V.group, V.degrees, v).values())
    return graded_echelon(V.group, V.degrees, vecs)


def submodule_span(V, vectors, labels=None):
    """Submodule on an invariant homogeneous span; raises when the span is
    not invariant.  Basis is the deterministic graded echelon of the span."""
    basis = graded_echelon(V.group, V.degrees, [vec_clean(v) for v in vectors])
    span = SpanTracker(basis)
    for i in range(V.algebra.dim):
        for b in basis:
            if not span.contains(V.apply_basis(i, b)):
                raise ModuleError(
                    "span is not invariant under %s" % V.algebra.labels[i]
                )
    deg = [degree_of_vector(V.group, V.degrees, b) for b in basis]
    order = sorted(range(len(basis)), key=lambda a: (deg[a], min(basis[a])))
    basis = [basis[a] for a in order]
    deg = [deg[a] for a in order]
    tracker = SpanTracker(basis)
    pivots = sorted(tracker.rows)
    pos = {min(basis[a]): a for a in range(len(basis))}

    def express(vec):
        coords, rem = tracker.express(vec)
        if rem:
            raise ModuleError("vector escapes the span")
        return {pos[pivots[ci]]: c for ci, c in coords.items()}

    mats = []
    for i in range(V.algebra.dim):
        ent = {}
        for a, b in enumerate(basis):
            for r, c in express(V.apply_basis(i, b)).items():
                ent[(r, a)] = c
        mats.append(RationalSparseMatrix(len(basis), len(basis), ent))
    if labels is None:
        labels = []
        for b in basis:
            lead = V.labels[min(b)]
            labels.append(lead if len(b) == 1 else "(%s+…)" % lead)
    emb = RationalSparseMatrix.from_columns(basis, V.dim)
    return GradedModule(V.algebra, labels, deg, mats, parent=V, embedding=emb)


def submodule_generated(V, vectors):
    """Closure of the given homogeneous vectors under the action."""
    tracker = SpanTracker()
    work = []
    for v in vectors:
        for comp in split_components(V.group, V.degrees, vec_clean(v)).values():
            if tracker.add(comp):
                work.append(comp)
    while work:
        v = work.pop()
        for i in range(V.algebra.dim):
            w = V.apply_basis(i, v)
            if w and tracker.add(w):
                work.append(w)
    return submodule_span(V, tracker.basis())


def quotient(V, sub_vectors):
    """Quotient by an invariant homogeneous subspace."""
    sub = graded_echelon(V.group, V.degrees, [vec_clean(v) for v in sub_vectors])
    span = SpanTracker(sub)
    for i in range(V.algebra.dim):
        for b in sub:
            if not span.contains(V.apply_basis(i, b)):
                raise ModuleError("quotient by a non-invariant subspace")
    comp = SpanTracker()
    for a in range(V.dim):
        comp.add(span.reduce({a: ONE}))
    reps = comp.basis()
    deg = [degree_of_vector(V.group, V.degrees, r) for r in reps]
    order = sorted(range(len(reps)), key=lambda a: (deg[a], min(reps[a])))
    reps = [reps[a] for a in order]
    deg = [deg[a] for a in order]
    pivots = sorted(comp.rows)
    pos = {min(reps[a]): a for a in range(len(reps))}

    def project(vec):
        coords, rem = comp.express(span.reduce(vec))
        if rem:
            raise ModuleError("projection failed")
        return {pos[pivots[ci]]: c for ci, c in coords.items()}

    mats = []
    for i in range(V.algebra.dim):
        ent = {}
        for a, r in enumerate(reps):
            for k, c in project(V.apply_basis(i, r)).items():
                ent[(k, a)] = c
        mats.append(RationalSparseMatrix(len(reps), len(reps), ent))
    labels = ["[%s]" % V.labels[min(r)] for r in reps]
    proj_ent = {}
    for a in range(V.dim):
        for k, c in project({a: ONE}).items():
            proj_ent[(k, a)] = c
    proj = RationalSparseMatrix(len(reps), V.dim, proj_ent)
    return GradedModule(V.algebra, labels, deg, mats, parent=V, projection=proj)


def sym_square(V):
    return _square(V, sym=True)


def skew_square(V):
    return _square(V, sym=False)


def _square(V, sym):
    T = tensor(V, V)
    d = V.dim
    vecs = []
    for a in range(d):
        for b in range(a, d):
            e = V.factor.eps(V.degrees[a], V.degrees[b])
            s = e if sym else -e
            if a == b:
                if s == 1:
                    vecs.append({a * d + a: ONE})
            else:
                vecs.append({a * d + b: ONE, b * d + a: Fraction(s)})
    return submodule_span(T, vecs)


# ---------------------------------------------------------------------------
# weights and intertwiners


def _char_poly(mat):
    """Monic characteristic polynomial coefficients [1, c1, ..., cn]
    (Faddeev-LeVerrier, exact)."""
    n = mat.rows
    coeffs = [ONE]
    M = RationalSparseMatrix.identity(n)
    for k in range(1, n + 1):
        AM = mat.multiply(M)
        tr = sum((AM.get(i, i) for i in range(n)), Fraction(0))
        c = -tr / k
        coeffs.append(c)
        M = AM.add(RationalSparseMatrix.identity(n).scale(c))
    return coeffs


def _rational_eigenvalues(mat):
    """All rational eigenvalues of an exact square matrix."""
    from math import lcm

    n = mat.rows
    if n == 0:
        return []
    if all(r == c for (r, c) in mat.entries):
        return sorted({mat.get(i, i) for i in range(n)})
    den = lcm(*[v.denominator for v in mat.entries.values()]) if mat.entries else 1
    A = mat.scale(den)
    coeffs = _char_poly(A)  # integer coefficients, monic
    ints = [int(c) for c in coeffs]
    m = len(ints) - 1
    while m > 0 and ints[m] == 0:
        m -= 1
    cands = {0} if m < len(ints) - 1 else set()
    const = abs(ints[m])
    if const > 10**12:
        raise ModuleError("eigenvalue search: constant term too large to factor")
    if const:
        divs = set()
        f = 1
        while f * f <= const:
            if const % f == 0:
                divs.update((f, const // f))
            f += 1
        for dd in divs:
            cands.update((dd, -dd))

    def value(x):
        acc = 0
        for c in ints:
            acc = acc * x + c
        return acc

    roots = sorted(x for x in cands if value(x) == 0)
    return [Fraction(x, den) for x in roots]


def weight_spaces(V, cartan_vectors):
    """Simultaneous eigenspace decomposition for commuting algebra vectors
    acting diagonalizably with rational eigenvalues.

    Returns {eigenvalue-tuple: [module vectors]}; raises ModuleError when an
    operator is not diagonalizable over Q.
    """
    ops = []
    for av in cartan_vectors:
        m = RationalSparseMatrix(V.dim, V.dim)
        for i, c in av.items():
            m = m.add(V.action[i].scale(c))
        ops.append(m)
    spaces = {(): [{a: ONE} for a in range(V.dim)]}
    for op in ops:
        new = {}
        for key, basis in spaces.items():
            tracker = SpanTracker(basis)
            basis = tracker.basis()
            pivots = sorted(tracker.rows)
            pos = {p: k for k, p in enumerate(pivots)}
            ent = {}
            for a, b in enumerate(basis):
                coords, rem = tracker.express(op.apply(b))
                if rem:
                    raise ModuleError("element does not preserve the subspace")
                for ci, c in coords.items():
                    ent[(ci, a)] = c
            R = RationalSparseMatrix(len(basis), len(basis), ent)
            found = 0
            for lam in _rational_eigenvalues(R):
                shifted = R.sub(RationalSparseMatrix.identity(R.rows).scale(lam))
                for kv in shifted.kernel_basis():
                    vec = {}
                    for ci, c in kv.items():
                        vec_axpy(vec, c, basis[ci])
                    new.setdefault(key + (lam,), []).append(vec)
                    found += 1
            if found != len(basis):
                raise ModuleError("operator is not diagonalizable over Q")
        spaces = new
    # RREF bases of graded subspaces are automatically homogeneous (degree
    # blocks occupy disjoint coordinate sets), so this stays deterministic.
    return {k: SpanTracker(vs).basis() for k, vs in sorted(spaces.items())}


def intertwiner_space(V, W, phi_degree):
    """Basis of graded-invariant linear maps V -> W homogeneous of the given
    degree: F rho_V(A) = eps(phi, alpha) rho_W(A) F."""
    L = V.algebra
    g = V.group
    phi = g.reduce(phi_degree)
    unknowns = []
    undex = {}
    for r in range(W.dim):
        for c in range(V.dim):
            if g.reduce(W.degrees[r]) == g.add(phi, V.degrees[c]):
                undex[(r, c)] = len(unknowns)
                unknowns.append((r, c))
    rows = []
    rowdex = {}
    ent = {}
    for i in range(L.dim):
        e = V.factor.eps(phi, L.degrees[i])
        for (r, c) in unknowns:
            u = undex[(r, c)]
            # (F rho_V)[r, v] picks up F[r, c] rho_V[c, v]
            for v in range(V.dim):
                coeff = V.action[i].get(c, v)
                if coeff:
                    key = (i, r, v)
                    rr = rowdex.setdefault(key, len(rowdex))
                    ent[(rr, u)] = ent.get((rr, u), Fraction(0)) + coeff
            # (rho_W F)[w, c] picks up rho_W[w, r] F[r, c]
            for w in range(W.dim):
                coeff = W.action[i].get(w, r)
                if coeff:
                    key = (i, w, c)
                    rr = rowdex.setdefault(key, len(rowdex))
                    ent[(rr, u)] = ent.get((rr, u), Fraction(0)) - e * coeff
    mat = RationalSparseMatrix(len(rowdex), len(unknowns), {k: v for k, v in ent.items() if v})
    out = []
    for kv in mat.kernel_basis():
        F = {}
        for u, c in kv.items():
            F[unknowns[u]] = c
        out.append(RationalSparseMatrix(W.dim, V.dim, F))
    return out


def regrade_algebra(L, new_factor, degree_map):
    """Transport an algebra along a grading-group map; the commutation
    factors must agree on every pair of occurring degrees."""
    new_degrees = [new_factor.group.reduce(degree_map(d)) for d in L.degrees]
    for a, da in enumerate(L.degrees):
        for db, nb in zip(L.degrees, new_degrees):
            if L.factor.eps(da, db) != new_factor.eps(new_degrees[a], nb):
                raise AlgebraError("regrading changes commutation signs")
    return EpsLieAlgebra(new_factor, list(L.labels), new_degrees, dict(L.table))


def regrade_module(V, new_algebra, degree_map):
    new_degrees = [new_algebra.group.reduce(degree_map(d)) for d in V.degrees]
    return GradedModule(new_algebra, list(V.labels), new_degrees, list(V.action))
