"""Central extensions, second homology and universal coverings.

H is always a graded vector space carried as a trivial module; a central
extension is the algebra L(g) on L x H with bracket
<(A,X),(B,Y)> = (<A,B>, g(A,B)) for a degree-zero 2-cocycle g.  Second
homology comes from the boundary maps on exterior powers,
d2(A^B) = -<A,B> and d3(A^B^C) = -<A,B>^C + eps(b,c)<A,C>^B + A^<B,C>,
whose composition vanishing is the Jacobi identity.
"""

from __future__ import annotations

from fractions import Fraction

from . import exterior
from .algebra import AlgebraError, EpsLieAlgebra, degree_of_vector
from .cohomology import (
    Cochain,
    CochainComplex,
    evaluate,
    is_cocycle,
    make_cochain,
)
from .exactlin import ONE, RationalSparseMatrix, SpanTracker, vec_axpy, vec_clean
from .gmodule import GradedModule, trivial


class ExtensionError(ValueError):
    pass


class NotPerfectError(ExtensionError):
    pass


# ---------------------------------------------------------------------------
# boundary operators and H_2


def lambda2_basis(L):
    return exterior.basis(L.factor, L.degrees, 2)


def boundary2(L):
    """Matrix of d2 : exterior square -> L on canonical pair monomials."""
    monos = lambda2_basis(L)
    ent = {}
    for c, (i, j) in enumerate(monos):
        for k, v in L.bracket_basis(i, j).items():
            ent[(k, c)] = -v
    return RationalSparseMatrix(L.dim, len(monos), ent)


def boundary3(L):
    """Matrix of d3 : exterior cube -> exterior square."""
    fac = L.factor
    degs = L.degrees
    monos2 = lambda2_basis(L)
    pos2 = {m: k for k, m in enumerate(monos2)}
    monos3 = exterior.basis(fac, degs, 3)
    ent = {}

    def put(col, coeff, l, m):
        sg, mono = exterior.canonicalize(fac, degs, (l, m))
        if not sg:
            return
        key = (pos2[mono], col)
        v = ent.get(key, Fraction(0)) + coeff * sg
        if v:
            ent[key] = v
        else:
            ent.pop(key, None)

    for col, (i, j, k) in enumerate(monos3):
        for l, v in L.bracket_basis(i, j).items():
            put(col, -v, l, k)
        e = fac.eps(degs[j], degs[k])
        for l, v in L.bracket_basis(i, k).items():
            put(col, e * v, l, j)
        for l, v in L.bracket_basis(j, k).items():
            put(col, v, i, l)
    return RationalSparseMatrix(len(monos2), len(monos3), ent)


class H2Result:
    def __init__(self, dims, cycles, monomials):
        self.dims = dims            # degree -> (z, b, h)
        self.cycles = cycles        # degree -> list of vectors over monomials
        self.monomials = monomials

    def total(self):
        return sum(t[2] for t in self.dims.values())

    def graded_dims(self):
        return {d: t[2] for d, t in sorted(self.dims.items()) if t[2]}


def homology_h2(L):
    """H_2 = ker d2 / im d3 per degree sector, with cycle representatives."""
    g = L.group
    monos2 = lambda2_basis(L)
    d2 = boundary2(L)
    d3 = boundary3(L)
    mono_deg = [g.sum(L.degrees[i] for i in m) for m in monos2]
    mono3_deg = [
        g.sum(L.degrees[i] for i in m) for m in exterior.basis(L.factor, L.degrees, 3)
    ]
    alg_deg = [g.reduce(d) for d in L.degrees]
    sectors = sorted(set(mono_deg) | set(mono3_deg))
    dims = {}
    cycles = {}
    for D in sectors:
        cols2 = [k for k, d in enumerate(mono_deg) if d == D]
        rows_l = [k for k, d in enumerate(alg_deg) if d == D]
        cols3 = [k for k, d in enumerate(mono3_deg) if d == D]
        sub2 = _slice(d2, rows_l, cols2)
        sub3 = _slice(d3, cols2, cols3)
        z = len(cols2) - sub2.rank()
        b = sub3.rank()
        if not (z or b):
            continue
        dims[D] = (z, b, z - b)
        span = SpanTracker()
        for col in sub3.columns():
            span.add(col)
        reps = []
        for kv in sub2.kernel_basis():
            if span.add(kv):
                reps.append({cols2[k]: c for k, c in kv.items()})
        cycles[D] = reps
    return H2Result(dims, cycles, monos2)


def _slice(mat, rows, cols):
    rpos = {p: k for k, p in enumerate(rows)}
    cpos = {p: k for k, p in enumerate(cols)}
    ent = {}
    for (r, c), v in mat.entries.items():
        if c in cpos and r in rpos:
            ent[(rpos[r], cpos[c])] = v
    return RationalSparseMatrix(len(rows), len(cols), ent)


# ---------------------------------------------------------------------------
# central extensions


class CentralExtension:
    def __init__(self, base, coefficients, cocycle, total, inject, project):
        self.base = base                  # L
        self.coefficients = coefficients  # trivial module H
        self.cocycle = cocycle            # g in Z^2(L, H)_0
        self.total = total                # E = L(g)
        self.inject = inject              # H -> E matrix
        self.project = project            # E -> L matrix

    def center_dim(self):
        return self.coefficients.dim

    def __repr__(self):
        return "CentralExtension(dim %d over dim %d, center %d)" % (
            self.total.dim,
            self.base.dim,
            self.coefficients.dim,
        )


def extension_from_cocycle(L, H: GradedModule, g: Cochain, validate=True):
    """The algebra L(g) on L x H for a degree-zero 2-cocycle with values in
    the graded vector space H (carried as a trivial module)."""
    if g.level != 2 or g.module is not H:
        raise ExtensionError("need a 2-cochain with values in H")
    zero = L.group.zero()
    if not g.is_zero() and g.degree != zero:
        raise ExtensionError("extension cocycle must be homogeneous of degree zero")
    if any(not m.is_zero() for m in H.action):
        raise ExtensionError("H must carry the trivial action")
    if not is_cocycle(g):
        raise ExtensionError("not a 2-cocycle")
    nl = L.dim
    labels = list(L.labels) + ["c:%s" % lab for lab in H.labels]
    degrees = list(L.degrees) + list(H.degrees)
    brackets = {}
    for i in range(nl):
        for j in range(i, nl):
            vec = dict(L.bracket_basis(i, j))
            for h, c in evaluate(g, (i, j)).items():
                vec[nl + h] = c
            if vec:
                brackets[(i, j)] = vec
    E = EpsLieAlgebra(L.factor, labels, degrees, brackets)
    if validate:
        rep = E.validate()
        if not rep.ok:
            raise ExtensionError("extension failed validation: %r" % rep)
    inject = RationalSparseMatrix(
        E.dim, H.dim, {(nl + h, h): ONE for h in range(H.dim)}
    )
    project = RationalSparseMatrix(
        L.dim, E.dim, {(i, i): ONE for i in range(nl)}
    )
    return CentralExtension(L, H, g, E, inject, project)


def cocycle_from_section(E, L, project, section):
    """Cocycle of a central extension from a homogeneous linear section.

    project: E -> L, section: L -> E as matrices with project*section = id.
    Returns (cochain with values in ker(project), H-module)."""
    comp = project.multiply(section)
    if comp != RationalSparseMatrix.identity(L.dim):
        raise ExtensionError("not a section of the projection")
    seccols = section.columns()
    for j, col in enumerate(seccols):
        d = degree_of_vector(E.group, E.degrees, col)
        if d is not None and d != E.group.reduce(L.degrees[j]):
            raise ExtensionError("section is not homogeneous of degree zero")
    kernel = project.kernel_basis()
    span = SpanTracker(kernel)
    pivots = sorted(span.rows)
    hdegs = [degree_of_vector(E.group, E.degrees, span.rows[p]) for p in pivots]
    H = trivial(
        L,
        degrees=[d if d is not None else E.group.zero() for d in hdegs],
        labels=["k%d" % k for k in range(len(pivots))],
    )
    vals = {}
    for mono in exterior.basis(L.factor, L.degrees, 2):
        i, j = mono
        w = E.bracket(seccols[i], seccols[j])
        vec_axpy(w, -ONE, section.apply(L.bracket_basis(i, j)))
        if not w:
            continue
        coords, rem = span.express(w)
        if rem:
            raise ExtensionError("section defect escapes the kernel of project")
        vals[mono] = dict(coords)
    g = make_cochain(L, H, 2, vals)
    if not is_cocycle(g):
        raise ExtensionError("section defect is not a cocycle")
    if not g.is_zero() and g.degree != L.group.zero():
        raise ExtensionError("section defect is not of degree zero")
    return g, H


# ---------------------------------------------------------------------------
# universal coverings


class CoveringResult:
    def __init__(self, covering, projection, center_vectors, center_dims, h2_dims):
        self.covering = covering            # the perfect algebra L-hat
        self.projection = projection        # L-hat -> L matrix
        self.center_vectors = center_vectors  # kernel of projection, covering coords
        self.center_dims = center_dims      # degree -> dim
        self.h2_dims = h2_dims              # degree -> dim of H_2(L)

    def center_total(self):
        return sum(self.center_dims.values())

    def __repr__(self):
        return "CoveringResult(dim %d, center %d)" % (
            self.covering.dim,
            self.center_total(),
        )


def universal_covering(L):
    """Universal central covering of a perfect algebra.

    Constructed from the exterior square modulo the boundary image: the
    quotient carries a canonical degree-zero 2-cocycle, the derived
    subalgebra of the resulting extension is the covering, and its center
    over L has the graded dimensions of H_2(L)."""
    if not L.is_perfect():
        raise NotPerfectError("algebra is not perfect; no covering exists")
    g = L.group
    monos2 = lambda2_basis(L)
    mono_deg = [g.sum(L.degrees[i] for i in m) for m in monos2]
    d3 = boundary3(L)
    image = SpanTracker()
    for col in d3.columns():
        image.add(col)
    comp = SpanTracker()
    for p in range(len(monos2)):
        comp.add(image.reduce({p: ONE}))
    reps = comp.basis()
    wdegs = [degree_of_vector(g, mono_deg, v) for v in reps]
    pivots = sorted(comp.rows)
    pos = {p: k for k, p in enumerate(pivots)}
    W = trivial(
        L, degrees=wdegs, labels=["w%d" % k for k in range(len(reps))]
    )

    def w_class(vec):
        coords, rem = comp.express(image.reduce(vec))
        if rem:
            raise ExtensionError("class computation failed")
        return {pos[pivots[k]]: c for k, c in coords.items()}

    vals = {}
    for k, mono in enumerate(monos2):
        cls = w_class({k: ONE})
        if cls:
            vals[mono] = cls
    f = make_cochain(L, W, 2, vals)
    ext = extension_from_cocycle(L, W, f)
    E = ext.total

    derived = E.derived_subalgebra()
    Lhat, hat_reps = E.subquotient(derived, (), label_prefix="^")
    # center part: elements of the derived span supported on the W block
    nl = L.dim
    ent = {}
    for c, v in enumerate(hat_reps):
        for r, val in v.items():
            if r < nl:
                ent[(r, c)] = val
    lpart = RationalSparseMatrix(nl, len(hat_reps), ent)
    center_vecs = lpart.kernel_basis()
    center_dims = {}
    for v in center_vecs:
        d = degree_of_vector(g, Lhat.degrees, v)
        center_dims[d] = center_dims.get(d, 0) + 1
    center_dims = dict(sorted(center_dims.items()))

    proj = RationalSparseMatrix(
        nl, Lhat.dim, {(r, c): val for c, v in enumerate(hat_reps)
                       for r, val in v.items() if r < nl}
    )
    if proj.rank() != nl:
        raise ExtensionError("covering projection is not surjective")
    if Lhat.homomorphism_defect(L, proj):
        raise ExtensionError("covering projection is not a homomorphism")
    if not Lhat.is_perfect():
        raise ExtensionError("covering is not perfect")
    center_span = SpanTracker(Lhat.center())
    for v in center_vecs:
        if not center_span.contains(v):
            raise ExtensionError("projection kernel is not central")

    h2 = homology_h2(L)
    h2_dims = h2.graded_dims()
    if h2_dims != {d: n for d, n in center_dims.items() if n}:
        raise ExtensionError(
            "covering center %r does not match H_2 %r" % (center_dims, h2_dims)
        )
    res = CoveringResult(Lhat, proj, center_vecs, center_dims, h2_dims)
    res.extension = ext
    res.hat_reps = hat_reps
    res.w_class = w_class
    res.lambda2 = monos2
    return res


def covering_from_h2_basis(L, cocycles):
    """Central extension built from an independent basis of second-cohomology
    classes with trivial coefficients; dual-degree one-dimensional summands."""
    if not cocycles:
        H = trivial(L, dim=0, degrees=[], labels=[])
        zero = make_cochain(L, H, 2, {})
        return extension_from_cocycle(L, H, zero)
    g = L.group
    cx = CochainComplex(L, cocycles[0].module, 2)
    span = SpanTracker()
    for col in cx.delta(1).columns():
        span.add(col)
    degs = []
    for gr_ in cocycles:
        if gr_.level != 2 or gr_.module.dim != 1:
            raise ExtensionError("need scalar-valued 2-cocycles")
        if not is_cocycle(gr_):
            raise ExtensionError("class input is not a cocycle")
        vec = {}
        dex = cx.index(2)
        for mono, v in gr_.values.items():
            vec[dex[(mono, 0)]] = v[0]
        if not span.add(vec):
            raise ExtensionError("cohomology classes are not independent")
        degs.append(gr_.degree if gr_.degree is not None else g.zero())
    H = trivial(
        L,
        degrees=[g.neg(d) for d in degs],
        labels=["z%d" % k for k in range(len(cocycles))],
    )
    vals = {}
    for r, gr_ in enumerate(cocycles):
        for mono, v in gr_.values.items():
            vals.setdefault(mono, {})[r] = v[0]
    combined = make_cochain(L, H, 2, vals)
    return extension_from_cocycle(L, H, combined)


def covering_morphism(cov: CoveringResult, ext: CentralExtension):
    """The unique morphism from a universal covering to a central extension,
    as a matrix covering.covering -> ext.total; determined by sending the
    class of A^B to g(A, B)."""
    base = ext.base
    nl = base.dim
    g = ext.cocycle
    # psi' on the W part: class of the pair monomial -> g value
    ncols = cov.covering.dim
    ent = {}
    for c, rep in enumerate(cov.hat_reps):
        acc = {}
        for r, val in rep.items():
            if r < nl:
                acc[r] = acc.get(r, Fraction(0)) + val
            else:
                # W coordinate: expand back over pair monomials
                wv = _w_coordinate_to_pairs(cov, r - nl)
                for mono, cmono in wv.items():
                    hval = evaluate(g, mono)
                    for h, ch in hval.items():
                        key = nl + h
                        acc[key] = acc.get(key, Fraction(0)) + val * cmono * ch
        for r, val in acc.items():
            if val:
                ent[(r, c)] = val
    return RationalSparseMatrix(ext.total.dim, ncols, ent)


def _w_coordinate_to_pairs(cov, widx):
    """Express the W basis vector widx as a combination of pair monomials
    (a fixed representative; any representative works for cocycle pairing)."""
    reps = getattr(cov, "_w_pair_reps", None)
    if reps is None:
        W = cov.extension.coefficients
        # invert the class map: any pair-monomial preimage of each W basis
        # vector will do, cocycle values agree on a class
        cols = {}
        for k in range(len(cov.lambda2)):
            cols[k] = cov.w_class({k: ONE})
        mat = RationalSparseMatrix(
            W.dim, len(cov.lambda2),
            {(h, k): c for k, col in cols.items() for h, c in col.items()},
        )
        reps = {}
        for h in range(W.dim):
            sol = mat.image_membership({h: ONE})
            if sol is None:
                raise ExtensionError("class map is not surjective")
            reps[h] = {cov.lambda2[k]: c for k, c in sol.items()}
        cov._w_pair_reps = reps
    return reps[widx]


def h2_pairing_check(L, n_max=2):
    """dim H_2(L) at degree d equals dim H^2(L, K) at degree -d, per sector."""
    g = L.group
    h2 = homology_h2(L).graded_dims()
    triv = trivial(L)
    coh = CochainComplex(L, triv, 2).cohomology()
    cohdims = {d: t[2] for d, t in coh.dims(2).items() if t[2]}
    flipped = {g.neg(d): n for d, n in cohdims.items()}
    return h2 == flipped
