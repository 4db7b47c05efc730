"""Cochain complexes and cohomology of color Lie algebras.

An n-cochain is stored by its values on canonical exterior monomials; the
skew-symmetric extension to arbitrary argument tuples goes through
exterior.canonicalize.  A basis cochain (monomial M, module vector w) is
homogeneous of degree deg(w) - deg(M), and the coboundary operator
preserves that degree, so every rank computation is dispatched per degree
sector.

The coboundary operator follows the explicit convention

  (d g)(A_0..A_n) = sum_r (-1)^r eps(gamma + a_0+..+a_{r-1}, a_r)
                           A_r . g(.. A_r omitted ..)
                  + sum_{r<s} (-1)^s eps(a_{r+1}+..+a_{s-1}, a_s)
                           g(A_0,..,A_{r-1}, <A_r,A_s>, A_{r+1},.., A_s omitted,.., A_n)

with empty sums equal to zero; gamma is the cochain degree.  The module
action on cochains is

  (A . g)(A_1..A_n) = A . (g(A_1..A_n))
                    - sum_r eps(alpha, gamma + a_1+..+a_{r-1})
                            g(A_1,..,<A,A_r>,..,A_n).
"""

from __future__ import annotations

from fractions import Fraction

from . import exterior
from .algebra import AlgebraError
from .exactlin import (
    ONE,
    RationalSparseMatrix,
    SpanTracker,
    vec_axpy,
    vec_clean,
    vec_is_zero,
    vec_scale,
)
from .gmodule import GradedModule, tensor, twist


class CochainError(ValueError):
    pass


class Cochain:
    """Values on canonical monomials; degree is None for inhomogeneous sums."""

    __slots__ = ("algebra", "module", "level", "values", "degree")

    def __init__(self, algebra, module, level, values, degree=None):
        self.algebra = algebra
        self.module = module
        self.level = level
        self.values = values
        self.degree = degree

    def is_zero(self):
        return not self.values

    def __repr__(self):
        return "Cochain(level %d, degree %s, %d monomials)" % (
            self.level,
            self.degree,
            len(self.values),
        )


def make_cochain(L, V, level, values):
    """Clean the value table and infer the degree (None when mixed)."""
    g = L.group
    vals = {}
    degset = set()
    for mono, vec in values.items():
        vec = vec_clean(vec)
        if not vec:
            continue
        vals[tuple(mono)] = vec
        md = g.sum(L.degrees[i] for i in mono)
        for w in vec:
            degset.add(g.sub(V.degrees[w], md))
    degree = degset.pop() if len(degset) == 1 else None
    return Cochain(L, V, level, vals, degree)


def zero_cochain(L, V, level, degree=None):
    return Cochain(L, V, level, {}, degree)


def components(g):
    """Split into homogeneous cochains, keyed by degree."""
    if g.degree is not None:
        return {g.degree: g}
    gr = g.algebra.group
    parts = {}
    for mono, vec in g.values.items():
        md = gr.sum(g.algebra.degrees[i] for i in mono)
        for w, c in vec.items():
            d = gr.sub(g.module.degrees[w], md)
            parts.setdefault(d, {}).setdefault(mono, {})[w] = c
    return {
        d: Cochain(g.algebra, g.module, g.level, vals, d)
        for d, vals in sorted(parts.items())
    }


def evaluate(g, indices):
    """Skew-symmetric evaluation on an arbitrary basis-index tuple."""
    if len(indices) != g.level:
        raise CochainError("expected %d arguments" % g.level)
    sign, mono = exterior.canonicalize(g.algebra.factor, g.algebra.degrees, indices)
    if not sign:
        return {}
    vec = g.values.get(mono)
    if not vec:
        return {}
    return vec if sign == 1 else vec_scale(vec, sign)


def cochain_add(g, h):
    if (g.algebra, g.module, g.level) != (h.algebra, h.module, h.level):
        raise CochainError("cochain mismatch in addition")
    vals = {m: dict(v) for m, v in g.values.items()}
    for m, v in h.values.items():
        acc = vals.setdefault(m, {})
        vec_axpy(acc, ONE, v)
        if not acc:
            del vals[m]
    return make_cochain(g.algebra, g.module, g.level, vals)


def cochain_scale(g, c):
    c = Fraction(c)
    if not c:
        return zero_cochain(g.algebra, g.module, g.level)
    return Cochain(
        g.algebra, g.module, g.level,
        {m: vec_scale(v, c) for m, v in g.values.items()}, g.degree,
    )


def cochain_sub(g, h):
    return cochain_add(g, cochain_scale(h, -1))


def cochain_eq(g, h):
    return cochain_sub(g, h).is_zero()


# ---------------------------------------------------------------------------
# the coboundary operator


def _act_terms(L, N):
    """First-sum terms on the canonical tuple N: (r, sign, prefix_deg, idx, rest)."""
    g = L.group
    out = []
    prefix = g.zero()
    for r, idx in enumerate(N):
        out.append((r, -1 if r % 2 else 1, prefix, idx, N[:r] + N[r + 1 :]))
        prefix = g.add(prefix, L.degrees[idx])
    return out


def _sub_terms(L, N):
    """Second-sum terms on N, as {monomial: coefficient} after canonicalizing."""
    g = L.group
    fac = L.factor
    out = {}
    n1 = len(N)
    for s in range(1, n1):
        ds = L.degrees[N[s]]
        ssign = -1 if s % 2 else 1
        for r in range(s):
            mid = g.sum(L.degrees[N[t]] for t in range(r + 1, s))
            base = ssign * fac.eps(mid, ds)
            br = L.bracket_basis(N[r], N[s])
            if not br:
                continue
            rest = N[: r] , N[r + 1 : s] , N[s + 1 :]
            for k, c in br.items():
                tup = rest[0] + (k,) + rest[1] + rest[2]
                sg, mono = exterior.canonicalize(fac, L.degrees, tup)
                if sg:
                    co = out.get(mono, Fraction(0)) + base * sg * c
                    if co:
                        out[mono] = co
                    else:
                        out.pop(mono, None)
    return out


def coboundary(g):
    """The cochain d(g), computed directly from the explicit formula."""
    parts = components(g)
    L, V = g.algebra, g.module
    total = zero_cochain(L, V, g.level + 1)
    fac = L.factor
    monos = exterior.basis(fac, L.degrees, g.level + 1)
    for gamma, piece in parts.items():
        vals = {}
        for N in monos:
            acc = {}
            for r, rsign, prefix, idx, rest in _act_terms(L, N):
                gv = piece.values.get(rest)
                if gv:
                    e = rsign * fac.eps(L.group.add(gamma, prefix), L.degrees[idx])
                    vec_axpy(acc, e, V.apply_basis(idx, gv))
            for mono, coeff in _sub_terms(L, N).items():
                gv = piece.values.get(mono)
                if gv:
                    vec_axpy(acc, coeff, gv)
            if acc:
                vals[N] = acc
        total = cochain_add(total, make_cochain(L, V, g.level + 1, vals))
    return total


def is_cocycle(g):
    return coboundary(g).is_zero()


# ---------------------------------------------------------------------------
# module structure, insertion, products, transport


def act(avec, g):
    """Action of a homogeneous algebra vector on a cochain."""
    L, V = g.algebra, g.module
    from .algebra import degree_of_vector

    alpha = degree_of_vector(L.group, L.degrees, avec)
    if alpha is None:
        return zero_cochain(L, V, g.level)
    out = zero_cochain(L, V, g.level)
    fac = L.factor
    monos = exterior.basis(fac, L.degrees, g.level)
    brackets = [L.bracket(avec, {idx: ONE}) for idx in range(L.dim)]
    for gamma, piece in components(g).items():
        vals = {}
        for N in monos:
            acc = {}
            gv = piece.values.get(N)
            if gv:
                vec_axpy(acc, ONE, V.act(avec, gv))
            prefix = gamma
            for r, idx in enumerate(N):
                e = fac.eps(alpha, prefix)
                br = brackets[idx]
                for k, c in br.items():
                    tup = N[:r] + (k,) + N[r + 1 :]
                    sg, mono = exterior.canonicalize(fac, L.degrees, tup)
                    if sg:
                        gv2 = piece.values.get(mono)
                        if gv2:
                            vec_axpy(acc, -e * c * sg, gv2)
                prefix = L.group.add(prefix, L.degrees[idx])
            if acc:
                vals[N] = acc
        out = cochain_add(out, make_cochain(L, V, g.level, vals))
    return out


def insertion(g, avec):
    """g_A: fix the first argument.  Level n-1; zero for n <= 0."""
    L, V = g.algebra, g.module
    if g.level <= 0:
        return zero_cochain(L, V, g.level - 1)
    fac = L.factor
    vals = {}
    for T in exterior.basis(fac, L.degrees, g.level - 1):
        acc = {}
        for i, c in avec.items():
            if not c:
                continue
            sg, mono = exterior.canonicalize(fac, L.degrees, (i,) + T)
            if sg:
                gv = g.values.get(mono)
                if gv:
                    vec_axpy(acc, c * sg, gv)
        if acc:
            vals[T] = acc
    return make_cochain(L, V, g.level - 1, vals)


def _cup_value(g, h, args):
    """Shuffle-sum value of the product on an arbitrary index tuple."""
    L = g.algebra
    fac = L.factor
    gr = L.group
    m, n = g.level, h.level
    eta = h.degree
    degs = [L.degrees[i] for i in args]
    wdim = h.module.dim
    total = {}
    for perm, psign in exterior.shuffles(m, n):
        epsn = fac.eps_n(perm, degs)
        left = tuple(args[p] for p in perm[:m])
        right = tuple(args[p] for p in perm[m:])
        gv = evaluate(g, left)
        if not gv:
            continue
        hv = evaluate(h, right)
        if not hv:
            continue
        e = fac.eps(eta, gr.sum(L.degrees[i] for i in left))
        coeff = psign * epsn * e
        for a, ca in gv.items():
            for b, cb in hv.items():
                key = a * wdim + b
                v = total.get(key, Fraction(0)) + coeff * ca * cb
                if v:
                    total[key] = v
                else:
                    total.pop(key, None)
    return total


def cup_product(g, h, target=None):
    """Product C^m(L,V) x C^n(L,W) -> C^{m+n}(L, V tensor W)."""
    if g.algebra is not h.algebra:
        raise CochainError("cup product across different algebras")
    L = g.algebra
    if g.level < 0 or h.level < 0:
        T = target or tensor(g.module, h.module)
        return zero_cochain(L, T, g.level + h.level)
    T = target or tensor(g.module, h.module)
    out = zero_cochain(L, T, g.level + h.level)
    for gp in components(g).values():
        for hp in components(h).values():
            vals = {}
            for N in exterior.basis(L.factor, L.degrees, g.level + h.level):
                v = _cup_value(gp, hp, N)
                if v:
                    vals[N] = v
            out = cochain_add(out, make_cochain(L, T, g.level + h.level, vals))
    return out


def push_forward(fmat, W, g, check=True):
    """Compose with an invariant homogeneous map V -> W given by a matrix."""
    L, V = g.algebra, g.module
    gr = L.group
    phi = None
    for (r, c) in fmat.entries:
        d = gr.sub(W.degrees[r], V.degrees[c])
        if phi is None:
            phi = d
        elif phi != d:
            raise CochainError("map is not homogeneous")
    if check and not fmat.is_zero():
        for i in range(L.dim):
            e = L.factor.eps(phi, L.degrees[i])
            lhs = fmat.multiply(V.action[i])
            rhs = W.action[i].multiply(fmat).scale(e)
            if lhs != rhs:
                raise CochainError(
                    "map is not invariant (fails at %s)" % L.labels[i]
                )
    vals = {}
    for mono, vec in g.values.items():
        w = fmat.apply(vec)
        if w:
            vals[mono] = w
    return make_cochain(L, W, g.level, vals)


def pull_back(omega, Lsub, g, check=True):
    """Compose the arguments with a degree-zero homomorphism Lsub -> L given
    by the column matrix omega.  Returns a cochain over (Lsub, V^omega)."""
    L, V = g.algebra, g.module
    if Lsub.factor != L.factor:
        raise CochainError("pull-back requires a shared commutation factor")
    cols = omega.columns()
    if check:
        for j in range(Lsub.dim):
            from .algebra import degree_of_vector

            d = degree_of_vector(L.group, L.degrees, cols[j])
            if d is not None and d != L.group.reduce(Lsub.degrees[j]):
                raise CochainError("homomorphism does not preserve degrees")
        if Lsub.homomorphism_defect(L, omega):
            raise CochainError("omega is not an algebra homomorphism")
    Vsub = GradedModule(
        Lsub,
        list(V.labels),
        list(V.degrees),
        [
            _combine_action(V, cols[j])
            for j in range(Lsub.dim)
        ],
    )
    vals = {}
    import itertools

    for N in exterior.basis(Lsub.factor, Lsub.degrees, g.level):
        acc = {}
        choices = [sorted(cols[j].items()) for j in N]
        for combo in itertools.product(*choices):
            coeff = ONE
            for _, c in combo:
                coeff *= c
            idxs = tuple(i for i, _ in combo)
            val = evaluate(g, idxs)
            if val:
                vec_axpy(acc, coeff, val)
        if acc:
            vals[N] = acc
    return make_cochain(Lsub, Vsub, g.level, vals), Vsub


def _combine_action(V, col):
    m = RationalSparseMatrix(V.dim, V.dim)
    for j, c in col.items():
        m = m.add(V.action[j].scale(c))
    return m


# ---------------------------------------------------------------------------
# sector complexes


class CochainComplex:
    """Bases and coboundary matrices for levels 0..n_max (+1 for targets)."""

    def __init__(self, L, V, n_max):
        if n_max < 0:
            raise CochainError("n_max must be >= 0")
        self.algebra = L
        self.module = V
        self.n_max = n_max
        self._monos = {}
        self._basis = {}
        self._index = {}
        self._sectors = {}
        self._delta = {}
        self._delta_sector = {}
        for n in range(n_max + 2):
            self._monos[n] = exterior.basis(L.factor, L.degrees, n)

    def monomials(self, n):
        if n < 0:
            return []
        if n not in self._monos:
            self._monos[n] = exterior.basis(
                self.algebra.factor, self.algebra.degrees, n
            )
        return self._monos[n]

    def basis(self, n):
        if n < 0:
            return []
        if n not in self._basis:
            pairs = []
            for M in self.monomials(n):
                for w in range(self.module.dim):
                    pairs.append((M, w))
            self._basis[n] = pairs
            self._index[n] = {p: k for k, p in enumerate(pairs)}
        return self._basis[n]

    def index(self, n):
        self.basis(n)
        return self._index[n]

    def pair_degree(self, pair):
        M, w = pair
        g = self.algebra.group
        md = g.sum(self.algebra.degrees[i] for i in M)
        return g.sub(self.module.degrees[w], md)

    def sectors(self, n):
        """Degree -> sorted list of basis positions."""
        if n < 0:
            return {}
        if n not in self._sectors:
            out = {}
            for k, p in enumerate(self.basis(n)):
                out.setdefault(self.pair_degree(p), []).append(k)
            self._sectors[n] = dict(sorted(out.items()))
        return self._sectors[n]

    def delta(self, n):
        """Full matrix of the coboundary C^n -> C^{n+1}."""
        if n < 0:
            return RationalSparseMatrix(len(self.basis(0)) if n == -1 else 0, 0)
        if n in self._delta:
            return self._delta[n]
        L, V = self.algebra, self.module
        fac = L.factor
        gr = L.group
        rows = self.index(n + 1)
        colsdex = self.index(n)
        vdim = V.dim
        ent = {}
        vdegs = V.degrees
        for N in self.monomials(n + 1):
            for r, rsign, prefix, idx, rest in _act_terms(L, N):
                mat = V.action[idx]
                if not mat.entries:
                    continue
                md = gr.sum(L.degrees[i] for i in rest)
                for (w2, w), coeff in mat.entries.items():
                    gamma = gr.sub(vdegs[w], md)
                    e = rsign * fac.eps(gr.add(gamma, prefix), L.degrees[idx])
                    key = (rows[(N, w2)], colsdex[(rest, w)])
                    v = ent.get(key, Fraction(0)) + e * coeff
                    if v:
                        ent[key] = v
                    else:
                        ent.pop(key, None)
            for mono, coeff in _sub_terms(L, N).items():
                for w in range(vdim):
                    key = (rows[(N, w)], colsdex[(mono, w)])
                    v = ent.get(key, Fraction(0)) + coeff
                    if v:
                        ent[key] = v
                    else:
                        ent.pop(key, None)
        mat = RationalSparseMatrix(len(self.basis(n + 1)), len(self.basis(n)), ent)
        self._delta[n] = mat
        return mat

    def delta_sector(self, n, deg):
        """Block of delta(n) on the degree sector (rows C^{n+1}, cols C^n)."""
        if n < 0:
            rows = self.sectors(0).get(deg, []) if n == -1 else []
            return RationalSparseMatrix(len(rows), 0)
        key = (n, deg)
        if key in self._delta_sector:
            return self._delta_sector[key]
        cols = self.sectors(n).get(deg, [])
        rows = self.sectors(n + 1).get(deg, [])
        rpos = {p: k for k, p in enumerate(rows)}
        cpos = {p: k for k, p in enumerate(cols)}
        full = self.delta(n)
        ent = {}
        for (r, c), v in full.entries.items():
            if c in cpos:
                if r not in rpos:
                    raise CochainError("coboundary leaves its degree sector")
                ent[(rpos[r], cpos[c])] = v
        mat = RationalSparseMatrix(len(rows), len(cols), ent)
        self._delta_sector[key] = mat
        return mat

    # ---------------------------------------------------------- cochain <-> vec

    def cochain_vector(self, g, sector=True):
        """Coordinates of a homogeneous cochain over the sector basis (or the
        full level basis with sector=False)."""
        if g.degree is None:
            raise CochainError("sector vector of an inhomogeneous cochain")
        dex = self.index(g.level)
        if sector:
            positions = self.sectors(g.level).get(g.degree, [])
            pos = {p: k for k, p in enumerate(positions)}
        vec = {}
        for mono, v in g.values.items():
            for w, c in v.items():
                p = dex[(mono, w)]
                vec[pos[p] if sector else p] = c
        return vec

    def cochain_from_vector(self, n, vec, deg=None):
        """Inverse of cochain_vector; deg selects the sector basis."""
        basis = self.basis(n)
        if deg is not None:
            positions = self.sectors(n).get(deg, [])
            pick = lambda k: basis[positions[k]]
        else:
            pick = lambda k: basis[k]
        vals = {}
        for k, c in vec.items():
            if not c:
                continue
            M, w = pick(k)
            vals.setdefault(M, {})[w] = c
        return make_cochain(self.algebra, self.module, n, vals)

    # ----------------------------------------------------------------- results

    def cohomology(self, split=True):
        res = CohomologyResult(self)
        for n in range(self.n_max + 1):
            level = {}
            if split:
                degs = set(self.sectors(n))
                degs.update(self.sectors(n + 1))
                if n > 0:
                    degs.update(self.sectors(n - 1))
                for deg in sorted(degs):
                    dim_c = len(self.sectors(n).get(deg, []))
                    z = dim_c - self.delta_sector(n, deg).rank()
                    b = self.delta_sector(n - 1, deg).rank() if n > 0 else 0
                    if dim_c or z or b:
                        level[deg] = (z, b, z - b)
            else:
                dim_c = len(self.basis(n))
                z = dim_c - self.delta(n).rank()
                b = self.delta(n - 1).rank() if n > 0 else 0
                level[None] = (z, b, z - b)
            res.levels[n] = level
        return res

    def representatives(self, n, deg):
        """Verified cocycle representatives spanning H^n in one sector."""
        dn = self.delta_sector(n, deg)
        kernel = dn.kernel_basis()
        span = SpanTracker()
        if n > 0:
            prev = self.delta_sector(n - 1, deg)
            for col in prev.columns():
                span.add(col)
        reps = []
        for v in kernel:
            if span.add(v):
                g = self.cochain_from_vector(n, v, deg)
                if not is_cocycle(g):
                    raise CochainError("representative fails the cocycle check")
                if n > 0 and self.coboundary_witness(g) is not None:
                    raise CochainError("representative is a coboundary")
                reps.append(g)
        return reps

    def coboundary_witness(self, g):
        """Solve d(b) = g exactly; None when g is not a coboundary."""
        if g.is_zero():
            return zero_cochain(self.algebra, self.module, g.level - 1)
        out = zero_cochain(self.algebra, self.module, g.level - 1)
        for deg, piece in components(g).items():
            prev = self.delta_sector(g.level - 1, deg)
            vec = self.cochain_vector(piece)
            sol = prev.image_membership(vec)
            if sol is None:
                return None
            out = cochain_add(out, self.cochain_from_vector(g.level - 1, sol, deg))
        return out


class CohomologyResult:
    def __init__(self, cx):
        self.complex = cx
        self.levels = {}

    def dims(self, n):
        return self.levels.get(n, {})

    def total(self, n, which=2):
        """Summed dimension at level n; which selects (z, b, h) = (0, 1, 2)."""
        return sum(t[which] for t in self.levels.get(n, {}).values())

    def sector_table(self, n):
        return sorted(
            (deg, t) for deg, t in self.levels.get(n, {}).items() if t[2]
        )

    def __repr__(self):
        core = ", ".join(
            "H^%d=%d" % (n, self.total(n)) for n in sorted(self.levels)
        )
        return "CohomologyResult(%s)" % core


def cohomology(L, V, n_max, split=True):
    """Convenience wrapper: dimensions of H^0..H^n_max."""
    return CochainComplex(L, V, n_max).cohomology(split=split)


def coboundary_witness(g):
    cx = CochainComplex(g.algebra, g.module, max(g.level - 1, 0))
    return cx.coboundary_witness(g)


# ---------------------------------------------------------------------------
# invariant cochains and classical cocycle constructions


def invariant_cochains(L, V, n, sub_vectors):
    """Basis of {g in C^n : A.g = 0 for all A in the given homogeneous span}."""
    cx = CochainComplex(L, V, max(n - 1, 0))
    basis = cx.basis(n)
    dex = cx.index(n)
    rows = {}
    ent = {}
    from .algebra import degree_of_vector, graded_echelon

    vecs = graded_echelon(L.group, L.degrees, [vec_clean(v) for v in sub_vectors])
    for t, avec in enumerate(vecs):
        for col, pair in enumerate(basis):
            M, w = pair
            b = Cochain(L, V, n, {M: {w: ONE}}, cx.pair_degree(pair))
            res = act(avec, b)
            for mono, vv in res.values.items():
                for w2, c in vv.items():
                    r = rows.setdefault((t, mono, w2), len(rows))
                    ent[(r, col)] = c
    mat = RationalSparseMatrix(len(rows), len(basis), ent)
    out = []
    for kv in mat.kernel_basis():
        vals = {}
        for k, c in kv.items():
            M, w = basis[k]
            vals.setdefault(M, {})[w] = c
        out.append(make_cochain(L, V, n, vals))
    return out


def _form_invariance_defect(L, values, arity):
    """Invariance failures of a multilinear form on L (adjoint arguments)."""
    import itertools

    g = L.group
    fac = L.factor
    bad = []
    for i in range(L.dim):
        alpha = L.degrees[i]
        for T in itertools.product(range(L.dim), repeat=arity):
            D = g.sum(L.degrees[t] for t in T)
            eta = g.neg(g.add(D, alpha))
            acc = Fraction(0)
            prefix = eta
            for k, tk in enumerate(T):
                e = fac.eps(alpha, prefix)
                for s, c in L.bracket_basis(i, tk).items():
                    acc += e * c * values.get(T[:k] + (s,) + T[k + 1 :], Fraction(0))
                prefix = g.add(prefix, L.degrees[tk])
            if acc:
                bad.append((i, T))
    return bad


def skew_symmetrize_form(L, values, arity):
    """Full skew-symmetrization of a multilinear form on L (no 1/n! factor)."""
    import itertools

    fac = L.factor
    out = {}
    for T in itertools.product(range(L.dim), repeat=arity):
        acc = Fraction(0)
        degs = [L.degrees[t] for t in T]
        for perm in itertools.permutations(range(arity)):
            sgn = exterior.permutation_sign(perm)
            epsn = fac.eps_n(perm, degs)
            args = tuple(T[p] for p in perm)
            acc += sgn * epsn * values.get(args, Fraction(0))
        if acc:
            out[T] = acc
    return out


def invariant_form_to_cocycle(L, values, mode="general", check=True):
    """Classical cocycle from an invariant (m+1)-linear form on L.

    values: {(i_1..i_{m+1}): Fraction} on basis tuples.  The result is the
    level-(2m+1) cochain obtained by skew-symmetrizing
    phi(<A_0,A_1>,...,<A_{2m-2},A_{2m-1}>, A_{2m}); in symmetric mode
    (phi eps-symmetric) only the inner 2m-1 slots are symmetrized.
    """
    import itertools

    arities = {len(k) for k in values}
    if len(arities) != 1:
        raise CochainError("form values must share one arity")
    mp1 = arities.pop()
    m = mp1 - 1
    if m < 1:
        raise CochainError("need at least a bilinear form")
    if check and _form_invariance_defect(L, values, mp1):
        raise CochainError("form is not invariant")
    fac = L.factor
    gr = L.group
    r = 2 * m + 1

    def phi_of_brackets(args):
        # phi(<a0,a1>,...,<a_{2m-2},a_{2m-1}>, a_{2m})
        total = Fraction(0)
        pairs = [(args[2 * t], args[2 * t + 1]) for t in range(m)]
        choices = []
        for (x, y) in pairs:
            br = L.bracket_basis(x, y)
            if not br:
                return total
            choices.append(sorted(br.items()))
        for combo in itertools.product(*choices):
            coeff = ONE
            for _, c in combo:
                coeff *= c
            key = tuple(k for k, _ in combo) + (args[r - 1],)
            v = values.get(key)
            if v:
                total += coeff * v
        return total

    raw = {}
    if mode == "general":
        for T in itertools.product(range(L.dim), repeat=r):
            degs = [L.degrees[t] for t in T]
            acc = Fraction(0)
            for perm in itertools.permutations(range(r)):
                sgn = exterior.permutation_sign(perm)
                epsn = fac.eps_n(perm, degs)
                acc += sgn * epsn * phi_of_brackets(tuple(T[p] for p in perm))
            if acc:
                raw[T] = acc
    elif mode == "symmetric":
        if check:
            for T in itertools.product(range(L.dim), repeat=mp1):
                for k in range(mp1 - 1):
                    e = fac.eps(L.degrees[T[k]], L.degrees[T[k + 1]])
                    U = T[:k] + (T[k + 1], T[k]) + T[k + 2 :]
                    if values.get(U, Fraction(0)) != e * values.get(T, Fraction(0)):
                        raise CochainError("form is not eps-symmetric")
        inner = r - 2
        for T in itertools.product(range(L.dim), repeat=r):
            degs = [L.degrees[t] for t in T[1 : r - 1]]
            acc = Fraction(0)
            for perm in itertools.permutations(range(inner)):
                sgn = exterior.permutation_sign(perm)
                epsn = fac.eps_n(perm, degs)
                args = (T[0],) + tuple(T[1 + p] for p in perm) + (T[r - 1],)
                acc += sgn * epsn * phi_of_brackets(args)
            if acc:
                raw[T] = acc
    else:
        raise CochainError("mode must be 'general' or 'symmetric'")

    # verify skewness of the raw table, then keep canonical monomials
    vals = {}
    for T, v in raw.items():
        sg, mono = exterior.canonicalize(fac, L.degrees, T)
        if sg == 0:
            if v:
                raise CochainError("construction is not skew-symmetric")
            continue
        expect = raw.get(mono, Fraction(0)) * sg
        if expect != v:
            raise CochainError("construction is not skew-symmetric")
        if T == mono and v:
            vals[mono] = v
    triv = _trivial_module_cache(L)
    return make_cochain(L, triv, r, {m_: {0: v} for m_, v in vals.items()})


_TRIV_CACHE = {}


def _trivial_module_cache(L):
    key = id(L)
    mod = _TRIV_CACHE.get(key)
    if mod is None or mod.algebra is not L:
        from .gmodule import trivial

        mod = trivial(L)
        _TRIV_CACHE[key] = mod
    return mod
