import random
from fractions import Fraction

import pytest

from epslie.exactlin import (
    BACKEND,
    RationalSparseMatrix,
    ShapeError,
    SpanTracker,
    stack_rows,
    vec_eq,
)


def random_matrix(rng, rows, cols, density=0.4, scale=6):
    ent = {}
    for r in range(rows):
        for c in range(cols):
            if rng.random() < density:
                num = rng.randint(-scale, scale)
                den = rng.randint(1, 3)
                if num:
                    ent[(r, c)] = Fraction(num, den)
    return RationalSparseMatrix(rows, cols, ent)


def test_rank_trivial_cases():
    assert RationalSparseMatrix.zero(3, 5).rank() == 0
    assert RationalSparseMatrix.identity(4).rank() == 4


def test_rank_transpose_oracle():
    rng = random.Random(11)
    for _ in range(25):
        m = random_matrix(rng, rng.randint(1, 7), rng.randint(1, 7))
        assert m.rank() == m.transpose().rank()


def test_kernel_trivial_cases():
    assert RationalSparseMatrix.identity(3).kernel_basis() == []
    assert len(RationalSparseMatrix.zero(2, 3).kernel_basis()) == 3


def test_kernel_is_exact_and_independent():
    rng = random.Random(13)
    for _ in range(25):
        m = random_matrix(rng, rng.randint(1, 6), rng.randint(1, 8))
        kb = m.kernel_basis()
        assert m.rank() + len(kb) == m.cols  # rank-nullity
        for v in kb:
            assert not m.apply(v)
        if kb:
            span = RationalSparseMatrix.from_columns(kb, m.cols)
            assert span.rank() == len(kb)


def test_image_membership_trivial():
    ident = RationalSparseMatrix.identity(3)
    b = {0: Fraction(2), 2: Fraction(-1, 3)}
    assert vec_eq(ident.image_membership(b), b)
    zero = RationalSparseMatrix.zero(2, 2)
    assert zero.image_membership({0: Fraction(1)}) is None
    assert vec_eq(zero.image_membership({}), {})


def test_image_membership_consistency():
    rng = random.Random(17)
    for _ in range(25):
        m = random_matrix(rng, rng.randint(1, 6), rng.randint(1, 6))
        x0 = {c: Fraction(rng.randint(-4, 4)) for c in range(m.cols)}
        b = m.apply(x0)
        x = m.image_membership(b)
        assert x is not None
        assert vec_eq(m.apply(x), b)


def test_multiply_identities():
    rng = random.Random(19)
    m = random_matrix(rng, 4, 5)
    ident = RationalSparseMatrix.identity(5)
    assert m.multiply(ident) == m
    n = random_matrix(rng, 5, 3)
    assert m.multiply(n).transpose() == n.transpose().multiply(m.transpose())
    p = random_matrix(rng, 3, 4)
    assert m.multiply(n).multiply(p) == m.multiply(n.multiply(p))


def test_add_scale_block_diag():
    rng = random.Random(23)
    m = random_matrix(rng, 3, 3)
    assert m.add(m.scale(-1)).is_zero()
    b = RationalSparseMatrix.block_diag([m, RationalSparseMatrix.identity(2)])
    assert b.rows == 5 and b.cols == 5
    assert b.rank() == m.rank() + 2


def test_det():
    m = RationalSparseMatrix.from_dense([[1, 2], [3, 4]])
    assert m.det() == -2
    assert RationalSparseMatrix.identity(3).det() == 1
    s = RationalSparseMatrix.from_dense([[1, 2], [2, 4]])
    assert s.det() == 0
    with pytest.raises(ShapeError):
        RationalSparseMatrix.zero(2, 3).det()


def test_shape_errors():
    m = RationalSparseMatrix.zero(2, 3)
    with pytest.raises(ShapeError):
        m.add(RationalSparseMatrix.zero(3, 2))
    with pytest.raises(ShapeError):
        m.multiply(RationalSparseMatrix.zero(2, 2))


def test_stack_rows():
    a = RationalSparseMatrix.identity(2)
    b = RationalSparseMatrix.zero(1, 2)
    s = stack_rows([a, b])
    assert (s.rows, s.cols) == (3, 2)
    assert s.rank() == 2


def test_span_tracker_basis_is_order_independent():
    rng = random.Random(29)
    vecs = []
    for _ in range(6):
        vecs.append({c: Fraction(rng.randint(-3, 3)) for c in range(5)})
    t1 = SpanTracker(vecs)
    t2 = SpanTracker(reversed(vecs))
    assert t1.basis() == t2.basis()


def test_span_tracker_express():
    t = SpanTracker()
    t.add({0: Fraction(1), 1: Fraction(1)})
    t.add({1: Fraction(2)})
    coords, rem = t.express({0: Fraction(3), 1: Fraction(5)})
    assert not rem
    rebuilt = {}
    basis = t.basis()
    for i, c in coords.items():
        for k, v in basis[i].items():
            rebuilt[k] = rebuilt.get(k, Fraction(0)) + c * v
    assert vec_eq(rebuilt, {0: Fraction(3), 1: Fraction(5)})
    _, rem2 = t.express({2: Fraction(1)})
    assert rem2


def test_elimination_preserves_the_row_space():
    """Exactness: the reduced rows span exactly the row space of the input,
    so nothing is lost or invented along the way."""
    rng = random.Random(41)
    from epslie import exactlin

    for _ in range(15):
        m = random_matrix(rng, rng.randint(1, 7), rng.randint(1, 7))
        piv_cols, piv_rows = m.rref()
        original = SpanTracker()
        for row in m.row_dicts():
            original.add({c: Fraction(v) for c, v in row.items()})
        reduced = SpanTracker()
        for row in piv_rows:
            reduced.add({c: Fraction(v) for c, v in row.items()})
        assert original.basis() == reduced.basis()


def test_triplet_dump_deterministic():
    m = RationalSparseMatrix.from_dense([[0, Fraction(1, 2)], [3, 0]])
    assert m.to_triplets() == [(0, 1, "1/2"), (1, 0, "3")]


def test_backends_agree_when_compiled_present():
    try:
        from epslie import _elim_cy
    except ImportError:
        pytest.skip("compiled kernel not built")
    from epslie import _elim_py

    rng = random.Random(31)
    for _ in range(30):
        rows = []
        for _ in range(rng.randint(1, 8)):
            row = {
                c: rng.randint(-9, 9)
                for c in range(rng.randint(1, 8))
                if rng.random() < 0.6
            }
            rows.append({c: v for c, v in row.items() if v})
        for full in (True, False):
            assert _elim_py.rref(rows, full) == _elim_cy.rref(rows, full)


def test_rref_determinism():
    rng = random.Random(37)
    rows = [
        {c: rng.randint(-5, 5) for c in range(6) if rng.random() < 0.5}
        for _ in range(6)
    ]
    rows = [{c: v for c, v in r.items() if v} for r in rows]
    from epslie import exactlin

    first = exactlin._elim.rref(rows)
    for _ in range(3):
        assert exactlin._elim.rref(rows) == first


def test_backend_name_exposed():
    assert BACKEND in ("python", "cython")
