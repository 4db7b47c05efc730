import itertools
import random

import pytest

from epslie.grading import (
    CommutationFactor,
    GradingGroup,
    GradingError,
    super_factor,
    super_z_factor,
    trivial_factor,
)


def test_super_eps_values():
    f = super_factor()
    assert f.eps((1,), (1,)) == -1
    assert f.eps((0,), (1,)) == 1
    assert f.eps((1,), (0,)) == 1
    assert f.eps((0,), (0,)) == 1


def test_zero_degree_is_neutral():
    f = super_z_factor()
    for a in range(-3, 4):
        assert f.eps((0,), (a,)) == 1
        assert f.eps((a,), (0,)) == 1


def test_consistent_z_grading():
    f = super_z_factor()
    assert f.eps((2,), (3,)) == 1
    assert f.eps((1,), (3,)) == -1
    assert f.parity((3,)) == -1
    assert f.parity((2,)) == 1


def test_torsion_reduction():
    g = GradingGroup(0, (2, 2))
    assert g.reduce((3, -1)) == (1, 1)
    assert g.add((1, 1), (1, 0)) == (0, 1)
    assert g.neg((1, 0)) == (1, 0)


def test_form_must_be_symmetric_mod2():
    g = GradingGroup(0, (2, 2))
    with pytest.raises(GradingError):
        CommutationFactor(g, ((0, 1), (0, 0)))
    CommutationFactor(g, ((0, 1), (1, 0)))  # fine


@pytest.mark.parametrize(
    "factor",
    [
        super_factor(),
        CommutationFactor(GradingGroup(0, (2, 2)), ((1, 0), (0, 1))),
        CommutationFactor(GradingGroup(0, (2, 2)), ((1, 1), (1, 0))),
    ],
)
def test_symmetry_and_biadditivity_exhaustive(factor):
    els = factor.group.elements()
    for a in els:
        for b in els:
            assert factor.eps(a, b) * factor.eps(b, a) == 1
            for c in els:
                ab = factor.group.add(a, b)
                assert factor.eps(ab, c) == factor.eps(a, c) * factor.eps(b, c)


def test_biadditivity_on_free_part_sampled():
    f = super_z_factor()
    rng = random.Random(7)
    for _ in range(200):
        a, b, c = ((rng.randint(-9, 9),) for _ in range(3))
        assert f.eps(a, b) * f.eps(b, a) == 1
        assert f.eps(f.group.add(a, b), c) == f.eps(a, c) * f.eps(b, c)


def test_eps_n_identity_and_swap():
    f = super_factor()
    assert f.eps_n((0, 1, 2), [(1,), (1,), (0,)]) == 1
    assert f.eps_n((1, 0), [(1,), (1,)]) == -1
    assert f.eps_n((1, 0), [(0,), (1,)]) == 1


@pytest.mark.parametrize("n", [2, 3, 4])
def test_eps_n_multiplicative_exhaustive_super(n):
    f = super_factor()
    perms = list(itertools.permutations(range(n)))
    for degs in itertools.product([(0,), (1,)], repeat=n):
        degs = list(degs)
        for p in perms:
            for t in perms:
                comp = tuple(p[t[i]] for i in range(n))  # first p, then t
                lhs = f.eps_n(comp, degs)
                rhs = f.eps_n(p, degs) * f.eps_n(t, [degs[p[i]] for i in range(n)])
                assert lhs == rhs


def test_parity_trivial_factor():
    f = trivial_factor(2)
    assert f.parity((5, -3)) == 1
    assert f.eps((1, 0), (0, 1)) == 1


def test_degree_shape_errors():
    f = super_factor()
    with pytest.raises(GradingError):
        f.eps((1, 0), (1,))
