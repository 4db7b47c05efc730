"""Grading groups, degrees and sign-valued commutation factors.

Degrees are plain integer tuples; a GradingGroup knows how to add and
normalize them (torsion coordinates are reduced eagerly, so degrees are
hashable dict keys and compare deterministically).  A CommutationFactor
carries an integer bilinear form B, read mod 2, with
eps(a, b) = (-1)^(a^T B b); this covers the super, consistently Z-graded
and Z_2^n color cases, all of which take values in {+1, -1}.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

Degree = tuple  # integer tuple; length = free_rank + number of torsion coords


class GradingError(ValueError):
    pass


@dataclass(frozen=True)
class GradingGroup:
    """Finitely generated abelian group Z^free_rank x Z_t1 x ... x Z_tk."""

    free_rank: int = 0
    torsion_orders: tuple = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise GradingError("free_rank must be >= 0")
        object.__setattr__(self, "torsion_orders", tuple(self.torsion_orders))
        if any(t < 2 for t in self.torsion_orders):
            raise GradingError("torsion orders must be >= 2")

    @property
    def ncoords(self):
        return self.free_rank + len(self.torsion_orders)

    def zero(self) -> Degree:
        return (0,) * self.ncoords

    def reduce(self, coords) -> Degree:
        coords = tuple(int(c) for c in coords)
        if len(coords) != self.ncoords:
            raise GradingError(
                "degree has %d coordinates, expected %d" % (len(coords), self.ncoords)
            )
        free = coords[: self.free_rank]
        tors = tuple(
            c % t for c, t in zip(coords[self.free_rank :], self.torsion_orders)
        )
        return free + tors

    def add(self, a: Degree, b: Degree) -> Degree:
        return self.reduce(tuple(x + y for x, y in zip(a, b)))

    def neg(self, a: Degree) -> Degree:
        return self.reduce(tuple(-x for x in a))

    def sub(self, a: Degree, b: Degree) -> Degree:
        return self.reduce(tuple(x - y for x, y in zip(a, b)))

    def sum(self, degs) -> Degree:
        total = [0] * self.ncoords
        for d in degs:
            for k, x in enumerate(d):
                total[k] += x
        return self.reduce(total)

    def elements(self):
        """All group elements; only for pure torsion groups."""
        if self.free_rank:
            raise GradingError("cannot enumerate a group with free part")
        return [
            self.reduce(c)
            for c in itertools.product(*[range(t) for t in self.torsion_orders])
        ]


def super_group() -> GradingGroup:
    return GradingGroup(0, (2,))


@dataclass(frozen=True)
class CommutationFactor:
    """eps(a, b) = (-1)^(a^T B b) with B symmetric mod 2."""

    group: GradingGroup
    form: tuple = None  # tuple of row tuples, ints

    def __post_init__(self):
        n = self.group.ncoords
        if self.form is None:
            object.__setattr__(self, "form", tuple((0,) * n for _ in range(n)))
        else:
            object.__setattr__(
                self, "form", tuple(tuple(int(x) for x in row) for row in self.form)
            )
        B = self.form
        if len(B) != n or any(len(row) != n for row in B):
            raise GradingError("form must be %d x %d" % (n, n))
        for i in range(n):
            for j in range(i):
                if (B[i][j] - B[j][i]) % 2:
                    raise GradingError("form must be symmetric mod 2")

    def eps(self, a: Degree, b: Degree) -> int:
        a = self.group.reduce(a)
        b = self.group.reduce(b)
        B = self.form
        total = 0
        for i, ai in enumerate(a):
            if ai:
                row = B[i]
                for j, bj in enumerate(b):
                    if bj:
                        total += ai * row[j] * bj
        return -1 if total % 2 else 1

    def parity(self, a: Degree) -> int:
        """Sign eps(a, a); -1 marks an odd degree."""
        return self.eps(a, a)

    def eps_n(self, perm, degs) -> int:
        """Sign attached to permuting homogeneous slots.

        perm is a 0-indexed tuple p; the value is the product of
        eps(degs[i], degs[j]) over pairs i < j whose order is inverted by
        the inverse permutation.  Satisfies
        eps_n(p∘q; degs) = eps_n(p; degs) * eps_n(q; degs∘p).
        """
        n = len(perm)
        if len(degs) != n:
            raise GradingError("permutation and degree list lengths differ")
        inv = [0] * n
        for pos, v in enumerate(perm):
            inv[v] = pos
        s = 1
        for i in range(n):
            for j in range(i + 1, n):
                if inv[i] > inv[j]:
                    s *= self.eps(degs[i], degs[j])
        return s


def super_factor() -> CommutationFactor:
    """The standard supersymmetry factor on Z_2."""
    return CommutationFactor(super_group(), ((1,),))


def super_z_factor() -> CommutationFactor:
    """Consistent Z-grading: eps(a, b) = (-1)^(ab) on Z."""
    return CommutationFactor(GradingGroup(1, ()), ((1,),))


def trivial_factor(free_rank=0, torsion=()) -> CommutationFactor:
    """eps identically +1 (plain Lie algebras, possibly with a weight grading)."""
    return CommutationFactor(GradingGroup(free_rank, tuple(torsion)))
