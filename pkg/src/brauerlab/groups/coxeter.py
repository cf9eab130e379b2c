"""
Coxeter groups in exact matrix realizations.

A-type is realized as the symmetric group permuting coordinates of Q^(n+1),
with hyperplanes ker(z_a - z_b); H3 through its geometric representation over
Q(sqrt 5), with elements stored as permutations of the 30 roots for fast
multiplication; B3 is the same group as G(2,1,3) and is built there.
"""
from __future__ import annotations

import itertools
from fractions import Fraction

from .base import Matrix, ReflectionGroup, mat_vec
from ..exact import sqrt_field


class SymmetricGroup(ReflectionGroup):
    """The Coxeter group of type A_n acting on Q^(n+1) (that is, S_{n+1})."""

    def __init__(self, rank: int):
        if rank < 1:
            raise ValueError("A-type rank must be >= 1")
        self.rank = rank
        n = rank + 1
        one = Fraction(1)
        zero = Fraction(0)

        def transposition(i: int) -> tuple[int, ...]:
            p = list(range(n))
            p[i], p[i + 1] = p[i + 1], p[i]
            return tuple(p)

        def perm_matrix(p: tuple[int, ...]) -> Matrix:
            return tuple(tuple(one if i == p[j] else zero for j in range(n)) for i in range(n))

        gens = [transposition(i) for i in range(rank)]
        super().__init__(
            name=f"A{rank}",
            dim=n,
            one=one,
            gen_perms=gens,
            gen_mats=[perm_matrix(p) for p in gens],
            gen_names=[f"s{i}" for i in range(rank)],
        )
        self.build_mult_table()
        # transposition labels (a, b) for hyperplanes ker(z_a - z_b)
        self.pair_of_hyperplane: list[tuple[int, int]] = [None] * self.n_hyperplanes
        for a, b in itertools.combinations(range(n), 2):
            p = list(range(n))
            p[a], p[b] = p[b], p[a]
            s = self.index[tuple(p)]
            self.pair_of_hyperplane[self.i_of_s[s]] = (a, b)

    def hyperplane_of_pair(self, a: int, b: int) -> int:
        a, b = min(a, b), max(a, b)
        return self.pair_of_hyperplane.index((a, b))

    def _primitive_root(self, order: int):
        raise AssertionError("symmetric-group stabilizers have order 2")


H3_COXETER_MATRIX = ((1, 5, 2), (5, 1, 3), (2, 3, 1))


class H3Group(ReflectionGroup):
    """
    The H3 Coxeter group through its geometric representation.

    The bilinear form has B(a0,a1) = -cos(pi/5) = -(1+sqrt5)/4, B(a1,a2) = -1/2,
    B(a0,a2) = 0 and ones on the diagonal. Elements are enumerated as exact
    3x3 matrices over Q(sqrt5), then canonically stored as permutations of the
    30 roots (the 15-line action is not faithful since (s2 s0 s1)^5 = -id).
    """

    def __init__(self):
        F = sqrt_field(5)
        self.sqrt5_field = F
        s5 = F.gen()
        one, zero = F.one, F.zero
        half = F.from_rational(Fraction(1, 2))
        cos_pi_5 = (F.one + s5) * F.from_rational(Fraction(1, 4))
        B = [
            [one, -cos_pi_5, zero],
            [-cos_pi_5, one, -half],
            [zero, -half, one],
        ]
        self.bilinear_form = tuple(tuple(r) for r in B)

        def refl_matrix(i: int) -> Matrix:
            # sigma_i(v) = v - 2 B(alpha_i, v) alpha_i in the alpha basis
            rows = []
            for r in range(3):
                row = []
                for c in range(3):
                    e = one if r == c else zero
                    if r == i:
                        e = e - 2 * B[i][c]
                    row.append(e)
                rows.append(tuple(row))
            return tuple(rows)

        mats = [refl_matrix(i) for i in range(3)]
        # enumerate the root system: orbit of the simple roots
        simple = [tuple(one if k == i else zero for k in range(3)) for i in range(3)]
        roots: list[tuple] = []
        root_index: dict[tuple, int] = {}
        frontier = list(simple)
        for v in simple:
            root_index[v] = len(roots)
            roots.append(v)
        while frontier:
            nxt = []
            for v in frontier:
                for m in mats:
                    w = mat_vec(m, v)
                    if w not in root_index:
                        root_index[w] = len(roots)
                        roots.append(w)
                        nxt.append(w)
            frontier = nxt
        assert len(roots) == 30, f"H3 root count {len(roots)}"
        self.roots = roots

        def root_perm(m: Matrix) -> tuple[int, ...]:
            return tuple(root_index[mat_vec(m, v)] for v in roots)

        super().__init__(
            name="H3",
            dim=3,
            one=one,
            gen_perms=[root_perm(m) for m in mats],
            gen_mats=mats,
            gen_names=["s0", "s1", "s2"],
        )
        self.build_mult_table()

    def _primitive_root(self, order: int):
        raise AssertionError("H3 stabilizers have order 2")

    def longest_center_element(self) -> int:
        """c = (s2 s0 s1)^5, the central -id."""
        s0, s1, s2 = self.generators
        t = self.mul(self.mul(s2, s0), s1)
        c = 0
        for _ in range(5):
            c = self.mul(c, t)
        return c
