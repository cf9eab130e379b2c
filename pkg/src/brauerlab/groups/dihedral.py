"""
Dihedral groups I2(m) with the symbolic multiplication model and exact
matrices over the cyclotomic field Q(zeta_m).

The real plane is complexified: in coordinates (z, w) the rotation r_j acts
by diag(zeta^j, zeta^-j) and the reflection s_j in the line of angle j*pi/m
by the antidiagonal matrix with entries zeta^j, zeta^-j. The hyperplane H_j
is ker(z - zeta^j w). The faithful finite action permutes the 2m half-line
directions t*pi/m: s_j sends t to 2j - t and r_j sends t to t + 2j (mod 2m).
"""
from __future__ import annotations

from .base import Matrix, ReflectionGroup
from ..exact import cyclotomic_field


class DihedralGroup(ReflectionGroup):
    def __init__(self, m: int):
        if m < 3:
            raise ValueError("dihedral type I2(m) needs m >= 3")
        self.m = m
        F = cyclotomic_field(m)
        self.cyclo = F
        z = F.gen()
        zero, one = F.zero, F.one

        def s_perm(j: int):
            return tuple((2 * j - t) % (2 * m) for t in range(2 * m))

        def s_mat(j: int) -> Matrix:
            return ((zero, z ** j), (z ** (-j % m), zero))

        super().__init__(
            name=f"I2({m})",
            dim=2,
            one=one,
            gen_perms=[s_perm(0), s_perm(1)],
            gen_mats=[s_mat(0), s_mat(1)],
            gen_names=["s0", "s1"],
        )
        self.build_mult_table()
        self._labels = [self._label_of_perm(p) for p in self.elements]
        self._by_label = {lab: i for i, lab in enumerate(self._labels)}

    def _label_of_perm(self, p) -> tuple[str, int]:
        # both s_j and r_j send direction 0 to 2j (mod 2m), so p[0] is even
        # and determines j; the image of direction 1 separates the two kinds
        j = (p[0] // 2) % self.m
        kind = "r" if (p[1] - p[0]) % (2 * self.m) == 1 else "s"
        return (kind, j)

    def label(self, w: int) -> tuple[str, int]:
        """('s', k) or ('r', k); r_0 is the identity rotation."""
        return self._labels[w]

    def element(self, kind: str, k: int) -> int:
        return self._by_label[(kind, k % self.m)]

    def _primitive_root(self, order: int):
        raise AssertionError("dihedral stabilizers have order 2")

    def symbolic_mul(self, a: tuple[str, int], b: tuple[str, int]) -> tuple[str, int]:
        """The closed multiplication rules of the symbolic model."""
        m = self.m
        (ka, i), (kb, j) = a, b
        if ka == "s" and kb == "s":
            return ("r", (i - j) % m)
        if ka == "r" and kb == "r":
            return ("r", (i + j) % m)
        if ka == "s" and kb == "r":
            return ("s", (i - j) % m)
        return ("s", (i + j) % m)
