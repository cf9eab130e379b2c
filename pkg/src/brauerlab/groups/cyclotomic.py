"""
The imprimitive pseudo-reflection groups G(m,1,n) as monomial matrices.

Elements are pairs (permutation, exponent vector in (Z/m)^n) acting by
w(z)_i = xi^{a_i} z_{sigma^{-1}(i)}; the faithful finite action permutes the
n*m pairs (coordinate, twist). Hyperplanes are ker(z_i - xi^a z_j) and
ker(z_i); reflections are the decorated transpositions s_{i,j;a} together
with the pseudo-reflections s_i^k of order m/gcd(k,m).
"""
from __future__ import annotations

from fractions import Fraction

from .base import Matrix, ReflectionGroup
from ..exact import cyclotomic_field


class CyclotomicGroup(ReflectionGroup):
    def __init__(self, m: int, n: int):
        if m < 2 or n < 2:
            raise ValueError("G(m,1,n) needs m >= 2 and n >= 2")
        if m ** n * _factorial(n) > 10 ** 5:
            raise ValueError("G(m,1,n) enumeration bound exceeded (m^n * n! > 1e5)")
        self.m, self.n = m, n
        if m == 2:
            one = Fraction(1)
            xi = Fraction(-1)
            self.cyclo = None
        else:
            F = cyclotomic_field(m)
            self.cyclo = F
            one = F.one
            xi = F.gen()
        self.xi = xi
        zero = one - one

        # generators: t = s_1 (xi on coordinate 0) and the adjacent swaps
        def monomial_perm(sigma: list[int], exps: list[int]) -> tuple[int, ...]:
            # point (i, c) at index i*m + c maps to (sigma[i], c + exps[sigma[i]])
            out = [0] * (n * m)
            for i in range(n):
                for c in range(m):
                    j = sigma[i]
                    out[i * m + c] = j * m + (c + exps[j]) % m
            return tuple(out)

        def monomial_matrix(sigma: list[int], exps: list[int]) -> Matrix:
            rows = [[zero] * n for _ in range(n)]
            for j in range(n):
                rows[sigma[j]][j] = xi ** (exps[sigma[j]] % m) if exps[sigma[j]] % m else one
            return tuple(tuple(r) for r in rows)

        gen_data = [([0] + list(range(1, n)), [1] + [0] * (n - 1))]
        names = ["t1"]
        for i in range(n - 1):
            sigma = list(range(n))
            sigma[i], sigma[i + 1] = sigma[i + 1], sigma[i]
            gen_data.append((sigma, [0] * n))
            names.append(f"s{i + 1}{i + 2}")

        super().__init__(
            name=f"G({m},1,{n})",
            dim=n,
            one=one,
            gen_perms=[monomial_perm(s, e) for s, e in gen_data],
            gen_mats=[monomial_matrix(s, e) for s, e in gen_data],
            gen_names=names,
        )
        assert self.order == m ** n * _factorial(n)
        self.build_mult_table()
        self._index_hyperplanes()

    def _primitive_root(self, order: int):
        if order != self.m:
            raise AssertionError(f"unexpected stabilizer order {order}")
        return self.xi

    def _index_hyperplanes(self):
        """Human labels: ('coord', i) for ker z_i, ('pair', i, j, a) for ker(z_i - xi^a z_j)."""
        one = self.one_scalar
        zero = one - one
        self.hyperplane_label: list[tuple] = [None] * self.n_hyperplanes
        self._label_index: dict[tuple, int] = {}
        for i in range(self.n):
            form = tuple(one if k == i else zero for k in range(self.n))
            idx = self._form_index[form]
            self.hyperplane_label[idx] = ("coord", i)
            self._label_index[("coord", i)] = idx
        for i in range(self.n):
            for j in range(i + 1, self.n):
                for a in range(self.m):
                    form = [zero] * self.n
                    form[i] = one
                    form[j] = -(self.xi ** a) if a else -one
                    idx = self._form_index.get(tuple(form))
                    assert idx is not None
                    self.hyperplane_label[idx] = ("pair", i, j, a)
                    self._label_index[("pair", i, j, a)] = idx

    def hyperplane(self, *label) -> int:
        """Index of ('coord', i) or ('pair', i, j, a); pair labels use i < j."""
        if label[0] == "pair":
            _, i, j, a = label
            if i > j:
                i, j, a = j, i, (-a) % self.m
            label = ("pair", i, j, a % self.m)
        return self._label_index[tuple(label)]

    def element(self, sigma: list[int], exps: list[int]) -> int:
        out = [0] * (self.n * self.m)
        for i in range(self.n):
            for c in range(self.m):
                j = sigma[i]
                out[i * self.m + c] = j * self.m + (c + exps[j]) % self.m
        return self.index[tuple(out)]

    def monomial_of(self, w: int) -> tuple[list[int], list[int]]:
        """(sigma, exps) with w(z)_i = xi^{exps[i]} z_{sigma^{-1}(i)} ... inverse of element()."""
        p = self.elements[w]
        sigma = [0] * self.n
        exps = [0] * self.n
        for i in range(self.n):
            img = p[i * self.m]
            j, c = divmod(img, self.m)
            sigma[i] = j
            exps[j] = c
        return sigma, exps


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def b3_coxeter_group() -> CyclotomicGroup:
    """B3 realized as G(2,1,3) (the same group; spec design decision)."""
    return CyclotomicGroup(2, 3)
