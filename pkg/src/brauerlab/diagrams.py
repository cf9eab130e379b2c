"""
Diagram models: the Brauer algebra B_n(tau) and the cyclotomic Brauer
algebra of type G(m,1,n), used as independent combinatorial oracles.

A diagram on 2n points (top row 0..n-1, bottom row n..2n-1) is a perfect
matching, stored as an involution array. Decorated diagrams additionally
carry a Z/m twist per strand under a fixed orientation convention: every
strand is oriented from its smaller point index to its larger one (top to
bottom for through strands, left to right for horizontal arcs); traversing
a strand against its orientation negates the twist. Closed loops produced
by composition are traversed starting from their smallest middle point,
moving through the upper diagram first; a loop of total twist a contributes
the scalar delta_a. The convention is validated by the full relation suite
of the cyclotomic presentation, not assumed.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .exact import ParamPoly


def _pairs_of(matching: tuple[int, ...]) -> list[tuple[int, int]]:
    return [(i, j) for i, j in enumerate(matching) if i < j]


@dataclass(frozen=True)
class BrauerDiagram:
    """A perfect matching on 2n points; matching[x] is the partner of x."""

    matching: tuple[int, ...]

    def __post_init__(self):
        m = self.matching
        assert len(m) % 2 == 0
        assert all(m[x] != x and m[m[x]] == x for x in range(len(m))), "not a perfect matching"

    @property
    def n(self) -> int:
        return len(self.matching) // 2

    @classmethod
    def identity(cls, n: int) -> BrauerDiagram:
        return cls(tuple((x + n) % (2 * n) for x in range(2 * n)))

    @classmethod
    def from_permutation(cls, sigma: tuple[int, ...]) -> BrauerDiagram:
        """Top point sigma(j) joined to bottom point n+j, so that diagram
        composition matches function composition of permutations."""
        n = len(sigma)
        m = [0] * (2 * n)
        for j in range(n):
            m[sigma[j]] = n + j
            m[n + j] = sigma[j]
        return cls(tuple(m))

    @classmethod
    def e(cls, i: int, j: int, n: int) -> BrauerDiagram:
        """The element e_{i,j}: arcs {i,j} on top and bottom, rest through."""
        assert 0 <= i < j < n
        m = list(cls.identity(n).matching)
        m[i], m[j] = j, i
        m[n + i], m[n + j] = n + j, n + i
        return cls(tuple(m))

    def to_json(self) -> list:
        """JSON form: sorted array of point pairs."""
        return [[x, y] for x, y in _pairs_of(self.matching)]

    def flip(self) -> BrauerDiagram:
        """Top-bottom mirror (the diagram anti-involution)."""
        n = self.n
        swap = lambda x: x + n if x < n else x - n
        m = [0] * (2 * n)
        for x, y in enumerate(self.matching):
            m[swap(x)] = swap(y)
        return BrauerDiagram(tuple(m))

    def permutation(self) -> tuple[int, ...] | None:
        """The permutation sigma if every strand is through, else None."""
        n = self.n
        if any(self.matching[x] < n for x in range(n)):
            return None
        return tuple(self.matching[n + j] for j in range(n))


def compose_brauer(d1: BrauerDiagram, d2: BrauerDiagram) -> tuple[BrauerDiagram, int]:
    """
    Stack d1 over d2 (product d1 * d2), tracing strands and counting the
    closed loops swallowed in the middle.
    """
    if d1.n != d2.n:
        raise ValueError("diagram size mismatch")
    d, loops, _ = compose_decorated(
        d1.matching, {p: 0 for p in _pairs_of(d1.matching)},
        d2.matching, {p: 0 for p in _pairs_of(d2.matching)}, 1)
    return BrauerDiagram(d[0]), loops


def compose_decorated(m1, dec1, m2, dec2, mod: int):
    """
    Compose decorated matchings; returns ((matching, decorations), n_loops,
    loop_twists). Decorations are keyed by (small, large) point pairs and
    read along the small-to-large orientation.
    """
    n = len(m1) // 2
    # unified point space: result top 0..n-1, result bottom n..2n-1,
    # middle layer identified: bottom x of d1 = top x-n of d2.
    res_match = [-1] * (2 * n)
    res_dec: dict[tuple[int, int], int] = {}
    visited_mid = [False] * n

    def d1_next(x):  # point in d1 coords 0..2n-1
        y = m1[x]
        t = dec1[(min(x, y), max(x, y))]
        return y, (t if x < y else -t)

    def d2_next(x):
        y = m2[x]
        t = dec2[(min(x, y), max(x, y))]
        return y, (t if x < y else -t)

    def trace(start_layer: str, start: int):
        """Follow the strand from an exterior point; returns (layer, point, twist)."""
        layer, x, acc = start_layer, start, 0
        while True:
            if layer == "top":  # inside d1
                y, t = d1_next(x)
                acc += t
                if y < n:
                    return "top", y, acc
                visited_mid[y - n] = True
                layer, x = "bot", y - n
            else:  # inside d2
                y, t = d2_next(x)
                acc += t
                if y >= n:
                    return "bot", y, acc
                visited_mid[y] = True
                layer, x = "top", y + n

    ext = [("top", x) for x in range(n)] + [("bot", x) for x in range(n, 2 * n)]
    done = set()
    for layer, x in ext:
        key = (layer, x)
        if key in done:
            continue
        end_layer, y, acc = trace(layer, x)
        a = x if layer == "top" else x  # result index equals d-coordinates
        b = y if end_layer == "top" else y
        res_match[a] = b
        res_match[b] = a
        done.add(key)
        done.add((end_layer, y))
        small, large = (a, b) if a < b else (b, a)
        res_dec[(small, large)] = (acc if a < b else -acc) % mod

    loops = 0
    loop_twists = []
    for mid in range(n):
        if visited_mid[mid]:
            continue
        # traverse the loop starting down the upper diagram
        acc = 0
        layer, x = "top", mid + n  # middle point in d1 coordinates
        start = ("top", x)
        while True:
            if layer == "top":
                y, t = d1_next(x)
                acc += t
                visited_mid[y - n] = True
                layer, x = "bot", y - n
            else:
                y, t = d2_next(x)
                acc += t
                visited_mid[y] = True
                layer, x = "top", y + n
            if (layer, x) == start:
                break
        loops += 1
        loop_twists.append(acc % mod)
    return (tuple(res_match), res_dec), loops, loop_twists


@dataclass(frozen=True)
class CycloDiagram:
    """A Brauer diagram with Z/m decorations per strand."""

    matching: tuple[int, ...]
    decoration: tuple[tuple[tuple[int, int], int], ...]  # sorted ((x,y), twist) pairs
    m: int

    @classmethod
    def make(cls, matching, dec: dict, m: int) -> CycloDiagram:
        full = {p: dec.get(p, 0) % m for p in _pairs_of(tuple(matching))}
        return cls(tuple(matching), tuple(sorted(full.items())), m)

    @property
    def n(self) -> int:
        return len(self.matching) // 2

    def dec_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.decoration)

    @classmethod
    def identity(cls, n: int, m: int) -> CycloDiagram:
        return cls.make(BrauerDiagram.identity(n).matching, {}, m)

    def to_json(self) -> list:
        """JSON form: array of [x, y, twist] triples."""
        return [[x, y, t] for (x, y), t in self.decoration]

    def flip(self) -> CycloDiagram:
        """
        The word-reversing anti-involution fixing s_i, e_i and t_j: mirror the
        diagram and negate arc twists while keeping through-strand twists
        (checked against the algebra in the test suite).
        """
        n = self.n
        swap = lambda x: x + n if x < n else x - n
        match = [0] * (2 * n)
        dec: dict[tuple[int, int], int] = {}
        for (x, y), t in self.decoration:
            a, b = swap(x), swap(y)
            match[a], match[b] = b, a
            if a < b:
                dec[(a, b)] = (-t) % self.m
            else:
                dec[(b, a)] = t % self.m
        return CycloDiagram.make(tuple(match), dec, self.m)


def compose_cyclo(d1: CycloDiagram, d2: CycloDiagram) -> tuple[CycloDiagram, list[int]]:
    """Compose decorated diagrams; returns (diagram, loop twist list)."""
    if d1.n != d2.n or d1.m != d2.m:
        raise ValueError("diagram size/modulus mismatch")
    (match, dec), _, twists = compose_decorated(
        d1.matching, d1.dec_dict(), d2.matching, d2.dec_dict(), d1.m)
    return CycloDiagram.make(match, dec, d1.m), sorted(twists)


def all_matchings(n: int):
    """All perfect matchings on 2n points, (2n-1)!! of them."""
    pts = list(range(2 * n))

    def rec(rem):
        if not rem:
            yield []
            return
        a = rem[0]
        for k in range(1, len(rem)):
            b = rem[k]
            rest = rem[1:k] + rem[k + 1:]
            for tail in rec(rest):
                yield [(a, b)] + tail

    for pairing in rec(pts):
        m = [0] * (2 * n)
        for a, b in pairing:
            m[a], m[b] = b, a
        yield tuple(m)


class BrauerTable:
    """
    The Brauer algebra B_n(tau) on its (2n-1)!! diagram basis, with structure
    constants tau^loops. Generators s_i = s_{i,i+1} and e_i = e_{i,i+1}.
    """

    params = ("tau",)

    def __init__(self, n: int):
        if n > 4:
            raise ValueError("diagram table bounded at n <= 4")
        self.n = n
        self.basis: list[BrauerDiagram] = [BrauerDiagram(m) for m in all_matchings(n)]
        self.index = {d: i for i, d in enumerate(self.basis)}
        self.dim = len(self.basis)
        self.identity_index = self.index[BrauerDiagram.identity(n)]
        self.tau = ParamPoly.variable("tau", self.params)
        self.gens: dict[tuple, int] = {}
        for i in range(n - 1):
            sigma = list(range(n))
            sigma[i], sigma[i + 1] = sigma[i + 1], sigma[i]
            self.gens[("s", i)] = self.index[BrauerDiagram.from_permutation(tuple(sigma))]
            self.gens[("e", i)] = self.index[BrauerDiagram.e(i, i + 1, n)]

    def product(self, a: int, b: int) -> dict[int, ParamPoly]:
        d, loops = compose_brauer(self.basis[a], self.basis[b])
        return {self.index[d]: self.tau ** loops}

    def star(self, a: int) -> dict[int, ParamPoly]:
        return {self.index[self.basis[a].flip()]: ParamPoly.constant(1, self.params)}

    def perm_index(self, sigma: tuple[int, ...]) -> int:
        return self.index[BrauerDiagram.from_permutation(sigma)]

    def e_index(self, i: int, j: int) -> int:
        return self.index[BrauerDiagram.e(min(i, j), max(i, j), self.n)]


class CycloTable:
    """
    The cyclotomic Brauer diagram algebra of type G(m,1,n) on decorated
    diagrams, with loop parameters delta_0..delta_{m-1}. Generators are
    s_i, e_i (1 <= i < n) and t_j (1 <= j <= n); t_j carries twist -1 so that
    e_1 t_1^a e_1 = delta_a e_1 under the module's loop convention.
    """

    def __init__(self, m: int, n: int):
        size = m ** n
        for k in range(2 * n - 1, 0, -2):
            size *= k
        if size > 2000:
            raise ValueError("cyclotomic diagram table bound exceeded")
        self.m, self.n = m, n
        self.params = tuple(f"delta{a}" for a in range(m))
        self.basis: list[CycloDiagram] = []
        for match in all_matchings(n):
            pairs = _pairs_of(match)
            for twists in itertools.product(range(m), repeat=n):
                dec = {p: t for p, t in zip(pairs, twists)}
                self.basis.append(CycloDiagram.make(match, dec, m))
        self.index = {d: i for i, d in enumerate(self.basis)}
        self.dim = len(self.basis)
        self.identity_index = self.index[CycloDiagram.identity(n, m)]
        self.gens: dict[tuple, int] = {}
        for i in range(n - 1):
            sigma = list(range(n))
            sigma[i], sigma[i + 1] = sigma[i + 1], sigma[i]
            perm = BrauerDiagram.from_permutation(tuple(sigma)).matching
            self.gens[("s", i + 1)] = self.index[CycloDiagram.make(perm, {}, m)]
            eb = BrauerDiagram.e(i, i + 1, n).matching
            self.gens[("e", i + 1)] = self.index[CycloDiagram.make(eb, {}, m)]
        for j in range(n):
            ident = BrauerDiagram.identity(n).matching
            self.gens[("t", j + 1)] = self.index[CycloDiagram.make(ident, {(j, j + n): -1}, m)]

    def delta(self, a: int) -> ParamPoly:
        return ParamPoly.variable(f"delta{a % self.m}", self.params)

    def product(self, a: int, b: int) -> dict[int, ParamPoly]:
        d, twists = compose_cyclo(self.basis[a], self.basis[b])
        coeff = ParamPoly.constant(1, self.params)
        for t in twists:
            coeff = coeff * self.delta(t)
        return {self.index[d]: coeff}

    def star(self, a: int) -> dict[int, ParamPoly]:
        return {self.index[self.basis[a].flip()]: ParamPoly.constant(1, self.params)}
