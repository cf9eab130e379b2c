"""
Finite (pseudo-)reflection groups with exact matrices and arrangement data.

Every group is enumerated breadth-first from its generators; the enumeration
index is the canonical total order on elements (identity first, generators
next), and every coset-representative choice downstream takes the minimum
under this order. Elements carry two synchronized forms: an exact matrix over
the group's base field and a permutation of a faithful finite action used for
fast multiplication.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from ..exact import linalg

Matrix = tuple[tuple[object, ...], ...]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    m = len(b[0])
    k = len(b)
    return tuple(
        tuple(sum((a[i][t] * b[t][j] for t in range(k) if a[i][t]), _zero_like(a[0][0])) for j in range(m))
        for i in range(n)
    )


def mat_vec(a: Matrix, v: Sequence) -> tuple:
    return tuple(sum((a[i][j] * v[j] for j in range(len(v)) if a[i][j]), _zero_like(a[0][0])) for i in range(len(a)))


def vec_mat(v: Sequence, a: Matrix) -> tuple:
    return tuple(sum((v[i] * a[i][j] for i in range(len(v)) if v[i]), _zero_like(a[0][0])) for j in range(len(a[0])))


def _zero_like(x):
    return x - x


def identity_matrix(n: int, one=Fraction(1)) -> Matrix:
    zero = one - one
    return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))


def normalize_form(v: Sequence) -> tuple:
    """Scale a linear form so its first nonzero coefficient is 1."""
    lead = next((x for x in v if x), None)
    if lead is None:
        raise ValueError("zero form")
    return tuple(x / lead for x in v)


@dataclass
class EdgeReport:
    """Codimension-2 intersection data of the arrangement."""

    codim2_edges: list[tuple[int, ...]]          # each edge as its sorted I_L
    crossing: dict[frozenset, bool]              # per unordered hyperplane pair
    edge_of_pair: dict[frozenset, tuple[int, ...]]

    def is_crossing(self, i: int, j: int) -> bool:
        return self.crossing[frozenset((i, j))]


class ReflectionGroup:
    """An enumerated finite pseudo-reflection group with its arrangement."""

    def __init__(self, name: str, dim: int, one, gen_perms: list[tuple[int, ...]],
                 gen_mats: list[Matrix], gen_names: list[str] | None = None):
        self.name = name
        self.dim = dim
        self.one_scalar = one
        npts = len(gen_perms[0])
        id_perm = tuple(range(npts))
        id_mat = identity_matrix(dim, one)
        self.elements: list[tuple[int, ...]] = [id_perm]
        self.matrices: list[Matrix] = [id_mat]
        self.words: list[tuple[int, ...]] = [()]
        self.index: dict[tuple[int, ...], int] = {id_perm: 0}
        self.generators: list[int] = []
        self.gen_names = gen_names or [f"s{i}" for i in range(len(gen_perms))]

        for gi, (p, m) in enumerate(zip(gen_perms, gen_mats)):
            if p not in self.index:
                self.index[p] = len(self.elements)
                self.elements.append(p)
                self.matrices.append(m)
                self.words.append((gi,))
            self.generators.append(self.index[p])
        # breadth-first closure; deterministic order
        frontier = list(range(1, len(self.elements)))
        while frontier:
            nxt = []
            for wi in frontier:
                for gi, (p, m) in enumerate(zip(gen_perms, gen_mats)):
                    q = tuple(self.elements[wi][x] for x in p)  # w o g
                    if q not in self.index:
                        self.index[q] = len(self.elements)
                        self.elements.append(q)
                        self.matrices.append(mat_mul(self.matrices[wi], m))
                        self.words.append(self.words[wi] + (gi,))
                        nxt.append(self.index[q])
            frontier = nxt

        self.order = len(self.elements)
        self._mult: list[list[int]] | None = None
        self._inverse: list[int] | None = None
        self._derive_arrangement()
        self._derive_action()
        self._derive_classes()
        self._edge_report: EdgeReport | None = None

    # -- group operations ----------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        if self._mult is not None:
            return self._mult[a][b]
        pa, pb = self.elements[a], self.elements[b]
        return self.index[tuple(pa[x] for x in pb)]

    def inv(self, a: int) -> int:
        if self._inverse is None:
            self._inverse = [0] * self.order
            for i, p in enumerate(self.elements):
                q = [0] * len(p)
                for x, y in enumerate(p):
                    q[y] = x
                self._inverse[i] = self.index[tuple(q)]
        return self._inverse[a]

    def build_mult_table(self):
        if self._mult is None and self.order <= 4000:
            self._mult = [[self.mul(a, b) for b in range(self.order)] for a in range(self.order)]

    def conj(self, w: int, s: int) -> int:
        return self.mul(self.mul(w, s), self.inv(w))

    def word_of(self, w: int) -> tuple[int, ...]:
        """BFS word of w in terms of generator positions."""
        return self.words[w]

    def element_of_word(self, word: Sequence[int]) -> int:
        acc = 0
        for gi in word:
            acc = self.mul(acc, self.generators[gi])
        return acc

    # -- arrangement ----------------------------------------------------------

    def _derive_arrangement(self):
        eye = identity_matrix(self.dim, self.one_scalar)
        self.reflections: list[int] = []
        forms: dict[tuple, int] = {}
        self.hyperplanes: list[tuple] = []
        self.i_of_s: dict[int, int] = {}
        for idx, m in enumerate(self.matrices):
            if idx == 0:
                continue
            diff = [[m[i][j] - eye[i][j] for j in range(self.dim)] for i in range(self.dim)]
            if linalg.rank(diff) != 1:
                continue
            self.reflections.append(idx)
            row = next(r for r in diff if any(r))
            f = normalize_form(row)
            if f not in forms:
                forms[f] = len(self.hyperplanes)
                self.hyperplanes.append(f)
            self.i_of_s[idx] = forms[f]
        self._form_index = forms
        nP = len(self.hyperplanes)
        # pointwise stabilizer orders and distinguished pseudo-reflections
        self.stab_order = [0] * nP
        per_hyp: list[list[int]] = [[] for _ in range(nP)]
        for s in self.reflections:
            per_hyp[self.i_of_s[s]].append(s)
        self.reflections_of_hyperplane = per_hyp
        self.s_of_i: list[int] = [0] * nP
        for i, ss in enumerate(per_hyp):
            self.stab_order[i] = len(ss) + 1
            self.s_of_i[i] = self._distinguished(ss, len(ss) + 1)

    def _distinguished(self, refls: list[int], order: int) -> int:
        """The s in G_i with exceptional eigenvalue exp(2*pi*i/|G_i|)."""
        if order == 2:
            return refls[0]
        # exceptional eigenvalue = trace - (dim - 1); compare against the
        # canonical primitive root of unity of the base field
        target = self._primitive_root(order)
        for s in refls:
            tr = sum((self.matrices[s][k][k] for k in range(self.dim)), _zero_like(self.one_scalar))
            if tr - (self.dim - 1) == target:
                return s
        raise AssertionError("no distinguished pseudo-reflection found")

    def _primitive_root(self, order: int):
        raise NotImplementedError("groups with |G_i| > 2 must override _primitive_root")

    def _derive_action(self):
        nP = len(self.hyperplanes)
        self.hyp_action: list[list[int]] = []
        for w in range(self.order):
            winv = self.matrices[self.inv(w)]
            row = []
            for f in self.hyperplanes:
                g = normalize_form(vec_mat(f, winv))
                row.append(self._form_index[g])
            self.hyp_action.append(row)
        # orbits of the hyperplane action
        self.orbit_of = [-1] * nP
        self.orbits: list[list[int]] = []
        for i in range(nP):
            if self.orbit_of[i] >= 0:
                continue
            orb = sorted({self.hyp_action[w][i] for w in range(self.order)})
            oi = len(self.orbits)
            self.orbits.append(orb)
            for j in orb:
                self.orbit_of[j] = oi

    def _derive_classes(self):
        self.class_of_refl: dict[int, int] = {}
        self.refl_classes: list[list[int]] = []
        for s in self.reflections:
            if s in self.class_of_refl:
                continue
            cls = sorted({self.conj(w, s) for w in range(self.order)})
            ci = len(self.refl_classes)
            self.refl_classes.append(cls)
            for t in cls:
                self.class_of_refl[t] = ci

    # -- queries ---------------------------------------------------------------

    @property
    def n_hyperplanes(self) -> int:
        return len(self.hyperplanes)

    def r_set(self, i: int, j: int) -> list[int]:
        """R(i,j): pseudo-reflections s with s(H_j) = H_i. Requires i != j."""
        if i == j:
            raise ValueError("r_set requires distinct hyperplanes")
        return [s for s in self.reflections if self.hyp_action[s][j] == i]

    def edge_report(self) -> EdgeReport:
        if self._edge_report is None:
            self._edge_report = classify_edges(self)
        return self._edge_report

    def fixed_space_rows(self, w: int) -> list[list]:
        m = self.matrices[w]
        eye = identity_matrix(self.dim, self.one_scalar)
        return [[m[i][j] - eye[i][j] for j in range(self.dim)] for i in range(self.dim)]

    def subgroup(self, gens: Sequence[int]) -> list[int]:
        """Sorted element list of the subgroup generated by the given elements."""
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for a in frontier:
                for g in gens:
                    b = self.mul(a, g)
                    if b not in seen:
                        seen.add(b)
                        nxt.append(b)
            frontier = nxt
        return sorted(seen)

    def coset_min(self, w: int, subgroup_elems: Sequence[int]) -> int:
        """Minimum of w * U under the enumeration order."""
        return min(self.mul(w, u) for u in subgroup_elems)

    def __repr__(self):
        return f"<ReflectionGroup {self.name}: order {self.order}, |R|={len(self.reflections)}, |P|={self.n_hyperplanes}>"


def classify_edges(G: ReflectionGroup) -> EdgeReport:
    """
    Codimension-2 edges by exact span membership of the defining forms.

    For each unordered pair {i,j}, I_L = {k : alpha_k in span(alpha_i, alpha_j)};
    the pair is crossing iff |I_L| = 2. Edges are deduplicated by their I_L.
    """
    nP = G.n_hyperplanes
    forms = G.hyperplanes
    crossing: dict[frozenset, bool] = {}
    edge_of_pair: dict[frozenset, tuple[int, ...]] = {}
    edges: dict[tuple[int, ...], None] = {}
    for i in range(nP):
        for j in range(i + 1, nP):
            key = frozenset((i, j))
            members = []
            for k in range(nP):
                if k in (i, j) or linalg.rank([list(forms[i]), list(forms[j]), list(forms[k])]) == 2:
                    members.append(k)
            I_L = tuple(members)
            edges.setdefault(I_L, None)
            edge_of_pair[key] = I_L
            crossing[key] = len(I_L) == 2
    return EdgeReport(sorted(edges), crossing, edge_of_pair)


def relation1prime_pairs(G: ReflectionGroup) -> list[tuple[int, int]]:
    """
    Pairs (w, i) with w(H_i) = H_i and H_i cap V_w a noncrossing codim-2 edge.

    V_w is the fixed space of w, computed exactly. The intersection qualifies
    when it has codimension 2, is an edge of the arrangement (the hyperplanes
    through it cut it out), and more than two hyperplanes contain it.
    """
    out = []
    forms = G.hyperplanes
    for w in range(1, G.order):
        rows_w = [r for r in G.fixed_space_rows(w) if any(r)]
        for i in range(G.n_hyperplanes):
            if G.hyp_action[w][i] != i:
                continue
            rows = rows_w + [list(forms[i])]
            if linalg.rank(rows) != 2:
                continue
            members = [k for k in range(G.n_hyperplanes)
                       if linalg.rank(rows + [list(forms[k])]) == 2]
            if len(members) <= 2:
                continue
            if linalg.rank([list(forms[k]) for k in members]) == 2:
                out.append((w, i))
    return sorted(out)


def perp_classes(G: ReflectionGroup) -> list[list[int]]:
    """
    Partition of the reflections by the commuting relation s ⊥ s'.

    Guaranteed to be an equivalence relation for H3 only; for other groups the
    connected components of the commuting graph are returned, and a failure of
    transitivity raises to signal misuse.
    """
    refl = G.reflections
    adj = {s: set() for s in refl}
    for a in refl:
        for b in refl:
            if a != b and G.mul(a, b) == G.mul(b, a):
                adj[a].add(b)
    classes: list[list[int]] = []
    seen: set[int] = set()
    for s in refl:
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in comp:
                    comp.add(y)
                    stack.append(y)
        for a in comp:
            for b in comp:
                if a != b and b not in adj[a]:
                    raise ValueError("'perp' is not an equivalence relation for this group")
        classes.append(sorted(comp))
        seen |= comp
    return sorted(classes)
