"""
Cell data for the dihedral and H3 algebra tables, and the Graham-Lehrer
axiom verifier (C1)-(C3).

The poset is encoded by integer levels: the LK-type cells sit at level 0
(H3: the five-class cell at 0, the four induced cells at 1), the group-algebra
cells on top; cells sharing a level are incomparable. For the built-in data,
the span of all cells below a given one is an exact coordinate subspace of
the table basis (the e-length filtration); the verifier checks that property
structurally before using it to reduce modulo the lower ideal, then solves
for the (C3) coefficients r_a(S',S) per (lambda, T) and compares them across
T, so T-dependence is reported, not assumed away.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..exact import NFElem, ParamPoly
from ..exact import linalg
from ..groups import DihedralGroup, H3Group, perp_classes
from ..core.table import AlgebraTable, NormalWord
from ..matrices import SparseMat
from ..reps import MatrixRep
from .groupcells import group_cells

Vec = dict  # basis index -> ParamPoly


@dataclass
class CellDatum:
    table: AlgebraTable
    cells: dict[str, dict[tuple, Vec]]   # lambda -> (S, T) -> vector
    m_sets: dict[str, list]              # lambda -> index list
    level: dict[str, int]                # poset level (same level = incomparable)

    def lambdas(self) -> list[str]:
        return sorted(self.cells, key=lambda l: (self.level[l], l))

    def size_check(self) -> bool:
        return sum(len(m) ** 2 for m in self.m_sets.values()) == self.table.dim

    def corrupted(self, lam: str | None = None) -> "CellDatum":
        """A copy with one cell element doubled (negative control)."""
        lam = lam or self.lambdas()[0]
        cells = {l: dict(cs) for l, cs in self.cells.items()}
        key = sorted(cells[lam])[0]
        cells[lam][key] = {k: v * ParamPoly.constant(2, self.table.params)
                           for k, v in cells[lam][key].items()}
        return CellDatum(self.table, cells, self.m_sets, self.level)


def _unit(T: AlgebraTable, idx: int, coeff=None) -> Vec:
    return {idx: coeff if coeff is not None else T.one_coeff()}


def build_cell_datum(T: AlgebraTable) -> CellDatum:
    G = T.group
    if isinstance(G, DihedralGroup):
        return _dihedral_datum(T)
    if isinstance(G, H3Group):
        return _h3_datum(T)
    raise ValueError(f"no cell datum construction for {G.name}")


def _group_algebra_cells(T: AlgebraTable) -> tuple[dict, dict]:
    """Group-algebra cells as table vectors (the group block is indices 0..|G|-1)."""
    G = T.group
    field, data = group_cells(G)
    w_inv = [G.inv(w) for w in range(G.order)]
    cells: dict[str, dict[tuple, Vec]] = {}
    m_sets: dict[str, list] = {}
    for cell in data:
        coeffs = cell.coefficients(w_inv)
        name = f"grp:{cell.name}"
        m_sets[name] = list(range(cell.dim))
        cells[name] = {}
        for S in range(cell.dim):
            for Tt in range(cell.dim):
                vec = {w: ParamPoly.constant(c, T.params)
                       for w, c in enumerate(coeffs[S][Tt][w] for w in range(G.order)) if c}
                cells[name][(S, Tt)] = vec
    return cells, m_sets


def _dihedral_datum(T: AlgebraTable) -> CellDatum:
    G: DihedralGroup = T.group
    m = G.m
    hyp = {j: G.i_of_s[G.element("s", j)] for j in range(m)}
    cells, m_sets = _group_algebra_cells(T)
    level = {name: 1 for name in cells}

    def s_e(i: int, j: int) -> Vec:
        return T.normal_form([("g", G.element("s", i)), ("e", hyp[j])])

    if m % 2 == 1:
        name = "LK"
        m_sets[name] = list(range(m))
        cells[name] = {}
        for i in range(m):
            for j in range(m):
                k = (i + j) // 2 if (i + j) % 2 == 0 else (i + j + m) // 2
                cells[name][(i, j)] = s_e(k, j)
        level[name] = 0
    else:
        k = m // 2
        half = ParamPoly.constant(Fraction(1, 2), T.params)
        for parity, name in ((0, "LK0"), (1, "LK1")):
            idxs = [2 * t + parity for t in range(k)]
            m_sets[name] = idxs
            cells[name] = {}
            for a in range(k):
                for b in range(k):
                    i, j = idxs[a], idxs[b]
                    ii, jj = (i - parity) // 2, (j - parity) // 2
                    v1 = s_e(ii + jj + parity, j)
                    v2 = s_e(ii + jj + k + parity, j)
                    vec: Vec = {}
                    for kk, c in list(v1.items()) + list(v2.items()):
                        prev = vec.get(kk)
                        vec[kk] = c * half if prev is None else prev + c * half
                    cells[name][(i, j)] = {kk: v for kk, v in vec.items() if v}
            level[name] = 0
    return CellDatum(T, cells, m_sets, level)


def _h3_datum(T: AlgebraTable) -> CellDatum:
    G: H3Group = T.group
    cells, m_sets = _group_algebra_cells(T)
    level = {name: 2 for name in cells}
    s0, s1, s2 = G.generators
    c = G.longest_center_element()
    h0 = G.i_of_s[s0]
    # J_alpha = 1 +- s2 +- c +- s2 c with the sign pattern of sigma_alpha
    s2c = G.mul(s2, c)
    J_terms = {
        0: [(0, 1), (s2, 1), (s2c, 1), (c, 1)],
        1: [(0, 1), (s2, -1), (c, 1), (s2c, -1)],
        2: [(0, 1), (s2, 1), (s2c, -1), (c, -1)],
        3: [(0, 1), (s2, -1), (s2c, 1), (c, -1)],
    }
    from ..reps import h3_coset_reps

    w_reps = h3_coset_reps(G)
    for alpha in range(4):
        name = f"ind:{alpha}"
        m_sets[name] = list(range(15))
        cells[name] = {}
        for i in range(15):
            for j in range(15):
                vec: Vec = {}
                base = T.normal_form([("e", h0), ("g", G.inv(w_reps[j]))])
                for g, sign in J_terms[alpha]:
                    part = T.act_group(G.mul(w_reps[i], g), base)
                    for k, v in part.items():
                        term = v if sign > 0 else -v
                        prev = vec.get(k)
                        vec[k] = term if prev is None else prev + term
                cells[name][(i, j)] = {k: v for k, v in vec.items() if v}
        level[name] = 1

    # the minimal cell on the perpendicular classes
    classes = perp_classes(G)
    class_hyps = [tuple(sorted(G.i_of_s[s] for s in cls)) for cls in classes]
    name = "perp"
    m_sets[name] = list(range(5))
    cells[name] = {}
    for alpha in range(5):
        ia, ja = class_hyps[alpha][0], class_hyps[alpha][1]
        e_pair = T.normal_form([("e", ia), ("e", ja)])
        for beta in range(5):
            w_ab = next(w for w in range(G.order)
                        if tuple(sorted(G.hyp_action[w][h] for h in class_hyps[alpha])) == class_hyps[beta])
            cells[name][(beta, alpha)] = T.act_group(w_ab, e_pair)
    level[name] = 0
    return CellDatum(T, cells, m_sets, level)


# -- verification -------------------------------------------------------------


@dataclass
class CellReport:
    c1_independent: bool
    c1_counts_match: bool
    c2_ok: bool
    c3_failures: list[dict]
    t_dependent: list[dict]

    @property
    def ok(self) -> bool:
        return (self.c1_independent and self.c1_counts_match and self.c2_ok
                and not self.c3_failures and not self.t_dependent)

    def to_dict(self) -> dict:
        return {
            "C1": {"independent": self.c1_independent, "count_matches_dim": self.c1_counts_match},
            "C2": self.c2_ok,
            "C3": {"failures": self.c3_failures[:20], "t_dependent": self.t_dependent[:20]},
            "ok": self.ok,
        }


def _to_modp(value, p: int, root5: int) -> int:
    if isinstance(value, ParamPoly):
        value = value.constant_value()
    return linalg.nf_to_mod(value, p, root5)


def verify_cellular(D: CellDatum, tau_probe: Fraction = Fraction(5)) -> CellReport:
    T = D.table
    all_cells: list[tuple[str, tuple, Vec]] = []
    for lam in D.lambdas():
        for key in sorted(D.cells[lam]):
            all_cells.append((lam, key, D.cells[lam][key]))

    counts = D.size_check()
    independent = _c1_independent(T, [v for _, _, v in all_cells])

    star = T.star_permutation()
    c2 = True
    for lam, (S, Tt), vec in all_cells:
        starred = {star[k]: v for k, v in vec.items()}
        other = D.cells[lam][(Tt, S)]
        if _sub(starred, other):
            c2 = False
            break

    c3_failures: list[dict] = []
    t_dependent: list[dict] = []
    gens = [("g", g) for g in T.group.generators] + \
           [("e", i) for i in range(T.group.n_hyperplanes)]
    gen_vecs = T.gens_map()

    for lam in D.lambdas():
        lower = [mu for mu in D.cells if D.level[mu] < D.level[lam]]
        lower_support: set[int] = set()
        n_lower = 0
        for mu in lower:
            for vec in D.cells[mu].values():
                lower_support |= set(vec)
                n_lower += 1
        if n_lower != len(lower_support):
            c3_failures.append({"lambda": lam, "reason": "lower ideal is not a coordinate subspace"})
            continue
        M = D.m_sets[lam]
        for Tt in M:
            columns = [D.cells[lam][(S, Tt)] for S in M]
            solver = _SparseSolver(columns, lower_support, T)
            r_by_gen: dict[tuple, list] = {}
            for tok in gens:
                rows = []
                for S in M:
                    v = T.mul_vectors(gen_vecs[tok], D.cells[lam][(S, Tt)])
                    v = {k: c for k, c in v.items() if k not in lower_support}
                    r = solver.solve(v)
                    if r is None:
                        c3_failures.append({"lambda": lam, "T": Tt, "S": S, "generator": tok,
                                            "reason": "not in cell span mod lower ideal"})
                        rows.append(None)
                    else:
                        rows.append(r)
                r_by_gen[tok] = rows
            if Tt == M[0]:
                first_r = r_by_gen
                first_T = Tt
            else:
                for tok in gens:
                    if r_by_gen[tok] != first_r[tok]:
                        t_dependent.append({"lambda": lam, "generator": tok,
                                            "T1": first_T, "T2": Tt})
    return CellReport(independent, counts, c2, c3_failures, t_dependent)


def _c1_independent(T: AlgebraTable, vectors: list[Vec]) -> bool:
    n = T.dim
    if len(vectors) != n:
        return False
    if n <= 150:
        rows = []
        for vec in vectors:
            row = [Fraction(0)] * n
            for k, v in vec.items():
                val = v.constant_value() if isinstance(v, ParamPoly) else v
                row[k] = val
            rows.append(row)
        return linalg.rank(rows) == n
    # modular certificate: full rank mod p implies full rank exactly
    p = linalg.primes_above(10 ** 6, 1, condition=lambda q: q % 5 in (1, 4))[0]
    root5 = linalg.sqrt_mod(5, p)
    import numpy as np

    a = np.zeros((n, n), dtype=np.int64)
    for r, vec in enumerate(vectors):
        for k, v in vec.items():
            a[r, k] = _to_modp(v, p, root5)
    return linalg.rank_mod_p(a, p) == n


def _sub(a: Vec, b: Vec) -> Vec:
    out = dict(a)
    for k, v in b.items():
        cur = out.get(k)
        out[k] = -v if cur is None else cur - v
    return {k: v for k, v in out.items() if v}


class _SparseSolver:
    """Exact solver for r with sum_S r_S C_S = v, all supported off the lower ideal."""

    def __init__(self, columns: list[Vec], lower_support: set[int], T: AlgebraTable):
        support = sorted(set().union(*[set(c) for c in columns]) - lower_support)
        self.support = support
        self.pos = {k: i for i, k in enumerate(support)}
        self.ncols = len(columns)
        one = T.one_coeff()
        zero = one - one
        self.zero = zero
        rows = []
        for k in support:
            rows.append([_as_poly(col.get(k), T) for col in columns])
        # row echelon of [A | I-like bookkeeping]: store transformed rows lazily
        self.A = rows

    def solve(self, v: Vec):
        if any(k not in self.pos for k in v):
            return None
        rhs = [self.zero] * len(self.support)
        for k, val in v.items():
            rhs[self.pos[k]] = val
        sol = linalg.solve(self.A, rhs) if self.A else ([] if not any(v.values()) else None)
        if sol is None:
            return None
        # confirm exactly (solve() checks consistency already)
        return sol


def _as_poly(x, T: AlgebraTable):
    if x is None:
        return T.one_coeff() - T.one_coeff()
    return x


def cell_module(D: CellDatum, lam: str) -> MatrixRep:
    """The left cell module of lambda with the verified (C3) action."""
    T = D.table
    M = D.m_sets[lam]
    Tt = M[0]
    lower_support: set[int] = set()
    for mu in D.cells:
        if D.level[mu] < D.level[lam]:
            for vec in D.cells[mu].values():
                lower_support |= set(vec)
    columns = [D.cells[lam][(S, Tt)] for S in M]
    solver = _SparseSolver(columns, lower_support, T)
    gen_vecs = T.gens_map()
    d = len(M)

    def action(tok) -> SparseMat:
        entries = []
        for col_idx, S in enumerate(M):
            v = T.mul_vectors(gen_vecs[tok], D.cells[lam][(S, Tt)])
            v = {k: c for k, c in v.items() if k not in lower_support}
            r = solver.solve(v)
            if r is None:
                raise ValueError("cell module action escaped the cell span")
            for row_idx, val in enumerate(r):
                if val:
                    entries.append((row_idx, col_idx, val))
        return SparseMat.from_entries(d, entries)

    e_mats = {i: action(("e", i)) for i in range(T.group.n_hyperplanes)}
    cache: dict[int, SparseMat] = {}
    G = T.group

    def rho(w: int) -> SparseMat:
        if w not in cache:
            one = T.one_coeff()
            acc = SparseMat.identity(d, one)
            for gi in G.word_of(w):
                acc = acc * action(("g", G.generators[gi]))
            cache[w] = acc
        return cache[w]

    return MatrixRep(d, G, T.params, e_mats, rho, list(M))
