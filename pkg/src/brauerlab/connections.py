"""
Formal KZ-type connections sum X_i omega_i over a reflection arrangement,
with exact flatness (commutator conditions at every codimension-2 edge) and
G-invariance (conjugation covariance) checks. The overall scale kappa is
irrelevant to both checks and fixed to 1.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .core.params import ParamSet, standard_params
from .core.table import AlgebraTable, NormalWord
from .exact import ParamPoly, linalg
from .groups import ReflectionGroup
from .matrices import SparseMat
from .reps import MatrixRep


@dataclass
class ConnectionFamily:
    group: ReflectionGroup
    hyperplanes: list[int]                  # arrangement subset, by index
    edges: list[tuple[int, ...]]            # codim-2 edges: tuples of member hyperplanes
    ops: dict[int, SparseMat]               # X_i per hyperplane
    params: tuple[str, ...]

    @property
    def dim(self) -> int:
        return next(iter(self.ops.values())).n

    def scaled(self, c) -> "ConnectionFamily":
        coeff = ParamPoly.constant(c, self.params)
        return ConnectionFamily(self.group, self.hyperplanes, self.edges,
                                {i: m.scale(coeff) for i, m in self.ops.items()}, self.params)

    def perturbed(self, i: int, row: int, col: int, delta=1) -> "ConnectionFamily":
        """Add delta to one entry of X_i (negative control)."""
        ops = dict(self.ops)
        bump = SparseMat.from_entries(self.dim, [(row, col, ParamPoly.constant(delta, self.params))])
        ops[i] = ops[i] + bump
        return ConnectionFamily(self.group, self.hyperplanes, self.edges, ops, self.params)

    def swapped(self, i: int, j: int) -> "ConnectionFamily":
        ops = dict(self.ops)
        ops[i], ops[j] = ops[j], ops[i]
        return ConnectionFamily(self.group, self.hyperplanes, self.edges, ops, self.params)


def group_regular_rep(G: ReflectionGroup, U: ParamSet) -> MatrixRep:
    """The left regular representation of the group algebra CG."""
    one = U.one()

    def rho(w: int) -> SparseMat:
        return SparseMat.from_entries(G.order, ((G.mul(w, x), x, one) for x in range(G.order)))

    return MatrixRep(G.order, G, U.vars, {}, rho, list(range(G.order)))


def table_regular_rep(T: AlgebraTable) -> MatrixRep:
    """The left regular representation of an algebra table."""
    G = T.group

    def col_e(i):
        def col(b):
            out: dict[int, object] = {}
            for k, v in T.e_action[i][b]:  # duplicate targets must accumulate
                prev = out.get(k)
                out[k] = v if prev is None else prev + v
            return out
        return col

    e_mats = {i: SparseMat.from_columns(T.dim, col_e(i)) for i in range(G.n_hyperplanes)}
    cache: dict[int, SparseMat] = {}

    def rho(w: int) -> SparseMat:
        if w not in cache:
            one = T.one_coeff()
            entries = []
            for b, nw in enumerate(T.basis):
                entries.append((T._nw(G.mul(w, nw.w), nw.tail), b, one))
            cache[w] = SparseMat.from_entries(T.dim, entries)
        return cache[w]

    return MatrixRep(T.dim, G, T.params, e_mats, rho, list(range(T.dim)))


def assemble(kind: str, G: ReflectionGroup, U: ParamSet | None, rep: MatrixRep) -> ConnectionFamily:
    """
    kind 'bmr': X_i = sum of mu_s rho(s) over reflections with i(s) = i;
    kind 'bgu': the same minus rho(e_i); kind 'lk': the same minus p_i in an
    LK representation (identical to 'bgu' evaluated there).
    """
    if U is None:
        U = standard_params(G)
    nP = G.n_hyperplanes
    ops: dict[int, SparseMat] = {}
    for i in range(nP):
        X = SparseMat(rep.dim)
        for s in G.reflections_of_hyperplane[i]:
            X = X + rep.matrix(("g", s)).scale(U.mu(s))
        if kind in ("bgu", "lk"):
            X = X - rep.matrix(("e", i))
        elif kind != "bmr":
            raise ValueError(f"unknown connection kind {kind!r}")
        ops[i] = X
    edges = [tuple(e) for e in G.edge_report().codim2_edges]
    return ConnectionFamily(G, list(range(nP)), edges, ops, U.vars)


@dataclass
class FlatnessReport:
    edges_checked: int
    violations: list[dict]

    @property
    def flat(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {"edges_checked": self.edges_checked, "flat": self.flat,
                "violations": self.violations}


def check_flat(C: ConnectionFamily, jobs: int = 1) -> FlatnessReport:
    """
    Kohno's criterion: [X_i, sum over j in I_L of X_j] = 0 for every
    codimension-2 edge L and every i in I_L.
    """
    tasks = []
    for e_idx, edge in enumerate(C.edges):
        S = SparseMat(C.dim)
        for j in edge:
            S = S + C.ops[j]
        for i in edge:
            tasks.append((e_idx, edge, i, S))

    def run(task):
        e_idx, edge, i, S = task
        comm = C.ops[i].commutator(S)
        nz = comm.nnz()
        return None if nz == 0 else {"edge": e_idx, "members": list(edge), "i": i,
                                     "nonzero_entries": nz}

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(run, tasks))
    else:
        results = [run(t) for t in tasks]
    return FlatnessReport(len(C.edges), [r for r in results if r is not None])


def check_invariant(C: ConnectionFamily, rep: MatrixRep) -> FlatnessReport:
    """rho(w) X_i rho(w)^-1 = X_{w(i)} for every generator w."""
    G = C.group
    violations = []
    local = {h: k for k, h in enumerate(C.hyperplanes)}
    for g in G.generators:
        R = rep.matrix(("g", g))
        Rinv = rep.matrix(("g", G.inv(g)))
        for h in C.hyperplanes:
            img = G.hyp_action[g][h]
            if img not in local:
                violations.append({"generator": g, "i": h, "nonzero_entries": -1,
                                   "reason": "image hyperplane outside family"})
                continue
            diff = R * C.ops[h] * Rinv - C.ops[img]
            nz = diff.nnz()
            if nz:
                violations.append({"generator": g, "i": h, "nonzero_entries": nz})
    return FlatnessReport(len(C.hyperplanes), violations)


def restrict(C: ConnectionFamily, keep: list[int]) -> tuple[ConnectionFamily, FlatnessReport]:
    """
    Restrict to the hyperplanes containing a common subspace: keep must be
    closed (every hyperplane containing the intersection is in keep); the
    sub-family's flatness is re-checked and returned alongside.
    """
    G = C.group
    forms = [list(G.hyperplanes[h]) for h in keep]
    closure = [k for k in C.hyperplanes
               if linalg.rank(forms + [list(G.hyperplanes[k])]) == linalg.rank(forms)]
    if sorted(closure) != sorted(keep):
        raise ValueError(f"keep set is not closed: closure adds {set(closure) - set(keep)}")
    sub_edges = _edges_within(G, keep)
    sub = ConnectionFamily(G, list(keep), sub_edges, {i: C.ops[i] for i in keep}, C.params)
    return sub, check_flat(sub)


def _edges_within(G: ReflectionGroup, hyps: list[int]) -> list[tuple[int, ...]]:
    forms = {h: list(G.hyperplanes[h]) for h in hyps}
    edges: dict[tuple[int, ...], None] = {}
    for a_idx, i in enumerate(hyps):
        for j in hyps[a_idx + 1:]:
            members = tuple(k for k in hyps
                            if k in (i, j) or linalg.rank([forms[i], forms[j], forms[k]]) == 2)
            edges.setdefault(members, None)
    return sorted(edges)
