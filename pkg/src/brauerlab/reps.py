"""
Explicit matrix representations: the generalized Lawrence-Krammer
representation on the hyperplane-indexed space V_G for every supported
group, and the five H3 representations with their determinant criteria.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exact import ParamPoly
from .exact.linalg import det as exact_det
from .groups import H3Group, ReflectionGroup, perp_classes
from .matrices import SparseMat
from .core.params import ParamSet, standard_params


@dataclass
class MatrixRep:
    """An assignment of square matrices to the tokens ('g', w) and ('e', i)."""

    dim: int
    group: ReflectionGroup
    params: tuple[str, ...]
    e_mats: dict[int, SparseMat]
    group_mat: object  # callable w -> SparseMat
    basis_labels: list = field(default_factory=list)

    def matrix(self, token) -> SparseMat:
        if token[0] == "g":
            return self.group_mat(token[1])
        if token[0] == "e":
            return self.e_mats[token[1]]
        raise KeyError(token)

    def one(self) -> ParamPoly:
        return ParamPoly.constant(1, self.params)


def lk_rep(G: ReflectionGroup, U: ParamSet | None = None) -> MatrixRep:
    """
    iota(w) permutes the basis v_i by the hyperplane action; e_i acts by the
    projector p_i with p_i v_i = tau_i v_i and p_i v_j = alpha_{i,j} v_i,
    alpha_{i,j} the sum of mu_s over the reflections carrying H_j to H_i.
    """
    if U is None:
        U = standard_params(G)
    nP = G.n_hyperplanes
    one = U.one()

    def iota(w: int) -> SparseMat:
        return SparseMat.from_entries(nP, ((G.hyp_action[w][j], j, one) for j in range(nP)))

    e_mats: dict[int, SparseMat] = {}
    for i in range(nP):
        entries = [(i, i, U.tau(i))]
        for j in range(nP):
            if j == i:
                continue
            alpha = None
            for s in G.r_set(i, j):
                alpha = U.mu(s) if alpha is None else alpha + U.mu(s)
            if alpha:
                entries.append((i, j, alpha))
        e_mats[i] = SparseMat.from_entries(nP, entries)
    labels = list(range(nP))
    return MatrixRep(nP, G, U.vars, e_mats, iota, labels)


def lk_blocks(rep: MatrixRep, G: ReflectionGroup) -> list[dict]:
    """
    Split the LK representation along hyperplane orbits; each block is
    verified invariant under every generator image and every e_i.
    """
    blocks = []
    mats = [rep.matrix(("g", g)) for g in G.generators]
    mats += [rep.e_mats[i] for i in range(G.n_hyperplanes)]
    for orbit in G.orbits:
        oset = set(orbit)
        for m in mats:
            for r, c, v in m.entries():
                if c in oset and r not in oset and v:
                    raise AssertionError("orbit block leaks under the action")
        blocks.append({"hyperplanes": list(orbit), "dim": len(orbit)})
    return blocks


# -- H3 representations ------------------------------------------------------


def h3_sigma_characters(G: H3Group) -> tuple[dict[int, tuple[int, int]], list[int]]:
    """
    The order-8 stabilizer G_0 = <s_0, s_2, c> of the conjugation action on
    reflections at s_0, with each element's (sign on s_2, sign on c) data.
    """
    s0, s1, s2 = G.generators
    c = G.longest_center_element()
    members: dict[int, tuple[int, int]] = {}
    for a in (0, 1):
        for b in (0, 1):
            for d in (0, 1):
                w = 0
                for g, k in ((s0, a), (s2, b), (c, d)):
                    for _ in range(k):
                        w = G.mul(w, g)
                members[w] = (b, d)
    assert len(members) == 8
    return members, [s0, s2, c]


SIGMA_SIGNS = {0: (1, 1), 1: (-1, 1), 2: (1, -1), 3: (-1, -1)}


def h3_coset_reps(G: H3Group) -> list[int]:
    """Minimal w_i with w_i s_0 w_i^{-1} = s_i (so w_0 = id), per reflection."""
    s0 = G.generators[0]
    h0 = G.i_of_s[s0]
    reps = [None] * G.n_hyperplanes
    for w in range(G.order):
        i = G.hyp_action[w][h0]
        if reps[i] is None:
            reps[i] = w
    return reps


def h3_induced_rep(G: H3Group, alpha: int, U: ParamSet | None = None) -> MatrixRep:
    """
    The 15-dimensional extension of Ind_{G_0}^{G}(sigma_alpha): the group
    permutes the lines indexed by reflections with the sigma_alpha cocycle,
    e_i projects onto line i with entries sigma_alpha(w_i^-1 s_k w_j) on the
    non-perpendicular pairs (s_k the unique reflection with s_k s_j s_k = s_i).
    """
    if U is None:
        U = standard_params(G)
    if alpha not in SIGMA_SIGNS:
        raise ValueError("alpha must be one of 0..3")
    members, _ = h3_sigma_characters(G)
    sgn2, sgnc = SIGMA_SIGNS[alpha]

    def sigma(w: int) -> int:
        if w not in members:
            raise AssertionError("cocycle element escaped G_0")
        b, d = members[w]
        return (sgn2 ** b) * (sgnc ** d)

    nP = G.n_hyperplanes
    w_reps = h3_coset_reps(G)
    one = U.one()
    er = G.edge_report()

    def rho(w: int) -> SparseMat:
        entries = []
        for i in range(nP):
            k = G.hyp_action[w][i]
            u = G.mul(G.mul(G.inv(w_reps[k]), w), w_reps[i])
            val = sigma(u)
            entries.append((k, i, one if val == 1 else -one))
        return SparseMat.from_entries(nP, entries)

    e_mats: dict[int, SparseMat] = {}
    for i in range(nP):
        entries = [(i, i, U.tau(i))]
        for j in range(nP):
            if j == i or er.is_crossing(i, j):
                continue
            (sk,) = G.r_set(i, j)
            u = G.mul(G.mul(G.inv(w_reps[i]), sk), w_reps[j])
            val = sigma(u)
            entries.append((i, j, one if val == 1 else -one))
        e_mats[i] = SparseMat.from_entries(nP, entries)
    return MatrixRep(nP, G, U.vars, e_mats, rho, list(range(nP)))


def h3_rho4(G: H3Group, U: ParamSet | None = None) -> MatrixRep:
    """
    The 5-dimensional representation on the perpendicular classes: w permutes
    the classes, e_i scales its own class line by tau and sends every other
    basis vector to the class line of s_i.
    """
    if U is None:
        U = standard_params(G)
    classes = perp_classes(G)
    hyp_class = {}
    for ci, cls in enumerate(classes):
        for s in cls:
            hyp_class[G.i_of_s[s]] = ci
    one = U.one()

    def class_image(w: int, ci: int) -> int:
        return hyp_class[G.hyp_action[w][G.i_of_s[classes[ci][0]]]]

    def rho(w: int) -> SparseMat:
        return SparseMat.from_entries(5, ((class_image(w, ci), ci, one) for ci in range(5)))

    e_mats: dict[int, SparseMat] = {}
    for i in range(G.n_hyperplanes):
        ci = hyp_class[i]
        entries = []
        for p in range(5):
            if p == ci:
                entries.append((ci, ci, U.tau(i)))
            else:
                entries.append((ci, p, one))
        e_mats[i] = SparseMat.from_entries(5, entries)
    return MatrixRep(5, G, U.vars, e_mats, rho, [tuple(c) for c in classes])


# -- M-matrices and determinant criteria --------------------------------------


def m_matrix(rep: MatrixRep, labels: list[int] | None = None) -> tuple[list[list[ParamPoly]], ParamPoly]:
    """
    Extract M with rho(e_i)(v_j) = m_{i,j} v_{label(i)} and its exact
    determinant. Every rho(e_i) must be supported on the single row label(i).
    """
    n = rep.dim
    zero = ParamPoly.constant(0, rep.params)
    if labels is None:
        labels = list(range(len(rep.e_mats)))
    rows_seen = {}
    M = [[zero] * n for _ in range(n)]
    for k, i in enumerate(rep.e_mats):
        mat = rep.e_mats[i]
        target = None
        for r, c, v in mat.entries():
            if v:
                if target is None:
                    target = r
                elif r != target:
                    raise ValueError(f"e_{i} image is not a line (rank > 1)")
        if target in rows_seen:
            continue  # several e_i share a line (rho_4); one row each
        rows_seen[target] = i
        for c in range(n):
            M[target][c] = mat.entry(target, c) or zero
    detp = det_interpolated(M, "tau")
    return M, detp


def det_interpolated(M: list[list[ParamPoly]], var: str) -> ParamPoly:
    """Exact determinant of a matrix of polynomials in one variable, by
    evaluation at deg+1 points and Lagrange interpolation."""
    n = len(M)
    vars_ = M[0][0].vars
    deg = n * max(max(p.degree() for p in row) for row in M)
    points = [Fraction(k) for k in range(deg + 1)]
    values = []
    for x in points:
        dense = [[entry.eval({var: x}) for entry in row] for row in M]
        values.append(exact_det(dense))
    # Lagrange interpolation to a dense coefficient list
    coeffs = [Fraction(0)] * (deg + 1)
    for k, xk in enumerate(points):
        num = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(points):
            if j == k:
                continue
            num = _poly_mul_lin(num, -xj, Fraction(1))
            denom *= xk - xj
        scale = values[k] / denom
        for d, c in enumerate(num):
            coeffs[d] += scale * c
    i = vars_.index(var)
    terms = {}
    for d, c in enumerate(coeffs):
        if c:
            e = [0] * len(vars_)
            e[i] = d
            terms[tuple(e)] = c
    return ParamPoly(vars_, terms)


def _poly_mul_lin(poly: list[Fraction], a: Fraction, b: Fraction) -> list[Fraction]:
    """poly * (a + b x) as dense coefficient lists."""
    out = [Fraction(0)] * (len(poly) + 1)
    for i, c in enumerate(poly):
        out[i] += c * a
        out[i + 1] += c * b
    return out


def generated_algebra_dimension(mats: list[SparseMat], n: int, p: int, assignment) -> int:
    """
    Dimension of the matrix algebra generated by the given matrices after
    evaluating their entries at the assignment, computed over GF(p). Used as
    the irreducibility surrogate (full n^2 span <=> irreducible + split).
    """
    import numpy as np

    def to_num(m: SparseMat):
        a = np.zeros((n, n), dtype=np.int64)
        for r, c, val in m.entries():
            x = Fraction(val.eval(assignment) if isinstance(val, ParamPoly) else val)
            a[r, c] = x.numerator * pow(x.denominator, -1, p) % p
        return a

    gens = [to_num(m) for m in mats]
    # incremental row-echelon over GF(p) on flattened matrices
    pivots: dict[int, np.ndarray] = {}

    def reduce_add(vec) -> bool:
        v = vec % p
        for col in sorted(pivots):
            if v[col]:
                v = (v - v[col] * pivots[col]) % p
        nz = np.nonzero(v)[0]
        if nz.size == 0:
            return False
        c = int(nz[0])
        pivots[c] = v * pow(int(v[c]), -1, p) % p
        return True

    frontier = [np.eye(n, dtype=np.int64)]
    reduce_add(frontier[0].reshape(-1))
    basis_mats = []
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                prod = a @ g % p
                if reduce_add(prod.reshape(-1)):
                    nxt.append(prod)
        basis_mats.extend(nxt)
        frontier = nxt
    return len(pivots)
