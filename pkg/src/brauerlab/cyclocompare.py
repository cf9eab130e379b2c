"""
The G(m,1,n) comparison layer between the canonical presentation and the
cyclotomic Brauer diagram algebra.

Phi sends S_0 to t_1, S_i to s_i, E_i to e_i and E_0 to 0; its relation
suite runs inside the diagram algebra with the identification delta_a = mu_a
(1 <= a < m) and delta_0 = tau_1. Psi sends the diagram generators back
(t_i to S_{i-1}...S_1 S_0 S_1...S_{i-1}); its relation suite runs in two
models: the diagram algebra composed with Phi, and the Lawrence-Krammer
representation of the reflection algebra. In the LK model the loop
parameter identification forced by the defining relations is

    delta_a = mu_a + mu_{m-a} + #{b : 2b = a mod m} * mu   (mu = 1),

not the bare mu_a of the canonical presentation -- the two presentations
normalize the parameters differently; the report carries the map used.
"""
from __future__ import annotations

from fractions import Fraction

from .core.labels import equivariant_labels
from .core.params import ParamSet, standard_params
from .core.presentations import cyclo_diagram_presentation, cyclotomic_presentation
from .core.relations import RelationList, Relation, VectorModel, check_relations, MatrixModel
from .diagrams import CycloTable
from .exact import ParamPoly
from .groups import CyclotomicGroup
from .matrices import SparseMat
from .reps import lk_rep

PHI = "phi"


def _phi_assign(table: CycloTable):
    one = ParamPoly.constant(1, table.params)
    assign = {}
    n = table.n
    assign[("S", 0)] = {table.gens[("t", 1)]: one}
    for i in range(1, n):
        assign[("S", i)] = {table.gens[("s", i)]: one}
        assign[("E", i)] = {table.gens[("e", i)]: one}
    assign[("E", 0)] = {}
    return assign


def _delta_substitution(rels: RelationList, table: CycloTable) -> RelationList:
    """Map the presentation coefficients mu_a -> delta_a, tau_1 -> delta_0, mu -> 1."""
    sub = {}
    for v in rels.vars:
        if v == "mu":
            sub[v] = ParamPoly.constant(1, table.params)
        elif v.startswith("mu"):
            sub[v] = ParamPoly.variable(f"delta{int(v[2:]) % table.m}", table.params)
        elif v == "tau1":
            sub[v] = ParamPoly.variable("delta0", table.params)
        else:  # tau0 multiplies only E_0 words, which die under Phi
            sub[v] = ParamPoly.constant(0, table.params)
    out = []
    for r in rels.relations:
        out.append(Relation(
            r.name,
            [(c.substitute(sub), w) for c, w in r.lhs],
            [(c.substitute(sub), w) for c, w in r.rhs],
        ))
    return RelationList(out, table.params)


def phi_images(m: int, n: int) -> dict:
    """Validate all canonical-presentation relations on the Phi images."""
    table = CycloTable(m, n)
    rels = _delta_substitution(cyclotomic_presentation(m, n), table)
    model = VectorModel(table, _phi_assign(table))
    report = check_relations(model, rels)
    if not report.ok:
        raise AssertionError(f"Phi relation suite failed: {report.failures[:5]}")
    return {"relations_checked": report.total, "ok": report.ok,
            "identification": {"delta_a": "mu_a", "delta_0": "tau_1", "mu": 1}}


def _psi_word(tok) -> tuple:
    """Psi on a diagram generator token, as a word in the canonical tokens."""
    kind, j = tok
    if kind == "s":
        return (("S", j),)
    if kind == "e":
        return (("E", j),)
    if kind == "t":
        w = [("S", k) for k in range(j - 1, 0, -1)]
        return tuple(w) + (("S", 0),) + tuple(reversed(w))
    raise KeyError(tok)


def psi_images(m: int, n: int) -> dict:
    """
    Phi o Psi = id on the diagram generators, and the full cyclotomic
    relation suite after Psi substitution, in both models.
    """
    table = CycloTable(m, n)
    phi = _phi_assign(table)
    one = ParamPoly.constant(1, table.params)

    def phi_psi(tok):
        vec = None
        for t in _psi_word(tok):
            tv = phi[t]
            if vec is None:
                vec = tv
            else:
                out = {}
                for a, ca in vec.items():
                    for b, cb in tv.items():
                        for c, cc in table.product(a, b).items():
                            out[c] = out.get(c, ParamPoly.constant(0, table.params)) + ca * cb * cc
                vec = {k: v for k, v in out.items() if v}
        return vec

    gens = [("s", i) for i in range(1, n)] + [("e", i) for i in range(1, n)] + \
           [("t", j) for j in range(1, n + 1)]
    identity_on_gens = all(phi_psi(g) == {table.gens[g]: one} for g in gens)

    # model (a): the diagram algebra through Phi
    rels21 = cyclo_diagram_presentation(m, n)
    subst = [Relation(r.name,
                      [(c, sum((_psi_word(t) for t in w), ())) for c, w in r.lhs],
                      [(c, sum((_psi_word(t) for t in w), ())) for c, w in r.rhs])
             for r in rels21.relations]
    rels_sub = RelationList(subst, rels21.vars)
    model_a = check_relations(VectorModel(table, phi), _delta_rename(rels_sub, table))

    # model (b): the LK representation of the reflection algebra, mu = 1
    G = CyclotomicGroup(m, n)
    U = _mu_one_params(G)
    rep = lk_rep(G, U)
    lk_assign = _lk_canonical_assign(G, rep)
    delta_map = lk_delta_identification(G, U)
    rels_b = _apply_delta_map(rels_sub, delta_map, U.vars)
    model_b = check_relations(MatrixModel(rep.dim, lk_assign), rels_b, rep.one())

    e0_nonzero = rep.e_mats[G.hyperplane("coord", 0)].nnz() > 0
    return {
        "phi_psi_identity_on_generators": identity_on_gens,
        "model_diagram": model_a.to_dict(),
        "model_lk": model_b.to_dict(),
        "lk_delta_identification": {k: repr(v) for k, v in delta_map.items()},
        "e0_nonzero_in_lk": e0_nonzero,
        "ok": identity_on_gens and model_a.ok and model_b.ok and e0_nonzero,
    }


def _delta_rename(rels: RelationList, table: CycloTable) -> RelationList:
    if rels.vars == table.params:
        return rels
    sub = {v: ParamPoly.variable(v, table.params) for v in rels.vars}
    return RelationList(
        [Relation(r.name, [(c.substitute(sub), w) for c, w in r.lhs],
                  [(c.substitute(sub), w) for c, w in r.rhs]) for r in rels.relations],
        table.params)


def _mu_one_params(G: CyclotomicGroup) -> ParamSet:
    U = standard_params(G)
    mu_by_class = []
    for ci, poly in enumerate(U.mu_by_class):
        s = G.refl_classes[ci][0]
        if G.hyperplane_label[G.i_of_s[s]][0] == "pair":
            mu_by_class.append(U.const(1))
        else:
            mu_by_class.append(poly)
    return ParamSet(G, U.vars, mu_by_class, U.tau_by_orbit)


def _lk_canonical_assign(G: CyclotomicGroup, rep):
    def assign(tok):
        kind, i = tok
        if kind == "S":
            return rep.matrix(("g", G.generators[i]))
        if kind == "E":
            if i == 0:
                return rep.matrix(("e", G.hyperplane("coord", 0)))
            return rep.matrix(("e", G.hyperplane("pair", i - 1, i, 0)))
        raise KeyError(tok)
    return assign


def lk_delta_identification(G: CyclotomicGroup, U: ParamSet) -> dict[str, ParamPoly]:
    """
    delta_a as forced by the defining relations in the LK model: the alpha entry
    between H_{12;0} and H_{12;a}, i.e. the sum of mu_s over reflections
    carrying one to the other (with delta_0 = tau_1).
    """
    m = G.m
    out = {"delta0": U.tau(G.hyperplane("pair", 0, 1, 0))}
    h0 = G.hyperplane("pair", 0, 1, 0)
    for a in range(1, m):
        ha = G.hyperplane("pair", 0, 1, a)
        acc = None
        for s in G.r_set(h0, ha):
            acc = U.mu(s) if acc is None else acc + U.mu(s)
        out[f"delta{a}"] = acc if acc is not None else U.const(0)
    return out


def _apply_delta_map(rels: RelationList, delta_map: dict[str, ParamPoly], vars) -> RelationList:
    sub = {v: delta_map[v] for v in rels.vars}
    return RelationList(
        [Relation(r.name, [(c.substitute(sub), w) for c, w in r.lhs],
                  [(c.substitute(sub), w) for c, w in r.rhs]) for r in rels.relations],
        vars)


def f_elements(m: int, n: int) -> dict:
    """
    The equivariant conjugates F of {E_0, E_i}: per hyperplane a minimal
    transporting element; well-definedness is certified in the LK model by
    checking every transporter gives the same matrix.
    """
    G = CyclotomicGroup(m, n)
    labels = equivariant_labels(G, "g_m1n")
    U = _mu_one_params(G)
    rep = lk_rep(G, U)
    base_hyp = labels.base_hyperplane
    out = {}
    for hyp, (b, w) in labels.label_of_hyperplane.items():
        target = rep.matrix(("g", w)) * rep.e_mats[base_hyp[b]] * rep.matrix(("g", G.inv(w)))
        for u in range(G.order):
            if G.hyp_action[u][base_hyp[b]] == hyp:
                other = rep.matrix(("g", u)) * rep.e_mats[base_hyp[b]] * rep.matrix(("g", G.inv(u)))
                if (target - other).nnz():
                    raise AssertionError(f"F is not well-defined at hyperplane {hyp}")
        out[hyp] = {"base": b, "word": w, "label": G.hyperplane_label[hyp]}
    # F(H_1) = E_0 and F(H_{i,i+1;0}) = E_i
    assert out[G.hyperplane("coord", 0)]["base"] == 0
    for i in range(1, n):
        assert out[G.hyperplane("pair", i - 1, i, 0)]["base"] == i
    return out
