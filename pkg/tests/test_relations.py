"""Definition-1.1 relation lists, presentations and the universal checker."""
from fractions import Fraction

import pytest

from brauerlab.core.params import standard_params
from brauerlab.core.presentations import dihedral_presentation, coxeter_presentation, cyclotomic_presentation, presentation, brauer_presentation, simply_laced_presentation
from brauerlab.core.relations import MatrixModel, check_relations, defining_relations
from brauerlab.exact import ParamPoly
from brauerlab.groups import CyclotomicGroup, DihedralGroup, SymmetricGroup
from brauerlab.matrices import SparseMat
from brauerlab.reps import lk_rep


def hyp_of(G):
    return {j: G.i_of_s[G.element("s", j)] for j in range(G.m)}


def test_defining_relations_even_dihedral_has_zero_products():
    G = DihedralGroup(6)
    rels = defining_relations(G, standard_params(G))
    names = [r.name for r in rels.relations]
    assert any(n.startswith("(6)") for n in names)
    assert not any(n.startswith("(4)") for n in names)  # no crossing pairs


def test_defining_relations_odd_dihedral_r_sum():
    G = DihedralGroup(5)
    U = standard_params(G)
    rels = defining_relations(G, U)
    h = hyp_of(G)
    # e_0 e_2 = mu s_1 e_2 appears as a (5) relation with a single term
    rel = next(r for r in rels.relations if r.name == f"(5)L e_{h[0]} e_{h[2]}")
    assert len(rel.rhs) == 1
    coeff, word = rel.rhs[0]
    assert coeff == ParamPoly.constant(1, U.vars)
    assert word == (("g", G.element("s", 1)), ("e", h[2]))


def test_defining_relations_h3_crossing_pairs(h3):
    rels = defining_relations(h3, standard_params(h3))
    crossing = [r for r in rels.relations if r.name.startswith("(4)")]
    assert len(crossing) == 15  # 5 classes x 3 unordered pairs


def test_check_relations_negative_control():
    G = DihedralGroup(5)
    U = standard_params(G)
    rep = lk_rep(G, U)
    tau_plus_1 = U.tau(0) + U.const(1)

    def assign(tok):
        m = rep.matrix(tok)
        if tok[0] == "e":  # diagonal bumped to tau + 1
            bump = SparseMat.from_entries(m.n, [(tok[1], tok[1], U.const(1))])
            return m + bump
        return m

    rels = defining_relations(G, U)
    two = [r for r in rels.relations if r.name.startswith("(2)")]
    from brauerlab.core.relations import RelationList
    report = check_relations(MatrixModel(rep.dim, assign), RelationList(two, U.vars), rep.one())
    assert not report.ok and len(report.failures) == len(two)


def test_dihedral_even_coefficient_instance():
    rels = dihedral_presentation(6)
    # E_0 [S_1 S_0 S_1] E_0 = (mu_2 + mu_5) E_0, i.e. mu0 + mu1 by parity
    rel = next(r for r in rels.relations if r.name == "5) E0 w2 E0")
    vars = rels.vars
    assert rel.rhs[0][0] == ParamPoly.variable("mu0", vars) + ParamPoly.variable("mu1", vars)
    assert rel.lhs[0][1] == (("E", 0), ("S", 1), ("S", 0), ("S", 1), ("E", 0))


def test_cyclotomic_presentation_coefficients():
    rels = cyclotomic_presentation(3, 2)
    r13 = next(r for r in rels.relations if r.name.startswith("13)"))
    vars = rels.vars
    assert r13.rhs[0][0] == ParamPoly.constant(2, vars) * ParamPoly.variable("mu", vars)
    r12 = next(r for r in rels.relations if r.name == "12) E1 S0^1 E1")
    assert r12.rhs[0][0] == ParamPoly.variable("mu1", vars)
    r12_0 = next(r for r in rels.relations if r.name == "12) E1 S0^0 E1")
    assert r12_0.rhs[0][0] == ParamPoly.variable("tau1", vars)


def _canonical(rels):
    out = set()
    for r in rels.relations:
        side = lambda s: tuple(sorted((repr(c), w) for c, w in s))
        out.add((side(r.lhs), side(r.rhs)))
    return out


def test_coxeter_presentation_reduces_to_simply_laced():
    d82 = _canonical(coxeter_presentation(((1, 3), (3, 1))))
    t2 = _canonical(simply_laced_presentation({frozenset((0, 1))}, 2))
    missing = t2 - d82
    assert not missing, missing
    # the extras are only the mirrored absorption relations E_i S_i = E_i
    extras = d82 - t2
    for lhs, rhs in extras:
        words = [w for _, w in lhs] + [w for _, w in rhs]
        assert any(len(w) == 2 and w[0][0] == "E" for w in words), (lhs, rhs)


def test_coxeter_presentation_dispatch_and_validation():
    with pytest.raises(ValueError):
        presentation("dihedral_odd", m=6)
    rels = presentation("dihedral_even", m=6)
    assert any(r.name.startswith("9)") for r in rels.relations)
    rels = presentation("cyclo_diagram", m=2, n=2)
    assert rels.vars == ("delta0", "delta1")
    with pytest.raises(ValueError):
        presentation("nope")


def test_coxeter_presentation_h3_relations_hold_in_lk(h3):
    U = standard_params(h3)
    rep = lk_rep(h3, U)
    rels = coxeter_presentation(((1, 5, 2), (5, 1, 3), (2, 3, 1)), U)

    def assign(tok):
        kind, i = tok
        if kind == "S":
            return rep.matrix(("g", h3.generators[i]))
        return rep.matrix(("e", h3.i_of_s[h3.generators[i]]))

    report = check_relations(MatrixModel(rep.dim, assign), rels, rep.one())
    assert report.ok, report.failures[:5]


def test_dihedral_presentation_relations_hold_in_lk():
    from brauerlab.core.relations import Relation, RelationList

    for m in (5, 6):
        G = DihedralGroup(m)
        U = standard_params(G)
        rep = lk_rep(G, U)
        h = hyp_of(G)
        rels = dihedral_presentation(m)
        if m % 2 == 1:  # normalize mu to 1 to match the one-class parameter set
            sub = {"mu": ParamPoly.constant(1, U.vars), "tau": ParamPoly.variable("tau", U.vars)}
            rels = RelationList(
                [Relation(r.name, [(c.substitute(sub), w) for c, w in r.lhs],
                          [(c.substitute(sub), w) for c, w in r.rhs]) for r in rels.relations],
                U.vars)

        def assign(tok):
            kind, i = tok
            if kind == "S":
                return rep.matrix(("g", G.element("s", i)))
            return rep.matrix(("e", h[i]))

        report = check_relations(MatrixModel(rep.dim, assign), rels, rep.one())
        assert report.ok, (m, report.failures[:5])


def test_cyclotomic_presentation_relations_hold_in_lk_with_e0():
    # model with E_0 nonzero: the LK representation of the Definition-1.1 algebra
    from brauerlab.cyclocompare import _mu_one_params, _lk_canonical_assign, lk_delta_identification
    from brauerlab.core.relations import Relation, RelationList

    G = CyclotomicGroup(2, 2)
    U = _mu_one_params(G)
    rep = lk_rep(G, U)
    rels = cyclotomic_presentation(2, 2)
    # identify the canonical mu_a with the Definition-1.1 values: relation 12's
    # coefficient must become the alpha entry, and 13) becomes m*mu, so only
    # the relations consistent across both presentations are asserted here
    keep = [r for r in rels.relations
            if not r.name.startswith(("12)", "13)"))]
    sub = {"mu": ParamPoly.constant(1, U.vars)}
    for v in rels.vars:
        if v not in sub:
            sub[v] = ParamPoly.variable(v, U.vars)
    kept = RelationList(
        [Relation(r.name, [(c.substitute(sub), w) for c, w in r.lhs],
                  [(c.substitute(sub), w) for c, w in r.rhs]) for r in keep],
        U.vars)
    report = check_relations(MatrixModel(rep.dim, _lk_canonical_assign(G, rep)), kept, rep.one())
    assert report.ok, report.failures[:5]
    # and the Definition-1.1 values of the clashing coefficients are documented
    ident = lk_delta_identification(G, U)
    assert repr(ident["delta1"]) == "2*mu1"
