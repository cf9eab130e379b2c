"""Lawrence-Krammer and H3 representations with their determinant criteria."""
from fractions import Fraction

import pytest

from brauerlab.core.params import standard_params
from brauerlab.core.relations import MatrixModel, check_relations, defining_relations
from brauerlab.exact import ParamPoly
from brauerlab.groups import CyclotomicGroup, DihedralGroup, SymmetricGroup
from brauerlab.reps import (
    SIGMA_SIGNS,
    generated_algebra_dimension,
    h3_induced_rep,
    h3_rho4,
    lk_blocks,
    lk_rep,
    m_matrix,
)


def lk_model(rep):
    return MatrixModel(rep.dim, lambda tok: rep.matrix(tok))


@pytest.mark.parametrize("spec", ["dihedral:5", "dihedral:6", "a:2", "a:3",
                                  "g:2,1,2", "g:3,1,2", "g:2,1,3"])
def test_lk_satisfies_defining_relations(spec):
    from brauerlab.groups import group_by_spec

    G = group_by_spec(spec)
    U = standard_params(G)
    rep = lk_rep(G, U)
    report = check_relations(lk_model(rep), defining_relations(G, U), rep.one())
    assert report.ok, (spec, report.failures[:5])


def test_lk_h3_entries(h3):
    U = standard_params(h3)
    rep = lk_rep(h3, U)
    report = check_relations(lk_model(rep), defining_relations(h3, U), rep.one())
    assert report.ok
    one = ParamPoly.constant(1, U.vars)
    tau = ParamPoly.variable("tau", U.vars)
    for i, m in rep.e_mats.items():
        rows = {r for r, c, v in m.entries()}
        assert rows == {i}  # rank one, image the line of v_i
        for r, c, v in m.entries():
            assert v == (tau if c == i else one)


def test_lk_a2_alpha_is_mu():
    G = SymmetricGroup(2)
    U = standard_params(G)
    rep = lk_rep(G, U)
    one = ParamPoly.constant(1, U.vars)
    for i, m in rep.e_mats.items():
        for r, c, v in m.entries():
            if c != i:
                assert v == one  # unique transporting reflection, mu = 1


def test_lk_blocks():
    for spec, dims in (("dihedral:6", [3, 3]), ("dihedral:5", [5]), ("g:2,1,2", [2, 2])):
        from brauerlab.groups import group_by_spec

        G = group_by_spec(spec)
        rep = lk_rep(G, standard_params(G))
        assert sorted(b["dim"] for b in lk_blocks(rep, G)) == dims


def test_h3_induced_reps(h3):
    U = standard_params(h3)
    rels = defining_relations(h3, U)
    one = ParamPoly.constant(1, U.vars)
    tau = ParamPoly.variable("tau", U.vars)
    for alpha in range(4):
        rep = h3_induced_rep(h3, alpha, U)
        assert check_relations(lk_model(rep), rels, rep.one()).ok
        # e_i acts as a projector: e_i^2 = tau e_i
        for i, m in rep.e_mats.items():
            sq = m * m
            assert (sq - m.scale(tau)).is_zero()
            for r, c, v in m.entries():
                assert v in (one, -one, tau)
        M, detp = m_matrix(rep)
        coeffs = detp.univariate_coeffs("tau")
        assert len(coeffs) == 16 and coeffs[-1] == 1  # leading term tau^15
        if alpha == 0:
            for r, c, v in ((r, c, v) for i, m in rep.e_mats.items() for r, c, v in m.entries()):
                if r != c:
                    assert v == one  # sigma_0 is trivial on G_0


def test_h3_rho4(h3):
    U = standard_params(h3)
    rep = h3_rho4(h3, U)
    assert rep.dim == 5
    assert check_relations(lk_model(rep), defining_relations(h3, U), rep.one()).ok
    M, detp = m_matrix(rep)
    tau = ParamPoly.variable("tau", U.vars)
    one = ParamPoly.constant(1, U.vars)
    assert detp == (tau - 1) ** 4 * (tau + 4)
    for i in range(5):
        for j in range(5):
            assert M[i][j] == (tau if i == j else one)


def test_lk_i25_det():
    G = DihedralGroup(5)
    U = standard_params(G)
    _, detp = m_matrix(lk_rep(G, U))
    tau = ParamPoly.variable("tau", U.vars)
    assert detp == (tau - 1) ** 4 * (tau + 4)


def test_pairwise_nonisomorphic():
    assert len(set(SIGMA_SIGNS.values())) == 4


def test_irreducibility_surrogate(h3):
    U = standard_params(h3)
    for alpha, (dim, full) in {0: (15, 225), 4: (5, 25)}.items():
        rep = h3_rho4(h3, U) if alpha == 4 else h3_induced_rep(h3, alpha, U)
        mats = [rep.matrix(("g", g)) for g in h3.generators] + list(rep.e_mats.values())
        assert generated_algebra_dimension(mats, dim, 10007, {"tau": Fraction(2)}) == full


def test_marin_specialization_counts():
    # with mu = 1 and equal tau the off-diagonal entries count {r : r u r = s}
    for G in (SymmetricGroup(3), DihedralGroup(5), CyclotomicGroup(2, 2)):
        for i in range(G.n_hyperplanes):
            for j in range(G.n_hyperplanes):
                if i == j:
                    continue
                count = sum(1 for r in G.reflections
                            if G.conj(r, G.s_of_i[j]) == G.s_of_i[i])
                assert count == len(G.r_set(i, j))


def test_m_matrix_rejects_rank_two(h3):
    U = standard_params(h3)
    rep = lk_rep(h3, U)
    broken = dict(rep.e_mats)
    from brauerlab.matrices import SparseMat

    bump = SparseMat.from_entries(rep.dim, [(3, 0, ParamPoly.constant(1, U.vars))])
    broken[0] = broken[0] + bump
    rep.e_mats = broken
    with pytest.raises(ValueError):
        m_matrix(rep)
