"""Cell data construction and the Graham-Lehrer axiom verifier."""
from fractions import Fraction

import pytest

from brauerlab.cellular import build_cell_datum, cell_module, group_cells, verify_cellular, verify_homomorphism
from brauerlab.core.params import standard_params
from brauerlab.core.relations import MatrixModel, check_relations, defining_relations
from brauerlab.groups import DihedralGroup
from brauerlab.reps import h3_rho4, lk_blocks, lk_rep


def test_group_cells_are_representations():
    for G in (DihedralGroup(5), DihedralGroup(6)):
        F, cells = group_cells(G)
        assert sum(c.dim ** 2 for c in cells) == G.order
        for c in cells:
            assert verify_homomorphism(G, c)


def test_dihedral_cellularity(dihedral_tables):
    for m, T in dihedral_tables.items():
        D = build_cell_datum(T)
        assert D.size_check()
        rep = verify_cellular(D)
        assert rep.ok, (m, rep.to_dict())


def test_corrupted_datum_fails_c3_with_t_dependence(dihedral_tables):
    D = build_cell_datum(dihedral_tables[5]).corrupted("LK")
    rep = verify_cellular(D)
    assert rep.c1_independent  # doubling keeps independence
    assert not rep.ok
    assert rep.t_dependent or rep.c3_failures


def test_lk_cell_module_matches_lk_rep(dihedral_tables):
    T = dihedral_tables[5]
    G = T.group
    D = build_cell_datum(T)
    mod = cell_module(D, "LK")
    assert mod.dim == 5 == lk_rep(G, standard_params(G)).dim
    r = check_relations(MatrixModel(5, lambda t: mod.matrix(t)),
                        defining_relations(G, T.params_set), T.one_coeff())
    assert r.ok, r.failures[:5]


def test_even_dihedral_cell_modules_match_blocks(dihedral_tables):
    T = dihedral_tables[6]
    G = T.group
    D = build_cell_datum(T)
    block_dims = sorted(b["dim"] for b in lk_blocks(lk_rep(G, standard_params(G)), G))
    mod_dims = sorted((cell_module(D, "LK0").dim, cell_module(D, "LK1").dim))
    assert mod_dims == block_dims == [3, 3]
    for name in ("LK0", "LK1"):
        mod = cell_module(D, name)
        r = check_relations(MatrixModel(mod.dim, lambda t, m=mod: m.matrix(t)),
                            defining_relations(G, T.params_set), T.one_coeff())
        assert r.ok, (name, r.failures[:5])


def test_h3_perp_cell_module_is_rho4(h3, h3_table, h3_datum):
    D = h3_datum
    mod = cell_module(D, "perp")
    assert mod.dim == 5
    U = h3_table.params_set
    r = check_relations(MatrixModel(5, lambda t: mod.matrix(t)),
                        defining_relations(h3, U), h3_table.one_coeff())
    assert r.ok, r.failures[:5]
    # trace comparison against rho_4 at tau = 2 and 3
    rho4 = h3_rho4(h3, U)
    for tok in [("g", g) for g in h3.generators] + [("e", 0), ("e", 7)]:
        for tau in (2, 3):
            tr_mod = sum((v.eval({"tau": Fraction(tau)})
                          for r_, c_, v in mod.matrix(tok).entries() if r_ == c_), Fraction(0))
            tr_rho = sum((v.eval({"tau": Fraction(tau)})
                          for r_, c_, v in rho4.matrix(tok).entries() if r_ == c_), Fraction(0))
            assert tr_mod == tr_rho, (tok, tau)


def test_h3_datum_counts(h3_datum):
    # 120 + 4*225 + 25 = 1045; the full axiom verification runs in the
    # acceptance suite (criterion 8)
    assert h3_datum.size_check()
    sizes = sorted(len(m) for m in h3_datum.m_sets.values())
    assert sizes.count(15) == 4 and sizes.count(5) == 3  # four induced cells; perp + two 5-dim group cells
