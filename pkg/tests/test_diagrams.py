"""Diagram oracles: Brauer composition, loop counting, the cyclotomic tables."""
import random

import pytest

from brauerlab.core.presentations import cyclo_diagram_presentation, cyclo_printed_discrepancies, brauer_presentation
from brauerlab.core.relations import VectorModel, check_relations, diagram_model
from brauerlab.diagrams import (
    BrauerDiagram,
    BrauerTable,
    CycloTable,
    compose_brauer,
)
from brauerlab.exact import ParamPoly


def unit(T, i):
    return {i: ParamPoly.constant(1, T.params)}


def mulvec(T, va, vb):
    out = {}
    for a, ca in va.items():
        for b, cb in vb.items():
            for c, cc in T.product(a, b).items():
                out[c] = out.get(c, ParamPoly.constant(0, T.params)) + ca * cb * cc
    return {k: v for k, v in out.items() if v}


def test_compose_examples():
    e = BrauerDiagram.e(0, 1, 2)
    d, loops = compose_brauer(e, e)
    assert d == e and loops == 1
    s = BrauerDiagram.from_permutation((1, 0))
    d, loops = compose_brauer(s, s)
    assert d == BrauerDiagram.identity(2) and loops == 0
    with pytest.raises(ValueError):
        compose_brauer(e, BrauerDiagram.e(0, 1, 3))


def test_e_s_e_contraction():
    T = BrauerTable(3)
    e1, s2 = T.gens[("e", 0)], T.gens[("s", 1)]
    v = mulvec(T, mulvec(T, unit(T, e1), unit(T, s2)), unit(T, e1))
    assert v == unit(T, e1)


def test_dimensions():
    assert BrauerTable(2).dim == 3
    assert BrauerTable(3).dim == 15
    assert BrauerTable(4).dim == 105
    with pytest.raises(ValueError):
        BrauerTable(5)


def test_transporter_identities():
    T = BrauerTable(3)
    e01, e02 = T.e_index(0, 1), T.e_index(0, 2)
    s12 = T.perm_index((0, 2, 1))
    # e_{i,j} e_{i,k} = s_{j,k} e_{i,k}
    assert mulvec(T, unit(T, e01), unit(T, e02)) == mulvec(T, unit(T, s12), unit(T, e02))
    T4 = BrauerTable(4)
    # disjoint pairs commute
    a, b = T4.e_index(0, 1), T4.e_index(2, 3)
    assert T4.product(a, b) == T4.product(b, a)


def test_brauer_presentation_relations_hold_in_diagrams():
    for n in (2, 3, 4):
        T = BrauerTable(n)
        mapping = {("S", i): ("s", i) for i in range(n - 1)}
        mapping.update({("E", i): ("e", i) for i in range(n - 1)})
        rep = check_relations(diagram_model(T, mapping), brauer_presentation(n))
        assert rep.ok, (n, rep.failures[:5])


def test_associativity_full_small():
    for n in (2, 3):
        T = BrauerTable(n)
        for a in range(T.dim):
            for b in range(T.dim):
                ab = T.product(a, b)
                for c in range(T.dim):
                    lhs = mulvec(T, ab, unit(T, c))
                    rhs = mulvec(T, unit(T, a), T.product(b, c))
                    assert lhs == rhs


def test_associativity_sampled_n4():
    T = BrauerTable(4)
    rng = random.Random(0)
    for _ in range(100_000):
        a, b, c = (rng.randrange(T.dim) for _ in range(3))
        d1, l1 = compose_brauer(T.basis[a], T.basis[b])
        d1c, l1c = compose_brauer(d1, T.basis[c])
        d2, l2 = compose_brauer(T.basis[b], T.basis[c])
        ad2, l2a = compose_brauer(T.basis[a], d2)
        assert d1c == ad2 and l1 + l1c == l2 + l2a


def test_loop_count_grading():
    rng = random.Random(1)
    for n in (2, 3, 4):
        T = BrauerTable(n)
        for _ in range(2000):
            a, b = rng.randrange(T.dim), rng.randrange(T.dim)
            _, loops = compose_brauer(T.basis[a], T.basis[b])
            assert loops <= n


@pytest.mark.parametrize("m,n", [(2, 2), (3, 2), (2, 3)])
def test_cyclo_relation_suite(m, n):
    T = CycloTable(m, n)
    mapping = {("s", i): ("s", i) for i in range(1, n)}
    mapping.update({("e", i): ("e", i) for i in range(1, n)})
    mapping.update({("t", j): ("t", j) for j in range(1, n + 1)})
    rep = check_relations(VectorModel(T, {k: unit(T, T.gens[v]) for k, v in mapping.items()}), cyclo_diagram_presentation(m, n))
    assert rep.ok, (m, n, rep.failures[:5])


def test_cyclo_examples():
    T = CycloTable(3, 2)
    assert T.dim == 27
    e1, t1, t2 = T.gens[("e", 1)], T.gens[("t", 1)], T.gens[("t", 2)]
    ident = T.identity_index
    v = unit(T, t1)
    for _ in range(2):
        v = mulvec(T, v, unit(T, t1))
    assert v == unit(T, ident)
    assert mulvec(T, mulvec(T, unit(T, e1), unit(T, t1)), unit(T, t2)) == unit(T, e1)
    assert T.product(e1, e1) == {e1: T.delta(0)}
    v = mulvec(T, mulvec(T, unit(T, e1), unit(T, t1)), unit(T, e1))
    assert v == {e1: T.delta(1)}


def test_cyclo_bound():
    with pytest.raises(ValueError):
        CycloTable(6, 3)  # 6^3 * 15 > 2000


def test_relation_m_holds_as_printed():
    # e_{i+1} e_i s_{i+1} = e_{i+1} s_i survives the diagram model as printed
    T = CycloTable(2, 3)
    e1, e2, s1, s2 = (T.gens[k] for k in (("e", 1), ("e", 2), ("s", 1), ("s", 2)))
    lhs = mulvec(T, mulvec(T, unit(T, e2), unit(T, e1)), unit(T, s2))
    rhs = mulvec(T, unit(T, e2), unit(T, s1))
    assert lhs == rhs


def test_relation_l_printed_discrepancy_reported():
    # the printed form of relation l) is refuted by the diagram model
    T = CycloTable(2, 3)
    assign = {("s", i): unit(T, T.gens[("s", i)]) for i in (1, 2)}
    assign.update({("e", i): unit(T, T.gens[("e", i)]) for i in (1, 2)})
    rep = check_relations(VectorModel(T, assign), cyclo_printed_discrepancies(2, 3))
    assert not rep.ok and len(rep.failures) == 1


def test_decorated_star_fixes_generators():
    T = CycloTable(3, 2)
    for key in (("s", 1), ("e", 1), ("t", 1), ("t", 2)):
        g = T.gens[key]
        assert T.star(g) == unit(T, g)
