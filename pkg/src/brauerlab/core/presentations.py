"""
Verbatim relation lists for the canonical presentations: the Brauer algebra
table, the simply-laced table, the dihedral and general-Coxeter canonical
presentations, the G(m,1,n) canonical presentation and the cyclotomic
diagram-algebra presentation. Alternating-word notation [S_i S_j ...]_k is
expanded; index ranges follow the printed sources (1-based there, 0-based in
the emitted tokens where the source starts at 1).
"""
from __future__ import annotations

from ..exact import ParamPoly
from ..groups import COXETER_MATRICES, ReflectionGroup, build_coxeter
from .relations import Relation, RelationList

Side = list


def _con(v, vars) -> ParamPoly:
    return ParamPoly.constant(v, vars)


def _var(name, vars) -> ParamPoly:
    return ParamPoly.variable(name, vars)


def _alt(first, second, length: int) -> tuple:
    """[first second first ...] of the given length."""
    out = []
    for k in range(length):
        out.append(first if k % 2 == 0 else second)
    return tuple(out)


def brauer_presentation(n: int) -> RelationList:
    """Presentation of the Brauer algebra B_n(tau); generators ('S',i), ('E',i), 0 <= i < n-1."""
    vars = ("tau",)
    one, tau = _con(1, vars), _var("tau", vars)
    S = lambda i: ("S", i)
    E = lambda i: ("E", i)
    rels: list[Relation] = []
    for i in range(n - 2):
        rels.append(Relation(f"braid {i}", [(one, (S(i), S(i + 1), S(i)))], [(one, (S(i + 1), S(i), S(i + 1)))]))
    for i in range(1, n - 1):
        rels.append(Relation(f"ssE down {i}", [(one, (S(i), S(i - 1), E(i)))], [(one, (E(i - 1), S(i), S(i - 1)))]))
    for i in range(n - 2):
        rels.append(Relation(f"ssE up {i}", [(one, (S(i), S(i + 1), E(i)))], [(one, (E(i + 1), S(i), S(i + 1)))]))
    for i in range(n - 1):
        for j in range(i + 2, n - 1):
            rels.append(Relation(f"ss comm {i},{j}", [(one, (S(i), S(j)))], [(one, (S(j), S(i)))]))
    for i in range(n - 1):
        rels.append(Relation(f"s^2 {i}", [(one, (S(i), S(i)))], [(one, ())]))
        rels.append(Relation(f"sE {i}", [(one, (S(i), E(i)))], [(one, (E(i),))]))
        rels.append(Relation(f"E^2 {i}", [(one, (E(i), E(i)))], [(tau, (E(i),))]))
    for i in range(n - 2):
        rels.append(Relation(f"EsE up {i}", [(one, (E(i), S(i + 1), E(i)))], [(one, (E(i),))]))
    for i in range(1, n - 1):
        rels.append(Relation(f"EsE down {i}", [(one, (E(i), S(i - 1), E(i)))], [(one, (E(i),))]))
    for i in range(n - 1):
        for j in range(n - 1):
            if abs(i - j) > 1:
                rels.append(Relation(f"sE comm {i},{j}", [(one, (S(i), E(j)))], [(one, (E(j), S(i)))]))
    return RelationList(rels, vars)


def simply_laced_presentation(edges: set[frozenset], nodes: int) -> RelationList:
    """Presentation of the simply-laced Brauer algebra for a Dynkin diagram,
    given as an edge set over 0..nodes-1 (mu normalized to 1)."""
    vars = ("tau",)
    one, tau = _con(1, vars), _var("tau", vars)
    S = lambda i: ("S", i)
    E = lambda i: ("E", i)
    adj = lambda i, j: frozenset((i, j)) in edges
    rels: list[Relation] = []
    for i in range(nodes):
        rels.append(Relation(f"s^2 {i}", [(one, (S(i), S(i)))], [(one, ())]))
        rels.append(Relation(f"sE {i}", [(one, (S(i), E(i)))], [(one, (E(i),))]))
        rels.append(Relation(f"E^2 {i}", [(one, (E(i), E(i)))], [(tau, (E(i),))]))
    for i in range(nodes):
        for j in range(nodes):
            if i == j:
                continue
            if adj(i, j):
                if i < j:
                    rels.append(Relation(f"braid {i},{j}", [(one, (S(i), S(j), S(i)))], [(one, (S(j), S(i), S(j)))]))
                rels.append(Relation(f"ssE {i},{j}", [(one, (S(i), S(j), E(i)))], [(one, (E(j), S(i), S(j)))]))
                rels.append(Relation(f"EsE {i},{j}", [(one, (E(i), S(j), E(i)))], [(one, (E(i),))]))
            else:
                if i < j:
                    rels.append(Relation(f"ss comm {i},{j}", [(one, (S(i), S(j)))], [(one, (S(j), S(i)))]))
                rels.append(Relation(f"sE comm {i},{j}", [(one, (S(i), E(j)))], [(one, (E(j), S(i)))]))
    return RelationList(rels, vars)


def dihedral_presentation(m: int) -> RelationList:
    """Canonical presentation of the dihedral-type algebra, both parities."""
    S0, S1 = ("S", 0), ("S", 1)
    E0, E1 = ("E", 0), ("E", 1)
    rels: list[Relation] = []
    if m % 2 == 1:
        k = (m - 1) // 2
        vars = ("mu", "tau")
        one, mu, tau = _con(1, vars), _var("mu", vars), _var("tau", vars)
        tau_i = lambda i: tau
        coeff5 = lambda i: mu
    else:
        k = m // 2
        vars = ("mu0", "mu1", "tau0", "tau1")
        one = _con(1, vars)
        tau_i = lambda i: _var(f"tau{i % 2}", vars)
        coeff5 = lambda i: _var(f"mu{i % 2}", vars) + _var(f"mu{(i + k) % 2}", vars)

    rels.append(Relation("1) braid", [(one, _alt(S0, S1, m))], [(one, _alt(S1, S0, m))]))
    for g, nm in ((S0, "S0"), (S1, "S1")):
        rels.append(Relation(f"2) {nm}^2", [(one, (g, g))], [(one, ())]))
    for g, e, i in ((S0, E0, 0), (S1, E1, 1)):
        rels.append(Relation(f"3) S{i}E{i}", [(one, (g, e))], [(one, (e,))]))
        rels.append(Relation(f"3) E{i}S{i}", [(one, (e, g))], [(one, (e,))]))
        rels.append(Relation(f"4) E{i}^2", [(one, (e, e))], [(tau_i(i), (e,))]))
    # even case: the printed ranges 1 <= i <= k degenerate at one endpoint,
    # where the conjugating word fixes the hyperplane and relations 3), 7), 8)
    # already force the product to tau E; emitting those instances verbatim
    # would impose a parameter collision, so the ranges stop short of them.
    range5 = range(1, k + 1) if m % 2 == 1 else range(1, k)
    range6 = range(1, k + 1) if m % 2 == 1 else range(2, k + 1)
    for i in range5:
        rels.append(Relation(f"5) E0 w{i} E0", [(one, (E0,) + _alt(S1, S0, 2 * i - 1) + (E0,))],
                             [(coeff5(i), (E0,))]))
    for i in range6:
        if m % 2 == 1:
            word = _alt(S0, S1, 2 * i - 1)
        else:
            word = _alt(S1, S0, 2 * i - 1)
        rels.append(Relation(f"6) E1 w{i} E1", [(one, (E1,) + word + (E1,))], [(coeff5(i), (E1,))]))
    if m % 2 == 1:
        rels.append(Relation("7)", [(one, _alt(S0, S1, 2 * k) + (E0,))], [(one, (E1,) + _alt(S0, S1, 2 * k))]))
        rels.append(Relation("8)", [(one, _alt(S1, S0, 2 * k) + (E1,))], [(one, (E0,) + _alt(S1, S0, 2 * k))]))
    else:
        w70 = _alt(S1, S0, 2 * k - 1)
        rels.append(Relation("7)a", [(one, w70 + (E0,))], [(one, (E0,) + w70)]))
        rels.append(Relation("7)b", [(one, w70 + (E0,))], [(one, (E0,))]))
        w81 = _alt(S0, S1, 2 * k - 1)
        rels.append(Relation("8)a", [(one, w81 + (E1,))], [(one, (E1,) + w81)]))
        rels.append(Relation("8)b", [(one, w81 + (E1,))], [(one, (E1,))]))
        # 9) E_1 W E_0 = E_0 W E_1 = 0 for every word W in the S's
        for word in _dihedral_words(m):
            nm = "".join(str(t[1]) for t in word)
            rels.append(Relation(f"9) E1 w[{nm}] E0", [(one, (E1,) + word + (E0,))], []))
            rels.append(Relation(f"9) E0 w[{nm}] E1", [(one, (E0,) + word + (E1,))], []))
    return RelationList(rels, vars)


def _dihedral_words(m: int) -> list[tuple]:
    """Alternating words giving each element of I2(m) once (identity included)."""
    words = [()]
    for length in range(1, m):
        words.append(_alt(("S", 0), ("S", 1), length))
        words.append(_alt(("S", 1), ("S", 0), length))
    words.append(_alt(("S", 0), ("S", 1), m))
    return words


def coxeter_presentation(matrix, U=None) -> RelationList:
    """
    Canonical presentation for a Coxeter matrix.

    mu coefficients references the reflection classes of the geometric group,
    so the group is built to resolve them; with a single class everything is
    normalized to mu = 1 and the simply-laced list coincides with simply_laced_presentation.
    """
    M = tuple(tuple(r) for r in matrix)
    n = len(M)
    G = build_coxeter(M)
    from .params import standard_params
    if U is None:
        U = standard_params(G)
    vars = U.vars
    one = _con(1, vars)
    S = lambda i: ("S", i)
    E = lambda i: ("E", i)
    gen_elt = {i: G.generators[i] for i in range(n)}

    def word_elt(tokens) -> int:
        w = 0
        for t in tokens:
            w = G.mul(w, gen_elt[t[1]])
        return w

    rels: list[Relation] = []
    for i in range(n):
        rels.append(Relation(f"1) s^2 {i}", [(one, (S(i), S(i)))], [(one, ())]))
        rels.append(Relation(f"3) sE {i}", [(one, (S(i), E(i)))], [(one, (E(i),))]))
        rels.append(Relation(f"3) Es {i}", [(one, (E(i), S(i)))], [(one, (E(i),))]))
        rels.append(Relation(f"4) E^2 {i}", [(one, (E(i), E(i)))],
                             [(U.tau(G.i_of_s[gen_elt[i]]), (E(i),))]))
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            mij = M[i][j]
            if i < j:
                rels.append(Relation(f"2) braid {i},{j}",
                                     [(one, _alt(S(i), S(j), mij))], [(one, _alt(S(j), S(i), mij))]))
            if mij == 2:
                rels.append(Relation(f"5) sE comm {i},{j}", [(one, (S(i), E(j)))], [(one, (E(j), S(i)))]))
                if i < j:
                    rels.append(Relation(f"6) EE comm {i},{j}", [(one, (E(i), E(j)))], [(one, (E(j), E(i)))]))
            elif mij % 2 == 0:
                k = mij // 2
                w = _alt(S(j), S(i), 2 * k - 1)
                rels.append(Relation(f"7)a {i},{j}", [(one, w + (E(i),))], [(one, (E(i),) + w)]))
                rels.append(Relation(f"7)b {i},{j}", [(one, w + (E(i),))], [(one, (E(i),))]))
                for w_tokens in _alternating_subgroup_words(i, j, mij):
                    nm = "".join(str(t[1]) for t in w_tokens)
                    rels.append(Relation(f"8) E{i} w[{nm}] E{j}",
                                         [(one, (E(i),) + w_tokens + (E(j),))], []))
                for l in range(1, k + 1):
                    w_l = _alt(S(j), S(i), 2 * l - 1)
                    s = word_elt(w_l)
                    s2 = word_elt(_alt(S(j), S(i), 2 * (l + k) - 1))
                    coeff = U.mu(s) + U.mu(s2)
                    rels.append(Relation(f"9) E{i} w{l} E{i}",
                                         [(one, (E(i),) + w_l + (E(i),))], [(coeff, (E(i),))]))
            else:
                k = (mij - 1) // 2
                for l in range(1, k + 1):
                    w_l = _alt(S(j), S(i), 2 * l - 1)
                    eps = i if l % 2 == 1 else j
                    rels.append(Relation(f"10) E{i} w{l} E{i}",
                                         [(one, (E(i),) + w_l + (E(i),))],
                                         [(U.mu(gen_elt[eps]), (E(i),))]))
                rels.append(Relation(f"11) {i},{j}",
                                     [(one, _alt(S(i), S(j), 2 * k) + (E(i),))],
                                     [(one, (E(j),) + _alt(S(i), S(j), 2 * k))]))
    return RelationList(rels, vars)


def _alternating_subgroup_words(i: int, j: int, mij: int) -> list[tuple]:
    """Alternating words covering the dihedral subgroup <s_i, s_j> once each."""
    Si, Sj = ("S", i), ("S", j)
    words = [()]
    for length in range(1, mij):
        words.append(_alt(Si, Sj, length))
        words.append(_alt(Sj, Si, length))
    words.append(_alt(Si, Sj, mij))
    return words


def cyclotomic_presentation(m: int, n: int) -> RelationList:
    """Canonical presentation of the G(m,1,n)-type algebra (16 relation families)."""
    vars = tuple(["mu"] + [f"mu{k}" for k in range(1, m)] + ["tau0", "tau1"])
    one = _con(1, vars)
    mu = _var("mu", vars)
    mu_k = lambda k: _var("tau1", vars) if k % m == 0 else _var(f"mu{k % m}", vars)
    tau0, tau1 = _var("tau0", vars), _var("tau1", vars)
    S = lambda i: ("S", i)
    E = lambda i: ("E", i)
    rels: list[Relation] = []
    rels.append(Relation("1) S0^m", [(one, (S(0),) * m)], [(one, ())]))
    for i in range(1, n):
        rels.append(Relation(f"1) S{i}^2", [(one, (S(i), S(i)))], [(one, ())]))
    rels.append(Relation("2) S0S1S0S1", [(one, (S(0), S(1), S(0), S(1)))], [(one, (S(1), S(0), S(1), S(0)))]))
    for i in range(1, n):
        for j in range(i + 2, n):
            rels.append(Relation(f"3) comm {i},{j}", [(one, (S(i), S(j)))], [(one, (S(j), S(i)))]))
    for i in range(1, n - 1):
        rels.append(Relation(f"4) braid {i}", [(one, (S(i), S(i + 1), S(i)))], [(one, (S(i + 1), S(i), S(i + 1)))]))
    rels.append(Relation("5) E0^2", [(one, (E(0), E(0)))], [(tau0, (E(0),))]))
    for i in range(1, n):
        rels.append(Relation(f"6) E{i}^2", [(one, (E(i), E(i)))], [(tau1, (E(i),))]))
    rels.append(Relation("7)a", [(one, (S(1), S(0), S(1), E(0)))], [(one, (E(0), S(1), S(0), S(1)))]))
    rels.append(Relation("7)b", [(one, (S(1), S(0), S(1), E(0)))], [(one, (E(0),))]))
    for i in range(1, n - 1):
        rels.append(Relation(f"8) ssE {i}", [(one, (S(i), S(i + 1), E(i)))], [(one, (E(i + 1), S(i), S(i + 1)))]))
    for i in range(n):
        for j in range(n):
            if abs(i - j) >= 2:
                rels.append(Relation(f"9) sE comm {i},{j}", [(one, (S(i), E(j)))], [(one, (E(j), S(i)))]))
    for i in range(m):
        w = (S(0),) * i + (S(1),) + (S(0),) * i
        rels.append(Relation(f"10) {i}", [(one, w + (E(1),))], [(one, (E(1),) + w)]))
    for i in range(n):
        rels.append(Relation(f"11) SE {i}", [(one, (S(i), E(i)))], [(one, (E(i),))]))
        rels.append(Relation(f"11) ES {i}", [(one, (E(i), S(i)))], [(one, (E(i),))]))
    for i in range(m):
        rels.append(Relation(f"12) E1 S0^{i} E1", [(one, (E(1),) + (S(0),) * i + (E(1),))],
                             [(mu_k(i), (E(1),))]))
    rels.append(Relation("13) E0 S1 E0", [(one, (E(0), S(1), E(0)))], [(_con(m - 1, vars) * mu, (E(0),))]))
    for i in range(n):
        for j in range(i + 2, n):
            rels.append(Relation(f"14) EE comm {i},{j}", [(one, (E(i), E(j)))], [(one, (E(j), E(i)))]))
    for word in _g1n_words(m):
        nm = "".join(str(t[1]) for t in word)
        rels.append(Relation(f"15) E0 w[{nm}] E1", [(one, (E(0),) + word + (E(1),))], []))
        rels.append(Relation(f"15) E1 w[{nm}] E0", [(one, (E(1),) + word + (E(0),))], []))
    for i in range(1, n - 1):
        rels.append(Relation(f"16) EE {i}", [(one, (E(i), E(i + 1)))],
                             [(mu, (S(i), S(i + 1), S(i), E(i + 1)))]))
    return RelationList(rels, vars)


def _g1n_words(m: int) -> list[tuple]:
    """Words covering the subgroup generated by S0 (order m) and S1 (order 2)."""
    S0, S1 = ("S", 0), ("S", 1)
    words: list[tuple] = []
    # elements of <t_1, s_{12;0}> = G(m,1,2): S0^a S1 S0^b and S0^a (t-powers)
    for a in range(m):
        for b in range(m):
            words.append((S0,) * a + (S1,) + (S0,) * b)
        words.append((S0,) * a)
    # include the diagonal twists S0^a S1 S0^b S1
    for a in range(m):
        for b in range(1, m):
            words.append((S0,) * a + (S1,) + (S0,) * b + (S1,))
    return words


def cyclo_diagram_presentation(m: int, n: int) -> RelationList:
    """The 17 defining relation families a)-q) of the cyclotomic Brauer algebra."""
    vars = tuple(f"delta{a}" for a in range(m))
    one = _con(1, vars)
    delta = lambda a: _var(f"delta{a % m}", vars)
    s = lambda i: ("s", i)
    e = lambda i: ("e", i)
    t = lambda j: ("t", j)
    rels: list[Relation] = []
    for i in range(1, n):
        rels.append(Relation(f"a) s{i}^2", [(one, (s(i), s(i)))], [(one, ())]))
    for i in range(1, n):
        for j in range(i + 2, n):
            rels.append(Relation(f"b) ss comm {i},{j}", [(one, (s(i), s(j)))], [(one, (s(j), s(i)))]))
    for i in range(1, n - 1):
        rels.append(Relation(f"c) braid {i}", [(one, (s(i), s(i + 1), s(i)))], [(one, (s(i + 1), s(i), s(i + 1)))]))
    for i in range(1, n):
        for j in range(1, n + 1):
            if j not in (i, i + 1):
                rels.append(Relation(f"d) st comm {i},{j}", [(one, (s(i), t(j)))], [(one, (t(j), s(i)))]))
    for i in range(1, n):
        rels.append(Relation(f"e) e{i}^2", [(one, (e(i), e(i)))], [(delta(0), (e(i),))]))
    for i in range(1, n):
        for j in range(1, n):
            if abs(i - j) > 1:
                rels.append(Relation(f"f) se comm {i},{j}", [(one, (s(i), e(j)))], [(one, (e(j), s(i)))]))
                rels.append(Relation(f"g) ee comm {i},{j}", [(one, (e(i), e(j)))], [(one, (e(j), e(i)))]))
    for i in range(1, n):
        for j in range(1, n + 1):
            if j not in (i, i + 1):
                rels.append(Relation(f"h) et comm {i},{j}", [(one, (e(i), t(j)))], [(one, (t(j), e(i)))]))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            rels.append(Relation(f"i) tt comm {i},{j}", [(one, (t(i), t(j)))], [(one, (t(j), t(i)))]))
    for i in range(1, n):
        rels.append(Relation(f"j) st {i}", [(one, (s(i), t(i)))], [(one, (t(i + 1), s(i)))]))
        rels.append(Relation(f"k) es {i}", [(one, (e(i), s(i)))], [(one, (e(i),))]))
        rels.append(Relation(f"k) se {i}", [(one, (s(i), e(i)))], [(one, (e(i),))]))
    for i in range(1, n - 1):
        # relation l) is printed as s_i e_{i+1} s_i = s_{i+1} e_i, which no
        # diagram model satisfies (the sides have different arc patterns);
        # the corrected right side s_{i+1} e_i s_{i+1} follows from relation 8)
        # of the canonical presentation. See cyclo_printed_discrepancies.
        rels.append(Relation(f"l) ses {i}", [(one, (s(i), e(i + 1), s(i)))],
                             [(one, (s(i + 1), e(i), s(i + 1)))]))
        rels.append(Relation(f"m) ees {i}", [(one, (e(i + 1), e(i), s(i + 1)))], [(one, (e(i + 1), s(i)))]))
    for i in range(1, n):
        for j in (i - 1, i + 1):
            if 1 <= j < n:
                rels.append(Relation(f"n) eee {i},{j}", [(one, (e(i), e(j), e(i)))], [(one, (e(i),))]))
    for i in range(1, n):
        rels.append(Relation(f"o) ett {i}", [(one, (e(i), t(i), t(i + 1)))], [(one, (e(i),))]))
        rels.append(Relation(f"o) tte {i}", [(one, (t(i), t(i + 1), e(i)))], [(one, (e(i),))]))
    for i in range(1, n):
        for a in range(1, m):
            rels.append(Relation(f"p) ete {i},{a}", [(one, (e(i),) + (t(i),) * a + (e(i),))],
                                 [(delta(a), (e(i),))]))
    for i in range(1, n + 1):
        rels.append(Relation(f"q) t{i}^m", [(one, (t(i),) * m)], [(one, ())]))
    return RelationList(rels, vars)


def cyclo_printed_discrepancies(m: int, n: int) -> RelationList:
    """
    Relations of the cyclotomic presentation whose printed form differs from
    what any diagram model can satisfy; they are reported, never silently
    repaired. Currently only relation l) as printed.
    """
    vars = tuple(f"delta{a}" for a in range(m))
    one = _con(1, vars)
    s = lambda i: ("s", i)
    e = lambda i: ("e", i)
    rels = [Relation(f"l-as-printed {i}", [(one, (s(i), e(i + 1), s(i)))], [(one, (s(i + 1), e(i)))])
            for i in range(1, n - 1)]
    return RelationList(rels, vars)


def presentation(kind: str, **kw) -> RelationList:
    """
    Dispatch by kind: 'dihedral_odd'/'dihedral_even' (m), 'coxeter' (matrix),
    'cyclotomic' (m, n), 'brauer' (n), 'simply_laced' (edges, nodes) and
    'cyclo_diagram' (m, n).
    """
    if kind in ("dihedral_odd", "dihedral_even"):
        m = kw["m"]
        if kind.endswith("odd") != (m % 2 == 1):
            raise ValueError(f"{kind} needs matching parity, got m={m}")
        return dihedral_presentation(m)
    if kind == "coxeter":
        return coxeter_presentation(kw["matrix"], kw.get("params"))
    if kind == "cyclotomic":
        return cyclotomic_presentation(kw["m"], kw["n"])
    if kind == "brauer":
        return brauer_presentation(kw["n"])
    if kind == "simply_laced":
        return simply_laced_presentation(kw["edges"], kw["nodes"])
    if kind == "cyclo_diagram":
        return cyclo_diagram_presentation(kw["m"], kw["n"])
    raise ValueError(f"unknown presentation kind {kind!r}")
