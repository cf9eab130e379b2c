"""
The closed multiplication rules of the odd-dihedral algebra on the labeled
basis {S_i, R_i} u {T_{i,j}}, and the entry-for-entry comparison against the
rewriting-engine table. Indices live in Z/m throughout.
"""
from __future__ import annotations

from ..exact import ParamPoly
from ..groups import DihedralGroup
from .table import AlgebraTable, NormalWord

Label = tuple  # ("S", i) | ("R", i) | ("T", i, j)


def closed_product(m: int, a: Label, b: Label) -> tuple[ParamPoly, Label]:
    """Product of two basis labels: a coefficient and a single label."""
    if m % 2 == 0:
        raise ValueError("closed-form rules are stated for odd m")
    vars = ("tau",)
    one = ParamPoly.constant(1, vars)
    tau = ParamPoly.variable("tau", vars)

    def T(i, j):
        return ("T", i % m, j % m)

    ka, kb = a[0], b[0]
    if ka in "SR" and kb in "SR":
        i, j = a[1], b[1]
        if ka == "S" and kb == "S":
            return one, ("R", (i - j) % m)
        if ka == "R" and kb == "R":
            return one, ("R", (i + j) % m)
        if ka == "S" and kb == "R":
            return one, ("S", (i - j) % m)
        return one, ("S", (i + j) % m)
    if kb == "T" and ka in "SR":
        l, (i, j) = a[1], b[1:]
        if ka == "S":
            return one, T(l - i + j, j)
        return one, T(i + l, j)
    if ka == "T" and kb in "SR":
        (i, j), l = a[1:], b[1]
        if kb == "S":
            return one, T(i - j + l, 2 * l - j)
        return one, T(i - l, j - 2 * l)
    # T * T
    i, j = a[1], a[2]
    p, q = b[1], b[2]
    if (2 * p - j - q) % m == 0:
        return tau, T(i - p + q, q)
    br = (2 * p - j) % m
    if (br + q) % 2 == 0:
        return one, T((2 * i + br + q - 2 * p) // 2, q)
    return one, T((2 * i + br + q + m - 2 * p) // 2, q)


def compare_closed_form(T: AlgebraTable) -> bool:
    """
    Check that the closed product rules reproduce the rewriting table exactly,
    for every pair of labeled basis elements (including both off-diagonal
    branches of rule (3)).
    """
    G = T.group
    if not isinstance(G, DihedralGroup) or G.m % 2 == 0:
        raise ValueError("closed-form comparison is for odd dihedral tables")
    m = G.m

    hyp_of = {}
    for j in range(m):
        hyp_of[j] = G.i_of_s[G.element("s", j)]

    def to_basis(label: Label) -> int:
        if label[0] == "S":
            return T.nw_index[NormalWord(G.element("s", label[1]), ())]
        if label[0] == "R":
            return T.nw_index[NormalWord(G.element("r", label[1]), ())]
        vec = T.normal_form([("g", G.element("s", label[1])), ("e", hyp_of[label[2]])])
        (k, c), = vec.items()
        assert c == ParamPoly.constant(1, T.params)
        return k

    labels: list[Label] = [("S", i) for i in range(m)] + [("R", i) for i in range(m)]
    labels += [("T", i, j) for i in range(m) for j in range(m)]
    index = {to_basis(lab): lab for lab in labels}
    if len(index) != T.dim:
        return False

    for a in labels:
        ia = to_basis(a)
        for b in labels:
            ib = to_basis(b)
            coeff, c = closed_product(m, a, b)
            expected = {to_basis(c): coeff}
            if T.product(ia, ib) != expected:
                return False
    return True
