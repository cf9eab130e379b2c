"""
Matrix-unit cell data for the group algebras of the dihedral groups and H3.

For each irreducible representation rho with an invariant symmetric bilinear
form B (solved for exactly), the cell elements are the Fourier preimages of
E_{S,T} B:

    C^rho_{S,T} = (dim rho / |G|) * sum over w of tr(rho(w^-1) E_{S,T} B) w,

whose coefficient of w is (dim/|G|) (B rho(w^-1))[T,S]. Axioms (C1)-(C3) for
these data reduce to Fourier inversion and the invariance of B; everything is
re-verified downstream by the cellular axiom checker, so any valid datum for
the group algebra would do.

Exact irreducibles: dihedral groups get their one-dimensional characters and
the two-dimensional rho_h over Q(zeta_m); H3 gets the trivial and determinant
characters, the geometric representation over Q(sqrt 5) and its Galois twist,
the 4-dimensional representation from the action on the five perpendicular
classes, the 5-dimensional one from the action on the six fivefold axes
(edges with |I_L| = 5), and their determinant twists.
"""
from __future__ import annotations

from fractions import Fraction

from ..exact import NFElem, NumberField, cyclotomic_field, sqrt_field
from ..exact import linalg
from ..groups import DihedralGroup, H3Group, ReflectionGroup, perp_classes


class GroupCellDatum:
    """One cell per irreducible: name, dimension, matrices and coefficients."""

    def __init__(self, name: str, field: NumberField, mats: list[list[list[NFElem]]], order: int,
                 gens: list[int] | None = None):
        self.name = name
        self.field = field
        self.dim = len(mats[0])
        self.mats = mats  # rho(w) per element index, dense over the field
        self.order = order
        self.gens = gens
        self.form = self._invariant_form()
        self._coeff_cache: list[list[list[NFElem]]] | None = None

    def _invariant_form(self) -> list[list[NFElem]]:
        d = self.dim
        F = self.field
        # unknowns B[x][y]; invariance under a generating set implies invariance
        # under the whole group, so only generator rows are needed
        idx = lambda x, y: x * d + y
        rows = []
        source = self.mats if self.gens is None else [self.mats[g] for g in self.gens]
        for m in source:
            for x in range(d):
                for y in range(d):
                    row = [F.zero] * (d * d)
                    for a in range(d):
                        for b in range(d):
                            row[idx(a, b)] = row[idx(a, b)] + m[a][x] * m[b][y]
                    row[idx(x, y)] = row[idx(x, y)] - F.one
                    rows.append(row)
        for x in range(d):
            for y in range(x + 1, d):
                row = [F.zero] * (d * d)
                row[idx(x, y)] = F.one
                row[idx(y, x)] = -F.one
                rows.append(row)
        null = linalg.nullspace(rows, one=F.one)
        if len(null) != 1:
            raise AssertionError(f"invariant form space of {self.name} has dimension {len(null)}")
        v = null[0]
        return [[v[idx(x, y)] for y in range(d)] for x in range(d)]

    def coefficients(self, w_inv_of: list[int]) -> list[list[list[NFElem]]]:
        """coeffs[S][T][w] of the cell element C_{S,T} (scaled to dim/|G|)."""
        if self._coeff_cache is None:
            F = self.field
            d = self.dim
            scale = F.from_rational(Fraction(d, self.order))
            out = [[[F.zero] * self.order for _ in range(d)] for _ in range(d)]
            for w in range(self.order):
                m = self.mats[w_inv_of[w]]
                # (B rho(w^-1))[T,S]
                for T in range(d):
                    rowT = self.form[T]
                    for S in range(d):
                        acc = F.zero
                        for x in range(d):
                            if rowT[x]:
                                acc = acc + rowT[x] * m[x][S]
                        if acc:
                            for_S = acc * scale
                            out[S][T][w] = for_S
            self._coeff_cache = out
        return self._coeff_cache


def _lift(F: NumberField, x) -> NFElem:
    return x if isinstance(x, NFElem) else F.from_rational(Fraction(x))


def _mat(F: NumberField, rows) -> list[list[NFElem]]:
    return [[_lift(F, x) for x in row] for row in rows]


def dihedral_group_cells(G: DihedralGroup) -> tuple[NumberField, list[GroupCellDatum]]:
    m = G.m
    F = cyclotomic_field(m)
    z = F.gen()
    cells: list[GroupCellDatum] = []

    # characters: chi(s_j) depends on j parity when m is even
    def char_value(eps_even: int, eps_odd: int, w: int) -> int:
        kind, j = G.label(w)
        if kind == "s":
            return eps_even if j % 2 == 0 else eps_odd
        # r_j = s_j s_0: chi = chi(s_j) chi(s_0)
        return (eps_even if j % 2 == 0 else eps_odd) * eps_even

    def one_dim_by_signs(eps_even: int, eps_odd: int, name: str):
        mats = [[[F.from_rational(char_value(eps_even, eps_odd, w))]] for w in range(G.order)]
        return GroupCellDatum(name, F, mats, G.order, gens=G.generators)

    if m % 2 == 1:
        cells.append(one_dim_by_signs(1, 1, "triv"))
        cells.append(one_dim_by_signs(-1, -1, "sign"))
        two_dim_range = range(1, (m - 1) // 2 + 1)
    else:
        cells.append(one_dim_by_signs(1, 1, "triv"))
        cells.append(one_dim_by_signs(-1, -1, "sign"))
        cells.append(one_dim_by_signs(1, -1, "chi+-"))
        cells.append(one_dim_by_signs(-1, 1, "chi-+"))
        two_dim_range = range(1, m // 2)

    for h in two_dim_range:
        mats = []
        for w in range(G.order):
            kind, j = G.label(w)
            if kind == "r":
                mats.append([[z ** (h * j % m), F.zero], [F.zero, z ** (-h * j % m)]])
            else:
                mats.append([[F.zero, z ** (h * j % m)], [z ** (-h * j % m), F.zero]])
        cells.append(GroupCellDatum(f"rho{h}", F, mats, G.order, gens=G.generators))

    total = sum(c.dim ** 2 for c in cells)
    assert total == G.order, (total, G.order)
    return F, cells


def h3_group_cells(G: H3Group) -> tuple[NumberField, list[GroupCellDatum]]:
    F = G.sqrt5_field
    order = G.order

    def det3(m) -> NFElem:
        return (
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        )

    geo = [_mat(F, G.matrices[w]) for w in range(order)]
    dets = [det3(m) for m in geo]
    geo_conj = [[[x.conjugate_sqrt() for x in row] for row in m] for m in geo]

    def perm_minus_trivial(point_image: list[list[int]], npts: int) -> list[list[list[NFElem]]]:
        # basis f_i = u_i - u_last, i = 0..npts-2
        mats = []
        for w in range(order):
            img = point_image[w]
            cols = []
            for i in range(npts - 1):
                a, b = img[i], img[npts - 1]
                col = [F.zero] * (npts - 1)
                if a < npts - 1:
                    col[a] = col[a] + F.one
                if b < npts - 1:
                    col[b] = col[b] - F.one
                cols.append(col)
            mats.append([[cols[j][i] for j in range(npts - 1)] for i in range(npts - 1)])
        return mats

    # action on the five perpendicular classes
    classes = perp_classes(G)
    hyp_class = {}
    for ci, cls in enumerate(classes):
        for s in cls:
            hyp_class[G.i_of_s[s]] = ci
    class_img = [[hyp_class[G.hyp_action[w][G.i_of_s[classes[ci][0]]]] for ci in range(5)]
                 for w in range(order)]
    # action on the six fivefold axes (edges with |I_L| = 5)
    axes = [e for e in G.edge_report().codim2_edges if len(e) == 5]
    assert len(axes) == 6
    axis_index = {frozenset(e): k for k, e in enumerate(axes)}
    axis_img = [[axis_index[frozenset(G.hyp_action[w][h] for h in e)] for e in axes]
                for w in range(order)]

    four = perm_minus_trivial(class_img, 5)
    five = perm_minus_trivial(axis_img, 6)

    def twist(mats):
        return [[[x * dets[w] for x in row] for row in mats[w]] for w in range(order)]

    gens = G.generators
    cells = [
        GroupCellDatum("triv", F, [[[F.one]] for _ in range(order)], order, gens=gens),
        GroupCellDatum("det", F, [[[d]] for d in dets], order, gens=gens),
        GroupCellDatum("geo", F, geo, order, gens=gens),
        GroupCellDatum("geo*det", F, twist(geo), order, gens=gens),
        GroupCellDatum("geo~", F, geo_conj, order, gens=gens),
        GroupCellDatum("geo~*det", F, twist(geo_conj), order, gens=gens),
        GroupCellDatum("four", F, four, order, gens=gens),
        GroupCellDatum("four*det", F, twist(four), order, gens=gens),
        GroupCellDatum("five", F, five, order, gens=gens),
        GroupCellDatum("five*det", F, twist(five), order, gens=gens),
    ]
    assert sum(c.dim ** 2 for c in cells) == 120
    # distinct characters certify pairwise non-isomorphism
    chars = set()
    for c in cells:
        chars.add(tuple(sum((m[i][i] for i in range(c.dim)), F.zero) for m in c.mats))
    assert len(chars) == len(cells)
    return F, cells


def group_cells(G: ReflectionGroup) -> tuple[NumberField, list[GroupCellDatum]]:
    if isinstance(G, DihedralGroup):
        return dihedral_group_cells(G)
    if isinstance(G, H3Group):
        return h3_group_cells(G)
    raise ValueError(f"no group-algebra cell datum built for {G.name}")


def verify_homomorphism(G: ReflectionGroup, cell: GroupCellDatum, samples: int = 400) -> bool:
    """rho(ab) = rho(a) rho(b) on all pairs for small groups, sampled otherwise."""
    import random

    d = cell.dim
    F = cell.field

    def matmul(a, b):
        return [[sum((a[i][k] * b[k][j] for k in range(d)), F.zero) for j in range(d)]
                for i in range(d)]

    if G.order <= 24:
        pairs = [(a, b) for a in range(G.order) for b in range(G.order)]
    else:
        rng = random.Random(0)
        pairs = [(rng.randrange(G.order), rng.randrange(G.order)) for _ in range(samples)]
    return all(cell.mats[G.mul(a, b)] == matmul(cell.mats[a], cell.mats[b]) for a, b in pairs)
