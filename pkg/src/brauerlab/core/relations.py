"""
Relation lists and the universal relation checker.

A relation is an equation between formal linear combinations of words in
generator tokens. Tokens: ('g', w) is the group element with enumeration
index w; ('e', i) the semi-idempotent of hyperplane i. Presentations use
abstract tokens ('S', k), ('E', k), ('t', j) instead. A model assigns a
value (sparse matrix, or an element of an algebra table) to each token;
check_relations evaluates both sides of every relation in the model and
reports the residuals.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from ..exact import ParamPoly
from ..groups import ReflectionGroup, relation1prime_pairs
from ..matrices import SparseMat
from .params import ParamSet

Token = tuple
Word = tuple
Side = list  # list[(ParamPoly, Word)]


@dataclass
class Relation:
    name: str
    lhs: Side
    rhs: Side


@dataclass
class RelationList:
    relations: list[Relation]
    vars: tuple[str, ...]

    def __len__(self):
        return len(self.relations)

    def names(self):
        return [r.name for r in self.relations]


def _side(*terms) -> Side:
    return list(terms)


def defining_relations(G: ReflectionGroup, U: ParamSet) -> RelationList:
    """
    The defining relations of the Brauer-type algebra of (V, G):

    (0) the group multiplication table (generators against all elements),
    (1) s_i e_i = e_i = e_i s_i, (1)' absorption of the extra hyperplane
    stabilizers, (2) e_i^2 = tau e_i, (3) conjugation covariance
    w e_j w^-1 = e_{w(j)}, (4) commuting crossing pairs, (5) the R(i,j)
    sum rule on noncrossing pairs, (6) vanishing products when R(i,j) is
    empty.
    """
    one = U.one()
    rels: list[Relation] = []

    for g in G.generators:
        for w in range(G.order):
            rels.append(Relation(
                f"(0) g{g}*w{w}",
                _side((one, (("g", g), ("g", w)))),
                _side((one, (("g", G.mul(g, w)),))),
            ))

    for i in range(G.n_hyperplanes):
        s = G.s_of_i[i]
        rels.append(Relation(f"(1) s e_{i}", _side((one, (("g", s), ("e", i)))), _side((one, (("e", i),)))))
        rels.append(Relation(f"(1) e_{i} s", _side((one, (("e", i), ("g", s)))), _side((one, (("e", i),)))))

    for w, i in relation1prime_pairs(G):
        rels.append(Relation(f"(1)' w{w} e_{i}", _side((one, (("g", w), ("e", i)))), _side((one, (("e", i),)))))
        rels.append(Relation(f"(1)' e_{i} w{w}", _side((one, (("e", i), ("g", w)))), _side((one, (("e", i),)))))

    for i in range(G.n_hyperplanes):
        rels.append(Relation(
            f"(2) e_{i}^2",
            _side((one, (("e", i), ("e", i)))),
            _side((U.tau(i), (("e", i),))),
        ))

    for g in G.generators:
        for i in range(G.n_hyperplanes):
            rels.append(Relation(
                f"(3) g{g} e_{i}",
                _side((one, (("g", g), ("e", i)))),
                _side((one, (("e", G.hyp_action[g][i]), ("g", g)))),
            ))

    er = G.edge_report()
    for i in range(G.n_hyperplanes):
        for j in range(G.n_hyperplanes):
            if i == j:
                continue
            if er.is_crossing(i, j):
                if i < j:
                    rels.append(Relation(
                        f"(4) e_{i} e_{j}",
                        _side((one, (("e", i), ("e", j)))),
                        _side((one, (("e", j), ("e", i)))),
                    ))
                continue
            R = G.r_set(i, j)
            if R:
                rels.append(Relation(
                    f"(5)L e_{i} e_{j}",
                    _side((one, (("e", i), ("e", j)))),
                    _side(*((U.mu(s), (("g", s), ("e", j))) for s in R)),
                ))
                rels.append(Relation(
                    f"(5)R e_{i} e_{j}",
                    _side((one, (("e", i), ("e", j)))),
                    _side(*((U.mu(s), (("e", i), ("g", s))) for s in R)),
                ))
            else:
                rels.append(Relation(f"(6) e_{i} e_{j}", _side((one, (("e", i), ("e", j)))), _side()))

    return RelationList(rels, U.vars)


# -- models -----------------------------------------------------------------


class MatrixModel:
    """Assigns sparse matrices to tokens; evaluation is matrix arithmetic."""

    def __init__(self, dim: int, assign: dict[Token, SparseMat] | Callable[[Token], SparseMat]):
        self.dim = dim
        self._assign = assign

    def value(self, token: Token) -> SparseMat:
        m = self._assign[token] if isinstance(self._assign, dict) else self._assign(token)
        if m.n != self.dim:
            raise ValueError(f"matrix for {token} has dimension {m.n}, expected {self.dim}")
        return m

    def eval_side(self, side: Side, one) -> SparseMat:
        total = SparseMat(self.dim)
        for coeff, word in side:
            acc = SparseMat.identity(self.dim, one)
            for tok in word:
                acc = acc * self.value(tok)
            total = total + acc.scale(coeff)
        return total

    def residual(self, rel: Relation, one) -> int:
        diff = self.eval_side(rel.lhs, one) - self.eval_side(rel.rhs, one)
        return diff.nnz()


class TableModel:
    """
    Evaluates words in the left regular representation of an algebra table:
    each side is applied to every basis vector and compared columnwise.
    """

    def __init__(self, table, assign: Callable[[Token], "int | None"]):
        self.table = table
        self.assign = assign  # token -> basis index (or None for the zero element)

    def eval_word_on(self, word: Word, b: int) -> dict[int, ParamPoly]:
        vec = {b: self.table.one_coeff()}
        for tok in reversed(word):
            idx = self.assign(tok)
            if idx is None:
                return {}
            vec = self.table.left_mul_basis(idx, vec)
            if not vec:
                return {}
        return vec

    def residual(self, rel: Relation, one=None) -> int:
        bad = 0
        for b in range(self.table.dim):
            lhs: dict[int, ParamPoly] = {}
            for coeff, word in rel.lhs:
                for k, v in self.eval_word_on(word, b).items():
                    lhs[k] = lhs.get(k, 0) + coeff * v
            for coeff, word in rel.rhs:
                for k, v in self.eval_word_on(word, b).items():
                    lhs[k] = lhs.get(k, 0) - coeff * v
            if any(lhs.values()):
                bad += 1
        return bad


@dataclass
class RelationReport:
    total: int
    failures: list[tuple[str, int]]  # (relation name, residual size)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "relations_checked": self.total,
            "passed": self.total - len(self.failures),
            "failures": [{"relation": n, "residual": r} for n, r in self.failures],
        }


def check_relations(model, rels: RelationList, one=None) -> RelationReport:
    """Evaluate every relation in the model; list failures with residual sizes."""
    failures = []
    for rel in rels.relations:
        r = model.residual(rel, one)
        if r:
            failures.append((rel.name, r))
    return RelationReport(len(rels.relations), failures)


def diagram_model(table, mapping: dict[Token, Token | None]) -> "VectorModel":
    """Model over a diagram table; mapping sends relation tokens to table
    generator keys (or None for the zero element)."""
    assign = {}
    for tok, key in mapping.items():
        if key is None:
            assign[tok] = {}
        else:
            assign[tok] = {table.gens[key]: ParamPoly.constant(1, table.params)}
    return VectorModel(table, assign)


class VectorModel:
    """Model where tokens are vectors over a table basis (diagram algebras)."""

    def __init__(self, table, assign: dict[Token, dict[int, ParamPoly]]):
        self.table = table
        self.assign = assign

    def _mul(self, va, vb):
        out: dict[int, ParamPoly] = {}
        for a, ca in va.items():
            for b, cb in vb.items():
                for c, cc in self.table.product(a, b).items():
                    prev = out.get(c)
                    term = ca * cb * cc
                    out[c] = term if prev is None else prev + term
        return {k: v for k, v in out.items() if v}

    def eval_side(self, side: Side, one=None):
        total: dict[int, ParamPoly] = {}
        for coeff, word in side:
            vec = None
            for tok in word:
                tv = self.assign[tok]
                vec = tv if vec is None else self._mul(vec, tv)
            if vec is None:  # the empty word is the identity
                vec = {self.table.identity_index: ParamPoly.constant(1, self.table.params)}
            for k, v in vec.items():
                prev = total.get(k)
                term = coeff * v
                total[k] = term if prev is None else prev + term
        return {k: v for k, v in total.items() if v}

    def residual(self, rel: Relation, one=None) -> int:
        lhs = self.eval_side(rel.lhs)
        rhs = self.eval_side(rel.rhs)
        for k, v in rhs.items():
            prev = lhs.get(k)
            lhs[k] = -v if prev is None else prev - v
        return sum(1 for v in lhs.values() if v)
