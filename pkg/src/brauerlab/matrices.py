"""Sparse square matrices over an exact coefficient ring (ParamPoly etc.)."""
from __future__ import annotations

from typing import Callable, Iterable


class SparseMat:
    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows: dict[int, dict[int, object]] | None = None):
        self.n = n
        self.rows = rows if rows is not None else {}

    @classmethod
    def identity(cls, n: int, one) -> SparseMat:
        return cls(n, {i: {i: one} for i in range(n)})

    @classmethod
    def from_entries(cls, n: int, entries: Iterable[tuple[int, int, object]]) -> SparseMat:
        m = cls(n)
        for r, c, v in entries:
            if v:
                m.rows.setdefault(r, {})[c] = v
        return m

    @classmethod
    def from_columns(cls, n: int, col: Callable[[int], dict[int, object]]) -> SparseMat:
        """Build from a column function j -> {i: value}."""
        m = cls(n)
        for j in range(n):
            for i, v in col(j).items():
                if v:
                    m.rows.setdefault(i, {})[j] = v
        return m

    def entry(self, i: int, j: int):
        return self.rows.get(i, {}).get(j)

    def entries(self):
        for r, row in self.rows.items():
            for c, v in row.items():
                yield r, c, v

    def nnz(self) -> int:
        return sum(1 for _ in self.entries())

    def is_zero(self) -> bool:
        return all(not v for _, _, v in self.entries())

    def __eq__(self, other):
        if not isinstance(other, SparseMat) or self.n != other.n:
            return NotImplemented
        return (self - other).is_zero()

    def __add__(self, other: SparseMat) -> SparseMat:
        out = SparseMat(self.n, {r: dict(row) for r, row in self.rows.items()})
        for r, row in other.rows.items():
            dst = out.rows.setdefault(r, {})
            for c, v in row.items():
                cur = dst.get(c)
                s = v if cur is None else cur + v
                if s:
                    dst[c] = s
                elif c in dst:
                    del dst[c]
        return out

    def __neg__(self) -> SparseMat:
        return SparseMat(self.n, {r: {c: -v for c, v in row.items()} for r, row in self.rows.items()})

    def __sub__(self, other: SparseMat) -> SparseMat:
        return self + (-other)

    def scale(self, coeff) -> SparseMat:
        if not coeff:
            return SparseMat(self.n)
        return SparseMat(self.n, {r: {c: coeff * v for c, v in row.items()} for r, row in self.rows.items()})

    def __mul__(self, other: SparseMat) -> SparseMat:
        if not isinstance(other, SparseMat):
            return NotImplemented
        out = SparseMat(self.n)
        orow = other.rows
        for r, row in self.rows.items():
            acc: dict[int, object] = {}
            for k, a in row.items():
                br = orow.get(k)
                if not br:
                    continue
                for c, b in br.items():
                    prod = a * b
                    cur = acc.get(c)
                    acc[c] = prod if cur is None else cur + prod
            acc = {c: v for c, v in acc.items() if v}
            if acc:
                out.rows[r] = acc
        return out

    def commutator(self, other: SparseMat) -> SparseMat:
        return self * other - other * self

    def apply(self, vec: dict[int, object]) -> dict[int, object]:
        out: dict[int, object] = {}
        for r, row in self.rows.items():
            acc = None
            for c, a in row.items():
                v = vec.get(c)
                if v:
                    term = a * v
                    acc = term if acc is None else acc + term
            if acc:
                out[r] = acc
        return out

    def dense(self, zero) -> list[list[object]]:
        return [[self.rows.get(i, {}).get(j, zero) for j in range(self.n)] for i in range(self.n)]

    def map_values(self, f: Callable) -> SparseMat:
        return SparseMat(self.n, {r: {c: f(v) for c, v in row.items()} for r, row in self.rows.items()})
