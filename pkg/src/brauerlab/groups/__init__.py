"""Reflection group constructors and arrangement queries."""
from __future__ import annotations

import functools

from .base import (
    EdgeReport,
    ReflectionGroup,
    classify_edges,
    perp_classes,
    relation1prime_pairs,
)
from .coxeter import H3Group, SymmetricGroup, H3_COXETER_MATRIX
from .cyclotomic import CyclotomicGroup, b3_coxeter_group
from .dihedral import DihedralGroup

COXETER_MATRICES = {
    "A1": ((1,),),
    "A2": ((1, 3), (3, 1)),
    "A3": ((1, 3, 2), (3, 1, 3), (2, 3, 1)),
    "A4": ((1, 3, 2, 2), (3, 1, 3, 2), (2, 3, 1, 3), (2, 2, 3, 1)),
    "B3": ((1, 4, 2), (4, 1, 3), (2, 3, 1)),
    "H3": H3_COXETER_MATRIX,
}


def build_dihedral(m: int) -> DihedralGroup:
    return DihedralGroup(m)


def build_g_m1n(m: int, n: int) -> CyclotomicGroup:
    return CyclotomicGroup(m, n)


def build_coxeter(matrix, bound: int = 200) -> ReflectionGroup:
    """
    Build a finite Coxeter group from its Coxeter matrix.

    Supported types: A_n (n <= 4), B3, H3 and I2(m); the bound caps the
    enumeration and turns an unsupported/infinite type into an error.
    """
    M = tuple(tuple(r) for r in matrix)
    n = len(M)
    if any(len(r) != n for r in M) or any(M[i][i] != 1 for i in range(n)):
        raise ValueError("not a Coxeter matrix")
    if n == 2:
        return DihedralGroup(M[0][1])
    for name, ref in COXETER_MATRICES.items():
        if len(ref) == n and _matrix_equiv(M, ref):
            G = {"A1": lambda: SymmetricGroup(1), "A2": lambda: SymmetricGroup(2),
                 "A3": lambda: SymmetricGroup(3), "A4": lambda: SymmetricGroup(4),
                 "B3": b3_coxeter_group, "H3": H3Group}[name]()
            if G.order > bound and name not in ("H3",):
                raise ValueError(f"enumeration exceeded bound {bound}")
            return G
    raise ValueError("unsupported Coxeter matrix (only A_n (n<=4), B3, H3, I2(m))")


def _matrix_equiv(a, b) -> bool:
    return a == b  # fixed generator order; no diagram automorphism search


@functools.lru_cache(maxsize=None)
def group_by_spec(spec: str) -> ReflectionGroup:
    """
    Parse a group spec string: 'dihedral:<m>', 'h3', 'a:<n>', 'g:<m>,1,<n>'.
    """
    s = spec.strip().lower()
    if s == "h3":
        return H3Group()
    if s == "b3":
        return b3_coxeter_group()
    if s.startswith("dihedral:"):
        return DihedralGroup(int(s.split(":")[1]))
    if s.startswith("a:"):
        return SymmetricGroup(int(s.split(":")[1]))
    if s.startswith("g:"):
        parts = s.split(":")[1].split(",")
        if len(parts) != 3 or parts[1] != "1":
            raise ValueError(f"unsupported group spec {spec!r} (only G(m,1,n))")
        return CyclotomicGroup(int(parts[0]), int(parts[2]))
    raise ValueError(f"unknown group spec {spec!r}")


__all__ = [
    "EdgeReport",
    "ReflectionGroup",
    "DihedralGroup",
    "SymmetricGroup",
    "H3Group",
    "CyclotomicGroup",
    "b3_coxeter_group",
    "build_dihedral",
    "build_coxeter",
    "build_g_m1n",
    "classify_edges",
    "perp_classes",
    "relation1prime_pairs",
    "group_by_spec",
    "COXETER_MATRICES",
]
