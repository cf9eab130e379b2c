"""Process-wide cache of built groups and algebra tables (they are immutable)."""
from __future__ import annotations

import threading

from ..core.table import AlgebraTable, algebra_table
from ..groups import DihedralGroup, H3Group, ReflectionGroup, SymmetricGroup, group_by_spec

_lock = threading.Lock()
_tables: dict[str, AlgebraTable] = {}


def get_group(spec: str) -> ReflectionGroup:
    return group_by_spec(spec.strip().lower())


def table_supported(G: ReflectionGroup) -> bool:
    if isinstance(G, (DihedralGroup, H3Group)):
        return True
    return isinstance(G, SymmetricGroup) and G.rank <= 3


def get_table(spec: str) -> AlgebraTable:
    key = spec.strip().lower()
    with _lock:
        if key not in _tables:
            G = get_group(key)
            if not table_supported(G):
                raise ValueError(f"no algebra table for {G.name} (only dihedral, A-rank<=3, H3)")
            _tables[key] = algebra_table(G)
        return _tables[key]
