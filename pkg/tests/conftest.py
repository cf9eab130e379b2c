"""Shared fixtures; the heavy H3 objects are built once per session."""
from __future__ import annotations

import pytest

from brauerlab.core.table import NormalWord, algebra_table
from brauerlab.core.relations import TableModel
from brauerlab.groups import DihedralGroup, H3Group, SymmetricGroup, group_by_spec
from brauerlab.service import registry


@pytest.fixture(scope="session")
def h3():
    return group_by_spec("h3")


@pytest.fixture(scope="session")
def h3_table(h3):
    return registry.get_table("h3")


@pytest.fixture(scope="session")
def h3_datum(h3_table):
    from brauerlab.cellular import build_cell_datum

    return build_cell_datum(h3_table)


@pytest.fixture(scope="session")
def dihedral_tables():
    return {m: registry.get_table(f"dihedral:{m}") for m in (5, 6, 7, 8)}


@pytest.fixture(scope="session")
def a_tables():
    return {rank: registry.get_table(f"a:{rank}") for rank in (1, 2, 3)}


def table_model(T) -> TableModel:
    def assign(tok):
        if tok[0] == "g":
            return T.nw_index[NormalWord(tok[1], ())]
        if tok[0] == "e":
            return T._nw(0, (tok[1],))
        raise ValueError(tok)
    return TableModel(T, assign)
