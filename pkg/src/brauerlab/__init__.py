"""
brauerlab: Brauer-type algebras attached to finite (pseudo-)reflection
groups, with exact arithmetic throughout -- bases and structure constants,
generalized Lawrence-Krammer representations, KZ-type flatness checks,
cellular-structure verification and desk-scale semisimplicity decisions.
"""
from . import analysis, connections, cyclocompare, diagrams, reps
from .cellular import build_cell_datum, cell_module, verify_cellular
from .core.closedform import closed_product, compare_closed_form
from .core.labels import equivariant_labels
from .core.params import ParamSet, standard_params
from .core.presentations import presentation
from .core.relations import check_relations, defining_relations
from .core.table import AlgebraTable, NormalWord, algebra_table, normal_form, rescale_iso, validate_star
from .groups import (
    CyclotomicGroup,
    DihedralGroup,
    H3Group,
    SymmetricGroup,
    build_coxeter,
    build_dihedral,
    build_g_m1n,
    group_by_spec,
)

__version__ = "0.1.0"

__all__ = [
    "analysis", "connections", "cyclocompare", "diagrams", "reps",
    "build_cell_datum", "cell_module", "verify_cellular",
    "closed_product", "compare_closed_form",
    "equivariant_labels",
    "ParamSet", "standard_params",
    "presentation",
    "check_relations", "defining_relations",
    "AlgebraTable", "NormalWord", "algebra_table", "normal_form", "rescale_iso", "validate_star",
    "CyclotomicGroup", "DihedralGroup", "H3Group", "SymmetricGroup",
    "build_coxeter", "build_dihedral", "build_g_m1n", "group_by_spec",
]
