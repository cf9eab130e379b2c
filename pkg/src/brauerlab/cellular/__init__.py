from .datum import CellDatum, CellReport, build_cell_datum, cell_module, verify_cellular
from .groupcells import group_cells, verify_homomorphism

__all__ = [
    "CellDatum",
    "CellReport",
    "build_cell_datum",
    "cell_module",
    "verify_cellular",
    "group_cells",
    "verify_homomorphism",
]
