"""Error norms, convergence orders and benchmark tables."""

from .errors import contour_levels, convergence_orders, error_norms
from .tables import MISSING, TABLE_COLUMNS, RefinementStudy, StudyMode, StudyRow, emit_table

__all__ = [
    "contour_levels",
    "convergence_orders",
    "error_norms",
    "MISSING",
    "TABLE_COLUMNS",
    "RefinementStudy",
    "StudyMode",
    "StudyRow",
    "emit_table",
]
