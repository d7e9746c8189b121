"""Exact Steenrod reduced-power engine for the mod-p hit problem on F_p[t1..th]."""

from ._core import (
    BudgetError,
    PolyParseError,
    apply_power,
    cartan_check,
    invariant_dim,
    is_hit,
    lucas_binom,
    quotient,
    recheck_certificate,
    table_basis,
    thm24_search,
    verify_crossley,
)

__all__ = [
    "BudgetError",
    "PolyParseError",
    "apply_power",
    "cartan_check",
    "invariant_dim",
    "is_hit",
    "lucas_binom",
    "quotient",
    "recheck_certificate",
    "table_basis",
    "thm24_search",
    "verify_crossley",
]
