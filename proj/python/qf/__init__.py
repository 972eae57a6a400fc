"""Finite quandles, generalized Alexander quandles and twist-spun knots."""

from ._core import (
    BudgetExceeded,
    DomainError,
    Error,
    Group,
    NotAKnot,
    NotFound,
    OutsideCatalog,
    OutsideFiniteCatalog,
    ParseError,
    Quandle,
    UsageError,
    automorphism_orders,
    classify,
    colorings,
    complete,
    enumerate_quandles,
    family,
    galex,
    group,
    hom_count,
    inner_group_order,
    is_connected,
    is_quandle,
    isomorphism,
    knots,
    profile,
    triple_report,
    twist_spin_presentation,
    type_of,
)

__version__ = "0.1.0"
