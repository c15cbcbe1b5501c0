"""Built-in group catalog used by batch processing and the verification suite.

Orders stay at or below 120 in the standard tier; S6 (order 720, 1455
subgroups) sits behind the stretch tier and is only used for the Moebius
stretch check.
"""
from __future__ import annotations

from .groups import DEFAULT_ORDER_CAP, FiniteGroup, make_named

CATALOG_SPECS: tuple[str, ...] = (
    "C1", "C2", "C3", "C5", "C12",
    "Z:2,2", "Z:2,4", "Z:2,2,2", "Z:3,3",
    "S3", "D4", "Q8", "A4", "D6", "S4", "S5",
    "S3xC5", "A4xC5",
)

STRETCH_SPECS: tuple[str, ...] = ("S6",)

NILPOTENT_SPECS: tuple[str, ...] = ("C12", "D4", "Q8", "Z:2,2,2", "Z:3,3")


def catalog_specs(max_order: int = DEFAULT_ORDER_CAP,
                  stretch: bool = False) -> list[str]:
    specs = list(CATALOG_SPECS)
    if stretch:
        specs += list(STRETCH_SPECS)
    return specs


def catalog_groups(max_order: int = DEFAULT_ORDER_CAP,
                   stretch: bool = False) -> list[FiniteGroup]:
    """Catalog groups with order <= max_order, in catalog order."""
    out = []
    for spec in catalog_specs(max_order, stretch):
        g = make_named(spec, max_order=DEFAULT_ORDER_CAP)
        if g.order <= max_order:
            out.append(g)
    return out
