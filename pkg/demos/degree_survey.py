#!/usr/bin/env python3
"""Survey of exact degrees across the built-in catalog.

Shows sd, spd under both maximal-subgroup conventions, and the element
degree d, side by side. Nilpotent groups land at spd = 1 under both
conventions; quasihamiltonian groups (here: the abelian ones and Q8) land
at sd = 1.
"""
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from permlat import (
    catalog_groups,
    element_commutativity_degree,
    enumerate_subgroups,
    is_quasihamiltonian,
    sd,
    spd,
)


def text(v):
    if v is None:
        return "-"
    return str(v)


print(f"{'group':<10} {'|G|':>4} {'|L|':>4} {'sd':>8} {'spd raw':>8} "
      f"{'spd cl':>8} {'d':>6}  flags")
for g in catalog_groups(max_order=120):
    lat = enumerate_subgroups(g)
    trivial = g.order == 1
    flags = []
    if g.is_nilpotent:
        flags.append("nilpotent")
    elif g.is_solvable:
        flags.append("solvable")
    if is_quasihamiltonian(lat):
        flags.append("quasihamiltonian")
    print(f"{g.name:<10} {g.order:>4} {len(lat):>4} {text(sd(lat)):>8} "
          f"{text(None if trivial else spd(lat, 'raw')):>8} "
          f"{text(None if trivial else spd(lat, 'closed')):>8} "
          f"{text(element_commutativity_degree(g)):>6}  {' '.join(flags)}")

print()
print("Every degree above is an exact rational; nothing is rounded.")
