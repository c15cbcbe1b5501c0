"""Optional on-disk cache for enumerated subgroup lattices.

Cache files are JSON keyed by a digest of the multiplication table, so a hit
can only ever replay the same deterministic enumeration: the stored node
masks are re-sorted and re-validated on load, and anything suspicious (bad
digest, non-subgroup mask, wrong version) makes the loader return None so
the caller recomputes. A cache hit is therefore bit-identical to a fresh
enumeration.
"""
from __future__ import annotations

import hashlib
import json
import os
from typing import Optional

from .groups import FiniteGroup
from .lattice import SubgroupLattice

CACHE_FORMAT = 1


def table_digest(group: FiniteGroup) -> str:
    h = hashlib.sha256()
    h.update(f"v{CACHE_FORMAT}:{group.order}:".encode())
    for row in group.table:
        h.update(",".join(map(str, row)).encode())
        h.update(b";")
    return h.hexdigest()


def cache_path(cache_dir: str, group: FiniteGroup) -> str:
    return os.path.join(cache_dir, f"lattice-{table_digest(group)}.json")


def cache_exists(cache_dir: str, group: FiniteGroup) -> bool:
    return os.path.exists(cache_path(cache_dir, group))


def store_lattice(cache_dir: str, lat: SubgroupLattice) -> str:
    os.makedirs(cache_dir, exist_ok=True)
    path = cache_path(cache_dir, lat.group)
    payload = {
        "format": CACHE_FORMAT,
        "digest": table_digest(lat.group),
        "order": lat.group.order,
        "node_count": len(lat),
        "nodes": [format(m, "x") for m in lat.masks],
    }
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        json.dump(payload, fh)
    os.replace(tmp, path)
    return path


def load_lattice(cache_dir: str, group: FiniteGroup) -> Optional[SubgroupLattice]:
    """Rebuild a lattice from cache, or None if absent/corrupt/mismatched."""
    path = cache_path(cache_dir, group)
    try:
        with open(path, "r", encoding="utf-8") as fh:
            payload = json.load(fh)
    except (OSError, json.JSONDecodeError):
        return None
    try:
        if payload["format"] != CACHE_FORMAT:
            return None
        if payload["digest"] != table_digest(group):
            return None
        masks = [int(v, 16) for v in payload["nodes"]]
        if len(masks) != payload["node_count"] or len(set(masks)) != len(masks):
            return None
    except (KeyError, TypeError, ValueError):
        return None
    full = group.full_mask
    for m in masks:
        if not 0 < m <= full or not group.is_subgroup_mask(m):
            return None
    if 1 not in masks or full not in masks:
        return None
    return SubgroupLattice(group, masks)
