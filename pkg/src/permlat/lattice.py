"""Subgroup lattices and their distinguished node selections.

The lattice is enumerated once per group by saturating joins of cyclic seeds
and then frozen: nodes are sorted by (cardinality, membership-vector lex
order), so two runs of the same table index the nodes identically. Selections
(normal, subnormal, maximal, Sylow, perp, ...) are index sets into that fixed
node list; they never copy subgroups.

Pairwise permutability over the whole lattice is cached as one bitrow per
node (see :meth:`SubgroupLattice.chi_rows`), which every degree, perp and
bound computation downstream shares.
"""
from __future__ import annotations

from typing import Iterable, Optional

from .groups import ElementSet, FiniteGroup, _bits, prime_signature, subgroup_group

DEFAULT_LATTICE_CAP = 5000

RAW = "raw"
CLOSED = "closed"
CONVENTIONS = (RAW, CLOSED)


class LatticeCapError(ValueError):
    """Enumeration found more subgroups than the configured node cap."""


def _check_convention(convention: str):
    if convention not in CONVENTIONS:
        raise ValueError(f"maximal-subgroup convention must be one of {CONVENTIONS}")


class SubgroupLattice:
    """All subgroups of a group, ordered by inclusion.

    ``nodes[bottom]`` is the trivial subgroup and ``nodes[top]`` the whole
    group. ``up_masks[i]`` / ``down_masks[i]`` are bitmasks over node indices
    with j set iff nodes[i] <= nodes[j] (resp. >=).
    """

    def __init__(self, group: FiniteGroup, masks: list[int],
                 node_gens: Optional[dict[int, tuple[int, ...]]] = None):
        n = group.order
        order_key = lambda m: (m.bit_count(), f"{m:0{n}b}"[::-1])
        masks = sorted(masks, key=order_key)
        self.group = group
        self.masks: tuple[int, ...] = tuple(masks)
        self.nodes: tuple[ElementSet, ...] = tuple(ElementSet(group, m) for m in masks)
        self.index_of: dict[int, int] = {m: i for i, m in enumerate(masks)}
        self.bottom = 0
        self.top = len(masks) - 1
        L = len(masks)
        up = [0] * L
        down = [0] * L
        for i, mi in enumerate(masks):
            for j in range(i, L):
                if mi & ~masks[j] == 0:
                    up[i] |= 1 << j
                    down[j] |= 1 << i
        self.up_masks = tuple(up)
        self.down_masks = tuple(down)
        if node_gens is None:
            node_gens = {}
        self.node_gens: tuple[tuple[int, ...], ...] = tuple(
            node_gens.get(m) or group.subgroup_gens(m) for m in masks
        )
        self.all_nodes_mask = (1 << L) - 1
        self._chi: Optional[list[int]] = None
        self._join: dict[tuple[int, int], int] = {}
        self._join_table: Optional[list[list[int]]] = None
        self._meet_table: Optional[list[list[int]]] = None
        self._rerooted: dict[int, tuple] = {}
        self._normal_mask: Optional[int] = None
        self._subnormal_mask: Optional[int] = None

    def __len__(self):
        return len(self.masks)

    def __repr__(self):
        return f"SubgroupLattice({self.group.name}, nodes={len(self)})"

    def node_order(self, i: int) -> int:
        return self.masks[i].bit_count()

    def leq(self, a: int, b: int) -> bool:
        return bool(self.up_masks[a] >> b & 1)

    def meet(self, a: int, b: int) -> int:
        # the intersection of two subgroups is a subgroup, hence a node
        return self.index_of[self.masks[a] & self.masks[b]]

    def join(self, a: int, b: int) -> int:
        if a > b:
            a, b = b, a
        key = (a, b)
        hit = self._join.get(key)
        if hit is not None:
            return hit
        u = self.masks[a] | self.masks[b]
        idx = self.index_of.get(u)
        if idx is None:
            g = self.group
            m = g.closure_mask(self.node_gens[a] + self.node_gens[b])
            idx = self.index_of[m]
        self._join[key] = idx
        return idx

    def meet_table(self) -> list[list[int]]:
        if self._meet_table is None:
            L = len(self)
            self._meet_table = [[self.meet(i, j) for j in range(L)] for i in range(L)]
        return self._meet_table

    def join_table(self) -> list[list[int]]:
        if self._join_table is None:
            L = len(self)
            self._join_table = [[self.join(i, j) for j in range(L)] for i in range(L)]
        return self._join_table

    def chi_rows(self) -> list[int]:
        """Permutability bitmatrix: bit j of row i set iff nodes i and j permute.

        Permutability is decided by computing both raw product sets; when one
        node contains the other the product is the larger node on both sides,
        so those pairs are skipped.
        """
        if self._chi is None:
            g = self.group
            masks = self.masks
            L = len(masks)
            rows = [0] * L
            pm = g.product_mask
            for i in range(L):
                mi = masks[i]
                rows[i] |= 1 << i
                for j in range(i + 1, L):
                    mj = masks[j]
                    mm = mi & mj
                    if mm == mi or mm == mj:
                        ok = True
                    else:
                        ok = pm(mi, mj) == pm(mj, mi)
                    if ok:
                        rows[i] |= 1 << j
                        rows[j] |= 1 << i
            self._chi = rows
        return self._chi

    def rerooted(self, i: int):
        """Materialize node i as a standalone group with its own lattice.

        Returns (group, lattice, to_parent) where to_parent maps the child
        lattice's node masks back to masks over the parent group's elements.
        """
        hit = self._rerooted.get(i)
        if hit is not None:
            return hit
        sub = subgroup_group(self.group, self.masks[i])
        sub_lat = enumerate_subgroups(sub)
        elems = list(_bits(self.masks[i]))

        def to_parent(mask: int, _elems=tuple(elems)) -> int:
            out = 0
            for b in _bits(mask):
                out |= 1 << _elems[b]
            return out

        entry = (sub, sub_lat, to_parent)
        self._rerooted[i] = entry
        return entry


def enumerate_subgroups(group: FiniteGroup,
                        lattice_cap: int = DEFAULT_LATTICE_CAP) -> SubgroupLattice:
    """Enumerate the full subgroup lattice.

    Seeds with every cyclic subgroup, then repeatedly joins discovered
    subgroups with the cyclic seeds until nothing new appears. Every subgroup
    is a join of cyclic subgroups, so this saturation is complete; unions that
    were already examined are skipped via a memo on the union mask.
    """
    g = group
    gens_of: dict[int, tuple[int, ...]] = {1: ()}
    cyclic_masks: list[int] = [1]
    for x in range(1, g.order):
        m = g.cyclic_mask(x)
        if m not in gens_of:
            gens_of[m] = (x,)
            cyclic_masks.append(m)
    union_seen: set[int] = set()
    frontier = list(gens_of)
    while frontier:
        fresh: list[int] = []
        for am in frontier:
            agens = gens_of[am]
            for cm in cyclic_masks:
                u = am | cm
                if u == am or u in gens_of or u in union_seen:
                    continue
                union_seen.add(u)
                jgens = tuple(dict.fromkeys(agens + gens_of[cm]))
                jm = g.closure_mask(jgens)
                if jm not in gens_of:
                    gens_of[jm] = jgens
                    fresh.append(jm)
                    if len(gens_of) > lattice_cap:
                        raise LatticeCapError(
                            f"{g.name}: more than {lattice_cap} subgroups")
        frontier = fresh
    return SubgroupLattice(g, list(gens_of), gens_of)


def subgroup_masks_bruteforce(group: FiniteGroup) -> list[int]:
    """Independent power-set oracle: test every subset containing the identity.

    Exponential; intended for groups of order <= 16.
    """
    n = group.order
    out = []
    for m in range(1, 1 << n, 2):  # bit 0 (identity) always set
        if group.is_subgroup_mask(m):
            out.append(m)
    return out


class SublatticeSelection:
    """A tagged subset of lattice nodes (indices into the parent lattice)."""

    __slots__ = ("lattice", "kind", "members", "members_mask", "bounds_included")

    def __init__(self, lattice: SubgroupLattice, kind: str,
                 members: Iterable[int], bounds_included: bool = False):
        self.lattice = lattice
        self.kind = kind
        self.members = tuple(sorted(set(members)))
        mask = 0
        for i in self.members:
            mask |= 1 << i
        self.members_mask = mask
        self.bounds_included = bounds_included

    def __len__(self):
        return len(self.members)

    def __contains__(self, i: int):
        return bool(self.members_mask >> i & 1)

    def __repr__(self):
        return (f"SublatticeSelection({self.lattice.group.name}, {self.kind}, "
                f"{len(self.members)} nodes)")


def all_subgroups(lat: SubgroupLattice) -> SublatticeSelection:
    return SublatticeSelection(lat, "all", range(len(lat)))


def normal_subgroups(lat: SubgroupLattice) -> SublatticeSelection:
    """Nodes invariant under conjugation (checked on a generating set)."""
    if lat._normal_mask is None:
        g = lat.group
        gens = g.generating_set
        mask = 0
        for i, m in enumerate(lat.masks):
            if all(g.conjugate_mask(m, x) == m for x in gens):
                mask |= 1 << i
        lat._normal_mask = mask
    return SublatticeSelection(lat, "normal", _bits(lat._normal_mask))


def _is_subnormal_node(lat: SubgroupLattice, i: int) -> bool:
    # descending normal-closure chain K0 = G, K_{t+1} = <H^{K_t}>;
    # H is subnormal exactly when the chain bottoms out at H
    g = lat.group
    h = lat.masks[i]
    hgens = lat.node_gens[i]
    k = g.full_mask
    while True:
        if k == h:
            return True
        nc = g.normal_closure_mask(h, k, hgens)
        if nc == k:
            return False
        k = nc


def subnormal_subgroups(lat: SubgroupLattice) -> SublatticeSelection:
    if lat._subnormal_mask is None:
        normal = normal_subgroups(lat).members_mask
        mask = normal
        for i in range(len(lat)):
            if mask >> i & 1:
                continue
            if _is_subnormal_node(lat, i):
                mask |= 1 << i
        lat._subnormal_mask = mask
    return SublatticeSelection(lat, "subnormal", _bits(lat._subnormal_mask))


def maximal_subgroups(lat: SubgroupLattice, convention: str = RAW) -> SublatticeSelection:
    """Maximal subgroups, as a raw node set or closed under the lattice bounds.

    raw: nodes maximal among proper subgroups. closed: the raw set plus the
    meet of all raw members and the top, recorded via ``bounds_included``.
    """
    _check_convention(convention)
    if len(lat) == 1:
        raise ValueError("the trivial group has no maximal subgroups")
    top_bit = 1 << lat.top
    raw = [i for i in range(len(lat) - 1)
           if lat.up_masks[i] & ~(1 << i) & ~top_bit == 0]
    if convention == RAW:
        return SublatticeSelection(lat, "maximal-raw", raw)
    meet_all = lat.masks[lat.top]
    for i in raw:
        meet_all &= lat.masks[i]
    members = set(raw)
    members.add(lat.index_of[meet_all])
    members.add(lat.top)
    return SublatticeSelection(lat, "maximal-closed", members, bounds_included=True)


def sylow_subgroups(lat: SubgroupLattice) -> SublatticeSelection:
    """Nodes of full prime-power order p^v_p(|G|); empty for the trivial group."""
    g = lat.group
    sizes = {p ** e for p, e in prime_signature(g.order).factors}
    members = [i for i in range(len(lat)) if lat.node_order(i) in sizes]
    return SublatticeSelection(lat, "sylow", members)


def perp(lat: SubgroupLattice, s: SublatticeSelection) -> SublatticeSelection:
    """Nodes permuting with every member of ``s``; always holds bottom and top."""
    if s.lattice is not lat:
        raise ValueError("selection belongs to a different lattice")
    rows = lat.chi_rows()
    sm = s.members_mask
    members = [i for i in range(len(lat)) if rows[i] & sm == sm]
    return SublatticeSelection(lat, f"perp({s.kind})", members)


def custom_selection(lat: SubgroupLattice, members: Iterable[int]) -> SublatticeSelection:
    members = list(members)
    if not members:
        raise ValueError("custom selection must be nonempty")
    return SublatticeSelection(lat, "custom", members)


def is_modular_lattice(lat: SubgroupLattice) -> bool:
    """Modular law over all triples: X<=Z implies (X v (Y ^ Z)) = ((X v Y) ^ Z)."""
    mt = lat.meet_table()
    jt = lat.join_table()
    L = len(lat)
    for x in range(L):
        jx = jt[x]
        up = lat.up_masks[x]
        for z in _bits(up):
            mz = mt[z]
            for y in range(L):
                if jx[mz[y]] != mz[jx[y]]:
                    return False
    return True


def is_quasihamiltonian(lat: SubgroupLattice) -> bool:
    """Every pair of subgroups permutes (perp of the full lattice is full)."""
    full = lat.all_nodes_mask
    return all(row == full for row in lat.chi_rows())


def selection_meet_join_closed(lat: SubgroupLattice, s: SublatticeSelection) -> bool:
    """Diagnostic: is the selection closed under pairwise meet and join?"""
    for a in s.members:
        for b in s.members:
            if b < a:
                continue
            if lat.meet(a, b) not in s or lat.join(a, b) not in s:
                return False
    return True


def sylow_subset_of_maximal(lat: SubgroupLattice, convention: str = RAW) -> bool:
    """Diagnostic: whether every Sylow node is maximal (fails e.g. for S4)."""
    if len(lat) == 1:
        return True
    syl = sylow_subgroups(lat).members_mask
    mx = maximal_subgroups(lat, convention).members_mask
    return syl & ~mx == 0
