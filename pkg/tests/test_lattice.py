import pytest
from hypothesis import given, settings, strategies as st

from permlat import groups as G
from permlat import lattice as L
from permlat.degrees import sd

SMALL_SPECS = ["C1", "C2", "C3", "C5", "C12", "Z:2,2", "Z:2,4", "Z:2,2,2",
               "Z:3,3", "S3", "D4", "Q8", "A4", "D6"]


def lat_of(spec):
    return L.enumerate_subgroups(G.make_named(spec))


def nodes_of_order(lat, k):
    return [i for i in range(len(lat)) if lat.node_order(i) == k]


class TestEnumeration:
    @pytest.mark.parametrize("spec", [s for s in SMALL_SPECS
                                      if G.make_named(s).order <= 16])
    def test_matches_powerset_oracle(self, spec):
        g = G.make_named(spec)
        lat = L.enumerate_subgroups(g)
        assert sorted(lat.masks) == sorted(L.subgroup_masks_bruteforce(g))

    def test_known_counts(self):
        for spec, count in [("C1", 1), ("S3", 6), ("Z:2,2", 5), ("Z:2,4", 8),
                            ("A4", 10), ("D4", 10), ("Q8", 6), ("S4", 30),
                            ("S5", 156), ("A5", 59)]:
            assert len(lat_of(spec)) == count, spec

    def test_deterministic_ordering(self):
        a = lat_of("S4")
        b = lat_of("S4")
        assert a.masks == b.masks

    def test_bottom_and_top(self):
        lat = lat_of("D6")
        assert lat.node_order(lat.bottom) == 1
        assert lat.node_order(lat.top) == 12

    def test_sorted_by_cardinality(self):
        lat = lat_of("S4")
        sizes = [lat.node_order(i) for i in range(len(lat))]
        assert sizes == sorted(sizes)

    def test_lattice_cap(self):
        with pytest.raises(L.LatticeCapError):
            L.enumerate_subgroups(G.make_named("S4"), lattice_cap=10)

    def test_every_node_is_subgroup(self):
        g = G.make_named("S4")
        lat = L.enumerate_subgroups(g)
        assert all(g.is_subgroup_mask(m) for m in lat.masks)


class TestMeetJoin:
    def test_bounded_lattice_identities(self):
        lat = lat_of("S4")
        for x in range(0, len(lat), 5):
            assert lat.meet(x, lat.top) == x
            assert lat.join(x, lat.bottom) == x

    def test_s3_joins_and_meets(self):
        lat = lat_of("S3")
        twos = nodes_of_order(lat, 2)
        three = nodes_of_order(lat, 3)[0]
        assert lat.join(twos[0], twos[1]) == lat.top
        assert lat.meet(three, twos[0]) == lat.bottom

    def test_meet_join_closed(self):
        lat = lat_of("A4")
        for i in range(len(lat)):
            for j in range(len(lat)):
                assert 0 <= lat.meet(i, j) < len(lat)
                assert 0 <= lat.join(i, j) < len(lat)

    def test_containment_consistency(self):
        lat = lat_of("D6")
        for i in range(len(lat)):
            for j in range(len(lat)):
                assert lat.leq(i, j) == (lat.masks[i] & ~lat.masks[j] == 0)


class TestSelections:
    def test_normal_abelian(self):
        lat = lat_of("C12")
        assert L.normal_subgroups(lat).members == tuple(range(len(lat)))

    def test_normal_s3_a4(self):
        assert len(L.normal_subgroups(lat_of("S3"))) == 3
        lat = lat_of("A4")
        normals = L.normal_subgroups(lat)
        assert sorted(lat.node_order(i) for i in normals.members) == [1, 4, 12]

    def test_subnormal_nilpotent_is_everything(self):
        for spec in ["Q8", "D4", "C12"]:
            lat = lat_of(spec)
            assert len(L.subnormal_subgroups(lat)) == len(lat)

    def test_subnormal_s3_a4(self):
        assert len(L.subnormal_subgroups(lat_of("S3"))) == 3
        lat = lat_of("A4")
        sn = L.subnormal_subgroups(lat)
        assert len(sn) == 6
        assert sorted(lat.node_order(i) for i in sn.members) == [1, 2, 2, 2, 4, 12]

    def test_normal_subset_subnormal(self):
        for spec in SMALL_SPECS + ["S4"]:
            lat = lat_of(spec)
            n = L.normal_subgroups(lat).members_mask
            sn = L.subnormal_subgroups(lat).members_mask
            assert n & ~sn == 0
            assert sn >> lat.bottom & 1 and sn >> lat.top & 1

    def test_maximal_raw_examples(self):
        lat = lat_of("S3")
        raw = L.maximal_subgroups(lat, "raw")
        assert sorted(lat.node_order(i) for i in raw.members) == [2, 2, 2, 3]
        assert lat.top not in raw
        assert len(L.maximal_subgroups(lat_of("Z:2,2"), "raw")) == 3

    def test_maximal_closed_prime_cyclic(self):
        for spec in ["C2", "C3", "C5"]:
            lat = lat_of(spec)
            closed = L.maximal_subgroups(lat, "closed")
            assert closed.members == (lat.bottom, lat.top)
            assert closed.bounds_included

    def test_maximal_raw_bottom_iff_prime_order(self):
        for spec, expected in [("C5", True), ("C12", False), ("S3", False)]:
            lat = lat_of(spec)
            raw = L.maximal_subgroups(lat, "raw")
            assert (lat.bottom in raw) == expected

    def test_maximal_trivial_group_errors(self):
        with pytest.raises(ValueError):
            L.maximal_subgroups(lat_of("C1"), "raw")

    def test_bad_convention(self):
        with pytest.raises(ValueError):
            L.maximal_subgroups(lat_of("S3"), "open")

    def test_sylow(self):
        lat = lat_of("S3")
        assert sorted(lat.node_order(i)
                      for i in L.sylow_subgroups(lat).members) == [2, 2, 2, 3]
        lat = lat_of("A4")
        assert sorted(lat.node_order(i)
                      for i in L.sylow_subgroups(lat).members) == [3, 3, 3, 3, 4]
        lat = lat_of("Q8")
        assert L.sylow_subgroups(lat).members == (lat.top,)

    def test_sylow_trivial_group_empty(self):
        assert len(L.sylow_subgroups(lat_of("C1"))) == 0


class TestPerp:
    def test_perp_of_normal_is_everything(self):
        for spec in SMALL_SPECS + ["S4"]:
            lat = lat_of(spec)
            assert L.perp(lat, L.normal_subgroups(lat)).members == \
                tuple(range(len(lat)))

    def test_perp_all_abelian(self):
        lat = lat_of("Z:2,4")
        assert len(L.perp(lat, L.all_subgroups(lat))) == len(lat)

    def test_perp_all_s3(self):
        lat = lat_of("S3")
        p = L.perp(lat, L.all_subgroups(lat))
        assert sorted(lat.node_order(i) for i in p.members) == [1, 3, 6]

    def test_perp_antitone(self):
        lat = lat_of("S4")
        small = L.custom_selection(lat, [lat.bottom, lat.top])
        big = L.all_subgroups(lat)
        p_small = L.perp(lat, small).members_mask
        p_big = L.perp(lat, big).members_mask
        assert p_big & ~p_small == 0

    def test_perp_contains_bounds(self):
        for spec in ["S3", "A4", "S4", "D6"]:
            lat = lat_of(spec)
            p = L.perp(lat, L.all_subgroups(lat))
            assert lat.bottom in p and lat.top in p


class TestPredicates:
    def test_modular_values(self):
        # L(S3) is the height-two diamond M4, which satisfies the modular law
        for spec, expected in [("C12", True), ("Q8", True), ("S3", True),
                               ("Z:2,2", True), ("A4", False), ("D4", False),
                               ("D6", False), ("S4", False)]:
            assert L.is_modular_lattice(lat_of(spec)) is expected, spec

    def test_quasihamiltonian(self):
        for spec, expected in [("C12", True), ("Z:2,2,2", True), ("Q8", True),
                               ("S3", False), ("A4", False), ("D4", False)]:
            assert L.is_quasihamiltonian(lat_of(spec)) is expected, spec

    def test_quasihamiltonian_iff_sd_one(self):
        for spec in SMALL_SPECS + ["S4"]:
            lat = lat_of(spec)
            assert L.is_quasihamiltonian(lat) == (sd(lat) == 1), spec

    def test_small_lattice_implies_cyclic(self):
        for spec in SMALL_SPECS + ["S4", "S5", "S3xC5"]:
            g = G.make_named(spec)
            lat = L.enumerate_subgroups(g)
            if len(lat) <= 3:
                assert g.is_cyclic, spec

    def test_perp_meet_join_closure_diagnostic(self):
        # reported as a diagnostic, not asserted as always true
        lat = lat_of("S3")
        p = L.perp(lat, L.all_subgroups(lat))
        assert L.selection_meet_join_closed(lat, p) is True

    def test_sylow_not_always_maximal(self):
        assert L.sylow_subset_of_maximal(lat_of("S3"), "raw") is True
        assert L.sylow_subset_of_maximal(lat_of("S4"), "raw") is False


class TestRerooting:
    def test_rerooted_lattice_counts(self):
        lat = lat_of("S4")
        for i in nodes_of_order(lat, 12):  # A4 inside S4
            _, child, to_parent = lat.rerooted(i)
            assert len(child) == 10
            for m in child.masks:
                parent = to_parent(m)
                assert parent & ~lat.masks[i] == 0
                assert lat.group.is_subgroup_mask(parent)


class TestFittingAgainstLattice:
    @pytest.mark.parametrize("spec", ["S3", "A4", "D6", "S4", "Q8", "C12"])
    def test_fitting_contains_every_nilpotent_normal_node(self, spec):
        g = G.make_named(spec)
        lat = L.enumerate_subgroups(g)
        fit = G.fitting_subgroup(g)
        for i in L.normal_subgroups(lat).members:
            child, _, _ = lat.rerooted(i)
            if child.is_nilpotent:
                assert lat.masks[i] & ~fit.mask == 0, (spec, i)
        assert G.subgroup_group(g, fit).is_nilpotent


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=1, max_value=48))
def test_cyclic_subgroup_count_is_divisor_count(n):
    lat = L.enumerate_subgroups(G.make_named(f"C{n}"))
    divisors = sum(1 for d in range(1, n + 1) if n % d == 0)
    assert len(lat) == divisors
