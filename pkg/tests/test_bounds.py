from fractions import Fraction

import pytest

from permlat import bounds as B
from permlat import groups as G
from permlat import lattice as L
from permlat.degrees import sd, spd

GRID = [B.Rank2AbelianShape(p, a1, a2)
        for p in (2, 3) for a1 in (1, 2, 3) for a2 in (1, 2, 3)
        if a1 <= a2 and p ** (a1 + a2) <= 720]


def lat_of(spec):
    return L.enumerate_subgroups(G.make_named(spec))


def node_of_order(lat, k, skip=0):
    found = [i for i in range(len(lat)) if lat.node_order(i) == k]
    return found[skip]


class TestCountingFormulas:
    def test_rank2_examples(self):
        assert B.subgroup_count_rank2(B.Rank2AbelianShape(2, 1, 1)) == 5
        assert B.subgroup_count_rank2(B.Rank2AbelianShape(2, 1, 2)) == 8
        assert B.subgroup_count_rank2(B.Rank2AbelianShape(3, 1, 1)) == 6

    @pytest.mark.parametrize("shape", GRID, ids=str)
    def test_rank2_formula_matches_enumeration(self, shape):
        spec = f"Z:{shape.p ** shape.alpha1},{shape.p ** shape.alpha2}"
        lat = lat_of(spec)
        assert B.subgroup_count_rank2(shape) == len(lat)

    def test_rank1_degenerate_counts_divisors(self):
        # alpha1 = 0 degenerates to the cyclic chain Z_{p^a}
        for p, a in [(2, 1), (2, 3), (3, 2), (5, 1)]:
            shape = B.Rank2AbelianShape(p, 0, a)
            assert B.subgroup_count_rank2(shape) == a + 1

    def test_maximal_count_formula(self):
        assert B.maximal_count_elementary(5, 1) == 1
        assert B.maximal_count_elementary(2, 2) == 3
        assert B.maximal_count_elementary(2, 3) == 7
        assert B.maximal_count_elementary(3, 2) == 4

    def test_maximal_count_matches_raw_selection(self):
        for spec, (p, k) in [("Z:2,2", (2, 2)), ("Z:2,2,2", (2, 3)),
                             ("Z:3,3", (3, 2))]:
            raw = L.maximal_subgroups(lat_of(spec), "raw")
            assert len(raw) == B.maximal_count_elementary(p, k)

    def test_shape_validation(self):
        with pytest.raises(ValueError):
            B.Rank2AbelianShape(4, 1, 1)
        with pytest.raises(ValueError):
            B.Rank2AbelianShape(2, 2, 1)
        with pytest.raises(ValueError):
            B.Rank2AbelianShape(2, 0, 0)


class TestBoundPolynomials:
    def test_spd_numerator_forms(self):
        forms = B.spd_bound_poly(B.Rank2AbelianShape(2, 1, 1))
        assert forms.derivation == 19
        assert forms.printed == 13
        assert forms.gap == 6
        assert B.spd_bound_poly(B.Rank2AbelianShape(3, 1, 1)).derivation == 28

    @pytest.mark.parametrize("shape", GRID, ids=str)
    def test_derivation_form_identity(self, shape):
        forms = B.spd_bound_poly(shape)
        assert forms.derivation == (shape.p + 1) * B.subgroup_count_rank2(shape) + 4

    @pytest.mark.parametrize("shape", GRID, ids=str)
    def test_expansion_gap_pinned(self, shape):
        # regression pin: the printed expansion trails the derivation chain by
        # exactly (a1 + a2 + 1) p / (p - 1)^2 at every grid point
        assert B.spd_bound_poly(shape).gap == B.spd_bound_poly_gap(shape)

    def test_sd_numerator(self):
        assert B.sd_bound_poly(B.Rank2AbelianShape(2, 1, 1)).derivation == 29
        assert B.sd_bound_poly(B.Rank2AbelianShape(2, 1, 2)).derivation == 68
        assert B.sd_bound_poly(B.Rank2AbelianShape(3, 1, 1)).derivation == 40

    @pytest.mark.parametrize("shape", GRID, ids=str)
    def test_sd_numerator_forms_agree(self, shape):
        forms = B.sd_bound_poly(shape)
        assert forms.derivation == forms.printed
        assert forms.derivation == B.subgroup_count_rank2(shape) ** 2 + 4


class TestShapeDetection:
    def test_rank2_groups(self):
        assert B.detect_rank2_shape(G.make_named("Z:2,2")) == \
            B.Rank2AbelianShape(2, 1, 1)
        assert B.detect_rank2_shape(G.make_named("Z:2,4")) == \
            B.Rank2AbelianShape(2, 1, 2)
        assert B.detect_rank2_shape(G.make_named("Z:9,27")) == \
            B.Rank2AbelianShape(3, 2, 3)

    def test_rank1_needs_flag(self):
        c8 = G.make_named("C8")
        assert B.detect_rank2_shape(c8) is None
        assert B.detect_rank2_shape(c8, allow_rank1=True) == \
            B.Rank2AbelianShape(2, 0, 3)

    def test_rejections(self):
        assert B.detect_rank2_shape(G.make_named("C1")) is None
        assert B.detect_rank2_shape(G.make_named("S3")) is None
        assert B.detect_rank2_shape(G.make_named("Z:2,2,2")) is None
        assert B.detect_rank2_shape(G.make_named("C12"), allow_rank1=True) is None


class TestFactorConditions:
    def test_s3_conditions_fail(self):
        lat = lat_of("S3")
        a3 = node_of_order(lat, 3)
        b = node_of_order(lat, 2)
        cond = B.check_factor_conditions(lat, a3, b, "raw")
        assert not cond.a1  # the order-2 factor is not subnormal upstairs
        assert any("sn(H)" in d for d in cond.details)

    def test_a4_conditions_fail_for_order3_factor(self):
        lat = lat_of("A4")
        v4 = node_of_order(lat, 4)
        c3 = node_of_order(lat, 3)
        cond = B.check_factor_conditions(lat, v4, c3, "raw")
        assert not cond.a1

    def test_elementary_abelian_m_inclusion_fails_both_conventions(self):
        # a complement of order 2 in Z2^3 is too small to be maximal, so the
        # maximal-set inclusion of condition a1 fails under both conventions
        lat = lat_of("Z:2,2,2")
        g = lat.group
        n_idx = node_of_order(lat, 4)
        nm = lat.masks[n_idx]
        h_idx = next(i for i in range(len(lat))
                     if lat.node_order(i) == 2
                     and g.product_mask(nm, lat.masks[i]) == g.full_mask)
        for conv in ("raw", "closed"):
            cond = B.check_factor_conditions(lat, n_idx, h_idx, conv)
            assert not cond.a1, conv
            assert not cond.a2, conv

    def test_elementary_abelian_rank2_qualifies_closed(self):
        # inside Z3 x Z3 the order-3 factors are maximal and the Frattini
        # subgroup is trivial, so the closed convention satisfies both
        lat = lat_of("Z:3,3")
        g = lat.group
        n_idx = node_of_order(lat, 3)
        h_idx = next(i for i in range(len(lat))
                     if lat.node_order(i) == 3 and i != n_idx
                     and g.product_mask(lat.masks[n_idx], lat.masks[i])
                     == g.full_mask)
        cond = B.check_factor_conditions(lat, n_idx, h_idx, "closed")
        assert cond.a1 and cond.a2
        cond_raw = B.check_factor_conditions(lat, n_idx, h_idx, "raw")
        assert not (cond_raw.a1 or cond_raw.a2)

    def test_misuse_raises(self):
        lat = lat_of("S3")
        b1 = node_of_order(lat, 2)
        b2 = node_of_order(lat, 2, skip=1)
        with pytest.raises(ValueError):
            B.check_factor_conditions(lat, b1, b2, "raw")  # N not normal
        a3 = node_of_order(lat, 3)
        with pytest.raises(ValueError):
            B.check_factor_conditions(lat, a3, lat.bottom, "raw")  # NH != G


class TestRank2BoundChecks:
    def test_lemma2_a4(self):
        lat = lat_of("A4")
        res = B.sd_rank2_bound_check(lat, node_of_order(lat, 4))
        assert res.hypothesis_satisfied
        assert res.bound == Fraction(29, 200)
        assert res.actual == Fraction(16, 25)
        assert res.holds and res.slack == Fraction(16, 25) - Fraction(29, 200)

    def test_lemma2_d4(self):
        lat = lat_of("D4")
        strict = [B.sd_rank2_bound_check(lat, i)
                  for i in range(len(lat)) if lat.node_order(i) == 4]
        satisfied = [r for r in strict if r.hypothesis_satisfied]
        assert len(satisfied) == 2  # the two Klein subgroups
        for r in satisfied:
            assert r.bound == Fraction(29, 200) and r.holds
        relaxed = [B.sd_rank2_bound_check(lat, i, allow_rank1=True)
                   for i in range(len(lat)) if lat.node_order(i) == 4]
        assert sum(r.hypothesis_satisfied for r in relaxed) == 3  # C4 joins in

    def test_lemma2_gates(self):
        lat = lat_of("A4")
        res = B.sd_rank2_bound_check(lat, node_of_order(lat, 3))
        assert not res.hypothesis_satisfied  # order-3 nodes are not normal
        res = B.sd_rank2_bound_check(lat, lat.top)
        assert not res.hypothesis_satisfied  # index 1 is not prime

    def test_lemma1_qualifies_on_z3_squared_closed(self):
        lat = lat_of("Z:3,3")
        g = lat.group
        n_idx = node_of_order(lat, 3)
        h_idx = next(i for i in range(len(lat))
                     if lat.node_order(i) == 3 and i != n_idx
                     and g.product_mask(lat.masks[n_idx], lat.masks[i])
                     == g.full_mask)
        res = B.spd_rank2_bound_check(lat, n_idx, h_idx, "closed",
                                      allow_rank1=True)
        assert res.hypothesis_satisfied
        assert res.bound == Fraction(1, 6) and res.actual == 1 and res.holds
        strict = B.spd_rank2_bound_check(lat, n_idx, h_idx, "closed",
                                         allow_rank1=False)
        assert not strict.hypothesis_satisfied

    def test_lemma1_hypothesis_failing_reported(self):
        lat = lat_of("A4")
        res = B.spd_rank2_bound_check(lat, node_of_order(lat, 4),
                                      node_of_order(lat, 3), "raw")
        assert not res.hypothesis_satisfied
        assert res.bound is None and res.holds is None
        assert any("a1" in r for r in res.reasons)

    def test_cor26_instances(self):
        ls3 = lat_of("S3")
        res = B.abelian_prime_index_sd_check(ls3, node_of_order(ls3, 3))
        assert res.actual == 30 and res.bound == 9 and res.holds
        la4 = lat_of("A4")
        res = B.abelian_prime_index_sd_check(la4, node_of_order(la4, 4))
        assert res.actual == 64 and res.bound == 36 and res.holds

    def test_cor26_cyclic_equality_side(self):
        lat = lat_of("C6")
        n_idx = node_of_order(lat, 3)
        res = B.abelian_prime_index_sd_check(lat, n_idx)
        assert res.hypothesis_satisfied
        assert res.actual == len(lat) ** 2  # sd = 1 for a cyclic group
        assert res.holds

    def test_cor26_gates(self):
        lat = lat_of("S4")
        res = B.abelian_prime_index_sd_check(lat, node_of_order(lat, 12))
        assert not res.hypothesis_satisfied  # A4 is not abelian


class TestCauchyAndDecomposition:
    def test_cauchy_sd_s3_instance(self):
        lat = lat_of("S3")
        spd_res, sd_res = B.cauchy_bound_checks(
            lat, node_of_order(lat, 3), node_of_order(lat, 2), "raw")
        assert sd_res.hypothesis_satisfied
        assert sd_res.bound == Fraction(1, 81)      # (1/9)^2
        assert sd_res.actual == Fraction(25, 36)    # (5/6)^2
        assert sd_res.holds
        assert not spd_res.hypothesis_satisfied     # factor conditions fail

    def test_cauchy_sd_trivial_n(self):
        lat = lat_of("S3")
        _, sd_res = B.cauchy_bound_checks(lat, lat.bottom, lat.top, "raw")
        assert sd_res.hypothesis_satisfied
        assert sd_res.holds  # degenerate bound sqrt(sum_G)/|L|^2

    def test_cauchy_spd_qualifies_z3_squared_closed(self):
        lat = lat_of("Z:3,3")
        g = lat.group
        n_idx = node_of_order(lat, 3)
        h_idx = next(i for i in range(len(lat))
                     if lat.node_order(i) == 3 and i != n_idx
                     and g.product_mask(lat.masks[n_idx], lat.masks[i])
                     == g.full_mask)
        spd_res, sd_res = B.cauchy_bound_checks(lat, n_idx, h_idx, "closed")
        assert spd_res.hypothesis_satisfied and spd_res.holds
        assert sd_res.hypothesis_satisfied and sd_res.holds

    def test_decomposition_bound_z3_squared_closed(self):
        lat = lat_of("Z:3,3")
        g = lat.group
        n_idx = node_of_order(lat, 3)
        h_idx = next(i for i in range(len(lat))
                     if lat.node_order(i) == 3 and i != n_idx
                     and g.product_mask(lat.masks[n_idx], lat.masks[i])
                     == g.full_mask)
        res = B.decomposition_bound_check(lat, n_idx, h_idx, "closed")
        assert res.hypothesis_satisfied and res.holds
        # the complement is isomorphic to the quotient, so both restricted
        # counts agree
        assert res.context["count_h"] == res.context["count_quotient"]

    def test_decomposition_gates(self):
        lat = lat_of("S3")
        res = B.decomposition_bound_check(lat, node_of_order(lat, 3),
                                          node_of_order(lat, 2), "raw")
        assert not res.hypothesis_satisfied

    @pytest.mark.parametrize("spec", ["S3", "A4", "D4", "D6", "S4", "Z:3,3",
                                      "Z:2,2,2", "S3xC5", "A4xC5"])
    @pytest.mark.parametrize("conv", ["raw", "closed"])
    def test_factorization_sweeps_sound(self, spec, conv):
        lat = lat_of(spec)
        for res in B.sweep_factorization_bounds(lat, conv):
            if res.hypothesis_satisfied:
                assert res.holds, (spec, conv, res.claim, res.context)
            else:
                assert res.bound is None and res.holds is None

    @pytest.mark.parametrize("conv", ["raw", "closed"])
    @pytest.mark.parametrize("rank1", [False, True])
    def test_rank2_sweeps_sound(self, conv, rank1):
        for spec in ["S3", "A4", "D4", "Q8", "C12", "Z:2,4", "Z:3,3",
                     "Z:2,2,2", "D6", "S4"]:
            lat = lat_of(spec)
            for res in B.sweep_rank2_bounds(lat, conv, rank1):
                if res.hypothesis_satisfied:
                    assert res.holds, (spec, conv, rank1, res.context)


class TestFittingCentralizerCheck:
    def test_a4_strict_qualifies(self):
        lat = lat_of("A4")
        check = B.fitting_centralizer_check(lat, "raw", "strict")
        assert check.hypotheses
        assert check.shape == B.Rank2AbelianShape(2, 1, 1)
        assert check.part_ii.hypothesis_satisfied and check.part_ii.holds
        assert check.part_ii.bound == Fraction(29, 200)
        # every order-3 complement fails the factor conditions
        assert len(check.part_i) == 4
        assert all(not r.hypothesis_satisfied for r in check.part_i)

    def test_s3_strict_vs_relaxed(self):
        lat = lat_of("S3")
        strict = B.fitting_centralizer_check(lat, "raw", "strict")
        assert not strict.hypotheses
        relaxed = B.fitting_centralizer_check(lat, "raw", "relaxed")
        assert relaxed.hypotheses
        assert relaxed.shape == B.Rank2AbelianShape(3, 0, 1)
        assert relaxed.part_ii.bound == Fraction(1, 9)
        assert relaxed.part_ii.actual == Fraction(5, 6)
        assert relaxed.part_ii.holds

    def test_s4_fails_on_index(self):
        check = B.fitting_centralizer_check(lat_of("S4"), "raw", "relaxed")
        assert not check.hypotheses
        assert any("not prime" in r for r in check.reasons)

    def test_a5_fails_on_solvability(self):
        lat = L.enumerate_subgroups(G.make_named("A5"))
        check = B.fitting_centralizer_check(lat, "raw", "relaxed")
        assert not check.hypotheses
        assert any("solvable" in r for r in check.reasons)

    def test_nilpotent_group_fails_on_index_one(self):
        check = B.fitting_centralizer_check(lat_of("Z:2,4"), "raw", "strict")
        assert not check.hypotheses  # centralizer is the whole group

    def test_bad_reading(self):
        with pytest.raises(ValueError):
            B.fitting_centralizer_check(lat_of("S3"), "raw", "loose")


class TestBoundResultInvariants:
    def test_holds_iff_nonnegative_slack(self):
        lats = [lat_of(s) for s in ["S3", "A4", "Z:3,3", "D4"]]
        for lat in lats:
            for conv in ("raw", "closed"):
                results = B.sweep_factorization_bounds(lat, conv) + \
                    B.sweep_rank2_bounds(lat, conv, True)
                for res in results:
                    if res.hypothesis_satisfied:
                        assert res.holds == (res.slack >= 0)
                        assert res.holds == (res.actual >= res.bound)
                    else:
                        assert res.reasons
