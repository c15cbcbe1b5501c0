import math
from fractions import Fraction

import pytest

from permlat import groups as G
from permlat import lattice as L
from permlat import moebius as M
from permlat.groups import _bits


def lat_of(spec):
    return L.enumerate_subgroups(G.make_named(spec))


class TestMoebiusTable:
    def test_prime_cyclic(self):
        for spec in ["C2", "C3", "C5", "C7"]:
            assert M.moebius_table(lat_of(spec)).bottom_value == -1

    def test_prime_square_chain(self):
        for spec in ["C4", "C9", "C25"]:
            assert M.moebius_table(lat_of(spec)).bottom_value == 0

    def test_s3(self):
        mt = M.moebius_table(lat_of("S3"))
        assert mt.bottom_value == 3
        assert mt[lat_of("S3").top] == 1

    def test_known_values(self):
        for spec, value in [("A4", 4), ("Q8", 0), ("C12", 0), ("D6", -6),
                            ("S4", -12), ("Z:2,2", 2), ("Z:3,3", 3)]:
            assert M.moebius_table(lat_of(spec)).bottom_value == value, spec

    @pytest.mark.parametrize("spec", ["C12", "Z:2,4", "S3", "D4", "Q8", "A4",
                                      "D6", "S4", "S3xC5"])
    def test_interval_sum_recursion(self, spec):
        # for every proper H: the mu values over [H, G] sum to zero
        lat = lat_of(spec)
        mt = M.moebius_table(lat)
        for h in range(len(lat)):
            if h == lat.top:
                continue
            assert sum(mt[k] for k in _bits(lat.up_masks[h])) == 0

    def test_deterministic(self):
        assert M.moebius_table(lat_of("S4")).values == \
            M.moebius_table(lat_of("S4")).values


class TestSymmetricPredictions:
    def test_prime_case(self):
        assert M.predicted_mu_symmetric(2) == -1
        assert M.predicted_mu_symmetric(3) == 3
        assert M.predicted_mu_symmetric(5) == 60
        assert M.predicted_mu_symmetric(7) == 2520

    def test_power_of_two_case(self):
        assert M.predicted_mu_symmetric(4) == -12
        assert M.predicted_mu_symmetric(8) == -math.factorial(8) // 2
        assert M.predicted_mu_symmetric(16) == -math.factorial(16) // 2

    def test_twice_odd_prime_case(self):
        assert M.predicted_mu_symmetric(6) == -720          # 5 prime, 3 = 3 mod 4
        assert M.predicted_mu_symmetric(10) == -math.factorial(10) // 2
        assert M.predicted_mu_symmetric(14) == -math.factorial(14)  # 13 prime, 7 = 3 mod 4
        assert M.predicted_mu_symmetric(22) == math.factorial(22) // 2
        assert M.predicted_mu_symmetric(26) == -math.factorial(26) // 2

    def test_uncovered_cases(self):
        assert M.predicted_mu_symmetric(1) is None
        assert M.predicted_mu_symmetric(9) is None
        assert M.predicted_mu_symmetric(12) is None
        assert M.predicted_mu_symmetric(15) is None

    def test_recursion_matches_prediction(self):
        for spec, n in [("S3", 3), ("S4", 4), ("S5", 5)]:
            mu = M.moebius_table(lat_of(spec)).bottom_value
            assert mu == M.predicted_mu_symmetric(n)

    def test_conjecture_values(self):
        assert M.conjectured_mu_symmetric(3) == 3
        assert M.conjectured_mu_symmetric(4) == -12
        assert M.conjectured_mu_symmetric(5) == 60
        assert M.conjectured_mu_symmetric(6) == -720  # doubled automorphisms
        assert M.conjectured_mu_symmetric(2) == Fraction(-1, 2)  # degenerate
        with pytest.raises(ValueError):
            M.conjectured_mu_symmetric(1)


class TestMuBoundCheck:
    def test_catalog_groups_do_not_qualify(self):
        for spec in ["S3", "A4", "Q8", "C12", "S4"]:
            res = M.mu_matching_bound_check(lat_of(spec), "raw", "relaxed")
            assert not res.hypothesis_satisfied, spec
            assert res.bound is None and res.holds is None

    def test_gate_reports_mu_mismatch(self):
        res = M.mu_matching_bound_check(lat_of("A4"), "raw", "strict")
        assert any("mu(1,G)" in r for r in res.reasons)
        assert res.context["mu_bottom"] == "4"
        assert res.context["lattice_size"] == "10"
