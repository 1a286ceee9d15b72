import pytest

from rank49 import lfun


class TestConductorAndSign:
    @pytest.mark.parametrize("d,expected", [(1, 49), (5, 1225), (15, 176400), (2, 3136)])
    def test_conductor(self, d, expected):
        assert lfun.conductor_twist(d) == expected

    def test_conductor_rejects_multiples_of_7(self):
        with pytest.raises(ValueError):
            lfun.conductor_twist(14)

    def test_conductor_rejects_non_squarefree(self):
        with pytest.raises(ValueError):
            lfun.conductor_twist(12)

    @pytest.mark.parametrize("d,expected", [(1, 1), (-1, -1), (15, 1), (-3, -1)])
    def test_sign(self, d, expected):
        assert lfun.sign_twist(d) == expected


class TestLValue:
    def test_untwisted(self):
        r = lfun.l_value(1, 1e-4)
        assert abs(r.value - 0.9666558528) < 1e-4
        assert not r.declared_zero
        assert r.tail_bound < 1e-4

    def test_d15(self):
        assert abs(lfun.l_value(15, 5e-3).value - 1.9967) < 5e-3

    def test_d29(self):
        assert abs(lfun.l_value(29, 5e-3).value - 0.7180) < 5e-3

    def test_negative_d_declared_zero(self):
        r = lfun.l_value(-3, 1e-4)
        assert r.declared_zero and r.value == 0.0 and r.sign == -1
        assert r.tail_bound == 0.0

    def test_tolerance_floor(self):
        with pytest.raises(ValueError):
            lfun.l_value(1, 1e-9)

    @pytest.mark.parametrize("d", [1, 5, 15, 29])
    def test_convergence_within_tail_bound(self, d):
        coarse = lfun.l_value(d, 1e-4)
        fine = lfun.l_value(d, 1e-7)
        assert fine.terms_used > coarse.terms_used
        assert abs(fine.value - coarse.value) <= coarse.tail_bound

    def test_vanishing_twist_is_small(self):
        # d = 11 has equal counts, so the central value vanishes; the series
        # must come out below the declared zero-detection threshold.
        r = lfun.l_value(11, 1e-4)
        assert abs(r.value) < 1e-3


class TestCFactor:
    @pytest.mark.parametrize("d,expected", [(1, 1), (5, 2), (2, 1), (7, 1), (3, 2)])
    def test_values(self, d, expected):
        assert lfun.c_factor(d) == expected


class TestEulerFactorIdentity:
    @pytest.mark.parametrize("p", [2, 3, 7])
    def test_small_primes(self, p):
        assert lfun.euler_factor_identity(p, 100)

    def test_all_primes_to_20(self):
        for p in (2, 3, 5, 7, 11, 13, 17, 19):
            assert lfun.euler_factor_identity(p, 400)

    def test_limit_too_small(self):
        with pytest.raises(ValueError):
            lfun.euler_factor_identity(11, 100)


class TestWaldspurger:
    def test_identical_arguments(self):
        assert lfun.waldspurger_ratio_residual(1, 1, 2) == 0.0

    def test_pair_15_71(self):
        assert lfun.waldspurger_ratio_residual(15, 71, 2, 1e-3) < 1e-2

    def test_pair_5_13(self):
        assert lfun.waldspurger_ratio_residual(5, 13, 1, 1e-3) < 1e-2

    def test_square_class_mismatch_rejected(self):
        with pytest.raises(ValueError):
            lfun.waldspurger_ratio_residual(1, 5, 2)
        with pytest.raises(ValueError):
            lfun.waldspurger_ratio_residual(3, 31, 3)

    def test_bad_index_rejected(self):
        with pytest.raises(ValueError):
            lfun.waldspurger_ratio_residual(15, 71, 4)
