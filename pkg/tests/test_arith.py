import pytest
from hypothesis import given, strategies as st

from rank49.arith import (
    Character,
    chi28,
    chi_twist,
    fundamental_discriminant,
    is_fundamental_discriminant,
    is_prime,
    is_squarefree,
    kronecker,
    odd_real_primitive_characters,
    primes_up_to,
    same_padic_square_class,
    squarefree_decompose,
)


class TestKronecker:
    @pytest.mark.parametrize(
        "a,n,expected",
        [
            (-7, 2, 1),
            (5, 1, 1),
            (3, 7, -1),
            (-5, -1, -1),
            (1, 0, 1),
            (-1, 0, 1),
            (2, 0, 0),
            (3, 2, -1),
            (7, 2, 1),
            (4, 6, 0),
            (-7, 7, 0),
        ],
    )
    def test_values(self, a, n, expected):
        assert kronecker(a, n) == expected

    def test_bottom_two_convention(self):
        for a in range(-40, 41):
            if a % 2 == 0:
                assert kronecker(a, 2) == 0
            elif a % 8 in (1, 7):
                assert kronecker(a, 2) == 1
            else:
                assert kronecker(a, 2) == -1

    def test_bottom_minus_one_convention(self):
        for a in range(-50, 51):
            assert kronecker(a, -1) == (1 if a >= 0 else -1)

    def test_multiplicative_exhaustive_small(self):
        # Bottom multiplicativity needs m, n nonzero: (a/0) = 1 for a = -1,
        # yet (-1/m) = -1 for m < 0, so zero bottom arguments break it.
        rng = range(-30, 31)
        for a in rng:
            for m in rng:
                for n in rng:
                    if m and n:
                        assert kronecker(a, m * n) == kronecker(a, m) * kronecker(a, n)

    def test_top_multiplicative_exhaustive_small(self):
        rng = range(-30, 31)
        for a in rng:
            for b in rng:
                for n in rng:
                    assert kronecker(a * b, n) == kronecker(a, n) * kronecker(b, n)

    @given(
        st.integers(min_value=-200, max_value=200).filter(lambda x: x != 0),
        st.integers(min_value=-200, max_value=200).filter(lambda x: x != 0),
        st.integers(min_value=-200, max_value=200),
    )
    def test_multiplicative_in_both_arguments(self, m, n, a):
        assert kronecker(a, m * n) == kronecker(a, m) * kronecker(a, n)
        assert kronecker(a * m, n) == kronecker(a, n) * kronecker(m, n)

    def test_against_legendre_oracle(self):
        # Legendre symbol by Euler's criterion for odd primes up to 100.
        for p in primes_up_to(100):
            if p == 2:
                continue
            for a in range(1, 101):
                e = pow(a, (p - 1) // 2, p)
                legendre = 0 if e == 0 else (1 if e == 1 else -1)
                assert kronecker(a, p) == legendre

    def test_periodicity_for_discriminant_labels(self):
        # (D/.) is periodic mod |D| for fundamental D.
        for D in (-7, 28, 5, -4, 8, -8, 12):
            for n in range(1, 200):
                assert kronecker(D, n) == kronecker(D, n + abs(D))


class TestSquarefreeDecompose:
    @pytest.mark.parametrize(
        "n,expected",
        [(21952, (7, 56)), (1, (1, 1)), (-12, (-3, 2)), (49, (1, 7)), (-1, (-1, 1))],
    )
    def test_values(self, n, expected):
        assert squarefree_decompose(n) == expected

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            squarefree_decompose(0)

    @given(st.integers(min_value=-10**6, max_value=10**6).filter(lambda n: n != 0))
    def test_reconstruction(self, n):
        s, f = squarefree_decompose(n)
        assert s * f * f == n
        assert is_squarefree(s)
        assert (s > 0) == (n > 0)


class TestFundamentalDiscriminant:
    @pytest.mark.parametrize("d,expected", [(5, 5), (15, 60), (-1, -4), (-7, -7), (2, 8)])
    def test_values(self, d, expected):
        assert fundamental_discriminant(d) == expected

    def test_rejects_non_squarefree(self):
        with pytest.raises(ValueError):
            fundamental_discriminant(12)

    def test_results_are_fundamental(self):
        for d in range(-60, 61):
            if d and is_squarefree(d):
                assert is_fundamental_discriminant(fundamental_discriminant(d))


class TestPadicSquareClass:
    @pytest.mark.parametrize(
        "d1,d2,p,expected",
        [(15, 71, 2, True), (1, 5, 2, False), (3, 31, 7, True), (2, 8, 2, True), (2, 4, 2, False)],
    )
    def test_values(self, d1, d2, p, expected):
        assert same_padic_square_class(d1, d2, p) is expected

    def test_composite_p_rejected(self):
        with pytest.raises(ValueError):
            same_padic_square_class(3, 5, 6)

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            same_padic_square_class(0, 5, 2)

    @pytest.mark.parametrize("p", [2, 7])
    def test_equivalence_relation(self, p):
        sample = [d for d in range(-40, 41) if d]
        for d in sample:
            assert same_padic_square_class(d, d, p)
        import random

        rng = random.Random(7)
        pairs = [(rng.choice(sample), rng.choice(sample)) for _ in range(300)]
        for d1, d2 in pairs:
            assert same_padic_square_class(d1, d2, p) == same_padic_square_class(
                d2, d1, p
            )
        for _ in range(300):
            d1, d2, d3 = (rng.choice(sample) for _ in range(3))
            if same_padic_square_class(d1, d2, p) and same_padic_square_class(d2, d3, p):
                assert same_padic_square_class(d1, d3, p)

    def test_square_ratio_is_detected(self):
        # d and d*k^2 are in the same class for every prime.
        for p in (2, 3, 7):
            for d in (3, 5, -6, 14):
                for k in (2, 3, 5):
                    assert same_padic_square_class(d, d * k * k, p)


class TestCharacter:
    def test_chi28_values(self):
        chi = chi28()
        assert chi(1) == 1
        assert chi(2) == 0
        assert chi(7) == 0
        assert chi(3) == 1
        assert chi(5) == -1
        assert chi(-1) == -1

    def test_vanishes_on_shared_factors(self):
        for d in (5, 15, -1, 2, -26):
            chi = chi_twist(d)
            for n in range(1, 300):
                from math import gcd

                if gcd(n, chi.modulus) > 1:
                    assert chi(n) == 0

    def test_completely_multiplicative(self):
        chi = chi28()
        for m in range(-30, 31):
            for n in range(-30, 31):
                assert chi(m * n) == chi(m) * chi(n)

    def test_ratio_reduces_fraction(self):
        chi = chi28()
        # 33/15 = 11/5 in lowest terms; both evaluations must agree.
        assert chi.ratio(33, 15) == chi(11) * chi(5)
        assert chi.ratio(15, 71) == chi(15) * chi(71)

    def test_odd_primitive_characters(self):
        assert [c.label for c in odd_real_primitive_characters(7)] == [-7]
        assert odd_real_primitive_characters(1) == []
        assert odd_real_primitive_characters(5) == []
        assert [c.label for c in odd_real_primitive_characters(4)] == [-4]


def test_primes_up_to():
    assert primes_up_to(20) == [2, 3, 5, 7, 11, 13, 17, 19]
    assert primes_up_to(1) == []


def test_is_prime():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
