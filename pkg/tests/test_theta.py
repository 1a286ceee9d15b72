import random

import pytest

from rank49 import fixtures
from rank49.theta import (
    FormValidationError,
    level_and_character,
    representation_count,
    theta_series,
    transform,
    validate,
)

M4 = [[56, 0, 14], [0, 2, 0], [14, 0, 28]]
M7 = [[98, 0, 0], [0, 4, 2], [0, 2, 8]]


class TestValidate:
    def test_accepts_m4(self):
        form = validate(M4)
        assert form.entries == (56, 0, 14, 2, 0, 28)

    def test_rejects_indefinite(self):
        with pytest.raises(FormValidationError) as err:
            validate([[2, 0, 0], [0, 2, 0], [0, 0, -2]])
        assert err.value.reason == "not-positive-definite"

    def test_rejects_odd_diagonal(self):
        with pytest.raises(FormValidationError) as err:
            validate([[1, 0, 0], [0, 2, 0], [0, 0, 2]])
        assert err.value.reason == "odd-diagonal"

    def test_rejects_asymmetric(self):
        with pytest.raises(FormValidationError) as err:
            validate([[2, 1, 0], [0, 2, 0], [0, 0, 2]])
        assert err.value.reason == "asymmetric"

    def test_rejects_wrong_shape(self):
        with pytest.raises(FormValidationError) as err:
            validate([[2, 0], [0, 2]])
        assert err.value.reason == "shape"

    def test_all_bundled_matrices_validate(self):
        assert len(fixtures.matrices()) == 15  # M1..M13, A1, A2


class TestRepresentationCount:
    def test_a1_at_7(self):
        assert representation_count(fixtures.matrix("A1"), 7) == 2

    def test_zero_always_once(self):
        for name in ("M1", "M4", "M7", "A2"):
            assert representation_count(fixtures.matrix(name), 0) == 1

    def test_m4_at_1(self):
        assert representation_count(validate(M4), 1) == 2

    def test_m7_at_1(self):
        assert representation_count(validate(M7), 1) == 0

    def test_value_helper(self):
        form = validate(M4)
        assert form.value((0, 1, 0)) == 1
        assert form.value((1, 0, 0)) == 28
        assert form.value((1, 0, 1)) == 28 + 14 + 14

    def test_even_counts_for_positive_n(self):
        for name in ("M1", "M2", "M12", "A2"):
            form = fixtures.matrix(name)
            for n in range(1, 101):
                assert representation_count(form, n) % 2 == 0

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            representation_count(validate(M4), -1)


class TestThetaSeries:
    def test_matches_displayed_a2(self):
        series = theta_series(fixtures.matrix("A2"), 42)
        assert series.agrees_through(fixtures.series("theta_A2"), 42)

    def test_matches_displayed_a1(self):
        series = theta_series(fixtures.matrix("A1"), 42)
        assert series.agrees_through(fixtures.series("theta_A1"), 42)

    def test_two_code_paths_agree(self):
        rng = random.Random(49)
        for name in ("M1", "M3", "M5", "M9", "M13"):
            form = fixtures.matrix(name)
            series = theta_series(form, 120)
            for n in rng.sample(range(121), 25):
                assert series.coeff(n) == representation_count(form, n)

    def test_substitution_invariance_example(self):
        # (x, y, z) -> (-x, -y, z) is unimodular, theta is unchanged.
        m1 = fixtures.matrix("M1")
        flipped = transform(m1, [[-1, 0, 0], [0, -1, 0], [0, 0, 1]])
        assert theta_series(flipped, 42) == theta_series(m1, 42)

    def test_gl3_invariance_random(self):
        rng = random.Random(196)
        form = fixtures.matrix("M2")
        reference = theta_series(form, 50)
        for _ in range(20):
            u = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
            # random product of elementary shears and signed swaps
            for _ in range(6):
                kind = rng.randrange(3)
                i, j = rng.sample(range(3), 2)
                if kind == 0:
                    for r in range(3):
                        u[r][j] += rng.choice((-1, 1)) * u[r][i]
                elif kind == 1:
                    for r in range(3):
                        u[r][i], u[r][j] = u[r][j], u[r][i]
                else:
                    for r in range(3):
                        u[r][i] = -u[r][i]
            changed = transform(form, u)
            assert theta_series(changed, 50) == reference


class TestLevelAndCharacter:
    def test_m6(self):
        assert level_and_character(fixtures.matrix("M6")).level == 196

    def test_identity_scaled(self):
        assert level_and_character(validate([[2, 0, 0], [0, 2, 0], [0, 0, 2]])).level == 4

    def test_m4_character(self):
        info = level_and_character(validate(M4))
        assert info.character_label == 8 * 2744 == 21952
        assert info.character_kernel == 7

    def test_all_bundled_levels_divide_196(self):
        for i in range(1, 14):
            info = level_and_character(fixtures.matrix(f"M{i}"))
            assert 196 % info.level == 0
            assert info.character_kernel == 7

    def test_level_definition_minimal(self):
        # N*A^-1 integral and even-diagonal, and minimal with that property.
        from fractions import Fraction

        for name in ("M1", "M4", "M7", "M12"):
            form = fixtures.matrix(name)
            det = form.determinant()
            adj = form.adjugate()
            level = level_and_character(form).level

            def admissible(N):
                for i in range(3):
                    for j in range(3):
                        v = Fraction(N * adj[i][j], det)
                        if v.denominator != 1:
                            return False
                        if i == j and v.numerator % 2:
                            return False
                return True

            assert admissible(level)
            assert not any(admissible(n) for n in range(1, level) if level % n == 0)
