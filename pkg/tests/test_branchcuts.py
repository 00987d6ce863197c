import cmath
import math
import random

import pytest

from polycert import Branch, arg_nonneg, arg_principal, kth_root_branch, pow_int

PI = math.pi


class TestArgNonneg:
    def test_positive_real_axis(self):
        assert arg_nonneg(1 + 0j) == 0.0

    def test_negative_real_axis(self):
        assert arg_nonneg(-1 + 0j) == PI

    def test_negative_imaginary(self):
        # forced by the [0, 2*pi) convention
        assert arg_nonneg(-1j) == pytest.approx(3 * PI / 2, abs=1e-15)

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            arg_nonneg(0j)

    def test_nonfinite_rejected(self):
        with pytest.raises(ValueError):
            arg_nonneg(complex(float("nan"), 0))

    def test_range(self):
        rng = random.Random(1)
        for _ in range(2000):
            xi = complex(rng.uniform(-5, 5), rng.uniform(-5, 5))
            if xi == 0:
                continue
            theta = arg_nonneg(xi)
            assert 0.0 <= theta < 2 * PI


class TestArgPrincipal:
    def test_positive_real_axis(self):
        assert arg_principal(1 + 0j) == 0.0

    def test_negative_real_axis_is_minus_pi(self):
        # closed at -pi, open at pi
        assert arg_principal(-1 + 0j) == -PI

    def test_imaginary(self):
        assert arg_principal(1j) == pytest.approx(PI / 2, abs=1e-15)

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            arg_principal(0j)

    def test_range(self):
        rng = random.Random(2)
        for _ in range(2000):
            xi = complex(rng.uniform(-5, 5), rng.uniform(-5, 5))
            if xi == 0:
                continue
            theta = arg_principal(xi)
            assert -PI <= theta < PI


class TestKthRootBranch:
    def test_sqrt_minus_one_g1(self):
        # arg = pi halves to pi/2
        assert kth_root_branch(-1 + 0j, 2, Branch.G1) == pytest.approx(1j, abs=1e-15)

    def test_sqrt_minus_one_g2(self):
        # Arg = -pi halves to -pi/2
        assert kth_root_branch(-1 + 0j, 2, Branch.G2) == pytest.approx(-1j, abs=1e-15)

    def test_zero_extension(self):
        assert kth_root_branch(0j, 3, Branch.G1) == 0j

    def test_not_a_left_inverse(self):
        # right inverse only: g1(G(-1)) = g1(1) = 1 != -1
        composed = kth_root_branch(pow_int(-1 + 0j, 2), 2, Branch.G1)
        assert composed == 1.0
        assert composed != -1.0

    def test_right_inverse_law(self):
        rng = random.Random(3)
        for _ in range(3000):
            mag = 10.0 ** rng.uniform(-8, 8)
            xi = mag * cmath.exp(1j * rng.uniform(0, 2 * PI))
            k = rng.randint(1, 8)
            b = Branch.G1 if rng.random() < 0.5 else Branch.G2
            eta = kth_root_branch(xi, k, b)
            assert abs(pow_int(eta, k) - xi) <= 1e-12 * abs(xi)

    def test_branch_angle_ranges(self):
        rng = random.Random(4)
        for _ in range(3000):
            xi = cmath.exp(1j * rng.uniform(0, 2 * PI)) * 10.0 ** rng.uniform(-3, 3)
            k = rng.randint(1, 8)
            a1 = arg_nonneg(kth_root_branch(xi, k, Branch.G1))
            assert 0.0 <= a1 < 2 * PI / k + 1e-12
            a2 = arg_principal(kth_root_branch(xi, k, Branch.G2))
            assert -PI / k - 1e-12 <= a2 < PI / k + 1e-12

    def test_modulus_law(self):
        rng = random.Random(5)
        for _ in range(2000):
            mag = 10.0 ** rng.uniform(-8, 8)
            xi = mag * cmath.exp(1j * rng.uniform(0, 2 * PI))
            k = rng.randint(1, 8)
            expected = math.exp(math.log(mag) / k)
            got = abs(kth_root_branch(xi, k, Branch.G1))
            assert abs(got - expected) <= 1e-14 * expected

    @pytest.mark.parametrize("k", [2, 3, 5])
    def test_g1_jumps_exactly_on_positive_axis(self, k):
        eps = 1e-12
        for x in (0.5, 1.0, 7.3):
            above = kth_root_branch(complex(x, eps), k, Branch.G1)
            below = kth_root_branch(complex(x, -eps), k, Branch.G1)
            assert abs(above - below) > 0.1  # jump across the cut
            # continuous across the negative axis
            above = kth_root_branch(complex(-x, eps), k, Branch.G1)
            below = kth_root_branch(complex(-x, -eps), k, Branch.G1)
            assert abs(above - below) < 1e-10

    @pytest.mark.parametrize("k", [2, 3, 5])
    def test_g2_jumps_exactly_on_negative_axis(self, k):
        eps = 1e-12
        for x in (0.5, 1.0, 7.3):
            above = kth_root_branch(complex(-x, eps), k, Branch.G2)
            below = kth_root_branch(complex(-x, -eps), k, Branch.G2)
            assert abs(above - below) > 0.1
            above = kth_root_branch(complex(x, eps), k, Branch.G2)
            below = kth_root_branch(complex(x, -eps), k, Branch.G2)
            assert abs(above - below) < 1e-10

    def test_bad_k(self):
        with pytest.raises(ValueError):
            kth_root_branch(1 + 0j, 0, Branch.G1)


class TestPowInt:
    def test_i_squared(self):
        assert pow_int(1j, 2) == -1 + 0j

    def test_two_cubed(self):
        assert pow_int(2 + 0j, 3) == 8 + 0j

    def test_exact_for_k_one(self):
        z = complex(0.1234567891234567, -9.87654321e8)
        assert pow_int(z, 1) == z

    def test_matches_builtin(self):
        rng = random.Random(6)
        for _ in range(500):
            z = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
            k = rng.randint(1, 10)
            assert pow_int(z, k) == pytest.approx(z**k, rel=1e-12, abs=1e-300)
