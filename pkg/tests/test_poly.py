import random

import pytest

from polycert import (
    LocallyConstantError,
    Polynomial,
    TailSeries,
    extract_tail,
    tail_majorant,
)

from oracles import horner, random_polynomial


class TestPolynomial:
    def test_eval_root(self):
        f = Polynomial((1, 0, 1))  # z^2 + 1
        assert f(1j) == 0j

    def test_eval_constant_term(self):
        assert Polynomial((1, 0, 1))(0j) == 1 + 0j

    def test_eval_affine(self):
        assert Polynomial((2, 3))(1 + 0j) == 5 + 0j

    def test_eval_with_derivative(self):
        rng = random.Random(7)
        for _ in range(200):
            coeffs = random_polynomial(rng)
            f = Polynomial(tuple(coeffs))
            z = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
            val, der = f.eval_with_derivative(z)
            assert val == pytest.approx(horner(f.coeffs, z), rel=1e-12, abs=1e-12)
            dcoeffs = [(j + 1) * c for j, c in enumerate(f.coeffs[1:])]
            assert der == pytest.approx(horner(dcoeffs, z), rel=1e-12, abs=1e-12)

    def test_trailing_zeros_stripped(self):
        f = Polynomial((1, 2, 0, 0))
        assert f.coeffs == (1 + 0j, 2 + 0j)
        assert f.degree == 1

    def test_zero_polynomial_is_constant(self):
        assert Polynomial((0, 0, 0)).degree == 0

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            Polynomial(())

    def test_nonfinite_rejected(self):
        with pytest.raises(ValueError):
            Polynomial((1, float("inf")))


class TestTaylorShift:
    def test_square_about_one(self):
        shifted = Polynomial((0, 0, 1)).taylor_shift(1)
        assert shifted.coeffs == (1 + 0j, 2 + 0j, 1 + 0j)

    def test_identity_shift(self):
        shifted = Polynomial((1, 0, 1)).taylor_shift(0)
        assert shifted.coeffs == (1 + 0j, 0j, 1 + 0j)

    def test_cube_about_minus_one(self):
        # binomial expansion, cross-checked by sampling in test below
        shifted = Polynomial((0, 0, 0, 1)).taylor_shift(-1)
        assert shifted.coeffs == (-1 + 0j, 3 + 0j, -3 + 0j, 1 + 0j)

    def test_shift_matches_evaluation(self):
        rng = random.Random(8)
        for _ in range(100):
            f = Polynomial(tuple(random_polynomial(rng)))
            z0 = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
            shifted = f.taylor_shift(z0)
            assert shifted.coeffs[0] == pytest.approx(f(z0), rel=1e-10, abs=1e-12)
            for _ in range(10):
                xi = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
                want = f(z0 + xi)
                got = shifted(xi)
                assert abs(got - want) <= 1e-10 * (1 + abs(want))

    def test_round_trip(self):
        rng = random.Random(9)
        for _ in range(100):
            f = Polynomial(tuple(random_polynomial(rng)))
            z0 = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
            back = f.taylor_shift(z0).taylor_shift(-z0)
            for a, b in zip(back.coeffs, f.coeffs):
                assert abs(a - b) <= 1e-10 * (1 + abs(b))


class TestExtractTail:
    def test_simple_square(self):
        tail = extract_tail(Polynomial((1, 0, 1)))
        assert tail.k == 2
        assert tail.lead == 1 + 0j
        assert tail.coeffs == ()

    def test_with_tail(self):
        tail = extract_tail(Polynomial((0, 2, 0, 1)))
        assert tail.k == 1
        assert tail.lead == 2 + 0j
        assert tail.coeffs == (0j, 1 + 0j)  # h(xi) = xi^2

    def test_constant_raises(self):
        with pytest.raises(LocallyConstantError):
            extract_tail(Polynomial((5,)))

    def test_threshold_masks_dust(self):
        tail = extract_tail(Polynomial((1, 1e-15, 1)), mult_threshold=1e-12)
        assert tail.k == 2


class TestTailMajorant:
    def test_empty_tail(self):
        tail = TailSeries(k=2, lead=1 + 0j, coeffs=())
        assert tail_majorant(tail, 1.0) == (0.0, 0.0)

    def test_linear_tail(self):
        tail = TailSeries(k=1, lead=1 + 0j, coeffs=(1 + 0j,))
        assert tail_majorant(tail, 0.5) == (0.5, 1.0)

    def test_quadratic_tail(self):
        # h = 2 xi^2: sup over |xi| <= 0.5 is 0.5, derivative sup is 2
        tail = TailSeries(k=1, lead=1 + 0j, coeffs=(0j, 2 + 0j))
        h, hp = tail_majorant(tail, 0.5)
        assert h == pytest.approx(0.5, abs=1e-15)
        assert hp == pytest.approx(2.0, abs=1e-15)

    def test_majorant_dominates_sampled_values(self):
        rng = random.Random(10)
        for _ in range(50):
            n = rng.randint(0, 6)
            coeffs = tuple(
                complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(n)
            )
            tail = TailSeries(k=1, lead=1 + 0j, coeffs=coeffs)
            rho = rng.uniform(0.1, 2.0)
            h_bound, hp_bound = tail_majorant(tail, rho)
            for _ in range(20):
                import cmath

                xi = rho * cmath.exp(2j * 3.141592653589793 * rng.random())
                assert abs(tail.value(xi)) <= h_bound + 1e-12
                dval = sum(
                    (i + 1) * c * xi**i for i, c in enumerate(coeffs)
                )
                assert abs(dval) <= hp_bound + 1e-12

    def test_slacks_widen_bounds(self):
        tail = TailSeries(k=1, lead=1 + 0j, coeffs=(1 + 0j,), h_slack=0.25, hp_slack=0.5)
        h, hp = tail_majorant(tail, 0.5)
        assert h == pytest.approx(0.75)
        assert hp == pytest.approx(1.5)

    def test_nonpositive_rho_rejected(self):
        tail = TailSeries(k=1, lead=1 + 0j, coeffs=())
        with pytest.raises(ValueError):
            tail_majorant(tail, 0.0)


class TestDeflate:
    def test_factor_out_i(self):
        q = Polynomial((1, 0, 1)).deflate(1j)
        assert q.coeffs == (1j, 1 + 0j)  # z + i

    def test_factor_out_one(self):
        q = Polynomial((-1, 0, 1)).deflate(1.0)
        assert q.coeffs == (1 + 0j, 1 + 0j)

    def test_cubic(self):
        q = Polynomial((-1, 0, 0, 1)).deflate(1.0)
        assert q.coeffs == (1 + 0j, 1 + 0j, 1 + 0j)

    def test_deflation_consistency(self):
        rng = random.Random(11)
        for _ in range(50):
            from oracles import expand_from_roots, separated_random_roots

            roots = separated_random_roots(rng, rng.randint(2, 6))
            f = Polynomial(tuple(expand_from_roots(roots)))
            assert abs(f(roots[0])) <= 1e-10
            q = f.deflate(roots[0])
            rebuilt = [0j] * (len(q.coeffs) + 1)
            for i, c in enumerate(q.coeffs):
                rebuilt[i + 1] += c
                rebuilt[i] -= roots[0] * c
            scale = max(abs(c) for c in f.coeffs)
            for a, b in zip(rebuilt, f.coeffs):
                assert abs(a - b) <= 1e-8 * scale

    def test_constant_rejected(self):
        with pytest.raises(ValueError):
            Polynomial((3,)).deflate(0)
