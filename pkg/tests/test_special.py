"""Gamma-family scaffolding and principal-power contracts."""

import cmath
import math

import numpy as np
import pytest

from besselquad.errors import BranchError, PoleError
from besselquad.special import (
    beta_fn,
    gamma_fn,
    nonpositive_int_or_none,
    principal_pow,
    principal_pow_array,
    recip_gamma,
)


class TestGammaValues:
    def test_factorial(self):
        np.testing.assert_allclose(gamma_fn(5), 24.0, rtol=1e-14)

    def test_half(self):
        np.testing.assert_allclose(gamma_fn(0.5), math.sqrt(math.pi), rtol=1e-14)

    def test_recip_roundtrip_complex(self):
        s = 2.5 + 1.0j
        np.testing.assert_allclose(recip_gamma(s) * gamma_fn(s), 1.0, atol=1e-12)

    def test_pole_raises(self):
        for n in (0, -1, -7):
            with pytest.raises(PoleError):
                gamma_fn(n)

    def test_near_pole_is_large_but_defined(self):
        assert abs(gamma_fn(-3 + 1e-8)) > 1e6


class TestRecipGamma:
    def test_exact_zeros(self):
        """1/Gamma vanishes exactly (not approximately) at 0, -1, -2, ..."""
        for n in range(21):
            assert recip_gamma(-n) == 0.0

    def test_unit(self):
        assert recip_gamma(1) == pytest.approx(1.0, rel=1e-14)

    def test_half(self):
        np.testing.assert_allclose(recip_gamma(0.5), 1.0 / math.sqrt(math.pi), rtol=1e-13)

    def test_accuracy_contract_against_mpmath(self):
        """Relative error <= 1e-13 over the |s| <= 30 disk (both gamma_fn
        and recip_gamma), checked against 40-digit reference values."""
        mp = pytest.importorskip("mpmath")
        mp.mp.dps = 40
        rng = np.random.default_rng(7)
        r = 30.0 * np.sqrt(rng.uniform(size=800))
        ph = rng.uniform(0.0, 2.0 * math.pi, size=800)
        worst_g = worst_r = 0.0
        for s in r * np.exp(1j * ph):
            s = complex(s)
            if nonpositive_int_or_none(s) is not None:
                continue
            ref = complex(mp.gamma(mp.mpc(s.real, s.imag)))
            worst_g = max(worst_g, abs(gamma_fn(s) - ref) / abs(ref))
            worst_r = max(worst_r, abs(recip_gamma(s) - 1.0 / ref) * abs(ref))
        assert worst_g <= 1e-13
        assert worst_r <= 1e-13


class TestGammaProperties:
    def test_functional_equation(self):
        """Gamma(s+1) = s Gamma(s) on a random sample away from poles."""
        rng = np.random.default_rng(42)
        count = 0
        while count < 2000:
            s = complex(rng.uniform(-20, 20), rng.uniform(-20, 20))
            if abs(s) > 20:
                continue
            near = min(abs(s + n) for n in range(0, 22)) if s.real < 1 else 1.0
            if near <= 0.1 or min(abs(s + 1 + n) for n in range(0, 22)) <= 0.1:
                continue
            lhs = gamma_fn(s + 1)
            np.testing.assert_allclose(lhs, s * gamma_fn(s), rtol=1e-12)
            count += 1

    def test_reciprocal_product(self):
        rng = np.random.default_rng(3)
        count = 0
        while count < 2000:
            s = complex(rng.uniform(-20, 20), rng.uniform(-20, 20))
            if abs(s) > 20:
                continue
            if s.real < 1 and min(abs(s + n) for n in range(0, 22)) <= 0.1:
                continue
            np.testing.assert_allclose(recip_gamma(s) * gamma_fn(s), 1.0, atol=1e-12)
            count += 1


class TestBeta:
    def test_ones(self):
        np.testing.assert_allclose(beta_fn(1, 1), 1.0, rtol=1e-14)

    def test_two_three(self):
        np.testing.assert_allclose(beta_fn(2, 3), 1.0 / 12.0, rtol=1e-13)

    def test_half_half(self):
        np.testing.assert_allclose(beta_fn(0.5, 0.5), math.pi, rtol=1e-13)

    def test_pole_in_any_factor(self):
        with pytest.raises(PoleError):
            beta_fn(0, 1)
        with pytest.raises(PoleError):
            beta_fn(1, -2)
        with pytest.raises(PoleError):
            beta_fn(1.5, -1.5)  # a+b = 0


class TestPrincipalPow:
    def test_sqrt_of_minus_one_is_i(self):
        """The negative real axis carries arg = +pi, so (-1)^(1/2) = +i."""
        np.testing.assert_allclose(principal_pow(-1, 0.5), 1j, atol=1e-15)

    def test_sqrt_four(self):
        np.testing.assert_allclose(principal_pow(4, 0.5), 2.0, rtol=1e-14)

    def test_zero_base_positive_exponent(self):
        assert principal_pow(0, 2 + 3j) == 0

    def test_zero_base_zero_exponent(self):
        assert principal_pow(0, 0) == 1

    def test_zero_base_bad_exponent(self):
        with pytest.raises(BranchError):
            principal_pow(0, -1)
        with pytest.raises(BranchError):
            principal_pow(0, 1j)

    def test_negative_zero_imag_lands_on_upper_cut(self):
        """-1 - 0j is normalised onto the arg = +pi side."""
        np.testing.assert_allclose(
            principal_pow(complex(-1.0, -0.0), 0.5), 1j, atol=1e-15
        )

    def test_integer_powers_match_repeated_multiplication(self):
        rng = np.random.default_rng(11)
        for _ in range(300):
            x = rng.uniform(0.05, 9.0)
            k = int(rng.integers(0, 9))
            direct = 1.0
            for _ in range(k):
                direct *= x
            np.testing.assert_allclose(principal_pow(x, k), direct, rtol=1e-14)

    def test_array_version_matches_scalar(self):
        rng = np.random.default_rng(5)
        base = rng.normal(size=64) + 1j * rng.normal(size=64)
        exponent = 0.7 - 0.2j
        got = principal_pow_array(base, exponent)
        want = np.array([principal_pow(b, exponent) for b in base])
        np.testing.assert_allclose(got, want, rtol=1e-14)
