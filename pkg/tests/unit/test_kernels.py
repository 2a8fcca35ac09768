"""Unit tests for the elementary kernels."""

import cmath
import math

import mpmath
import numpy as np
import pytest

from hurwitzlommel.controls import QuadratureSpec
from hurwitzlommel.errors import BranchError, DomainError, NumericalOverflow, PoleError
from hurwitzlommel.kernels import (
    bessel_j,
    gamma,
    hyp0f1,
    hyp1f2,
    integrate_semi_infinite,
    log_gamma,
    polylog_sum,
    rgamma,
    sigma_divisor,
    sigma_table,
    sinpi,
)
from hurwitzlommel.kernels.divisor import divisors
from hurwitzlommel.kernels.quadrature import exponential_tail
from hurwitzlommel.kernels.values import ensure_finite, to_complex


class TestGamma:
    """Tests for gamma, log_gamma and rgamma."""

    @pytest.mark.parametrize("z, expected", [
        (0.5, math.sqrt(math.pi)),
        (1.0, 1.0),
        (5.0, 24.0),
        (-0.5, -2.0 * math.sqrt(math.pi)),
        (1.5, 0.5 * math.sqrt(math.pi)),
    ])
    def test_known_values(self, z, expected):
        assert gamma(z) == pytest.approx(expected, rel=1e-13)

    def test_reflection(self):
        """Gamma(z) Gamma(1-z) = pi / sin(pi z)"""
        z = 0.3 + 0.4j
        assert gamma(z) * gamma(1 - z) == pytest.approx(math.pi / cmath.sin(math.pi * z), rel=1e-11)

    def test_duplication(self):
        """Gamma(z) Gamma(z + 1/2) = 2^(1-2z) sqrt(pi) Gamma(2z)"""
        z = 1.7 - 0.6j
        expected = 2 ** (1 - 2 * z) * math.sqrt(math.pi) * gamma(2 * z)
        assert gamma(z) * gamma(z + 0.5) == pytest.approx(expected, rel=1e-11)

    @pytest.mark.parametrize("z", [0, -1, -7.0])
    def test_poles_raise(self, z):
        with pytest.raises(PoleError, match="pole"):
            gamma(z)

    def test_reciprocal_vanishes_at_poles(self):
        assert rgamma(-3) == 0
        assert rgamma(4.0) == pytest.approx(1.0 / 6.0, rel=1e-13)
        assert rgamma(-2.5) == pytest.approx(-15.0 / (8.0 * math.sqrt(math.pi)), rel=1e-13)

    def test_reciprocal_far_up_the_line(self):
        """1/Gamma(1/5 + 300i) is about 1e205, well inside the double range"""
        z = 0.2 + 300j
        assert rgamma(z) == pytest.approx(complex(mpmath.rgamma(z)), rel=1e-9)
        assert rgamma(z.conjugate()) == pytest.approx(complex(mpmath.rgamma(z.conjugate())), rel=1e-9)

    def test_reciprocal_out_of_range(self):
        with pytest.raises(NumericalOverflow, match="double range"):
            rgamma(0.2 + 600j)

    def test_log_gamma_large_argument(self):
        """log Gamma stays finite where Gamma overflows"""
        assert log_gamma(10.0) == pytest.approx(math.log(362880.0), rel=1e-13)
        assert log_gamma(500.0).real == pytest.approx(math.lgamma(500.0), rel=1e-13)

    def test_sinpi_exact_at_integers(self):
        assert sinpi(3.0) == 0
        assert sinpi(0.5) == pytest.approx(1.0, abs=1e-16)


class TestValues:
    """Tests for argument coercion."""

    def test_bool_rejected(self):
        with pytest.raises(TypeError, match="real or complex"):
            to_complex(True, "s")

    def test_string_rejected(self):
        with pytest.raises(TypeError):
            to_complex("1.5", "s")

    def test_non_finite_result(self):
        with pytest.raises(NumericalOverflow):
            ensure_finite(complex(math.inf, 0.0), "value")


class TestHypergeometric:
    """Tests for the 0F1 and 1F2 series."""

    def test_hyp0f1_sine(self):
        """0F1(; 3/2; -x^2/4) = sin(x)/x"""
        x = 2.7
        assert hyp0f1(1.5, -x * x / 4).value == pytest.approx(math.sin(x) / x, rel=1e-13)

    def test_hyp1f2_reduces_to_hyp0f1(self):
        """1F2(a; a, b; z) = 0F1(; b; z)"""
        x = 4.1
        result = hyp1f2(1.0, 1.0, 1.5, -x * x / 4)
        assert result.value == pytest.approx(math.sin(x) / x, rel=1e-12)
        assert result.terms_used > 0

    def test_cancellation_is_reported(self):
        """Alternating series at large |z| report the digits they lose"""
        small = hyp1f2(1.0, 1.0, 1.5, -1.0)
        large = hyp1f2(1.0, 1.0, 1.5, -400.0)
        assert large.cancellation_estimate > small.cancellation_estimate


class TestBessel:
    """Tests for the Bessel function of the first kind."""

    def test_half_order_closed_form(self):
        z = 2.3
        assert bessel_j(0.5, z) == pytest.approx(math.sqrt(2 / (math.pi * z)) * math.sin(z), rel=1e-14)
        assert bessel_j(-0.5, z) == pytest.approx(math.sqrt(2 / (math.pi * z)) * math.cos(z), rel=1e-14)

    def test_integer_order(self):
        assert bessel_j(0, 1.0) == pytest.approx(0.7651976865579666, rel=1e-13)
        assert bessel_j(-1, 1.0) == pytest.approx(-0.44005058574493355, rel=1e-13)

    def test_order_zero_near_its_first_root(self):
        assert abs(bessel_j(0, 2.404825557695773)) < 1e-14
        assert bessel_j(0.0, 5.0) == pytest.approx(-0.17759677131433830, rel=1e-12)

    def test_branch_cut(self):
        with pytest.raises(BranchError):
            bessel_j(0.3, -2.0)


class TestDivisor:
    """Tests for divisor sums."""

    def test_divisors_sorted(self):
        assert divisors(12) == (1, 2, 3, 4, 6, 12)
        assert divisors(1) == (1,)

    @pytest.mark.parametrize("s, n, expected", [
        (0, 6, 4),
        (1, 6, 12),
        (2, 4, 21),
        (1, 1, 1),
        (-1, 6, 2.0),
    ])
    def test_sigma_values(self, s, n, expected):
        assert sigma_divisor(s, n) == pytest.approx(expected, rel=1e-14)

    def test_table_matches_direct(self):
        table = sigma_table(1.5, 30)
        for n in (1, 7, 12, 30):
            assert table[n] == pytest.approx(sigma_divisor(1.5, n), rel=1e-13)

    def test_non_integer_rejected(self):
        with pytest.raises(DomainError, match="positive integer"):
            sigma_divisor(1, 2.5)


class TestPolylogSum:
    """Tests for sum z^n / n^w on the unit circle."""

    def test_at_one_is_zeta(self):
        assert polylog_sum(1, 2).value == pytest.approx(math.pi ** 2 / 6, rel=1e-13)

    def test_alternating_harmonic(self):
        """sum (-1)^n / n = -log 2"""
        assert polylog_sum(-1, 1).value == pytest.approx(-math.log(2.0), rel=1e-12)

    def test_inside_disk(self):
        """sum z^n / n = -log(1 - z)"""
        assert polylog_sum(0.5, 1).value == pytest.approx(math.log(2.0), rel=1e-12)

    def test_conditionally_convergent_on_circle(self):
        """sum cos(n t)/n = -log(2 sin(t/2)) on (0, 2 pi)"""
        t = 1.1
        forward = polylog_sum(cmath.exp(1j * t), 1).value
        assert forward.real == pytest.approx(-math.log(2 * math.sin(t / 2)), rel=1e-11)
        assert forward.imag == pytest.approx((math.pi - t) / 2, rel=1e-11)

    def test_complex_order_near_one(self):
        """The tail expansion settles a few ulps short of the working precision here"""
        z, w = cmath.exp(1.8j * math.pi), 2.5 - 1j
        value = polylog_sum(z, w).value
        assert value == pytest.approx(complex(mpmath.polylog(w, z)), rel=1e-12)
        assert polylog_sum(z.conjugate(), w.conjugate()).value == pytest.approx(value.conjugate(), rel=1e-13)

    def test_outside_disk_rejected(self):
        with pytest.raises(DomainError, match=r"\|z\| <= 1"):
            polylog_sum(1.5, 2)


class TestQuadrature:
    """Tests for the semi-infinite quadrature."""

    def test_exponential(self):
        result = integrate_semi_infinite(
            lambda x: np.exp(-x) + 0j,
            decay=1.0,
            singularity_distance=1.0,
            tail_bound=exponential_tail(lambda x: math.exp(-x), 1.0),
        )
        assert result.value == pytest.approx(1.0, rel=1e-14)
        assert result.tail_bound <= 1e-15

    def test_rational_factor(self):
        """int_0^inf e^(-x) / (1 + x^2) dx, singularities at distance 1 from the axis"""
        result = integrate_semi_infinite(
            lambda x: np.exp(-x) / (1 + x * x) + 0j,
            decay=1.0,
            singularity_distance=1.0,
            tail_bound=exponential_tail(lambda x: math.exp(-x), 1.0),
        )
        assert result.value.real == pytest.approx(0.6214496242358134, rel=1e-13)

    def test_fixed_cutoff_cannot_certify_tail(self):
        from hurwitzlommel.errors import QuadratureFailure

        with pytest.raises(QuadratureFailure, match="tail"):
            integrate_semi_infinite(
                lambda x: np.exp(-x) + 0j,
                decay=1.0,
                singularity_distance=1.0,
                tail_bound=exponential_tail(lambda x: math.exp(-x), 1.0),
                spec=QuadratureSpec(x_max=2.0),
            )
