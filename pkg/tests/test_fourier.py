import math
from decimal import Decimal
from fractions import Fraction

import pytest

from euler_zeta.exactmath import PiPolynomial, eval_pi_polynomial, pi_decimal
from euler_zeta.fourier import (
    FourierExpansion,
    QuadratureBudgetExceeded,
    fourier_coefficient,
    fourier_coefficient_numeric,
    partial_sum,
)

# Frozen from an independent high-precision computation (Decimal Machin pi).
MINUS_16_OVER_PI2 = Fraction(Decimal("-1.6211389382774043431"))
FOUR_OVER_PI2 = Fraction(Decimal("0.40528473456935108577"))
A1_M2 = Fraction(Decimal("-5.0848371346216653195"))  # -128/pi^2 + 768/pi^4
TWO_TERM_AT_ZERO = Fraction(Decimal("-0.28780560494407100"))  # 4/3 - 16/pi^2


def _pi_upper() -> Fraction:
    approx = pi_decimal(20)
    return Fraction(approx.value) + Fraction(approx.abs_error_bound)


class TestExactCoefficients:
    def test_frozen_small_cases(self):
        assert fourier_coefficient(1, 1).terms == {-1: Fraction(-16)}
        assert fourier_coefficient(1, 2).terms == {-1: Fraction(4)}
        assert fourier_coefficient(2, 1).terms == {
            -1: Fraction(-128),
            -2: Fraction(768),
        }

    def test_only_negative_even_pi_powers(self):
        for m in range(1, 4):
            for n in range(1, 9):
                keys = set(fourier_coefficient(m, n).terms)
                assert keys == {-k for k in range(1, m + 1)}

    def test_same_parity_rescaling(self):
        # c_k(n) * n^(2k) depends only on the parity of n.
        for m in range(1, 4):
            for n, other in [(1, 3), (1, 7), (2, 4), (2, 8), (3, 5)]:
                a, b = fourier_coefficient(m, n), fourier_coefficient(m, other)
                for k in range(1, m + 1):
                    assert (
                        a.coefficient(-k) * n ** (2 * k)
                        == b.coefficient(-k) * other ** (2 * k)
                    )

    def test_adjacent_parity_sign_flip(self):
        for m in range(1, 4):
            for n in range(1, 8):
                a, b = fourier_coefficient(m, n), fourier_coefficient(m, n + 1)
                for k in range(1, m + 1):
                    assert (
                        a.coefficient(-k) * n ** (2 * k)
                        == -b.coefficient(-k) * (n + 1) ** (2 * k)
                    )

    def test_domain(self):
        with pytest.raises(ValueError):
            fourier_coefficient(0, 1)
        with pytest.raises(ValueError):
            fourier_coefficient(1, 0)


class TestExpansion:
    def test_constant_term(self):
        assert FourierExpansion(1).constant_term == Fraction(4, 3)
        assert FourierExpansion(2).constant_term == Fraction(16, 5)

    def test_coefficient_delegates(self):
        assert FourierExpansion(2).coefficient(1) == fourier_coefficient(2, 1)

    def test_other_intervals_rejected(self):
        with pytest.raises(ValueError):
            FourierExpansion(1, half_width=1)

    def test_m_domain(self):
        with pytest.raises(ValueError):
            FourierExpansion(0)


class TestQuadrature:
    @pytest.mark.parametrize(
        "m,n,target",
        [
            (1, 1, MINUS_16_OVER_PI2),
            (1, 2, FOUR_OVER_PI2),
            (2, 1, A1_M2),
        ],
    )
    def test_frozen_targets(self, m, n, target):
        approx = fourier_coefficient_numeric(m, n, 1e-9)
        assert Fraction(approx.abs_error_bound) == Fraction(1, 10**9)
        assert approx.contains(target)

    def test_agrees_with_exact_route(self):
        for m in range(1, 4):
            for n in range(1, 9):
                exact = eval_pi_polynomial(fourier_coefficient(m, n), 12)
                numeric = fourier_coefficient_numeric(m, n, 1e-11)
                gap = abs(Fraction(exact.value) - Fraction(numeric.value))
                assert gap <= Fraction(1, 10**9), (m, n)

    def test_budget_exhaustion_raises(self):
        with pytest.raises(QuadratureBudgetExceeded):
            fourier_coefficient_numeric(1, 1, 1e-18)

    def test_domain(self):
        with pytest.raises(ValueError):
            fourier_coefficient_numeric(0, 1, 1e-6)
        with pytest.raises(ValueError):
            fourier_coefficient_numeric(1, 1, 0)


class TestPartialSum:
    def test_two_term_hand_value(self):
        approx = partial_sum(1, 0, 1, 10)
        assert Fraction(approx.abs_error_bound) <= Fraction(1, 10**10)
        assert approx.contains(TWO_TERM_AT_ZERO)

    def test_matches_exact_pi_polynomial_route(self):
        # constant + a_1 at x = 0 is 4/3 - 16/pi^2 exactly.
        direct = eval_pi_polynomial(
            PiPolynomial({0: Fraction(4, 3), -1: Fraction(-16)}), 12
        )
        approx = partial_sum(1, 0, 1, 12)
        gap = abs(Fraction(approx.value) - Fraction(direct.value))
        assert gap <= Fraction(approx.abs_error_bound) + Fraction(direct.abs_error_bound)

    @pytest.mark.parametrize("big_n", [100, 1000])
    def test_converges_to_zero_at_origin(self, big_n):
        allowance = Fraction(32) / (_pi_upper() ** 2 * big_n)
        approx = partial_sum(1, 0, big_n, 12)
        assert abs(Fraction(approx.value)) + Fraction(approx.abs_error_bound) <= allowance

    @pytest.mark.parametrize("big_n", [100, 1000])
    def test_converges_to_one_at_x1(self, big_n):
        allowance = Fraction(32) / (_pi_upper() ** 2 * big_n)
        approx = partial_sum(1, 1, big_n, 12)
        assert (
            abs(Fraction(approx.value) - 1) + Fraction(approx.abs_error_bound)
            <= allowance
        )

    def test_endpoint_approaches_jump_average(self):
        # At x = 2 the series converges to 4**m, not to the function value.
        approx = partial_sum(1, 2, 400, 10)
        allowance = Fraction(32) / (_pi_upper() ** 2 * 400)
        assert abs(Fraction(approx.value) - 4) <= allowance

    def test_irrational_cosine_path(self):
        approx = partial_sum(1, Fraction(1, 2), 20, 10)
        reference = 4 / 3 + sum(
            16 * (-1) ** n / (n * n * math.pi**2) * math.cos(n * math.pi / 4)
            for n in range(1, 21)
        )
        assert abs(float(approx.value) - reference) < 1e-12

    def test_refinement_stays_inside(self):
        coarse = partial_sum(2, 1, 50, 8)
        fine = partial_sum(2, 1, 50, 16)
        assert coarse.contains(Fraction(fine.value))

    def test_domain(self):
        with pytest.raises(ValueError):
            partial_sum(0, 0, 1, 10)
        with pytest.raises(ValueError):
            partial_sum(1, 0, 0, 10)
        with pytest.raises(ValueError):
            partial_sum(1, 0, 1, 0)
        with pytest.raises(ValueError):
            partial_sum(1, Fraction(5, 2), 1, 10)
