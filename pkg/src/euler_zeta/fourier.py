"""Fourier cosine data for f(x) = x**(2m) on the fixed interval (-2, 2).

The exact route writes each cosine coefficient a_n as a polynomial in
pi**-2 with rational coefficients; the numeric routes (adaptive composite
Simpson quadrature, enclosed partial sums) exist to validate it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction

import numpy as np

from .exactmath import (
    DecimalApprox,
    PiPolynomial,
    _ceil_to_decimal,
    _cos_pi_times,
    _decimal_from_scaled,
    _pi_interval,
    _round_to_decimal,
    falling_factorial,
)

__all__ = [
    "FourierExpansion",
    "QuadratureBudgetExceeded",
    "fourier_coefficient",
    "fourier_coefficient_numeric",
    "partial_sum",
]

_HALVING_BUDGET = 24


class QuadratureBudgetExceeded(RuntimeError):
    """Interval halving hit its budget before the error estimate met tol."""


def fourier_coefficient(m: int, n: int) -> PiPolynomial:
    """Cosine coefficient a_n of x**(2m) on (-2, 2), exact.

    a_n = sum_{k=1}^{m} (-1)**(k+1) P(2m, 2k-1) 2**(2m+1) (-1)**n / n**(2k)
    carried on pi**(-2k); only negative even powers of pi appear.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if n < 1:
        raise ValueError("n must be >= 1")
    sign_n = -1 if n % 2 else 1
    base = 2 ** (2 * m + 1) * sign_n
    terms: dict[int, Fraction] = {}
    for k in range(1, m + 1):
        numerator = falling_factorial(2 * m, 2 * k - 1) * base
        if k % 2 == 0:
            numerator = -numerator
        terms[-k] = Fraction(numerator, n ** (2 * k))
    return PiPolynomial(terms)


@dataclass(frozen=True)
class FourierExpansion:
    """x**(2m) = 4**m/(2m+1) + sum_{n>=1} a_n cos(n pi x / 2) on (-2, 2)."""

    m: int
    half_width: int = 2

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError("m must be >= 1")
        if self.half_width != 2:
            # Other intervals change which zeta family the substitution
            # identities land in; they are deliberately unsupported.
            raise ValueError("only the interval (-2, 2) is supported")

    @property
    def constant_term(self) -> Fraction:
        return Fraction(4**self.m, 2 * self.m + 1)

    def coefficient(self, n: int) -> PiPolynomial:
        return fourier_coefficient(self.m, n)


def fourier_coefficient_numeric(
    m: int, n: int, tol: float | Decimal | str
) -> DecimalApprox:
    """a_n by quadrature: (1/2) integral_{-2}^{2} x**(2m) cos(n pi x/2) dx.

    Composite Simpson on a doubling panel count, accepting once the
    Richardson estimate |S_j - S_{j-1}| / 15 falls below tol/2.  Exceeding
    the halving budget raises :class:`QuadratureBudgetExceeded` rather than
    returning a silently inaccurate value; so does any tol below the float
    roundoff floor, since such a bound could never honestly be certified.
    """
    if m < 1 or n < 1:
        raise ValueError("m and n must be >= 1")
    tol_f = float(tol)
    if not tol_f > 0:
        raise ValueError("tol must be positive")
    omega = n * math.pi / 2
    power = 2 * m

    def f(x: np.ndarray) -> np.ndarray:
        return 0.5 * x**power * np.cos(omega * x)

    a, b = -2.0, 2.0
    span = b - a
    # The integrand completes n periods across the span; coarse grids alias
    # them (integer nodes all see cos = +-1), so the convergence test is
    # suppressed until every period carries at least 16 panels.
    min_level = max(2, math.ceil(math.log2(16 * n)))
    trap_prev = 0.5 * span * float(f(np.array([a]))[0] + f(np.array([b]))[0])
    simpson_prev: float | None = None
    scale = max(1.0, abs(trap_prev))
    for level in range(1, _HALVING_BUDGET + 1):
        step = span / 2**level
        mids = a + step * (2.0 * np.arange(2 ** (level - 1), dtype=np.float64) + 1.0)
        trap = 0.5 * trap_prev + step * float(np.sum(f(mids)))
        simpson = (4.0 * trap - trap_prev) / 3.0
        scale = max(scale, abs(simpson))
        # Below the roundoff floor the Richardson estimate is pure noise and
        # may spuriously read as zero; never accept a bound there.
        noise_floor = 64.0 * np.finfo(np.float64).eps * scale
        if (
            level >= min_level
            and simpson_prev is not None
            and tol_f >= noise_floor
            and abs(simpson - simpson_prev) < 7.5 * tol_f
        ):
            quant = max(1, math.ceil(-math.log10(tol_f))) + 3
            value = _decimal_from_scaled(round(simpson * 10**quant), quant)
            return DecimalApprox(value, Decimal(str(tol)))
        trap_prev, simpson_prev = trap, simpson
    raise QuadratureBudgetExceeded(
        f"no convergence to tol={tol} within {_HALVING_BUDGET} halvings (m={m}, n={n})"
    )


def partial_sum(
    m: int, x: Fraction | int | str, N: int, digits: int
) -> DecimalApprox:
    """Truncated expansion 4**m/(2m+1) + sum_{n=1}^{N} a_n cos(n pi x / 2).

    x must be rational with |x| <= 2.  The reported bound covers evaluation
    error only (pi enclosures, cosine enclosures, scaling floors); series
    truncation is deliberately the caller's concern.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if N < 1:
        raise ValueError("N must be >= 1")
    if digits < 1:
        raise ValueError("digits must be >= 1")
    xq = Fraction(x)
    if abs(xq) > 2:
        raise ValueError("x must lie in [-2, 2]")
    target = Fraction(1, 10**digits)
    quant = digits + 5
    conv = Fraction(1, 2 * 10**quant)
    base = 2 ** (2 * m + 1)
    work = digits + 10
    while True:
        scale = 10**work
        pi_lo, pi_hi = _pi_interval(work)
        inv_lo, inv_hi = 1 / (pi_hi * pi_hi), 1 / (pi_lo * pi_lo)
        powers: list[tuple[Fraction, Fraction]] = []
        acc_lo, acc_hi = Fraction(1), Fraction(1)
        for _ in range(m):
            acc_lo, acc_hi = acc_lo * inv_lo, acc_hi * inv_hi
            powers.append((acc_lo, acc_hi))
        constant = Fraction(4**m, 2 * m + 1) * scale
        lo_units = math.floor(constant)
        hi_units = math.ceil(constant)
        for n in range(1, N + 1):
            cos_lo, cos_hi = _cos_pi_times(Fraction(n) * xq / 2, work)
            if cos_lo == 0 == cos_hi:
                continue
            sign_n = -1 if n % 2 else 1
            a_lo = a_hi = Fraction(0)
            for k in range(1, m + 1):
                numerator = falling_factorial(2 * m, 2 * k - 1) * base * sign_n
                if k % 2 == 0:
                    numerator = -numerator
                q = Fraction(numerator, n ** (2 * k))
                t_lo, t_hi = powers[k - 1]
                if q >= 0:
                    a_lo += q * t_lo
                    a_hi += q * t_hi
                else:
                    a_lo += q * t_hi
                    a_hi += q * t_lo
            products = (a_lo * cos_lo, a_lo * cos_hi, a_hi * cos_lo, a_hi * cos_hi)
            lo_units += math.floor(min(products) * scale)
            hi_units += math.ceil(max(products) * scale)
        lo = Fraction(lo_units, scale)
        hi = Fraction(hi_units, scale)
        half = (hi - lo) / 2
        err = 2 * (half + conv)
        if err <= target:
            return DecimalApprox(
                _round_to_decimal((lo + hi) / 2, quant),
                _ceil_to_decimal(err, quant + 3),
            )
        work *= 2
