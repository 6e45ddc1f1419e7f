"""Exact arithmetic foundation: rationals, pi-polynomials, enclosed decimals.

Every quantity in this library is one of three things: an exact rational
(`fractions.Fraction`, always reduced with a positive denominator), an exact
finite sum of rational multiples of even powers of pi (`PiPolynomial`), or a
decimal carrying an explicit absolute error bound (`DecimalApprox`).  Nothing
here ever rounds silently; whenever a decimal is produced, the bound is a
proven enclosure of the true value.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Iterable, Mapping

__all__ = [
    "Rational",
    "PiPolynomial",
    "DecimalApprox",
    "factorial",
    "falling_factorial",
    "binomial",
    "bernoulli",
    "bernoulli_akiyama_tanigawa",
    "pi_decimal",
    "eval_pi_polynomial",
]

# The universal exact scalar. Fraction already guarantees the invariants this
# library relies on: reduced form, denominator > 0, zero stored as 0/1.
Rational = Fraction


def factorial(n: int) -> int:
    """n! for n >= 0."""
    return math.factorial(n)


def falling_factorial(n: int, r: int) -> int:
    """Descending product n(n-1)...(n-r+1); equals 0 when r > n."""
    return math.perm(n, r)


def binomial(n: int, k: int) -> int:
    """C(n, k); equals 0 when k > n."""
    return math.comb(n, k)


# ---------------------------------------------------------------------------
# Bernoulli numbers (convention B_1 = -1/2)
# ---------------------------------------------------------------------------

_bernoulli_lock = threading.Lock()
_bernoulli_cache: list[Fraction] = [Fraction(1)]


def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n under the convention B_1 = -1/2.

    Computed from the defining recurrence sum_{k=0}^{n} C(n+1, k) B_k = 0
    with B_0 = 1.  A request for B_n fills a shared memo table up to n; the
    table is guarded so concurrent readers only ever see finished entries.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    with _bernoulli_lock:
        while len(_bernoulli_cache) <= n:
            m = len(_bernoulli_cache)
            acc = Fraction(0)
            for k in range(m):
                acc += binomial(m + 1, k) * _bernoulli_cache[k]
            _bernoulli_cache.append(-acc / (m + 1))
        return _bernoulli_cache[n]


def bernoulli_akiyama_tanigawa(n: int) -> list[Fraction]:
    """B_0..B_n by the Akiyama-Tanigawa triangle; an independent route.

    The triangle natively produces B_1 = +1/2; that single entry is flipped
    to the B_1 = -1/2 convention used by :func:`bernoulli`.  Every other
    index is convention-independent.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    row: list[Fraction] = [Fraction(0)] * (n + 1)
    out: list[Fraction] = []
    for m in range(n + 1):
        row[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            row[j - 1] = j * (row[j - 1] - row[j])
        out.append(row[0])
    if n >= 1:
        out[1] = -out[1]
    return out


# ---------------------------------------------------------------------------
# pi as a scaled integer with tracked error
# ---------------------------------------------------------------------------


def _arctan_recip_scaled(x: int, scale: int) -> tuple[int, int]:
    # arctan(1/x) * scale by the alternating series, floored term by term.
    # Error budget: one last-place unit per computed term (the floor) plus
    # one for the tail (first omitted term is < 1 unit).
    total = 0
    power = x
    xx = x * x
    k = 0
    err_units = 1
    while True:
        term = scale // (power * (2 * k + 1))
        if term == 0:
            break
        total += -term if k & 1 else term
        err_units += 1
        power *= xx
        k += 1
    return total, err_units


_pi_lock = threading.Lock()
_pi_best: tuple[int, int, int] = (0, 3, 1)  # (digits, scaled value, error units)


def _pi_scaled(digits: int) -> tuple[int, int]:
    """pi * 10**digits as an integer, with its error in last-place units.

    Machin's identity pi = 16 arctan(1/5) - 4 arctan(1/239) in scaled
    integer arithmetic.  The largest computation is cached; smaller requests
    are served by truncation (which costs at most 2 extra units).
    """
    global _pi_best
    with _pi_lock:
        have, value, err = _pi_best
        if have < digits:
            scale = 10**digits
            a5, e5 = _arctan_recip_scaled(5, scale)
            a239, e239 = _arctan_recip_scaled(239, scale)
            value, err = 16 * a5 - 4 * a239, 16 * e5 + 4 * e239
            _pi_best = (digits, value, err)
            return value, err
        if have == digits:
            return value, err
        drop = 10 ** (have - digits)
        return value // drop, err // drop + 2


def _pi_interval(digits: int) -> tuple[Fraction, Fraction]:
    """Rational enclosure of pi of width at most a few units of 10**-digits."""
    value, err = _pi_scaled(digits)
    scale = 10**digits
    return Fraction(value - err, scale), Fraction(value + err, scale)


def _decimal_from_scaled(value: int, shift: int) -> Decimal:
    # Exact value * 10**-shift.  A context sized to the value keeps scaleb
    # exact, and Decimal(int) sidesteps the int-to-str digit limit that a
    # string construction would trip at ~10**4 digits.
    with localcontext() as ctx:
        ctx.prec = value.bit_length() // 3 + 5
        return Decimal(value).scaleb(-shift)


def _round_to_decimal(x: Fraction, digits: int) -> Decimal:
    # Nearest multiple of 10**-digits (ties to even), constructed exactly.
    return _decimal_from_scaled(round(x * 10**digits), digits)


def _ceil_to_decimal(x: Fraction, digits: int) -> Decimal:
    # Smallest multiple of 10**-digits that is >= x (x nonnegative).
    scaled = x * 10**digits
    return _decimal_from_scaled(-((-scaled.numerator) // scaled.denominator), digits)


def pi_decimal(digits: int) -> DecimalApprox:
    """pi rounded to `digits` decimal places with bound 10**-digits.

    The true rounding error is at most half a unit in the last place plus
    the (far smaller) enclosure width of the scaled-integer computation, so
    the advertised bound is comfortably valid.
    """
    if digits < 1:
        raise ValueError("digits must be >= 1")
    lo, hi = _pi_interval(digits + 10)
    return DecimalApprox(
        _round_to_decimal((lo + hi) / 2, digits),
        _decimal_from_scaled(1, digits),
    )


# ---------------------------------------------------------------------------
# value types
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DecimalApprox:
    """A decimal value with a guaranteed absolute error bound.

    The represented true quantity lies in
    [value - abs_error_bound, value + abs_error_bound].
    """

    value: Decimal
    abs_error_bound: Decimal

    def __post_init__(self) -> None:
        if self.abs_error_bound < 0:
            raise ValueError("abs_error_bound must be nonnegative")

    def bounds(self) -> tuple[Fraction, Fraction]:
        """Interval endpoints as exact rationals."""
        value = Fraction(self.value)
        bound = Fraction(self.abs_error_bound)
        return value - bound, value + bound

    def contains(self, true_value: Fraction | int | float | Decimal) -> bool:
        """Whether the enclosure contains `true_value` (compared exactly)."""
        lo, hi = self.bounds()
        return lo <= Fraction(true_value) <= hi


class PiPolynomial:
    """Finite exact sum  sum_k c_k * pi**(2k)  with rational c_k.

    Keys are exponents k of pi**2 and may be negative; zero coefficients are
    never stored, so equality and hashing are structural.  Instances are
    immutable; addition, subtraction and scalar multiplication are exact.
    """

    __slots__ = ("_terms",)

    def __init__(
        self,
        terms: Mapping[int, Fraction | int] | Iterable[tuple[int, Fraction | int]] = (),
    ) -> None:
        acc: dict[int, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for k, c in items:
            k = int(k)
            acc[k] = acc.get(k, Fraction(0)) + Fraction(c)
        object.__setattr__(
            self, "_terms", tuple(sorted((k, c) for k, c in acc.items() if c))
        )

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("PiPolynomial is immutable")

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def coefficient(self, k: int) -> Fraction:
        for key, c in self._terms:
            if key == k:
                return c
        return Fraction(0)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, PiPolynomial):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._terms)

    def __add__(self, other: "PiPolynomial") -> "PiPolynomial":
        if not isinstance(other, PiPolynomial):
            return NotImplemented
        return PiPolynomial(list(self._terms) + list(other._terms))

    def __sub__(self, other: "PiPolynomial") -> "PiPolynomial":
        if not isinstance(other, PiPolynomial):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "PiPolynomial":
        return PiPolynomial((k, -c) for k, c in self._terms)

    def __mul__(self, scalar: Fraction | int) -> "PiPolynomial":
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        return PiPolynomial((k, c * scalar) for k, c in self._terms)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        body = ", ".join(f"{k}: {c}" for k, c in self._terms)
        return f"PiPolynomial({{{body}}})"


# ---------------------------------------------------------------------------
# enclosure evaluation
# ---------------------------------------------------------------------------


def eval_pi_polynomial(p: PiPolynomial, digits: int) -> DecimalApprox:
    """Evaluate sum_k c_k * pi**(2k) with a proven bound <= 10**-digits.

    Interval arithmetic over exact rationals: pi enters as a rational
    enclosure, powers keep outward endpoints, and the working precision
    doubles until the target bound is met.  The reported bound is twice the
    achieved half-width plus conversion error, which makes re-evaluation at
    higher precision land strictly inside the reported interval.
    """
    if digits < 1:
        raise ValueError("digits must be >= 1")
    if not p:
        return DecimalApprox(Decimal(0), Decimal(0))
    target = Fraction(1, 10**digits)
    quant = digits + 5
    conv = Fraction(1, 2 * 10**quant)
    work = digits + 12
    while True:
        pi_lo, pi_hi = _pi_interval(work)
        sq_lo, sq_hi = pi_lo * pi_lo, pi_hi * pi_hi
        lo = hi = Fraction(0)
        for k, c in p._terms:
            if k >= 0:
                t_lo, t_hi = sq_lo**k, sq_hi**k
            else:
                t_lo, t_hi = 1 / sq_hi ** (-k), 1 / sq_lo ** (-k)
            if c >= 0:
                lo += c * t_lo
                hi += c * t_hi
            else:
                lo += c * t_hi
                hi += c * t_lo
        half = (hi - lo) / 2
        err = 2 * (half + conv)
        if err <= target:
            return DecimalApprox(
                _round_to_decimal((lo + hi) / 2, quant),
                _ceil_to_decimal(err, quant + 3),
            )
        work *= 2


# ---------------------------------------------------------------------------
# cosine of rational multiples of pi (internal; enclosure-valued)
# ---------------------------------------------------------------------------


def _cos_series(x: Fraction, work: int) -> tuple[Fraction, Fraction]:
    # Rational enclosure of cos(x) for 0 <= x < 1.6 via the Taylor series.
    # Terms decrease strictly from the second one on, so the alternating
    # tail bound (first omitted term) applies at every stopping point used.
    eps = Fraction(1, 10**work)
    x2 = x * x
    total = Fraction(1)
    term = Fraction(1)
    j = 0
    while True:
        j += 1
        term = term * x2 / ((2 * j - 1) * (2 * j))
        total += -term if j & 1 else term
        nxt = term * x2 / ((2 * j + 1) * (2 * j + 2))
        if nxt < eps:
            return max(total - nxt, Fraction(-1)), min(total + nxt, Fraction(1))


def _cos_pi_times(t: Fraction, work: int) -> tuple[Fraction, Fraction]:
    """Enclosure of cos(pi * t) for rational t; exact whenever 2t is integral."""
    double = 2 * t
    if double.denominator == 1:
        exact = Fraction((1, 0, -1, 0)[double.numerator % 4])
        return exact, exact
    r = t - 2 * math.floor(t / 2)  # into [0, 2)
    if r > 1:
        r = 2 - r  # cos(2 pi - u) = cos(u)
    if r > Fraction(1, 2):
        lo, hi = _cos_pi_times(1 - r, work)  # cos(pi - u) = -cos(u)
        return -hi, -lo
    pi_lo, pi_hi = _pi_interval(work)
    # cos is decreasing on [0, pi/2], so the endpoints swap.
    lo, _ = _cos_series(r * pi_hi, work)
    _, hi = _cos_series(r * pi_lo, work)
    return lo, hi
