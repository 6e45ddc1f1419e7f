"""Linear relations among zeta coefficients from substituting x in {0, 1, 2}.

Substituting a point into the cosine expansion of x**(2m) yields one exact
linear equation over the unknowns v_k = zeta_E(2k)/pi**(2k) (for x = 0, 1)
or v_k = zeta(2k)/pi**(2k) (for x = 2, the endpoint, where the series
converges to the jump average 4**m and the alternating signs collapse).
Ordered by m, the relations form a triangular system whose forward solve
re-derives every coefficient; a single elimination step of that solve is
exactly the recurrence step.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .exactmath import falling_factorial

__all__ = [
    "Family",
    "LinearRelation",
    "DegenerateSystem",
    "relation_at",
    "solve_triangular",
]


class Family(enum.Enum):
    EULER_ZETA = "euler-zeta"  # unknowns zeta_E(2k) / pi**(2k)
    ORDINARY_ZETA = "ordinary-zeta"  # unknowns zeta(2k) / pi**(2k)


class DegenerateSystem(Exception):
    """A pivot is missing or zero, or the relation list is mis-ordered."""


class LinearRelation:
    """Exact equation sum_k q_k * v_k = rhs over one zeta family.

    Zero coefficients are dropped; the surviving set must be non-empty and
    its largest index carries the relation's one new unknown.
    """

    __slots__ = ("family", "_coeffs", "rhs")

    def __init__(
        self,
        family: Family,
        coefficients: Mapping[int, Fraction | int] | Iterable[tuple[int, Fraction | int]],
        rhs: Fraction | int,
    ) -> None:
        items = (
            coefficients.items()
            if isinstance(coefficients, Mapping)
            else coefficients
        )
        cleaned = sorted((int(k), Fraction(q)) for k, q in items if Fraction(q))
        if not cleaned:
            raise ValueError("a relation needs at least one nonzero coefficient")
        if any(k < 1 for k, _ in cleaned):
            raise ValueError("unknown indices start at 1")
        object.__setattr__(self, "family", family)
        object.__setattr__(self, "_coeffs", tuple(cleaned))
        object.__setattr__(self, "rhs", Fraction(rhs))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("LinearRelation is immutable")

    @property
    def coefficients(self) -> dict[int, Fraction]:
        return dict(self._coeffs)

    @property
    def order(self) -> int:
        """Index of the unknown this relation introduces."""
        return self._coeffs[-1][0]

    def residual(self, values: Sequence[Fraction]) -> Fraction:
        """sum_k q_k * values[k-1] - rhs; zero iff `values` satisfies it."""
        acc = -self.rhs
        for k, q in self._coeffs:
            acc += q * values[k - 1]
        return acc

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LinearRelation):
            return (
                self.family is other.family
                and self._coeffs == other._coeffs
                and self.rhs == other.rhs
            )
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.family, self._coeffs, self.rhs))

    def __repr__(self) -> str:
        body = " + ".join(f"({q})*v{k}" for k, q in self._coeffs)
        return f"LinearRelation[{self.family.value}] {body} = {self.rhs}"


def relation_at(m: int, x: int) -> LinearRelation:
    """The exact relation from substituting x into the expansion of t**(2m).

    * x = 0: sum (-1)**k P(2m,2k-1) v_k = -1/(2(2m+1)), Euler family.
    * x = 1: sum (-1)**k P(2m,2k-1) 4**-k v_k = (2m+1-4**m)/((2m+1) 2**(2m+1)),
      Euler family (odd n drop out, even n re-alternate).
    * x = 2: sum (-1)**(k+1) P(2m,2k-1) v_k = m/(2m+1), ordinary family
      (endpoint: the series converges to the jump average 4**m, and the
      (-1)**n in a_n meets cos(n pi) to give plain 1/n**(2k) sums).
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if x == 0:
        coeffs = {
            k: Fraction((-1) ** k * falling_factorial(2 * m, 2 * k - 1))
            for k in range(1, m + 1)
        }
        return LinearRelation(Family.EULER_ZETA, coeffs, Fraction(-1, 2 * (2 * m + 1)))
    if x == 1:
        coeffs = {
            k: Fraction((-1) ** k * falling_factorial(2 * m, 2 * k - 1), 4**k)
            for k in range(1, m + 1)
        }
        rhs = Fraction(2 * m + 1 - 2 ** (2 * m), (2 * m + 1) * 2 ** (2 * m + 1))
        return LinearRelation(Family.EULER_ZETA, coeffs, rhs)
    if x == 2:
        coeffs = {
            k: Fraction((-1) ** (k + 1) * falling_factorial(2 * m, 2 * k - 1))
            for k in range(1, m + 1)
        }
        return LinearRelation(Family.ORDINARY_ZETA, coeffs, Fraction(m, 2 * m + 1))
    raise ValueError("x must be 0, 1, or 2")


def solve_triangular(relations: Sequence[LinearRelation]) -> list[Fraction]:
    """Forward substitution through relations for m = 1..s.

    Relation i must introduce exactly the unknown i (its largest index is i
    and that pivot coefficient is nonzero); anything else raises
    :class:`DegenerateSystem`.  Mixing families raises ValueError.
    """
    if not relations:
        return []
    family = relations[0].family
    solution: list[Fraction] = []
    for i, rel in enumerate(relations, start=1):
        if rel.family is not family:
            raise ValueError("relations mix zeta families")
        if rel.order != i:
            raise DegenerateSystem(
                f"relation {i} introduces unknown {rel.order}, expected {i}"
            )
        coeffs = rel.coefficients
        acc = rel.rhs
        for k, q in coeffs.items():
            if k < i:
                acc -= q * solution[k - 1]
        solution.append(acc / coeffs[i])
    return solution
