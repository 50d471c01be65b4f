"""Exact-arithmetic primitives shared by every solver in the package.

The game model removes two players per full turn (one lynched by day, one
killed by night), so double factorials and products over every-other-integer
show up everywhere.  All exact values are ``fractions.Fraction``; floats only
appear in operations whose contract says float.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cache

__all__ = [
    "BoundaryRule",
    "GameState",
    "Rational",
    "double_factorial",
    "falling_product",
    "log_double_factorial",
]

# Exact probabilities are plain stdlib rationals: auto-normalized
# (gcd 1, positive denominator), arbitrary precision.
Rational = Fraction

_LN2 = math.log(2.0)


@dataclass(frozen=True, slots=True)
class GameState:
    """A living population: ``n`` players total, ``m`` of them mafia."""

    n: int
    m: int

    def __post_init__(self) -> None:
        if not (0 <= self.m <= self.n):
            raise ValueError(f"need 0 <= m <= n, got n={self.n}, m={self.m}")

    @property
    def citizens(self) -> int:
        return self.n - self.m


class BoundaryRule(enum.Enum):
    """When does the mafia win outright?

    ``STRICT_MAJORITY`` (the default) requires more mafia than citizens;
    ``TIES`` already awards the game at parity, since the mafia can force a
    stalemate of the vote and still kills by night.
    """

    STRICT_MAJORITY = "strict"
    TIES = "ties"

    def mafia_wins(self, n: int, m: int) -> bool:
        """Terminal test for a population of ``n`` players with ``m`` mafia."""
        if self is BoundaryRule.STRICT_MAJORITY:
            return 2 * m > n
        return m > 0 and 2 * m >= n


def double_factorial(k: int) -> int:
    """k!! = k (k-2) (k-4) ... down to 2 or 1; by convention 0!! = (-1)!! = 1.

    Rejects ``k < -1``: more deeply negative double factorials are never
    needed because ratios that would produce them are computed as
    :func:`falling_product` instead.
    """
    if k < -1:
        raise ValueError(f"double_factorial undefined for k={k}")
    result = 1
    while k > 1:
        result *= k
        k -= 2
    return result


def log_double_factorial(k: int) -> float:
    """ln(k!!) for k >= -1, computed via lgamma so huge k stays cheap.

    Splitting on parity: (2j)!! = 2^j j!, and (2j+1)!! = (2j+1)!/(2^j j!).
    """
    if k < -1:
        raise ValueError(f"log_double_factorial undefined for k={k}")
    if k <= 0:
        return 0.0
    j = k // 2
    if k % 2 == 0:
        return j * _LN2 + math.lgamma(j + 1)
    return math.lgamma(2 * j + 2) - j * _LN2 - math.lgamma(j + 1)


@cache
def falling_product(N: int, t: int, i: int) -> Fraction:
    """Exact value of ``prod_{j=0}^{t-1} (N - 2j - i) / (N - 2j)``.

    This product is the normative form of the double-factorial ratio
    (N-2t)!! (N-i)!! / (N!! (N-2t-i)!!): when a factor hits zero the whole
    product is zero (which is how 1/(negative even)!! terms vanish), and when
    factors cross zero for odd ``i`` the product carries the sign, so no
    extension of !! to negative arguments is ever required.
    """
    if N < 0 or t < 0 or i < 0:
        raise ValueError(f"need N, t, i >= 0, got N={N}, t={t}, i={i}")
    if 2 * t > N:
        raise ValueError(f"need 2t <= N, got N={N}, t={t}")
    value = Fraction(1)
    for j in range(t):
        value *= Fraction(N - 2 * j - i, N - 2 * j)
        if not value:
            break  # a zero factor zeroes every longer prefix too
    return value
