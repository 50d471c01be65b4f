"""Mafia winning-chance w(n, m): exact recurrence, exact closed form, asymptotics.

Model: each full turn the town lynches a uniformly random player (kills a
mafioso with probability m/n) and the mafia then kills a citizen by night, so

    w(n, m) = ((n - m)/n) w(n-2, m) + (m/n) w(n-2, m-1)

with w = 0 once the mafia is extinct and w = 1 once the boundary rule declares
a mafia win.  The closed form sums signed binomial multiples of
``falling_product`` terms; the asymptotic forms trade exactness for O(1)
evaluation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .core import (
    BoundaryRule,
    GameState,
    double_factorial,
    falling_product,
    log_double_factorial,
)

__all__ = [
    "MonotonicityReport",
    "WinChanceTable",
    "approx_single_parity",
    "optimal_mafia_approx",
    "optimal_mafia_numeric",
    "parity_ratio",
    "verify_monotonicity",
    "win_chance_asymptotic",
    "win_chance_closed",
    "win_chance_leading_term",
    "win_chance_recurrence",
    "win_chance_single",
]

_ZERO = Fraction(0)
_ONE = Fraction(1)
_HALF = Fraction(1, 2)


class WinChanceTable:
    """Memo table for the recurrence, filled bottom-up one parity at a time.

    The recurrence only couples (n, .) to (n-2, .), so each parity class is an
    independent ladder; filling whole rows keeps the table loop-free and
    recursion-free.  Construction is single-writer; once a row exists its
    entries never change, so concurrent readers are safe.
    """

    def __init__(self, boundary: BoundaryRule = BoundaryRule.STRICT_MAJORITY):
        self.boundary = boundary
        self.entries: dict[GameState, Fraction] = {}
        # highest filled row per parity class
        self._top = {0: -2, 1: -1}

    def win_chance(self, n: int, m: int) -> Fraction:
        if n < 0 or m < 0 or m > n:
            raise ValueError(f"need 0 <= m <= n, got n={n}, m={m}")
        self.ensure(n)
        return self.entries[GameState(n, m)]

    def ensure(self, n: int) -> None:
        """Fill all rows of n's parity up to and including n."""
        parity = n % 2
        for row in range(self._top[parity] + 2, n + 1, 2):
            self._fill_row(row)
            self._top[parity] = row

    def _fill_row(self, n: int) -> None:
        rule = self.boundary
        for m in range(n + 1):
            if m == 0:
                value = _ZERO
            elif rule.mafia_wins(n, m):
                value = _ONE
            else:
                value = Fraction(n - m, n) * self._value(n - 2, m) + Fraction(
                    m, n
                ) * self._value(n - 2, m - 1)
            self.entries[GameState(n, m)] = value

    def _value(self, n: int, m: int) -> Fraction:
        # The recurrence can step to transient states with m > n (e.g. (0, 1)
        # from (2, 1)); those are always terminal, so the boundary clauses
        # both guard and answer them without ever storing an invalid state.
        if m == 0:
            return _ZERO
        if self.boundary.mafia_wins(n, m):
            return _ONE
        return self.entries[GameState(n, m)]


_TABLES: dict[BoundaryRule, WinChanceTable] = {}


def _table(boundary: BoundaryRule) -> WinChanceTable:
    table = _TABLES.get(boundary)
    if table is None:
        table = _TABLES.setdefault(boundary, WinChanceTable(boundary))
    return table


def win_chance_recurrence(
    n: int, m: int, boundary: BoundaryRule = BoundaryRule.STRICT_MAJORITY
) -> Fraction:
    """Exact w(n, m) from the memoized recurrence."""
    return _table(boundary).win_chance(n, m)


def win_chance_single(n: int) -> Fraction:
    """Exact w(n, 1) = (n-1)!!/n!!: one mafioso dodging n//2 lynch votes.

    n = 0 is the exhausted-pool state reached from (2, 1) when the lynch
    misses: nobody is left to vote, the mafioso has won, w(0, 1) = 1.  The
    double factorials agree, (-1)!!/0!! = 1, which keeps the identity
    n w(n, 1) w(n-1, 1) = 1 valid all the way down to n = 1.
    """
    if n < 0:
        raise ValueError(f"need n >= 0, got n={n}")
    return Fraction(double_factorial(n - 1), double_factorial(n))


def win_chance_closed(
    n: int, m: int, boundary: BoundaryRule = BoundaryRule.STRICT_MAJORITY
) -> Fraction:
    """Exact w(n, m) as a closed sum, no recurrence.

    w(n, m) = 1 - sum_{i=0}^{m} C(m, i) (-1)^i falling_product(n, n//2, i).

    Only valid under the strict-majority boundary; the tie rule has no known
    closed form and is refused rather than silently mis-answered.
    """
    if boundary is not BoundaryRule.STRICT_MAJORITY:
        raise ValueError("closed form is only derived for the strict-majority boundary")
    if n < 0 or m < 0 or m > n:
        raise ValueError(f"need 0 <= m <= n, got n={n}, m={m}")
    t_end = n // 2
    total = _ZERO
    for i in range(m + 1):
        term = math.comb(m, i) * falling_product(n, t_end, i)
        total += -term if i % 2 else term
    return 1 - total


def win_chance_leading_term(n: int, m: int) -> float:
    """The still-exactish intermediate approximation m (n-1)!!/n!!.

    Computed in log space so n in the millions costs the same as n = 10.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got n={n}")
    if m < 0:
        raise ValueError(f"need m >= 0, got m={m}")
    return m * math.exp(log_double_factorial(n - 1) - log_double_factorial(n))


def win_chance_asymptotic(n: int, m: int) -> float:
    """Parity-aware large-n approximation (pi/2)^((n mod 2) - 1/2) m/sqrt(n)."""
    if n < 1:
        raise ValueError(f"need n >= 1, got n={n}")
    if m < 0:
        raise ValueError(f"need m >= 0, got m={m}")
    return (math.pi / 2) ** ((n % 2) - 0.5) * m / math.sqrt(n)


def approx_single_parity(n: int) -> float:
    """Single-mafioso approximation; the two parity branches of the n-sweep."""
    return win_chance_asymptotic(n, 1)


def parity_ratio(k: int) -> Fraction:
    """Exact w(2k+1, 1)/w(2k, 1) = ((2k)!!/(2k-1)!!)^2 / (2k+1).

    These are the partial products of the Wallis product: strictly increasing
    in k with limit pi/2, which is why one extra (odd) player helps the lone
    mafioso by almost a constant factor.
    """
    if k < 1:
        raise ValueError(f"need k >= 1, got k={k}")
    even = double_factorial(2 * k)
    odd = double_factorial(2 * k - 1)
    return Fraction(even * even, odd * odd * (2 * k + 1))


def optimal_mafia_numeric(
    n: int, boundary: BoundaryRule = BoundaryRule.STRICT_MAJORITY
) -> int:
    """The m in 0..n whose exact w(n, m) is closest to 1/2; ties go to smaller m."""
    if n < 1:
        raise ValueError(f"need n >= 1, got n={n}")
    table = _table(boundary)
    table.ensure(n)
    best_m = 0
    best_gap = _HALF  # |w(n, 0) - 1/2|
    for m in range(1, n + 1):
        gap = abs(table.win_chance(n, m) - _HALF)
        if gap < best_gap:
            best_m, best_gap = m, gap
        # w(n, m) is nondecreasing in m, so once past 1/2 the gap only grows
        if table.win_chance(n, m) >= _HALF:
            break
    return best_m


def optimal_mafia_approx(n: int) -> float:
    """Asymptotic optimum (1/2) (pi/2)^(1/2 - (n mod 2)) sqrt(n)."""
    if n < 1:
        raise ValueError(f"need n >= 1, got n={n}")
    return 0.5 * (math.pi / 2) ** (0.5 - (n % 2)) * math.sqrt(n)


@dataclass
class MonotonicityReport:
    """Outcome of sweeping the qualitative inequalities over a state region."""

    max_n: int
    violations: list[tuple[str, GameState]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def verify_monotonicity(
    n_max: int, boundary: BoundaryRule = BoundaryRule.STRICT_MAJORITY
) -> MonotonicityReport:
    """Check five inequality families over all states with n <= n_max, n-m >= m >= 1.

    For each in-region state (n, m):

      a. one more mafioso helps:        w(n, m)   > w(n, m-1)
      b. two more players hurt:         w(n+2, m) < w(n, m)
      c. an extra citizen and mafioso:  w(n+2, m+1) > w(n, m)
      d. one extra (odd) player helps:  w(n+1, m) > w(n, m) for even n
      e. the three pairwise differences among w(n-2, m), w(n, m) and
         w(n-2, m-1) share a sign (the convex-combination sandwich).

    Returns a report whose violation list is expected to be empty.
    """
    if n_max < 3:
        raise ValueError(f"need n_max >= 3, got n_max={n_max}")
    table = _table(boundary)
    table.ensure(n_max + 2)
    table.ensure(n_max + 1)
    report = MonotonicityReport(max_n=n_max)
    w = table.win_chance
    for n in range(2, n_max + 1):
        # the region n - m >= m >= 1 is exactly 1 <= m <= n // 2
        for m in range(1, n // 2 + 1):
            state = GameState(n, m)
            if not w(n, m) > w(n, m - 1):
                report.violations.append(("w(n,m) > w(n,m-1)", state))
            if not w(n + 2, m) < w(n, m):
                report.violations.append(("w(n+2,m) < w(n,m)", state))
            if not w(n + 2, m + 1) > w(n, m):
                report.violations.append(("w(n+2,m+1) > w(n,m)", state))
            if n % 2 == 0 and not w(n + 1, m) > w(n, m):
                report.violations.append(("w(n+1,m) > w(n,m), n even", state))
            if m <= n - 2:
                d_stay = w(n - 2, m) - w(n, m)
                d_drop = w(n, m) - w(n - 2, m - 1)
                d_span = w(n - 2, m) - w(n - 2, m - 1)
                if not _sign(d_stay) == _sign(d_drop) == _sign(d_span):
                    report.violations.append(("sandwich differences share a sign", state))
    return report
