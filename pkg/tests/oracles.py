"""Independent reference implementations the tests check the package against.

Nothing here may import from the modules it oracles beyond plain domain
types: the whole point is structural independence.
"""

from fractions import Fraction
from functools import lru_cache

from mafia_odds.core import BoundaryRule


def brute_force_win_chance(
    n: int, m: int, boundary: BoundaryRule = BoundaryRule.STRICT_MAJORITY
) -> Fraction:
    """Exact mafia win probability by expanding the full game tree.

    Day and night are separate eliminations with terminal checks after each,
    mirroring the simulator's bookkeeping rather than the two-at-a-time
    recurrence, so agreement between the two is meaningful.
    """

    @lru_cache(maxsize=None)
    def before_day(n: int, m: int) -> Fraction:
        if m == 0:
            return Fraction(0)
        if boundary.mafia_wins(n, m):
            return Fraction(1)
        lynch_mafia = Fraction(m, n)
        return lynch_mafia * before_night(n - 1, m - 1) + (
            1 - lynch_mafia
        ) * before_night(n - 1, m)

    @lru_cache(maxsize=None)
    def before_night(n: int, m: int) -> Fraction:
        if m == 0:
            return Fraction(0)
        if boundary.mafia_wins(n, m):
            return Fraction(1)
        return before_day(n - 1, m)  # the mafia kills a citizen

    return before_day(n, m)


def ternary_argmax(fn, lo: float, hi: float, iterations: int = 200) -> float:
    """Argmax of a unimodal function on [lo, hi]; handles boundary maxima."""
    for _ in range(iterations):
        third = (hi - lo) / 3.0
        a = lo + third
        b = hi - third
        if fn(a) < fn(b):
            lo = a
        else:
            hi = b
    return 0.5 * (lo + hi)
