"""Distribution of the mafia count over time, exactly and in a continuous limit.

Write p_m(t) for the probability that m of the initial M mafia are alive
after t full turns of a game that started with N players.  Each turn the
population shrinks by two and the lynch kills a mafioso with probability
m/alive, giving the exact update

    p_m(t+1) = ((N - 2t - m)/(N - 2t)) p_m(t) + ((m+1)/(N - 2t)) p_{m+1}(t).

Treating t as continuous turns the update into a linear ODE system whose
solution is binomial with survival amplitude s(t) = sqrt(1 - 2t/N).  The
exact path works in rationals; the continuous path in floats, with a
fixed-step Runge-Kutta integrator as an independent numerical check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .core import falling_product

__all__ = [
    "ContinuousDistribution",
    "Distribution",
    "evolve_discrete",
    "integrate_continuous",
    "mean_continuous",
    "mean_discrete",
    "peak_time",
    "pm_closed",
    "pm_continuous",
    "win_chance_continuous",
    "win_chance_continuous_linearized",
    "win_chance_from_evolution",
]


@dataclass(frozen=True)
class Distribution:
    """Exact state distribution after ``t`` full turns: probs[m] = p_m(t)."""

    N: int
    M: int
    t: int
    probs: tuple[Fraction, ...]

    @property
    def mean(self) -> Fraction:
        return sum((m * p for m, p in enumerate(self.probs)), Fraction(0))


@dataclass(frozen=True)
class ContinuousDistribution:
    """Float-valued distribution of the continuous-time approximation."""

    N: int
    M: int
    t: float
    probs: tuple[float, ...]

    @property
    def mean(self) -> float:
        return sum(m * p for m, p in enumerate(self.probs))


def _check_initial(N: int, M: int) -> None:
    if N < 1:
        raise ValueError(f"need N >= 1, got N={N}")
    if not (0 <= M <= N):
        raise ValueError(f"need 0 <= M <= N, got N={N}, M={M}")


def evolve_discrete(N: int, M: int, t: int) -> Distribution:
    """Apply t exact update steps starting from the point mass at M.

    Only turns with a citizen guaranteed alive are modeled, so t must stay
    within the validity window 2t <= N - M; outside it the update's
    coefficients stop describing a real game and the call is refused.
    """
    _check_initial(N, M)
    if t < 0 or 2 * t > N - M:
        raise ValueError(f"need 0 <= 2t <= N - M, got N={N}, M={M}, t={t}")
    probs = [Fraction(0)] * (M + 1)
    probs[M] = Fraction(1)
    for step in range(t):
        alive = N - 2 * step
        nxt = []
        for m in range(M + 1):
            keep = Fraction(alive - m, alive) * probs[m]
            if m < M:
                keep += Fraction(m + 1, alive) * probs[m + 1]
            nxt.append(keep)
        probs = nxt
    return Distribution(N=N, M=M, t=t, probs=tuple(probs))


def pm_closed(N: int, M: int, m: int, t: int) -> Fraction:
    """Closed form for p_m(t), bypassing the step-by-step evolution.

    p_m(t) = sum_{i=m}^{M} C(M, i) C(i, m) (-1)^(i-m) falling_product(N, t, i).

    Agrees with ``evolve_discrete`` on the whole validity window, and stays
    defined up to 2t = N, which is what the endgame evaluation in
    ``win_chance_from_evolution`` needs.
    """
    _check_initial(N, M)
    if m < 0:
        raise ValueError(f"need m >= 0, got m={m}")
    if t < 0 or 2 * t > N:
        raise ValueError(f"need 0 <= 2t <= N, got N={N}, t={t}")
    total = Fraction(0)
    for i in range(m, M + 1):
        term = math.comb(M, i) * math.comb(i, m) * falling_product(N, t, i)
        total += -term if (i - m) % 2 else term
    return total


def mean_discrete(N: int, M: int, t: int) -> Fraction:
    """Exact mean mafia count after t turns: M prod_{i<t} (N-2i-1)/(N-2i)."""
    _check_initial(N, M)
    if t < 0 or N - 2 * t - M < 0:
        raise ValueError(f"need 0 <= 2t <= N - M, got N={N}, M={M}, t={t}")
    value = Fraction(M)
    for i in range(t):
        value *= Fraction(N - 2 * i - 1, N - 2 * i)
    return value


def _survival(N: int, t: float) -> float:
    # guard the radicand against float dust at t = N/2
    return math.sqrt(max(0.0, 1.0 - 2.0 * t / N))


def pm_continuous(N: int, M: int, m: int, t: float) -> float:
    """Continuous-time p_m(t) = C(M, m) (1 - s)^(M-m) s^m with s = sqrt(1 - 2t/N).

    Binomial in shape: each mafioso independently "survives to time t" with
    amplitude s.  Defined for real t in [0, N/2]; m > M simply gives 0.
    """
    _check_initial(N, M)
    if m < 0:
        raise ValueError(f"need m >= 0, got m={m}")
    if not 0.0 <= t <= N / 2:
        raise ValueError(f"need 0 <= t <= N/2, got N={N}, t={t}")
    if m > M:
        return 0.0
    s = _survival(N, t)
    return math.comb(M, m) * (1.0 - s) ** (M - m) * s**m


def peak_time(N: int, M: int, m: int) -> float:
    """Time at which p_m(t) of the continuous approximation is maximal.

    t_m = (N/2)(1 - (m/M)^2), from setting the derivative of the binomial
    closed form to zero.  The interior-maximum derivation needs 1 <= m <= M;
    m = 0 grows right up to the boundary t = N/2 and is refused.
    """
    _check_initial(N, M)
    if not 1 <= m <= M:
        raise ValueError(f"need 1 <= m <= M, got M={M}, m={m}")
    return (N / 2) * (1.0 - (m / M) ** 2)


def mean_continuous(N: int, M: int, t: float) -> float:
    """Mean of the continuous approximation: M sqrt(1 - 2t/N)."""
    _check_initial(N, M)
    if not 0.0 <= t <= N / 2:
        raise ValueError(f"need 0 <= t <= N/2, got N={N}, t={t}")
    return M * _survival(N, t)


def integrate_continuous(
    N: int, M: int, t_end: float, step: float
) -> ContinuousDistribution:
    """Integrate the continuous-time ODE system with fixed-step classic RK4.

        dp_m/dt = (-m p_m + (m+1) p_{m+1}) / (N - 2t)

    from the point mass at M.  Entirely independent of the closed form, so it
    serves as the numerical oracle for ``pm_continuous``.  The rate blows up
    at t = N/2; t_end must keep at least 10 steps of clearance.  The step is
    nudged to the nearest value that divides t_end evenly.
    """
    _check_initial(N, M)
    if step <= 0.0:
        raise ValueError(f"need step > 0, got step={step}")
    if t_end < 0.0 or t_end > N / 2 - 10.0 * step:
        raise ValueError(
            f"need 0 <= t_end <= N/2 - 10*step, got N={N}, t_end={t_end}, step={step}"
        )

    def rate(p: list[float], t: float) -> list[float]:
        alive = N - 2.0 * t
        out = [0.0] * (M + 1)
        for m in range(M + 1):
            flow = -m * p[m]
            if m < M:
                flow += (m + 1) * p[m + 1]
            out[m] = flow / alive
        return out

    probs = [0.0] * (M + 1)
    probs[M] = 1.0
    steps = max(1, round(t_end / step)) if t_end > 0.0 else 0
    h = t_end / steps if steps else 0.0
    t = 0.0
    size = M + 1
    for _ in range(steps):
        k1 = rate(probs, t)
        k2 = rate([probs[i] + 0.5 * h * k1[i] for i in range(size)], t + 0.5 * h)
        k3 = rate([probs[i] + 0.5 * h * k2[i] for i in range(size)], t + 0.5 * h)
        k4 = rate([probs[i] + h * k3[i] for i in range(size)], t + h)
        probs = [
            probs[i] + (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i])
            for i in range(size)
        ]
        t += h
    return ContinuousDistribution(N=N, M=M, t=t_end, probs=tuple(probs))


def win_chance_continuous(n: int, m: int) -> float:
    """Win-chance read off the continuous approximation: 1 - (1 - 1/sqrt(n))^m.

    This evaluates 1 - p_0 at the endgame time (n-1)/2.  It is deliberately
    coarse for small n (it says 1/2 where the exact answer for one mafioso in
    four players is 3/8) but has the right large-n shape.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got n={n}")
    if m < 0:
        raise ValueError(f"need m >= 0, got m={m}")
    return 1.0 - (1.0 - 1.0 / math.sqrt(n)) ** m


def win_chance_continuous_linearized(n: int, m: int) -> float:
    """First-order version of ``win_chance_continuous``: simply m/sqrt(n)."""
    if n < 1:
        raise ValueError(f"need n >= 1, got n={n}")
    if m < 0:
        raise ValueError(f"need m >= 0, got m={m}")
    return m / math.sqrt(n)


def win_chance_from_evolution(n: int, m: int) -> Fraction:
    """Exact w(n, m) as 1 - p_0(endgame): nobody left to lynch, mafia alive.

    The endgame time is n//2 turns; ``pm_closed`` stays defined there even
    though it lies past the always-a-citizen validity window.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got n={n}")
    if not 0 <= m <= n:
        raise ValueError(f"need 0 <= m <= n, got n={n}, m={m}")
    return 1 - pm_closed(n, m, 0, n // 2)
