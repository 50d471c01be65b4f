"""Seeded Monte Carlo play-through of the random-lynch game.

Two layers:

* :func:`simulate_game` plays a single game step by step against any
  ``random.Random``-style stream and returns the full trajectory.  This is
  the readable reference implementation of the rules.
* :func:`estimate_win_chance` and :func:`estimate_distribution` run millions
  of games vectorized over fixed-size chunks.  Trial ``i`` lives in chunk
  ``i // 65536``; chunk ``j`` draws from ``PCG64(SeedSequence(seed,
  spawn_key=(j,)))`` a row-major matrix of uniform floats, one row of
  ``draws_per_trial`` values per trial.  The per-trial stream is therefore a
  pure function of (seed, trial index), so results never depend on how many
  workers execute the chunks.  A day lynch kills a mafioso when the trial's
  next uniform u satisfies u * alive < m; rounding makes that probability
  differ from m/alive by at most 2^-52, far below any tolerance used here.
"""

from __future__ import annotations

import enum
import math
import multiprocessing
import os
from dataclasses import dataclass

import numpy as np

from .core import BoundaryRule, GameState

__all__ = [
    "CHUNK_TRIALS",
    "EmpiricalDistribution",
    "SimulationReport",
    "Trajectory",
    "Winner",
    "estimate_distribution",
    "estimate_win_chance",
    "simulate_game",
]

# trials per vectorized chunk; part of the seeding contract, do not change
CHUNK_TRIALS = 1 << 16

_MAX_SEED = 1 << 64


class Winner(enum.Enum):
    MAFIA = "mafia"
    CITIZENS = "citizens"


@dataclass(frozen=True)
class Trajectory:
    """One played game: the visited states and who ended up winning.

    Consecutive states differ by a full turn (two eliminations, n -> n-2,
    m -> m or m-1) except for a possibly truncated final step when the game
    ends right after the day lynch.
    """

    states: tuple[GameState, ...]
    winner: Winner


@dataclass(frozen=True)
class SimulationReport:
    n: int
    m: int
    trials: int
    seed: int
    mafia_wins: int
    estimate: float
    std_error: float


@dataclass(frozen=True)
class EmpiricalDistribution:
    """Observed mafia-count frequencies after t full turns."""

    N: int
    M: int
    t: int
    trials: int
    seed: int
    counts: tuple[int, ...]
    probs: tuple[float, ...]


def _check_state(n: int, m: int) -> None:
    if n < 0 or m < 0 or m > n:
        raise ValueError(f"need 0 <= m <= n, got n={n}, m={m}")


def _check_seed(seed: int) -> None:
    if not 0 <= seed < _MAX_SEED:
        raise ValueError(f"seed must be a 64-bit value, got {seed}")


def simulate_game(
    n: int, m: int, boundary: BoundaryRule, rng
) -> Trajectory:
    """Play one game, drawing every lynch from ``rng.randrange``.

    Terminal conditions are checked after every single elimination: a game
    can end right after the day lynch (mafia extinct, or mafia reaching the
    boundary rule's winning share before night), in which case the final
    recorded state reflects only that one elimination.
    """
    _check_state(n, m)
    states = [GameState(n, m)]
    while True:
        if m == 0:
            return Trajectory(tuple(states), Winner.CITIZENS)
        if boundary.mafia_wins(n, m):
            return Trajectory(tuple(states), Winner.MAFIA)
        # day: lynch a uniformly random living player
        if rng.randrange(n) < m:
            m -= 1
        n -= 1
        if m == 0 or boundary.mafia_wins(n, m):
            states.append(GameState(n, m))
            continue
        # night: the mafia kills a citizen
        n -= 1
        states.append(GameState(n, m))


def _chunk_uniforms(seed: int, chunk_index: int, rows: int, draws: int) -> np.ndarray:
    ss = np.random.SeedSequence(entropy=seed, spawn_key=(chunk_index,))
    return np.random.Generator(np.random.PCG64(ss)).random((rows, draws))


def _win_chunk(
    seed: int, chunk_index: int, rows: int, n: int, m: int, boundary: BoundaryRule
) -> int:
    """Count mafia wins among one chunk of trials, all states vectorized."""
    draws = n // 2 + 1
    uniforms = _chunk_uniforms(seed, chunk_index, rows, draws)
    mafia = np.full(rows, m, dtype=np.int64)
    done = np.zeros(rows, dtype=bool)
    won = np.zeros(rows, dtype=bool)
    ties = boundary is BoundaryRule.TIES
    alive = n
    for day in range(draws):
        extinct = ~done & (mafia == 0)
        done |= extinct
        share = 2 * mafia >= alive if ties else 2 * mafia > alive
        reached = ~done & share
        won |= reached
        done |= reached
        if done.all():
            break
        active = ~done
        mafia -= active & (uniforms[:, day] * alive < mafia)
        # post-lynch checks at population alive - 1
        done |= active & (mafia == 0)
        share = 2 * mafia >= alive - 1 if ties else 2 * mafia > alive - 1
        reached = active & ~done & share
        won |= reached
        done |= reached
        alive -= 2
    assert done.all()
    return int(won.sum())


def _distribution_chunk(
    seed: int, chunk_index: int, rows: int, N: int, M: int, t: int
) -> np.ndarray:
    """Mafia-count histogram after t turns for one chunk of trials."""
    uniforms = _chunk_uniforms(seed, chunk_index, rows, max(t, 1))
    mafia = np.full(rows, M, dtype=np.int64)
    for step in range(t):
        alive = N - 2 * step
        mafia -= uniforms[:, step] * alive < mafia
    return np.bincount(mafia, minlength=M + 1)


def _worker_count(threads: int | None, chunks: int) -> int:
    """Requested workers, capped by MAFIA_ODDS_THREADS (0 = auto) and chunk count."""
    auto = os.cpu_count() or 1
    request = auto if threads is None else (auto if threads == 0 else threads)
    cap_env = os.environ.get("MAFIA_ODDS_THREADS")
    if cap_env is not None:
        cap = int(cap_env)
        request = min(request, auto if cap == 0 else cap)
    return max(1, min(request, chunks))


def _chunk_layout(trials: int) -> list[tuple[int, int]]:
    full, rest = divmod(trials, CHUNK_TRIALS)
    layout = [(j, CHUNK_TRIALS) for j in range(full)]
    if rest:
        layout.append((full, rest))
    return layout


def _map_chunks(fn, args_list, threads: int | None):
    workers = _worker_count(threads, len(args_list))
    if workers == 1:
        return [fn(*args) for args in args_list]
    with multiprocessing.Pool(workers) as pool:
        return pool.starmap(fn, args_list)


def estimate_win_chance(
    n: int,
    m: int,
    boundary: BoundaryRule,
    trials: int,
    seed: int,
    threads: int | None = None,
) -> SimulationReport:
    """Estimate w(n, m) from ``trials`` independent seeded games.

    The report is a pure function of (n, m, boundary, trials, seed): the
    chunked stream construction in the module docstring makes the outcome
    independent of ``threads`` and of the MAFIA_ODDS_THREADS cap.
    """
    _check_state(n, m)
    _check_seed(seed)
    if trials < 1:
        raise ValueError(f"need trials >= 1, got {trials}")
    args = [(seed, j, rows, n, m, boundary) for j, rows in _chunk_layout(trials)]
    wins = sum(_map_chunks(_win_chunk, args, threads))
    estimate = wins / trials
    std_error = math.sqrt(estimate * (1.0 - estimate) / trials)
    return SimulationReport(
        n=n,
        m=m,
        trials=trials,
        seed=seed,
        mafia_wins=wins,
        estimate=estimate,
        std_error=std_error,
    )


def estimate_distribution(
    N: int,
    M: int,
    t: int,
    trials: int,
    seed: int,
    threads: int | None = None,
) -> EmpiricalDistribution:
    """Empirical counterpart of ``evolve_discrete`` at turn t.

    Within the validity window 2t <= N - M no trajectory can run out of
    citizens, so the t lynch draws are performed unconditionally; a trial
    whose mafia is already extinct just keeps m = 0.
    """
    if N < 1 or not 0 <= M <= N:
        raise ValueError(f"need 1 <= N and 0 <= M <= N, got N={N}, M={M}")
    if t < 0 or 2 * t > N - M:
        raise ValueError(f"need 0 <= 2t <= N - M, got N={N}, M={M}, t={t}")
    _check_seed(seed)
    if trials < 1:
        raise ValueError(f"need trials >= 1, got {trials}")
    args = [(seed, j, rows, N, M, t) for j, rows in _chunk_layout(trials)]
    counts = sum(_map_chunks(_distribution_chunk, args, threads))
    counts = tuple(int(c) for c in counts)
    probs = tuple(c / trials for c in counts)
    return EmpiricalDistribution(
        N=N, M=M, t=t, trials=trials, seed=seed, counts=counts, probs=probs
    )
