import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from mafia_odds.core import BoundaryRule
from mafia_odds.evolution import evolve_discrete
from mafia_odds.montecarlo import (
    estimate_distribution,
    estimate_win_chance,
    simulate_game,
    Winner,
)
from mafia_odds.winchance import win_chance_recurrence

from oracles import brute_force_win_chance

STRICT = BoundaryRule.STRICT_MAJORITY
TIES = BoundaryRule.TIES


class TestSimulateGame:
    def test_immediate_mafia_win_is_a_single_state(self):
        traj = simulate_game(3, 3, STRICT, random.Random(0))
        assert traj.winner is Winner.MAFIA
        assert len(traj.states) == 1

    def test_immediate_citizens_win(self):
        traj = simulate_game(1, 0, STRICT, random.Random(0))
        assert traj.winner is Winner.CITIZENS
        assert len(traj.states) == 1

    def test_rejects_invalid_state(self):
        with pytest.raises(ValueError):
            simulate_game(2, 3, STRICT, random.Random(0))

    @given(
        st.integers(min_value=0, max_value=20).flatmap(
            lambda n: st.tuples(st.just(n), st.integers(min_value=0, max_value=n))
        ),
        st.sampled_from([STRICT, TIES]),
        st.integers(min_value=0, max_value=2**32),
    )
    def test_trajectory_structure(self, state, boundary, seed):
        n, m = state
        traj = simulate_game(n, m, boundary, random.Random(seed))
        assert traj.states[0].n == n and traj.states[0].m == m
        for prev, cur in zip(traj.states, traj.states[1:]):
            assert prev.m - cur.m in (0, 1)
            assert prev.n - cur.n == 2 or (
                prev.n - cur.n == 1 and cur is traj.states[-1]
            )
        last = traj.states[-1]
        if traj.winner is Winner.CITIZENS:
            assert last.m == 0
        else:
            assert boundary.mafia_wins(last.n, last.m)

    @pytest.mark.parametrize("n,m", [(4, 1), (9, 3), (10, 5)])
    def test_day_lynch_kills_mafia_at_rate_m_over_n(self, n, m):
        rng = random.Random(1234)
        trials = 10**5
        hits = sum(
            simulate_game(n, m, STRICT, rng).states[1].m == m - 1
            for _ in range(trials)
        )
        p = m / n
        tolerance = 4 * math.sqrt(p * (1 - p) / trials)
        assert abs(hits / trials - p) < tolerance

    def test_loop_frequency_matches_exact_chance(self):
        rng = random.Random(77)
        trials = 20_000
        wins = sum(
            simulate_game(7, 2, STRICT, rng).winner is Winner.MAFIA
            for _ in range(trials)
        )
        exact = float(brute_force_win_chance(7, 2, STRICT))
        assert abs(wins / trials - exact) < 4 * math.sqrt(exact * (1 - exact) / trials)


class TestEstimateWinChance:
    def test_certain_outcomes_are_exact(self):
        report = estimate_win_chance(5, 5, STRICT, 10, seed=1)
        assert report.estimate == 1.0 and report.mafia_wins == 10
        report = estimate_win_chance(6, 0, STRICT, 10, seed=1)
        assert report.estimate == 0.0 and report.std_error == 0.0

    def test_report_arithmetic(self):
        report = estimate_win_chance(9, 1, STRICT, 5000, seed=3)
        assert report.estimate == report.mafia_wins / report.trials
        assert report.std_error == pytest.approx(
            math.sqrt(report.estimate * (1 - report.estimate) / report.trials)
        )
        assert (report.n, report.m, report.trials, report.seed) == (9, 1, 5000, 3)

    def test_coin_flip_state(self):
        report = estimate_win_chance(2, 1, STRICT, 10**5, seed=8)
        assert abs(report.estimate - 0.5) < 4 * report.std_error

    @pytest.mark.parametrize("boundary", [STRICT, TIES])
    def test_statistical_agreement_with_recurrence(self, boundary):
        for n, m in [(7, 2), (8, 3), (12, 4)]:
            report = estimate_win_chance(n, m, boundary, 10**5, seed=5)
            exact = float(win_chance_recurrence(n, m, boundary))
            assert abs(report.estimate - exact) <= 4 * report.std_error, (n, m)

    def test_deterministic_across_runs_and_workers(self):
        base = estimate_win_chance(9, 2, STRICT, 150_000, seed=42)
        again = estimate_win_chance(9, 2, STRICT, 150_000, seed=42)
        forked = estimate_win_chance(9, 2, STRICT, 150_000, seed=42, threads=2)
        assert base == again == forked

    def test_thread_cap_env_var_does_not_change_results(self, monkeypatch):
        base = estimate_win_chance(9, 2, STRICT, 150_000, seed=9)
        monkeypatch.setenv("MAFIA_ODDS_THREADS", "2")
        assert estimate_win_chance(9, 2, STRICT, 150_000, seed=9) == base
        monkeypatch.setenv("MAFIA_ODDS_THREADS", "0")
        assert estimate_win_chance(9, 2, STRICT, 150_000, seed=9) == base

    def test_seed_changes_the_sample(self):
        a = estimate_win_chance(9, 1, STRICT, 10**4, seed=1)
        b = estimate_win_chance(9, 1, STRICT, 10**4, seed=2)
        assert a.mafia_wins != b.mafia_wins

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            estimate_win_chance(3, 4, STRICT, 10, seed=0)
        with pytest.raises(ValueError):
            estimate_win_chance(3, 1, STRICT, 0, seed=0)
        with pytest.raises(ValueError):
            estimate_win_chance(3, 1, STRICT, 10, seed=-1)
        with pytest.raises(ValueError):
            estimate_win_chance(3, 1, STRICT, 10, seed=1 << 64)


class TestEstimateDistribution:
    def test_zero_turns_is_a_point_mass(self):
        emp = estimate_distribution(8, 2, 0, 1000, seed=4)
        assert emp.counts == (0, 0, 1000)
        assert emp.probs == (0.0, 0.0, 1.0)

    def test_counts_total_the_trials(self):
        emp = estimate_distribution(32, 4, 8, 50_000, seed=4)
        assert sum(emp.counts) == emp.trials == 50_000
        assert emp.probs == tuple(c / emp.trials for c in emp.counts)

    def test_one_step_frequencies(self):
        emp = estimate_distribution(4, 1, 1, 10**5, seed=6)
        se = math.sqrt(0.75 * 0.25 / emp.trials)
        assert abs(emp.probs[1] - 0.75) < 4 * se

    def test_total_variation_against_exact_evolution(self):
        emp = estimate_distribution(32, 4, 8, 10**5, seed=10)
        exact = evolve_discrete(32, 4, 8)
        tv = 0.5 * sum(
            abs(emp.probs[m] - float(exact.probs[m])) for m in range(5)
        )
        assert tv < 0.01

    def test_deterministic_across_workers(self):
        a = estimate_distribution(16, 3, 4, 100_000, seed=11)
        b = estimate_distribution(16, 3, 4, 100_000, seed=11, threads=2)
        assert a == b

    def test_rejects_time_outside_window(self):
        with pytest.raises(ValueError):
            estimate_distribution(8, 2, 4, 100, seed=0)
