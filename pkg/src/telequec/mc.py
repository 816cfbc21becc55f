"""Monte Carlo simulation of single-link entanglement distribution.

Each trial draws the number of detected raw pairs from Binomial(m, p),
then repeatedly pairs survivors (discarding an odd leftover) and keeps
each pair with the analytic per-round purification success probability.
Trials use independent substreams derived from (seed, trial index), so
serial and parallel runs aggregate to identical results.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .states import BellDiagonalState, DomainError, purify_step


@dataclass(frozen=True)
class LinkSimConfig:
    m: int  # quantum memory size / initial EPR attempts
    p: float  # per-pair detection success probability
    b: int  # purification rounds
    initial_state: BellDiagonalState
    trials: int
    seed: int

    def __post_init__(self) -> None:
        if self.m < 1 or self.b < 0 or self.trials < 1:
            raise DomainError("m and trials must be >= 1, b >= 0")
        if not 0.0 <= self.p <= 1.0:
            raise DomainError(f"p {self.p} outside [0, 1]")


@dataclass(frozen=True)
class LinkSimResult:
    """Aggregated yields: round 0 is the raw detected count."""

    yield_histogram: dict[int, Counter]
    mean_yield: list[float]
    empirical_success: list[float]  # per purification round 1..b
    success_samples: list[int]  # pairs attempted per round, for sigma bounds


def success_chain(initial: BellDiagonalState, rounds: int) -> list[float]:
    """Analytic success probability of each purification round."""
    probs = []
    state = initial
    for _ in range(rounds):
        state, n = purify_step(state)
        probs.append(n)
    return probs


def pair_up(count: int) -> tuple[int, int]:
    """Group survivors into purification pairs; returns (pairs, discarded)."""
    return count // 2, count % 2


def simulate_link(config: LinkSimConfig) -> LinkSimResult:
    n_rounds = config.b
    chain = success_chain(config.initial_state, n_rounds)
    histograms: dict[int, Counter] = {r: Counter() for r in range(n_rounds + 1)}
    totals = np.zeros(n_rounds + 1, dtype=np.int64)
    survivors_sum = np.zeros(n_rounds, dtype=np.int64)
    attempts_sum = np.zeros(n_rounds, dtype=np.int64)

    for trial in range(config.trials):
        rng = np.random.default_rng(np.random.SeedSequence([config.seed, trial]))
        count = int(rng.binomial(config.m, config.p))
        histograms[0][count] += 1
        totals[0] += count
        for r in range(1, n_rounds + 1):
            pairs, _ = pair_up(count)
            count = int(rng.binomial(pairs, chain[r - 1])) if pairs else 0
            histograms[r][count] += 1
            totals[r] += count
            survivors_sum[r - 1] += count
            attempts_sum[r - 1] += pairs

    empirical = [
        survivors_sum[r] / attempts_sum[r] if attempts_sum[r] else 0.0
        for r in range(n_rounds)
    ]
    return LinkSimResult(
        yield_histogram=histograms,
        mean_yield=[t / config.trials for t in totals],
        empirical_success=empirical,
        success_samples=[int(a) for a in attempts_sum],
    )


def analytic_mean_yield(config: LinkSimConfig) -> list[float]:
    """Mean-field yield chain E[n_{i+1}] ~ N_{i+1} * floor(E[n_i] / 2).

    The floor makes this an approximation of the true expectation; it is
    exact for deterministic counts (p = 1).
    """
    chain = success_chain(config.initial_state, config.b)
    expected = [config.m * config.p]
    for n_i in chain:
        expected.append(n_i * np.floor(expected[-1] / 2.0))
    return [float(e) for e in expected]
