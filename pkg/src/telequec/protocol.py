"""Burst-b protocol analysis: b purification rounds, then s swapping steps.

Produces full trajectories of the pair state together with the induced
channel statistics (error probability and asymmetry per step), the coded
end-to-end logical error probability, and a classical-message latency
model for the purification handshake.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, TextIO

from .codes import CodeSpec, logical_error_by_asymmetry
from .states import BellDiagonalState, DomainError, channel_of, purify_step, swap_step


@dataclass(frozen=True)
class BurstSchedule:
    """b purification steps followed by s swaps (covering 2**s link hops)."""

    b: int
    s: int
    initial_state: BellDiagonalState

    def __post_init__(self) -> None:
        if self.b < 0 or self.s < 0:
            raise DomainError("step counts must be non-negative")

    @property
    def hops(self) -> int:
        return 2**self.s


@dataclass(frozen=True)
class TrajectoryPoint:
    step_index: int
    phase: str  # "init", "purify" or "swap"
    state: BellDiagonalState
    rho: float
    a_eq: float
    success_prob: float  # 1 for swap steps at this abstraction level


@dataclass(frozen=True)
class LatencyModel:
    """Maps a purification count b to a number of classical messages."""

    messages_for_burst: Callable[[int], int]
    label: str


def _default_messages(b: int) -> int:
    # b=0 still needs the EPR stream plus the mandatory keep message; one
    # purification rides the three-step handshake; beyond that, every two
    # extra rounds piggyback on one additional message in each direction.
    if b < 0:
        raise DomainError("b must be non-negative")
    if b == 0:
        return 2
    if b == 1:
        return 3
    return 3 + math.ceil((b - 1) / 2)


DEFAULT_LATENCY = LatencyModel(messages_for_burst=_default_messages, label="forward")

# Back-and-forward variant: one extra classical message for the return
# teleport; the pair-state evolution is unchanged.
BACK_AND_FORWARD_LATENCY = LatencyModel(
    messages_for_burst=lambda b: _default_messages(b) + 1,
    label="back-and-forward",
)


def classical_messages(b: int, model: LatencyModel = DEFAULT_LATENCY) -> int:
    return model.messages_for_burst(b)


def _point(step: int, phase: str, state: BellDiagonalState, success: float) -> TrajectoryPoint:
    ch = channel_of(state)
    return TrajectoryPoint(step, phase, state, ch.rho, ch.a_eq, success)


def run_burst(schedule: BurstSchedule) -> list[TrajectoryPoint]:
    """Full step-by-step trajectory, including the initial state as step 0."""
    state = schedule.initial_state
    points = [_point(0, "init", state, 1.0)]
    for i in range(schedule.b):
        state, success = purify_step(state)
        points.append(_point(i + 1, "purify", state, success))
    for i in range(schedule.s):
        state = swap_step(state)
        points.append(_point(schedule.b + i + 1, "swap", state, 1.0))
    return points


def coded_burst_error(schedule: BurstSchedule, code: CodeSpec) -> float:
    """Logical error probability of teleporting a codeword over the final pair."""
    final = run_burst(schedule)[-1]
    return logical_error_by_asymmetry(code, final.rho, final.a_eq)


def required_purification_steps(
    initial: BellDiagonalState, target_error: float, max_steps: int
) -> int | None:
    """Smallest number of purification rounds reaching the target error.

    Returns None when max_steps rounds are not enough (saturation).
    """
    if not 0.0 < target_error < 1.0:
        raise DomainError(f"target_error {target_error} outside (0, 1)")
    state = initial
    if state.rho <= target_error:
        return 0
    for i in range(1, max_steps + 1):
        state, _ = purify_step(state)
        if state.rho <= target_error:
            return i
    return None


TRAJECTORY_COLUMNS = (
    "step",
    "phase",
    "A",
    "B",
    "C",
    "D",
    "rho",
    "a_eq",
    "success_prob",
    "messages",
)


def write_trajectory_csv(
    points: Iterable[TrajectoryPoint],
    out: TextIO,
    model: LatencyModel = DEFAULT_LATENCY,
) -> None:
    """Emit a trajectory table; the messages column counts the classical
    messages needed for the purifications completed up to each row."""
    out.write(",".join(TRAJECTORY_COLUMNS) + "\n")
    purifications = 0
    for p in points:
        if p.phase == "purify":
            purifications += 1
        fields = [
            str(p.step_index),
            p.phase,
            *(format(v, ".17g") for v in p.state.as_tuple()),
            format(p.rho, ".17g"),
            format(p.a_eq, ".17g"),
            format(p.success_prob, ".17g"),
            str(classical_messages(purifications, model)),
        ]
        out.write(",".join(fields) + "\n")
