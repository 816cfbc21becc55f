"""Hybrid purification / error-correction analysis for quantum links.

Core objects: Bell-diagonal pair states, the Pauli channel induced by
teleporting through them, bounded-distance code performance, Burst-b
protocol trajectories, schedule search, a Monte Carlo link simulator and
an exact density-matrix cross-check.
"""

from .codes import (
    BUILTIN_CODES,
    UNCODED,
    CodeCatalog,
    CodeSpec,
    brute_force_logical_error,
    builtin_catalog,
    load_catalog,
    logical_error_asymmetric,
    logical_error_by_asymmetry,
    logical_error_symmetric,
)
from .mc import LinkSimConfig, LinkSimResult, analytic_mean_yield, simulate_link
from .protocol import (
    BurstSchedule,
    LatencyModel,
    TrajectoryPoint,
    classical_messages,
    coded_burst_error,
    required_purification_steps,
    run_burst,
)
from .scheduler import SchedulePlan, SearchReport, evaluate_plan, exhaustive_search
from .states import (
    BellDiagonalState,
    DomainError,
    PauliChannel,
    channel_of,
    one_step_asymmetry,
    one_step_error,
    one_step_werner_components,
    purify_step,
    swap_step,
    werner,
)

__all__ = [
    "BUILTIN_CODES",
    "UNCODED",
    "BellDiagonalState",
    "BurstSchedule",
    "CodeCatalog",
    "CodeSpec",
    "DomainError",
    "LatencyModel",
    "LinkSimConfig",
    "LinkSimResult",
    "PauliChannel",
    "SchedulePlan",
    "SearchReport",
    "TrajectoryPoint",
    "analytic_mean_yield",
    "brute_force_logical_error",
    "builtin_catalog",
    "channel_of",
    "classical_messages",
    "coded_burst_error",
    "evaluate_plan",
    "exhaustive_search",
    "load_catalog",
    "logical_error_asymmetric",
    "logical_error_by_asymmetry",
    "logical_error_symmetric",
    "one_step_asymmetry",
    "one_step_error",
    "one_step_werner_components",
    "purify_step",
    "required_purification_steps",
    "run_burst",
    "simulate_link",
    "swap_step",
    "werner",
]

__version__ = "0.1.0"
