"""Bell-diagonal two-qubit states and the Pauli channel they induce.

A shared entangled pair is described by a probability 4-vector (a, b, c, d)
over the Bell states (Phi+, Psi-, Psi+, Phi-).  Teleporting a qubit through
such a pair is equivalent to sending it through a Pauli channel with
(p_x, p_y, p_z) = (c, b, d).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

_NORM_TOL = 1e-9
_COMPONENT_TOL = 1e-12


class DomainError(ValueError):
    """Input outside the valid parameter range."""


@dataclass(frozen=True)
class BellDiagonalState:
    """Probabilities of Phi+, Psi-, Psi+ and Phi- respectively.

    ``a`` is the pair fidelity; ``b + c + d`` is the pair error probability.
    """

    a: float
    b: float
    c: float
    d: float

    def __post_init__(self) -> None:
        for name, value in zip("abcd", (self.a, self.b, self.c, self.d)):
            if not -_COMPONENT_TOL <= value <= 1.0 + _COMPONENT_TOL:
                raise DomainError(f"component {name}={value} outside [0, 1]")
        total = self.a + self.b + self.c + self.d
        if abs(total - 1.0) > _NORM_TOL:
            raise DomainError(f"components sum to {total}, expected 1")

    @property
    def fidelity(self) -> float:
        return self.a

    @property
    def rho(self) -> float:
        """Pair error probability, 1 - fidelity."""
        return self.b + self.c + self.d

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.a, self.b, self.c, self.d)

    @staticmethod
    def normalized(a: float, b: float, c: float, d: float) -> "BellDiagonalState":
        """Build a state from non-negative weights, dividing out their sum."""
        total = a + b + c + d
        if total <= 0.0:
            raise DomainError("cannot normalize all-zero weights")
        return BellDiagonalState(a / total, b / total, c / total, d / total)


@dataclass(frozen=True)
class PauliChannel:
    """Single-qubit Pauli channel with X, Y and Z flip probabilities."""

    p_x: float
    p_y: float
    p_z: float

    def __post_init__(self) -> None:
        for name, value in (("p_x", self.p_x), ("p_y", self.p_y), ("p_z", self.p_z)):
            if not -_COMPONENT_TOL <= value <= 1.0 + _COMPONENT_TOL:
                raise DomainError(f"{name}={value} outside [0, 1]")
        if self.p_x + self.p_y + self.p_z > 1.0 + _NORM_TOL:
            raise DomainError("flip probabilities sum above 1")

    @property
    def rho(self) -> float:
        """Total qubit error probability."""
        return self.p_x + self.p_y + self.p_z

    @property
    def a_eq(self) -> float:
        """Equivalent asymmetry 2*p_z / (p_x + p_y).

        Conventions: an error-free channel reports 1 (depolarizing-like
        placeholder) and a pure-phase-flip channel reports +inf, so sweeps
        never produce NaN.
        """
        if self.rho == 0.0:
            return 1.0
        denom = self.p_x + self.p_y
        if denom == 0.0:
            return math.inf
        return 2.0 * self.p_z / denom


def werner(fidelity: float) -> BellDiagonalState:
    """Werner state: the three error components share (1 - fidelity) equally."""
    if not 0.0 <= fidelity <= 1.0:
        raise DomainError(f"fidelity {fidelity} outside [0, 1]")
    e = (1.0 - fidelity) / 3.0
    return BellDiagonalState(fidelity, e, e, e)


def purify_step(state: BellDiagonalState) -> tuple[BellDiagonalState, float]:
    """One round of recurrence purification on two identical pairs.

    Returns the post-selected state and the success probability
    N = (a+b)^2 + (c+d)^2 of the two check measurements agreeing.
    """
    a, b, c, d = state.as_tuple()
    n = (a + b) ** 2 + (c + d) ** 2
    if n <= 0.0:
        raise DomainError("purification success probability is zero")
    return (
        BellDiagonalState.normalized(a * a + b * b, 2.0 * c * d, c * c + d * d, 2.0 * a * b),
        n,
    )


def swap_step(state: BellDiagonalState) -> BellDiagonalState:
    """Entanglement swapping of two identical pairs into one longer link.

    The output weights sum to (a+b+c+d)^2 = 1, so no renormalization is
    needed beyond guarding round-off.
    """
    a, b, c, d = state.as_tuple()
    return BellDiagonalState.normalized(
        a * a + b * b + c * c + d * d,
        2.0 * (a * b + c * d),
        2.0 * (a * c + b * d),
        2.0 * (a * d + c * b),
    )


def channel_of(state: BellDiagonalState) -> PauliChannel:
    """Pauli channel equivalent to teleportation through the given pair."""
    return PauliChannel(p_x=state.c, p_y=state.b, p_z=state.d)


def one_step_asymmetry(rho0: float) -> float:
    """Channel asymmetry after one purification of a Werner pair.

    Closed form 3 * (1/rho0 - 1), where rho0 is the initial error
    probability of the Werner pair.
    """
    if not 0.0 < rho0 < 1.0:
        raise DomainError(f"rho0 {rho0} outside (0, 1)")
    return 3.0 * (1.0 / rho0 - 1.0)


def one_step_error(rho0: float) -> float:
    """Pair error probability after one purification of a Werner pair.

    Closed form 2*rho0*(3 - rho0) / (9 - 12*rho0 + 8*rho0^2); approaches
    2*rho0/3 for small rho0.
    """
    if not 0.0 <= rho0 < 1.0:
        raise DomainError(f"rho0 {rho0} outside [0, 1)")
    return 2.0 * rho0 * (3.0 - rho0) / (9.0 - 12.0 * rho0 + 8.0 * rho0 * rho0)


def one_step_werner_components(rho0: float) -> BellDiagonalState:
    """Full state after one purification of a Werner pair, in closed form."""
    if not 0.0 <= rho0 < 1.0:
        raise DomainError(f"rho0 {rho0} outside [0, 1)")
    f = 1.0 - rho0
    return BellDiagonalState.normalized(
        f * f + (1.0 - f) ** 2 / 9.0,
        2.0 * (1.0 - f) ** 2 / 9.0,
        2.0 * (1.0 - f) ** 2 / 9.0,
        2.0 * f * (1.0 - f) / 3.0,
    )
