"""Logical error probability of [[n,k]] codes under bounded-distance decoding.

Codes are modeled purely by their correction capability: up to ``e_g``
generic Pauli errors plus ``e_z`` additional Z-only errors.  Symmetric
codes are the ``e_z = 0`` case.  An exhaustive enumeration over error-type
counts serves as an independent oracle for the closed-form expressions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

from .states import DomainError, PauliChannel

_BRUTE_FORCE_MAX_N = 15
_PZ_CLAMP = 1e-15


@dataclass(frozen=True)
class CodeSpec:
    """[[n, k]] code correcting e_g generic errors plus e_z extra Z errors."""

    n: int
    k: int
    e_g: int
    e_z: int
    label: str
    distance: int | None = None  # optional metadata, drives no computation

    def __post_init__(self) -> None:
        if not 1 <= self.k <= self.n:
            raise DomainError(f"need 1 <= k <= n, got k={self.k}, n={self.n}")
        if self.e_g < 0 or self.e_z < 0 or self.e_g + self.e_z > self.n:
            raise DomainError(f"invalid capability ({self.e_g}, {self.e_z}) for n={self.n}")

    @property
    def t(self) -> int | None:
        """Generic correction radius floor((d-1)/2) when distance is known."""
        if self.distance is None:
            return None
        return (self.distance - 1) // 2


UNCODED = CodeSpec(n=1, k=1, e_g=0, e_z=0, label="uncoded")

# Short codes used throughout the analyses: the [[3,1]] and [[5,1]]
# phase-flip repetition codes, the 5-qubit code, an [[11,1]] double-error
# correcting code, and the [[9,1]] / [[13,1]] asymmetric codes.
BUILTIN_CODES = [
    CodeSpec(3, 1, 0, 1, "[[3,1]](0,1)"),
    CodeSpec(5, 1, 0, 2, "[[5,1]](0,2)"),
    CodeSpec(5, 1, 1, 0, "[[5,1]](1,0)", distance=3),
    CodeSpec(9, 1, 1, 1, "[[9,1]](1,1)"),
    CodeSpec(11, 1, 2, 0, "[[11,1]](2,0)", distance=5),
    CodeSpec(13, 1, 1, 2, "[[13,1]](1,2)"),
]


@dataclass(frozen=True)
class CodeCatalog:
    entries: tuple[CodeSpec, ...]

    def __post_init__(self) -> None:
        labels = [c.label for c in self.entries]
        if len(set(labels)) != len(labels):
            raise DomainError("catalog labels must be unique")

    def get(self, label: str) -> CodeSpec:
        for code in self.entries:
            if code.label == label:
                return code
        raise KeyError(f"unknown code label {label!r}")

    def labels(self) -> list[str]:
        return [c.label for c in self.entries]


def builtin_catalog() -> CodeCatalog:
    return CodeCatalog(tuple(BUILTIN_CODES))


def load_catalog(path: str | Path) -> CodeCatalog:
    """Read a catalog file with one ``label, n, k, e_g, e_z`` line per code."""
    entries = []
    for raw in Path(path).read_text().splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = [p.strip() for p in line.split(",")]
        if len(parts) != 5:
            raise DomainError(f"bad catalog line: {raw!r}")
        label = parts[0]
        n, k, e_g, e_z = (int(p) for p in parts[1:])
        entries.append(CodeSpec(n, k, e_g, e_z, label))
    return CodeCatalog(tuple(entries))


def logical_error_symmetric(n: int, t: int, rho: float) -> float:
    """Probability that more than t of n qubits are hit, i.e. decoding fails.

    Equals 1 - sum_{j<=t} C(n,j) rho^j (1-rho)^(n-j); summing the failing
    tail directly keeps full relative precision for tiny results.
    """
    if not 0 <= t <= n:
        raise DomainError(f"need 0 <= t <= n, got t={t}, n={n}")
    if not 0.0 <= rho <= 1.0:
        raise DomainError(f"rho {rho} outside [0, 1]")
    fail = sum(
        math.comb(n, j) * rho**j * (1.0 - rho) ** (n - j) for j in range(t + 1, n + 1)
    )
    return min(max(fail, 0.0), 1.0)


def logical_error_asymmetric(code: CodeSpec, channel: PauliChannel) -> float:
    """Decoding failure probability of an (e_g, e_z) code over a Pauli channel.

    A pattern with j total errors, i of them Z, is correctable iff
    j - i <= e_g (X/Y errors fit in the generic budget) and j <= e_g + e_z.
    The failing patterns are summed directly: expanding rho^j binomially in
    (p_z, rho - p_z) turns the complement of the correctable double sum into
    a sum of positive terms, avoiding 1 - x cancellation for tiny results.
    """
    rho = channel.rho
    p_z = channel.p_z
    p_xy = rho - p_z
    if p_xy < -_PZ_CLAMP:
        raise DomainError(f"p_z={p_z} exceeds total error rate {rho}")
    p_xy = max(p_xy, 0.0)
    fail = 0.0
    for j in range(code.n + 1):
        outer = math.comb(code.n, j) * (1.0 - rho) ** (code.n - j)
        if j > code.e_g + code.e_z:
            fail += outer * rho**j
        else:
            fail += outer * sum(
                math.comb(j, i) * p_z**i * p_xy ** (j - i)
                for i in range(0, max(j - code.e_g, 0))
            )
    return min(max(fail, 0.0), 1.0)


def logical_error_by_asymmetry(code: CodeSpec, rho: float, a_eq: float) -> float:
    """Same failure probability, parameterized by (rho, asymmetry) instead.

    Equivalent to the channel form under p_z = a_eq*rho/(a_eq + 2) and
    p_x = p_y = rho/(a_eq + 2).  An infinite asymmetry is the pure
    phase-flip limit p_z = rho.
    """
    if not 0.0 <= rho <= 1.0:
        raise DomainError(f"rho {rho} outside [0, 1]")
    if a_eq < 0.0:
        raise DomainError(f"a_eq {a_eq} must be non-negative")
    if math.isinf(a_eq):
        # pure phase-flip limit: only patterns exceeding e_g + e_z fail
        return logical_error_symmetric(code.n, code.e_g + code.e_z, rho)
    fail = 0.0
    for j in range(code.n + 1):
        outer = math.comb(code.n, j) * (1.0 - rho) ** (code.n - j) * rho**j
        if j > code.e_g + code.e_z:
            fail += outer
        else:
            inner = sum(
                math.comb(j, i) * (a_eq / 2.0) ** i
                for i in range(0, max(j - code.e_g, 0))
            )
            fail += outer * (2.0 / (a_eq + 2.0)) ** j * inner
    return min(max(fail, 0.0), 1.0)


def brute_force_logical_error(code: CodeSpec, channel: PauliChannel) -> float:
    """Enumeration oracle: sum multinomial weights of uncorrectable patterns.

    Iterates over (count_X, count_Y, count_Z) triples rather than 4^n
    patterns; a triple is correctable iff count_X + count_Y <= e_g and the
    total count fits in e_g + e_z.
    """
    if code.n > _BRUTE_FORCE_MAX_N:
        raise DomainError(f"brute force limited to n <= {_BRUTE_FORCE_MAX_N}")
    n = code.n
    p_i = 1.0 - channel.rho
    fail = 0.0
    for cx in range(n + 1):
        for cy in range(n + 1 - cx):
            for cz in range(n + 1 - cx - cy):
                if cx + cy <= code.e_g and cx + cy + cz <= code.e_g + code.e_z:
                    continue
                weight = (
                    math.comb(n, cx)
                    * math.comb(n - cx, cy)
                    * math.comb(n - cx - cy, cz)
                )
                fail += (
                    weight
                    * channel.p_x**cx
                    * channel.p_y**cy
                    * channel.p_z**cz
                    * p_i ** (n - cx - cy - cz)
                )
    return min(max(fail, 0.0), 1.0)
