"""Matplotlib rendering of the analysis tables produced by the CLI.

Each function takes the same row dicts the CSV writers consume and saves a
PNG next to the delimited output.
"""

from __future__ import annotations

import math
from collections import defaultdict
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def _finite(pairs):
    return [(x, y) for x, y in pairs if y > 0 and math.isfinite(y)]


def plot_evolution(rows: list[dict], path: str | Path) -> None:
    """Semilog plot of the four Bell components and the error vs step."""
    fig, ax = plt.subplots(figsize=(7, 5))
    for key, label in [("A", "A"), ("B", "B"), ("C", "C"), ("D", "D"), ("rho", "error")]:
        pts = _finite([(r["step"], r[key]) for r in rows])
        if pts:
            ax.semilogy(*zip(*pts), marker="o", label=label)
    ax.set_xlabel("purification step")
    ax.set_ylabel("probability")
    ax.grid(True, which="both", alpha=0.4)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_code_curves(rows: list[dict], path: str | Path) -> None:
    """Log-log logical error probability vs initial error, one line per code."""
    by_code = defaultdict(list)
    for r in rows:
        by_code[r["code"]].append((r["rho0"], r["rho_L"]))
    fig, ax = plt.subplots(figsize=(7, 5))
    for code, pts in by_code.items():
        pts = _finite(sorted(pts))
        if pts:
            ax.loglog(*zip(*pts), marker="o", label=code)
    ax.set_xlabel("initial error probability")
    ax.set_ylabel("logical qubit error probability")
    ax.grid(True, which="both", alpha=0.4)
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_burst(rows: list[dict], path: str | Path) -> None:
    """Two panels: error probability and asymmetry vs swapping step."""
    by_series = defaultdict(list)
    for r in rows:
        by_series[(r["burst"], r["f0"])].append((r["swap_step"], r["rho"], r["a_eq"]))
    fig, (ax_err, ax_asym) = plt.subplots(1, 2, figsize=(11, 5))
    for (b, f0), pts in sorted(by_series.items()):
        pts.sort()
        label = f"Burst {b}, f0={f0:g}"
        err = _finite([(s, rho) for s, rho, _ in pts])
        asym = _finite([(s, a) for s, _, a in pts])
        if err:
            ax_err.semilogy(*zip(*err), marker="o", label=label)
        if asym:
            ax_asym.semilogy(*zip(*asym), marker="o", label=label)
    for ax, ylabel in [(ax_err, "qubit error probability"), (ax_asym, "asymmetry")]:
        ax.set_xlabel("swapping step")
        ax.set_ylabel(ylabel)
        ax.grid(True, which="both", alpha=0.4)
        ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_yield_histogram(rows: list[dict], path: str | Path) -> None:
    """Distribution of surviving pair counts per purification round."""
    by_round = defaultdict(list)
    for r in rows:
        by_round[r["round"]].append((r["survivors"], r["trials"]))
    fig, ax = plt.subplots(figsize=(7, 5))
    for rnd, pts in sorted(by_round.items()):
        pts.sort()
        ax.plot(*zip(*pts), marker=".", linestyle="-", label=f"round {rnd}")
    ax.set_xlabel("surviving pairs")
    ax.set_ylabel("trials")
    ax.grid(True, alpha=0.4)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
