"""Acceptance gate: the ten release criteria, one verdict line each.

Each test prints a single ``ACCEPTANCE n [PASS|FAIL]`` line (to the real
stdout so it survives pytest capture) before asserting, so the full
scorecard is visible even when a criterion fails.
"""

import math
import time

import numpy as np
import pytest

import reference_curves as ref
from telequec import (
    BellDiagonalState,
    BurstSchedule,
    LinkSimConfig,
    PauliChannel,
    SchedulePlan,
    UNCODED,
    brute_force_logical_error,
    builtin_catalog,
    channel_of,
    coded_burst_error,
    evaluate_plan,
    exhaustive_search,
    logical_error_asymmetric,
    logical_error_by_asymmetry,
    logical_error_symmetric,
    purify_step,
    simulate_link,
    swap_step,
    werner,
)
from telequec import densmat
from telequec.mc import success_chain

REL_TOL = 1e-9
# Values below ~1e-8 in the frozen network-coded table carry absolute noise
# of order 1e-15 from cancellation in the source data's own evaluation;
# points that miss the relative tolerance must still land within this floor.
NOISE_FLOOR = 5e-15


_CAPSYS = None


@pytest.fixture(autouse=True)
def _verdict_capture(capsys):
    """Let verdict lines through pytest's capture so the scorecard is visible."""
    global _CAPSYS
    _CAPSYS = capsys
    yield
    _CAPSYS = None


def emit(line: str) -> None:
    if _CAPSYS is not None:
        with _CAPSYS.disabled():
            print(line, flush=True)
    else:
        print(line, flush=True)


def verdict(number: int, passed: bool, detail: str) -> None:
    status = "PASS" if passed else "FAIL"
    emit(f"ACCEPTANCE {number:2d} [{status}] {detail}")
    assert passed, f"criterion {number}: {detail}"


def rel_err(got: float, expected: float) -> float:
    return abs(got - expected) / abs(expected) if expected else abs(got)


def code_of(label):
    return UNCODED if label == "uncoded" else builtin_catalog().get(label)


def test_criterion_01_purification_trajectory():
    start = time.perf_counter()
    worst = 0.0
    state = werner(0.8)
    for step in range(10):
        if step > 0:
            state, _ = purify_step(state)
        for key, value in zip("ABCD", state.as_tuple()):
            worst = max(worst, rel_err(value, ref.WERNER_EVOLUTION_F080[key][step]))
        worst = max(worst, rel_err(state.rho, ref.WERNER_EVOLUTION_F080["rho"][step]))
    elapsed = time.perf_counter() - start
    ok = worst < REL_TOL and elapsed < 1.0
    verdict(1, ok, f"purification trajectory, worst rel {worst:.2e}, {elapsed:.3f}s")


def test_criterion_02_single_link_coded_curves():
    start = time.perf_counter()
    worst = 0.0
    for label, curve in ref.SINGLE_LINK_CODED.items():
        code = code_of(label)
        for rho0, expected in curve.items():
            got = coded_burst_error(BurstSchedule(1, 0, werner(1.0 - rho0)), code)
            worst = max(worst, rel_err(got, expected))
    elapsed = time.perf_counter() - start
    ok = worst < REL_TOL and elapsed < 1.0
    verdict(2, ok, f"single-link coded curves, worst rel {worst:.2e}, {elapsed:.3f}s")


def test_criterion_03_network_error_and_asymmetry():
    worst = 0.0
    for (b, f0), errors in ref.NETWORK_ERROR.items():
        asymmetries = ref.NETWORK_ASYMMETRY[(b, f0)]
        state = werner(f0)
        channel = channel_of(state)
        worst = max(worst, rel_err(channel.rho, errors[0]))
        worst = max(worst, rel_err(channel.a_eq, asymmetries[0]))
        for _ in range(b):
            state, _ = purify_step(state)
        for step in range(1, 10):
            state = swap_step(state)
            channel = channel_of(state)
            worst = max(worst, rel_err(channel.rho, errors[step]))
            worst = max(worst, rel_err(channel.a_eq, asymmetries[step]))
    ok = worst < REL_TOL
    verdict(3, ok, f"network error/asymmetry series, worst rel {worst:.2e}")


def test_criterion_04_network_coded_curves():
    worst_rel, worst_abs, misses = 0.0, 0.0, 0
    for label, curve in ref.NETWORK_CODED.items():
        code = code_of(label)
        for rho0, expected in curve.items():
            got = coded_burst_error(BurstSchedule(3, 5, werner(1.0 - rho0)), code)
            relative = rel_err(got, expected)
            if relative >= REL_TOL:
                misses += 1
                worst_abs = max(worst_abs, abs(got - expected))
            else:
                worst_rel = max(worst_rel, relative)
    ok = worst_abs < NOISE_FLOOR
    verdict(
        4,
        ok,
        f"network coded curves, worst rel {worst_rel:.2e}; {misses} sub-1e-8 points "
        f"within abs noise floor ({worst_abs:.2e} < {NOISE_FLOOR:.0e})",
    )


def _threshold(code, target=1e-3, lo=1e-6, hi=0.4):
    """Largest initial error whose single-purification coded error meets target."""

    def coded(rho0):
        return coded_burst_error(BurstSchedule(1, 0, werner(1.0 - rho0)), code)

    for _ in range(60):
        mid = 0.5 * (lo + hi)
        if coded(mid) <= target:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def test_criterion_05_headline_thresholds():
    catalog = builtin_catalog()
    uncoded_thr = _threshold(UNCODED)
    rep3_thr = _threshold(catalog.get("[[3,1]](0,1)"))
    asym13 = coded_burst_error(
        BurstSchedule(1, 0, werner(0.95)), catalog.get("[[13,1]](1,2)")
    )
    asym13_thr = _threshold(catalog.get("[[13,1]](1,2)"))
    ok = (
        abs(uncoded_thr - 0.0015) <= 1e-4
        and 0.015 <= rep3_thr < 0.025  # tolerable initial error rounds to 2%
        and asym13 <= 1e-3
        and 0.045 <= asym13_thr < 0.055
    )
    verdict(
        5,
        ok,
        f"headline thresholds: uncoded {uncoded_thr:.6f}, [[3,1]] {rep3_thr:.4f}, "
        f"[[13,1]] error {asym13:.2e} at 5% (threshold {asym13_thr:.4f})",
    )


def test_criterion_06_density_matrix_equivalence():
    start = time.perf_counter()
    rng = np.random.default_rng(2024)
    worst = 0.0
    for _ in range(100):
        state = BellDiagonalState.normalized(*rng.dirichlet(np.ones(4)))
        dm_state, dm_n = densmat.dm_purify_step(state)
        rec_state, rec_n = purify_step(state)
        worst = max(
            worst,
            abs(dm_n - rec_n),
            *(abs(x - y) for x, y in zip(dm_state.as_tuple(), rec_state.as_tuple())),
        )
        worst = max(
            worst,
            *(
                abs(x - y)
                for x, y in zip(
                    densmat.dm_swap_step(state).as_tuple(), swap_step(state).as_tuple()
                )
            ),
        )
        dm_ch = densmat.dm_teleport_channel(state)
        rec_ch = channel_of(state)
        worst = max(
            worst,
            abs(dm_ch.p_x - rec_ch.p_x),
            abs(dm_ch.p_y - rec_ch.p_y),
            abs(dm_ch.p_z - rec_ch.p_z),
        )
    elapsed = time.perf_counter() - start
    ok = worst < 1e-10 and elapsed < 10.0
    verdict(6, ok, f"density-matrix equivalence, worst abs {worst:.2e}, {elapsed:.1f}s")


def test_criterion_07_enumeration_equivalence():
    rng = np.random.default_rng(77)
    worst = 0.0
    for _ in range(50):
        p_x, p_y, p_z, _ = rng.dirichlet(np.ones(4)) * rng.uniform(0.05, 0.9)
        channel = PauliChannel(float(p_x), float(p_y), float(p_z))
        for code in builtin_catalog().entries:
            closed = logical_error_asymmetric(code, channel)
            brute = brute_force_logical_error(code, channel)
            worst = max(worst, abs(closed - brute))
    ok = worst < 1e-12
    verdict(7, ok, f"closed form vs enumeration, worst abs {worst:.2e}")


def test_criterion_08_monte_carlo_consistency():
    start = time.perf_counter()
    config = LinkSimConfig(
        m=1000, p=0.5, b=2, initial_state=werner(0.8), trials=100000, seed=7
    )
    result = simulate_link(config)
    repeat = simulate_link(config)
    chain = success_chain(config.initial_state, config.b)
    within = True
    for rnd, n_i in enumerate(chain):
        attempts = result.success_samples[rnd]
        sigma = math.sqrt(n_i * (1.0 - n_i) / attempts)
        within = within and abs(result.empirical_success[rnd] - n_i) < 3.0 * sigma
    elapsed = time.perf_counter() - start
    ok = within and result == repeat and elapsed < 30.0
    verdict(
        8,
        ok,
        f"Monte Carlo success rates within 3 sigma: {within}, "
        f"seed-deterministic: {result == repeat}, {elapsed:.1f}s",
    )


def test_criterion_09_scheduling_conjecture_probe():
    counterexamples = []
    cells = 0
    for f0 in (0.85, 0.90, 0.95, 0.99):
        for b in range(5):
            for s in range(5):
                report = exhaustive_search(b, s, werner(f0))
                cells += 1
                if not report.burst_is_optimal:
                    counterexamples.append(
                        f"f0={f0} b={b} s={s}: {report.best_plan.ops} "
                        f"({report.best_final_error:.6e}) beats "
                        f"{report.burst_plan.ops} ({report.burst_plan_error:.6e})"
                    )
    for line in counterexamples:
        emit(f"  counterexample: {line}")
    # informational criterion: report generation must succeed; counterexamples
    # are emitted above rather than failing the gate
    verdict(
        9,
        cells == 100,
        f"front-loaded purification optimal in {cells - len(counterexamples)}/{cells} "
        "search cells",
    )


def test_criterion_10_module_property_suites():
    checks = []

    # normalization and fixed points
    state = werner(0.77)
    for _ in range(6):
        state, _ = purify_step(state)
        state = swap_step(state)
        checks.append(abs(sum(state.as_tuple()) - 1.0) < 1e-12)
    perfect = BellDiagonalState(1.0, 0.0, 0.0, 0.0)
    checks.append(purify_step(perfect)[0] == perfect)
    checks.append(swap_step(perfect) == perfect)
    mixed = BellDiagonalState(0.25, 0.25, 0.25, 0.25)
    checks.append(swap_step(mixed).as_tuple() == pytest.approx(mixed.as_tuple()))

    # component-equality propagation
    out, _ = purify_step(BellDiagonalState(0.6, 0.2, 0.1, 0.1))
    checks.append(out.b == out.c)
    checks.append(swap_step(BellDiagonalState(0.6, 0.1, 0.1, 0.2)).b
                  == swap_step(BellDiagonalState(0.6, 0.1, 0.1, 0.2)).c)

    # convergence for fidelities above 0.55
    for f0 in np.arange(0.56, 1.0, 0.04):
        state = werner(float(f0))
        for _ in range(30):
            state, _ = purify_step(state)
            if state.a >= 1.0 - 1e-9:
                break
        checks.append(state.a >= 1.0 - 1e-9)

    # reduction identity and asymmetry-blindness
    for rho in (0.01, 0.1, 0.3):
        channel = channel_of(werner(1.0 - rho))
        five = builtin_catalog().get("[[5,1]](1,0)")
        checks.append(
            logical_error_asymmetric(five, channel)
            == pytest.approx(logical_error_symmetric(5, 1, channel.rho), rel=1e-12)
        )
        checks.append(
            logical_error_by_asymmetry(five, rho, 40.0)
            == pytest.approx(logical_error_by_asymmetry(five, rho, 1.0), rel=1e-12)
        )

    # scheduler: burst plan equals trajectory, enumeration is complete
    report = exhaustive_search(3, 2, werner(0.9))
    checks.append(report.plans_evaluated == math.comb(5, 2))
    checks.append(
        report.burst_plan_error
        == coded_burst_error(BurstSchedule(3, 2, werner(0.9)), UNCODED)
    )
    checks.append(
        report.burst_plan_error
        == pytest.approx(evaluate_plan(SchedulePlan("PPPSS"), werner(0.9)))
    )

    ok = all(bool(c) for c in checks)
    verdict(10, ok, f"module property suites, {sum(map(bool, checks))}/{len(checks)} checks")
