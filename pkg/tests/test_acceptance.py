"""Shipping gate: one test per release criterion, run in order.

Every test here freezes a criterion at its stated tolerance.  The conftest
hook prints a one-line PASS/FAIL verdict per criterion after the run.  One
criterion is expected to stay red: the final-stage curvature shortcut quoted
by the reference tables disagrees with the measured second difference, and
the test asserts the quoted formula rather than masking the gap.  See the
README section on known discrepancies.
"""

import math
import time

import numpy as np
import pytest

from tourney import (InteriorityError, PowerCost, ProbitUniformCsf,
                     SimConfig, SolverError, SolverSettings, TournamentSpec,
                     TullockCsf, continuation_values, existence_gate,
                     simulate_tournament, soc_check, solve_stage2,
                     solve_tournament, stage2_payoff_menu, stage2_sabotage,
                     verify_solution)

RATIO_SPEC = TournamentSpec(prize=80.0, csf=TullockCsf(r=1.0),
                            cost=PowerCost(3.0, 12.0))
NOISE_SPEC = TournamentSpec(prize=20.0,
                            csf=ProbitUniformCsf(half_width=5.0, f_exponent=0.5),
                            cost=PowerCost(3.0, 27.0))
NOISE_SPEC_LARGE = TournamentSpec(prize=100.0,
                                  csf=ProbitUniformCsf(half_width=5.0,
                                                       f_exponent=0.5),
                                  cost=PowerCost(3.0, 0.27))
FAST = SolverSettings(oracle_grid=128)


def test_noise_scenario_replication():
    started = time.perf_counter()
    sol = solve_tournament(NOISE_SPEC)
    elapsed = time.perf_counter() - started

    assert sol.stage2.base_effort == 1.0
    assert sol.stage2.sabotage == 3.0

    match = sol.matches[0]
    assert math.sqrt(match.effective[0]) == pytest.approx(0.324124, abs=5e-4)
    assert math.sqrt(match.effective[1]) == pytest.approx(0.373875, abs=5e-4)
    assert match.hawk_advance_prob == pytest.approx(0.495, abs=5e-4)
    assert match.values[0] == pytest.approx(6.515, abs=1e-3)
    assert match.values[1] == pytest.approx(7.515, abs=1e-3)
    assert match.efforts[0].s == pytest.approx(2.79, abs=5e-3)
    assert match.payoffs[0] == pytest.approx(2.3, abs=5e-2)
    assert match.payoffs[1] == pytest.approx(0.86, abs=5e-2)
    assert elapsed < 1.0


def test_ratio_scenario_replication():
    started = time.perf_counter()
    sol = solve_tournament(RATIO_SPEC)
    report = verify_solution(sol)
    elapsed = time.perf_counter() - started

    assert sol.stage2.base_effort == 20.0
    assert sol.stage2.sabotage == 2.0

    menu = sol.stage2.menu
    for p in (0.0, 0.25, 0.466, 0.5, 0.75, 1.0):
        values = continuation_values(menu, p, ("H", "D"))
        assert values.hawk_value == pytest.approx(58.0 / 3.0 - 2.0 * p,
                                                  abs=1e-12)
        assert values.dove_value == pytest.approx(20.0 - 2.0 * p, abs=1e-12)

    def phi(p):
        values = continuation_values(menu, p, ("H", "D"))
        return values.hawk_value / (values.hawk_value + values.dove_value)

    p_star = sol.matches[0].hawk_advance_prob
    assert abs(phi(p_star) - p_star) <= 1e-10

    for gain in report.oracle_gains.values():
        assert gain <= 1e-6

    # the reference tables list 0.466 here; the self-consistent root is not
    # that number, and the gap is large enough to be a real disagreement
    recorded = 0.466
    discrepancy = p_star - recorded
    print(f"computed semifinal fixed point {p_star:.9f}; recorded value "
          f"{recorded}; discrepancy {discrepancy:+.6f}")
    assert abs(discrepancy) > 0.02, (p_star, recorded)
    assert p_star == pytest.approx(0.49107995363148747, abs=1e-9), (
        f"computed fixed point {p_star:.12f} vs recorded {recorded} "
        f"(discrepancy {discrepancy:+.6f})")
    assert elapsed < 5.0


def _draw_tullock(rng):
    r = float(rng.choice([0.25, 0.5, 0.75, 1.0]))
    cost = PowerCost(float(rng.uniform(1.5, 4.0)), float(rng.uniform(0.5, 30.0)))
    s2 = stage2_sabotage(cost)
    seed_prize = 40.0 * (s2 + cost.cost(s2)) / (2.0 - r)
    probe = TournamentSpec(prize=seed_prize, csf=TullockCsf(r=r), cost=cost,
                           solver=FAST)
    gate = existence_gate(probe, grid=128)
    if gate.minimal_v_estimate is None:
        return None
    prize = gate.minimal_v_estimate * float(rng.uniform(1.1, 4.0))
    return TournamentSpec(prize=prize, csf=TullockCsf(r=r), cost=cost,
                          solver=FAST)


def _draw_probit(rng):
    beta = float(rng.choice([0.3, 0.5, 0.7]))
    width = float(rng.uniform(2.0, 8.0))
    exponent = float(rng.uniform(1.5, 4.0))
    # prize scaled so the final-stage effort sits at an interior level, then
    # the sabotage cost tuned to keep sabotage a fraction of semifinal effort
    v_ref = (((1.0 - beta) / 2.0) ** ((1.0 - beta) / beta)
             * (2.0 * width / beta) ** (1.0 / beta))
    csf = ProbitUniformCsf(half_width=width, f_exponent=beta)
    b_star = (beta * v_ref / (2.0 * width)) ** (1.0 / (1.0 - beta))
    continue_value = v_ref / 2.0 - b_star
    b_ref = (beta * continue_value / (2.0 * width)) ** (1.0 / (1.0 - beta))
    share = float(rng.uniform(0.25, 0.55))
    s_target = share * b_ref * (1.0 - beta) / beta
    divisor = exponent * s_target ** (exponent - 1.0)
    return TournamentSpec(prize=v_ref, csf=csf,
                          cost=PowerCost(exponent, divisor), solver=FAST)


def test_dove_advantage_across_parameter_grid():
    started = time.perf_counter()
    rng = np.random.default_rng(20260816)
    accepted = 0
    attempts = 0
    while accepted < 200:
        attempts += 1
        assert attempts <= 1200, f"only {accepted} admissible sets found"
        draw = _draw_tullock(rng) if attempts % 2 else _draw_probit(rng)
        if draw is None:
            continue
        try:
            sol = solve_tournament(draw)
        except (InteriorityError, SolverError):
            continue
        if not verify_solution(sol).interior_ok:
            continue
        accepted += 1
        match = sol.matches[0]
        label = f"{draw.csf!r} cost={draw.cost!r} prize={draw.prize:.4g}"
        assert sol.type_win_probs["D"] > 0.5, label
        assert match.effective[0] < match.effective[1], label
        assert match.hawk_advance_prob < 0.5, label
    assert time.perf_counter() - started < 120.0


def test_sabotage_unaffected_by_prize():
    rng = np.random.default_rng(7)
    for _ in range(20):
        cost = PowerCost(float(rng.uniform(1.5, 4.0)),
                         float(rng.uniform(0.5, 30.0)))
        csf = TullockCsf(r=1.0)
        s2 = stage2_sabotage(cost)
        probe = TournamentSpec(prize=40.0 * (s2 + cost.cost(s2)), csf=csf,
                               cost=cost, solver=FAST)
        threshold = existence_gate(probe, grid=128).minimal_v_estimate
        assert threshold is not None
        levels = [solve_stage2(csf, cost, threshold * k).sabotage
                  for k in (1.1, 10.0, 1000.0)]
        assert levels[0] == levels[1] == levels[2]


def test_payoff_menu_ordering():
    rng = np.random.default_rng(11)
    costs = [PowerCost(3.0, 12.0), PowerCost(3.0, 27.0)]
    costs += [PowerCost(float(rng.uniform(1.05, 5.0)),
                        float(rng.uniform(0.1, 50.0))) for _ in range(40)]
    csfs = [TullockCsf(r=0.5), TullockCsf(r=1.0),
            ProbitUniformCsf(half_width=5.0, f_exponent=0.5)]
    for cost in costs:
        s2 = stage2_sabotage(cost)
        assert 0.0 < cost.cost(s2) < s2
        for csf in csfs:
            for prize in (25.0, 400.0):
                menu = stage2_payoff_menu(csf, cost, prize)
                assert menu.ordered


def test_no_profitable_deviation_at_accepted_equilibria():
    specs = [
        RATIO_SPEC,
        NOISE_SPEC_LARGE,
        TournamentSpec(prize=80.0, csf=TullockCsf(r=1.0),
                       cost=PowerCost(3.0, 12.0),
                       bracket=(("H", "D"), ("H", "H"))),
        TournamentSpec(prize=80.0, csf=TullockCsf(r=1.0),
                       cost=PowerCost(3.0, 12.0),
                       bracket=(("H", "D"), ("D", "D"))),
    ]
    for spec in specs:
        sol = solve_tournament(spec)
        report = verify_solution(sol)
        assert report.interior_ok, (spec.bracket, report.notes)
        for key, gain in report.oracle_gains.items():
            assert gain <= 1e-6, (spec.bracket, key, gain)
        for key, gain in report.corner_gains.items():
            assert gain <= 1e-6, (spec.bracket, key, gain)

    # dropout payoff at the recorded semifinal figures: full sabotage against
    # the rival dove's gross effort buys a win worth A but costs far more
    menu = stage2_payoff_menu(RATIO_SPEC.csf, RATIO_SPEC.cost, RATIO_SPEC.prize)
    recorded_p = 0.466
    values = continuation_values(menu, recorded_p, ("H", "D"))
    dove_effective = recorded_p * (1.0 - recorded_p) * values.dove_value
    sabotage = RATIO_SPEC.cost.marginal_inverse(values.hawk_value
                                                / values.dove_value)
    corner_payoff = values.hawk_value - RATIO_SPEC.cost.cost(dove_effective
                                                             + sabotage)
    assert corner_payoff == pytest.approx(-6.8, abs=0.1)


def test_simulation_matches_analytic_probabilities():
    started = time.perf_counter()
    for spec in (RATIO_SPEC, NOISE_SPEC):
        sol = solve_tournament(spec)
        for mode in ("direct", "structural"):
            config = SimConfig(trials=1_000_000, seed=42, mode=mode)
            result = simulate_tournament(sol, config)
            expected = result.type_expected["D"]
            band = 3.0 * math.sqrt(expected * (1.0 - expected) / config.trials)
            assert abs(result.type_freq["D"] - expected) <= band, (spec, mode)
            again = simulate_tournament(sol, config)
            assert again.to_json() == result.to_json()
    assert time.perf_counter() - started < 30.0


def test_alternative_seedings_favor_doves():
    cases = {
        (("H", "D"), ("H", "H")): (13.0 / 53.0, 27.0 / 106.0, 0.25, 0.25),
        (("H", "D"), ("D", "D")): (29.0 / 118.0, 15.0 / 59.0, 0.25, 0.25),
    }
    for bracket, expected in cases.items():
        spec = TournamentSpec(prize=80.0, csf=TullockCsf(r=1.0),
                              cost=PowerCost(3.0, 12.0), bracket=bracket)
        sol = solve_tournament(spec)
        for got, want in zip(sol.win_probs, expected):
            assert got == pytest.approx(want, abs=1e-9)

        hawk_probs = [sol.win_probs[i] for i, t in enumerate(sol.types)
                      if t == "H"]
        dove_probs = [sol.win_probs[i] for i, t in enumerate(sol.types)
                      if t == "D"]
        for dove in dove_probs:
            for hawk in hawk_probs:
                assert dove > hawk

        result = simulate_tournament(sol, SimConfig(trials=1_000_000, seed=42))
        for freq, want in zip(result.freq, expected):
            band = 3.0 * math.sqrt(want * (1.0 - want) / 1_000_000)
            assert abs(freq - want) <= band, bracket


def test_curvature_shortcut_consistency():
    cost = RATIO_SPEC.cost
    shortcut = (1.0 / (4.0 * RATIO_SPEC.csf.r * RATIO_SPEC.prize)
                - cost.curvature(stage2_sabotage(cost)))
    assert shortcut == pytest.approx(-0.996875, abs=1e-9)

    sol = solve_tournament(RATIO_SPEC)
    measured = soc_check(sol)["final_HH_sabotage"]
    assert abs(measured - shortcut) <= 1e-4 * abs(shortcut), (
        f"quoted curvature shortcut {shortcut} is not the measured second "
        f"difference {measured}; the shortcut's own-effort term drops a "
        f"factor of 16 (see README, known discrepancies)")
