"""Global scrutiny of interior equilibrium candidates.

The solvers hand back stationary points.  Stationarity is cheap; what makes
a candidate an equilibrium is that nobody gains from any feasible move,
including the rough ones a derivative never sees: dropping out entirely,
burning the whole budget on sabotage, or jumping past the kink where the
rival's effective effort hits zero.  This module checks all of it.

Every player's unilateral problem is reduced to the same primitive: pick a
productive outlay x and (hawks only) a sabotage level s against a frozen
opponent, collect p * value - cost(s) - x.  On top of that one primitive
sit four layers:

* analytic first-order residuals,
* finite-difference second-order curvature,
* a closed-form bound for the full-sabotage corner,
* a brute-force grid oracle with local refinement.

A candidate is accepted only when every layer comes back clean.  The
existence gate then maps out the smallest prize for which that happens,
which is genuinely useful under the noise CSF: bounded noise lets weak
players free-ride on luck, so admissibility can vanish even where the
interior formulas still produce numbers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .errors import InteriorityError, ParameterError, SolverError
from .primitives import (DOVE, HAWK, TullockCsf, effective_effort, win_prob,
                         win_prob_partials)
from .stage1 import (SpeSolution, TournamentSpec, _reachable_pairings,
                     solve_tournament)

FOC_TOLERANCE = 1e-8
GAIN_TOLERANCE = 1e-6


@dataclass(frozen=True)
class _Problem:
    """One player's unilateral choice problem at the candidate."""

    key: str
    kind: str
    value: float
    x: float
    s: float
    x_rival: float
    s_rival: float


def _problems(solution: SpeSolution) -> tuple[_Problem, ...]:
    out = []
    for mi, match in enumerate(solution.matches):
        for slot in (0, 1):
            other = 1 - slot
            out.append(_Problem(
                key=f"semifinal{mi}_player{slot}",
                kind=match.types[slot],
                value=match.values[slot],
                x=match.efforts[slot].x,
                s=match.efforts[slot].s,
                x_rival=match.efforts[other].x,
                s_rival=match.efforts[other].s,
            ))
    profiles = solution.stage2.profiles
    for pairing in sorted(_reachable_pairings(solution.spec.bracket)):
        efforts = profiles[pairing]
        if pairing == "HD":
            roles = ((0, "final_HD_hawk"), (1, "final_HD_dove"))
        else:
            # symmetric pairing, one role stands for both
            roles = ((0, f"final_{pairing}"),)
        for role, key in roles:
            other = 1 - role
            out.append(_Problem(
                key=key,
                kind=pairing[role],
                value=solution.spec.prize,
                x=efforts[role].x,
                s=efforts[role].s,
                x_rival=efforts[other].x,
                s_rival=efforts[other].s,
            ))
    return tuple(out)


def _payoff(csf, cost, prob: _Problem, x, s):
    """Deviation payoff against the frozen opponent; broadcasts over grids."""
    b_own = np.maximum(0.0, np.asarray(x, dtype=float) - prob.s_rival)
    b_rival = np.maximum(0.0, prob.x_rival - np.asarray(s, dtype=float))
    p = win_prob(csf, b_own, b_rival)
    return p * prob.value - cost.cost(s) - np.asarray(x, dtype=float)


def _baseline(csf, cost, prob: _Problem) -> float:
    return float(_payoff(csf, cost, prob, prob.x, prob.s))


def _find_problem(solution, spec, player, stage, pairing):
    if stage == 1:
        if player not in (0, 1, 2, 3):
            raise ParameterError(f"player must be a bracket slot 0..3, got {player!r}")
        key = f"semifinal{player // 2}_player{player % 2}"
    elif stage == 2:
        if pairing not in ("DD", "HD", "HH"):
            raise ParameterError(f"pairing must be DD, HD or HH, got {pairing!r}")
        if pairing == "HD":
            key = "final_HD_hawk" if player in (None, 0) else "final_HD_dove"
        else:
            key = f"final_{pairing}"
    else:
        raise ParameterError(f"stage must be 1 or 2, got {stage!r}")
    for prob in _problems(solution):
        if prob.key == key:
            return prob
    raise ParameterError(f"no such choice problem in this solution: {key}")


# ----------------------------------------------------------------------
# First and second order conditions.
# ----------------------------------------------------------------------

def foc_residuals(solution: SpeSolution, spec: TournamentSpec | None = None,
                  ) -> dict[str, float]:
    """Analytic stationarity residuals for every choice variable.

    Each productive entry is d(win prob)/d(own effort) * value - 1, each
    sabotage entry is the marginal win-probability gain from weakening the
    rival minus the marginal sabotage cost.  All vanish at an interior
    candidate.
    """
    spec = solution.spec if spec is None else spec
    out = {}
    for prob in _problems(solution):
        b_own = effective_effort(prob.x, prob.s_rival)
        b_rival = effective_effort(prob.x_rival, prob.s)
        d_own, d_rival = win_prob_partials(spec.csf, b_own, b_rival)
        out[prob.key + "_effort"] = d_own * prob.value - 1.0
        if prob.kind == HAWK:
            out[prob.key + "_sabotage"] = (
                -d_rival * prob.value - spec.cost.marginal(prob.s))
    return out


def _second_difference(f, z: float, h: float) -> float:
    if z - h < 0.0:
        # one-sided variant for coordinates too close to the boundary
        return (f(z + 2.0 * h) - 2.0 * f(z + h) + f(z)) / (h * h)
    return (f(z + h) - 2.0 * f(z) + f(z - h)) / (h * h)


def soc_check(solution: SpeSolution, spec: TournamentSpec | None = None,
              ) -> dict[str, float]:
    """Finite-difference own-second-partials of every payoff at the candidate.

    Negative values mean the stationary point is a local maximum along that
    coordinate.  The step is absolute-floored so that curvature is measured
    at a scale deviations actually live on, not lost to round-off.
    """
    spec = solution.spec if spec is None else spec
    out = {}
    for prob in _problems(solution):
        def pay_x(x, prob=prob):
            return float(_payoff(spec.csf, spec.cost, prob, x, prob.s))

        h = max(1e-5 * abs(prob.x), 1e-5)
        out[prob.key + "_effort"] = _second_difference(pay_x, prob.x, h)
        if prob.kind == HAWK:
            def pay_s(s, prob=prob):
                return float(_payoff(spec.csf, spec.cost, prob, prob.x, s))

            h = max(1e-5 * abs(prob.s), 1e-5)
            out[prob.key + "_sabotage"] = _second_difference(pay_s, prob.s, h)
    return out


# ----------------------------------------------------------------------
# Corner bound and grid oracle.
# ----------------------------------------------------------------------

def _corner_gain(csf, cost, prob: _Problem) -> float:
    # wiping out the rival's entire outlay and entering with token effort
    # wins outright under the ratio CSF and a coin flip under bounded noise
    p_corner = 1.0 if isinstance(csf, TullockCsf) else 0.5
    bound = p_corner * prob.value - cost.cost(prob.x_rival)
    return bound - _baseline(csf, cost, prob)


def corner_deviation_gain(player, solution: SpeSolution,
                          spec: TournamentSpec | None = None, *,
                          stage: int = 1, pairing: str | None = None) -> float:
    """Payoff gain from the most violent feasible deviation a hawk has:
    sabotage the rival down to zero and win on a token positive effort.

    Positive gain disqualifies the candidate.  Only hawks can play this
    card, so `player` must point at one (stage 1: bracket slot; stage 2:
    hawk role of `pairing`).
    """
    spec = solution.spec if spec is None else spec
    prob = _find_problem(solution, spec, player, stage, pairing)
    if prob.kind != HAWK:
        raise ParameterError(f"{prob.key} is a dove; corner deviations need sabotage")
    return _corner_gain(spec.csf, spec.cost, prob)


@dataclass(frozen=True)
class OracleResult:
    """Outcome of a brute-force search of one player's deviation space."""

    gain: float
    best_x: float
    best_s: float
    best_payoff: float
    baseline: float


def _refine_axis(center: float, cell: float, hi: float, points: int) -> np.ndarray:
    lo = max(0.0, center - cell)
    top = min(hi, center + cell)
    return np.linspace(lo, top, points)


def _oracle_2d(csf, cost, prob: _Problem, x_hi: float, n: int) -> OracleResult:
    xs = np.linspace(0.0, x_hi, n)
    ss = np.linspace(0.0, prob.x_rival, n)
    best_pay = -np.inf
    best_x = best_s = 0.0
    for _ in range(3):
        pay = _payoff(csf, cost, prob, xs[:, None], ss[None, :])
        flat = int(np.argmax(pay))
        i, j = divmod(flat, pay.shape[1])
        if pay[i, j] > best_pay:
            best_pay = float(pay[i, j])
            best_x = float(xs[i])
            best_s = float(ss[j])
        cell_x = xs[1] - xs[0] if len(xs) > 1 else 0.0
        cell_s = ss[1] - ss[0] if len(ss) > 1 else 0.0
        xs = _refine_axis(float(xs[i]), cell_x, x_hi, 21)
        ss = _refine_axis(float(ss[j]), cell_s, prob.x_rival, 21)
    base = _baseline(csf, cost, prob)
    return OracleResult(best_pay - base, best_x, best_s, best_pay, base)


def _oracle_1d(csf, cost, prob: _Problem, x_hi: float, n: int) -> OracleResult:
    xs = np.linspace(0.0, x_hi, 40 * n + 1)
    best_pay = -np.inf
    best_x = 0.0
    for _ in range(3):
        pay = _payoff(csf, cost, prob, xs, 0.0)
        i = int(np.argmax(pay))
        if pay[i] > best_pay:
            best_pay = float(pay[i])
            best_x = float(xs[i])
        cell = xs[1] - xs[0] if len(xs) > 1 else 0.0
        xs = _refine_axis(float(xs[i]), cell, x_hi, 201)
    base = _baseline(csf, cost, prob)
    return OracleResult(best_pay - base, best_x, 0.0, best_pay, base)


def _oracle(csf, cost, prob: _Problem, prize: float, n: int) -> OracleResult:
    if prob.kind == HAWK and prob.x_rival > 0.0:
        return _oracle_2d(csf, cost, prob, prize, n)
    return _oracle_1d(csf, cost, prob, prize, n)


def best_response_oracle(player, solution: SpeSolution,
                         spec: TournamentSpec | None = None,
                         grid: int | None = None, *, stage: int = 1,
                         pairing: str | None = None) -> OracleResult:
    """Grid-search one player's whole deviation space against the candidate.

    Hawks search productive effort crossed with sabotage up to the rival's
    full outlay; doves search productive effort alone.  Both the dropout
    point and the full-sabotage kink sit exactly on the coarse grid, and
    the search refines twice around the incumbent best cell.  A gain
    meaningfully above zero disqualifies the candidate.
    """
    spec = solution.spec if spec is None else spec
    n = spec.solver.oracle_grid if grid is None else int(grid)
    if n < 50:
        raise ParameterError("oracle grid must have at least 50 points per axis")
    prob = _find_problem(solution, spec, player, stage, pairing)
    return _oracle(spec.csf, spec.cost, prob, spec.prize, n)


# ----------------------------------------------------------------------
# The verdict.
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class VerificationReport:
    """Everything measured about one candidate, plus the verdict."""

    foc_residuals: dict[str, float]
    soc_values: dict[str, float]
    corner_gains: dict[str, float]
    oracle_gains: dict[str, float]
    oracle_argmax: dict[str, tuple[float, float]]
    interior_ok: bool
    notes: tuple[str, ...]


def verify_solution(solution: SpeSolution, spec: TournamentSpec | None = None,
                    grid: int | None = None) -> VerificationReport:
    """Run every acceptance layer against a candidate and report honestly.

    The verdict is interior_ok only when first-order residuals are zero to
    tolerance, every own-coordinate curvature is strictly negative, no
    corner deviation pays, the grid oracle finds no profitable move for
    anyone, semifinal payoffs are nonnegative and the final-stage menu is
    strictly ordered.  Notes name each failure, first failure first.
    """
    spec = solution.spec if spec is None else spec
    n = spec.solver.oracle_grid if grid is None else int(grid)
    probs = _problems(solution)

    foc = foc_residuals(solution, spec)
    soc = soc_check(solution, spec)

    corner = {}
    for prob in probs:
        if prob.kind == HAWK:
            corner[prob.key] = _corner_gain(spec.csf, spec.cost, prob)

    oracle_gains = {}
    oracle_argmax = {}
    cache: dict[tuple, OracleResult] = {}
    for prob in probs:
        sig = (prob.kind, prob.value, prob.x, prob.s, prob.x_rival, prob.s_rival)
        if sig not in cache:
            cache[sig] = _oracle(spec.csf, spec.cost, prob, spec.prize, n)
        result = cache[sig]
        oracle_gains[prob.key] = result.gain
        oracle_argmax[prob.key] = (result.best_x, result.best_s)

    failures = []
    for key, value in foc.items():
        if abs(value) > FOC_TOLERANCE:
            failures.append(f"first-order residual {key} is {value:.3e}")
    for key, value in soc.items():
        if not value < 0.0:
            failures.append(f"second-order curvature {key} is {value:.6g}, not negative")
    for key, value in corner.items():
        if value > GAIN_TOLERANCE:
            failures.append(f"corner deviation {key} gains {value:.6g}")
    for key, value in oracle_gains.items():
        if value > GAIN_TOLERANCE:
            bx, bs = oracle_argmax[key]
            failures.append(
                f"oracle deviation {key} gains {value:.6g} at x={bx:.6g}, s={bs:.6g}")
    for mi, match in enumerate(solution.matches):
        for slot in (0, 1):
            if match.payoffs[slot] < 0.0:
                failures.append(
                    f"semifinal{mi}_player{slot} expects negative payoff "
                    f"{match.payoffs[slot]:.6g}")
    if not solution.stage2.menu.ordered:
        failures.append("final-stage payoff menu is not strictly ordered")

    return VerificationReport(
        foc_residuals=foc,
        soc_values=soc,
        corner_gains=corner,
        oracle_gains=oracle_gains,
        oracle_argmax=oracle_argmax,
        interior_ok=not failures,
        notes=tuple(failures),
    )


# ----------------------------------------------------------------------
# Existence gate.
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class GateResult:
    """Admissibility verdict at the requested prize, with a threshold map."""

    interior_ok: bool
    minimal_v_estimate: float | None
    notes: tuple[str, ...]


def _candidate_ok(spec: TournamentSpec, prize: float, grid: int | None) -> bool:
    try:
        solution = solve_tournament(replace(spec, prize=prize))
    except (InteriorityError, SolverError):
        return False
    return verify_solution(solution, grid=grid).interior_ok


def existence_gate(spec: TournamentSpec, grid: int | None = None) -> GateResult:
    """Decide whether the prize supports a verified equilibrium and estimate
    the smallest prize nearby that does.

    If the requested prize fails, prizes are probed geometrically outward
    (factors of two, up to 2**20 both ways) for any that passes; from a
    passing prize the boundary below it is bracketed by halving and then
    bisected to one percent.  The estimate is always the passing end of the
    final bracket.  Under bounded noise admissibility need not be monotone
    in the prize, so the estimate maps the edge of the window that was
    found, and the notes say when the requested prize itself was rejected.
    """
    notes = []
    ok_here = _candidate_ok(spec, spec.prize, grid)
    passing = spec.prize if ok_here else None
    if passing is None:
        for k in range(1, 21):
            for factor in (2.0 ** k, 2.0 ** -k):
                probe = spec.prize * factor
                if _candidate_ok(spec, probe, grid):
                    passing = probe
                    break
            if passing is not None:
                break
        if passing is None:
            notes.append(
                f"no admissible prize within a factor of 2**20 of {spec.prize:g}")
            return GateResult(False, None, tuple(notes))
        notes.append(
            f"prize {spec.prize:g} is rejected, but {passing:g} admits an equilibrium")

    hi = passing
    lo = None
    probe = passing
    for _ in range(60):
        probe *= 0.5
        if _candidate_ok(spec, probe, grid):
            hi = probe
        else:
            lo = probe
            break
    if lo is None:
        notes.append(
            f"no failing prize found down to {probe:g}; the estimate is an upper bound")
        return GateResult(ok_here, hi, tuple(notes))
    while hi / lo > 1.01:
        mid = math.sqrt(lo * hi)
        if _candidate_ok(spec, mid, grid):
            hi = mid
        else:
            lo = mid
    return GateResult(ok_here, hi, tuple(notes))
