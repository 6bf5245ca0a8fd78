"""Semifinal equilibrium and full tournament solutions.

Winning a semifinal is worth the expected final-stage payoff, which depends
on the winner's own type and on who the parallel semifinal sends up.  With
the final-stage menu in hand, each semifinal is a two-player contest over
type-specific continuation values:

* hawk value   A(q) = q * menu.hawk_vs_hawk + (1-q) * menu.hawk_vs_dove
* dove value   B(q) = q * menu.dove_vs_hawk + (1-q) * menu.dove_vs_dove

where q is the probability the parallel match promotes a hawk.  The spread
B - A equals the cost of final-stage sabotage exactly, for every q, which
is why the dove always fights for strictly more and wins the mixed
semifinal with probability above one half.

In the seeded identical case (two mixed semifinals) symmetry ties q to the
own win probability and the solver closes the loop with a damped scalar
fixed point.  Asymmetric seedings make q constant per match and fall out
of a short sweep.

The solver always reports the interior candidate.  Whether that candidate
survives global scrutiny (corner deviations, dropout free-riding, local
curvature) is the verification module's job, not this one's.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .errors import InteriorityError, ParameterError, SolverError
from .primitives import DOVE, HAWK, Csf, PowerCost, ProbitUniformCsf, TullockCsf
from .stage2 import (Effort, PayoffMenu, Stage2Solution, base_effort,
                     solve_stage2, stage2_sabotage)

Bracket = tuple[tuple[str, str], tuple[str, str]]
DEFAULT_BRACKET: Bracket = ((HAWK, DOVE), (HAWK, DOVE))


@dataclass(frozen=True)
class SolverSettings:
    """Numerical knobs for the semifinal solvers and the grid oracle."""

    tolerance: float = 1e-10
    damping: float = 0.5
    max_iterations: int = 10_000
    oracle_grid: int = 400

    def __post_init__(self):
        if self.tolerance <= 0:
            raise ParameterError("tolerance must be positive")
        if not 0.0 < self.damping <= 1.0:
            raise ParameterError("damping must be in (0, 1]")
        if self.max_iterations < 1:
            raise ParameterError("max_iterations must be at least 1")
        if self.oracle_grid < 50:
            raise ParameterError("oracle_grid must be at least 50")


def _normalize_bracket(bracket) -> Bracket:
    try:
        matches = tuple(tuple(m) for m in bracket)
    except TypeError:
        raise ParameterError(f"bracket must be two pairs of types, got {bracket!r}")
    if len(matches) != 2 or any(len(m) != 2 for m in matches):
        raise ParameterError(f"bracket must be two pairs of types, got {bracket!r}")
    for t in itertools.chain.from_iterable(matches):
        if t not in (HAWK, DOVE):
            raise ParameterError(f"player types must be '{HAWK}' or '{DOVE}', got {t!r}")
    return matches


@dataclass(frozen=True)
class TournamentSpec:
    """Full description of one tournament instance."""

    prize: float
    csf: Csf
    cost: PowerCost
    bracket: Bracket = DEFAULT_BRACKET
    solver: SolverSettings = field(default_factory=SolverSettings)
    seed: int = 42

    def __post_init__(self):
        if self.prize <= 0:
            raise ParameterError(f"prize must be positive, got {self.prize}")
        object.__setattr__(self, "bracket", _normalize_bracket(self.bracket))
        if not isinstance(self.seed, int) or self.seed < 0:
            raise ParameterError(f"seed must be a nonnegative integer, got {self.seed!r}")

    @property
    def types(self) -> tuple[str, str, str, str]:
        return self.bracket[0] + self.bracket[1]


@dataclass(frozen=True)
class ContinuationValues:
    """What each type is fighting for in a semifinal."""

    hawk_value: float
    dove_value: float


def continuation_values(menu: PayoffMenu, p_parallel_hawk: float,
                        opponent_pool: tuple[str, str]) -> ContinuationValues:
    """Expected final-stage payoff by own type, mixing over the parallel
    semifinal's winner type.

    opponent_pool is the pair of types contesting the parallel match; the
    mixing weight is forced to 0 or 1 when that pool is single-typed.
    """
    if not 0.0 <= p_parallel_hawk <= 1.0:
        raise ParameterError(
            f"parallel hawk probability must be in [0, 1], got {p_parallel_hawk}")
    pool = tuple(opponent_pool)
    if pool == (HAWK, HAWK):
        q = 1.0
    elif pool == (DOVE, DOVE):
        q = 0.0
    elif set(pool) == {HAWK, DOVE}:
        q = p_parallel_hawk
    else:
        raise ParameterError(f"invalid opponent pool {opponent_pool!r}")
    return ContinuationValues(
        hawk_value=q * menu.hawk_vs_hawk + (1.0 - q) * menu.hawk_vs_dove,
        dove_value=q * menu.dove_vs_hawk + (1.0 - q) * menu.dove_vs_dove,
    )


def _require_positive_values(values: ContinuationValues, where: str) -> None:
    if values.hawk_value <= 0 or values.dove_value <= 0:
        raise InteriorityError(
            f"prize too small: continuation values in {where} are not both "
            f"positive (hawk {values.hawk_value:.6g}, dove {values.dove_value:.6g})")


# ----------------------------------------------------------------------
# Mixed semifinal, ratio CSF: damped fixed point with bisection fallback.
# ----------------------------------------------------------------------

def solve_stage1_hd_tullock(hawk_value_of_p, dove_value_of_p, cost: PowerCost,
                            r: float, settings: SolverSettings = SolverSettings(),
                            ) -> tuple[float, float, float, float]:
    """Solve the mixed semifinal under the ratio CSF.

    hawk_value_of_p / dove_value_of_p map the hawk's own win probability to
    the continuation values (constant closures for asymmetric seedings).
    Returns (hawk effective effort, dove effective effort, hawk win prob,
    sabotage).  Efforts follow the closed form for asymmetric-prize ratio
    contests, so only the scalar win probability needs iteration.
    """

    def phi(p: float) -> float:
        a_val = hawk_value_of_p(p)
        b_val = dove_value_of_p(p)
        if a_val <= 0 or b_val <= 0:
            raise InteriorityError(
                f"prize too small: continuation values not positive at "
                f"p={p:.6g} (hawk {a_val:.6g}, dove {b_val:.6g})")
        ar = a_val ** r
        br = b_val ** r
        return ar / (ar + br)

    target = settings.tolerance * 1e-2
    p = 0.5
    lam = settings.damping
    converged = False
    for _ in range(settings.max_iterations):
        nxt = phi(p)
        if abs(nxt - p) <= target:
            converged = True
            break
        p = (1.0 - lam) * p + lam * nxt

    if not converged:
        # phi is strictly decreasing in p, so phi(p) - p crosses zero once
        lo, hi = 0.0, 1.0
        for _ in range(200):
            mid = 0.5 * (lo + hi)
            if phi(mid) > mid:
                lo = mid
            else:
                hi = mid
            if hi - lo <= 1e-16:
                break
        p = 0.5 * (lo + hi)

    if abs(phi(p) - p) > settings.tolerance:
        raise SolverError(
            f"semifinal fixed point failed to certify: residual "
            f"{abs(phi(p) - p):.3g} exceeds {settings.tolerance:.3g}")

    a_val = hawk_value_of_p(p)
    b_val = dove_value_of_p(p)
    ar = a_val ** r
    br = b_val ** r
    tot2 = (ar + br) ** 2
    b_hawk = r * a_val ** (r + 1.0) * b_val ** r / tot2
    b_dove = r * a_val ** r * b_val ** (r + 1.0) / tot2
    s1 = cost.marginal_inverse(a_val / b_val)
    return b_hawk, b_dove, p, s1


# ----------------------------------------------------------------------
# Mixed semifinal, noise CSF: damped Newton with a nested-scalar fallback.
# ----------------------------------------------------------------------

def _probit_residuals(b: np.ndarray, csf: ProbitUniformCsf,
                      hawk_value_of_p, dove_value_of_p) -> np.ndarray | None:
    """FOC residuals at efforts b = (hawk, dove); None when out of domain."""
    bh, bd = float(b[0]), float(b[1])
    if bh <= 0 or bd <= 0:
        return None
    beta = csf.f_exponent
    gap = bh ** beta - bd ** beta
    if abs(gap) >= 2.0 * csf.half_width:
        return None
    p = csf.noise_diff_cdf(gap)
    a_val = hawk_value_of_p(p)
    b_val = dove_value_of_p(p)
    if a_val <= 0 or b_val <= 0:
        return None
    dens = csf.noise_diff_density(gap)
    return np.array([
        dens * beta * bh ** (beta - 1.0) * a_val - 1.0,
        dens * beta * bd ** (beta - 1.0) * b_val - 1.0,
    ])


def _newton_probit(b0: np.ndarray, csf, hawk_value_of_p, dove_value_of_p,
                   settings: SolverSettings) -> np.ndarray | None:
    b = b0.copy()
    res = _probit_residuals(b, csf, hawk_value_of_p, dove_value_of_p)
    if res is None:
        return None
    target = settings.tolerance * 1e-2
    for _ in range(settings.max_iterations):
        norm = float(np.max(np.abs(res)))
        if norm <= target:
            return b
        jac = np.empty((2, 2))
        for k in range(2):
            h = 1e-6 * max(abs(b[k]), 1e-6)
            bp = b.copy()
            bp[k] += h
            rp = _probit_residuals(bp, csf, hawk_value_of_p, dove_value_of_p)
            if rp is None:
                return None
            jac[:, k] = (rp - res) / h
        try:
            step = np.linalg.solve(jac, -res)
        except np.linalg.LinAlgError:
            return None
        accepted = False
        lam = 1.0
        for _ in range(12):
            trial = np.clip(b + lam * step, b / 8.0, b * 8.0)
            rt = _probit_residuals(trial, csf, hawk_value_of_p, dove_value_of_p)
            if rt is not None and np.max(np.abs(rt)) < norm:
                b, res = trial, rt
                accepted = True
                break
            lam *= 0.5
        if not accepted:
            return None
    return b if np.max(np.abs(res)) <= settings.tolerance else None


def _nested_scalar_probit(csf, cost, hawk_value_of_p, dove_value_of_p,
                          settings: SolverSettings) -> np.ndarray | None:
    """Fallback: damped outer iteration on p, exact inner bisection on the
    dove effort.  The FOC ratio pins hawk effort at (A/B)^(1/(1-beta))
    times the dove's, leaving one monotone scalar equation per p."""
    beta = csf.f_exponent

    def inner(p: float) -> tuple[float, float] | None:
        a_val = hawk_value_of_p(p)
        b_val = dove_value_of_p(p)
        if a_val <= 0 or b_val <= 0:
            return None
        kappa = (a_val / b_val) ** (1.0 / (1.0 - beta))

        def resid(bd: float) -> float:
            gap = (kappa ** beta - 1.0) * bd ** beta
            if abs(gap) >= 2.0 * csf.half_width:
                return -1.0
            dens = csf.noise_diff_density(gap)
            return dens * beta * bd ** (beta - 1.0) * b_val - 1.0

        lo = 1e-300
        hi = base_effort(csf, max(a_val, b_val))
        grow = 0
        while resid(hi) > 0 and grow < 200:
            hi *= 2.0
            grow += 1
        if resid(hi) > 0:
            return None
        for _ in range(200):
            mid = 0.5 * (lo + hi)
            if resid(mid) > 0:
                lo = mid
            else:
                hi = mid
        bd = 0.5 * (lo + hi)
        return kappa * bd, bd

    p = 0.5
    lam = settings.damping
    for _ in range(settings.max_iterations):
        pair = inner(p)
        if pair is None:
            return None
        bh, bd = pair
        gap = bh ** beta - bd ** beta
        nxt = csf.noise_diff_cdf(gap)
        if abs(nxt - p) <= settings.tolerance * 1e-3:
            return np.array([bh, bd])
        p = (1.0 - lam) * p + lam * nxt
    return None


def solve_stage1_hd_probit(hawk_value_of_p, dove_value_of_p, cost: PowerCost,
                           csf: ProbitUniformCsf,
                           settings: SolverSettings = SolverSettings(),
                           ) -> tuple[float, float, float, float]:
    """Solve the mixed semifinal under the noise CSF.

    Same contract as the ratio solver.  A damped Newton iteration on both
    effective efforts is tried from a symmetric initial guess and a ladder
    of rescaled retries; a nested scalar reduction serves as fallback.
    """
    probe = (hawk_value_of_p(0.5), dove_value_of_p(0.5))
    if min(probe) <= 0:
        raise InteriorityError(
            f"prize too small: continuation values not positive at p=0.5 "
            f"(hawk {probe[0]:.6g}, dove {probe[1]:.6g})")
    b_guess = base_effort(csf, 0.5 * (probe[0] + probe[1]))

    scales = (1.0, 0.5, 2.0, 0.25, 4.0, 0.1, 10.0, 0.05)
    solution = None
    for scale in scales:
        start = np.array([b_guess * scale, b_guess * scale * 1.05])
        solution = _newton_probit(start, csf, hawk_value_of_p, dove_value_of_p, settings)
        if solution is not None:
            break
    if solution is None:
        solution = _nested_scalar_probit(csf, cost, hawk_value_of_p,
                                         dove_value_of_p, settings)
    if solution is None:
        raise SolverError("semifinal Newton and fallback both failed to converge")

    res = _probit_residuals(solution, csf, hawk_value_of_p, dove_value_of_p)
    if res is None or np.max(np.abs(res)) > settings.tolerance:
        raise SolverError(
            "semifinal solution failed to certify: residual "
            f"{np.max(np.abs(res)) if res is not None else np.inf:.3g} exceeds "
            f"{settings.tolerance:.3g}")

    bh, bd = float(solution[0]), float(solution[1])
    beta = csf.f_exponent
    p = csf.noise_diff_cdf(bh ** beta - bd ** beta)
    a_val = hawk_value_of_p(p)
    b_val = dove_value_of_p(p)
    s1 = cost.marginal_inverse(a_val / b_val)
    return bh, bd, p, s1


def stage1_payoffs(p_hawk: float, values: ContinuationValues, b_hawk: float,
                   b_dove: float, s1: float, cost: PowerCost) -> tuple[float, float]:
    """Expected semifinal payoffs (hawk, dove) at an interior candidate.

    The hawk's outlay is its effective effort (nobody sabotages a hawk in a
    mixed match) plus the sabotage bill; the dove pays its padded productive
    effort b_dove + s1 outright.
    """
    hawk = p_hawk * values.hawk_value - cost.cost(s1) - b_hawk
    dove = (1.0 - p_hawk) * values.dove_value - (b_dove + s1)
    return hawk, dove


@dataclass(frozen=True)
class MatchSolution:
    """One semifinal: strategies, win odds and value flows, in slot order."""

    types: tuple[str, str]
    efforts: tuple[Effort, Effort]
    effective: tuple[float, float]
    win_probs: tuple[float, float]
    values: tuple[float, float]
    payoffs: tuple[float, float]
    hawk_advance_prob: float


@dataclass(frozen=True)
class SpeSolution:
    """Interior equilibrium candidate for the full tournament."""

    spec: TournamentSpec
    stage2: Stage2Solution
    matches: tuple[MatchSolution, MatchSolution]
    win_probs: tuple[float, float, float, float]

    @property
    def types(self) -> tuple[str, str, str, str]:
        return self.matches[0].types + self.matches[1].types

    @property
    def semifinal_win_probs(self) -> tuple[float, float, float, float]:
        return self.matches[0].win_probs + self.matches[1].win_probs

    @property
    def payoffs(self) -> tuple[float, float, float, float]:
        return self.matches[0].payoffs + self.matches[1].payoffs

    @property
    def type_win_probs(self) -> dict[str, float]:
        acc = {HAWK: 0.0, DOVE: 0.0}
        for t, w in zip(self.types, self.win_probs):
            acc[t] += w
        return acc


def bracket_win_probs(semifinal_win_probs, bracket) -> tuple[float, float, float, float]:
    """Tournament win probability per player, enumerating the bracket tree.

    Every final pairing is a 50/50 contest at the common effective effort,
    so each final branch splits its reach probability evenly.
    """
    _normalize_bracket(bracket)
    w = [float(x) for x in semifinal_win_probs]
    if len(w) != 4:
        raise ParameterError("need one semifinal win probability per player")
    for pair in ((0, 1), (2, 3)):
        total = w[pair[0]] + w[pair[1]]
        if abs(total - 1.0) > 1e-9:
            raise ParameterError(
                f"semifinal win probabilities of players {pair} sum to {total}, not 1")
    probs = [0.0, 0.0, 0.0, 0.0]
    for i in (0, 1):
        for j in (2, 3):
            reach = w[i] * w[j]
            probs[i] += 0.5 * reach
            probs[j] += 0.5 * reach
    return tuple(probs)


def _reachable_pairings(bracket: Bracket) -> set[str]:
    keys = set()
    for t0 in set(bracket[0]):
        for t1 in set(bracket[1]):
            pair = {t0, t1}
            if pair == {HAWK}:
                keys.add("HH")
            elif pair == {DOVE}:
                keys.add("DD")
            else:
                keys.add("HD")
    return keys


_MENU_FLOORS = {
    "DD": (("dove against dove", "dove_vs_dove"),),
    "HH": (("hawk against hawk", "hawk_vs_hawk"),),
    "HD": (("hawk against dove", "hawk_vs_dove"), ("dove against hawk", "dove_vs_hawk")),
}


def _check_reachable_menu(menu: PayoffMenu, bracket: Bracket) -> None:
    for pairing in sorted(_reachable_pairings(bracket)):
        for label, attr in _MENU_FLOORS[pairing]:
            value = getattr(menu, attr)
            if value <= 0:
                raise InteriorityError(
                    f"prize too small: expected final payoff {label} is "
                    f"{value:.6g}, so finalists would rather drop out")


def _solve_hd_match(csf, cost, hawk_value_of_p, dove_value_of_p, settings):
    if isinstance(csf, TullockCsf):
        return solve_stage1_hd_tullock(hawk_value_of_p, dove_value_of_p,
                                       cost, csf.r, settings)
    return solve_stage1_hd_probit(hawk_value_of_p, dove_value_of_p,
                                  cost, csf, settings)


def _match_solution_hd(csf, cost, values: ContinuationValues, b_hawk, b_dove,
                       p_hawk, s1, hawk_first: bool) -> MatchSolution:
    pay_hawk, pay_dove = stage1_payoffs(p_hawk, values, b_hawk, b_dove, s1, cost)
    hawk = (HAWK, Effort(x=b_hawk, s=s1), b_hawk, p_hawk, values.hawk_value, pay_hawk)
    dove = (DOVE, Effort(x=b_dove + s1, s=0.0), b_dove, 1.0 - p_hawk,
            values.dove_value, pay_dove)
    slots = (hawk, dove) if hawk_first else (dove, hawk)
    return MatchSolution(
        types=(slots[0][0], slots[1][0]),
        efforts=(slots[0][1], slots[1][1]),
        effective=(slots[0][2], slots[1][2]),
        win_probs=(slots[0][3], slots[1][3]),
        values=(slots[0][4], slots[1][4]),
        payoffs=(slots[0][5], slots[1][5]),
        hawk_advance_prob=p_hawk,
    )


def _match_solution_same_type(csf, cost, match_type: str,
                              values: ContinuationValues) -> MatchSolution:
    if match_type == HAWK:
        value = values.hawk_value
        s = stage2_sabotage(cost)
    else:
        value = values.dove_value
        s = 0.0
    if value <= 0:
        raise InteriorityError(
            f"prize too small: continuation value for the same-type semifinal "
            f"is {value:.6g}")
    b = base_effort(csf, value)
    payoff = 0.5 * value - cost.cost(s) - (b + s)
    eff = Effort(x=b + s, s=s)
    return MatchSolution(
        types=(match_type, match_type),
        efforts=(eff, eff),
        effective=(b, b),
        win_probs=(0.5, 0.5),
        values=(value, value),
        payoffs=(payoff, payoff),
        hawk_advance_prob=1.0 if match_type == HAWK else 0.0,
    )


def solve_tournament(spec: TournamentSpec) -> SpeSolution:
    """Backward-induct the full tournament to its interior candidate.

    Raises InteriorityError when the prize cannot support positive
    continuation values on the reachable part of the bracket, SolverError
    when an iteration fails to certify.  Global optimality of the returned
    candidate is checked separately by the verification module.
    """
    stage2 = solve_stage2(spec.csf, spec.cost, spec.prize)
    menu = stage2.menu
    _check_reachable_menu(menu, spec.bracket)

    pools = spec.bracket
    mixed = [set(pool) == {HAWK, DOVE} for pool in pools]

    if all(mixed):
        # identical mixed semifinals: symmetry ties the parallel hawk
        # probability to the own win probability, one scalar fixed point
        def hawk_value_of_p(p):
            return continuation_values(menu, p, (HAWK, DOVE)).hawk_value

        def dove_value_of_p(p):
            return continuation_values(menu, p, (HAWK, DOVE)).dove_value

        b_hawk, b_dove, p_hawk, s1 = _solve_hd_match(
            spec.csf, spec.cost, hawk_value_of_p, dove_value_of_p, spec.solver)
        values = continuation_values(menu, p_hawk, (HAWK, DOVE))
        _require_positive_values(values, "the mixed semifinals")
        matches = tuple(
            _match_solution_hd(spec.csf, spec.cost, values, b_hawk, b_dove,
                               p_hawk, s1, hawk_first=pool[0] == HAWK)
            for pool in pools)
    else:
        # per-match sweeps: each match's values hinge only on the parallel
        # match's hawk-advance probability, constant unless that match is mixed
        advance = [1.0 if set(pool) == {HAWK} else 0.0 if set(pool) == {DOVE} else 0.5
                   for pool in pools]
        solved: list[MatchSolution | None] = [None, None]
        for _ in range(1000):
            moved = 0.0
            for i, pool in enumerate(pools):
                q_other = advance[1 - i]
                values = continuation_values(menu, q_other, pools[1 - i])
                if mixed[i]:
                    _require_positive_values(values, f"semifinal {i}")
                    b_hawk, b_dove, p_hawk, s1 = _solve_hd_match(
                        spec.csf, spec.cost,
                        lambda _p, a=values.hawk_value: a,
                        lambda _p, b=values.dove_value: b,
                        spec.solver)
                    solved[i] = _match_solution_hd(
                        spec.csf, spec.cost, values, b_hawk, b_dove, p_hawk,
                        s1, hawk_first=pool[0] == HAWK)
                else:
                    solved[i] = _match_solution_same_type(
                        spec.csf, spec.cost, pool[0], values)
                moved = max(moved, abs(solved[i].hawk_advance_prob - advance[i]))
                advance[i] = solved[i].hawk_advance_prob
            if moved <= 1e-12:
                break
        else:
            raise SolverError("semifinal sweep failed to settle in 1000 rounds")
        matches = (solved[0], solved[1])

    semifinal = matches[0].win_probs + matches[1].win_probs
    return SpeSolution(
        spec=spec,
        stage2=stage2,
        matches=matches,
        win_probs=bracket_win_probs(semifinal, spec.bracket),
    )
