"""Monte Carlo validation of solved tournaments.

Two sampling modes cross-check the analytics from different directions.
Direct mode draws a uniform per match and compares it against the solved
win probability, so it validates the bracket arithmetic.  Structural mode
never touches the solved probabilities: it re-enacts each match from the
effective efforts alone, drawing the primitive randomness of the CSF, so
agreement validates the contest model itself.

Under the ratio CSF with unit decisiveness the structural draw uses the
race representation: scores b / E with E standard exponential give the
contested ratio as the win probability.  Other decisiveness values have no
such product representation and structural mode refuses them.  Under the
noise CSF the structural draw is literal: performance plus uniform noise.

Runs are deterministic and chunked.  Chunk k of a run re-seeds its own
counter-based generator from (seed, spawn_key k) with a fixed draw layout,
so results are reproducible bit for bit regardless of how many chunks
execute, and a longer run extends a shorter one instead of reshuffling it.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass

import numpy as np

from .errors import ParameterError
from .primitives import DOVE, HAWK, Csf, ProbitUniformCsf, TullockCsf, win_prob
from .stage1 import SpeSolution

CHUNK = 1 << 18
MODES = ("direct", "structural")

# two-sided 99% normal quantile for the reported confidence bands
_Z99 = 2.5758293035489004


@dataclass(frozen=True)
class SimConfig:
    """Size, seed and sampling mode of one Monte Carlo run."""

    trials: int = 1_000_000
    seed: int = 42
    mode: str = "direct"

    def __post_init__(self):
        if not isinstance(self.trials, int) or isinstance(self.trials, bool) or self.trials < 1:
            raise ParameterError(f"trials must be a positive integer, got {self.trials!r}")
        if not isinstance(self.seed, int) or isinstance(self.seed, bool) or self.seed < 0:
            raise ParameterError(f"seed must be a nonnegative integer, got {self.seed!r}")
        if self.mode not in MODES:
            raise ParameterError(f"mode must be one of {MODES}, got {self.mode!r}")


@dataclass(frozen=True)
class SimResult:
    """Tournament win counts per bracket slot, with analytic references."""

    trials: int
    seed: int
    mode: str
    wins: tuple[int, int, int, int]
    freq: tuple[float, float, float, float]
    expected: tuple[float, float, float, float]
    ci99: tuple[float, float, float, float]
    type_freq: dict[str, float]
    type_expected: dict[str, float]

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, indent=2)


def _chunk_rng(seed: int, chunk: int) -> np.random.Generator:
    seq = np.random.SeedSequence(entropy=seed, spawn_key=(chunk,))
    return np.random.Generator(np.random.Philox(seq))


def _race_scores(b: float, uniforms: np.ndarray) -> np.ndarray:
    # b / Exp(1) race representation of the unit-decisiveness ratio contest
    with np.errstate(divide="ignore", invalid="ignore"):
        scores = b * (-1.0 / np.log(uniforms))
    return np.where(b > 0.0, scores, 0.0)


def _structural_scores(csf: Csf, b: float, uniforms: np.ndarray) -> np.ndarray:
    if isinstance(csf, TullockCsf):
        return _race_scores(b, uniforms)
    return b ** csf.f_exponent + (2.0 * uniforms - 1.0) * csf.half_width


def _check_structural(csf: Csf) -> None:
    if isinstance(csf, TullockCsf) and csf.r != 1.0:
        raise ParameterError(
            "structural mode requires unit decisiveness under the ratio CSF; "
            f"got r={csf.r}")


def simulate_match(csf: Csf, b_i: float, b_j: float, mode: str = "direct",
                   rng: np.random.Generator | None = None) -> int:
    """Play one match at effective efforts (b_i, b_j); 1 if player i wins.

    Direct mode draws a single uniform against the analytic win probability.
    Structural mode draws the CSF's own randomness and compares scores,
    settling exact ties with a fair coin.
    """
    if mode not in MODES:
        raise ParameterError(f"mode must be one of {MODES}, got {mode!r}")
    if rng is None:
        raise ParameterError("an explicit numpy Generator is required")
    if mode == "direct":
        return int(rng.random() < win_prob(csf, b_i, b_j))
    _check_structural(csf)
    u = rng.random(2)
    y_i = float(_structural_scores(csf, b_i, u[0:1])[0])
    y_j = float(_structural_scores(csf, b_j, u[1:2])[0])
    if y_i == y_j:
        return int(rng.random() < 0.5)
    return int(y_i > y_j)


def _winners_direct(solution: SpeSolution, u: np.ndarray) -> np.ndarray:
    p0 = solution.matches[0].win_probs[0]
    p1 = solution.matches[1].win_probs[0]
    w0 = np.where(u[:, 0] < p0, 0, 1)
    w1 = np.where(u[:, 1] < p1, 2, 3)
    # both finalists arrive at the common base effort, a coin flip
    return np.where(u[:, 2] < 0.5, w0, w1)


def _winners_structural(solution: SpeSolution, noise: np.ndarray,
                        coins: np.ndarray) -> np.ndarray:
    csf = solution.spec.csf
    b_final = solution.stage2.base_effort

    def contest(b_a, b_b, col_a, col_b, coin_col):
        y_a = _structural_scores(csf, b_a, noise[:, col_a])
        y_b = _structural_scores(csf, b_b, noise[:, col_b])
        first = y_a > y_b
        tie = y_a == y_b
        return first | (tie & (coins[:, coin_col] < 0.5))

    eff0 = solution.matches[0].effective
    eff1 = solution.matches[1].effective
    m0 = contest(eff0[0], eff0[1], 0, 1, 0)
    m1 = contest(eff1[0], eff1[1], 2, 3, 1)
    final_first = contest(b_final, b_final, 4, 5, 2)
    w0 = np.where(m0, 0, 1)
    w1 = np.where(m1, 2, 3)
    return np.where(final_first, w0, w1)


def simulate_tournament(solution: SpeSolution, config: SimConfig = SimConfig(),
                        ) -> SimResult:
    """Run the whole tournament config.trials times and tally the winners."""
    if config.mode == "structural":
        _check_structural(solution.spec.csf)

    wins = np.zeros(4, dtype=np.int64)
    done = 0
    chunk_index = 0
    while done < config.trials:
        n = min(CHUNK, config.trials - done)
        rng = _chunk_rng(config.seed, chunk_index)
        if config.mode == "direct":
            u = rng.random((n, 3))
            winners = _winners_direct(solution, u)
        else:
            noise = rng.random((n, 6))
            coins = rng.random((n, 3))
            winners = _winners_structural(solution, noise, coins)
        wins += np.bincount(winners, minlength=4)
        done += n
        chunk_index += 1

    freq = wins / config.trials
    ci99 = _Z99 * np.sqrt(freq * (1.0 - freq) / config.trials)
    type_freq = {HAWK: 0.0, DOVE: 0.0}
    for t, f in zip(solution.types, freq):
        type_freq[t] += float(f)
    return SimResult(
        trials=config.trials,
        seed=config.seed,
        mode=config.mode,
        wins=tuple(int(w) for w in wins),
        freq=tuple(float(f) for f in freq),
        expected=solution.win_probs,
        ci99=tuple(float(c) for c in ci99),
        type_freq=type_freq,
        type_expected=solution.type_win_probs,
    )
