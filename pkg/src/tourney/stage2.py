"""Final-stage equilibrium in closed form.

In the final the two contestants are symmetric in effective effort no
matter their types: a hawk sabotages the rival down by exactly the amount
the rival padded on top of the common productive base.  Hence every final
is a fair coin flip and the whole stage collapses to three closed forms:

* base productive effort, from the symmetric first-order condition,
* sabotage, from marginal cost = 1 (each sabotage unit forces the rival
  to buy one replacement effort unit, worth exactly 1 in equilibrium),
* a payoff menu over the four type pairings, which feeds the semifinals.

Sabotage here depends only on the cost function, never on the prize or
the success function.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParameterError
from .primitives import DOVE, HAWK, Csf, PowerCost, ProbitUniformCsf, TullockCsf

PAIRINGS = ("DD", "HD", "HH")


def base_effort(csf: Csf, v: float) -> float:
    """Productive effort solving the symmetric final-stage FOC at prize v."""
    if v <= 0:
        raise ParameterError(f"prize must be positive, got {v}")
    if isinstance(csf, TullockCsf):
        return csf.r * v / 4.0
    if isinstance(csf, ProbitUniformCsf):
        beta = csf.f_exponent
        return (beta * v / (2.0 * csf.half_width)) ** (1.0 / (1.0 - beta))
    raise ParameterError(f"unknown success function {csf!r}")


def stage2_sabotage(cost: PowerCost) -> float:
    """Final-stage sabotage: marginal cost equals one, prize-independent."""
    return cost.marginal_inverse(1.0)


@dataclass(frozen=True)
class Effort:
    """One player's strategy: productive effort x and sabotage s."""

    x: float
    s: float


@dataclass(frozen=True)
class PayoffMenu:
    """Expected final payoffs by own type versus rival type.

    Every pairing is a 50/50 contest at the common effective effort; the
    entries differ only in sunk outlays.  The strict ordering
    dove_vs_dove > hawk_vs_dove > dove_vs_hawk > hawk_vs_hawk holds
    whenever sabotage is worth buying at all.
    """

    dove_vs_dove: float
    hawk_vs_dove: float
    dove_vs_hawk: float
    hawk_vs_hawk: float

    def value(self, own: str, rival: str) -> float:
        key = {
            (DOVE, DOVE): self.dove_vs_dove,
            (HAWK, DOVE): self.hawk_vs_dove,
            (DOVE, HAWK): self.dove_vs_hawk,
            (HAWK, HAWK): self.hawk_vs_hawk,
        }
        try:
            return key[(own, rival)]
        except KeyError:
            raise ParameterError(
                f"unknown type pairing ({own!r}, {rival!r})") from None

    @property
    def ordered(self) -> bool:
        return (self.dove_vs_dove > self.hawk_vs_dove
                > self.dove_vs_hawk > self.hawk_vs_hawk)


def stage2_payoff_menu(csf: Csf, cost: PowerCost, v: float) -> PayoffMenu:
    """Expected final-stage payoffs for each own-type / rival-type pairing."""
    b = base_effort(csf, v)
    s = stage2_sabotage(cost)
    half = v / 2.0
    return PayoffMenu(
        dove_vs_dove=half - b,
        hawk_vs_dove=half - b - cost.cost(s),
        dove_vs_hawk=half - b - s,
        hawk_vs_hawk=half - b - s - cost.cost(s),
    )


def stage2_profile(pairing: str, csf: Csf, cost: PowerCost, v: float) -> tuple[Effort, Effort]:
    """Equilibrium strategies for one final pairing, hawk listed first in HD.

    Doves pad their productive effort by the sabotage they absorb; hawks
    facing hawks do the same.  Effective efforts always land on the common
    base, so the contest stays even.
    """
    if pairing not in PAIRINGS:
        raise ParameterError(f"pairing must be one of {PAIRINGS}, got {pairing!r}")
    b = base_effort(csf, v)
    s = stage2_sabotage(cost)
    if pairing == "DD":
        return Effort(x=b, s=0.0), Effort(x=b, s=0.0)
    if pairing == "HD":
        return Effort(x=b, s=s), Effort(x=b + s, s=0.0)
    return Effort(x=b + s, s=s), Effort(x=b + s, s=s)


@dataclass(frozen=True)
class Stage2Solution:
    """Closed-form final stage: common effective effort, sabotage, menu."""

    base_effort: float
    sabotage: float
    menu: PayoffMenu
    profiles: dict[str, tuple[Effort, Effort]]


def solve_stage2(csf: Csf, cost: PowerCost, v: float) -> Stage2Solution:
    """Assemble the closed-form final stage.  Pure arithmetic, never raises
    on economic grounds; whether the reachable pairings net a nonnegative
    payoff is checked by the tournament solver, which knows the bracket."""
    menu = stage2_payoff_menu(csf, cost, v)
    return Stage2Solution(
        base_effort=base_effort(csf, v),
        sabotage=stage2_sabotage(cost),
        menu=menu,
        profiles={p: stage2_profile(p, csf, cost, v) for p in PAIRINGS},
    )
