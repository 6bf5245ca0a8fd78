"""Tour of the contest primitives: success functions and effort costs.

Run with: python3 demos/01_primitives_tour.py
"""

from tourney import InteriorityError, PowerCost, ProbitUniformCsf, TullockCsf

ratio = TullockCsf(r=0.5)
noise = ProbitUniformCsf(half_width=5.0, f_exponent=0.5)

print("== win probabilities ==")
for own, rival in [(1.0, 1.0), (4.0, 1.0), (0.0, 1.0), (0.0, 0.0)]:
    print(f"  efforts ({own}, {rival}):"
          f"  ratio form {ratio.win_prob(own, rival):.4f}"
          f"  noisy form {noise.win_prob(own, rival):.4f}")

print()
print("== marginal effects at (4, 1) ==")
for name, csf in [("ratio", ratio), ("noisy", noise)]:
    d_own, d_rival = csf.win_prob_partials(4.0, 1.0)
    print(f"  {name}: own {d_own:+.5f}, rival {d_rival:+.5f}")

# the noisy contest saturates once outputs differ by the full noise band;
# marginal analysis refuses to pretend otherwise
try:
    noise.win_prob_partials(121.0, 1.0)
except InteriorityError as exc:
    print(f"\nsaturated contest rejected: {exc}")

print()
print("== power cost c(s) = s^a / m ==")
cost = PowerCost(exponent=3.0, divisor=12.0)
unit = cost.marginal_inverse(1.0)
print(f"  c(2) = {cost.cost(2.0)}")
print(f"  c'(2) = {cost.marginal(2.0)}")
print(f"  effort with unit marginal cost: {unit}")
print(f"  cheaper than its own size: c({unit}) = {cost.cost(unit):.6f} < {unit}")
