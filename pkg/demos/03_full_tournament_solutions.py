"""Solve the two bundled scenarios end to end and print player tables."""

import json
from importlib import resources

from tourney import parse_scenario, solve_tournament


def show(name):
    raw = resources.files("tourney").joinpath(f"scenarios/{name}").read_text()
    data = json.loads(raw)
    print(f"== {name} ==")
    print(f"  prize {data['prize']}, contest {data['csf']['type']},"
          f" cost s^{data['cost']['exponent']}/{data['cost']['divisor']}")

    with resources.as_file(resources.files("tourney")
                           .joinpath(f"scenarios/{name}")) as path:
        spec, _ = parse_scenario(path)
    sol = solve_tournament(spec)

    header = f"  {'player':>6} {'type':>4} {'x':>9} {'s':>8} {'win':>8} {'payoff':>9}"
    print(header)
    for i, kind in enumerate(sol.types):
        match = sol.matches[i // 2]
        effort = match.efforts[i % 2]
        print(f"  {i:>6} {kind:>4} {effort.x:9.4f} {effort.s:8.4f}"
              f" {sol.win_probs[i]:8.4f} {sol.payoffs[i]:9.4f}")
    print(f"  dove type wins the tournament with probability"
          f" {sol.type_win_probs['D']:.4f}")
    print()


show("example1.json")
show("example2.json")

print("note: doves out-win hawks in both scenarios even though hawks")
print("carry an extra instrument. sabotage is pure waste in equilibrium;")
print("it burns the hawk's own continuation value through the cost function")
print("while every rival anticipates it.")
