"""Seeding variations: the dove advantage is not an artifact of symmetry.

The headline bracket pits a hawk against a dove in each semifinal.  Here
we resolve the same economy under every other seeding of two, three, or
one hawk and watch the ranking persist: whenever a dove and a hawk face
comparable fields, the dove wins the title more often.
"""

from tourney import PowerCost, TournamentSpec, TullockCsf, solve_tournament

BRACKETS = [
    ((("H", "D"), ("H", "D")), "two mixed semifinals (headline case)"),
    ((("H", "H"), ("D", "D")), "hawks meet first, doves meet first"),
    ((("H", "D"), ("H", "H")), "three hawks, one dove"),
    ((("H", "D"), ("D", "D")), "one hawk, three doves"),
]

for bracket, label in BRACKETS:
    spec = TournamentSpec(prize=80.0, csf=TullockCsf(r=1.0),
                          cost=PowerCost(3.0, 12.0), bracket=bracket)
    sol = solve_tournament(spec)
    flat = [kind for side in bracket for kind in side]
    print(f"== {label} ==")
    print(f"  seeding {flat}")
    rows = ", ".join(f"{kind}:{prob:.4f}"
                     for kind, prob in zip(sol.types, sol.win_probs))
    print(f"  title probabilities  {rows}")
    print(f"  by type  H {sol.type_win_probs['H']:.4f}"
          f"   D {sol.type_win_probs['D']:.4f}")
    print()

print("in the segregated bracket the types tie by construction: the final")
print("is always hawk against dove, and the semifinal handicaps cancel.")
print("every mixed semifinal, though, sends the dove through more often")
print("than the hawk, whatever the rest of the field looks like.")
