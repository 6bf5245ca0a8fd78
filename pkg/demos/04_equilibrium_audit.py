"""Candidate solutions are cheap; certified ones are not.

The verifier recomputes first-order residuals analytically, measures
curvature by finite differences, prices every corner deviation, and then
sweeps a brute-force grid over each player's full strategy square.  The
second bundled scenario is the cautionary tale: its interior candidate
solves every first-order condition yet fails the audit, because with
bounded noise a nearly-beaten player would rather quit and keep the coin
flip than pay for effort.
"""

import dataclasses

from tourney import (PowerCost, ProbitUniformCsf, TournamentSpec, TullockCsf,
                     existence_gate, solve_tournament, verify_solution)

ratio_spec = TournamentSpec(prize=80.0, csf=TullockCsf(r=1.0),
                            cost=PowerCost(3.0, 12.0))
noise_spec = TournamentSpec(prize=20.0,
                            csf=ProbitUniformCsf(half_width=5.0,
                                                 f_exponent=0.5),
                            cost=PowerCost(3.0, 27.0))


def audit(label, spec):
    report = verify_solution(solve_tournament(spec))
    print(f"== {label} ==")
    print(f"  worst first-order residual  {max(abs(v) for v in report.foc_residuals.values()):.2e}")
    print(f"  worst curvature             {max(report.soc_values.values()):+.4f}")
    print(f"  best corner deviation       {max(report.corner_gains.values()):+.4f}")
    print(f"  best grid deviation         {max(report.oracle_gains.values()):+.4e}")
    verdict = "accepted" if report.interior_ok else "REJECTED"
    print(f"  verdict: {verdict}")
    for note in report.notes[:3]:
        print(f"    - {note}")
    print()


audit("ratio scenario (prize 80)", ratio_spec)
audit("noisy scenario (prize 20)", noise_spec)

print("== how large must the prize be? ==")
gate = existence_gate(ratio_spec, grid=128)
print(f"  ratio family: interior play survives down to about"
      f" {gate.minimal_v_estimate:.1f}")
low = dataclasses.replace(ratio_spec, prize=40.0)
report = verify_solution(solve_tournament(low), grid=128)
print(f"  at prize 40 the same family is {'accepted' if report.interior_ok else 'rejected'}:")
for note in report.notes[:1]:
    print(f"    - {note}")
