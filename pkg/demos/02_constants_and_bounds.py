"""Growth-rate constants and certified bound checks.

The extremal growth rates are algebraic numbers; every comparison in the
library pits an exact integer against a rational interval around them,
so a reported violation can never be a rounding artifact.
"""

from flagbetti import check_bounds, check_complex_bounds, solve_constants
from flagbetti.constructions import fano_complex
from flagbetti.graphs import complete, copies, cycle

c = solve_constants(10)
print("theta =", c.theta.decimal_str(18), " (maximizes d^(1/(d+1)) at d=4)")
print("gamma =", c.gamma.decimal_str(18), " (root of x^6 = 1 + x + x^2)")
print("residuals:", {k: f"{v:.2e}" for k, v in c.residuals.items()})
print()

print("== graph bound reports ==")
for g, label in [(copies(2, complete(5)), "2 K_5"), (cycle(9), "C_9")]:
    rep = check_bounds(g, include_beta=True)
    print(f"{label}: b = {rep['b']}, beta = {rep['beta']}")
    for entry in rep["bounds"]:
        tightness = " (tight!)" if entry["exact_equality"] else ""
        print(f"  {entry['name']}: rhs in [{entry['rhs_lo']:.4f}, "
              f"{entry['rhs_hi']:.4f}] -> {'ok' if entry['pass'] else 'VIOLATED'}{tightness}")
print()

print("== complex bound report for the Steiner triangle complex ==")
rep = check_complex_bounds(fano_complex().complex_)
print(f"n = {rep['n']}, facets = {rep['m']}, minimal non-faces = {rep['m_nonfaces']}, "
      f"b = {rep['b']}")
for entry in rep["bounds"]:
    print(f"  {entry['name']}: ok = {entry['pass']}")
