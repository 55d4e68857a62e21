"""Independent cross-checks of the series solver.

Three oracles: an RK4 shooting integrator, an integration-by-parts form
of the angular momentum variance and the closed Kummer-function profile.
Finishes with the quick check suite that backs ``cmup check --quick``.
"""

import numpy as np

from cmupstates import ScaledProblem, build_state
from cmupstates.checks import format_table, run_checks
from cmupstates.cmup import first_stationary_point, series_solution
from cmupstates.oracle import kummer_profile, lz_by_parts, rk4_shoot

# Series vs RK4 on the scaled ODE
for regime, a in (("large", 1.0), ("small", 0.25)):
    sol = series_solution(ScaledProblem(regime, a))
    x0 = first_stationary_point(sol)
    prof = rk4_shoot(sol.problem, x0)
    gap = np.max(np.abs(prof.psi - sol.psi(prof.x)))
    print(f"{regime} a={a}: x0={x0:.12f}  sup|series - rk4|={gap:.1e}")

# Angular momentum variance two ways
st = build_state(ScaledProblem("large", 1.0))
print("\nlz variance (multipliers):", st.lz_variance)
print("lz variance (by parts)   :", lz_by_parts(st))

# Kummer profile is proportional to the state on the large branch
phi = np.linspace(0.1, 3.0, 8)
ratio = kummer_profile(abs(st.lam), abs(st.mu), phi) / st.psi(phi)
print("\nKummer / psi:", np.round(ratio.real, 10))
print("max imaginary part:", np.max(np.abs(ratio.imag)))

print()
print(format_table(run_checks(quick=True)))
