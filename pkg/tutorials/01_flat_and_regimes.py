"""Flat state, small and large regimes.

Walks through the three kinds of constrained minimum uncertainty product
state: the uniform (flat) state, angle-narrow "small" states and
edge-peaked "large" states. Run with ``python tutorials/01_flat_and_regimes.py``.
"""

import math

import numpy as np

from cmupstates import FLAT_DELTA_PHI, ScaledProblem, build_state, solve_for_delta_phi
from cmupstates.cmup import achievable_range

# The uniform distribution on [-pi, pi] has angle spread pi/sqrt(3)
print("flat delta_phi:", FLAT_DELTA_PHI, "=", math.pi / math.sqrt(3))
flat = solve_for_delta_phi(FLAT_DELTA_PHI)
print("flat regime:", flat.regime.value, " product:", flat.product)

# A small-regime state from its scaled parameter
small = build_state(ScaledProblem("small", 0.25))
print("\nsmall a=0.25")
print("  lambda, mu     :", small.lam, small.mu)
print("  delta_phi      :", small.delta_phi)
print("  product, bound :", small.product, small.bound)

# And a large-regime state
large = build_state(ScaledProblem("large", 1.0))
print("\nlarge a=1")
print("  lambda, mu     :", large.lam, large.mu)
print("  delta_phi      :", large.delta_phi)
print("  product, bound :", large.product, large.bound)

# The wavefunction is even and normalised on [-pi, pi]
phi = np.linspace(-math.pi, math.pi, 2001)
for name, st in (("small", small), ("large", large)):
    psi = st.psi(phi)
    norm = np.trapezoid(psi ** 2, phi)
    print(f"{name}: norm={norm:.8f}  psi(0)={psi[1000]:.5f}  psi(pi)={psi[-1]:.5f}")

# Inverting delta_phi -> state, within the achievable window
lo, hi = achievable_range()
print("\nachievable delta_phi range:", lo, hi)
for target in (0.8, 2.5, 3.0):
    st = solve_for_delta_phi(target, 1e-10)
    print(f"target {target}: regime={st.regime.value} a={st.problem.a:.6g} product={st.product:.6g}")
