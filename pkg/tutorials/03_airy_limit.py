"""Airy-function approximation for strongly edge-peaked states.

For large |lambda| the large-regime state is close to an Airy function
whose slope vanishes at phi = pi. This script compares it with the
numerical state at delta_phi = 3 and follows the product as the state
approaches the boundary.
"""

import math

import numpy as np

from cmupstates import airy_state, airy_uncertainty_product, solve_for_delta_phi
from cmupstates.airyapprox import (
    boundary_argument,
    first_zero_ai_prime,
    ratio_from_lambda_approx,
    validity_threshold,
)

a1 = first_zero_ai_prime()
print("first zero of Ai':", a1)
print("approximation defined for lambda >", validity_threshold())

# Numerical state and Airy state at the same multiplier
num = solve_for_delta_phi(3.0, 1e-10)
approx = airy_state(abs(num.lam))
phi = np.linspace(0.0, math.pi, 721)
sup = np.max(np.abs(num.psi(phi) - approx.psi(phi)))
print(f"\n|lambda|={abs(num.lam):.4f}")
print(f"delta_phi numeric={num.delta_phi:.6f} airy={approx.delta_phi:.6f}")
print(f"product   numeric={num.product:.4f} airy={airy_uncertainty_product(abs(num.lam))[1]:.4f}")
print(f"sup |psi_numeric - psi_airy| = {sup:.4f}")
print("argument at pi:", boundary_argument(approx))

# Exact turning point versus its leading-order form
print(f"\n{'lambda':>10} {'exact':>12} {'leading':>12}")
for lam in (10.0, 100.0, 1e3, 1e4):
    st = airy_state(lam)
    print(f"{lam:10.0f} {st.ratio_sqrt:12.8f} {ratio_from_lambda_approx(lam):12.8f}")

# The product grows without bound as delta_phi -> pi
print(f"\n{'lambda':>10} {'delta_phi':>10} {'product':>10}")
for lam in np.geomspace(10.0, 1e6, 6):
    d, p = airy_uncertainty_product(float(lam))
    print(f"{lam:10.3g} {d:10.6f} {p:10.4f}")
