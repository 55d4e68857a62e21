"""Sweeping the signed control through both regimes.

The sweep maps one signed control onto the small branch (negative), the
flat state (zero) and the large branch (positive). Each row carries the
uncertainty product and the boundary-aware lower bound.
"""

import numpy as np

from cmupstates import sweep

rows = sweep(-6.0, 8.0, 57)
ok = [r for r in rows if r.ok]
print(f"{len(ok)}/{len(rows)} rows resolved")

print(f"{'c':>8} {'regime':>6} {'delta_phi':>10} {'delta_lz':>10} {'product':>10} {'bound':>10}")
for r in ok[::4]:
    print(f"{r.control:8.3f} {r.regime:>6} {r.delta_phi:10.5f} {r.delta_lz:10.5f} {r.product:10.5f} {r.bound:10.5f}")

# The product never falls below the bound
margin = np.array([r.product - r.bound for r in ok])
print("\nmin product - bound:", margin.min())

# delta_phi increases with the control
dphi = np.array([r.delta_phi for r in ok])
print("delta_phi monotone:", bool(np.all(np.diff(dphi) > 0)))

# mu/lambda climbs from pi^2/3 towards pi^2 on the large branch
large = [r for r in ok if r.regime == "large"]
print("mu/lambda on large branch:", large[0].mu_over_lambda, "->", large[-1].mu_over_lambda)
print("pi^2/3, pi^2:", np.pi ** 2 / 3, np.pi ** 2)
