"""
Luxemburg norms on discrete groups
==================================

The norm of a finitely supported vector is the root of its modular; for
characteristic functions there is a closed form, and translation by any
group element is an exact isometry.
"""

import numpy as np

import orlicz_dynamics as od

group = od.IntegerGroup()
p2 = od.PowerYoung(2.0)

print("Bisection norm vs the p-norm closed form (power family):")
rng = np.random.default_rng(3)
for p in (1.0, 2.0, 3.0):
    phi = od.PowerYoung(p)
    values = rng.uniform(0.5, 3.0, size=5)
    f = od.OrliczVector({i: float(v) for i, v in enumerate(values)})
    closed = p ** (-1.0 / p) * float(np.sum(np.abs(values) ** p)) ** (1.0 / p)
    print(f"  p = {p}: bisection = {od.luxemburg_norm(f, phi):.12f}   "
          f"closed form = {closed:.12f}")

print("\nIndicator norms 1 / Phi^-1(1/|B|):")
for size in (1, 2, 8, 32):
    B = od.box(group, [[0, size - 1]])
    chi = od.OrliczVector.indicator(B)
    print(f"  |B| = {size:2d}: closed form = {od.indicator_norm_closed_form(B, p2):.10f}   "
          f"bisection = {od.luxemburg_norm(chi, p2):.10f}")

print("\nTranslation is an exact isometry (here on the Heisenberg group):")
heis = od.HeisenbergGroup()
f = od.OrliczVector({(0, 0, 0): 1.5, (1, -1, 2): -0.25, (2, 0, 1): 0.75})
base = od.luxemburg_norm(f, p2)
for a in [(3, 0, 2), (-1, 4, 0), (2, 2, -5)]:
    shifted = od.translate(f, heis, a)
    print(f"  a = {a!s:<12}: N(f * delta_a) = {od.luxemburg_norm(shifted, p2):.15f}   "
          f"N(f) = {base:.15f}")

print("\nOrbit norm series under weighted translations:")
step = od.WeightedSystem(group=group, a=1, weight=od.TwoSidedStepWeight(2.0, 0.5), young=p2)
doubling = od.WeightedSystem(group=group, a=1, weight=od.ConstantWeight(2.0), young=p2)
delta = od.OrliczVector.delta(0)
print("  two-sided step, f = delta_0:", [f"{v:.4f}" for v in od.orbit_norm_series(step, delta, 6)])
print("  constant 2,     f = delta_0:", [f"{v:.4f}" for v in od.orbit_norm_series(doubling, delta, 6)])
