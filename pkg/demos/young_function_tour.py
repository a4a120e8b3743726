"""
Young functions and their conjugates
====================================

Evaluation, generalized inverses, numeric convex conjugation and the
doubling-ratio probe across the three built-in families.
"""

import math

import orlicz_dynamics as od

power2 = od.PowerYoung(2.0)
power1 = od.PowerYoung(1.0)
alphalog = od.AlphaLogYoung(1.5)

print("Evaluation and generalized inverse:")
for phi, name, t in [(power2, "power p=2", 3.0), (power1, "power p=1", -4.0),
                     (alphalog, "alphalog a=1.5", math.e)]:
    value = phi.evaluate(t)
    print(f"  {name:<15s} Phi({t:+.3f}) = {value:.6f}   Phi^-1({value:.4f}) = "
          f"{od.inverse(phi, value):.6f}")

print("\nNumeric conjugates against closed forms (power family):")
for p in (1.5, 2.0, 3.0):
    phi = od.PowerYoung(p)
    q = p / (p - 1.0)
    for y in (0.5, 2.0, 5.0):
        psi = od.complementary(phi, y)
        exact = y**q / q
        print(f"  p = {p}: Psi({y}) = {psi:.10f}   y^q/q = {exact:.10f}   "
              f"diff = {abs(psi - exact):.2e}")

print("\nLinear growth has a vertical conjugate:")
for y in (0.5, 1.0, 2.0):
    print(f"  p = 1: Psi({y}) = {od.complementary(power1, y)}")

print("\nYoung inequality sampling (max of xy - Phi(x) - Psi(y), want <= 0):")
for phi, name in [(power2, "power p=2"), (od.PowerYoung(3.0), "power p=3")]:
    worst = od.young_inequality_check(phi, samples=2000, seed=7)
    print(f"  {name:<12s}: max violation = {worst:.3e}")

print("\nDoubling-ratio probes on the grid [1e-3, 1e3]:")
for phi, name in [(power1, "power p=1"), (power2, "power p=2"), (alphalog, "alphalog a=1.5")]:
    probe = od.delta2_probe(phi, 1e-3, 1e3, 200)
    print(f"  {name:<15s}: sup Phi(2t)/Phi(t) = {probe.ratio_sup:.6f} (evidence only)")

print("\nA sampled custom table behaves like its generator:")
knots = tuple((t, power2.evaluate(t)) for t in [x * 0.25 for x in range(41)])
table = od.TableYoung(knots)
for t in (0.3, 1.1, 2.7):
    print(f"  table Phi({t}) = {table.evaluate(t):.6f}   exact t^2/2 = {t * t / 2:.6f}")
