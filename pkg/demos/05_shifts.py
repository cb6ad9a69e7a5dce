"""Frequency shifts of the excited atom vs distance.

The headline effect: for a right circularly polarized transition the shift
oscillates with distance above the C = +1 surface but becomes a monotonic,
repulsion-like curve above C = -1, because the Hall-induced crossed
reflection adds in antiphase with the direct one.  The nonresonant part is
orders of magnitude smaller at these distances.
"""

import numpy as np

from chernatom import (
    CIRCULAR_LEFT,
    CIRCULAR_RIGHT,
    PARALLEL_X,
    PERPENDICULAR,
    ModelParams,
    resonant_shift,
    shift_curve,
    total_shift,
)

W10 = 1.9  # transition frequency in units of t, just below the 2t edge

print("=== Circular dipole above the two Chern phases (resonant part) ===")
print(f"{'eta':>5} {'u/t=+1':>12} {'u/t=-1':>12}")
for eta in np.arange(6.0, 14.001, 1.0):
    a = resonant_shift(CIRCULAR_RIGHT, W10, float(eta), p=ModelParams(u=1.0))
    b = resonant_shift(CIRCULAR_RIGHT, W10, float(eta), p=ModelParams(u=-1.0))
    print(f"{eta:>5.1f} {a.resonant:>12.4e} {b.resonant:>12.4e}")
print("(u=+1 oscillates; u=-1 decays with strongly suppressed ripple)")

print()
print("=== Mirror symmetry ===")
a = resonant_shift(CIRCULAR_LEFT, W10, 5.0, p=ModelParams(u=1.0)).resonant
b = resonant_shift(CIRCULAR_RIGHT, W10, 5.0, p=ModelParams(u=-1.0)).resonant
print(f"left-circular over C=+1: {a:.10e}")
print(f"right-circular over C=-1: {b:.10e}   (identical by reflection symmetry)")

print()
print("=== Polarization comparison at u/t = +1 ===")
print(f"{'eta':>5} {'perp':>12} {'parallel':>12} {'circ+':>12} {'circ-':>12}")
p = ModelParams(u=1.0)
for eta in (1.0, 2.0, 4.0, 8.0):
    row = [
        resonant_shift(pol, W10, eta, p=p).resonant
        for pol in (PERPENDICULAR, PARALLEL_X, CIRCULAR_RIGHT, CIRCULAR_LEFT)
    ]
    print(f"{eta:>5.1f} " + " ".join(f"{v:>12.4e}" for v in row))

print()
print("=== Resonant vs nonresonant at eta = 2 (nondispersive C = +1) ===")
r = total_shift(CIRCULAR_RIGHT, W10, 2.0, nondispersive_chern=1)
print(f"resonant    : {r.resonant:+.6e}")
print(f"nonresonant : {r.nonresonant:+.6e}  (excited minus ground level)")
print(f"total       : {r.total:+.6e}")

print()
print("=== Full curve helper ===")
curve = shift_curve(
    np.arange(1.0, 5.001, 1.0), PERPENDICULAR, W10, nondispersive_chern=1
)
for res in curve:
    print(
        f"eta={res.eta:.1f}  resonant={res.resonant:+.4e}"
        f"  ({res.polarization}, dispersive={res.dispersive})"
    )
