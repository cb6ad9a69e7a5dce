"""Band topology of the two-band lattice model.

Walks the signed gap parameter u through its three phases and shows the
quantized Chern number of the lower band, the direct band-gap edges that
bound the absorptive frequency window, and the interband current matrix
elements that feed the Kubo conductivity.
"""

import numpy as np

from chernatom import (
    KPoint,
    ModelParams,
    band_gap_edges,
    chern_number,
    current_matrix_elements,
    d_vector,
)
from chernatom.errors import DegenerateGapError, SingularKPointError

print("=== Chern number across the phase diagram ===")
print(f"{'u/t':>6} {'C':>3}   {'gap edges (units of t)':>24}")
for u in (-3.0, -1.9, -1.0, -0.1, 0.1, 1.0, 1.9, 3.0):
    c = chern_number(ModelParams(u=u), grid_n=64)
    lo, hi = band_gap_edges(ModelParams(u=u))
    print(f"{u:>6.1f} {c:>3d}   [{lo:.2f}, {hi:.2f}]")

print()
print("At the critical values u/t in {0, +2, -2} the gap closes and the")
print("Chern number is undefined:")
for u in (0.0, 2.0, -2.0):
    try:
        chern_number(ModelParams(u=u), grid_n=64)
    except DegenerateGapError as exc:
        print(f"  u/t={u:+.0f}: {exc}")

print()
print("=== d-vector and current matrix elements, u/t = 1 ===")
p = ModelParams(u=1.0)
print(f"{'kx':>6} {'ky':>6} {'|d|':>8} {'Re<jx jx>':>12} {'Im<jx jy>':>12}")
for kx, ky in ((0.3, 0.4), (np.pi / 2, np.pi / 2), (1.0, -2.0), (2.8, 0.2)):
    k = KPoint(kx, ky)
    d = d_vector(k, p)
    re_jxjx, im_jxjy = current_matrix_elements(k, p)
    print(f"{kx:>6.2f} {ky:>6.2f} {d.d:>8.4f} {re_jxjx:>12.6f} {im_jxjy:>12.6f}")

print()
print("High-symmetry points where sin kx = sin ky = 0 are excluded (the")
print("closed forms are 0/0 there and the BZ quadrature never lands on them):")
try:
    current_matrix_elements(KPoint(0.0, 0.0), p)
except SingularKPointError as exc:
    print(f"  {exc}")
