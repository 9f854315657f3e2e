"""Orlicz Minkowski sums: the per-direction scalar equation and the
sandwich bounds that pin the sum between the hull and the classical sum.

Run:  python3 demos/01_orlicz_sums.py
"""
import numpy as np

from orlicz_radii import (PhiConstants, direction_grid, make_poly_phi,
                          make_power_phi, make_random_polytope, make_segment,
                          minkowski_sum, orlicz_norm, orlicz_sum, orlicz_support)

print("=" * 70)
print("The defining equation: phi(hK/lam) + phi(hL/lam) = 1 per direction")
print("=" * 70)

for desc, phi in [("p=1 (classical)", make_power_phi(1)),
                  ("p=2", make_power_phi(2)),
                  ("p=10", make_power_phi(10)),
                  ("poly (t+t^2)/2", make_poly_phi(0.5, 0.5))]:
    lam = orlicz_support(0.3, 0.7, phi)
    c = PhiConstants.from_phi(phi)
    print(f"  {desc:18s} lam(0.3, 0.7) = {lam:.12f}   "
          f"phi^-1(1/2) = {c.half_inverse:.12f}")

print()
print("For powers the solver reproduces the closed form (hK^p + hL^p)^(1/p):")
hK, hL, p = 1.3, 0.4, 3.0
print(f"  bisection {orlicz_support(hK, hL, make_power_phi(p)):.15f}  "
      f"closed form {(hK**p + hL**p)**(1/p):.15f}")

print()
print("=" * 70)
print("Sum of two random planar bodies: sandwich and hull bounds")
print("=" * 70)
K = make_random_polytope(2, 7, seed=1)
L = make_random_polytope(2, 7, seed=2)
phi = make_poly_phi(0.5, 0.5)
c = PhiConstants.from_phi(phi)
S = orlicz_sum(K, L, phi)
M = minkowski_sum(K, L)

grid = direction_grid(2, 64)
hS = S.support_batch(grid)
hM = M.support_batch(grid)
hmax = np.maximum(K.support_batch(grid), L.support_batch(grid))
print(f"  min over grid of  h_sum - h_M/(2 phi^-1(1/2)) : {np.min(hS - hM/(2*c.half_inverse)): .3e}")
print(f"  min over grid of  h_M - h_sum                 : {np.min(hM - hS): .3e}")
print(f"  min over grid of  h_sum - max(h_K, h_L)       : {np.min(hS - hmax): .3e}")
print(f"  min over grid of  max/phi^-1(1/2) - h_sum     : {np.min(hmax/c.half_inverse - hS): .3e}")
print("  (all non-negative: hull <= sum <= Minkowski, with the scaled versions)")

print()
print("=" * 70)
print("Self sums are exact dilates: K +_phi K = K / phi^-1(1/2)")
print("=" * 70)
ratio = orlicz_sum(K, K, phi).support_batch(grid) / K.support_batch(grid)
print(f"  support ratio is constant: {ratio.min():.12f} .. {ratio.max():.12f}"
      f"  (1/phi^-1(1/2) = {1/c.half_inverse:.12f})")

print()
print("=" * 70)
print("The gauge norm behind the sum (here p = 2 gives the euclidean norm)")
print("=" * 70)
print(f"  ||(3,4)||_p2   = {orlicz_norm(np.array([3.0, 4.0]), make_power_phi(2)):.12f}")
print(f"  ||(1,1)||_poly = {orlicz_norm(np.array([1.0, 1.0]), phi):.12f}")

print()
print("Segments summed with p=2 give the euclidean disc:")
S2 = orlicz_sum(make_segment([-1, 0], [1, 0]), make_segment([0, -1], [0, 1]),
                make_power_phi(2))
angles = np.linspace(0, np.pi / 2, 7)
hs = S2.support_batch(np.column_stack([np.cos(angles), np.sin(angles)]))
print("  support values over a quarter circle:", np.round(hs, 12))
