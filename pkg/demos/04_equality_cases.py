"""The equality cases: bodies for which the radii inequalities of the
Orlicz sum are tight, and the regime condition that governs them.

Run:  python3 demos/04_equality_cases.py
"""
import numpy as np

from orlicz_radii import (PhiConstants, SearchBudget, Subspace, circumradius,
                          make_poly_phi, make_power_phi, make_simplex_Kn,
                          orlicz_sum, reflect, successive_inner_radius,
                          successive_outer_radius)
from orlicz_radii.verify import (inner_ball_optimal_frame, inner_ball_pair,
                                 segment_cube_body, slab_cube_pair)

budget = SearchBudget(starts=2, max_iters=10, angle_grid=8)
PHIS = [make_power_phi(1.0), make_power_phi(1.5), make_power_phi(2.0),
        make_poly_phi(0.5, 0.5), make_power_phi(3.0), make_power_phi(10.0)]

print("=" * 70)
print("Outer equality: slab cubes in R^4, i = 2")
print("=" * 70)
print("K and K' are unit cubes in the coordinate subspaces (1,3,4) and")
print("(2,3,4); projecting the sum onto span(e1,e2) leaves the sum of two")
print("orthogonal segments, whose circumradius is sqrt(2)/(2 phi^-1(1/2))")
print("whenever that constant is at least 1 (the segments themselves lie")
print("inside the sum, so the value can never drop below 1).")
print()
K, Kp = slab_cube_pair(4, 2)
frame = Subspace.from_axes(4, [1, 2])
print("  gauge                 R_2(K +_phi K')   sqrt(2)/(2 phi^-1(1/2))")
for phi in PHIS:
    c = PhiConstants.from_phi(phi)
    rep = successive_outer_radius(orlicz_sum(K, Kp, phi), 2, budget,
                                  forced_frames=[frame], assume_optimal_frames=True)
    tag = "  <- out of regime (floor 1)" if c.slab_radius < 1 else ""
    print(f"  {phi.descriptor:20s}  {rep.value:.12f}   {c.slab_radius:.12f}{tag}")

print()
print("=" * 70)
print("Inner equality: unit discs in span(e1,e2) and span(e1,e3), i = 2")
print("=" * 70)
B0, B1, axes0, axes1 = inner_ball_pair(3, 2, 512)
opt = inner_ball_optimal_frame(3, 2, axes0, axes1)
print("  the optimal plane averages the two disc planes: span{e1, (e2+e3)/sqrt(2)}")
for phi in PHIS[:4]:
    c = PhiConstants.from_phi(phi)
    rep = successive_inner_radius(orlicz_sum(B0, B1, phi), 2, budget,
                                  forced_frames=[opt], assume_optimal_frames=True)
    print(f"  {phi.descriptor:20s}  r_2 = {rep.value:.10f}   target {c.slab_radius:.10f}"
          f"   (mesh gap {B0.meta['mesh_gap']:.1e})")

print()
print("=" * 70)
print("Difference bodies")
print("=" * 70)
K = segment_cube_body(3, 2)  # [0,e1] + [-e3,e3]
phi = make_power_phi(1.5)
S = orlicz_sum(K, reflect(K), phi)
rep = successive_outer_radius(S, 2, budget, forced_frames=[Subspace.from_axes(3, [1, 2])],
                              assume_optimal_frames=True)
repK = successive_outer_radius(K, 2, budget, forced_frames=[Subspace.from_axes(3, [1, 2])],
                               assume_optimal_frames=True)
print(f"  segment-plus-cube: R_2(K +_phi(-K)) = {rep.value:.10f} = 2 R_2(K) "
      f"= {2 * repK.value:.10f}")
print("  ([0,e1] +_phi [-e1,0] is exactly [-e1,e1]: the hull bound and the")
print("  Minkowski bound coincide there, for every admissible gauge.)")
print()
for n in (2, 3):
    Kn = make_simplex_Kn(n)
    c = PhiConstants.from_phi(phi)
    pairs = [(a, b) for a in range(n + 1) for b in range(n + 1) if a != b]
    extra = np.array([(np.eye(n + 1)[a] - np.eye(n + 1)[b]) / np.sqrt(2.0) for a, b in pairs])
    value = circumradius(orlicz_sum(Kn, reflect(Kn), phi), extra_directions=extra).radius
    print(f"  simplex K_{n}: R_{n}(K_{n}) = {circumradius(Kn).radius:.10f} "
          f"(= sqrt({n}/{n+1})),  R_{n}(K_{n} +_phi(-K_{n})) = {value:.10f} "
          f"(target {c.slab_radius:.10f})")
