"""The four classical radii with their certificates: minimum enclosing
balls by the move-to-front incremental method, inscribed balls by one
linear program, widths by the difference-body reduction.

Run:  python3 demos/02_radii_and_certificates.py
"""
import numpy as np

from orlicz_radii import (ConvexBody, Subspace, circumradius, diameter,
                          inradius_fixed_subspace, make_cube, make_random_polytope,
                          make_simplex_Kn, width)

print("=" * 70)
print("Circumballs (randomized incremental, move-to-front)")
print("=" * 70)
for name, body in [("unit square", make_cube([1, 2], 1.0, dim=2)),
                   ("simplex K_3", make_simplex_Kn(3)),
                   ("random 4-polytope", make_random_polytope(4, 14, seed=3))]:
    cert = circumradius(body)
    support = np.asarray(cert.support)
    on_sphere = np.abs(np.linalg.norm(support - cert.center, axis=1) - cert.radius).max()
    print(f"  {name:20s} R = {cert.radius:.12f}  "
          f"|support| = {len(support)}  sphere residual = {on_sphere:.1e}")
print(f"  (K_3 exact value sqrt(3/4) = {np.sqrt(3/4):.12f})")

print()
print("=" * 70)
print("Inscribed balls: max rho s.t. <a_j, c> + rho ||a_j|L|| <= b_j")
print("=" * 70)
cube = make_cube([1, 2, 3], 1.0, dim=3)
full = inradius_fixed_subspace(cube)
slab = inradius_fixed_subspace(cube, Subspace.from_axes(3, [1, 2]))
print(f"  cube, full space : rho = {full.radius:.12f} at c = {np.round(full.center, 9)}")
print(f"  cube, span(e1,e2): rho = {slab.radius:.12f}  (the free center handles the")
print("                      translate over the orthogonal complement)")

body = make_random_polytope(3, 12, seed=4)
cert = inradius_fixed_subspace(body)
A, b = body.halfspaces()
slack = b - (A @ cert.center + cert.radius * np.ones(len(b)))
print(f"  random 3-polytope: rho = {cert.radius:.12f}, "
      f"{len(cert.support)} active facets (min slack {slack.min():.1e})")

print()
print("=" * 70)
print("Diameter and width")
print("=" * 70)
D, (p, q) = diameter(body)
w, u = width(body)
print(f"  diameter  = {D:.12f}  between {np.round(p, 6)} and {np.round(q, 6)}")
print(f"  width     = {w:.12f}  in direction {np.round(u, 6)}")
print("  The width is found exactly as the smallest facet offset of the")
print("  difference body K + (-K): its breadth function is that body's")
print("  support function, so the minimal breadth is its largest centered ball.")

tet = ConvexBody(3, vertices=[[1, 1, 1], [1, -1, -1], [-1, 1, -1], [-1, -1, 1]])
print(f"  regular tetrahedron width = {width(tet)[0]:.12f} "
      "(edge-to-edge, not vertex-to-facet: 2 exactly)")
