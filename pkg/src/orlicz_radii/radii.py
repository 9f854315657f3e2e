"""Classical radii: circumradius, inradius, diameter, width.

The circumball of a vertex set is computed by the randomized incremental
Welzl method with move-to-front reordering; the largest inscribed ball
with a prescribed axis subspace is one linear program over the H-rep
(the translate freedom over the orthogonal complement is folded into the
free center variable).  Support-oracle bodies get the same functionals
through sphere optimization with explicit approximation-gap annotations
instead of silent inexactness.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import linprog

from .bodies import ConvexBody, GeometryError, Subspace, direction_grid, _axis_directions
from .optim import optimize_on_sphere, refine_on_sphere

_LP_OPTS = {"primal_feasibility_tolerance": 1e-10,
            "dual_feasibility_tolerance": 1e-10}

EPS_GEOM = 1e-9
_MEB_EPS = 1e-12


@dataclass
class BallCertificate:
    """An extremal ball with the data needed to audit it.

    For circumballs ``support`` holds at most dim+1 boundary points whose
    hull contains the center; for inscribed balls it holds the indices of
    the active H-rep constraints.  ``gap`` annotates oracle-based values
    (0 for exact vertex/LP computations).
    """
    center: np.ndarray
    radius: float
    support: object = None
    kind: str = "circumball"
    gap: float = 0.0
    note: str = ""
    subspace: Subspace | None = None


# ---------------------------------------------------------------------------
# minimum enclosing ball (Welzl, move-to-front)


def _circumsphere(boundary):
    """Smallest sphere through the affinely independent points in ``boundary``."""
    if not boundary:
        return None, -1.0
    q0 = boundary[0]
    if len(boundary) == 1:
        return q0.copy(), 0.0
    A = np.asarray(boundary[1:]) - q0
    rhs = 0.5 * np.einsum("ij,ij->i", A, A)
    G = A @ A.T
    try:
        alpha = np.linalg.solve(G, rhs)
    except np.linalg.LinAlgError:
        alpha = np.linalg.lstsq(G, rhs, rcond=None)[0]
    center = q0 + A.T @ alpha
    radius = float(np.max(np.linalg.norm(np.asarray(boundary) - center, axis=1)))
    return center, radius


def min_enclosing_ball(points, seed: int = 0):
    """Exact-in-spirit minimum enclosing ball of a point set.

    Returns ``(center, radius, support_points)``.  The randomized order is
    seeded, so results are reproducible bit for bit.
    """
    pts = np.atleast_2d(np.asarray(points, dtype=float))
    if pts.shape[0] == 0:
        raise GeometryError("min_enclosing_ball needs at least one point")
    d = pts.shape[1]
    order = list(np.random.default_rng(seed).permutation(len(pts)))
    scale = 1.0 + float(np.abs(pts).max())

    def mtf(end, boundary):
        center, radius = _circumsphere(boundary)
        support = list(boundary)
        if len(boundary) == d + 1:
            return center, radius, support
        k = 0
        while k < end:
            p = pts[order[k]]
            if center is None or np.linalg.norm(p - center) > radius * (1 + _MEB_EPS) + _MEB_EPS * scale:
                center, radius, support = mtf(k, boundary + [p])
                order.insert(0, order.pop(k))
            k += 1
        return center, radius, support

    center, radius, support = mtf(len(order), [])
    return center, float(radius), np.asarray(support)


def _circumradius_oracle_symmetric(body, grid_size=None, extra=None):
    # For an origin-symmetric body the circumball is centered at 0, so
    # R = max_u h(u).
    val, u = optimize_on_sphere(body.support_batch, body.dim, +1,
                                grid_size=grid_size, extra=extra)
    return BallCertificate(center=np.zeros(body.dim), radius=val,
                           support=np.atleast_2d(u * val), kind="circumball",
                           gap=0.0, note="oracle: symmetric max-support")


def _circumradius_oracle(body, grid_size=None, rounds: int = 12, extra=None):
    # Cutting planes on min_c max_u (h(u) - <c,u>): lower bounds from the
    # LP over sampled directions, an upper certificate from the polished
    # worst direction at the final center.
    U = np.vstack([direction_grid(body.dim, grid_size), _axis_directions(body.dim)])
    if extra is not None and len(extra):
        U = np.vstack([U, np.atleast_2d(extra)])
    h = body.support_batch(U)
    c_opt, lower = np.zeros(body.dim), 0.0
    upper, u_worst = np.inf, U[0]
    for _ in range(rounds):
        res = linprog(np.r_[np.zeros(body.dim), 1.0],
                      A_ub=np.column_stack([-U, -np.ones(len(U))]), b_ub=-h,
                      bounds=[(None, None)] * (body.dim + 1), method="highs", options=_LP_OPTS)
        if not res.success:
            raise GeometryError(f"circumradius LP failed: {res.message}")
        c_opt, lower = res.x[:-1], float(res.x[-1])
        viol = lambda V: body.support_batch(V) - V @ c_opt
        upper, u_worst = optimize_on_sphere(viol, body.dim, +1, grid_size=256)
        if upper <= lower + 1e-10 * (1.0 + abs(lower)):
            break
        U = np.vstack([U, u_worst[None, :]])
        h = np.r_[h, body.support(u_worst)]
    return BallCertificate(center=c_opt, radius=float(upper),
                           support=np.atleast_2d(u_worst), kind="circumball",
                           gap=float(max(0.0, upper - lower)),
                           note="oracle: cutting-plane minimax")


def circumradius(body: ConvexBody, seed: int = 0, extra_directions=None) -> BallCertificate:
    """Minimum enclosing ball of the body."""
    if body.vertices is not None:
        center, radius, support = min_enclosing_ball(body.vertices, seed=seed)
        return BallCertificate(center=center, radius=radius, support=support)
    if body.is_symmetric:
        return _circumradius_oracle_symmetric(body, extra=extra_directions)
    return _circumradius_oracle(body, extra=extra_directions)


# ---------------------------------------------------------------------------
# inscribed balls


def _full_frame(n):
    return Subspace(np.eye(n))


def inradius_fixed_subspace(body: ConvexBody, L: Subspace | None = None) -> BallCertificate:
    """Largest ball ``c + rho * (B_n  intersect  L)`` inside the body.

    ``L=None`` means the full space (the Chebyshev center).  For H-rep /
    V-rep bodies this is the exact LP

        max rho  s.t.  <a_j, c> + rho * ||a_j | L|| <= b_j ;

    the center ranges over all of R^n, which absorbs the translate
    optimization over the orthogonal complement.  Oracle bodies go through
    sphere optimization (symmetric: the largest centered ball; otherwise a
    cutting-plane LP over sampled support constraints).
    """
    L = L or _full_frame(body.dim)
    if L.n != body.dim:
        raise GeometryError("subspace ambient dimension mismatch")
    if body.vertices is not None and body.affine_dim < body.dim:
        return _inball_flat_vrep(body, L)
    if body.vertices is not None or body._halfspaces is not None:
        A, b = body.halfspaces()
        w = np.linalg.norm(A @ L.frame, axis=1)
        res = linprog(np.r_[np.zeros(body.dim), -1.0],
                      A_ub=np.column_stack([A, w]), b_ub=b,
                      bounds=[(None, None)] * body.dim + [(0, None)],
                      method="highs", options=_LP_OPTS)
        if res.status == 2:
            raise GeometryError("inscribed-ball LP infeasible: body is empty")
        if res.status == 3:
            raise GeometryError("body not compact: inscribed-ball LP unbounded")
        if not res.success:
            raise GeometryError(f"inscribed-ball LP failed: {res.message}")
        center, rho = res.x[:-1], float(-res.fun)
        slack = b - (A @ center + rho * w)
        active = np.flatnonzero(slack <= 1e-7 * (1.0 + np.abs(b)))
        return BallCertificate(center=center, radius=rho, support=active,
                               kind="inball", subspace=L)
    if body.is_symmetric:
        return _inball_oracle_symmetric(body, L)
    return _inball_oracle_cut(body, L)


def _inball_flat_vrep(body, L):
    """A flat body constrains inscribed balls to its affine hull: reduce to
    hull coordinates when the axis subspace lies inside the hull's
    direction space (otherwise only radius 0 fits, regardless of the
    translate)."""
    x0, W, m = body.affine_hull()
    if L.i > m:
        return BallCertificate(center=x0.copy(), radius=0.0, support=None,
                               kind="inball", subspace=L,
                               note=f"axis dimension exceeds affine dim {m}")
    frame_h = W.T @ np.asarray(L.frame)
    gram = frame_h.T @ frame_h
    if np.max(np.abs(gram - np.eye(L.i))) > 1e-10:
        return BallCertificate(center=x0.copy(), radius=0.0, support=None,
                               kind="inball", subspace=L,
                               note="axis subspace leaves the affine hull")
    reduced = ConvexBody(m, vertices=(body.vertices - x0) @ W)
    cert = inradius_fixed_subspace(reduced, Subspace(frame_h))
    return BallCertificate(center=x0 + W @ cert.center, radius=cert.radius,
                           support=cert.support, kind="inball", subspace=L,
                           note=f"reduced to affine hull (dim {m})")


def _gauge_ratio_fn(body, frame):
    def fn(U):
        h = body.support_batch(U)
        w = np.linalg.norm(U @ frame, axis=1)
        out = np.full(len(U), np.inf)
        ok = w > 1e-8
        out[ok] = h[ok] / w[ok]
        return out
    return fn

def _inball_oracle_symmetric(body, L):
    # Symmetry lets the ball be centered at the origin, so
    # rho(L) = min_u h(u) / ||u|L|| over directions not orthogonal to L.
    extra = L.lift(direction_grid(L.i, 128 if L.i > 1 else None))
    val, u = optimize_on_sphere(_gauge_ratio_fn(body, np.asarray(L.frame)),
                                body.dim, -1, extra=extra)
    return BallCertificate(center=np.zeros(body.dim), radius=float(val),
                           support=np.atleast_2d(u), kind="inball", subspace=L,
                           gap=0.0, note="oracle: symmetric gauge")


def _inball_oracle_cut(body, L, rounds: int = 10):
    # The sampled support halfspaces are valid constraints of the true
    # body, so the LP over-estimates; rounds of cuts at polished worst
    # directions shrink the excess, and the reported value is the smaller
    # of the LP optimum and the frozen-center estimate, with the spread
    # recorded as the gap.
    frame = np.asarray(L.frame)
    U = np.vstack([direction_grid(body.dim), _axis_directions(body.dim),
                   L.lift(direction_grid(L.i, 64 if L.i > 1 else None))])
    h = body.support_batch(U)
    center = np.zeros(body.dim)
    rho = 0.0
    worst = 0.0
    for _ in range(rounds):
        w = np.linalg.norm(U @ frame, axis=1)
        res = linprog(np.r_[np.zeros(body.dim), -1.0],
                      A_ub=np.column_stack([U, w]), b_ub=h,
                      bounds=[(None, None)] * body.dim + [(0, None)],
                      method="highs", options=_LP_OPTS)
        if not res.success:
            raise GeometryError(f"oracle inscribed-ball LP failed: {res.message}")
        center, rho = res.x[:-1], float(-res.fun)

        def viol(V):
            return body.support_batch(V) - V @ center - rho * np.linalg.norm(V @ frame, axis=1)

        grid = direction_grid(body.dim, 512)
        vals = viol(grid)
        order = np.argsort(vals)[:4]
        refined, rvals = refine_on_sphere(viol, grid[order], -1, steps=60)
        worst = float(rvals.min())
        if worst >= -1e-10 * (1.0 + rho):
            break
        U = np.vstack([U, refined])
        h = np.r_[h, body.support_batch(refined)]
    fn = _gauge_ratio_fn(ConvexBody(body.dim, support_fn=lambda V: body.support_batch(V) - V @ center),
                         frame)
    cert, _ = optimize_on_sphere(fn, body.dim, -1, grid_size=1024, top_k=24, steps=100)
    cert = max(0.0, float(cert))
    value = min(rho, cert)
    return BallCertificate(center=center, radius=value, support=None, kind="inball",
                           subspace=L,
                           gap=float(abs(rho - cert) + max(0.0, -worst)),
                           note="oracle: cutting-plane + centered estimate")


# ---------------------------------------------------------------------------
# diameter and width


def diameter(body: ConvexBody):
    """Largest pairwise distance (exact for V-rep; polished breadth max,
    a lower bound, for oracles).  Returns ``(value, witness)``."""
    if body.vertices is not None:
        V = body.vertices
        sq = np.sum(V * V, axis=1)
        d2 = sq[:, None] + sq[None, :] - 2.0 * (V @ V.T)
        k = np.unravel_index(np.argmax(d2), d2.shape)
        return float(np.sqrt(max(d2[k], 0.0))), (V[k[0]], V[k[1]])

    def breadth(U):
        return body.support_batch(U) + body.support_batch(-U)

    val, u = optimize_on_sphere(breadth, body.dim, +1)
    return float(val), u


def width(body: ConvexBody):
    """Minimal breadth.  Exact for V-rep bodies: antipodal edge-normal
    enumeration in 2-D, and in higher dimension the facet offsets of the
    difference body K + (-K), whose smallest value is the largest centered
    ball in it.  Oracle bodies report a polished grid upper bound.
    Returns ``(value, direction)``."""
    if body.vertices is not None:
        if body.affine_dim < body.dim:
            _, W, _ = body.affine_hull()
            u, _, _ = np.linalg.svd(W, full_matrices=True)
            return 0.0, u[:, -1]
        if body.dim == 1:
            return float(body.vertices.max() - body.vertices.min()), np.array([1.0])
        if body.dim == 2:
            return _width_polygon(body)
        return _width_difference_body(body)

    def breadth(U):
        return body.support_batch(U) + body.support_batch(-U)

    val, u = optimize_on_sphere(breadth, body.dim, -1)
    return float(val), u


def _width_polygon(body):
    from scipy.spatial import ConvexHull

    hull = ConvexHull(body.vertices)
    pts = body.vertices[hull.vertices]  # counterclockwise
    edges = np.roll(pts, -1, axis=0) - pts
    normals = np.column_stack([edges[:, 1], -edges[:, 0]])
    normals /= np.linalg.norm(normals, axis=1, keepdims=True)
    breadth = (normals @ body.vertices.T).max(axis=1) + (-normals @ body.vertices.T).max(axis=1)
    k = int(np.argmin(breadth))
    return float(breadth[k]), normals[k]


def _width_difference_body(body):
    # The breadth function of K is the support function of K + (-K), and
    # the minimum of a symmetric polytope's support over the sphere is its
    # smallest facet offset (the largest centered inscribed ball).
    from .bodies import _facets_from_vertices, minkowski_sum, reflect

    diff = minkowski_sum(body, reflect(body))
    A, b = _facets_from_vertices(diff.vertices, body.dim)
    k = int(np.argmin(b))
    return float(b[k]), A[k]
