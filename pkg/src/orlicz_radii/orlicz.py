"""The Orlicz core: per-direction sum solver, norm, and ball.

The sum of two origin-containing bodies is the body whose support value
``lam`` in direction ``u`` solves

    phi(h_K(u)/lam) + phi(h_L(u)/lam) = 1,

the left side being strictly decreasing in ``lam``.  The root is bracketed
by ``[max(h_K, h_L), h_K + h_L]`` (the hull and Minkowski bounds), so plain
bisection is exact to machine precision.  Sums are kept as support oracles:
the sum of polytopes is generally not a polytope.
"""
from __future__ import annotations

import numpy as np

from .bodies import ConvexBody, GeometryError, direction_grid, hull_reduce
from .phi import OrliczFunction

EPS_ROOT = 1e-12
BISECT_ITERS = 80  # relative bracket shrink 2^-80: beyond double precision


def orlicz_support(hK, hL, phi: OrliczFunction, iters: int = BISECT_ITERS):
    """Solve the defining scalar equation for scalar or array inputs.

    Degenerate cases follow the continuous extension: both supports zero
    gives 0, and a single zero gives the other value (phi(1) = 1 forces
    lam = max).
    """
    hK = np.asarray(hK, dtype=float)
    hL = np.asarray(hL, dtype=float)
    scalar = hK.ndim == 0 and hL.ndim == 0
    hK, hL = np.atleast_1d(hK), np.atleast_1d(hL)
    hK, hL = np.broadcast_arrays(hK, hL)
    if np.any(hK < 0.0) or np.any(hL < 0.0):
        raise ValueError("orlicz_support needs non-negative support values")
    lo = np.maximum(hK, hL)
    hi = hK + hL
    active = (hi - lo) > 0.0
    out = lo.astype(float).copy()  # one-sided zeros and 0+0 are already exact
    if active.any():
        a, b = hK[active], hL[active]
        lo_a, hi_a = lo[active].copy(), hi[active].copy()
        for _ in range(iters):
            mid = 0.5 * (lo_a + hi_a)
            f = phi(a / mid) + phi(b / mid)
            bigger = f > 1.0
            lo_a = np.where(bigger, mid, lo_a)
            hi_a = np.where(bigger, hi_a, mid)
        out[active] = 0.5 * (lo_a + hi_a)
    return float(out[0]) if scalar else out


class OrliczSumBody(ConvexBody):
    """The sum body ``K +_phi L`` as a support oracle.

    Origin symmetry is inherited from the summands (the defining equation
    is unchanged under u -> -u when both support functions are even).
    """

    def __init__(self, left: ConvexBody, right: ConvexBody, phi: OrliczFunction):
        if left.dim != right.dim:
            raise GeometryError(
                f"dimension mismatch: {left.dim} vs {right.dim}")
        for tag, body in (("left", left), ("right", right)):
            if not body.contains_origin:
                raise GeometryError(
                    f"{tag} summand is not flagged origin-containing "
                    "(support went negative on the test grid); the Orlicz sum "
                    "is defined on K^n_o only")
        self.left = left
        self.right = right
        self.phi = phi

        def fn(U):
            return orlicz_support(np.maximum(left.support_batch(U), 0.0),
                                  np.maximum(right.support_batch(U), 0.0), phi)

        # The sum is origin-symmetric when both summands are, and also when
        # the summands are reflections of each other (the difference body):
        # negating u swaps the two support values in the defining equation.
        symmetric = left.is_symmetric and right.is_symmetric
        if not symmetric and left.vertices is not None and right.vertices is not None:
            from .bodies import _same_point_set
            symmetric = _same_point_set(left.vertices, -right.vertices)
        super().__init__(left.dim, support_fn=fn, symmetric=symmetric,
                         name="orlicz_sum")
        self.meta = {"ctor": "orlicz_sum", "phi": phi.descriptor}

    def outer_approximation(self, grid_size: int | None = None) -> ConvexBody:
        """Halfspace intersection over the direction grid (contains the sum)."""
        grid = direction_grid(self.dim, grid_size)
        return ConvexBody(self.dim, halfspaces=(grid, self.support_batch(grid)))

    def inner_approximation(self, grid_size: int | None = None) -> ConvexBody:
        """Hull of touching-point estimates.

        The estimate in direction u is the phi'-weighted combination of the
        summands' support points, rescaled onto the supporting hyperplane; a
        heuristic meant for visualization, always validated against the
        outer approximation by the caller.
        """
        grid = direction_grid(self.dim, grid_size)
        pts = np.array([self._touching_point(u) for u in grid])
        return ConvexBody(self.dim, vertices=hull_reduce(pts, self.dim))

    def _touching_point(self, u: np.ndarray) -> np.ndarray:
        hK = max(self.left.support(u), 0.0)
        hL = max(self.right.support(u), 0.0)
        lam = orlicz_support(hK, hL, self.phi)
        if lam <= 0.0:
            return np.zeros(self.dim)
        xK = self.left.support_argmax(u) if hK > 0 else np.zeros(self.dim)
        xL = self.right.support_argmax(u) if hL > 0 else np.zeros(self.dim)
        dphi = 1e-7
        wK = float(self.phi(min(hK / lam, 1.0 - dphi) + dphi) - self.phi(hK / lam)) / dphi
        wL = float(self.phi(min(hL / lam, 1.0 - dphi) + dphi) - self.phi(hL / lam)) / dphi
        p = wK * xK + wL * xL
        proj = float(p @ u)
        if proj <= 1e-14:
            p = xK if hK >= hL else xL
            proj = float(p @ u)
            if proj <= 1e-14:
                return np.zeros(self.dim)
        return p * (lam / proj)


def orlicz_sum(K: ConvexBody, L: ConvexBody, phi: OrliczFunction) -> OrliczSumBody:
    """The Orlicz Minkowski sum of two origin-containing bodies."""
    return OrliczSumBody(K, L, phi)


def orlicz_norm(x, phi: OrliczFunction, iters: int = BISECT_ITERS):
    """Luxemburg-style gauge: the lam with sum_i phi(|x_i|/lam) = 1.

    Accepts a single point (1-D array) or a stack of points (2-D array);
    positively homogeneous and zero only at the origin.
    """
    x = np.asarray(x, dtype=float)
    single = x.ndim == 1
    pts = np.atleast_2d(np.abs(x))
    lo = pts.max(axis=1)
    hi = pts.sum(axis=1)
    out = np.zeros(len(pts))
    active = hi > 0.0
    n_active = (pts > 0.0).sum(axis=1)
    one = active & (n_active <= 1)
    out[one] = lo[one]
    work = active & (n_active > 1)
    if work.any():
        p = pts[work]
        lo_a, hi_a = lo[work].copy(), hi[work].copy()
        for _ in range(iters):
            mid = 0.5 * (lo_a + hi_a)
            f = phi(p / mid[:, None]).sum(axis=1)
            bigger = f > 1.0
            lo_a = np.where(bigger, mid, lo_a)
            hi_a = np.where(bigger, hi_a, mid)
        out[work] = 0.5 * (lo_a + hi_a)
    return float(out[0]) if single else out


def boundary_polyline_2d(body: ConvexBody, resolution: int = 720) -> np.ndarray:
    """Boundary samples of a planar body from its support function:
    x(t) = h(t) u(t) + h'(t) u'(t), with h' by centered differences.

    Where the boundary has a corner the same touching point repeats, which
    is the correct polyline behaviour.  Not closed; writers repeat row 0.
    """
    if body.dim != 2:
        raise GeometryError("boundary_polyline_2d needs a planar body")
    theta = np.arange(resolution) * (2.0 * np.pi / resolution)
    U = np.column_stack([np.cos(theta), np.sin(theta)])
    h = body.support_batch(U)
    dh = (np.roll(h, -1) - np.roll(h, 1)) / (2.0 * (2.0 * np.pi / resolution))
    tang = np.column_stack([-np.sin(theta), np.cos(theta)])
    return h[:, None] * U + dh[:, None] * tang


def boundary_cloud(body: ConvexBody, resolution: int | None = None) -> np.ndarray:
    """Boundary-point estimates in any dimension: the gradient of the
    1-homogeneous support extension, by centered differences per direction."""
    grid = direction_grid(body.dim, resolution)
    step = 1e-6
    pts = np.empty_like(grid)
    for k in range(body.dim):
        e = np.zeros(body.dim)
        e[k] = step
        pts[:, k] = (body.support_batch(grid + e) - body.support_batch(grid - e)) / (2 * step)
    return pts


def orlicz_ball(phi: OrliczFunction, n: int, resolution: int | None = None) -> ConvexBody:
    """Polytopal inner approximation of ``{x : ||x||_phi <= 1}`` with
    boundary vertices ``u / ||u||_phi`` over the deterministic direction set."""
    if n < 1:
        raise GeometryError("orlicz_ball needs n >= 1")
    dirs = direction_grid(n, resolution)
    norms = orlicz_norm(dirs, phi)
    verts = dirs / norms[:, None]
    return ConvexBody(n, vertices=hull_reduce(verts, n), symmetric=True,
                      name=f"orlicz_ball[{phi.descriptor}]")
