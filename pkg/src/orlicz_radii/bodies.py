"""Convex bodies and linear geometry primitives.

A body carries at least one of three representations: a vertex list
(V-rep), a halfspace intersection (H-rep, unit outer normals), or a
support-function oracle.  The V-rep is primary; the H-rep is derived on
demand by facet enumeration and is only guaranteed for full-dimensional
bodies in small ambient dimension.  Lower-dimensional compact convex sets
(segments, slabs, projections) are permitted and flagged, since the
equality-case constructions use them freely.

Axis indices in the constructor zoo are 1-based, matching the e_1..e_n
convention used throughout the reports.
"""
from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass

import numpy as np
from scipy.optimize import linprog
from scipy.spatial import ConvexHull, QhullError
from scipy.stats import qmc
from scipy.stats import norm as _gauss

EPS_GEOM = 1e-9
EPS_ORTHO = 1e-10
DEDUP_DECIMALS = 12


class GeometryError(ValueError):
    """Invalid geometric input (dimension mismatch, degeneracy, non-compactness)."""


# ---------------------------------------------------------------------------
# direction grids


def direction_grid(dim: int, size: int | None = None) -> np.ndarray:
    """Deterministic unit-direction set used for support-level checks.

    Defaults: 256 equally spaced angles in 2-D, a 1024-point Fibonacci
    sphere in 3-D, and ``4*dim**2`` Halton-Gaussian points for dim >= 4.
    """
    if dim < 1:
        raise GeometryError("direction grid needs dim >= 1")
    if dim == 1:
        return np.array([[1.0], [-1.0]])
    if dim == 2:
        m = size or 256
        theta = np.arange(m) * (2.0 * np.pi / m)
        return np.column_stack([np.cos(theta), np.sin(theta)])
    if dim == 3:
        m = size or 1024
        return _fibonacci_sphere(m)
    m = size or 4 * dim * dim
    sampler = qmc.Halton(d=dim, scramble=False)
    sampler.fast_forward(1)  # skip the origin sample
    pts = _gauss.ppf(sampler.random(m + 8))
    norms = np.linalg.norm(pts, axis=1)
    keep = norms > 1e-8
    pts = pts[keep][:m]
    return pts / np.linalg.norm(pts, axis=1, keepdims=True)


def _fibonacci_sphere(m: int) -> np.ndarray:
    k = np.arange(m) + 0.5
    z = 1.0 - 2.0 * k / m
    r = np.sqrt(np.maximum(0.0, 1.0 - z * z))
    golden = np.pi * (3.0 - np.sqrt(5.0))
    theta = golden * k
    return np.column_stack([r * np.cos(theta), r * np.sin(theta), z])


def _axis_directions(dim: int) -> np.ndarray:
    eye = np.eye(dim)
    return np.vstack([eye, -eye])


# ---------------------------------------------------------------------------
# subspaces


@dataclass(frozen=True)
class Subspace:
    """An i-dimensional linear subspace of R^n as a column-orthonormal frame."""

    frame: np.ndarray  # (n, i)

    def __post_init__(self):
        frame = np.atleast_2d(np.asarray(self.frame, dtype=float))
        if frame.ndim != 2 or frame.shape[0] < frame.shape[1]:
            raise GeometryError(f"frame must be n x i with i <= n, got {frame.shape}")
        gram = frame.T @ frame
        if np.max(np.abs(gram - np.eye(frame.shape[1]))) > EPS_ORTHO:
            raise GeometryError("frame columns are not orthonormal")
        frame = frame.copy()
        frame.setflags(write=False)
        object.__setattr__(self, "frame", frame)

    @property
    def n(self) -> int:
        return self.frame.shape[0]

    @property
    def i(self) -> int:
        return self.frame.shape[1]

    def complement(self) -> "Subspace":
        """Orthogonal complement, from the SVD null space."""
        u, _, _ = np.linalg.svd(self.frame, full_matrices=True)
        return Subspace(u[:, self.i:])

    def project_points(self, points: np.ndarray) -> np.ndarray:
        """Coordinates of the orthogonal projections, in the frame basis."""
        return np.asarray(points, dtype=float) @ self.frame

    def lift(self, coords: np.ndarray) -> np.ndarray:
        """Map frame coordinates back to ambient points."""
        return np.asarray(coords, dtype=float) @ self.frame.T

    @classmethod
    def from_axes(cls, n: int, axes) -> "Subspace":
        axes = _check_axes(n, axes)
        frame = np.zeros((n, len(axes)))
        for col, ax in enumerate(axes):
            frame[ax - 1, col] = 1.0
        return cls(frame)

    @classmethod
    def span(cls, vectors) -> "Subspace":
        """Orthonormalize the given spanning vectors (rows or a matrix)."""
        mat = np.atleast_2d(np.asarray(vectors, dtype=float)).T  # columns span
        q, r = np.linalg.qr(mat)
        keep = np.abs(np.diag(r)) > 1e-12
        if not keep.any():
            raise GeometryError("spanning set is numerically zero")
        q = q[:, keep] * np.sign(np.diag(r)[keep])
        return cls(q)


def _check_axes(n: int, axes) -> tuple[int, ...]:
    axes = tuple(int(a) for a in axes)
    if len(set(axes)) != len(axes):
        raise GeometryError(f"axis indices must be distinct, got {axes}")
    for a in axes:
        if not 1 <= a <= n:
            raise GeometryError(f"axis index {a} outside 1..{n}")
    return axes


# ---------------------------------------------------------------------------
# the body class


class ConvexBody:
    """A compact convex set in R^n.

    Parameters
    ----------
    dim : ambient dimension.
    vertices : optional (m, dim) array, the V-representation.
    halfspaces : optional (A, b) pair with unit rows ``a_j`` and offsets
        ``b_j`` describing ``{x : <a_j, x> <= b_j}``.
    support_fn : optional callable mapping an (m, dim) array of *unit*
        directions to the (m,) array of support values.
    symmetric : origin symmetry flag; inferred from the V-rep when omitted.
    meta : free-form provenance record (constructor name and parameters).
    """

    def __init__(self, dim, vertices=None, halfspaces=None, support_fn=None,
                 name="", meta=None, symmetric=None, check=True):
        self.dim = int(dim)
        self.name = name
        self.meta = dict(meta or {})
        self.vertices = None
        self._halfspaces = None
        self._support_fn = support_fn
        self._symmetric = symmetric
        self._lock = threading.Lock()
        self._affine = None
        self._contains_origin = None

        if vertices is not None:
            vertices = np.atleast_2d(np.asarray(vertices, dtype=float))
            if vertices.shape[1] != self.dim:
                raise GeometryError(f"vertices have dim {vertices.shape[1]}, body dim {self.dim}")
            if vertices.shape[0] == 0:
                raise GeometryError("empty vertex set")
            self.vertices = vertices
        if halfspaces is not None:
            A, b = halfspaces
            A = np.atleast_2d(np.asarray(A, dtype=float))
            b = np.asarray(b, dtype=float).ravel()
            if A.shape[1] != self.dim or A.shape[0] != b.shape[0]:
                raise GeometryError("halfspace arrays have inconsistent shapes")
            norms = np.linalg.norm(A, axis=1)
            if np.any(norms < 1e-14):
                raise GeometryError("zero halfspace normal")
            self._halfspaces = (A / norms[:, None], b / norms)
        if self.vertices is None and self._halfspaces is None and support_fn is None:
            raise GeometryError("at least one representation is required")
        if check and self.vertices is not None and self._halfspaces is not None:
            self._cross_check()

    # -- representations ----------------------------------------------------

    def _cross_check(self):
        A, b = self._halfspaces
        worst = float((self.vertices @ A.T - b).max())
        if worst > EPS_GEOM:
            raise GeometryError(f"V-rep and H-rep disagree: vertex violates facet by {worst}")

    @property
    def has_vrep(self) -> bool:
        return self.vertices is not None

    def halfspaces(self):
        """The H-representation, derived from the V-rep on demand.

        Facet enumeration requires a full-dimensional vertex set; flat
        bodies raise ``GeometryError`` (callers fall back to the affine-hull
        reduction or to support oracles).
        """
        with self._lock:
            if self._halfspaces is not None:
                return self._halfspaces
            if self.vertices is None:
                raise GeometryError("no H-rep available and no vertices to derive it from")
            self._halfspaces = _facets_from_vertices(self.vertices, self.dim)
            return self._halfspaces

    def support_batch(self, dirs: np.ndarray) -> np.ndarray:
        """Support values for an array of directions (rows need not be unit
        for V-rep bodies; oracle bodies scale by homogeneity)."""
        dirs = np.atleast_2d(np.asarray(dirs, dtype=float))
        if dirs.shape[1] != self.dim:
            raise GeometryError(f"direction dim {dirs.shape[1]} != body dim {self.dim}")
        if self.vertices is not None:
            return (dirs @ self.vertices.T).max(axis=1)
        if self._support_fn is not None:
            norms = np.linalg.norm(dirs, axis=1)
            if np.any(norms < 1e-14):
                raise GeometryError("zero direction")
            return self._support_fn(dirs / norms[:, None]) * norms
        A, b = self._halfspaces
        return np.array([_support_lp(A, b, u) for u in dirs])

    def support(self, u) -> float:
        u = np.asarray(u, dtype=float).ravel()
        if np.linalg.norm(u) < 1e-14:
            raise GeometryError("support direction must be nonzero")
        return float(self.support_batch(u[None, :])[0])

    def support_argmax(self, u) -> np.ndarray:
        """A point of the body attaining the support value in direction u."""
        u = np.asarray(u, dtype=float).ravel()
        if self.vertices is not None:
            return self.vertices[int(np.argmax(self.vertices @ u))]
        # Gradient of the 1-homogeneous support extension, by central
        # differences; exact a.e. for convex bodies.
        h = 1e-6 * max(1.0, np.linalg.norm(u))
        grad = np.empty(self.dim)
        for k in range(self.dim):
            e = np.zeros(self.dim)
            e[k] = h
            grad[k] = (self.support(u + e) - self.support(u - e)) / (2.0 * h)
        return grad

    # -- derived structure --------------------------------------------------

    def affine_hull(self):
        """(centroid, orthonormal basis W of the direction space, affine dim)."""
        with self._lock:
            if self._affine is not None:
                return self._affine
            if self.vertices is None:
                raise GeometryError("affine hull needs a V-rep")
            center = self.vertices.mean(axis=0)
            shifted = self.vertices - center
            scale = max(1.0, float(np.abs(shifted).max()))
            _, s, vt = np.linalg.svd(shifted, full_matrices=False)
            rank = int((s > 1e-9 * scale).sum())
            self._affine = (center, vt[:rank].T.copy(), rank)
            return self._affine

    @property
    def affine_dim(self) -> int:
        if self.vertices is not None:
            return self.affine_hull()[2]
        return self.dim  # oracles are assumed full-dimensional unless flagged

    @property
    def is_degenerate(self) -> bool:
        return self.has_vrep and self.affine_dim < self.dim

    @property
    def is_symmetric(self) -> bool:
        """Origin symmetry (-K == K), from the flag or the vertex set."""
        if self._symmetric is None:
            if self.vertices is None:
                self._symmetric = False
            else:
                self._symmetric = _same_point_set(self.vertices, -self.vertices)
        return self._symmetric

    @property
    def contains_origin(self) -> bool:
        """Membership in K^n_o, checked as h >= 0 on the direction grid."""
        if self._contains_origin is None:
            grid = direction_grid(self.dim)
            self._contains_origin = bool(self.support_batch(grid).min() >= -EPS_GEOM)
        return self._contains_origin

    def translate(self, offset) -> "ConvexBody":
        offset = np.asarray(offset, dtype=float).ravel()
        if self.vertices is None:
            raise GeometryError("translate needs a V-rep")
        return ConvexBody(self.dim, vertices=self.vertices + offset, name=self.name)

    def scale(self, factor: float) -> "ConvexBody":
        """Dilate by ``factor > 0`` about the origin (any representation)."""
        if factor <= 0:
            raise GeometryError("scale factor must be positive")
        if self.vertices is not None:
            return ConvexBody(self.dim, vertices=self.vertices * factor,
                              symmetric=self._symmetric, name=self.name)
        if self._support_fn is not None:
            fn = self._support_fn
            return ConvexBody(self.dim, support_fn=lambda U: fn(U) * factor,
                              symmetric=self._symmetric, name=self.name)
        A, b = self._halfspaces
        return ConvexBody(self.dim, halfspaces=(A, b * factor), name=self.name)

    def __repr__(self):
        reps = []
        if self.vertices is not None:
            reps.append(f"vrep[{len(self.vertices)}]")
        if self._halfspaces is not None:
            reps.append(f"hrep[{len(self._halfspaces[1])}]")
        if self._support_fn is not None:
            reps.append("oracle")
        label = self.name or "body"
        return f"ConvexBody({label}, dim={self.dim}, {'+'.join(reps)})"


def _same_point_set(a: np.ndarray, b: np.ndarray) -> bool:
    ra = np.unique(np.round(a, 9), axis=0)
    rb = np.unique(np.round(b, 9), axis=0)
    return ra.shape == rb.shape and bool(np.allclose(ra, rb, atol=1e-8))


def _support_lp(A, b, u):
    res = linprog(-np.asarray(u, dtype=float), A_ub=A, b_ub=b,
                  bounds=[(None, None)] * A.shape[1], method="highs")
    if res.status == 3:
        raise GeometryError("body not compact: support LP unbounded")
    if not res.success:
        raise GeometryError(f"support LP failed: {res.message}")
    return -res.fun


def _facets_from_vertices(vertices: np.ndarray, dim: int):
    """Unit-normal H-rep of a full-dimensional polytope from its vertices."""
    if dim == 1:
        lo, hi = float(vertices.min()), float(vertices.max())
        if hi - lo < 1e-14:
            raise GeometryError("H-rep of a point in 1-D is degenerate")
        return np.array([[1.0], [-1.0]]), np.array([hi, -lo])
    try:
        hull = ConvexHull(vertices)
    except QhullError as exc:
        raise GeometryError(
            "facet enumeration failed (lower-dimensional body?)") from exc
    A = hull.equations[:, :-1]
    b = -hull.equations[:, -1]
    norms = np.linalg.norm(A, axis=1)
    A, b = A / norms[:, None], b / norms
    key = np.unique(np.round(np.column_stack([A, b]), DEDUP_DECIMALS), axis=0)
    return key[:, :-1], key[:, -1]


def hull_reduce(points: np.ndarray, dim: int | None = None) -> np.ndarray:
    """Extreme points of the given point set, robust to flat configurations."""
    points = np.atleast_2d(np.asarray(points, dtype=float))
    points = np.unique(np.round(points, DEDUP_DECIMALS), axis=0)
    if len(points) <= 2:
        return points
    dim = dim or points.shape[1]
    center = points.mean(axis=0)
    shifted = points - center
    scale = max(1.0, float(np.abs(shifted).max()))
    _, s, vt = np.linalg.svd(shifted, full_matrices=False)
    rank = int((s > 1e-9 * scale).sum())
    if rank == 0:
        return points[:1]
    if rank == 1:
        axis = vt[0]
        coords = shifted @ axis
        return points[[int(np.argmin(coords)), int(np.argmax(coords))]]
    coords = shifted @ vt[:rank].T
    try:
        hull = ConvexHull(coords)
    except QhullError:
        return points
    return points[np.sort(hull.vertices)]


# ---------------------------------------------------------------------------
# constructor zoo


def make_segment(a, b) -> ConvexBody:
    a = np.asarray(a, dtype=float).ravel()
    b = np.asarray(b, dtype=float).ravel()
    if a.shape != b.shape:
        raise GeometryError("segment endpoints have different dimensions")
    if np.linalg.norm(b - a) < 1e-14:
        raise GeometryError("zero-length segment rejected")
    body = ConvexBody(a.size, vertices=np.vstack([a, b]), name="segment")
    body.meta = {"ctor": "segment", "a": a.tolist(), "b": b.tolist()}
    return body


def make_cube(axes, half_width: float, center=None, dim: int | None = None) -> ConvexBody:
    """Axis-aligned cube ``center + sum_k [-w e_k, w e_k]`` over the given
    1-based axes, embedded in R^dim."""
    axes = tuple(int(a) for a in axes)
    if dim is None:
        dim = len(center) if center is not None else max(axes)
    axes = _check_axes(dim, axes)
    if half_width <= 0:
        raise GeometryError("cube half_width must be positive")
    center = np.zeros(dim) if center is None else np.asarray(center, dtype=float).ravel()
    if center.size != dim:
        raise GeometryError("cube center has wrong dimension")
    corners = []
    for signs in itertools.product((-1.0, 1.0), repeat=len(axes)):
        v = center.copy()
        for sgn, ax in zip(signs, axes):
            v[ax - 1] += sgn * half_width
        corners.append(v)
    body = ConvexBody(dim, vertices=np.array(corners),
                      symmetric=bool(np.all(center == 0.0)), name="cube")
    body.meta = {"ctor": "cube", "axes": list(axes), "half_width": float(half_width),
                 "center": center.tolist()}
    return body


def make_ball_in_subspace(L: Subspace, radius: float, facet_count: int) -> ConvexBody:
    """Polytopal inner approximation of ``radius * (B_n  intersect  L)``.

    Vertices come from a deterministic direction set on the i-sphere; the
    meta field ``mesh_gap`` records the exact inner-approximation deficit
    ``radius - min_u h(u)`` so radii computed from the polytope can be
    compared against the ideal ball.
    """
    if radius <= 0:
        raise GeometryError("ball radius must be positive")
    i = L.i
    if facet_count < 2 * i:
        raise GeometryError(f"facet_count must be at least {2 * i}")
    if i == 1:
        dirs = np.array([[1.0], [-1.0]])
    elif i == 2:
        theta = np.arange(facet_count) * (2.0 * np.pi / facet_count)
        dirs = np.column_stack([np.cos(theta), np.sin(theta)])
    else:
        dirs = direction_grid(i, facet_count)
    verts = radius * L.lift(dirs)
    if i == 1:
        gap = 0.0
    else:
        A, b = _facets_from_vertices(radius * dirs, i)
        gap = float(radius - b.min())
    body = ConvexBody(L.n, vertices=verts, symmetric=True, name="ball")
    body.meta = {"ctor": "ball", "radius": float(radius), "facet_count": int(facet_count),
                 "mesh_gap": gap, "frame": np.asarray(L.frame).tolist()}
    return body


def make_simplex_Kn(n: int) -> ConvexBody:
    """The regular n-simplex embedded in the hyperplane ``sum x_j = 0`` of
    R^{n+1}: vertex k has coordinate n/(n+1) at position k and -1/(n+1)
    elsewhere."""
    if n < 1:
        raise GeometryError("simplex needs n >= 1")
    verts = np.full((n + 1, n + 1), -1.0 / (n + 1))
    np.fill_diagonal(verts, n / (n + 1))
    if np.abs(verts.sum(axis=1)).max() > EPS_GEOM:
        raise GeometryError("simplex vertices left the hyperplane sum x = 0")
    body = ConvexBody(n + 1, vertices=verts, symmetric=False, name=f"simplex_K{n}")
    body.meta = {"ctor": "simplex", "n": int(n)}
    return body


def make_slab_body(segment_axis: int, cube_axes, dim: int | None = None) -> ConvexBody:
    """The difference-body equality case ``[0, e_s] + sum_k [-e_k, e_k]``
    over distinct 1-based axes."""
    cube_axes = tuple(int(a) for a in cube_axes)
    if dim is None:
        dim = max((segment_axis,) + cube_axes) if cube_axes else int(segment_axis)
    _check_axes(dim, (int(segment_axis),) + cube_axes)
    seg = np.zeros((2, dim))
    seg[1, int(segment_axis) - 1] = 1.0
    verts = seg
    for ax in cube_axes:
        offs = np.zeros((2, dim))
        offs[0, ax - 1] = -1.0
        offs[1, ax - 1] = 1.0
        verts = (verts[:, None, :] + offs[None, :, :]).reshape(-1, dim)
    body = ConvexBody(dim, vertices=verts, symmetric=False, name="slab")
    body.meta = {"ctor": "slab", "segment_axis": int(segment_axis),
                 "cube_axes": list(cube_axes), "dim": dim}
    return body


def make_random_polytope(n: int, n_points: int, seed: int) -> ConvexBody:
    """Hull of seeded Gaussian points, recentered so the origin is interior."""
    rng = np.random.default_rng(seed)
    pts = rng.standard_normal((n_points, n))
    pts -= pts.mean(axis=0)
    verts = hull_reduce(pts, n)
    return ConvexBody(n, vertices=verts, symmetric=False, name=f"random[{seed}]")


# ---------------------------------------------------------------------------
# operations


def support(body: ConvexBody, u) -> float:
    """Support value h_K(u); u may be any nonzero vector."""
    return body.support(u)


def reflect(body: ConvexBody) -> ConvexBody:
    """The reflection -K through the origin; h_{-K}(u) = h_K(-u)."""
    if body.vertices is not None:
        out = ConvexBody(body.dim, vertices=-body.vertices,
                         symmetric=body._symmetric, name=f"-{body.name}" if body.name else "")
        return out
    fn = body._support_fn
    if fn is not None:
        return ConvexBody(body.dim, support_fn=lambda U: fn(-U),
                          symmetric=body._symmetric)
    A, b = body.halfspaces()
    return ConvexBody(body.dim, halfspaces=(-A, b))


def project(body: ConvexBody, L: Subspace) -> ConvexBody:
    """Orthogonal projection K|L, returned in the frame coordinates of L.

    V-rep bodies project their vertices; other bodies become support
    oracles via h_{K|L}(x) = h_K(x) for x in L.
    """
    if L.n != body.dim:
        raise GeometryError(f"subspace ambient dim {L.n} != body dim {body.dim}")
    if body.vertices is not None:
        coords = hull_reduce(L.project_points(body.vertices), L.i)
        return ConvexBody(L.i, vertices=coords, symmetric=body._symmetric,
                          name=f"{body.name}|L" if body.name else "")
    frame = np.asarray(L.frame)
    return ConvexBody(L.i, support_fn=lambda U: body.support_batch(U @ frame.T),
                      symmetric=body._symmetric)


def section(body: ConvexBody, L: Subspace, offset=None) -> ConvexBody | None:
    """The slice ``K intersect (offset + L)`` in the coordinates of L, or
    ``None`` when the intersection is empty.

    Needs an H-rep, so ambient dimension is effectively capped by facet
    enumeration; higher-dimensional inradius questions go through the
    fixed-subspace LP instead.
    """
    if L.n != body.dim:
        raise GeometryError("subspace ambient dimension mismatch")
    offset = np.zeros(body.dim) if offset is None else np.asarray(offset, dtype=float).ravel()
    A, b = body.halfspaces()
    frame = np.asarray(L.frame)
    A_sec = A @ frame
    b_sec = b - A @ offset
    # Empty test: is there any feasible point of the sliced system?
    res = linprog(np.zeros(L.i), A_ub=A_sec, b_ub=b_sec + EPS_GEOM,
                  bounds=[(None, None)] * L.i, method="highs")
    if res.status == 2:
        return None
    if not res.success:
        raise GeometryError(f"section feasibility LP failed: {res.message}")
    keep = np.linalg.norm(A_sec, axis=1) > 1e-12
    inactive_ok = b_sec[~keep] >= -EPS_GEOM
    if not bool(np.all(inactive_ok)):
        return None
    return ConvexBody(L.i, halfspaces=(A_sec[keep], b_sec[keep]))


def convex_hull_union(A: ConvexBody, B: ConvexBody) -> ConvexBody:
    """conv(A u B); h = max(h_A, h_B)."""
    if A.dim != B.dim:
        raise GeometryError("convex_hull_union needs equal ambient dimensions")
    if A.vertices is None or B.vertices is None:
        fa, fb = A.support_batch, B.support_batch
        return ConvexBody(A.dim, support_fn=lambda U: np.maximum(fa(U), fb(U)))
    verts = hull_reduce(np.vstack([A.vertices, B.vertices]), A.dim)
    return ConvexBody(A.dim, vertices=verts)


def minkowski_sum(A: ConvexBody, B: ConvexBody) -> ConvexBody:
    """Classical Minkowski sum from pairwise vertex sums; h_{A+B} = h_A + h_B."""
    if A.dim != B.dim:
        raise GeometryError("minkowski_sum needs equal ambient dimensions")
    if A.vertices is None or B.vertices is None:
        fa, fb = A.support_batch, B.support_batch
        return ConvexBody(A.dim, support_fn=lambda U: fa(U) + fb(U),
                          symmetric=(A._symmetric and B._symmetric))
    pair = A.vertices[:, None, :] + B.vertices[None, :, :]
    verts = hull_reduce(pair.reshape(-1, A.dim), A.dim)
    sym = A.is_symmetric and B.is_symmetric
    return ConvexBody(A.dim, vertices=verts, symmetric=sym)


@dataclass(frozen=True)
class ContainsResult:
    ok: bool
    worst_slack: float          # min over checks of (allowance - requirement)
    witness: np.ndarray         # most violated direction (oracle path) or vertex
    method: str                 # "vertex" or "support-grid"

    def __bool__(self):
        return self.ok


def contains(A: ConvexBody, B: ConvexBody, tol: float = EPS_GEOM,
             grid_size: int | None = None) -> ContainsResult:
    """Does A contain B (within tol)?

    When B has vertices and A admits an H-rep, every vertex is checked
    against A's facets.  Otherwise the support functions are compared on
    the direction grid, which is a necessary (grid-limited) certificate.
    """
    if A.dim != B.dim:
        raise GeometryError("contains needs equal ambient dimensions")
    if B.vertices is not None:
        try:
            Amat, bvec = A.halfspaces()
        except GeometryError:
            Amat = None
        if Amat is not None:
            slack = bvec[None, :] - B.vertices @ Amat.T
            j = np.unravel_index(np.argmin(slack), slack.shape)
            worst = float(slack[j])
            return ContainsResult(worst >= -tol, worst, B.vertices[j[0]], "vertex")
    grid = direction_grid(A.dim, grid_size)
    grid = np.vstack([grid, _axis_directions(A.dim)])
    gap = A.support_batch(grid) - B.support_batch(grid)
    k = int(np.argmin(gap))
    return ContainsResult(float(gap[k]) >= -tol, float(gap[k]), grid[k], "support-grid")
