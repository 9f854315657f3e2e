"""Optimization over i-dimensional subspaces.

``R_i(K)`` minimizes the circumradius of the projection over the
Grassmannian; ``r_i(K)`` maximizes the fixed-subspace inscribed-ball LP.
Both are nonconvex, so the searches report certified-direction bounds
(upper for the min, lower for the max) from a multistart: Haar-uniform
frames, all coordinate i-subsets (small n), caller-forced frames (known
optima of the equality-case constructions), and exact anchors where the
endpoint identities give the answer outright (i = n, and i = 1 for vertex
bodies via the exact width/diameter directions).  Local refinement mixes
frame columns with the orthogonal complement through Givens rotations on a
shrinking angle ladder, accepting strict improvements only.

Profiles over several i values seed each search with the sub-frames of the
best frame one level up; since projecting onto a sub-frame can only shrink
a circumradius (and enlarging an axis subspace can only shrink the
inscribed ball), the reported sequences are monotone by construction.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import linprog

from .bodies import ConvexBody, GeometryError, Subspace, direction_grid, project
from .radii import circumradius, diameter, inradius_fixed_subspace, min_enclosing_ball, width

_LP_OPTS = {"primal_feasibility_tolerance": 1e-10,
            "dual_feasibility_tolerance": 1e-10}

VALUE_TIE_TOL = 1e-12
COORD_START_MAX_DIM = 8


@dataclass(frozen=True)
class SearchBudget:
    """Knobs of the subspace search (defaults match the shipped CLI help)."""
    starts: int = 64        # Haar-uniform multistart frames
    max_iters: int = 200    # refinement sweep cap
    angle_grid: int = 16    # rotation angles tried per plane per sweep
    step_tol: float = 1e-7  # terminal rotation angle
    seed: int = 0


DEFAULT_BUDGET = SearchBudget()


@dataclass
class RadiiReport:
    """Outcome of one successive-radius computation."""
    i: int
    value: float
    bound_kind: str                      # "upper" | "lower" | "two_sided"
    achieving_subspace: Subspace
    samples_used: int
    refinement_trace: list = field(default_factory=list)  # (sweep, value)
    gap: float = 0.0                     # oracle evaluation gap at the optimum
    note: str = ""


def sample_subspace(n: int, i: int, seed: int) -> Subspace:
    """Haar-uniform i-frame in R^n: orthonormalized Gaussian matrix,
    deterministic per seed (QR signs fixed)."""
    if not 1 <= i <= n:
        raise GeometryError(f"need 1 <= i <= n, got i={i}, n={n}")
    rng = np.random.default_rng(seed)
    return Subspace(_orthonormalize(rng.standard_normal((n, i))))


def _orthonormalize(mat):
    q, r = np.linalg.qr(mat)
    signs = np.sign(np.diag(r))
    signs[signs == 0] = 1.0
    return q * signs


def _complement_basis(F):
    u, _, _ = np.linalg.svd(F, full_matrices=True)
    return u[:, F.shape[1]:]


def _haar_frames(n, i, count, seed, tag):
    rng = np.random.default_rng((seed, n, i, tag))
    return [_orthonormalize(rng.standard_normal((n, i))) for _ in range(count)]


def _coordinate_frames(n, i):
    if n > COORD_START_MAX_DIM:
        return []
    frames = []
    for axes in itertools.combinations(range(n), i):
        F = np.zeros((n, i))
        for col, ax in enumerate(axes):
            F[ax, col] = 1.0
        frames.append(F)
    return frames


def _subframes(F, i):
    cols = F.shape[1]
    if i >= cols:
        return [F] if i == cols else []
    return [F[:, list(sel)] for sel in itertools.combinations(range(cols), i)]


def _as_frame(obj):
    if isinstance(obj, Subspace):
        return np.asarray(obj.frame)
    return np.asarray(obj, dtype=float)


def _frame_key(F):
    return np.round(F, 6).tobytes()


class _Evaluator:
    """Per-frame objective with three fidelities.

    ``evaluate``   exact (or sweep-grade) value used to accept moves;
    ``finalize``   polished value + gap, used to pick between finished
                   candidates and as the reported number;
    ``screen``     optional cheap lower-fidelity score used to pick which
                   single rotation candidate per plane gets the exact
                   evaluation (cuts the LP count an order of magnitude).
    """

    def evaluate(self, F):
        raise NotImplementedError

    def finalize(self, F):
        return self.evaluate(F), 0.0

    def screen_context(self, F):
        return None

    def screen(self, cands, context):
        return None


def _rotated(F, k, fk, g, a):
    cand = F.copy()
    cand[:, k] = np.cos(a) * fk + np.sin(a) * g
    return cand


def _givens_refine(F, value, ev: _Evaluator, sense, budget):
    """Column-wise descent with Givens rotations into the orthogonal
    complement.

    Per sweep and frame column, candidate rotations toward every
    complement direction over a geometric angle ladder are pooled with a
    combined direction built from screened rotation derivatives (plain
    coordinate planes zigzag badly on the ratio-type objectives).  The
    cheap screen ranks the pool and only the best few candidates get exact
    evaluations; only strict improvements are accepted, so the value trace
    is monotone.
    """
    n, i = F.shape
    if i == n:
        return F, value, [(0, value)]
    F = _orthonormalize(F.copy())
    G = _complement_basis(F)
    n_mag = max(2, budget.angle_grid // 2)
    taps = 0.5 ** np.arange(n_mag)
    taps = np.concatenate([taps, -taps])
    delta = np.pi / 4.0
    trace = [(0, value)]
    context = ev.screen_context(F)
    has_screen = context is not None
    grad_move = getattr(ev, "frame_gradient", None)
    for sweep in range(1, budget.max_iters + 1):
        improved = False
        if grad_move is not None:
            T = grad_move(F)
            if T is not None and np.linalg.norm(T) > 1e-14:
                T = T / np.linalg.norm(T)
                cands = [_orthonormalize(F + sense * s * T) for s in delta * taps[:n_mag]]
                best_cand, best_v = None, value
                for cand in cands:
                    v = ev.evaluate(cand)
                    if sense * (v - best_v) > VALUE_TIE_TOL * (1.0 + abs(best_v)):
                        best_cand, best_v = cand, v
                if best_cand is not None:
                    F, value, improved = best_cand, best_v, True
                    G = _complement_basis(F)
                    trace.append((sweep, value))
                    context = ev.screen_context(F)
        for k in range(i):
            fk = F[:, k].copy()
            cands = [_rotated(F, k, fk, G[:, m], a)
                     for m in range(n - i) for a in delta * taps]
            # derivative of the objective per complement direction, from the
            # cheap screen when available, else from exact evaluations
            eps = 1e-4
            probe = []
            for m in range(n - i):
                probe.append(_rotated(F, k, fk, G[:, m], eps))
                probe.append(_rotated(F, k, fk, G[:, m], -eps))
            if has_screen:
                pv = ev.screen(probe, context)
            else:
                pv = np.array([ev.evaluate(c) for c in probe])
            deriv = (pv[0::2] - pv[1::2]) / (2.0 * eps)
            if np.isfinite(deriv).all() and np.linalg.norm(deriv) > 1e-14:
                g_star = G @ (deriv / np.linalg.norm(deriv))
                cands += [_rotated(F, k, fk, g_star, sense * a)
                          for a in delta * taps[:n_mag]]
            if has_screen:
                scores = ev.screen(cands, context)
                order = list(np.argsort(-sense * np.asarray(scores))[:3])
            else:
                order = range(len(cands))
            best_cand, best_v = None, value
            for idx in order:
                v = ev.evaluate(cands[idx])
                if sense * (v - best_v) > VALUE_TIE_TOL * (1.0 + abs(best_v)):
                    best_cand, best_v = cands[idx], v
            if best_cand is not None:
                F = _orthonormalize(best_cand)
                G = _complement_basis(F)
                value = best_v
                improved = True
                trace.append((sweep, value))
                context = ev.screen_context(F)
        if not improved:
            delta *= 0.25
            if delta * abs(taps).min() < budget.step_tol:
                break
    return F, value, trace


def _run_search(starts, ev: _Evaluator, sense, budget, refine_top=2,
                always_finalize=()):
    """Evaluate all start frames, refine the best few, then pick the winner
    by the polished ``finalize`` value (the sweep grid may rank close
    frames slightly wrong).  Frames in ``always_finalize`` (the forced
    known optima) reach the finalize stage regardless of their sweep rank.
    Ties go to the lexicographically smallest frame rounded to 6 decimals,
    so reruns reproduce the same report."""
    scored = []
    seen = set()
    for F in starts:
        key = _frame_key(F)
        if key in seen:
            continue
        seen.add(key)
        scored.append((ev.evaluate(F), F))
    if not scored:
        raise GeometryError("no start frames")
    scored.sort(key=lambda t: (sense * -t[0], _frame_key(t[1])))
    finalists = []
    for rank, (v0, F0) in enumerate(scored[:refine_top]):
        F, v, trace = _givens_refine(F0, v0, ev, sense, budget)
        finalists.append((F, trace))
    if len(scored) > refine_top:
        v0, F0 = scored[refine_top]
        finalists.append((F0, [(0, v0)]))
    fin_keys = {F.tobytes() for F, _ in finalists}
    for F in always_finalize:
        F = np.ascontiguousarray(_as_frame(F))
        if F.tobytes() not in fin_keys:
            finalists.append((F, [(0, ev.evaluate(F))]))
            fin_keys.add(F.tobytes())
    polished = []
    polish = getattr(ev, "polish_frame", None)
    for F, trace in finalists:
        if polish is not None:
            F, _ = polish(F)
        value, gap = ev.finalize(F)
        polished.append((value, F, trace, gap))
    best_v = max(polished, key=lambda t: sense * t[0])[0]
    tied = [t for t in polished
            if sense * (best_v - t[0]) <= VALUE_TIE_TOL * (1.0 + abs(best_v))]
    value, F, trace, gap = min(tied, key=lambda t: _frame_key(t[1]))
    return value, _orthonormalize(F), len(scored), trace, gap


# ---------------------------------------------------------------------------
# evaluators


class _OuterVrep(_Evaluator):
    def __init__(self, body):
        self.V = body.vertices

    def evaluate(self, F):
        return min_enclosing_ball(self.V @ F, seed=0)[1]


class _OuterOracle(_Evaluator):
    def __init__(self, body, sweep_grid):
        self.body = body
        self.sweep_grid = sweep_grid

    def evaluate(self, F):
        i = F.shape[1]
        dirs = direction_grid(i, self.sweep_grid if i > 1 else None)
        h = self.body.support_batch(dirs @ F.T)
        if self.body.is_symmetric:
            return float(h.max())
        res = linprog(np.r_[np.zeros(i), 1.0],
                      A_ub=np.column_stack([-dirs, -np.ones(len(dirs))]), b_ub=-h,
                      bounds=[(None, None)] * (i + 1), method="highs", options=_LP_OPTS)
        if not res.success:
            raise GeometryError(f"projection minimax LP failed: {res.message}")
        return float(res.x[-1])

    def finalize(self, F):
        cert = circumradius(project(self.body, Subspace(_orthonormalize(F))))
        return cert.radius, cert.gap


class _InnerLP(_Evaluator):
    """Shared inscribed-ball evaluator over a fixed constraint system
    ``<a_j, c> + rho ||a_j|L|| <= b_j`` (facets of a polytope, or sampled
    support halfspaces of an oracle).

    Screening solves no LP: with the center frozen at the last exact
    optimum, the best ball radius for a candidate frame is the explicit
    minimum of slack over projected-normal norms.
    """

    def __init__(self, A, b, dim, finalize_fn=None, anchors=(), symmetric=False):
        self.A, self.b, self.dim = A, b, dim
        self.symmetric = symmetric
        self._finalize_fn = finalize_fn
        self._last_center = None
        self._cheb_slack = None
        # Fixed interior anchor points (vertex centroid, origin): immune to
        # the LP's habit of returning a vertex of a degenerate optimal face.
        self._anchor_slacks = [np.maximum(b - A @ np.asarray(c, dtype=float), 0.0)
                               for c in anchors]

    def evaluate(self, F):
        w = np.linalg.norm(self.A @ F, axis=1)
        if self.symmetric:
            # Symmetrization centers the optimal ball at the origin.
            mask = w > 1e-12
            if not mask.any():
                return 0.0
            self._last_center = np.zeros(self.dim)
            return float((self.b[mask] / w[mask]).min())
        res = linprog(np.r_[np.zeros(self.dim), -1.0],
                      A_ub=np.column_stack([self.A, w]), b_ub=self.b,
                      bounds=[(None, None)] * self.dim + [(0, None)], method="highs", options=_LP_OPTS)
        if res.status in (2, 3) or not res.success:
            return 0.0
        self._last_center = res.x[:-1]
        return float(-res.fun)

    def polish_frame(self, F, iters: int = 40):
        """Sequential-LP polish over the Grassmann tangent space inside a
        trust region; handles the tied-constraint optima where single
        rotations vanish to first order.

        The step is ``F -> orth(F + G Z)`` with ``G`` the orthogonal
        complement, so the linear model cannot fake progress by shrinking
        column norms.  For symmetric bodies the constraints are kept in
        squared form, ``t * w_j^2 <= b_j^2`` with ``w_j^2`` linear in the
        step, smooth even through ``w_j = 0``; the general form linearizes
        ``w_j`` directly and carries the free center.
        """
        F = _orthonormalize(F)
        value = self.evaluate(F)
        dim, i = F.shape
        c = dim - i
        if c == 0:
            return F, value
        m = len(self.b)
        tau = 0.1
        for _ in range(iters):
            G = _complement_basis(F)
            AF = self.A @ F                      # (m, i)
            AG = self.A @ G                      # (m, c)
            w2 = np.einsum("ij,ij->i", AF, AF)
            # d w_j^2 / d Z[p, q] = 2 AG[j, p] * AF[j, q]
            gcoef = 2.0 * (AG[:, :, None] * AF[:, None, :]).reshape(m, c * i)
            if self.symmetric:
                t_bar = value * value
                rows = np.column_stack([w2, t_bar * gcoef])
                res = linprog(np.r_[-1.0, np.zeros(c * i)],
                              A_ub=rows, b_ub=self.b ** 2 - t_bar * w2,
                              bounds=[(None, None)] + [(-tau, tau)] * (c * i),
                              method="highs", options=_LP_OPTS)
                offset = 1
            else:
                w = np.sqrt(np.maximum(w2, 0.0))
                wsafe = np.maximum(w, 1e-9)
                rows = np.column_stack(
                    [self.A, w, value * gcoef / (2.0 * wsafe[:, None])])
                res = linprog(np.r_[np.zeros(dim), -1.0, np.zeros(c * i)],
                              A_ub=rows, b_ub=self.b,
                              bounds=[(None, None)] * dim + [(0, None)] +
                                     [(-tau, tau)] * (c * i),
                              method="highs", options=_LP_OPTS)
                offset = dim + 1
            if not res.success:
                break
            Z = res.x[offset:].reshape(c, i)
            F_new = _orthonormalize(F + G @ Z)
            v_new = self.evaluate(F_new)
            if v_new > value * (1.0 + 1e-14) + 1e-15:
                F, value = F_new, v_new
                tau = min(0.2, tau * 1.5)
            else:
                tau *= 0.25
                if tau < 1e-10:
                    break
        return F, value

    def frame_gradient(self, F):
        """Riemannian gradient of the optimal radius from LP sensitivity:
        d rho / d w_j = -y_j * rho with duals y, and
        grad_F w_j = a_j (a_j^T F) / w_j.  The duals average over tied
        active constraints, which is exactly where finite rotations stall."""
        if self.symmetric:
            return None
        w = np.linalg.norm(self.A @ F, axis=1)
        res = linprog(np.r_[np.zeros(self.dim), -1.0],
                      A_ub=np.column_stack([self.A, w]), b_ub=self.b,
                      bounds=[(None, None)] * self.dim + [(0, None)], method="highs", options=_LP_OPTS)
        if not res.success or res.ineqlin is None:
            return None
        rho = float(-res.fun)
        y = -np.asarray(res.ineqlin.marginals)
        mask = (y > 1e-12) & (w > 1e-9)
        if not mask.any():
            return None
        coef = -rho * y[mask] / w[mask]
        grad = (self.A[mask].T * coef) @ (self.A[mask] @ F)
        return grad - F @ (F.T @ grad)

    def finalize(self, F):
        if self._finalize_fn is not None:
            return self._finalize_fn(F)
        return self.evaluate(F), 0.0

    def _chebyshev_slack(self):
        if self._cheb_slack is None:
            res = linprog(np.r_[np.zeros(self.dim), -1.0],
                          A_ub=np.column_stack([self.A, np.ones(len(self.b))]),
                          b_ub=self.b,
                          bounds=[(None, None)] * self.dim + [(0, None)],
                          method="highs", options=_LP_OPTS)
            center = res.x[:-1] if res.success else np.zeros(self.dim)
            self._cheb_slack = np.maximum(self.b - self.A @ center, 0.0)
        return self._cheb_slack

    def screen_context(self, F):
        # Frozen-center scores misrank when the frozen center is poor for a
        # candidate frame, so screen against a pool of centers: fixed
        # anchors, the Chebyshev center, and the current frame's optimum.
        if self.symmetric:
            return None  # evaluate() is a cheap exact formula; sweep everything
        pool = list(self._anchor_slacks)
        pool.append(self._chebyshev_slack())
        self.evaluate(F)
        if self._last_center is not None:
            pool.append(np.maximum(self.b - self.A @ self._last_center, 0.0))
        return pool

    def screen(self, cands, context):
        scores = np.empty(len(cands))
        for idx, F in enumerate(cands):
            w = np.linalg.norm(self.A @ F, axis=1)
            mask = w > 1e-12
            if not mask.any():
                scores[idx] = np.inf
                continue
            scores[idx] = max(float((slack[mask] / w[mask]).min()) for slack in context)
        return scores


class _InnerOracleSym(_Evaluator):
    """Centered gauge for origin-symmetric oracle bodies:
    rho(L) = min_u h(u) / ||u|L||."""

    def __init__(self, body, sweep_grid):
        self.body = body
        self.U = direction_grid(body.dim, sweep_grid)
        self.h = body.support_batch(self.U)

    def evaluate(self, F):
        w = np.linalg.norm(self.U @ F, axis=1)
        mask = w > 1e-8
        if not mask.any():
            return 0.0
        return float((self.h[mask] / w[mask]).min())

    def finalize(self, F):
        cert = inradius_fixed_subspace(self.body, Subspace(_orthonormalize(F)))
        return cert.radius, cert.gap


# ---------------------------------------------------------------------------
# public searches


def successive_outer_radius(body: ConvexBody, i: int, budget: SearchBudget | None = None,
                            forced_frames=(), sweep_grid: int = 256,
                            assume_optimal_frames: bool = False) -> RadiiReport:
    """R_i(K): smallest circumradius among projections onto i-subspaces."""
    budget = budget or DEFAULT_BUDGET
    n = body.dim
    if not 1 <= i <= n:
        raise GeometryError(f"need 1 <= i <= n, got i={i}")
    if i == n:
        cert = circumradius(body)
        return RadiiReport(i, cert.radius, "two_sided", Subspace(np.eye(n)), 1,
                           [(0, cert.radius)], gap=cert.gap, note="i=n: circumradius")
    starts = [_as_frame(F) for F in forced_frames]
    exact_anchor = False
    if i == 1 and body.vertices is not None:
        w, u = width(body)
        starts.insert(0, u[:, None] / np.linalg.norm(u))
        exact_anchor = True
    starts += _coordinate_frames(n, i)
    starts += _haar_frames(n, i, budget.starts, budget.seed, tag=0)
    if body.vertices is not None:
        ev = _OuterVrep(body)
    else:
        ev = _OuterOracle(body, sweep_grid)
    value, F, used, trace, gap = _run_search(starts, ev, -1, budget,
                                             always_finalize=[_as_frame(F) for F in forced_frames])
    kind = "two_sided" if (exact_anchor or assume_optimal_frames) else "upper"
    note = "i=1 anchored at the exact width direction" if exact_anchor else ""
    return RadiiReport(i, value, kind, Subspace(F), used, trace, gap=gap, note=note)


def successive_inner_radius(body: ConvexBody, i: int, budget: SearchBudget | None = None,
                            forced_frames=(), sweep_grid: int = 512,
                            assume_optimal_frames: bool = False) -> RadiiReport:
    """r_i(K): largest i-dimensional inscribed ball over axis subspaces
    (the translate over the orthogonal complement is free)."""
    budget = budget or DEFAULT_BUDGET
    n = body.dim
    if not 1 <= i <= n:
        raise GeometryError(f"need 1 <= i <= n, got i={i}")

    if body.vertices is not None:
        aff_dim = body.affine_dim
        if aff_dim < i:
            # No i-dimensional slice has interior: the radius is exactly 0.
            return RadiiReport(i, 0.0, "two_sided", sample_subspace(n, i, budget.seed), 0,
                               [(0, 0.0)], note=f"affine dim {aff_dim} < i")
        if aff_dim < n:
            return _inner_flat_vrep(body, i, budget, forced_frames, assume_optimal_frames)
        if i == n:
            cert = inradius_fixed_subspace(body)
            return RadiiReport(i, cert.radius, "two_sided", Subspace(np.eye(n)), 1,
                               [(0, cert.radius)], note="i=n: single LP")
        starts = [_as_frame(F) for F in forced_frames]
        exact_anchor = False
        if i == 1:
            _, (p, q) = diameter(body)
            d = (q - p) / np.linalg.norm(q - p)
            starts.insert(0, d[:, None])
            exact_anchor = True
        starts += _coordinate_frames(n, i)
        starts += _haar_frames(n, i, budget.starts, budget.seed, tag=1)
        A, b = body.halfspaces()
        ev = _InnerLP(A, b, n, anchors=[body.vertices.mean(axis=0)],
                      symmetric=body.is_symmetric)
        value, F, used, trace, gap = _run_search(starts, ev, +1, budget,
                                                 always_finalize=[_as_frame(F) for F in forced_frames])
        kind = "two_sided" if (exact_anchor or assume_optimal_frames) else "lower"
        note = "i=1 anchored at the exact diameter direction" if exact_anchor else ""
        return RadiiReport(i, value, kind, Subspace(F), used, trace, gap=gap, note=note)

    # oracle body
    starts = [_as_frame(F) for F in forced_frames]
    starts += _coordinate_frames(n, i)
    starts += _haar_frames(n, i, budget.starts, budget.seed, tag=1)
    if body.is_symmetric:
        ev = _InnerOracleSym(body, sweep_grid)
    else:
        U = np.vstack([direction_grid(n, sweep_grid), np.eye(n), -np.eye(n)])
        h = body.support_batch(U)
        ev = _InnerLP(U, h, n, anchors=[np.zeros(n)],
                      finalize_fn=lambda F: _oracle_inner_finalize(body, F))
    if i == n:
        value, gap = ev.finalize(np.eye(n))
        return RadiiReport(i, value, "two_sided", Subspace(np.eye(n)), 1,
                           [(0, value)], gap=gap, note="i=n: oracle inscribed ball")
    value, F, used, trace, gap = _run_search(starts, ev, +1, budget,
                                             always_finalize=[_as_frame(F) for F in forced_frames])
    kind = "two_sided" if assume_optimal_frames else "lower"
    return RadiiReport(i, value, kind, Subspace(F), used, trace, gap=gap)


def _oracle_inner_finalize(body, F):
    cert = inradius_fixed_subspace(body, Subspace(_orthonormalize(F)))
    return cert.radius, cert.gap


def _inner_flat_vrep(body, i, budget, forced_frames, assume_optimal_frames):
    """Inscribed balls of a lower-dimensional body live inside its affine
    hull; search the hull's own Grassmannian and lift the frame back."""
    x0, W, m = body.affine_hull()
    reduced = ConvexBody(m, vertices=(body.vertices - x0) @ W)
    lifted_forced = []
    for F in forced_frames:
        Fh = W.T @ _as_frame(F)
        q, r = np.linalg.qr(Fh)
        if np.abs(np.diag(r)).min() > 1.0 - 1e-8:  # frame lies inside the hull
            lifted_forced.append(_orthonormalize(Fh))
    rep = successive_inner_radius(reduced, i, budget, forced_frames=lifted_forced,
                                  assume_optimal_frames=assume_optimal_frames)
    frame = Subspace(_orthonormalize(W @ rep.achieving_subspace.frame))
    return RadiiReport(i, rep.value, rep.bound_kind, frame, rep.samples_used,
                       rep.refinement_trace, gap=rep.gap,
                       note=(rep.note + "; " if rep.note else "") + f"reduced to affine hull (dim {m})")


def successive_radii_profile(body: ConvexBody, kind: str, i_values=None,
                             budget: SearchBudget | None = None,
                             forced_frames=None) -> dict[int, RadiiReport]:
    """Reports for several i at once, computed for decreasing i with the
    sub-frames of each winner seeding the level below.

    This nesting makes the reported outer radii non-decreasing and the
    inner radii non-increasing in i by construction (projections onto
    sub-frames never increase a circumradius; shrinking the axis subspace
    never shrinks the inscribed ball).
    """
    if kind not in ("outer", "inner"):
        raise ValueError("kind must be 'outer' or 'inner'")
    n = body.dim
    i_values = sorted(set(i_values or range(1, n + 1)), reverse=True)
    forced_frames = forced_frames or {}
    run = successive_outer_radius if kind == "outer" else successive_inner_radius
    out: dict[int, RadiiReport] = {}
    carry = None
    for i in i_values:
        seeds = list(forced_frames.get(i, ()))
        if carry is not None:
            seeds += _subframes(carry, i)
        rep = run(body, i, budget, forced_frames=seeds)
        out[i] = rep
        carry = np.asarray(rep.achieving_subspace.frame)
    return out
