"""Derivative-free extremum search on unit spheres.

Support functions of sum oracles are cheap in batches (the per-direction
bisection vectorizes), so both the seeding pass and the local polish work
on whole batches: a coarse deterministic grid picks candidate basins, and
a finite-difference projected-gradient loop refines the best few
candidates simultaneously.  Functions may return ``inf``/``nan`` to mask
directions (used by gauge ratios near the masked equator).
"""
from __future__ import annotations

import numpy as np

from .bodies import direction_grid, _axis_directions


def _normalize_rows(X):
    norms = np.linalg.norm(X, axis=1, keepdims=True)
    norms[norms < 1e-14] = 1.0
    return X / norms


def refine_on_sphere(fn, X0, sense: int, steps: int = 80, fd: float = 1e-6,
                     eta0: float = 0.1):
    """Polish candidate directions by projected finite-difference ascent.

    ``sense=+1`` maximizes, ``-1`` minimizes.  Returns the refined points
    and their values; each candidate keeps its own step size and only
    strict improvements are accepted.
    """
    X = _normalize_rows(np.atleast_2d(np.asarray(X0, dtype=float)).copy())
    m, d = X.shape
    vals = np.asarray(fn(X), dtype=float)
    eta = np.full(m, eta0)
    eye = np.eye(d)
    for _ in range(steps):
        live = eta > 1e-10
        if not live.any():
            break
        plus = _normalize_rows((X[:, None, :] + fd * eye[None]).reshape(-1, d))
        minus = _normalize_rows((X[:, None, :] - fd * eye[None]).reshape(-1, d))
        g = (np.asarray(fn(plus)) - np.asarray(fn(minus))).reshape(m, d) / (2.0 * fd)
        g = np.where(np.isfinite(g), g, 0.0)
        g -= (g * X).sum(axis=1, keepdims=True) * X
        gn = np.linalg.norm(g, axis=1)
        move = gn > 1e-14
        dirs = np.where(move[:, None], g / np.where(gn[:, None] > 0, gn[:, None], 1.0), 0.0)
        cand = _normalize_rows(X + (sense * eta)[:, None] * dirs)
        cv = np.asarray(fn(cand), dtype=float)
        better = np.isfinite(cv) & (sense * (cv - vals) > 0.0) & live & move
        X[better] = cand[better]
        vals[better] = cv[better]
        eta = np.where(better, np.minimum(eta * 1.3, 0.5), eta * 0.5)
    return X, vals


def optimize_on_sphere(fn, dim: int, sense: int, grid_size: int | None = None,
                       extra=None, top_k: int = 8, steps: int = 80):
    """Grid seed + polish.  Returns ``(best_value, best_direction)``.

    ``extra`` rows are force-included seed directions (known optima from
    equality-case constructions, axis directions, previous iterates).
    """
    U = direction_grid(dim, grid_size)
    U = np.vstack([U, _axis_directions(dim)])
    if extra is not None and len(extra):
        U = np.vstack([U, _normalize_rows(np.atleast_2d(np.asarray(extra, dtype=float)))])
    vals = np.asarray(fn(U), dtype=float)
    vals = np.where(np.isfinite(vals), vals, -sense * np.inf)
    order = np.argsort(-sense * vals)
    seeds = U[order[:top_k]]
    X, pv = refine_on_sphere(fn, seeds, sense, steps=steps)
    k = int(np.argmax(sense * pv))
    best_grid = float(vals[order[0]])
    best = float(pv[k])
    if sense * (best_grid - best) > 0:  # polish never loses to its own seed
        return best_grid, U[order[0]]
    return best, X[k]
