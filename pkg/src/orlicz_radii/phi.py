"""Orlicz gauge functions.

Every sum computation in this package is driven by a convex, strictly
increasing function ``phi`` on ``[0, inf)`` normalized so that
``phi(0) = 0`` and ``phi(1) = 1``.  Evaluators are treated as black boxes:
admissibility is checked on a finite grid at construction time, and the
inverse is obtained by bisection (only monotonicity is guaranteed, so no
derivative-based method is used).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

EPS_ROOT = 1e-12        # value tolerance for inverse evaluation
EPS_VALIDATE = 1e-9     # slack absorbed by the grid convexity check
ENDPOINT_TOL = 1e-12
BISECT_ITERS = 100      # 2^-100 interval width: exhausts double precision

DEFAULT_GRID_SIZE = 1024
DEFAULT_T_MAX = 16.0


class PhiValidationError(ValueError):
    """An evaluator failed the admissibility checks."""


class PhiParseError(ValueError):
    """A textual gauge descriptor could not be parsed."""


@dataclass(frozen=True)
class OrliczFunction:
    """A validated gauge: vectorized evaluator plus a printable descriptor."""

    fn: Callable[[np.ndarray], np.ndarray]
    descriptor: str

    def __call__(self, t):
        return self.fn(np.asarray(t, dtype=float))

    def __repr__(self):
        return f"OrliczFunction({self.descriptor})"


@dataclass(frozen=True)
class PhiValidation:
    """Per-invariant outcome of a grid validation run."""

    endpoints_ok: bool
    monotone_ok: bool
    convex_ok: bool
    worst_endpoint: float   # max deviation of phi(0) from 0 and phi(1) from 1
    worst_monotone: float   # min forward difference on the grid (>0 required)
    worst_convexity: float  # min second difference on the grid (>= -eps required)

    @property
    def ok(self) -> bool:
        return self.endpoints_ok and self.monotone_ok and self.convex_ok


def validate(fn, grid_size: int = DEFAULT_GRID_SIZE, t_max: float = DEFAULT_T_MAX) -> PhiValidation:
    """Check endpoint normalization, strict monotonicity and convexity of
    ``fn`` on a uniform grid over ``[0, t_max]``.

    On a uniform grid, convexity is equivalent to non-negative second
    differences, which is what gets checked (within ``EPS_VALIDATE``).
    """
    if grid_size < 3:
        raise ValueError("grid_size must be at least 3")
    if t_max <= 1.0:
        raise ValueError("t_max must exceed 1 so the grid covers [0, 1]")
    grid = np.linspace(0.0, t_max, grid_size)
    vals = np.asarray(fn(grid), dtype=float)
    worst_endpoint = max(abs(float(fn(np.asarray(0.0)))), abs(float(fn(np.asarray(1.0))) - 1.0))
    diffs = np.diff(vals)
    worst_monotone = float(diffs.min())
    second = vals[:-2] - 2.0 * vals[1:-1] + vals[2:]
    worst_convexity = float(second.min())
    return PhiValidation(
        endpoints_ok=worst_endpoint <= ENDPOINT_TOL,
        monotone_ok=worst_monotone > 0.0,
        convex_ok=worst_convexity >= -EPS_VALIDATE,
        worst_endpoint=worst_endpoint,
        worst_monotone=worst_monotone,
        worst_convexity=worst_convexity,
    )


def make_orlicz_function(fn, descriptor: str, grid_size: int = DEFAULT_GRID_SIZE,
                         t_max: float = DEFAULT_T_MAX) -> OrliczFunction:
    """Wrap a black-box evaluator after validating admissibility.

    Raises :class:`PhiValidationError` when any invariant fails; the failing
    report is attached to the exception message.
    """
    def wrapped(t):
        return np.asarray(fn(np.asarray(t, dtype=float)), dtype=float)

    report = validate(wrapped, grid_size=grid_size, t_max=t_max)
    if not report.ok:
        raise PhiValidationError(f"{descriptor!r} is not an admissible gauge: {report}")
    return OrliczFunction(fn=wrapped, descriptor=descriptor)


def make_power_phi(p: float) -> OrliczFunction:
    """The power family ``t -> t**p`` for ``p >= 1`` (``p = 1`` is the
    classical Minkowski case)."""
    p = float(p)
    if p < 1.0:
        raise PhiValidationError(f"power gauge needs p >= 1, got p={p}")
    if p == 1.0:
        return OrliczFunction(fn=lambda t: np.asarray(t, dtype=float), descriptor="power:p=1.0")
    return OrliczFunction(fn=lambda t: np.asarray(t, dtype=float) ** p,
                          descriptor=f"power:p={p!r}")


def make_poly_phi(c1: float, c2: float) -> OrliczFunction:
    """The quadratic family ``t -> c1*t + c2*t**2``.

    Requires ``c1, c2 >= 0`` and ``c1 + c2 = 1`` (normalization), which also
    makes the function convex and strictly increasing.
    """
    c1, c2 = float(c1), float(c2)
    if c1 < 0.0 or c2 < 0.0:
        raise PhiValidationError("poly gauge needs non-negative coefficients")
    if abs(c1 + c2 - 1.0) > ENDPOINT_TOL:
        raise PhiValidationError(f"poly gauge needs c1 + c2 = 1, got {c1 + c2}")
    return OrliczFunction(
        fn=lambda t: (c1 + c2 * np.asarray(t, dtype=float)) * np.asarray(t, dtype=float),
        descriptor=f"poly:c1={c1!r},c2={c2!r}",
    )


# Descriptor grammar: "power:p=<float>" | "poly:c1=<float>,c2=<float>".
# New families register a parser taking the key=value dict.
_FAMILIES: dict[str, Callable[[dict], OrliczFunction]] = {
    "power": lambda kv: make_power_phi(kv["p"]),
    "poly": lambda kv: make_poly_phi(kv["c1"], kv["c2"]),
}


def parse_phi_descriptor(text: str) -> OrliczFunction:
    """Build a gauge from its textual descriptor."""
    family, sep, rest = text.strip().partition(":")
    if not sep or not family:
        raise PhiParseError(f"malformed gauge descriptor {text!r}")
    if family not in _FAMILIES:
        raise PhiParseError(f"unknown gauge family {family!r} in {text!r}")
    params = {}
    for item in rest.split(","):
        key, eq, value = item.partition("=")
        if not eq:
            raise PhiParseError(f"malformed parameter {item!r} in {text!r}")
        try:
            params[key.strip()] = float(value)
        except ValueError as exc:
            raise PhiParseError(f"non-numeric parameter {item!r} in {text!r}") from exc
    try:
        return _FAMILIES[family](params)
    except KeyError as exc:
        raise PhiParseError(f"missing parameter {exc} for family {family!r}") from exc


def phi_inverse(phi: OrliczFunction, y, tol: float = EPS_ROOT):
    """Solve ``phi(t) = y`` for ``y`` in ``[0, 1]`` by bisection on ``[0, 1]``.

    Accepts scalars or arrays; the result satisfies ``|phi(t) - y| <= tol``
    and is monotone in ``y``.
    """
    arr = np.asarray(y, dtype=float)
    if np.any(arr < 0.0) or np.any(arr > 1.0):
        raise ValueError("phi_inverse requires y in [0, 1]")
    lo = np.zeros_like(arr)
    hi = np.ones_like(arr)
    for _ in range(BISECT_ITERS):
        mid = 0.5 * (lo + hi)
        below = phi(mid) < arr
        lo = np.where(below, mid, lo)
        hi = np.where(below, hi, mid)
    out = 0.5 * (lo + hi)
    # Endpoints are known exactly from the normalization.
    out = np.where(arr == 0.0, 0.0, out)
    out = np.where(arr == 1.0, 1.0, out)
    return float(out) if np.isscalar(y) or arr.ndim == 0 else out


@dataclass(frozen=True)
class PhiConstants:
    """The two derived constants that recur in every radii bound."""

    half_inverse: float  # phi^{-1}(1/2)
    slab_radius: float   # sqrt(2) / (2 * phi^{-1}(1/2))

    @classmethod
    def from_phi(cls, phi: OrliczFunction) -> "PhiConstants":
        half_inverse = phi_inverse(phi, 0.5)
        # Convexity forces phi(t) <= t on [0, 1], hence phi^{-1}(1/2) >= 1/2;
        # strict increase with phi(1) = 1 forces phi^{-1}(1/2) < 1.
        if not (0.5 - 1e-9 <= half_inverse < 1.0):
            raise PhiValidationError(
                f"phi^-1(1/2) = {half_inverse} outside [1/2, 1); gauge not admissible")
        return cls(half_inverse=half_inverse,
                   slab_radius=float(np.sqrt(2.0) / (2.0 * half_inverse)))
