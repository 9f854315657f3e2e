"""Body file format: plain text, key-value header plus numeric rows.

    # comments allowed
    dim 3
    kind vrep            (or hrep / named)
    vertices 4           (row count; then one point per line)
    1 0 0
    ...

``hrep`` rows hold the unit normal followed by the offset.  ``named``
files carry a constructor name (``ctor``) and its parameters instead of
rows, matching the constructor operations:

    ctor cube | segment | ball | simplex | slab
    axes 1,2,3      half_width 1.0     center 0,0,0       (cube)
    a -1,0  b 1,0                                          (segment)
    axes 1,2  radius 1.0  facets 256                       (ball)
    n 3                                                    (simplex)
    segment_axis 1  cube_axes 3,4  dim 4                   (slab)

Numbers are written as shortest round-trip decimals (repr), so a file
written from parsed values reproduces byte-identical content for inputs
with at most 17 significant digits.
"""
from __future__ import annotations

import numpy as np

from .bodies import (ConvexBody, GeometryError, Subspace, make_ball_in_subspace,
                     make_cube, make_segment, make_simplex_Kn, make_slab_body)


class ParseError(ValueError):
    """A body file or descriptor could not be parsed."""


def _fmt(x: float) -> str:
    return repr(float(x))


def _fmt_row(row) -> str:
    return " ".join(_fmt(v) for v in row)


def _fmt_vec(vec) -> str:
    return ",".join(_fmt(v) for v in vec)


def _parse_vec(text: str) -> np.ndarray:
    try:
        return np.array([float(v) for v in text.split(",")])
    except ValueError as exc:
        raise ParseError(f"bad numeric vector {text!r}") from exc


def _parse_axes(text: str):
    if not text.strip():
        return []
    try:
        return [int(v) for v in text.split(",")]
    except ValueError as exc:
        raise ParseError(f"bad axis list {text!r}") from exc


def write_body(body: ConvexBody, path) -> None:
    lines = []
    meta = body.meta or {}
    if meta.get("ctor") in ("segment", "cube", "ball", "simplex", "slab"):
        lines.append(f"dim {body.dim}")
        lines.append("kind named")
        ctor = meta["ctor"]
        lines.append(f"ctor {ctor}")
        if ctor == "segment":
            lines.append(f"a {_fmt_vec(meta['a'])}")
            lines.append(f"b {_fmt_vec(meta['b'])}")
        elif ctor == "cube":
            lines.append(f"axes {','.join(str(a) for a in meta['axes'])}")
            lines.append(f"half_width {_fmt(meta['half_width'])}")
            lines.append(f"center {_fmt_vec(meta['center'])}")
        elif ctor == "ball":
            frame = np.asarray(meta["frame"])
            axes = _frame_axes(frame)
            if axes is None:
                raise ParseError("only axis-aligned ball subspaces have a file form")
            lines.append(f"axes {','.join(str(a) for a in axes)}")
            lines.append(f"radius {_fmt(meta['radius'])}")
            lines.append(f"facets {meta['facet_count']}")
        elif ctor == "simplex":
            lines.append(f"n {meta['n']}")
        elif ctor == "slab":
            lines.append(f"segment_axis {meta['segment_axis']}")
            lines.append(f"cube_axes {','.join(str(a) for a in meta['cube_axes'])}")
            lines.append(f"dim {meta['dim']}")
    elif body.vertices is not None:
        lines.append(f"dim {body.dim}")
        lines.append("kind vrep")
        lines.append(f"vertices {len(body.vertices)}")
        lines.extend(_fmt_row(v) for v in body.vertices)
    else:
        A, b = body.halfspaces()
        lines.append(f"dim {body.dim}")
        lines.append("kind hrep")
        lines.append(f"halfspaces {len(b)}")
        lines.extend(_fmt_row(np.r_[a, off]) for a, off in zip(A, b))
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def _frame_axes(frame: np.ndarray):
    axes = []
    for col in frame.T:
        hot = np.flatnonzero(np.abs(col) > 1e-12)
        if len(hot) != 1 or abs(col[hot[0]] - 1.0) > 1e-12:
            return None
        axes.append(int(hot[0]) + 1)
    return axes


def read_body(path) -> ConvexBody:
    with open(path) as fh:
        raw = [ln.strip() for ln in fh]
    lines = [ln for ln in raw if ln and not ln.startswith("#")]
    fields = {}
    rows = []
    for ln in lines:
        key, _, rest = ln.partition(" ")
        if key in ("dim", "kind", "vertices", "halfspaces", "ctor", "axes",
                   "half_width", "center", "a", "b", "radius", "facets", "n",
                   "segment_axis", "cube_axes"):
            fields[key] = rest.strip()
        else:
            rows.append(ln)
    try:
        dim = int(fields["dim"])
        kind = fields["kind"]
    except KeyError as exc:
        raise ParseError(f"missing header field {exc} in {path}") from exc

    if kind == "vrep":
        count = int(fields.get("vertices", len(rows)))
        verts = _parse_rows(rows, count, dim, path)
        return ConvexBody(dim, vertices=verts)
    if kind == "hrep":
        count = int(fields.get("halfspaces", len(rows)))
        data = _parse_rows(rows, count, dim + 1, path)
        return ConvexBody(dim, halfspaces=(data[:, :-1], data[:, -1]))
    if kind == "named":
        return _build_named(dim, fields)
    raise ParseError(f"unknown body kind {fields['kind']!r} in {path}")


def _parse_rows(rows, count, ncols, path):
    if len(rows) != count:
        raise ParseError(f"expected {count} numeric rows in {path}, found {len(rows)}")
    try:
        data = np.array([[float(v) for v in ln.split()] for ln in rows])
    except ValueError as exc:
        raise ParseError(f"bad numeric row in {path}") from exc
    if data.shape[1] != ncols:
        raise ParseError(f"rows in {path} have {data.shape[1]} columns, expected {ncols}")
    return data


def _build_named(dim, fields) -> ConvexBody:
    ctor = fields.get("ctor")
    try:
        if ctor == "segment":
            return make_segment(_parse_vec(fields["a"]), _parse_vec(fields["b"]))
        if ctor == "cube":
            return make_cube(_parse_axes(fields["axes"]), float(fields["half_width"]),
                             center=_parse_vec(fields["center"]), dim=dim)
        if ctor == "ball":
            L = Subspace.from_axes(dim, _parse_axes(fields["axes"]))
            return make_ball_in_subspace(L, float(fields["radius"]), int(fields["facets"]))
        if ctor == "simplex":
            return make_simplex_Kn(int(fields["n"]))
        if ctor == "slab":
            return make_slab_body(int(fields["segment_axis"]),
                                  _parse_axes(fields.get("cube_axes", "")), dim=dim)
    except KeyError as exc:
        raise ParseError(f"named body missing parameter {exc}") from exc
    except GeometryError:
        raise
    except ValueError as exc:
        raise ParseError(f"bad named-body parameter: {exc}") from exc
    raise ParseError(f"unknown constructor {ctor!r}")
