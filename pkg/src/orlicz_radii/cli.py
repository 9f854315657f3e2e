"""Command-line front end.

Subcommands: ``sum`` (support table of an Orlicz sum), ``radii``
(classical and successive radii of a body), ``verify`` (the theorem
suite), ``boundary`` (boundary samples for plotting).  Exit codes:
0 success, 1 verification failure, 2 usage, 3 parse error, 4 math-domain
error.  Outputs are byte-identical for identical inputs, seed and config.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, fields

import numpy as np

from .bodies import GeometryError, direction_grid
from .grassmann import SearchBudget, successive_inner_radius, successive_outer_radius
from .io import ParseError, read_body
from .orlicz import boundary_cloud, boundary_polyline_2d, orlicz_sum
from .phi import (PhiConstants, PhiParseError, PhiValidationError,
                  parse_phi_descriptor)
from .radii import circumradius, diameter, inradius_fixed_subspace, width
from .verify import SuiteConfig, format_report, run_suite

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_DOMAIN = 4


@dataclass
class RunConfig:
    """Run-wide knobs; round-trips losslessly through its text form."""
    seed: int = 0
    starts: int = 64
    iters: int = 200
    angle_grid: int = 16
    step_tol: float = 1e-7
    grid_2d: int = 256
    grid_3d: int = 1024
    boundary_2d: int = 720
    boundary_3d: int = 2000
    tolerance_scale: float = 1.0

    def __post_init__(self):
        if self.step_tol <= 0 or self.tolerance_scale < 0:
            raise ValueError("tolerances must be positive")
        for name in ("starts", "iters", "angle_grid", "grid_2d", "grid_3d",
                     "boundary_2d", "boundary_3d"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")

    def budget(self) -> SearchBudget:
        return SearchBudget(starts=self.starts, max_iters=self.iters,
                            angle_grid=self.angle_grid, step_tol=self.step_tol,
                            seed=self.seed)

    def to_text(self) -> str:
        return "".join(f"{f.name} {getattr(self, f.name)!r}\n" for f in fields(self))

    @classmethod
    def from_text(cls, text: str) -> "RunConfig":
        kwargs = {}
        casts = {f.name: f.type for f in fields(cls)}
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            key, _, value = line.partition(" ")
            if key not in casts:
                raise ParseError(f"unknown config key {key!r}")
            kwargs[key] = int(value) if casts[key] == "int" else float(value)
        return cls(**kwargs)


def _fmt(x) -> str:
    return repr(float(x))


def _write_lines(path, lines):
    text = "\n".join(lines) + "\n"
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def cmd_sum(args) -> int:
    A = read_body(args.body_a)
    B = read_body(args.body_b)
    phi = parse_phi_descriptor(args.phi)
    S = orlicz_sum(A, B, phi)
    grid = direction_grid(S.dim, args.resolution)
    h = S.support_batch(grid)
    consts = PhiConstants.from_phi(phi)
    lines = [f"# orlicz sum support table: phi={phi.descriptor} dim={S.dim}",
             f"# phi^-1(1/2)={consts.half_inverse:.12g} "
             f"slab_radius={consts.slab_radius:.12g}"]
    lines += [" ".join(_fmt(v) for v in row) + " " + _fmt(hv)
              for row, hv in zip(grid, h)]
    _write_lines(args.out, lines)
    return EXIT_OK


def _parse_i_list(text, n):
    if text in (None, "", "all"):
        return list(range(1, n + 1))
    try:
        values = [int(v) for v in text.replace("i=", "").split(",")]
    except ValueError as exc:
        raise ParseError(f"bad i list {text!r}") from exc
    for i in values:
        if not 1 <= i <= n:
            raise GeometryError(f"i={i} outside 1..{n}")
    return values


def cmd_radii(args) -> int:
    body = read_body(args.body)
    config = _config_from_args(args)
    lines = [f"# radii report: dim={body.dim} seed={config.seed}"]
    lines.append(f"{'functional':14s} {'value':>22s}  certificate")
    cert_R = circumradius(body)
    D, _ = diameter(body)
    w, _ = width(body)
    lines.append(f"{'circumradius':14s} {_fmt(cert_R.radius):>22s}  center=({','.join(_fmt(c) for c in cert_R.center)})")
    try:
        cert_r = inradius_fixed_subspace(body)
        lines.append(f"{'inradius':14s} {_fmt(cert_r.radius):>22s}  center=({','.join(_fmt(c) for c in cert_r.center)})")
    except GeometryError as exc:
        lines.append(f"{'inradius':14s} {_fmt(0.0):>22s}  degenerate body ({exc})")
    lines.append(f"{'diameter':14s} {_fmt(D):>22s}  vertex pair")
    lines.append(f"{'width':14s} {_fmt(w):>22s}  breadth minimum")
    if args.successive is not None:
        budget = config.budget()
        lines.append("")
        lines.append(f"{'radius':10s} {'i':>2s} {'value':>22s} {'bound':9s} {'samples':>7s}")
        for i in _parse_i_list(args.successive, body.dim):
            rep = successive_outer_radius(body, i, budget)
            lines.append(f"{'R_i':10s} {i:>2d} {_fmt(rep.value):>22s} {rep.bound_kind:9s} {rep.samples_used:>7d}")
        for i in _parse_i_list(args.successive, body.dim):
            rep = successive_inner_radius(body, i, budget)
            lines.append(f"{'r_i':10s} {i:>2d} {_fmt(rep.value):>22s} {rep.bound_kind:9s} {rep.samples_used:>7d}")
    lines.append("")
    lines.append("[machine]")
    lines.append(f"circumradius={_fmt(cert_R.radius)}")
    lines.append(f"diameter={_fmt(D)}")
    lines.append(f"width={_fmt(w)}")
    _write_lines(args.out, lines)
    return EXIT_OK


def cmd_verify(args) -> int:
    config = _config_from_args(args)
    phis = None
    if args.phi:
        phis = [parse_phi_descriptor(p) for p in args.phi]
    dims = tuple(int(d) for d in args.dims.split(",")) if args.dims else (2, 3, 4)
    suite = SuiteConfig(seed=config.seed, dims=dims, phis=phis,
                        phis_random=phis,
                        claims=tuple(args.claims or ()),
                        tolerance_scale=config.tolerance_scale)
    report = run_suite(suite)
    text = format_report(report, suite)
    if args.report in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(args.report, "w") as fh:
            fh.write(text)
    summary = f"{len(report.results)} claims, {len(report.failures)} not passing"
    print(summary, file=sys.stderr)
    return EXIT_OK if report.exit_code == 0 else EXIT_FAIL


def cmd_boundary(args) -> int:
    body = read_body(args.body)
    if args.body_b is not None:
        other = read_body(args.body_b)
        phi = parse_phi_descriptor(args.phi or "power:p=1.0")
        body = orlicz_sum(body, other, phi)
    config = _config_from_args(args)
    if body.dim == 2:
        resolution = args.resolution or config.boundary_2d
        pts = boundary_polyline_2d(body, resolution)
        pts = np.vstack([pts, pts[:1]])  # closed polyline
        lines = [f"# boundary polyline: dim=2 resolution={resolution}"]
    else:
        resolution = args.resolution or config.boundary_3d
        pts = boundary_cloud(body, resolution)
        lines = [f"# boundary point cloud: dim={body.dim} resolution={len(pts)}"]
    lines += [" ".join(_fmt(v) for v in row) for row in pts]
    _write_lines(args.out, lines)
    return EXIT_OK


def _config_from_args(args) -> RunConfig:
    if getattr(args, "config", None):
        with open(args.config) as fh:
            config = RunConfig.from_text(fh.read())
    else:
        config = RunConfig()
    for name in ("seed", "starts", "iters"):
        value = getattr(args, name, None)
        if value is not None:
            setattr(config, name, value)
    if getattr(args, "tolerance_scale", None) is not None:
        config.tolerance_scale = args.tolerance_scale
    return config


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orlicz-radii",
        description="Orlicz Minkowski sums and successive radii of convex bodies.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--out", default=None, help="output path (default: stdout)")
        p.add_argument("--seed", type=int, default=None, help="search seed (default 0)")
        p.add_argument("--config", default=None, help="RunConfig file")

    p_sum = sub.add_parser("sum", help="support table of an Orlicz Minkowski sum")
    p_sum.add_argument("body_a")
    p_sum.add_argument("body_b")
    p_sum.add_argument("phi", help="gauge descriptor: power:p=<float> | poly:c1=<f>,c2=<f>")
    p_sum.add_argument("--resolution", type=int, default=None,
                       help="directions in the table (default 256 in 2-D, 1024 in 3-D)")
    add_common(p_sum)

    p_radii = sub.add_parser("radii", help="classical and successive radii of a body")
    p_radii.add_argument("body")
    p_radii.add_argument("--successive", nargs="?", const="all", default=None,
                         metavar="i=LIST", help="also report R_i/r_i (default: all i)")
    p_radii.add_argument("--starts", type=int, default=None,
                         help="multistart frames (default 64)")
    p_radii.add_argument("--iters", type=int, default=None,
                         help="refinement sweep cap (default 200)")
    add_common(p_radii)

    p_verify = sub.add_parser("verify", help="run the theorem verification suite")
    p_verify.add_argument("--claims", nargs="*", default=None,
                          help="claim-id prefixes to run (default: all)")
    p_verify.add_argument("--phi", nargs="*", default=None,
                          help="gauge descriptors (default: p in {1,1.5,2,3,10} plus poly)")
    p_verify.add_argument("--dims", default=None, help="dimensions, e.g. 2,3 (default 2,3,4)")
    p_verify.add_argument("--report", default=None, help="report path (default: stdout)")
    p_verify.add_argument("--tolerance-scale", dest="tolerance_scale", type=float,
                          default=None, help="multiply all claim tolerances (sanity: 0)")
    p_verify.add_argument("--seed", type=int, default=None)
    p_verify.add_argument("--config", default=None)

    p_bnd = sub.add_parser("boundary", help="boundary samples of a body or a sum")
    p_bnd.add_argument("body")
    p_bnd.add_argument("body_b", nargs="?", default=None,
                       help="optional second body: emit the boundary of the sum")
    p_bnd.add_argument("--phi", default=None, help="gauge for the sum (default power:p=1)")
    p_bnd.add_argument("--resolution", type=int, default=None,
                       help="samples (default 720 in 2-D, 2000 in 3-D)")
    add_common(p_bnd)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {"sum": cmd_sum, "radii": cmd_radii, "verify": cmd_verify,
                "boundary": cmd_boundary}
    try:
        return handlers[args.command](args)
    except (ParseError, PhiParseError, FileNotFoundError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (GeometryError, PhiValidationError) as exc:
        print(f"math-domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
