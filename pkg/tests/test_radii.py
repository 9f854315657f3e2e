import itertools

import numpy as np
import pytest

from orlicz_radii.bodies import (ConvexBody, GeometryError, Subspace,
                                 make_ball_in_subspace, make_cube,
                                 make_random_polytope, make_segment,
                                 make_simplex_Kn, minkowski_sum)
from orlicz_radii.orlicz import orlicz_sum
from orlicz_radii.phi import make_power_phi
from orlicz_radii.radii import (circumradius, diameter, inradius_fixed_subspace,
                                min_enclosing_ball, width)


def brute_force_circle(points):
    """All 2- and 3-point candidate balls in the plane (test-only oracle)."""
    pts = np.asarray(points)
    best = None
    for a, b in itertools.combinations(range(len(pts)), 2):
        c = (pts[a] + pts[b]) / 2
        r = np.linalg.norm(pts[a] - c)
        if np.all(np.linalg.norm(pts - c, axis=1) <= r * (1 + 1e-12) + 1e-12):
            if best is None or r < best[1]:
                best = (c, r)
    for a, b, d in itertools.combinations(range(len(pts)), 3):
        pa, pb, pd = pts[a], pts[b], pts[d]
        M = 2 * np.array([pb - pa, pd - pa])
        rhs = np.array([pb @ pb - pa @ pa, pd @ pd - pa @ pa])
        det = np.linalg.det(M)
        if abs(det) < 1e-12:
            continue
        c = np.linalg.solve(M, rhs)
        r = np.linalg.norm(pa - c)
        if np.all(np.linalg.norm(pts - c, axis=1) <= r * (1 + 1e-12) + 1e-12):
            if best is None or r < best[1]:
                best = (c, r)
    return best


def test_circumradius_square():
    cert = circumradius(make_cube([1, 2], 1.0, dim=2))
    assert cert.radius == pytest.approx(np.sqrt(2), abs=1e-12)
    assert np.linalg.norm(cert.center) < 1e-9


@pytest.mark.parametrize("n", [1, 2, 3])
def test_circumradius_simplex(n):
    cert = circumradius(make_simplex_Kn(n))
    assert cert.radius == pytest.approx(np.sqrt(n / (n + 1)), abs=1e-10)


def test_circumradius_matches_brute_force():
    rng = np.random.default_rng(0)
    for trial in range(10):
        pts = rng.standard_normal((100, 2))
        cert = circumradius(ConvexBody(2, vertices=pts))
        _, r_expected = brute_force_circle(pts)
        assert cert.radius == pytest.approx(r_expected, rel=1e-10)


def test_circumball_certificate():
    rng = np.random.default_rng(1)
    pts = rng.standard_normal((40, 3))
    center, radius, support = min_enclosing_ball(pts, seed=0)
    dists = np.linalg.norm(pts - center, axis=1)
    assert dists.max() <= radius * (1 + 1e-10) + 1e-10
    # support points on the sphere
    sd = np.linalg.norm(np.asarray(support) - center, axis=1)
    assert np.max(np.abs(sd - radius)) < 1e-9
    # center inside the hull of the support set (least-squares combination)
    A = np.vstack([np.asarray(support).T, np.ones(len(support))])
    coef, *_ = np.linalg.lstsq(A, np.r_[center, 1.0], rcond=None)
    assert coef.min() > -1e-8
    # removing any non-support vertex leaves the ball unchanged
    keep = [k for k in range(len(pts))
            if not any(np.allclose(pts[k], s) for s in support)]
    _, r2, _ = min_enclosing_ball(pts[sorted(set(keep))[:30] + [0]], seed=0) \
        if False else min_enclosing_ball(np.vstack([np.asarray(support), pts[keep[:5]]]), seed=0)
    assert r2 == pytest.approx(radius, rel=1e-10)


def test_circumradius_cospherical_points():
    rng = np.random.default_rng(2)
    pts = rng.standard_normal((500, 3))
    pts /= np.linalg.norm(pts, axis=1, keepdims=True)
    cert = circumradius(ConvexBody(3, vertices=pts))
    assert cert.radius == pytest.approx(1.0, rel=1e-9)


def test_inradius_cube_axis_subspace():
    cube = make_cube([1, 2, 3], 1.0, dim=3)
    cert = inradius_fixed_subspace(cube, Subspace.from_axes(3, [1, 2]))
    assert cert.radius == pytest.approx(1.0, abs=1e-9)


def test_inradius_chebyshev_center():
    cube = make_cube([1, 2], 2.0, center=[1.0, 1.0], dim=2)
    cert = inradius_fixed_subspace(cube)
    assert cert.radius == pytest.approx(2.0, abs=1e-9)
    assert np.allclose(cert.center, [1.0, 1.0], atol=1e-6)


def test_inradius_unbounded_reports_distinctly():
    half = ConvexBody(2, halfspaces=(np.array([[1.0, 0.0]]), np.array([1.0])))
    with pytest.raises(GeometryError, match="not compact"):
        inradius_fixed_subspace(half)


def test_inradius_disc_in_3d_with_translate():
    # flat unit disc in the plane z = 1: the free center absorbs the offset
    # and the flat body reduces to its affine hull
    L = Subspace.from_axes(3, [1, 2])
    disc = make_ball_in_subspace(L, 1.0, 256).translate([0.0, 0.0, 1.0])
    rng = np.random.default_rng(3)
    d = rng.standard_normal(3)
    d[2] = 0.0
    d /= np.linalg.norm(d)
    cert = inradius_fixed_subspace(disc, Subspace(d[:, None]))
    assert cert.radius == pytest.approx(1.0, abs=1e-3)  # polygonal disc chord
    assert cert.center[2] == pytest.approx(1.0, abs=1e-9)
    # an axis leaving the hull admits only the zero ball
    out = inradius_fixed_subspace(disc, Subspace.from_axes(3, [3]))
    assert out.radius == 0.0


def test_diameter_and_width_square():
    sq = make_cube([1, 2], 1.0, dim=2)
    assert diameter(sq)[0] == pytest.approx(2 * np.sqrt(2))
    assert width(sq)[0] == pytest.approx(2.0)


def test_diameter_and_width_segment():
    seg = make_segment([-1.0, 0.0], [1.0, 0.0])
    assert diameter(seg)[0] == pytest.approx(2.0)
    assert width(seg)[0] == 0.0


def test_width_regular_tetrahedron():
    # edge-to-edge distance of the regular tetrahedron with vertices on
    # alternating cube corners: edge a = 2 sqrt(2), width a / sqrt(2) = 2
    tet = ConvexBody(3, vertices=[[1, 1, 1], [1, -1, -1], [-1, 1, -1], [-1, -1, 1]])
    assert width(tet)[0] == pytest.approx(2.0, abs=1e-10)


def test_width_2d_matches_difference_body_method():
    from orlicz_radii.radii import _width_difference_body
    for seed in range(5):
        poly = make_random_polytope(2, 10, seed=seed)
        w_polygon = width(poly)[0]
        w_diff = _width_difference_body(poly)[0]
        assert w_polygon == pytest.approx(w_diff, abs=1e-10)


def test_width_3d_against_dense_grid():
    from orlicz_radii.bodies import direction_grid
    body = make_random_polytope(3, 12, seed=7)
    w, u = width(body)
    grid = direction_grid(3, 4096)
    breadth = body.support_batch(grid) + body.support_batch(-grid)
    assert w <= breadth.min() + 1e-10
    assert w == pytest.approx(body.support(u) + body.support(-u), abs=1e-10)


def test_minkowski_functional_directions():
    rng_seeds = [(11, 12), (13, 14), (15, 16)]
    for sa, sb in rng_seeds:
        K = make_random_polytope(3, 10, seed=sa)
        B = make_random_polytope(3, 10, seed=sb)
        S = minkowski_sum(K, B)
        assert diameter(S)[0] <= diameter(K)[0] + diameter(B)[0] + 1e-9
        assert circumradius(S).radius <= circumradius(K).radius + circumradius(B).radius + 1e-9
        # width and inradius are superadditive under the classical sum
        assert width(S)[0] >= width(K)[0] + width(B)[0] - 1e-9
        assert inradius_fixed_subspace(S).radius >= (
            inradius_fixed_subspace(K).radius + inradius_fixed_subspace(B).radius - 1e-9)


def test_scaling_equivariance():
    body = make_random_polytope(3, 12, seed=21)
    c = 3.7
    scaled = body.scale(c)
    assert circumradius(scaled).radius == pytest.approx(c * circumradius(body).radius, rel=1e-9)
    assert diameter(scaled)[0] == pytest.approx(c * diameter(body)[0], rel=1e-9)
    assert width(scaled)[0] == pytest.approx(c * width(body)[0], rel=1e-9)
    assert inradius_fixed_subspace(scaled).radius == pytest.approx(
        c * inradius_fixed_subspace(body).radius, rel=1e-9)


def test_oracle_circumradius_symmetric():
    phi = make_power_phi(2.0)
    S = orlicz_sum(make_segment([-1, 0], [1, 0]), make_segment([0, -1], [0, 1]), phi)
    cert = circumradius(S)
    assert cert.radius == pytest.approx(1.0, abs=1e-9)  # the euclidean disc


def test_oracle_circumradius_nonsymmetric_cutting_plane():
    K = make_random_polytope(2, 9, seed=31)
    L = make_random_polytope(2, 9, seed=32)
    S = orlicz_sum(K, L, make_power_phi(1.0))  # equals the Minkowski sum
    exact = circumradius(minkowski_sum(K, L)).radius
    cert = circumradius(S)
    assert cert.radius == pytest.approx(exact, abs=1e-7)
    assert cert.gap < 1e-6


def test_oracle_inradius_against_vertex_body():
    K = make_random_polytope(3, 10, seed=33)
    L = make_random_polytope(3, 10, seed=34)
    S = orlicz_sum(K, L, make_power_phi(1.0))
    M = minkowski_sum(K, L)
    sub = Subspace.from_axes(3, [1, 3])
    exact = inradius_fixed_subspace(M, sub).radius
    cert = inradius_fixed_subspace(S, sub)
    # oracle inscribed balls are estimates with an explicit gap annotation
    assert cert.radius == pytest.approx(exact, abs=3e-3)
    assert abs(cert.radius - exact) <= cert.gap + 1e-6
