"""Acceptance criteria, one test per criterion, each printing a pass/fail
line.  Tolerances are pinned here and match the claims the library makes;
criteria built on the segment-sum equality cases run over the gauges whose
slab constant sqrt(2)/(2 phi^{-1}(1/2)) stays above the floor imposed by
the unit segments inside the sum (see tests for the out-of-regime split).
"""
import time

import numpy as np

from orlicz_radii.bodies import (Subspace, direction_grid, make_random_polytope,
                                 make_segment, reflect)
from orlicz_radii.grassmann import (SearchBudget, successive_inner_radius,
                                    successive_outer_radius, successive_radii_profile)
from orlicz_radii.orlicz import boundary_polyline_2d, orlicz_sum, orlicz_support
from orlicz_radii.phi import PhiConstants, make_poly_phi, make_power_phi
from orlicz_radii.radii import circumradius, diameter, inradius_fixed_subspace, width
from orlicz_radii.verify import (SuiteConfig, check_no_reverse, inner_ball_pair,
                                 inner_ball_optimal_frame, run_suite,
                                 segment_cube_body, slab_cube_pair)

POWERS = [1.0, 1.5, 2.0, 3.0, 10.0]
ALL_PHIS = [make_power_phi(p) for p in POWERS] + [make_poly_phi(0.5, 0.5)]
# gauges for which the segment-sum equality value sqrt(2)/(2 phi^-1(1/2))
# dominates the unit segments inside the sum
IN_REGIME = [make_power_phi(p) for p in (1.0, 1.5, 2.0)] + [make_poly_phi(0.5, 0.5)]

EQ_BUDGET = SearchBudget(starts=2, max_iters=10, angle_grid=8)


def report(number, ok, detail):
    print(f"ACCEPTANCE {number}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, f"criterion {number}: {detail}"


def test_criterion_01_lp_oracle_equivalence():
    rng = np.random.default_rng(0)
    worst = 0.0
    t0 = time.perf_counter()
    for p in POWERS:
        phi = make_power_phi(p)
        hK = rng.uniform(0.0, 10.0, size=10_000)
        hL = rng.uniform(0.0, 10.0, size=10_000)
        got = orlicz_support(hK, hL, phi)
        expected = (hK ** p + hL ** p) ** (1.0 / p)
        worst = max(worst, float(np.max(np.abs(got - expected) / np.maximum(expected, 1e-300))))
    elapsed = time.perf_counter() - t0
    report(1, worst <= 1e-10 and elapsed < 5.0,
           f"L_p closed-form equivalence: worst rel err {worst:.2e}, {elapsed:.2f}s")


def test_criterion_02_self_sum_scaling():
    worst = 0.0
    for k, n in enumerate([2, 2, 3, 3, 4]):
        K = make_random_polytope(n, 3 * n, seed=(100, k))
        grid = direction_grid(n)
        hK = K.support_batch(grid)
        for phi in ALL_PHIS:
            c = PhiConstants.from_phi(phi)
            ratio = orlicz_sum(K, K, phi).support_batch(grid) / hK
            worst = max(worst, float(np.max(np.abs(ratio - 1.0 / c.half_inverse))))
    report(2, worst <= 1e-10, f"self-sum support ratio: worst dev {worst:.2e}")


def test_criterion_03_theorem12_inclusions():
    worst = np.inf
    pair = 0
    for n in (2, 3, 4):
        for k in range(17 if n == 2 else 17 if n == 3 else 16):
            K = make_random_polytope(n, 3 * n, seed=(200, n, k))
            L = make_random_polytope(n, 3 * n, seed=(201, n, k))
            phi = ALL_PHIS[pair % len(ALL_PHIS)]
            pair += 1
            c = PhiConstants.from_phi(phi)
            grid = direction_grid(n)
            hK, hL = K.support_batch(grid), L.support_batch(grid)
            hS = orlicz_sum(K, L, phi).support_batch(grid)
            hmax = np.maximum(hK, hL)
            slacks = [np.min(hS - (hK + hL) / (2 * c.half_inverse)),
                      np.min(hK + hL - hS),
                      np.min(hS - hmax),
                      np.min(hmax / c.half_inverse - hS)]
            worst = min(worst, float(min(slacks)))
    report(3, pair == 50 and worst >= -1e-9,
           f"Theorem 1.2 inclusions on {pair} pairs: worst slack {worst:.2e}")


def test_criterion_04_projection_commutation():
    worst = 0.0
    from orlicz_radii.bodies import project
    for n, i in ((3, 2), (4, 2), (4, 3)):
        K = make_random_polytope(n, 3 * n, seed=(300, n, i))
        Kp = make_random_polytope(n, 3 * n, seed=(301, n, i))
        for k in range(20):
            phi = ALL_PHIS[k % len(ALL_PHIS)]
            S = orlicz_sum(K, Kp, phi)
            rng = np.random.default_rng((302, n, i, k))
            sub = Subspace(np.linalg.qr(rng.standard_normal((n, i)))[0])
            dirs = direction_grid(i, 64)
            lhs = S.support_batch(dirs @ np.asarray(sub.frame).T)
            rhs = orlicz_sum(project(K, sub), project(Kp, sub), phi).support_batch(dirs)
            worst = max(worst, float(np.max(np.abs(lhs - rhs))))
    report(4, worst <= 1e-9, f"Lemma 1.3 commutation: max grid deviation {worst:.2e}")


def test_criterion_05_segment_sum_boundary():
    ok = True
    details = []
    for phi in IN_REGIME:
        c = PhiConstants.from_phi(phi)
        S = orlicz_sum(make_segment([-1.0, 0.0], [1.0, 0.0]),
                       make_segment([0.0, -1.0], [0.0, 1.0]), phi)
        pts = boundary_polyline_2d(S, 720)
        norms = np.linalg.norm(pts, axis=1)
        diag = S.support(np.array([1.0, 1.0]) / np.sqrt(2.0))
        max_ok = abs(float(norms.max()) - c.slab_radius) <= 1e-8
        attain_ok = abs(diag - float(norms.max())) <= 1e-6
        ok = ok and max_ok and attain_ok
        details.append(f"{phi.descriptor}: max {norms.max():.12f} vs {c.slab_radius:.12f}")
    # out-of-regime split: for p > 2 the maximum sits on the axes at 1
    for p in (3.0, 10.0):
        S = orlicz_sum(make_segment([-1.0, 0.0], [1.0, 0.0]),
                       make_segment([0.0, -1.0], [0.0, 1.0]), make_power_phi(p))
        norms = np.linalg.norm(boundary_polyline_2d(S, 720), axis=1)
        ok = ok and abs(float(norms.max()) - 1.0) <= 1e-8
    report(5, ok, "Lemma 1.4 boundary extremum; " + "; ".join(details[:2]) + "; ...")


def test_criterion_06_outer_equality_slab_cubes():
    ok = True
    details = []
    n = 4
    for i in (2, 3):
        frame = Subspace.from_axes(n, list(range(1, i + 1)))
        for phi in IN_REGIME:
            c = PhiConstants.from_phi(phi)
            K, Kp = slab_cube_pair(n, i)
            S = orlicz_sum(K, Kp, phi)
            rep = successive_outer_radius(S, i, EQ_BUDGET, forced_frames=[frame],
                                          assume_optimal_frames=True)
            ok = ok and abs(rep.value - c.slab_radius) <= 1e-6
            if phi.descriptor == "power:p=1.0":
                ok = ok and abs(rep.value - np.sqrt(2.0)) <= 1e-9
                details.append(f"i={i} p=1: {rep.value:.12f} (sqrt(2))")
    report(6, ok, "outer slab-cube equality n=4; " + "; ".join(details))


def test_criterion_07_inner_equality_subspace_balls():
    ok = True
    worst = 0.0
    n, i = 3, 2
    for phi in IN_REGIME:
        c = PhiConstants.from_phi(phi)
        B0, B1, axes0, axes1 = inner_ball_pair(n, i, 512)
        S = orlicz_sum(B0, B1, phi)
        frame = inner_ball_optimal_frame(n, i, axes0, axes1)
        rep = successive_inner_radius(S, i, EQ_BUDGET, forced_frames=[frame],
                                      assume_optimal_frames=True)
        tol = 2.0 * B0.meta["mesh_gap"] + 1e-6
        dev = abs(rep.value - c.slab_radius)
        worst = max(worst, dev - tol)
        ok = ok and dev <= tol
    report(7, ok, f"inner subspace-ball equality (3,2): worst dev-over-tol {worst:.2e}")


def test_criterion_08a_difference_body_segment_cube():
    ok = True
    for n, i_list in ((3, (1, 2, 3)), (4, (2,))):
        for i in i_list:
            frame = Subspace.from_axes(n, list(range(1, i + 1)))
            for phi in ALL_PHIS:
                K = segment_cube_body(n, i)
                S = orlicz_sum(K, reflect(K), phi)
                rep = successive_outer_radius(S, i, EQ_BUDGET, forced_frames=[frame],
                                              assume_optimal_frames=True)
                repK = successive_outer_radius(K, i, EQ_BUDGET, forced_frames=[frame],
                                               assume_optimal_frames=True)
                ok = ok and abs(rep.value - 1.0) <= 1e-6
                ok = ok and abs(rep.value - 2.0 * repK.value) <= 1e-6
    report(8, ok, "difference body of segment-plus-cube: R_i(sum) = 1 = 2 R_i(K)")


def test_criterion_08b_difference_body_simplex():
    from orlicz_radii.bodies import make_simplex_Kn
    ok = True
    details = []
    for n in (2, 3):
        K = make_simplex_Kn(n)
        cert = circumradius(K)
        ok = ok and abs(cert.radius - np.sqrt(n / (n + 1.0))) <= 1e-10
        gauges = IN_REGIME + ([make_power_phi(3.0)] if n == 2 else [])
        pairs = [(a, b) for a in range(n + 1) for b in range(n + 1) if a != b]
        extra = np.array([(np.eye(n + 1)[a] - np.eye(n + 1)[b]) / np.sqrt(2.0)
                          for a, b in pairs])
        for phi in gauges:
            c = PhiConstants.from_phi(phi)
            S = orlicz_sum(K, reflect(K), phi)
            value = circumradius(S, extra_directions=extra).radius
            ok = ok and abs(value - c.slab_radius) <= 1e-6
        details.append(f"R_{n}(K_{n})={cert.radius:.12f}")
    report(8.5, ok, "simplex difference body; " + "; ".join(details))


def test_criterion_09_non_reversibility():
    ok = True
    worst = np.inf
    for phi in ALL_PHIS:
        c = PhiConstants.from_phi(phi)
        bound = 1.0 / (2.0 * c.half_inverse)
        for kind, i_list in (("outer", (1, 2)), ("inner", (2, 3))):
            for i in i_list:
                results = check_no_reverse(kind, i, phi, 3, budget=EQ_BUDGET)
                rhs_zero = [r for r in results if "rhs-zero" in r.claim_id][0]
                lhs_pos = [r for r in results if "lhs-positive" in r.claim_id][0]
                ok = ok and abs(rhs_zero.lhs) <= 1e-9
                ok = ok and lhs_pos.lhs >= bound - 1e-6
                worst = min(worst, lhs_pos.lhs - bound)
    report(9, ok, f"non-reversibility witnesses in n=3: worst LHS margin {worst:.2e}")


def test_criterion_10_monotonicity_and_endpoints():
    budget = SearchBudget(starts=10, max_iters=25, angle_grid=8, seed=2)
    ok = True
    worst_mono = 0.0
    worst_endpoint = 0.0
    for k in range(20):
        body = make_random_polytope(4, 12, seed=(400, k))
        outer = successive_radii_profile(body, "outer", budget=budget)
        inner = successive_radii_profile(body, "inner", budget=budget)
        vo = [outer[i].value for i in range(1, 5)]
        vi = [inner[i].value for i in range(1, 5)]
        worst_mono = max(worst_mono,
                         max(vo[j] - vo[j + 1] for j in range(3)),
                         max(vi[j + 1] - vi[j] for j in range(3)))
        devs = [abs(vo[0] - width(body)[0] / 2),
                abs(vo[3] - circumradius(body).radius),
                abs(vi[0] - diameter(body)[0] / 2),
                abs(vi[3] - inradius_fixed_subspace(body).radius)]
        worst_endpoint = max(worst_endpoint, max(devs))
    ok = worst_mono <= 1e-6 and worst_endpoint <= 1e-6
    report(10, ok, f"monotone sweeps on 20 random 4-polytopes: worst violation "
                   f"{worst_mono:.2e}, endpoint dev {worst_endpoint:.2e}")


def test_criterion_11_full_suite():
    t0 = time.perf_counter()
    rep = run_suite(SuiteConfig())
    elapsed = time.perf_counter() - t0
    fails = [(r.claim_id, r.status, r.slack) for r in rep.failures]
    report(11, rep.exit_code == 0 and elapsed < 600.0,
           f"full verify suite: {len(rep.results)} claims, {len(rep.failures)} "
           f"not passing, {elapsed:.0f}s; failures: {fails[:5]}")
