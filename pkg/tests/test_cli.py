import subprocess
import sys

import numpy as np
import pytest

from orlicz_radii.bodies import make_cube, make_random_polytope, make_segment
from orlicz_radii.cli import RunConfig
from orlicz_radii.io import read_body, write_body


def run_cli(*args):
    return subprocess.run([sys.executable, "-m", "orlicz_radii.cli", *args],
                          capture_output=True, text=True)


@pytest.fixture
def seg_files(tmp_path):
    a = tmp_path / "seg1.body"
    b = tmp_path / "seg2.body"
    write_body(make_segment([-1.0, 0.0], [1.0, 0.0]), a)
    write_body(make_segment([0.0, -1.0], [0.0, 1.0]), b)
    return str(a), str(b)


def test_sum_minkowski_square(seg_files, tmp_path):
    out = tmp_path / "table.txt"
    res = run_cli("sum", *seg_files, "power:p=1.0", "--out", str(out), "--resolution", "8")
    assert res.returncode == 0, res.stderr
    rows = [ln.split() for ln in out.read_text().splitlines() if not ln.startswith("#")]
    data = np.array([[float(v) for v in row] for row in rows])
    diag = data[np.argmax(data[:, 0] + data[:, 1])]
    assert diag[-1] == pytest.approx(np.sqrt(2), abs=1e-10)


def test_boundary_p2_is_unit_circle(seg_files, tmp_path):
    out = tmp_path / "poly.txt"
    res = run_cli("boundary", *seg_files, "--phi", "power:p=2.0",
                  "--resolution", "64", "--out", str(out))
    assert res.returncode == 0, res.stderr
    rows = [ln.split() for ln in out.read_text().splitlines() if not ln.startswith("#")]
    pts = np.array([[float(v) for v in row] for row in rows])
    assert np.allclose(pts[0], pts[-1])  # closed
    norms = np.linalg.norm(pts, axis=1)
    bound = np.sqrt(2) / (2 * 2 ** -0.5)
    assert norms.max() <= bound + 1e-9


def test_radii_table_on_cube(tmp_path):
    path = tmp_path / "cube.body"
    write_body(make_cube([1, 2, 3], 1.0, dim=3), path)
    res = run_cli("radii", str(path), "--successive", "--starts", "4", "--iters", "10")
    assert res.returncode == 0, res.stderr
    assert "circumradius" in res.stdout
    tail = res.stdout.split("[machine]", 1)[1]
    machine = {ln.split("=")[0]: float(ln.split("=")[1])
               for ln in tail.splitlines() if "=" in ln}
    assert machine["circumradius"] == pytest.approx(np.sqrt(3), abs=1e-9)
    assert machine["width"] == pytest.approx(2.0, abs=1e-9)


def test_verify_subcommand_exit_zero(tmp_path):
    report = tmp_path / "report.txt"
    res = run_cli("verify", "--claims", "lp-constant", "lemma-1.4",
                  "--phi", "power:p=2.0", "--dims", "2", "--report", str(report))
    assert res.returncode == 0, res.stderr
    assert report.read_text().startswith("# orlicz-radii verification report")


def test_verify_zero_tolerance_fails(tmp_path):
    res = run_cli("verify", "--claims", "selfsum-scaling", "--phi", "power:p=2.0",
                  "--dims", "2", "--tolerance-scale", "0", "--report", str(tmp_path / "r.txt"))
    assert res.returncode == 1


def test_usage_error_exit_2():
    assert run_cli().returncode == 2
    assert run_cli("frobnicate").returncode == 2


def test_parse_error_exit_3(seg_files):
    a, b = seg_files
    assert run_cli("sum", a, b, "power:q=2").returncode == 3
    assert run_cli("sum", a, "/nonexistent.body", "power:p=2.0").returncode == 3


def test_math_domain_error_exit_4(seg_files, tmp_path):
    a, _ = seg_files
    c = tmp_path / "cube3.body"
    write_body(make_cube([1, 2, 3], 1.0, dim=3), c)
    res = run_cli("sum", a, str(c), "power:p=2.0")
    assert res.returncode == 4
    assert "math-domain" in res.stderr


def test_byte_identical_reruns(seg_files, tmp_path):
    out1, out2 = tmp_path / "a.txt", tmp_path / "b.txt"
    for out in (out1, out2):
        res = run_cli("sum", *seg_files, "poly:c1=0.5,c2=0.5",
                      "--resolution", "32", "--out", str(out))
        assert res.returncode == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_help_lists_defaults():
    res = run_cli("radii", "--help")
    assert res.returncode == 0
    assert "default 64" in res.stdout and "default 200" in res.stdout


def test_body_file_round_trip_bit_exact(tmp_path):
    body = make_random_polytope(3, 12, seed=42)
    p1, p2 = tmp_path / "a.body", tmp_path / "b.body"
    write_body(body, p1)
    again = read_body(p1)
    assert np.array_equal(again.vertices, body.vertices)
    write_body(again, p2)
    assert p1.read_bytes() == p2.read_bytes()


def test_named_body_round_trip(tmp_path):
    from orlicz_radii.bodies import make_simplex_Kn, make_slab_body
    for body in (make_cube([1, 3], 0.75, dim=3), make_simplex_Kn(2),
                 make_slab_body(1, [3], dim=3),
                 make_segment([-1.0, 0.5], [1.0, -0.25])):
        path = tmp_path / "named.body"
        write_body(body, path)
        again = read_body(path)
        assert again.meta.get("ctor") == body.meta.get("ctor")
        assert np.allclose(np.sort(again.vertices, axis=0),
                           np.sort(body.vertices, axis=0))
        write_body(again, tmp_path / "named2.body")
        assert path.read_bytes() == (tmp_path / "named2.body").read_bytes()


def test_hrep_file_round_trip(tmp_path):
    body = make_cube([1, 2], 1.0, dim=2)
    A, b = body.halfspaces()
    from orlicz_radii.bodies import ConvexBody
    hbody = ConvexBody(2, halfspaces=(A, b))
    path = tmp_path / "h.body"
    write_body(hbody, path)
    again = read_body(path)
    assert again.support([1.0, 0.0]) == pytest.approx(1.0, abs=1e-9)


def test_runconfig_round_trip():
    config = RunConfig(seed=7, starts=12, iters=33, step_tol=1e-6)
    again = RunConfig.from_text(config.to_text())
    assert again == config


def test_runconfig_validation():
    with pytest.raises(ValueError):
        RunConfig(starts=0)
    with pytest.raises(ValueError):
        RunConfig(step_tol=-1.0)
