import numpy as np
import pytest

from orlicz_radii.phi import (PhiConstants, PhiParseError,
                              PhiValidationError, make_orlicz_function,
                              make_poly_phi, make_power_phi, parse_phi_descriptor,
                              phi_inverse, validate)

POWERS = [1.0, 1.5, 2.0, 3.0, 10.0]


def test_power_family_is_admissible():
    for p in POWERS:
        phi = make_power_phi(p)
        report = validate(phi)
        assert report.ok, (p, report)


def test_power_rejects_p_below_one():
    with pytest.raises(PhiValidationError):
        make_power_phi(0.9)


def test_validate_flags_concave():
    report = validate(lambda t: np.sqrt(np.asarray(t)))
    assert not report.convex_ok


def test_validate_flags_bad_endpoint():
    report = validate(lambda t: np.asarray(t) ** 2 / 2.0)
    assert not report.endpoints_ok
    with pytest.raises(PhiValidationError):
        make_orlicz_function(lambda t: np.asarray(t) ** 2 / 2.0, "halved")


def test_validate_passes_square():
    assert validate(lambda t: np.asarray(t) ** 2, grid_size=100, t_max=10.0).ok


def test_validate_flags_nonmonotone():
    report = validate(lambda t: np.asarray(t) * 0.0 + np.minimum(t, 1.0) ** 2)
    assert not report.monotone_ok


@pytest.mark.parametrize("p", POWERS)
def test_inverse_against_closed_form(p):
    # independent oracle: closed form for the power family
    phi = make_power_phi(p)
    for y in (0.1, 0.25, 0.5, 0.9):
        assert phi_inverse(phi, y) == pytest.approx(y ** (1.0 / p), abs=1e-12)
    assert phi_inverse(phi, 0.5) == pytest.approx(2.0 ** (-1.0 / p), abs=1e-12)


def test_inverse_endpoints_exact():
    phi = make_power_phi(3.0)
    assert phi_inverse(phi, 0.0) == 0.0
    assert phi_inverse(phi, 1.0) == 1.0


def test_inverse_rejects_out_of_range():
    phi = make_power_phi(2.0)
    with pytest.raises(ValueError):
        phi_inverse(phi, 1.5)
    with pytest.raises(ValueError):
        phi_inverse(phi, -0.1)


def test_poly_closed_form_inverse():
    # (t + t^2)/2 = y  solves to  t = (-1 + sqrt(1 + 8y)) / 2
    phi = make_poly_phi(0.5, 0.5)
    ys = np.linspace(0.0, 1.0, 33)
    expected = (-1.0 + np.sqrt(1.0 + 8.0 * ys)) / 2.0
    got = phi_inverse(phi, ys)
    assert np.max(np.abs(got - expected)) < 1e-12
    assert phi_inverse(phi, 0.5) == pytest.approx((np.sqrt(5) - 1) / 2, abs=1e-13)


def test_poly_requires_normalization():
    with pytest.raises(PhiValidationError):
        make_poly_phi(0.4, 0.7)
    with pytest.raises(PhiValidationError):
        make_poly_phi(-0.2, 1.2)


def test_phi_below_identity_on_unit_interval():
    grid = np.linspace(0.0, 1.0, 257)
    for phi in [make_power_phi(p) for p in POWERS] + [make_poly_phi(0.5, 0.5)]:
        assert np.all(phi(grid) <= grid + 1e-12)


def test_inverse_of_phi_is_identity():
    grid = np.linspace(0.0, 1.0, 65)
    for phi in (make_power_phi(1.5), make_poly_phi(0.5, 0.5)):
        back = phi_inverse(phi, phi(grid))
        assert np.max(np.abs(back - grid)) < 2e-12


def test_pointwise_order_reverses_inverse():
    # t^3 <= t^1.5 on [0, 1], so the inverses order the other way
    lo, hi = make_power_phi(3.0), make_power_phi(1.5)
    ys = np.linspace(0.0, 1.0, 41)
    assert np.all(phi_inverse(lo, ys) >= phi_inverse(hi, ys) - 1e-12)


def test_constants_invariants():
    for phi in [make_power_phi(p) for p in POWERS] + [make_poly_phi(0.5, 0.5)]:
        c = PhiConstants.from_phi(phi)
        assert 0.5 <= c.half_inverse < 1.0
        assert abs(float(phi(c.half_inverse)) - 0.5) < 1e-11
        assert c.slab_radius == pytest.approx(np.sqrt(2) / (2 * c.half_inverse), rel=0)


def test_slab_radius_examples():
    # Minkowski case: the sum of orthogonal unit segments is the square,
    # circumradius sqrt(2)
    assert PhiConstants.from_phi(make_power_phi(1.0)).slab_radius == pytest.approx(np.sqrt(2))
    assert PhiConstants.from_phi(make_power_phi(2.0)).slab_radius == pytest.approx(1.0)


def test_descriptor_round_trip():
    for text in ("power:p=2.0", "poly:c1=0.5,c2=0.5"):
        phi = parse_phi_descriptor(text)
        assert phi.descriptor == text
        assert float(phi(1.0)) == pytest.approx(1.0, abs=1e-15)


def test_descriptor_errors():
    for bad in ("power", "power:q=2", "gauss:s=1", "poly:c1=0.5", "power:p=abc"):
        with pytest.raises(PhiParseError):
            parse_phi_descriptor(bad)
