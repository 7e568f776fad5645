import math

import pytest

from bubblecalc import cap, moments, special


def test_cap_from_c_validation():
    with pytest.raises(ValueError):
        cap.cap_from_c(7, 0.0)
    with pytest.raises(ValueError):
        cap.cap_from_c(7, 1.0)
    with pytest.raises(ValueError):
        cap.cap_from_c(2, -1.0)


def test_cap_angle_spot():
    geometry = cap.cap_from_c(9, -(9 - 2))
    assert geometry.t_c == pytest.approx(1.0)
    assert geometry.r == pytest.approx(0.75 * math.pi, abs=1e-14)
    assert math.pi / 2 < geometry.r < math.pi


def test_cap_volume_matches_boundary_volume():
    for n in (3, 5, 7, 10):
        for c in (-0.3, -2.0, -6.0):
            geometry = cap.cap_from_c(n, c)
            assert geometry.b_cap == pytest.approx(moments.compute_B(n, geometry.t_c),
                                                   rel=1e-13)
            assert geometry.b_cap == pytest.approx(moments.compute_B_quad(n, geometry.t_c),
                                                   rel=1e-8)


def test_cap_flat_limit():
    geometry = cap.cap_from_c(7, -1e-10)
    assert geometry.r == pytest.approx(0.5 * math.pi, abs=1e-9)
    assert geometry.b_cap == pytest.approx(2.0 ** -6 * special.sphere_volume(6), rel=1e-9)


def test_angle_roundtrip():
    for n in (7, 10):
        for r in (0.5 * math.pi + 0.2, 0.75 * math.pi, math.pi - 0.3):
            c = cap.c_of_angle(n, r)
            assert c < 0.0
            assert cap.cap_from_c(n, c).r == pytest.approx(r, abs=1e-12)


def test_boundary_volume_identities():
    for n, c in ((7, -1.0), (9, -3.0), (12, -0.2)):
        lhs1, rhs1, lhs2, rhs2 = cap.boundary_volume_identities(cap.cap_from_c(n, c))
        assert lhs1 == pytest.approx(rhs1, rel=1e-10)
        assert lhs2 == pytest.approx(rhs2, rel=1e-10)
    # r = 3pi/4: cos r = -sqrt(2)/2
    geometry = cap.cap_from_c(7, -5.0)
    lhs1, rhs1, _, _ = cap.boundary_volume_identities(geometry)
    expected = 0.5 * 5 * special.sphere_volume(6) ** (1.0 / 6.0) * (-math.sqrt(2.0) / 2.0)
    assert lhs1 == pytest.approx(expected, rel=1e-12)


def test_inequality_near_flat_holds():
    lhs, rhs, holds = cap.threshold_inequality(cap.cap_from_c(7, -1e-8))
    assert holds
    assert lhs > 0.0
    assert abs(rhs) < 1e-12


def test_trig_form_coefficients_n7():
    lhs, rhs, _ = cap.trig_inequality(7, 2.0)
    assert lhs == pytest.approx(1.0 + (6.0 * 59.0 / 5.0) * math.cos(2.0), rel=1e-13)
    assert rhs == pytest.approx(
        (64.0 / (5.0 * math.pi)) * math.cos(2.0) ** 2 * math.sin(2.0) ** 5, rel=1e-13)


def test_both_forms_agree_on_grid():
    from bubblecalc.suites import audit_threshold_forms

    assert audit_threshold_forms(7, 2000) == 0
    assert audit_threshold_forms(10, 2000) == 0


def test_find_c0_brackets_the_threshold():
    for n in (7, 9, 12):
        c0 = cap.find_c0(n, tol=1e-8)
        assert c0 > 0.0
        assert cap.threshold_inequality(cap.cap_from_c(n, -c0 * (1.0 - 1e-4)))[2]
        assert not cap.threshold_inequality(cap.cap_from_c(n, -c0 * (1.0 + 1e-4)))[2]


def test_find_c0_stability_and_validation():
    coarse = cap.find_c0(7, tol=1e-8, grid=1000)
    fine = cap.find_c0(7, tol=1e-8, grid=10_000)
    assert abs(coarse - fine) <= 1e-6
    with pytest.raises(ValueError):
        cap.find_c0(6)
    with pytest.raises(ValueError):
        cap.find_c0(7, tol=0.0)


def test_inequality_holds_just_past_halfpi():
    for n in range(7, 13):
        assert cap.trig_inequality(n, 0.5 * math.pi + 1e-6)[2]


def test_volume_lower_bound():
    for n, c in ((3, -0.5), (7, -1.0), (10, -4.0)):
        a_val, bound, holds = cap.a_lower_bound(n, c)
        assert holds
        assert a_val > bound
    with pytest.raises(ValueError):
        cap.a_lower_bound(7, 0.0)


def test_sharp_trace_constant():
    assert cap.sharp_trace_constant(3) == pytest.approx(math.sqrt(math.pi), rel=1e-13)
    assert cap.sharp_trace_constant(7) == pytest.approx(
        2.5 * special.sphere_volume(6) ** (1.0 / 6.0), rel=1e-14)
