import math

import numpy as np
import pytest

from bubblecalc import sphere, special


def test_homogeneity_helper():
    rng = np.random.default_rng(3)
    q = sphere.coordinate_power_poly(0, 4)
    assert sphere.homogeneity_gap(q, 6, rng) <= 1e-12


def test_average_identity_square_matches_closed_value():
    # int (y^1)^2 over S^3 = omega_3 / 4 = pi^2/2; the right side is exact
    # because the Laplacian is constant
    res = sphere.sphere_average_identity(sphere.coordinate_power_poly(0, 2), 5, 1.0,
                                         n_samples=200_000, seed=11)
    assert res.rhs == pytest.approx(math.pi ** 2 / 2.0, rel=1e-12)
    assert abs(res.lhs - res.rhs) <= 3.0 * res.stderr


def test_average_identity_quartic():
    res = sphere.sphere_average_identity(sphere.coordinate_power_poly(0, 4), 7, 1.0,
                                         n_samples=200_000, seed=11)
    assert abs(res.lhs - res.rhs) <= 3.0 * res.stderr
    # both Monte-Carlo sides sit near the exact value omega_5/16
    assert res.rhs == pytest.approx(special.sphere_volume(5) / 16.0, rel=0.02)


def test_average_identity_harmonic_vanishes():
    m = np.zeros((6, 6))
    m[0, 0] = 1.0
    m[1, 1] = -1.0
    res = sphere.sphere_average_identity(sphere.quadratic_form_poly(m), 7, 1.0,
                                         n_samples=200_000, seed=11)
    assert res.rhs == 0.0
    assert abs(res.lhs) <= 3.0 * res.stderr


def test_average_identity_rejects_degree_zero():
    q = sphere.HomogeneousPolynomial(degree=0, evaluate=lambda pts: np.ones(len(pts)),
                                     laplacian=lambda pts: np.zeros(len(pts)))
    with pytest.raises(ValueError):
        sphere.sphere_average_identity(q, 7, 1.0, n_samples=10, seed=1)


def test_quartic_moment_spot():
    m = np.zeros((6, 6))
    m[0, 0] = 1.0
    m[1, 1] = -1.0
    assert sphere.quartic_tensor_moment(m, 7, 1.0) == pytest.approx(math.pi ** 3 / 12.0,
                                                                    rel=1e-13)
    assert sphere.quartic_tensor_moment(np.zeros((6, 6)), 7, 1.0) == 0.0


def test_quartic_moment_validation():
    with pytest.raises(ValueError, match="trace"):
        sphere.quartic_tensor_moment(np.eye(6), 7, 1.0)
    bad = np.zeros((6, 6))
    bad[0, 1] = 1.0
    with pytest.raises(ValueError, match="symmetric"):
        sphere.quartic_tensor_moment(bad, 7, 1.0)
    with pytest.raises(ValueError):
        sphere.quartic_tensor_moment(np.zeros((5, 5)), 7, 1.0)


def test_quadratic_moment_values():
    m = np.zeros((6, 6))
    m[0, 0] = 1.0
    m[1, 1] = -1.0
    assert sphere.quadratic_tensor_moment(m, 7, 1.0) == 0.0
    assert sphere.quadratic_tensor_moment(np.eye(5), 6, 1.0) == pytest.approx(
        special.sphere_volume(4), rel=1e-13)


def test_double_average_route_equals_closed_form():
    rng = np.random.default_rng(19)
    for n in (5, 6, 7, 8, 9):
        for r in (0.5, 1.0, 2.0):
            m = sphere.random_trace_free_symmetric(n - 1, rng)
            closed = sphere.quartic_tensor_moment(m, n, r)
            chain = sphere.quartic_by_double_average(m, n, r)
            assert chain == pytest.approx(closed, rel=1e-9)


def test_moments_against_monte_carlo():
    rng = np.random.default_rng(23)
    for idx, n in enumerate((6, 7, 8)):
        m = sphere.random_trace_free_symmetric(n - 1, rng)
        closed = sphere.quartic_tensor_moment(m, n, 1.0)
        (lin_est, lin_se), (sq_est, sq_se) = sphere.mc_tensor_moments_both(
            m, n, 1.0, n_samples=200_000, seed=100 + idx)
        assert abs(sq_est - closed) <= 3.0 * sq_se
        assert abs(lin_est) <= 3.0 * lin_se
    general = np.eye(5) + 0.3
    est, stderr = sphere.mc_tensor_moment(general, 6, 1.5, power=1,
                                          n_samples=200_000, seed=9)
    assert abs(est - sphere.quadratic_tensor_moment(general, 6, 1.5)) <= 3.0 * stderr


def test_radius_scaling():
    rng = np.random.default_rng(29)
    m = sphere.random_trace_free_symmetric(6, rng)
    assert sphere.quartic_tensor_moment(m, 7, 2.0) / sphere.quartic_tensor_moment(m, 7, 1.0) \
        == pytest.approx(2.0 ** 9, rel=1e-12)
    assert sphere.quadratic_tensor_moment(np.eye(6), 7, 3.0) \
        / sphere.quadratic_tensor_moment(np.eye(6), 7, 1.0) == pytest.approx(3.0 ** 7, rel=1e-12)


def test_random_trace_free_matrices_are_admissible():
    rng = np.random.default_rng(31)
    for dim in (4, 6, 8):
        m = sphere.random_trace_free_symmetric(dim, rng)
        assert abs(np.trace(m)) <= 1e-12
        assert np.max(np.abs(m - m.T)) == 0.0
