import math

import pytest

from bubblecalc import moments, mountain
from bubblecalc.mountain import EnergyTriple, PerturbationTriple


def test_triple_validation():
    with pytest.raises(ValueError):
        EnergyTriple(n=2, e_cal=1.0, a_cal=1.0, b_cal=0.0)
    with pytest.raises(ValueError):
        EnergyTriple(n=5, e_cal=1.0, a_cal=0.0, b_cal=0.0)


def test_fiber_map_shape():
    triple = EnergyTriple(n=5, e_cal=1.0, a_cal=1.0, b_cal=0.5)
    assert mountain.eval_f(triple, 0.0) == 0.0
    assert mountain.eval_f(triple, 100.0) < 0.0
    with pytest.raises(ValueError):
        mountain.eval_f(triple, -0.1)


def test_maximizer_spots():
    assert mountain.t_star(EnergyTriple(n=6, e_cal=3.0, a_cal=3.0, b_cal=0.0)) \
        == pytest.approx(1.0, abs=1e-14)
    assert mountain.t_star(EnergyTriple(n=7, e_cal=2.0, a_cal=1.0, b_cal=1.0)) \
        == pytest.approx(1.0, abs=1e-14)
    with pytest.raises(ValueError):
        mountain.t_star(EnergyTriple(n=7, e_cal=0.0, a_cal=1.0, b_cal=0.0))


def test_maximizer_is_stationary_and_max():
    triple = EnergyTriple(n=8, e_cal=2.7, a_cal=0.9, b_cal=-1.2)
    t = mountain.t_star(triple)
    assert abs(mountain.f_prime(triple, t)) <= 1e-10 * (1.0 + abs(mountain.eval_f(triple, t)))
    assert mountain.f_second(triple, t) < 0.0


def test_maximizer_against_golden_section():
    import numpy as np

    rng = np.random.default_rng(7)
    for _ in range(100):
        triple = EnergyTriple(
            n=int(rng.integers(3, 11)),
            e_cal=float(rng.uniform(0.3, 5.0)),
            a_cal=float(rng.uniform(0.3, 5.0)),
            b_cal=float(rng.uniform(-2.0, 2.0)),
        )
        t_closed = mountain.t_star(triple)
        t_golden = mountain.golden_section_max(lambda t: mountain.eval_f(triple, t))
        assert abs(t_closed - t_golden) <= 1e-8


def test_max_value_monotone_in_energy():
    lo = mountain.max_value(EnergyTriple(n=7, e_cal=1.0, a_cal=2.0, b_cal=0.7))
    hi = mountain.max_value(EnergyTriple(n=7, e_cal=1.5, a_cal=2.0, b_cal=0.7))
    assert hi > lo


def test_flat_triple_reproduces_threshold_level():
    for n, c in ((3, -1.0), (7, 2.0), (9, 0.0)):
        t_c = -c / (n - 2)
        a_val = moments.compute_A(n, t_c)
        b_val = moments.compute_B(n, t_c)
        triple = mountain.flat_triple(n, a_val, b_val, c)
        assert mountain.t_star(triple) == pytest.approx(1.0, abs=1e-12)
        s_c, _ = moments.compute_Sc(n, c)
        assert mountain.max_value(triple) == pytest.approx(s_c, rel=1e-10)


def test_expansion_unperturbed_is_exact():
    a_val = moments.compute_A(7, 0.2)
    b_val = moments.compute_B(7, 0.2)
    predicted, exact = mountain.expand_max_energy(7, a_val, b_val, -1.0, PerturbationTriple())
    assert predicted == pytest.approx(exact, rel=1e-13)


def test_expansion_spot_without_volume_perturbation():
    a_val = moments.compute_A(7, 0.2)
    b_val = moments.compute_B(7, 0.2)
    predicted, exact = mountain.expand_max_energy(
        7, a_val, b_val, -1.0, PerturbationTriple(b_tilde=0.02, e_tilde=0.01))
    assert abs(exact - predicted) <= 1e-5


def test_expansion_decade_decay():
    from bubblecalc.suites import expansion_decay_factors

    for n in (7, 8):
        for c in (-1.0, 0.0, 1.0):
            assert min(expansion_decay_factors(n, c)) >= 10.0


def test_expansion_rejects_bad_inputs():
    with pytest.raises(ValueError):
        mountain.expand_max_energy(5, 1.0, 1.0, 0.0, PerturbationTriple())
    with pytest.raises(ValueError):
        mountain.expand_max_energy(7, 0.001, 1.0, -1.0, PerturbationTriple())


def test_lambda_const():
    a_val = moments.compute_A(7, 0.0)
    assert mountain.lambda_const(7, 0.0, a_val, 1.0) == pytest.approx(
        1.0 / (210.0 * a_val), rel=1e-13)
    assert mountain.lambda_const(7, 0.0, 2.0 * a_val, 1.0) == pytest.approx(
        0.5 / (210.0 * a_val), rel=1e-13)
    with pytest.raises(ValueError):
        mountain.lambda_const(7, -100.0, 0.001, 1.0)


def test_theorem_chain():
    lhs, mid, rhs = mountain.scalar_chain(7, 0.0)
    assert lhs == 0.0
    assert mid == pytest.approx(1.0 / 12.0, abs=1e-15)
    assert rhs == pytest.approx(9.0 / 20.0, abs=1e-15)
    lhs, mid, rhs = mountain.scalar_chain(10, 1.0)
    assert mid == pytest.approx(1.0 / 18.0, abs=1e-15)
    assert rhs == pytest.approx(12.0 / 32.0, abs=1e-15)
    assert lhs <= mid < rhs
    lhs, mid, rhs = mountain.scalar_chain(7, 3.0)
    assert lhs <= mid < rhs
    with pytest.raises(ValueError):
        mountain.scalar_chain(7, -0.5)
    with pytest.raises(ValueError):
        mountain.scalar_chain(6, 1.0)
