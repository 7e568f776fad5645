import math

import pytest

from bubblecalc.quadrature import (
    QuadratureError,
    QuadratureSpec,
    integrate_half_line,
    integrate_interval,
    integrate_tan_half_line,
)


def test_spec_validation():
    with pytest.raises(ValueError):
        QuadratureSpec(rel_tol=1e-14)
    with pytest.raises(ValueError):
        QuadratureSpec(abs_tol=0.0)
    with pytest.raises(ValueError):
        QuadratureSpec(max_depth=0)
    spec = QuadratureSpec(rel_tol=1e-11, mc_samples=10)
    assert spec.mc_samples == 10


def test_interval_accuracy():
    value = integrate_interval(math.sin, 0.0, math.pi)
    assert value == pytest.approx(2.0, rel=1e-12)


def test_half_line_accuracy():
    value = integrate_half_line(lambda x: math.exp(-x))
    assert value == pytest.approx(1.0, rel=1e-11)


def test_tan_substitution_route():
    # integral of (1+(z-1)^2)^(-2) over [0, inf) in the theta variable
    value = integrate_tan_half_line(lambda th: math.cos(th) ** 2, 1.0)
    direct = integrate_half_line(lambda z: (1.0 + (z - 1.0) ** 2) ** -2)
    assert value == pytest.approx(direct, rel=1e-11)


def test_nonconvergence_reports_achieved_error():
    # an oscillatory integrand QUADPACK cannot resolve at this depth
    spec = QuadratureSpec(max_depth=3)
    with pytest.raises(QuadratureError) as excinfo:
        integrate_interval(lambda x: math.sin(1.0 / (x + 1e-12)), 0.0, 1.0, spec)
    assert excinfo.value.achieved is not None
    assert excinfo.value.achieved > 0.0
