import math

import numpy as np
import pytest

from bubblecalc import qform, special
from bubblecalc.qform import TestVector


def test_build_rejects_bad_inputs():
    with pytest.raises(ValueError, match="n-7"):
        qform.build_q(6, 0.0)
    with pytest.raises(ValueError):
        qform.build_q(7, -0.1)


def test_form_spot_values_at_flat_translation():
    q = qform.build_q(7, 0.0)
    assert q.form2[0, 0] == pytest.approx(49.0 * math.pi / 80.0, rel=1e-14)
    assert q.form2[0, 2] == pytest.approx(7.0 * math.pi / 80.0, rel=1e-14)
    assert q.form2[3, 3] == pytest.approx(35.0 * math.pi / 64.0, rel=1e-14)
    assert q.form1[0, 0] == pytest.approx(q.form2[0, 0], rel=1e-13)


@pytest.mark.parametrize("n", [7, 9, 12])
@pytest.mark.parametrize("t_c", [0.0, 0.5, 2.0])
def test_dual_forms_agree(n, t_c):
    q = qform.build_q(n, t_c)
    scale = 1.0 + np.max(np.abs(q.form2))
    assert np.max(np.abs(q.form1 - q.form2)) <= 1e-10 * scale
    assert np.allclose(q.form1, q.form1.T) and np.allclose(q.form2, q.form2.T)


@pytest.mark.parametrize("n", [7, 9, 12])
@pytest.mark.parametrize("t_c", [0.0, 1.0, 2.0])
def test_reduction_routes_agree(n, t_c):
    q = qform.build_q(n, t_c)
    product = qform.congruence_transform(q)
    scale = 1.0 + np.max(np.abs(q.q_bar))
    assert np.max(np.abs(product - q.q_bar)) <= 1e-10 * scale
    assert q.q_bar[2, 3] == 0.0
    assert abs(product[2, 3]) <= 1e-14
    assert q.q_bar[2, 2] == pytest.approx(special.j_integral(0, n - 3, t_c), abs=1e-14)


def test_quadratic_value_routes_and_spot():
    q = qform.build_q(7, 0.0)
    via_matrix, via_closed = qform.quadratic_value(q, TestVector(a=2.0 / 3.0, t_c=0.0))
    assert via_closed == pytest.approx(-math.pi / 72.0, abs=1e-15)
    assert via_matrix == pytest.approx(via_closed, abs=1e-12)
    # a = 1 kills the translation term and flips the sign
    _, center = qform.quadratic_value(q, TestVector(a=1.0, t_c=0.0))
    assert center == pytest.approx(math.pi / 16.0, rel=1e-14)
    with pytest.raises(ValueError):
        qform.quadratic_value(q, TestVector(a=0.5, t_c=1.0))


def test_admissible_interval_boundary():
    lo, hi = qform.admissible_interval()
    assert 7 * lo ** 2 - 8 * lo + 2 == pytest.approx(0.0, abs=1e-14)
    assert 7 * hi ** 2 - 8 * hi + 2 == pytest.approx(0.0, abs=1e-14)
    q = qform.build_q(9, 1.5)
    for a in (lo, hi):
        _, value = qform.quadratic_value(q, TestVector(a=a, t_c=1.5))
        ref = -((a - 1.0) ** 2 / 6.0) * 1.5 ** 3 * (1.0 + 1.5 ** 2) ** (-3.0)
        assert value == pytest.approx(ref, abs=1e-12)
        assert value < 0.0
    q0 = qform.build_q(9, 0.0)
    _, value = qform.quadratic_value(q0, TestVector(a=lo, t_c=0.0))
    assert value == pytest.approx(0.0, abs=1e-13)


def test_kappa_closed_forms():
    kappa = qform.build_kappa(7, 0.0)
    assert (kappa.kappa2, kappa.kappa1, kappa.kappa0) == pytest.approx((5.0 / 6.0, 0.0, 0.0))
    assert kappa.last == 1.0
    kappa = qform.build_kappa(9, 1.0)
    assert (kappa.kappa2, kappa.kappa1, kappa.kappa0) == pytest.approx((7.0 / 6.0, 3.5, 3.5))
    assert kappa.last == 1.0
    with pytest.raises(ValueError, match="admissible"):
        qform.build_kappa(7, 0.0, a=1.0)


def test_certificate_prefactor_positive():
    # n=7: omega_5 * B(5, 3) = pi^3 / 105
    assert qform.certificate_prefactor(7) == pytest.approx(math.pi ** 3 / 105.0, rel=1e-13)
    for n in range(7, 15):
        assert qform.certificate_prefactor(n) > 0.0


def test_kappa_q_kappa_spot_and_scale():
    assert qform.kappa_q_kappa(7, 0.0) == pytest.approx(-35.0 * math.pi / 288.0, abs=1e-12)
    assert qform.congruence_scale(7) == pytest.approx(8.75)
    q = qform.build_q(7, 0.0)
    _, via_closed = qform.quadratic_value(q, TestVector(a=2.0 / 3.0, t_c=0.0))
    assert qform.kappa_q_kappa(7, 0.0) == pytest.approx(
        qform.congruence_scale(7) * via_closed, rel=1e-12)


def test_certificate_small_grid():
    report = qform.negativity_certificate((7, 9), (0.0, 4.0), grid=21)
    assert report["negative_everywhere"]
    assert report["routes_consistent"]
    assert report["failures"] == []
    assert report["points"] == 42
    assert report["admissible_a"]


def test_certificate_reports_inadmissible_failure():
    report = qform.negativity_certificate((7,), (0.0, 2.0), a=1.0, grid=5)
    assert not report["admissible_a"]
    assert not report["negative_everywhere"]
    assert any(f["value"] >= 0.0 for f in report["failures"])


def test_certificate_validates_grid():
    with pytest.raises(ValueError):
        qform.negativity_certificate((7,), (1.0, 1.0), grid=5)
    with pytest.raises(ValueError):
        qform.negativity_certificate((7,), (0.0, 1.0), grid=1)


def test_entries_vary_smoothly_in_translation():
    qa = qform.build_q(8, 1.0)
    qb = qform.build_q(8, 1.0 + 1e-7)
    assert np.max(np.abs(qb.form2 - qa.form2)) <= 1e-5
