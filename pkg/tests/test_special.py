import math
from concurrent.futures import ThreadPoolExecutor

import pytest

from bubblecalc import special


def test_log_gamma_matches_reference():
    for x in (0.5, 1.0, 1.5, 2.0, 3.0, 4.75, 7.0, 10.5, 15.0, 25.0, 40.0):
        assert abs(special.log_gamma(x) - math.lgamma(x)) <= 1e-13 * (1.0 + abs(math.lgamma(x)))


def test_gamma_small_integers():
    assert special.gamma(1.0) == pytest.approx(1.0, rel=1e-14)
    assert special.gamma(5.0) == pytest.approx(24.0, rel=1e-13)
    assert special.gamma(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-13)


@pytest.mark.parametrize("x", [0.0, -1.0, -3.5])
def test_gamma_rejects_nonpositive(x):
    with pytest.raises(ValueError):
        special.log_gamma(x)


def test_beta_values():
    assert special.beta(1.0, 1.0) == pytest.approx(1.0, rel=1e-13)
    assert special.beta(0.5, 0.5) == pytest.approx(math.pi, rel=1e-13)
    assert special.beta(5.0, 3.0) == pytest.approx(1.0 / 105.0, rel=1e-13)


def test_beta_symmetry():
    for a, b in ((0.7, 2.3), (1.5, 4.0), (3.25, 9.5), (0.5, 12.0)):
        assert special.beta(a, b) == pytest.approx(special.beta(b, a), rel=1e-14)


def test_beta_halfinteger_ratio():
    # B((n+1)/2, (n-1)/2) = (2n/(n+1)) B((n+3)/2, (n-1)/2)
    for n in range(7, 21):
        lhs = special.beta(0.5 * (n + 1), 0.5 * (n - 1))
        rhs = 2.0 * n / (n + 1) * special.beta(0.5 * (n + 3), 0.5 * (n - 1))
        assert abs(lhs - rhs) <= 1e-12 * rhs


def test_beta_against_integral_oracle():
    for a, b in ((1.0, 1.0), (0.5, 0.5), (2.5, 3.5), (4.0, 3.0), (5.0, 0.5)):
        oracle = special.beta_integral_oracle(a, b)
        assert abs(special.beta(a, b) - oracle) <= 1e-10 * oracle


def test_beta_rejects_nonpositive():
    with pytest.raises(ValueError):
        special.beta(0.0, 1.0)
    with pytest.raises(ValueError):
        special.beta(1.0, -2.0)


def test_sphere_volume_values():
    assert special.sphere_volume(1) == pytest.approx(2.0 * math.pi, rel=1e-13)
    assert special.sphere_volume(2) == pytest.approx(4.0 * math.pi, rel=1e-13)
    assert special.sphere_volume(3) == pytest.approx(2.0 * math.pi ** 2, rel=1e-13)
    assert special.sphere_volume(5) == pytest.approx(math.pi ** 3, rel=1e-13)


def test_sphere_volume_recurrence():
    # omega_k = (2 pi / (k-1)) omega_{k-2}
    for k in range(3, 15):
        ratio = special.sphere_volume(k) / special.sphere_volume(k - 2)
        assert ratio == pytest.approx(2.0 * math.pi / (k - 1), rel=1e-13)


def test_sphere_volume_rejects_bad_index():
    with pytest.raises(ValueError):
        special.sphere_volume(-1)
    with pytest.raises(ValueError):
        special.sphere_volume(2.5)


@pytest.mark.parametrize("t_c", [0.0, 0.5, 1.0, 2.0, 5.0, -1.0])
def test_j_base_cases(t_c):
    s = 1.0 + t_c ** 2
    table = special.TrigIntegralTable(t_c)
    assert table.value(0, 0) == pytest.approx(0.5 * math.pi + math.atan(t_c), abs=1e-15)
    assert table.value(1, 0) == pytest.approx(1.0 / math.sqrt(s), abs=1e-15)
    assert table.value(0, 1) == pytest.approx(1.0 + t_c / math.sqrt(s), abs=1e-15)
    assert table.value(1, 1) == pytest.approx(0.5 / s, abs=1e-15)


def test_j_spot_values():
    assert special.j_integral(0, 0, 0.0) == pytest.approx(0.5 * math.pi, abs=1e-15)
    assert special.j_integral(2, 0, 0.0) == pytest.approx(0.25 * math.pi, abs=1e-15)
    assert special.j_integral(0, 2, 1.0) == pytest.approx(0.25 + 3.0 * math.pi / 8.0, abs=1e-15)
    # Wallis values on [0, pi/2]
    assert special.j_integral(4, 0, 0.0) == pytest.approx(3.0 * math.pi / 16.0, abs=1e-15)
    assert special.j_integral(2, 2, 0.0) == pytest.approx(math.pi / 16.0, abs=1e-15)


def test_j_oracle_spot_values():
    assert special.j_integral_oracle(0, 0, 1.0) == pytest.approx(0.75 * math.pi, rel=1e-12)
    assert special.j_integral_oracle(4, 0, 0.0) == pytest.approx(3.0 * math.pi / 16.0, rel=1e-12)
    assert special.j_integral_oracle(1, 1, 0.0) == pytest.approx(0.5, rel=1e-12)


@pytest.mark.parametrize("t_c", [0.0, 0.7, 2.0, -0.8])
def test_j_recursion_matches_quadrature(t_c):
    table = special.TrigIntegralTable(t_c)
    for k in range(7):
        for l in range(7):
            direct = special.j_integral_oracle(k, l, t_c)
            assert abs(table.value(k, l) - direct) <= 1e-10 * (1.0 + abs(direct))


@pytest.mark.parametrize("t_c", [0.0, 0.5, 1.0, 2.0, 5.0])
def test_j_raising_identities(t_c):
    table = special.TrigIntegralTable(t_c)
    s = 1.0 + t_c ** 2
    for k in range(9):
        for l in range(9):
            d = k + l + 2
            boundary = t_c ** (k + 1) / (d * s ** (0.5 * d))
            got = table.value(k + 2, l) - (k + 1) / d * table.value(k, l)
            assert abs(got - (-1.0) ** (k + 1) * boundary) <= 1e-12
            got = table.value(k, l + 2) - (l + 1) / d * table.value(k, l)
            assert abs(got - (-1.0) ** k * boundary) <= 1e-12


def test_j_even_entries_positive():
    for t_c in (0.0, 1.0, 5.0):
        table = special.TrigIntegralTable(t_c)
        for k in range(0, 11, 2):
            for l in range(0, 11, 2):
                assert table.value(k, l) > 0.0


def test_j_rejects_negative_indices():
    with pytest.raises(ValueError):
        special.j_integral(-1, 0, 0.0)
    with pytest.raises(ValueError):
        special.j_integral_oracle(0, -2, 0.0)


def test_negative_t_c_extends_naturally():
    # interval shrinks to [arctan(1), pi/2]
    assert special.j_integral(0, 0, -1.0) == pytest.approx(0.25 * math.pi, abs=1e-15)
    direct = special.j_integral_oracle(3, 2, -1.0)
    assert special.j_integral(3, 2, -1.0) == pytest.approx(direct, abs=1e-12)


def test_table_memoizes():
    table = special.TrigIntegralTable(0.5)
    before = len(table.snapshot())
    table.value(6, 7)
    after = len(table.snapshot())
    assert after > before
    assert table.value(6, 7) == table.snapshot()[(6, 7)]


def test_table_concurrent_reads_consistent():
    table = special.TrigIntegralTable(1.3)
    with ThreadPoolExecutor(max_workers=8) as pool:
        results = list(pool.map(lambda _: table.value(8, 9), range(64)))
    assert len(set(results)) == 1
    assert results[0] == pytest.approx(special.j_integral_oracle(8, 9, 1.3), rel=1e-10)
