"""The 4x4 boundary-energy quadratic form, its congruence reduction, and the
negativity certificate for the test-vector family.

Every entry of the form is carried in two equivalent expressions: one in
terms of the rational integrals I_0/I_1/I_2 plus explicit t_c powers, one in
pure J-table terms.  Their entrywise equality exercises the second raising
recursion; the closed form of the reduced quadratic value exercises the first.
"""

import math
from dataclasses import dataclass

import numpy as np

from .special import TrigIntegralTable, beta, sphere_volume

KAPPA_A_DEFAULT = 2.0 / 3.0


@dataclass(frozen=True)
class QForm:
    """Both expression forms of the 4x4 matrix plus the explicit reduced matrix."""

    n: int
    t_c: float
    form1: np.ndarray
    form2: np.ndarray
    q_bar: np.ndarray


@dataclass(frozen=True)
class KappaVector:
    """Certificate vector (kappa2, kappa1, kappa0, 1); the last entry is pinned to 1."""

    kappa2: float
    kappa1: float
    kappa0: float
    last: float = 1.0

    def as_array(self):
        return np.array([self.kappa2, self.kappa1, self.kappa0, self.last])


@dataclass(frozen=True)
class TestVector:
    """Reduced-coordinates test vector (a, t_c, 0, 1)."""

    __test__ = False  # not a pytest class despite the name

    a: float
    t_c: float

    @property
    def admissible(self):
        return 7.0 * self.a ** 2 - 8.0 * self.a + 2.0 < 0.0

    def as_array(self):
        return np.array([self.a, self.t_c, 0.0, 1.0])


def admissible_interval():
    """Open interval of admissible a: ((4-sqrt(2))/7, (4+sqrt(2))/7)."""
    root = math.sqrt(2.0)
    return (4.0 - root) / 7.0, (4.0 + root) / 7.0


def s1_matrix(n):
    return np.diag([1.0, 1.0, 1.0, -2.0 / (n - 2)])


def s2_matrix(t_c):
    s2 = np.eye(4)
    s2[0, 3] = -1.0
    s2[1, 3] = -2.0 * t_c
    s2[2, 3] = -t_c ** 2
    return s2


def _symmetric(entries):
    m = np.zeros((4, 4))
    for (i, j), v in entries.items():
        m[i - 1, j - 1] = v
        m[j - 1, i - 1] = v
    return m


def build_q(n, t_c):
    """Populate both expression forms of the matrix and the explicit reduced entries."""
    if int(n) != n or n < 7:
        raise ValueError(f"the form requires n >= 7 (J index n-7 would be negative), got {n}")
    if t_c < 0.0:
        raise ValueError(f"the form is built for t_c >= 0, got {t_c}")
    table = TrigIntegralTable(t_c)
    jj = table.value

    def i0(k):
        return jj(k, n - 5 - k)

    def i1(k):
        return jj(k, n - 3 - k)

    def i2(k):
        return jj(k, n - 1 - k)

    s_pow = (1.0 + t_c ** 2) ** (-0.5 * (n - 1))
    c_off = 4.0 * n / ((n - 2) * (n + 1))
    c_jj = 8.0 * n / ((n - 2) * (n + 1))
    c_last = -4.0 * n / (n + 1)
    c_corner = 2.0 * n * (n - 2) / (n + 1)

    form1 = _symmetric({
        (1, 1): c_off * ((n - 4) * i1(4) - (n - 1) * i2(4) + 8.0 / (n - 3) * i0(2)
                         + t_c ** 5 * s_pow),
        (1, 2): c_off * ((n - 3) * i1(3) - (n - 1) * i2(3) + 4.0 / (n - 3) * i0(1)
                         - t_c ** 4 * s_pow),
        (1, 3): c_off * ((n - 2) * i1(2) - (n - 1) * i2(2) + t_c ** 3 * s_pow),
        (1, 4): c_last * (i1(4) + 2.0 * t_c * i1(3) + t_c ** 2 * i1(2)),
        (2, 2): c_off * ((n - 2) * i1(2) - (n - 1) * i2(2) + 2.0 / (n - 3) * i0(0)
                         + t_c ** 3 * s_pow),
        (2, 3): c_off * ((n - 1) * i1(1) - (n - 1) * i2(1) - t_c ** 2 * s_pow),
        (2, 4): c_last * (i1(3) + 2.0 * t_c * i1(2) + t_c ** 2 * i1(1)),
        (3, 3): c_off * (n * i1(0) - (n - 1) * i2(0) + t_c * s_pow),
        (3, 4): c_last * (i1(2) + 2.0 * t_c * i1(1) + t_c ** 2 * i1(0)),
        (4, 4): c_corner * (-2.0 / (n - 3) * (i0(2) + 2.0 * t_c * i0(1) + t_c ** 2 * i0(0))
                            + i1(4) + 4.0 * t_c * i1(3) + 6.0 * t_c ** 2 * i1(2)
                            + 4.0 * t_c ** 3 * i1(1) + t_c ** 4 * i1(0)),
    })

    form2 = _symmetric({
        (1, 1): c_jj * (jj(4, n - 7) + 4.0 / (n - 3) * jj(2, n - 7)),
        (1, 2): c_jj * (jj(3, n - 6) + 2.0 / (n - 3) * jj(1, n - 6)),
        (1, 3): c_jj * jj(2, n - 5),
        (1, 4): c_last * (jj(4, n - 7) + 2.0 * t_c * jj(3, n - 6) + t_c ** 2 * jj(2, n - 5)),
        (2, 2): c_jj * (jj(2, n - 5) + 1.0 / (n - 3) * jj(0, n - 5)),
        (2, 3): c_jj * jj(1, n - 4),
        (2, 4): c_last * (jj(3, n - 6) + 2.0 * t_c * jj(2, n - 5) + t_c ** 2 * jj(1, n - 4)),
        (3, 3): c_jj * jj(0, n - 3),
        (3, 4): c_last * (jj(2, n - 5) + 2.0 * t_c * jj(1, n - 4) + t_c ** 2 * jj(0, n - 3)),
        (4, 4): c_corner * (-2.0 / (n - 3) * (jj(2, n - 7) + 2.0 * t_c * jj(1, n - 6)
                                              + t_c ** 2 * jj(0, n - 5))
                            + jj(4, n - 7) + 4.0 * t_c * jj(3, n - 6) + 6.0 * t_c ** 2 * jj(2, n - 5)
                            + 4.0 * t_c ** 3 * jj(1, n - 4) + t_c ** 4 * jj(0, n - 3)),
    })

    q_bar = _symmetric({
        (1, 1): jj(4, n - 7) + 4.0 / (n - 3) * jj(2, n - 7),
        (1, 2): jj(3, n - 6) + 2.0 / (n - 3) * jj(1, n - 6),
        (1, 3): jj(2, n - 5),
        (1, 4): -4.0 / (n - 3) * jj(2, n - 7) - 4.0 * t_c / (n - 3) * jj(1, n - 6),
        (2, 2): jj(2, n - 5) + 1.0 / (n - 3) * jj(0, n - 5),
        (2, 3): jj(1, n - 4),
        (2, 4): -2.0 / (n - 3) * jj(1, n - 6) - 2.0 * t_c / (n - 3) * jj(0, n - 5),
        (3, 3): jj(0, n - 3),
        (3, 4): 0.0,
        (4, 4): 2.0 / (n - 3) * (jj(2, n - 7) + 2.0 * t_c * jj(1, n - 6)
                                 + t_c ** 2 * jj(0, n - 5)),
    })

    return QForm(n=int(n), t_c=float(t_c), form1=form1, form2=form2, q_bar=q_bar)


def congruence_transform(q):
    """((n-2)(n+1)/(8n)) S2^T S1^T Q S1 S2 as a matrix product, for comparison
    against the explicit reduced entries stored on the form."""
    p = s1_matrix(q.n) @ s2_matrix(q.t_c)
    return (q.n - 2) * (q.n + 1) / (8.0 * q.n) * (p.T @ q.form1 @ p)


def quadratic_value(q, v):
    """(via_matrix, via_closed_form) of the reduced quadratic at v = (a, t_c, 0, 1).

    closed form: -((a-1)^2/(n-3)) t_c^3 (1+t_c^2)^(-(n-3)/2)
                 + ((7a^2-8a+2)/(n-3)) J(2, n-7).
    """
    if v.t_c != q.t_c:
        raise ValueError(f"test vector t_c {v.t_c} does not match the form's {q.t_c}")
    vec = v.as_array()
    via_matrix = float(vec @ q.q_bar @ vec)
    j_val = TrigIntegralTable(q.t_c).value(2, q.n - 7)
    via_closed = (
        -((v.a - 1.0) ** 2 / (q.n - 3)) * q.t_c ** 3 * (1.0 + q.t_c ** 2) ** (-0.5 * (q.n - 3))
        + (7.0 * v.a ** 2 - 8.0 * v.a + 2.0) / (q.n - 3) * j_val
    )
    return via_matrix, via_closed


def kappa_components(n, t_c, a):
    """kappa = -((n-2)/2) V S2^T S1^T for V = (a, t_c, 0, 1), any a.

    The matrix algebra collapses to
    (-(n-2)(a-1)/2, (n-2) t_c / 2, (n-2) t_c^2 / 2, 1); the product route is
    kept as an internal consistency check and the last entry is pinned to 1.
    """
    closed = np.array([
        -(n - 2) * (a - 1.0) / 2.0,
        (n - 2) * t_c / 2.0,
        (n - 2) * t_c ** 2 / 2.0,
        1.0,
    ])
    vec = TestVector(a=a, t_c=t_c).as_array()
    product = -0.5 * (n - 2) * (vec @ s2_matrix(t_c).T @ s1_matrix(n).T)
    if float(np.max(np.abs(product - closed))) > 1e-10 * (1.0 + float(np.max(np.abs(closed)))):
        raise ArithmeticError("kappa routes disagree")
    return closed


def build_kappa(n, t_c, a=KAPPA_A_DEFAULT):
    """KappaVector for an admissible a; rejects a outside the negativity window."""
    if not TestVector(a=a, t_c=t_c).admissible:
        lo, hi = admissible_interval()
        raise ValueError(f"a={a} is outside the admissible interval ({lo:.6f}, {hi:.6f})")
    comp = kappa_components(n, t_c, a)
    return KappaVector(kappa2=float(comp[0]), kappa1=float(comp[1]), kappa0=float(comp[2]), last=1.0)


def kappa_q_kappa(n, t_c, a=KAPPA_A_DEFAULT):
    """kappa Q kappa^T against the original (pure-J form) matrix."""
    q = build_q(n, t_c)
    kappa = kappa_components(n, t_c, a)
    return float(kappa @ q.form2 @ kappa)


def congruence_scale(n):
    """kappa Q kappa^T = congruence_scale(n) * V Q_bar V^T; equals 2n(n-2)/(n+1)."""
    return 2.0 * n * (n - 2) / (n + 1)


def certificate_prefactor(n):
    """omega_{n-2} B((n+3)/2, (n-1)/2): the weight multiplying the quadratic
    value in the energy coefficient.  It is a product of strictly positive
    factors, so only the sign of kappa Q kappa^T decides; the certificate
    therefore omits it."""
    return sphere_volume(n - 2) * beta(0.5 * (n + 3), 0.5 * (n - 1))


def negativity_certificate(n_values, t_c_range=(0.0, 10.0), a=KAPPA_A_DEFAULT, grid=101,
                           route_tol=1e-10):
    """Grid certificate of kappa Q kappa^T < 0 with full route cross-checks.

    At every grid point the direct value (original matrix, both expression forms),
    the reduced-route value rescaled by the congruence factor, and the closed
    form must mutually agree within route_tol, and the direct value must be
    strictly negative.  Failures are reported with their grid point.
    """
    n_values = [int(n) for n in n_values]
    lo, hi = float(t_c_range[0]), float(t_c_range[1])
    if grid < 2 or hi <= lo:
        raise ValueError("grid must have >= 2 points over a nondegenerate range")
    t_grid = np.linspace(lo, hi, int(grid))
    admissible = TestVector(a=a, t_c=0.0).admissible

    failures = []
    max_value = -math.inf
    max_route_gap = 0.0
    points = 0
    for n in n_values:
        scale = congruence_scale(n)
        for t_c in t_grid:
            q = build_q(n, float(t_c))
            kappa = kappa_components(n, float(t_c), a)
            direct = float(kappa @ q.form2 @ kappa)
            direct_alt = float(kappa @ q.form1 @ kappa)
            via_matrix, via_closed = quadratic_value(q, TestVector(a=a, t_c=float(t_c)))
            # normalize by the size of the summed terms: the direct route
            # cancels contributions of order |kappa|^2 |Q| down to the value
            term_scale = float(np.max(np.abs(np.outer(kappa, kappa) * q.form2)))
            ref = 1.0 + abs(direct) + term_scale
            gap = max(
                abs(direct - direct_alt),
                abs(direct - scale * via_matrix),
                abs(direct - scale * via_closed),
            )
            max_route_gap = max(max_route_gap, gap / ref)
            max_value = max(max_value, direct)
            points += 1
            if direct >= 0.0:
                failures.append({"n": n, "t_c": float(t_c), "value": direct})
            elif gap > route_tol * ref:
                failures.append({"n": n, "t_c": float(t_c), "value": direct,
                                 "route_gap": gap / ref})

    return {
        "a": float(a),
        "admissible_a": admissible,
        "n_values": n_values,
        "t_c_min": lo,
        "t_c_max": hi,
        "grid": int(grid),
        "points": points,
        "max_value": max_value,
        "max_route_gap": max_route_gap,
        "negative_everywhere": max_value < 0.0,
        "routes_consistent": max_route_gap <= route_tol,
        "failures": failures,
    }
