"""Spherical-cap geometry for negative boundary constants and the dimensional
threshold c0(n) below which the scalar trace-inequality chain closes."""

import math
from dataclasses import dataclass

from . import moments, special
from .quadrature import DEFAULT_QUAD


@dataclass(frozen=True)
class CapGeometry:
    """Cap angle r in (pi/2, pi) and boundary volume for a given c < 0."""

    n: int
    c: float
    t_c: float
    r: float
    b_cap: float


def sharp_trace_constant(n):
    """The sharp half-space trace constant ((n-2)/2) omega_{n-1}^(1/(n-1))."""
    return 0.5 * (n - 2) * special.sphere_volume(n - 1) ** (1.0 / (n - 1))


def cap_from_c(n, c):
    """Cap geometry of c < 0: cos(r) = -t_c/sqrt(1+t_c^2), B = 2^(1-n) omega_{n-1} sin^(n-1)(r)."""
    if n < 3:
        raise ValueError(f"dimension must be >= 3, got {n}")
    if c >= 0.0:
        raise ValueError(f"the cap parameterization requires c < 0, got {c}")
    t_c = -c / (n - 2)
    root = math.sqrt(1.0 + t_c ** 2)
    r = math.acos(-t_c / root)
    sin_r = 1.0 / root
    b_cap = 2.0 ** (1 - n) * special.sphere_volume(n - 1) * sin_r ** (n - 1)
    return CapGeometry(n=int(n), c=float(c), t_c=t_c, r=r, b_cap=b_cap)


def boundary_volume_identities(cap):
    """Both sides of the two boundary-volume identities in the cap angle.

    c B^(1/(n-1))   = ((n-2)/2)   omega_{n-1}^(1/(n-1)) cos(r)
    c^2 B^(n/(n-1)) = ((n-2)^2/2^n) omega_{n-1}^(n/(n-1)) cos^2(r) sin^(n-2)(r)
    """
    n = cap.n
    omega = special.sphere_volume(n - 1)
    lhs1 = cap.c * cap.b_cap ** (1.0 / (n - 1))
    rhs1 = 0.5 * (n - 2) * omega ** (1.0 / (n - 1)) * math.cos(cap.r)
    lhs2 = cap.c ** 2 * cap.b_cap ** (n / (n - 1))
    rhs2 = (
        (n - 2) ** 2 / 2.0 ** n * omega ** (n / (n - 1))
        * math.cos(cap.r) ** 2 * math.sin(cap.r) ** (n - 2)
    )
    return lhs1, rhs1, lhs2, rhs2


def threshold_inequality(cap):
    """(lhs, rhs, holds) of the threshold inequality in the (c, B) variables.

    lhs = ((n-2)/(4n(n-1))) omega_{n-1}^(1/(n-1))
          + ((n^2+2n-4)/(2n(n-2))) c B^(1/(n-1))
    rhs = (1/(n(n-1)(n-2))) (2^n/omega_n) c^2 B^(n/(n-1))
    """
    n = cap.n
    lhs = (
        sharp_trace_constant(n) / (2.0 * n * (n - 1))
        + (n ** 2 + 2 * n - 4) / (2.0 * n * (n - 2)) * cap.c * cap.b_cap ** (1.0 / (n - 1))
    )
    rhs = (
        2.0 ** n / special.sphere_volume(n)
        * cap.c ** 2 * cap.b_cap ** (n / (n - 1))
        / (n * (n - 1) * (n - 2))
    )
    return lhs, rhs, lhs >= rhs


def trig_inequality(n, r):
    """(lhs, rhs, holds) of the same inequality in the cap angle:
    1 + ((n-1)(n^2+2n-4)/(n-2)) cos(r) >= 4 (omega_{n-1}/omega_n) cos^2(r) sin^(n-2)(r)."""
    lhs = 1.0 + (n - 1) * (n ** 2 + 2 * n - 4) / (n - 2) * math.cos(r)
    rhs = (
        4.0 * special.sphere_volume(n - 1) / special.sphere_volume(n)
        * math.cos(r) ** 2 * math.sin(r) ** (n - 2)
    )
    return lhs, rhs, lhs >= rhs


def c_of_angle(n, r):
    """The boundary constant whose cap angle is r: c = (n-2) cos(r)/sin(r) < 0 on (pi/2, pi)."""
    return (n - 2) * math.cos(r) / math.sin(r)


def find_c0(n, tol=1e-8, grid=10_000):
    """Largest c0 > 0 such that the angle inequality holds for every c in [-c0, 0).

    A grid scan over (pi/2, pi) locates the first violation; bisection inside
    the bracketing cell refines it until the induced c-width drops below tol.
    If no violation exists on the whole grid (never the case here, since the
    inequality fails as r -> pi) the defensive infinity sentinel is returned.
    """
    if n < 7:
        raise ValueError(f"the threshold is defined for n >= 7, got {n}")
    if tol <= 0.0:
        raise ValueError("tol must be positive")

    def gap(r):
        lhs, rhs, _ = trig_inequality(n, r)
        return lhs - rhs

    lo_angle = 0.5 * math.pi
    step = 0.5 * math.pi / grid
    prev = lo_angle
    bracket = None
    for i in range(1, grid):
        r = lo_angle + i * step
        if gap(r) < 0.0:
            bracket = (prev, r)
            break
        prev = r
    if bracket is None:
        return math.inf

    r_lo, r_hi = bracket
    while abs(c_of_angle(n, r_hi) - c_of_angle(n, r_lo)) > tol:
        mid = 0.5 * (r_lo + r_hi)
        if gap(mid) < 0.0:
            r_hi = mid
        else:
            r_lo = mid
    return -c_of_angle(n, 0.5 * (r_lo + r_hi))


def a_lower_bound(n, c, quad=DEFAULT_QUAD):
    """(A, omega_n/2^(n+1), holds): the bubble volume exceeds the half-cap volume for c < 0."""
    if c >= 0.0:
        raise ValueError(f"the lower bound is stated for c < 0, got {c}")
    a_val = moments.compute_A(n, -c / (n - 2), quad)
    bound = special.sphere_volume(n) / 2.0 ** (n + 1)
    return a_val, bound, a_val > bound
