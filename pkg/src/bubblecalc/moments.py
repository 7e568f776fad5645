"""Half-space moments of the bubble via tangential beta reduction.

Every integral of the family |y_bar|^p * axial(y^n) * (eps^2+|y-t_c*eps*e_n|^2)^(-m)
over the half-space splits into a closed tangential factor

    (omega_{n-2}/2) * B((n-1+p)/2, m-(n-1+p)/2) * s^((n-1+p)/2-m),
    s = eps^2 + (y^n - t_c*eps)^2,

times a 1-D axial integral, which is then resolved by adaptive quadrature
(tangent substitution at eps = 1, the library's infinite-interval transform
otherwise, so that scale invariance is a genuine numeric check rather than
an algebraic one).  A seeded Cauchy-importance Monte-Carlo oracle audits the
reduction coefficients independently.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import special
from .quadrature import DEFAULT_QUAD, integrate_half_line, integrate_tan_half_line


@dataclass(frozen=True)
class MomentSpec:
    """Tangential power p (even), axial power k, denominator exponent m.

    centered selects the axial factor (y^n - t_c*eps)^k; otherwise |y^n|^k.
    """

    p: int
    m: float
    k: int = 0
    centered: bool = True


@dataclass(frozen=True)
class EnergyConstants:
    """The scale-free bubble constants of a given (n, c)."""

    n: int
    t_c: float
    A: float
    B: float
    S_c: float

    @property
    def c(self):
        return -(self.n - 2) * self.t_c


def _validate_spec(spec, n):
    if spec.p < 0 or spec.p % 2 != 0:
        raise ValueError(f"tangential power p must be an even natural, got {spec.p}")
    if spec.k < 0:
        raise ValueError(f"axial power k must be >= 0, got {spec.k}")
    if n - 1 + spec.p >= 2 * spec.m:
        raise ValueError(
            f"tangential integrability fails: need n-1+p < 2m, got {n - 1}+{spec.p} >= {2 * spec.m}"
        )
    if spec.k + n - 1 + spec.p - 2 * spec.m >= -1:
        raise ValueError(
            f"axial integral diverges: need k+n-1+p-2m < -1, got {spec.k + n - 1 + spec.p - 2 * spec.m}"
        )


def reduce_moment(spec, n, t_c=0.0):
    """(coefficient, axial_weight_exponent) of the tangential reduction.

    coefficient = (omega_{n-2}/2) * B((n-1+p)/2, m-(n-1+p)/2); the remaining
    axial weight is s^exponent with exponent = (n-1+p)/2 - m.
    """
    _validate_spec(spec, n)
    half = 0.5 * (n - 1 + spec.p)
    coefficient = 0.5 * special.sphere_volume(n - 2) * special.beta(half, spec.m - half)
    return coefficient, half - spec.m


def axial_moment(spec, n, t_c, quad=DEFAULT_QUAD, eps=1.0):
    """1-D axial integral over [0, inf) left after the tangential reduction."""
    _validate_spec(spec, n)
    expo = 0.5 * (n - 1 + spec.p) - spec.m

    if eps == 1.0:
        # z - t_c = tan(theta); the cosine power 2m-(n-1+p)-2 exceeds k by
        # the validated margin, so the integrand vanishes at pi/2.
        cos_pow = -2.0 * expo - 2.0

        def g(theta):
            tan = math.tan(theta)
            axial = tan ** spec.k if spec.centered else abs(t_c + tan) ** spec.k
            return axial * math.cos(theta) ** cos_pow

        return integrate_tan_half_line(g, t_c, quad)

    shift = t_c * eps

    def f(z):
        axial = (z - shift) ** spec.k if spec.centered else abs(z) ** spec.k
        return axial * (eps ** 2 + (z - shift) ** 2) ** expo

    return integrate_half_line(f, quad)


def moment_value(spec, n, t_c, quad=DEFAULT_QUAD, eps=1.0):
    """Full half-space moment: reduction coefficient times the axial integral."""
    coefficient, _ = reduce_moment(spec, n, t_c)
    return coefficient * axial_moment(spec, n, t_c, quad, eps)


def compute_A(n, t_c, quad=DEFAULT_QUAD, eps=1.0):
    """Bubble volume A = integral of W^(2n/(n-2)) over the half-space."""
    if n < 3:
        raise ValueError(f"dimension must be >= 3, got {n}")
    return eps ** n * moment_value(MomentSpec(p=0, m=n), n, t_c, quad, eps)


def compute_B(n, t_c):
    """Boundary bubble volume B = integral of W^(2(n-1)/(n-2)) over the boundary.

    Closed form (omega_{n-2}/2) B((n-1)/2, (n-1)/2) (1+t_c^2)^(-(n-1)/2),
    which coincides with the spherical-cap expression 2^(1-n) omega_{n-1}
    sin^(n-1)(r) whenever t_c > 0.
    """
    if n < 3:
        raise ValueError(f"dimension must be >= 3, got {n}")
    half = 0.5 * (n - 1)
    return (
        0.5 * special.sphere_volume(n - 2)
        * special.beta(half, half)
        * (1.0 + t_c ** 2) ** (-half)
    )


def compute_B_quad(n, t_c, quad=DEFAULT_QUAD, eps=1.0):
    """B by direct radial quadrature on the boundary, independent of the closed form."""
    s0 = eps ** 2 * (1.0 + t_c ** 2)

    def f(r):
        return r ** (n - 2) * (s0 + r * r) ** (-(n - 1))

    return eps ** (n - 1) * special.sphere_volume(n - 2) * integrate_half_line(f, quad)


def grad_energy(n, t_c, quad=DEFAULT_QUAD, eps=1.0):
    """Integral of |grad W|^2 over the half-space, by quadrature of the closed gradient."""
    tangential = moment_value(MomentSpec(p=2, m=n), n, t_c, quad, eps)
    axial = moment_value(MomentSpec(p=0, m=n, k=2, centered=True), n, t_c, quad, eps)
    return (n - 2) ** 2 * eps ** (n - 2) * (tangential + axial)


def compute_Sc(n, c, quad=DEFAULT_QUAD):
    """The threshold level S_c by both routes: (closed, integral).

    closed   = 8(n-1)A + 4 c B/(n-2)
    integral = (4/(n-2)) * integral(|grad W|^2) + 4(n-2) A
    The two agree through the integration-by-parts identity
    integral(|grad W|^2) = n(n-2)A + cB.
    """
    if n < 3:
        raise ValueError(f"dimension must be >= 3, got {n}")
    t_c = -c / (n - 2)
    a_val = compute_A(n, t_c, quad)
    b_val = compute_B(n, t_c)
    closed = 8.0 * (n - 1) * a_val + 4.0 * c * b_val / (n - 2)
    integral = 4.0 / (n - 2) * grad_energy(n, t_c, quad) + 4.0 * (n - 2) * a_val
    return closed, integral


def energy_constants(n, c, quad=DEFAULT_QUAD):
    """EnergyConstants record for (n, c) with S_c from the closed route."""
    t_c = -c / (n - 2)
    closed, _ = compute_Sc(n, c, quad)
    return EnergyConstants(n=n, t_c=t_c, A=compute_A(n, t_c, quad), B=compute_B(n, t_c), S_c=closed)


def compute_thetas(n, t_c, quad=DEFAULT_QUAD):
    """The four curvature-weight moments (Theta1..Theta4); requires n >= 7.

    Theta1 = int |y^n|^2 |y_bar|^4 u^-n        Theta2 = int |y^n|^4 |y_bar|^2 u^-n
    Theta3 = int |y^n|^2 u^-(n-2)              Theta4 = int |y_bar|^2 u^-(n-2)
    """
    if n < 7:
        raise ValueError(f"Theta moments require n >= 7 (Theta4 diverges otherwise), got {n}")
    theta1 = moment_value(MomentSpec(p=4, m=n, k=2, centered=False), n, t_c, quad)
    theta2 = moment_value(MomentSpec(p=2, m=n, k=4, centered=False), n, t_c, quad)
    theta3 = moment_value(MomentSpec(p=0, m=n - 2, k=2, centered=False), n, t_c, quad)
    theta4 = moment_value(MomentSpec(p=2, m=n - 2), n, t_c, quad)
    return theta1, theta2, theta3, theta4


_I_FAMILY_RANGE = {0: 2, 1: 4, 2: 4}


def i_integral(family, k, n, t_c):
    """I_family(k) through its J-table identity.

    I_0(k) = J(k, n-5-k), I_1(k) = J(k, n-3-k), I_2(k) = J(k, n-1-k).
    """
    if family not in _I_FAMILY_RANGE:
        raise ValueError(f"family must be 0, 1 or 2, got {family}")
    if not 0 <= k <= _I_FAMILY_RANGE[family]:
        raise ValueError(f"I_{family} admits 0 <= k <= {_I_FAMILY_RANGE[family]}, got {k}")
    if n < 7:
        raise ValueError(f"I integrals require n >= 7, got {n}")
    l = n - 5 + 2 * family - k
    return special.j_integral(k, l, t_c)


def i_integrals(n, t_c, k):
    """(I_0(k), I_1(k), I_2(k)) for one k; the triple is defined for k <= 2."""
    return (
        i_integral(0, k, n, t_c),
        i_integral(1, k, n, t_c),
        i_integral(2, k, n, t_c),
    )


def i_integral_quad(family, k, n, t_c, quad=DEFAULT_QUAD):
    """I_family(k) by quadrature of the rational integrand on [0, inf)."""
    if family not in _I_FAMILY_RANGE:
        raise ValueError(f"family must be 0, 1 or 2, got {family}")
    power = 0.5 * (n - 3 + 2 * family)

    def f(z):
        return (z - t_c) ** k * (1.0 + (z - t_c) ** 2) ** (-power)

    return integrate_half_line(f, quad)


def mc_tangential_moment(p, m, s, dim, n_samples, seed):
    """(estimate, stderr) of int |x|^p (s+|x|^2)^(-m) dx over R^dim.

    Coordinates are drawn from independent standard Cauchy laws (density
    1/(pi(1+x^2))), so the importance weight is the product of pi(1+x_i^2).
    """
    rng = np.random.default_rng([seed, dim, p])
    chunk = 250_000
    total = 0.0
    total_sq = 0.0
    done = 0
    while done < n_samples:
        size = min(chunk, n_samples - done)
        x = np.tan(math.pi * (rng.random((size, dim)) - 0.5))
        weight = np.prod(math.pi * (1.0 + x * x), axis=1)
        r_sq = np.sum(x * x, axis=1)
        vals = r_sq ** (0.5 * p) * (s + r_sq) ** (-m) * weight
        total += float(np.sum(vals))
        total_sq += float(np.sum(vals * vals))
        done += size
    mean = total / n_samples
    var = max(total_sq / n_samples - mean * mean, 0.0)
    return mean, math.sqrt(var / n_samples)


def mc_bubble_volume(n, t_c, n_samples, seed):
    """(estimate, stderr) of A by full-dimensional Cauchy importance sampling."""
    rng = np.random.default_rng([seed, n])
    chunk = 250_000
    total = 0.0
    total_sq = 0.0
    done = 0
    while done < n_samples:
        size = min(chunk, n_samples - done)
        x = np.tan(math.pi * (rng.random((size, n - 1)) - 0.5))
        z = np.tan(0.5 * math.pi * rng.random(size))
        weight = np.prod(math.pi * (1.0 + x * x), axis=1) * 0.5 * math.pi * (1.0 + z * z)
        u = 1.0 + np.sum(x * x, axis=1) + (z - t_c) ** 2
        vals = u ** (-n) * weight
        total += float(np.sum(vals))
        total_sq += float(np.sum(vals * vals))
        done += size
    mean = total / n_samples
    var = max(total_sq / n_samples - mean * mean, 0.0)
    return mean, math.sqrt(var / n_samples)
