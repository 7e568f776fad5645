"""Scalar mountain-pass algebra: the fiber map f, its maximizer, and the
fourth-order expansion of the maximal energy under small perturbations of
the bubble constants."""

import math
from dataclasses import dataclass

from . import moments
from .quadrature import DEFAULT_QUAD


@dataclass(frozen=True)
class EnergyTriple:
    """(E_cal, A_cal, B_cal) driving f(t); A_cal > 0 always, E_cal > 0 for a maximizer."""

    n: int
    e_cal: float
    a_cal: float
    b_cal: float

    def __post_init__(self):
        if self.n < 3:
            raise ValueError(f"dimension must be >= 3, got {self.n}")
        if self.a_cal <= 0.0:
            raise ValueError(f"a_cal must be positive, got {self.a_cal}")


@dataclass(frozen=True)
class PerturbationTriple:
    """Additive perturbations (a_tilde, b_tilde, e_tilde) of (A, B, E)."""

    a_tilde: float = 0.0
    b_tilde: float = 0.0
    e_tilde: float = 0.0


def flat_triple(n, a_val, b_val, c):
    """The unperturbed triple of the flat model: (n(n-2)A + cB, n(n-2)A, cB)."""
    return EnergyTriple(
        n=n,
        e_cal=n * (n - 2) * a_val + c * b_val,
        a_cal=n * (n - 2) * a_val,
        b_cal=c * b_val,
    )


def eval_f(triple, t):
    """f(t) = (4(n-1)/(n-2)) E t^2 - (4(n-1)/n) A t^(2n/(n-2)) - 4 B t^(2(n-1)/(n-2))."""
    if t < 0.0:
        raise ValueError(f"f is defined on t >= 0, got {t}")
    n = triple.n
    p_vol = 2.0 * n / (n - 2)
    p_bdy = 2.0 * (n - 1) / (n - 2)
    return (
        4.0 * (n - 1) / (n - 2) * triple.e_cal * t ** 2
        - 4.0 * (n - 1) / n * triple.a_cal * t ** p_vol
        - 4.0 * triple.b_cal * t ** p_bdy
    )


def f_prime(triple, t):
    n = triple.n
    p_vol = 2.0 * n / (n - 2)
    p_bdy = 2.0 * (n - 1) / (n - 2)
    return (
        8.0 * (n - 1) / (n - 2) * triple.e_cal * t
        - 4.0 * (n - 1) / n * p_vol * triple.a_cal * t ** (p_vol - 1.0)
        - 4.0 * p_bdy * triple.b_cal * t ** (p_bdy - 1.0)
    )


def f_second(triple, t):
    n = triple.n
    p_vol = 2.0 * n / (n - 2)
    p_bdy = 2.0 * (n - 1) / (n - 2)
    return (
        8.0 * (n - 1) / (n - 2) * triple.e_cal
        - 4.0 * (n - 1) / n * p_vol * (p_vol - 1.0) * triple.a_cal * t ** (p_vol - 2.0)
        - 4.0 * p_bdy * (p_bdy - 1.0) * triple.b_cal * t ** (p_bdy - 2.0)
    )


def t_star(triple):
    """The unique maximizer: t^(2/(n-2)) = (-B + sqrt(B^2 + 4 E A)) / (2 A)."""
    if triple.e_cal <= 0.0:
        raise ValueError(f"t_star requires e_cal > 0, got {triple.e_cal}")
    disc = triple.b_cal ** 2 + 4.0 * triple.e_cal * triple.a_cal
    tau = (-triple.b_cal + math.sqrt(disc)) / (2.0 * triple.a_cal)
    return tau ** (0.5 * (triple.n - 2))


def max_value(triple):
    """f at the maximizer, checked against the stationarity-substituted form.

    The substituted form is (4/(n-2)) E t^2 + (4/n) A t^(2n/(n-2)); it must
    agree with direct evaluation of f at the closed-form maximizer.
    """
    t = t_star(triple)
    n = triple.n
    direct = eval_f(triple, t)
    substituted = (
        4.0 / (n - 2) * triple.e_cal * t ** 2
        + 4.0 / n * triple.a_cal * t ** (2.0 * n / (n - 2))
    )
    if abs(direct - substituted) > 1e-8 * (1.0 + abs(substituted)):
        raise ArithmeticError(
            f"maximum-value routes disagree: f(t*)={direct!r} vs substituted {substituted!r}"
        )
    return substituted


def golden_section_max(f, tol=1e-12):
    """Argmax of a unimodal f on [0, inf) with f(0)=0, f>0 near 0, f -> -inf.

    The upper bracket doubles until f turns negative, golden-section search
    shrinks [lo, hi] as far as value comparisons allow, and a sign bisection
    on the central difference f(t+d)-f(t-d) supplies the final digits, since
    value comparisons alone cannot localize a flat maximum past sqrt(eps).
    The combined localization honors tol for maximizers of moderate size.
    """
    hi = 1.0
    for _ in range(200):
        if f(hi) < 0.0:
            break
        hi *= 2.0
    else:
        raise ArithmeticError("could not bracket the maximizer")
    lo = 0.0
    inv_phi = (math.sqrt(5.0) - 1.0) / 2.0
    x1 = hi - inv_phi * (hi - lo)
    x2 = lo + inv_phi * (hi - lo)
    f1, f2 = f(x1), f(x2)
    coarse = 1e-5 * max(1.0, hi)
    for _ in range(400):
        if hi - lo <= coarse:
            break
        if f1 < f2:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + inv_phi * (hi - lo)
            f2 = f(x2)
        else:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - inv_phi * (hi - lo)
            f1 = f(x1)

    mid = 0.5 * (lo + hi)
    # balances difference-noise eps*f/(2 delta f'') against the O(delta^2)
    # offset of the central-difference zero
    delta = 1e-5 * max(1.0, mid)
    s_lo, s_hi = max(lo - coarse, delta), hi + coarse

    def slope(t):
        return f(t + delta) - f(t - delta)

    if slope(s_lo) <= 0.0:
        return s_lo
    if slope(s_hi) >= 0.0:
        return s_hi
    for _ in range(200):
        mid = 0.5 * (s_lo + s_hi)
        if s_hi - s_lo <= max(tol, 4.0 * math.ulp(mid)):
            break
        if slope(mid) > 0.0:
            s_lo = mid
        else:
            s_hi = mid
    return 0.5 * (s_lo + s_hi)


def perturbed_triple(n, a_val, b_val, c, pert):
    """Triple of the perturbed constants: E = n(n-2)A + cB + E~, A = n(n-2)(A+A~), B = c(B+B~)."""
    return EnergyTriple(
        n=n,
        e_cal=n * (n - 2) * a_val + c * b_val + pert.e_tilde,
        a_cal=n * (n - 2) * (a_val + pert.a_tilde),
        b_cal=c * (b_val + pert.b_tilde),
    )


def expand_max_energy(n, a_val, b_val, c, pert):
    """(predicted, exact) maximal energy under the perturbation.

    predicted = S_c + (4(n-1)/(n-2)) E~ - 4 c B~ - 4(n-1)(n-2) A~
                + 2(n-1)(E~ - c B~)^2 / (2n(n-2)A + cB)
    exact     = max_value of the perturbed triple.
    """
    if n < 7:
        raise ValueError(f"the expansion is stated for n >= 7, got {n}")
    denom = 2.0 * n * (n - 2) * a_val + c * b_val
    if denom <= 0.0:
        raise ValueError(f"degenerate expansion denominator 2n(n-2)A + cB = {denom}")
    s_c = 8.0 * (n - 1) * a_val + 4.0 * c * b_val / (n - 2)
    predicted = (
        s_c
        + 4.0 * (n - 1) / (n - 2) * pert.e_tilde
        - 4.0 * c * pert.b_tilde
        - 4.0 * (n - 1) * (n - 2) * pert.a_tilde
        + 2.0 * (n - 1) * (pert.e_tilde - c * pert.b_tilde) ** 2 / denom
    )
    exact = max_value(perturbed_triple(n, a_val, b_val, c, pert))
    return predicted, exact


def lambda_const(n, c, a_val, b_val):
    """The quadratic-remainder weight 2 / ((n-1)(2n(n-2)A + cB))."""
    denom = 2.0 * n * (n - 2) * a_val + c * b_val
    if denom <= 0.0:
        raise ValueError(f"lambda_const requires 2n(n-2)A + cB > 0, got {denom}")
    return 2.0 / ((n - 1) * denom)


def scalar_chain(n, c, quad=DEFAULT_QUAD):
    """The scalar chain (lambda/4) c B <= 1/(2(n-1)) < (n+2)/(4(n-2)) for c >= 0.

    Returns (lhs, mid, rhs); the caller asserts the two comparisons.
    """
    if c < 0.0:
        raise ValueError(f"the chain is claimed for c >= 0 only, got {c}")
    if n < 7:
        raise ValueError(f"the chain requires n >= 7, got {n}")
    t_c = -c / (n - 2)
    a_val = moments.compute_A(n, t_c, quad)
    b_val = moments.compute_B(n, t_c)
    lhs = 0.25 * lambda_const(n, c, a_val, b_val) * c * b_val
    mid = 0.5 / (n - 1)
    rhs = (n + 2) / (4.0 * (n - 2))
    return lhs, mid, rhs
