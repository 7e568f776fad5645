"""Adaptive 1-D quadrature wrappers and the tolerance spec that drives them.

All semi-infinite integrals in this package are either mapped to a finite
interval with the tangent substitution z - t_c = tan(theta) or handed to
the Gauss-Kronrod machinery's own infinite-interval transform, so the two
routes stay independent of each other and can be used to audit one another.
"""

import math
import warnings
from dataclasses import dataclass

from scipy import integrate


class QuadratureError(ArithmeticError):
    """An integral could not be resolved to the requested tolerance."""

    def __init__(self, message, achieved=None):
        super().__init__(message)
        self.achieved = achieved


@dataclass(frozen=True)
class QuadratureSpec:
    """Tolerances and sampling sizes shared by deterministic and Monte-Carlo audits.

    rel_tol may not be tightened below 1e-13: double precision cannot
    resolve adaptive refinement past that point.
    """

    rel_tol: float = 1e-11
    abs_tol: float = 1e-13
    max_depth: int = 200
    mc_samples: int = 1_000_000
    seed: int = 42

    def __post_init__(self):
        if self.rel_tol < 1e-13:
            raise ValueError("rel_tol must be >= 1e-13")
        if self.abs_tol <= 0 or self.rel_tol <= 0:
            raise ValueError("tolerances must be positive")
        if self.max_depth < 1 or self.mc_samples < 1:
            raise ValueError("max_depth and mc_samples must be positive")


DEFAULT_QUAD = QuadratureSpec()


def _run_quad(f, a, b, spec):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        out = integrate.quad(
            f, a, b,
            epsabs=spec.abs_tol, epsrel=spec.rel_tol, limit=spec.max_depth,
            full_output=1,
        )
    value, abserr = out[0], out[1]
    # QUADPACK error estimates are conservative; allow a modest slack factor.
    budget = 100.0 * max(spec.abs_tol, spec.rel_tol * abs(value))
    if not math.isfinite(value) or abserr > budget:
        raise QuadratureError(
            f"quadrature did not converge: estimated error {abserr:.3e} "
            f"exceeds budget {budget:.3e}",
            achieved=abserr,
        )
    return value


def integrate_interval(f, a, b, spec=DEFAULT_QUAD):
    """Adaptive Gauss-Kronrod integral of f over the finite interval [a, b]."""
    return _run_quad(f, a, b, spec)


def integrate_half_line(f, spec=DEFAULT_QUAD):
    """Integral of f over [0, inf) via the library's infinite-interval transform."""
    return _run_quad(f, 0.0, math.inf, spec)


def integrate_tan_half_line(g, t_c, spec=DEFAULT_QUAD):
    """Integral over [0, inf) of an integrand given in the tangent variable.

    Substituting z - t_c = tan(theta) maps [0, inf) to [-arctan(t_c), pi/2);
    the caller supplies g(theta) = f(t_c + tan(theta)) * sec^2(theta) already
    simplified so that g stays bounded at the right endpoint.
    """
    return _run_quad(g, -math.atan(t_c), 0.5 * math.pi, spec)
