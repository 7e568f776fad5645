"""Sphere-average identities and trace-free tensor moments on S^(n-2).

The spheres live in R^(n-1) (radius r); Monte-Carlo sampling with normalized
Gaussian vectors is the independence oracle for the exact formulas.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import special

_SYM_TOL = 1e-12


@dataclass(frozen=True)
class HomogeneousPolynomial:
    """Degree, pointwise evaluator and Laplacian evaluator (both vectorized)."""

    degree: int
    evaluate: callable
    laplacian: callable


@dataclass(frozen=True)
class SphereAverageResult:
    lhs: float
    rhs: float
    stderr: float


def sample_unit_sphere(dim, n_samples, rng):
    """Uniform points on S^(dim-1) from normalized Gaussian vectors."""
    g = rng.standard_normal((n_samples, dim))
    g /= np.sqrt(np.einsum("ij,ij->i", g, g))[:, None]
    return g


def coordinate_power_poly(axis, power):
    """q(y) = (y^axis)^power with its Laplacian."""
    if power < 1:
        raise ValueError("power must be >= 1")

    def evaluate(pts):
        return pts[:, axis] ** power

    def laplacian(pts):
        if power < 2:
            return np.zeros(pts.shape[0])
        return power * (power - 1) * pts[:, axis] ** (power - 2)

    return HomogeneousPolynomial(degree=power, evaluate=evaluate, laplacian=laplacian)


def quadratic_form_poly(m):
    """q(y) = y^T m y, with Laplacian 2 tr(m)."""
    m = np.asarray(m, dtype=float)

    def evaluate(pts):
        return np.einsum("ia,ab,ib->i", pts, m, pts)

    def laplacian(pts):
        return np.full(pts.shape[0], 2.0 * np.trace(m))

    return HomogeneousPolynomial(degree=2, evaluate=evaluate, laplacian=laplacian)


def quartic_form_poly(m):
    """q(y) = (y^T m y)^2, with Laplacian 8 y^T m^2 y + 4 tr(m) (y^T m y)."""
    m = np.asarray(m, dtype=float)
    m_sq = m @ m
    tr = np.trace(m)

    def evaluate(pts):
        return np.einsum("ia,ab,ib->i", pts, m, pts) ** 2

    def laplacian(pts):
        quad = np.einsum("ia,ab,ib->i", pts, m, pts)
        quad_sq = np.einsum("ia,ab,ib->i", pts, m_sq, pts)
        return 8.0 * quad_sq + 4.0 * tr * quad

    return HomogeneousPolynomial(degree=4, evaluate=evaluate, laplacian=laplacian)


def homogeneity_gap(q, dim, rng, scale=1.7, n_samples=32):
    """Largest relative defect of q(scale*y) = scale^degree q(y) on a sample."""
    pts = rng.standard_normal((n_samples, dim))
    lhs = q.evaluate(scale * pts)
    rhs = scale ** q.degree * q.evaluate(pts)
    return float(np.max(np.abs(lhs - rhs) / (1.0 + np.abs(rhs))))


def sphere_average_identity(q, n, r, n_samples=1_000_000, seed=42):
    """Both sides of the degree-k average identity on the radius-r sphere S^(n-2).

    lhs = int q dsigma, rhs = r^2/(k(n+k-3)) * int lap(q) dsigma, both by
    Monte Carlo on a shared sample; stderr is the standard error of lhs-rhs.
    """
    if q.degree < 1:
        raise ValueError("the identity requires homogeneity degree k >= 1")
    if n < 4:
        raise ValueError(f"sphere S^(n-2) must be at least one-dimensional, got n={n}")
    dim = n - 1
    rng = np.random.default_rng([seed, n, q.degree])
    pts = r * sample_unit_sphere(dim, n_samples, rng)
    surface = special.sphere_volume(n - 2) * r ** (n - 2)
    coef = r ** 2 / (q.degree * (n + q.degree - 3))
    q_vals = q.evaluate(pts)
    lap_vals = q.laplacian(pts)
    lhs = surface * float(np.mean(q_vals))
    rhs = surface * coef * float(np.mean(lap_vals))
    diff = q_vals - coef * lap_vals
    stderr = surface * float(np.std(diff)) / math.sqrt(n_samples)
    return SphereAverageResult(lhs=lhs, rhs=rhs, stderr=stderr)


def _check_square_symmetric(m, n):
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"matrix must be square, got shape {m.shape}")
    if m.shape[0] != n - 1:
        raise ValueError(f"matrix must be {(n - 1)}x{(n - 1)} for n={n}")
    scale = float(np.max(np.abs(m))) or 1.0
    if float(np.max(np.abs(m - m.T))) > _SYM_TOL * scale:
        raise ValueError("matrix must be symmetric")
    return m, scale


def quartic_tensor_moment(m, n, r):
    """int over S^(n-2)_r of (y^T m y)^2 for symmetric trace-free m.

    Equals 2 omega_{n-2} sum(m_ab^2) r^(n+2) / ((n-1)(n+1)).
    """
    m, scale = _check_square_symmetric(m, n)
    if abs(float(np.trace(m))) > _SYM_TOL * scale * (n - 1):
        raise ValueError("matrix must be trace-free")
    frob_sq = float(np.sum(m * m))
    return 2.0 * special.sphere_volume(n - 2) * frob_sq * r ** (n + 2) / ((n - 1) * (n + 1))


def quadratic_tensor_moment(m, n, r):
    """int over S^(n-2)_r of y^T m y for symmetric m: (tr m/(n-1)) omega_{n-2} r^n."""
    m, _ = _check_square_symmetric(m, n)
    return float(np.trace(m)) / (n - 1) * special.sphere_volume(n - 2) * r ** n


def quartic_by_double_average(m, n, r):
    """The quartic moment recovered by applying the average identity twice.

    For trace-free m the bi-Laplacian of (y^T m y)^2 is the constant
    16 sum(m_ab^2), so two exact average steps give
    (r^2/(4(n+1))) (r^2/(2(n-1))) * 16 sum(m^2) * omega_{n-2} r^(n-2).
    """
    m, scale = _check_square_symmetric(m, n)
    if abs(float(np.trace(m))) > _SYM_TOL * scale * (n - 1):
        raise ValueError("matrix must be trace-free")
    frob_sq = float(np.sum(m * m))
    surface = special.sphere_volume(n - 2) * r ** (n - 2)
    return r ** 2 / (4.0 * (n + 1)) * r ** 2 / (2.0 * (n - 1)) * 16.0 * frob_sq * surface


def _mc_quadratic_values(m, n, r, n_samples, seed):
    """Samples of y^T m y on S^(n-2)_r; normalization folded into the ratio
    g^T m g / |g|^2 to avoid materializing unit vectors."""
    m = np.asarray(m, dtype=float)
    rng = np.random.default_rng([seed, n])
    g = rng.standard_normal((n_samples, n - 1))
    quad = np.einsum("ia,ab,ib->i", g, m, g)
    quad /= np.einsum("ij,ij->i", g, g)
    quad *= r * r
    return quad


def mc_tensor_moment(m, n, r, power, n_samples=1_000_000, seed=42):
    """(estimate, stderr) of int (y^T m y)^power over S^(n-2)_r, power 1 or 2."""
    quad = _mc_quadratic_values(m, n, r, n_samples, seed)
    vals = quad if power == 1 else quad ** power
    surface = special.sphere_volume(n - 2) * r ** (n - 2)
    est = surface * float(np.mean(vals))
    stderr = surface * float(np.std(vals)) / math.sqrt(n_samples)
    return est, stderr


def mc_tensor_moments_both(m, n, r, n_samples=1_000_000, seed=42):
    """((est, stderr) for power 1, same for power 2) from one shared sample."""
    quad = _mc_quadratic_values(m, n, r, n_samples, seed)
    surface = special.sphere_volume(n - 2) * r ** (n - 2)
    out = []
    for vals in (quad, quad ** 2):
        out.append((surface * float(np.mean(vals)),
                    surface * float(np.std(vals)) / math.sqrt(n_samples)))
    return tuple(out)


def random_trace_free_symmetric(dim, rng):
    """Seeded random symmetric trace-free matrix with entries of order one."""
    g = rng.standard_normal((dim, dim))
    m = 0.5 * (g + g.T)
    return m - np.trace(m) / dim * np.eye(dim)
