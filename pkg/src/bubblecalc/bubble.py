"""Pointwise bubble evaluation on the closed half-space and its exact identities.

The bubble with scale eps and translation t_c is

    W(y) = (eps / (eps^2 + |y - t_c*eps*e_n|^2))^((n-2)/2),   y^n >= 0,

the extremal profile of the critical interior/boundary problem.  Everything
here is a pure function of (params, point); array inputs broadcast over a
leading batch axis.
"""

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class BubbleParams:
    """Dimension n >= 3, scale eps > 0, translation t_c = -c/(n-2)."""

    n: int
    eps: float = 1.0
    t_c: float = 0.0

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 3:
            raise ValueError(f"dimension must be an integer >= 3, got {self.n}")
        if self.eps <= 0.0:
            raise ValueError(f"scale eps must be positive, got {self.eps}")

    @property
    def c(self):
        """Boundary constant c = -(n-2) * t_c."""
        return -(self.n - 2) * self.t_c

    @classmethod
    def from_c(cls, n, c, eps=1.0):
        return cls(n=n, eps=eps, t_c=-c / (n - 2))


@dataclass(frozen=True)
class HalfSpacePoint:
    """A point (y_bar, y_n) of the closed half-space, y_n >= 0."""

    y_bar: tuple
    y_n: float

    def __post_init__(self):
        if self.y_n < 0.0:
            raise ValueError(f"y_n must be >= 0, got {self.y_n}")

    def as_array(self):
        return np.asarray(tuple(self.y_bar) + (self.y_n,), dtype=float)


def _as_points(p, y):
    y = np.asarray(y, dtype=float)
    if y.shape[-1] != p.n:
        raise ValueError(f"points must have {p.n} coordinates, got shape {y.shape}")
    return y


def _center_distance_sq(p, y):
    shifted = np.array(y, dtype=float, copy=True)
    shifted[..., -1] -= p.t_c * p.eps
    return np.sum(shifted * shifted, axis=-1), shifted


def eval_bubble(p, y):
    """W(y); strictly positive on the closed half-space."""
    y = _as_points(p, y)
    dist_sq, _ = _center_distance_sq(p, y)
    u = p.eps ** 2 + dist_sq
    return (p.eps / u) ** (0.5 * (p.n - 2))


def grad_bubble(p, y):
    """Euclidean gradient of W at y."""
    y = _as_points(p, y)
    dist_sq, shifted = _center_distance_sq(p, y)
    u = p.eps ** 2 + dist_sq
    scale = -(p.n - 2) * p.eps ** (0.5 * (p.n - 2)) * u ** (-0.5 * p.n)
    return scale[..., None] * shifted


def grad_norm_sq(p, y):
    """|grad W|^2 = eps^(n-2) (n-2)^2 |y - t_c*eps*e_n|^2 / (eps^2 + |y - t_c*eps*e_n|^2)^n."""
    y = _as_points(p, y)
    dist_sq, _ = _center_distance_sq(p, y)
    u = p.eps ** 2 + dist_sq
    return p.eps ** (p.n - 2) * (p.n - 2) ** 2 * dist_sq / u ** p.n


def fd_grad_norm_sq(p, y, h_scale=1e-4):
    """|grad W|^2 by central first differences, step h = h_scale*(eps+|y|) per axis."""
    y = _as_points(p, y)
    h = h_scale * (p.eps + np.linalg.norm(y, axis=-1))
    total = np.zeros(y.shape[:-1])
    for axis in range(p.n):
        step = np.zeros_like(y)
        step[..., axis] = h
        diff = (eval_bubble(p, y + step) - eval_bubble(p, y - step)) / (2.0 * h)
        total += diff * diff
    return total


def normal_derivative_boundary(p, y_bar):
    """Analytic dW/dy^n on the boundary slice y^n = 0."""
    y_bar = np.asarray(y_bar, dtype=float)
    if y_bar.shape[-1] != p.n - 1:
        raise ValueError(f"boundary points have {p.n - 1} coordinates")
    u = p.eps ** 2 * (1.0 + p.t_c ** 2) + np.sum(y_bar * y_bar, axis=-1)
    return (p.n - 2) * p.t_c * p.eps ** (0.5 * p.n) * u ** (-0.5 * p.n)


def pde_residuals(p, y, h_scale=1e-4):
    """Interior and boundary residuals of the critical problem at a point.

    interior = -lap(W) - n(n-2) W^((n+2)/(n-2)) with a central finite-difference
    Laplacian evaluated at y (requires y^n > 0); boundary uses the analytic
    normal derivative at (y_bar, 0):  dW/dy^n - (n-2) t_c W^(n/(n-2)).
    """
    y = _as_points(p, np.asarray(y, dtype=float))
    if y.ndim != 1:
        raise ValueError("pde_residuals evaluates one point at a time")
    if y[-1] <= 0.0:
        raise ValueError("interior residual requires y_n > 0")

    h = h_scale * (p.eps + float(np.linalg.norm(y)))
    w0 = float(eval_bubble(p, y))
    lap = 0.0
    for axis in range(p.n):
        step = np.zeros(p.n)
        step[axis] = h
        lap += (float(eval_bubble(p, y + step)) - 2.0 * w0 + float(eval_bubble(p, y - step))) / h ** 2
    interior = -lap - p.n * (p.n - 2) * w0 ** ((p.n + 2) / (p.n - 2))

    y_bar = y[:-1]
    w_b = float(eval_bubble(p, np.concatenate([y_bar, [0.0]])))
    boundary = float(normal_derivative_boundary(p, y_bar)) - (p.n - 2) * p.t_c * w_b ** (p.n / (p.n - 2))
    return interior, boundary


def comparability_constant(t_c):
    """min{1/4, 1/(2(1+2 t_c^2))} for t_c >= 0; the easy constant 1/4 otherwise."""
    if t_c < 0.0:
        return 0.25
    return min(0.25, 0.5 / (1.0 + 2.0 * t_c ** 2))


def comparability_bound(p, y):
    """(lhs, rhs, constant) with lhs = eps^2 + |y - t_c*eps*e_n|^2 >= rhs = constant*(eps+|y|)^2."""
    y = _as_points(p, y)
    dist_sq, _ = _center_distance_sq(p, y)
    lhs = p.eps ** 2 + dist_sq
    constant = comparability_constant(p.t_c)
    rhs = constant * (p.eps + np.linalg.norm(y, axis=-1)) ** 2
    return lhs, rhs, constant


def comparability_upper_ratio(p, y):
    """Largest observed (eps^2+|y-t_c*eps*e_n|^2)/(eps+|y|)^2 over the sample.

    No matching explicit constant is claimed for this direction; the value is
    reported for reference.  Elementary algebra bounds it by 1 + t_c^2.
    """
    y = _as_points(p, y)
    dist_sq, _ = _center_distance_sq(p, y)
    ratio = (p.eps ** 2 + dist_sq) / (p.eps + np.linalg.norm(y, axis=-1)) ** 2
    return float(np.max(ratio))


def scaling_check(p, y):
    """Relative gap between W at (eps, y) and eps^((2-n)/2) * W at (1, y/eps)."""
    y = _as_points(p, y)
    direct = eval_bubble(p, y)
    unit = BubbleParams(n=p.n, eps=1.0, t_c=p.t_c)
    rescaled = p.eps ** (0.5 * (2 - p.n)) * eval_bubble(unit, y / p.eps)
    return np.max(np.abs(direct - rescaled) / np.abs(rescaled))


def seeded_points(p, count, seed, box=3.0):
    """Deterministic sample of interior points, kept away from the gradient zero."""
    rng = np.random.default_rng([seed, p.n])
    pts = rng.uniform(-box, box, size=(count, p.n))
    pts[:, -1] = rng.uniform(0.05, box, size=count)
    center = np.zeros(p.n)
    center[-1] = p.t_c * p.eps
    stuck = np.linalg.norm(pts - center, axis=1) < 0.1
    pts[stuck, -1] += 0.5 * box
    return pts
