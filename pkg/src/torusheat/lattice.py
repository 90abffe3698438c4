"""
Unit-area lattices in the plane and the heat kernel of the flat torus
R^2 / Lambda.

A lattice is given by a generator ``M`` in SL(2, R) whose columns are the
basis vectors.  Points on the torus are passed in fractional coordinates
``u`` (Cartesian point ``M u``), so with Gram form ``G = M^T M`` the kernel
has the two equivalent expressions::

    p(u; t) = sum_n exp(-pi t n'Gn) exp(2 pi i sigma(n, u))        (spectral)
            = (1/t) sum_n exp(-(pi/t) (n+u)'G(n+u))                 (periodized)

where sigma is the standard symplectic form.  The first converges fast for
large t, the second for small t.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .errors import DomainError

DET_TOL = 1e-12
LOG_CUT = math.log(1e18)
ROUTE_SWITCH_T = 1.0

J = np.array([[0.0, 1.0], [-1.0, 0.0]])


@dataclass(frozen=True, eq=False)
class Lattice2D:
    """Lattice ``gen @ Z^2`` of area 1; ``gen`` columns are the basis vectors."""

    gen: np.ndarray
    gram: np.ndarray = field(init=False, repr=False)
    min_eigenvalue: float = field(init=False, repr=False)

    def __post_init__(self):
        gen = np.array(self.gen, dtype=float)
        if gen.shape != (2, 2) or not np.all(np.isfinite(gen)):
            raise DomainError(f"generator must be a finite 2x2 matrix, got shape {gen.shape}")
        det = float(gen[0, 0] * gen[1, 1] - gen[0, 1] * gen[1, 0])
        if abs(det - 1.0) > DET_TOL:
            raise DomainError(f"generator determinant is {det!r}, expected 1 (unit area)")
        gen.setflags(write=False)
        gram = gen.T @ gen
        gram = 0.5 * (gram + gram.T)
        gram.setflags(write=False)
        object.__setattr__(self, "gen", gen)
        object.__setattr__(self, "gram", gram)
        object.__setattr__(self, "min_eigenvalue", float(np.linalg.eigvalsh(gram)[0]))

    def quadratic_form(self, k, l):
        g = self.gram
        return g[0, 0] * k * k + 2.0 * g[0, 1] * k * l + g[1, 1] * l * l

    def __repr__(self):
        return f"Lattice2D(gen={self.gen.tolist()})"


@dataclass(frozen=True)
class TorusPoint:
    """Fractional coordinates on the unit torus, reduced into [0, 1)."""

    x: float
    y: float

    def __post_init__(self):
        object.__setattr__(self, "x", _reduce(self.x))
        object.__setattr__(self, "y", _reduce(self.y))

    def as_tuple(self):
        return (self.x, self.y)


def _reduce(v):
    v = float(v) % 1.0
    # float modulo can round up to exactly 1.0 for tiny negative inputs
    return 0.0 if v >= 1.0 else v


def as_point(z):
    if isinstance(z, TorusPoint):
        return z
    x, y = z
    return TorusPoint(x, y)


@dataclass(frozen=True)
class HeatKernelQuery:
    lattice: Lattice2D
    point: TorusPoint
    time: float

    def __post_init__(self):
        if not self.time > 0:
            raise DomainError(f"time must be positive, got {self.time!r}")
        object.__setattr__(self, "point", as_point(self.point))

    def evaluate(self, route="auto"):
        return heat_kernel(self.lattice, self.point, self.time, route=route)


# ---------------------------------------------------------------------------
# constructors


def rectangular_lattice(alpha):
    """alpha^{-1} Z x alpha Z."""
    alpha = float(alpha)
    if not alpha > 0.0 or math.isinf(alpha):
        raise DomainError(f"alpha must be positive, got {alpha!r}")
    return Lattice2D(np.diag([1.0 / alpha, alpha]))


def square_lattice():
    return Lattice2D(np.eye(2))


def hexagonal_lattice():
    """Hexagonal lattice of area 1 with basis (1, 0), (1/2, sqrt(3)/2) up to scale."""
    scale = math.sqrt(2.0) / 3.0**0.25
    gen = scale * np.array([[1.0, 0.5], [0.0, math.sqrt(3.0) / 2.0]])
    # renormalize so the determinant is 1 to the last bit
    gen /= math.sqrt(gen[0, 0] * gen[1, 1])
    return Lattice2D(gen)


def dual_lattice(lat):
    """Euclidean dual lattice, generated by the inverse transpose."""
    return Lattice2D(np.linalg.inv(lat.gen).T)


def adjoint_lattice(lat):
    """Symplectic adjoint lattice, generated by J M^{-T}; equals ``lat`` as a point set."""
    return Lattice2D(J @ np.linalg.inv(lat.gen).T)


def symplectic_form(z, w):
    """sigma(z, w) = x y' - x' y."""
    return z[0] * w[1] - w[0] * z[1]


def random_lattice(rng):
    """
    Random unit-area lattice: a rotation times an upper-triangular
    SL(2) matrix with diagonal exp(+-s), s ~ U(-1/2, 1/2), and shear in [-1, 1].
    """
    theta = rng.uniform(0.0, 2.0 * math.pi)
    a = math.exp(rng.uniform(-0.5, 0.5))
    b = rng.uniform(-1.0, 1.0)
    rot = np.array([[math.cos(theta), -math.sin(theta)], [math.sin(theta), math.cos(theta)]])
    gen = rot @ np.array([[a, b], [0.0, 1.0 / a]])
    return Lattice2D(gen)


def reduce_gram(gram):
    """
    Lagrange-Gauss reduced form (a, b, c) of a positive definite binary
    quadratic form, with 0 <= 2b <= a <= c.  Two Gram matrices describe the
    same lattice up to isometry iff their reduced forms coincide.
    """
    a, b, c = float(gram[0][0]), float(gram[0][1]), float(gram[1][1])
    for _ in range(1000):
        if a > c:
            a, c = c, a
        m = round(b / a)
        if m == 0:
            break
        c = c - 2.0 * m * b + m * m * a
        b = b - m * a
    if a > c:
        a, c = c, a
    return (a, abs(b), c)


def gram_congruent(g1, g2, tol=1e-12):
    r1 = reduce_gram(g1)
    r2 = reduce_gram(g2)
    return all(abs(u - v) <= tol * max(1.0, abs(u)) for u, v in zip(r1, r2))


# ---------------------------------------------------------------------------
# heat kernel


def _check_time(t):
    t = float(t)
    if not t > 0.0 or math.isinf(t):
        raise DomainError(f"time must be a finite positive number, got {t!r}")
    return t


def spectral_radius(lat, t):
    """Index-space radius beyond which exp(-pi t n'Gn) < 1e-18."""
    return math.sqrt(LOG_CUT / (math.pi * t * lat.min_eigenvalue))


def periodized_radius(lat, t):
    """Radius in n + u beyond which exp(-(pi/t)(n+u)'G(n+u)) < 1e-18."""
    return math.sqrt(LOG_CUT * t / (math.pi * lat.min_eigenvalue))


def heat_kernel_grid(lat, xs, ys, t, route="auto"):
    """
    Heat kernel at many fractional points; ``xs`` and ``ys`` are array-like of
    equal shape and are not reduced mod 1.  Returns an array of that shape.
    """
    t = _check_time(t)
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    shape = np.broadcast(xs, ys).shape
    xf = np.broadcast_to(xs, shape).ravel()
    yf = np.broadcast_to(ys, shape).ravel()
    if route == "auto":
        route = "spectral" if t >= ROUTE_SWITCH_T else "periodized"
    g = lat.gram
    if route == "spectral":
        out = kernels.spectral_sum(
            g[0, 0], g[0, 1], g[1, 1], t, xf, yf, spectral_radius(lat, t), LOG_CUT
        )
    elif route == "periodized":
        out = kernels.periodized_sum(
            g[0, 0], g[0, 1], g[1, 1], t, xf, yf, periodized_radius(lat, t), LOG_CUT
        )
    else:
        raise ValueError(f"unknown route {route!r}")
    return np.asarray(out).reshape(shape)


def heat_kernel(lat, point, t, route="auto"):
    """
    Heat kernel p(z; t) on the torus R^2 / lat at a fractional point.

    Parameters
    ----------
    lat : Lattice2D
    point : TorusPoint or pair of floats
    t : float
        Time, > 0.
    route : {'auto', 'spectral', 'periodized'}
        'auto' picks the spectral series for t >= 1.
    """
    if isinstance(point, TorusPoint):
        x, y = point.x, point.y
    else:
        x, y = point
    return float(heat_kernel_grid(lat, [x], [y], t, route=route)[0])


def jacobi_identity_residual(lat, t):
    """p(0; t) - p(0; 1/t)/t, both summed on the spectral side."""
    t = _check_time(t)
    return heat_kernel(lat, (0.0, 0.0), t, "spectral") - heat_kernel(
        lat, (0.0, 0.0), 1.0 / t, "spectral"
    ) / t
