"""
Jacobi theta functions, theta-nulls and Borwein's cubic theta functions
for a real nome ``0 < q < 1``.

Conventions follow Whittaker & Watson with argument ``pi*z``, so that
theta_3 and theta_4 are 1-periodic in ``z``::

    theta_3(z, q) = sum_k q^(k^2) exp(2 pi i k z)

Most routines take the nome ``q``; the ``*_t`` variants take ``t`` with
``q = exp(-pi t)``.  For ``q > exp(-pi/4)`` (``t < 1/4``) the series are
evaluated on the modular side ``t -> 1/t`` where they converge fast and
avoid the cancellation of the alternating series.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

TERM_CUT = 1e-18
LOG_CUT = math.log(1.0 / TERM_CUT)
T_SWITCH = 0.25
Q_SWITCH = math.exp(-math.pi * T_SWITCH)
SAFETY_TERMS = 2

# theta_j(e^{-pi t}) = t^{-1/2} theta_{sigma(j)}(e^{-pi/t})
MODULAR_PARTNER = {2: 4, 3: 3, 4: 2}


def nome_to_t(q):
    q = float(q)
    if not 0.0 < q < 1.0:
        raise DomainError(f"nome must satisfy 0 < q < 1, got {q!r}")
    return -math.log(q) / math.pi


def _check_t(t):
    t = float(t)
    if not t > 0.0 or math.isinf(t):
        raise DomainError(f"t must be a finite positive number, got {t!r}")
    return t


def _last_index(t, shift=0.0):
    """Largest index K (plus safety) for which exp(-pi t (K+shift)^2) may exceed TERM_CUT."""
    return int(math.ceil(math.sqrt(LOG_CUT / (math.pi * t)) - shift)) + SAFETY_TERMS


# ---------------------------------------------------------------------------
# theta-nulls


def theta_null_series(j, t):
    """theta_j(e^{-pi t}) by direct summation of the defining series, no transform."""
    t = _check_t(t)
    if j == 3:
        terms = [math.exp(-math.pi * t * k * k) for k in range(1, _last_index(t) + 1)]
        return 1.0 + 2.0 * math.fsum(terms)
    if j == 4:
        terms = [(-1) ** k * math.exp(-math.pi * t * k * k) for k in range(1, _last_index(t) + 1)]
        return 1.0 + 2.0 * math.fsum(terms)
    if j == 2:
        terms = [math.exp(-math.pi * t * (k + 0.5) ** 2) for k in range(0, _last_index(t, 0.5) + 1)]
        return 2.0 * math.fsum(terms)
    raise DomainError(f"theta-null index must be 2, 3 or 4, got {j!r}")


def theta_null_t(j, t):
    """theta_j(e^{-pi t}) for j in {2, 3, 4}, switching to the modular side for t < 1/4."""
    t = _check_t(t)
    if j not in MODULAR_PARTNER:
        raise DomainError(f"theta-null index must be 2, 3 or 4, got {j!r}")
    if t < T_SWITCH:
        return theta_null_series(MODULAR_PARTNER[j], 1.0 / t) / math.sqrt(t)
    return theta_null_series(j, t)


def theta_null(j, q):
    """Theta-null theta_j(q) = vartheta_j(0, q), j in {2, 3, 4}."""
    return theta_null_t(j, nome_to_t(q))


def theta_null_excess_t(j, t):
    """theta_j(e^{-pi t}) - 1 for j in {3, 4}, keeping full relative precision for large t."""
    t = _check_t(t)
    if j not in (3, 4):
        raise DomainError(f"excess is defined for j = 3, 4, got {j!r}")
    if t < T_SWITCH:
        return theta_null_t(j, t) - 1.0
    sign = 1 if j == 3 else -1
    terms = [sign**k * math.exp(-math.pi * t * k * k) for k in range(1, _last_index(t) + 1)]
    return 2.0 * math.fsum(terms)


@dataclass(frozen=True)
class ThetaNulls:
    theta2: float
    theta3: float
    theta4: float


def theta_nulls_t(t):
    return ThetaNulls(theta_null_t(2, t), theta_null_t(3, t), theta_null_t(4, t))


def theta_nulls(q):
    return theta_nulls_t(nome_to_t(q))


def theta_null_transform_residual(j, t):
    """
    theta_j(e^{-pi t}) - t^{-1/2} theta_{sigma(j)}(e^{-pi/t}) with sigma = (3 3)(2 4).

    Both sides are summed directly so the result is an honest check of
    the modular transformation.
    """
    t = _check_t(t)
    if j not in MODULAR_PARTNER:
        raise DomainError(f"theta-null index must be 2, 3 or 4, got {j!r}")
    return theta_null_series(j, t) - theta_null_series(MODULAR_PARTNER[j], 1.0 / t) / math.sqrt(t)


# ---------------------------------------------------------------------------
# theta functions with argument


def _theta_fourier(j, z, t):
    if j in (3, 4):
        z = z % 1.0
        n = _last_index(t)
        sign = 1 if j == 3 else -1
        terms = [
            sign**k * math.exp(-math.pi * t * k * k) * math.cos(2.0 * math.pi * k * z)
            for k in range(1, n + 1)
        ]
        return 1.0 + 2.0 * math.fsum(terms)
    z = z % 2.0
    n = _last_index(t, 0.5)
    if j == 2:
        terms = [
            math.exp(-math.pi * t * (k + 0.5) ** 2) * math.cos((2 * k + 1) * math.pi * z)
            for k in range(0, n + 1)
        ]
    else:
        terms = [
            (-1) ** k * math.exp(-math.pi * t * (k + 0.5) ** 2) * math.sin((2 * k + 1) * math.pi * z)
            for k in range(0, n + 1)
        ]
    return 2.0 * math.fsum(terms)


def _gaussian_side(z, t, alternating):
    # t^{-1/2} sum_n (+-1)^n exp(-pi (z - n)^2 / t)
    r = math.sqrt(LOG_CUT * t / math.pi)
    lo = int(math.floor(z - r)) - SAFETY_TERMS
    hi = int(math.ceil(z + r)) + SAFETY_TERMS
    terms = []
    for n in range(lo, hi + 1):
        w = math.exp(-math.pi * (z - n) ** 2 / t)
        terms.append(-w if alternating and n % 2 else w)
    return math.fsum(terms) / math.sqrt(t)


def _theta_gaussian(j, z, t):
    if j == 3:
        return _gaussian_side(z % 1.0, t, False)
    if j == 4:
        return _gaussian_side((z + 0.5) % 1.0, t, False)
    if j == 2:
        return _gaussian_side(z % 2.0, t, True)
    return -_gaussian_side((z + 0.5) % 2.0, t, True)


def jacobi_theta_t(j, z, t):
    """vartheta_j(z, e^{-pi t}) for real z."""
    t = _check_t(t)
    if j not in (1, 2, 3, 4):
        raise DomainError(f"theta index must be 1..4, got {j!r}")
    z = float(z)
    if t < T_SWITCH:
        return _theta_gaussian(j, z, t)
    return _theta_fourier(j, z, t)


def jacobi_theta(j, z, q):
    """
    Jacobi theta function vartheta_j(z, q), j = 1..4, for real z and 0 < q < 1.

    Examples
    --------
    >>> round(jacobi_theta(3, 0.0, math.exp(-math.pi)), 12)
    1.086434811213
    """
    return jacobi_theta_t(j, z, nome_to_t(q))


def theta3_triple_product(z, q):
    """vartheta_3(z, q) from the Jacobi triple product."""
    q = float(q)
    if not 0.0 < q < 1.0:
        raise DomainError(f"nome must satisfy 0 < q < 1, got {q!r}")
    # 1 + 2 p cos(2 pi z) + p^2 == (1 - p)^2 + 4 p cos(pi z)^2, free of cancellation
    c2 = math.cos(math.pi * (float(z) % 1.0)) ** 2
    logs = []
    k = 1
    while True:
        p = q ** (2 * k - 1)
        p2 = p * q
        logs.append(math.log1p(-p2))
        logs.append(math.log((1.0 - p) ** 2 + 4.0 * p * c2))
        if p * (2.0 + q) < TERM_CUT:
            break
        k += 1
    return math.exp(math.fsum(logs))


# ---------------------------------------------------------------------------
# cubic theta functions


@dataclass(frozen=True)
class CubicThetaTriple:
    a: float
    b: float
    c: float

    @property
    def s(self):
        """Cubic modulus c/a."""
        return self.c / self.a

    @property
    def s_comp(self):
        """Complementary cubic modulus b/a."""
        return self.b / self.a


def cubic_theta(q):
    """
    Borwein cubic theta functions a(q), b(q), c(q) by direct double sums.

    The phase exp(2 pi i (k - l)/3) in b(q) is replaced by its real part,
    which depends only on (k - l) mod 3.
    """
    q = float(q)
    if not 0.0 < q < 1.0:
        raise DomainError(f"nome must satisfy 0 < q < 1, got {q!r}")
    lq = -math.log(q)
    # k^2 + kl + l^2 >= (k^2 + l^2)/2
    r = int(math.ceil(math.sqrt(2.0 * LOG_CUT / lq))) + SAFETY_TERMS
    idx = np.arange(-r, r + 1)
    k, l = np.meshgrid(idx, idx, indexing="ij")
    k = k.ravel()
    l = l.ravel()
    form = k * k + k * l + l * l
    w = np.exp(-lq * form)
    phase = np.where((k - l) % 3 == 0, 1.0, -0.5)
    # (k+1/3)^2 + (k+1/3)(l+1/3) + (l+1/3)^2 = (3(k^2+kl+l^2+k+l) + 1) / 3
    shifted = (3 * (form + k + l) + 1) / 3.0
    a = math.fsum(w)
    b = math.fsum(w * phase)
    c = math.fsum(np.exp(-lq * shifted))
    return CubicThetaTriple(a, b, c)
