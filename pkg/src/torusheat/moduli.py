"""
Elliptic modulus and parameter as functions of the nome, the inverse
map from the complementary modulus back to ``t``, and the extremal
temperatures of rectangular tori expressed through 2F1(1/2, 1/2; 1; .).

Hypergeometric arguments above ``HYP_SWITCH`` are evaluated on the theta
side, 2F1(1/2, 1/2; 1; k(q)^2) = theta_3(q)^2, since the series stalls
near 1 while the theta series converges fastest there.
"""

import math
from dataclasses import dataclass

from .errors import ConvergenceError, DomainError
from .specfun import hyp2f1
from .theta import nome_to_t, theta_nulls_t, theta_null_t

HYP_SWITCH = 0.95
T_BRACKET = (1e-6, 1e6)
BISECT_REL_TOL = 1e-13
BISECT_MAX_ITER = 200


@dataclass(frozen=True)
class ModulusQuadruple:
    """Modulus k, complementary modulus k', parameter m = k^2 and m' = k'^2."""

    k: float
    k_comp: float
    m: float
    m_comp: float


@dataclass(frozen=True)
class TemperaturePair:
    min_temp: float
    max_temp: float

    @property
    def ratio(self):
        return self.min_temp / self.max_temp


def _check_open_unit(name, v):
    v = float(v)
    if not 0.0 < v < 1.0:
        raise DomainError(f"{name} must lie in (0, 1), got {v!r}")
    return v


def modulus_from_t(t):
    """Moduli at the nome q = exp(-pi t)."""
    t = float(t)
    if not t > 0.0:
        raise DomainError(f"t must be positive, got {t!r}")
    n = theta_nulls_t(t)
    k = (n.theta2 / n.theta3) ** 2
    kc = (n.theta4 / n.theta3) ** 2
    return ModulusQuadruple(k, kc, k * k, kc * kc)


def modulus_from_nome(q):
    return modulus_from_t(nome_to_t(q))


def t_from_complementary_modulus(k_comp):
    """
    Invert t -> k'(exp(-pi t)) by bisection.

    k' increases strictly with t, so bisection on [1e-6, 1e6] is
    guaranteed to converge; it stops once the bracket is narrower than
    1e-13 * t.
    """
    k_comp = _check_open_unit("k_comp", k_comp)
    lo, hi = T_BRACKET
    for _ in range(BISECT_MAX_ITER):
        mid = 0.5 * (lo + hi)
        if modulus_from_t(mid).k_comp < k_comp:
            lo = mid
        else:
            hi = mid
        if hi - lo < BISECT_REL_TOL * mid:
            return 0.5 * (lo + hi)
    raise ConvergenceError(f"bisection for k_comp={k_comp} hit {BISECT_MAX_ITER} iterations")


def t_from_moduli(quad):
    """
    Recover t from a full :class:`ModulusQuadruple`.

    Uses whichever of k, k' is smaller: near 1 either one retains only a few
    significant digits of its distance to 1, while the smaller one is known
    to full relative precision.  k(t) = k'(1/t) links the two branches.
    """
    if quad.k_comp <= quad.k:
        return t_from_complementary_modulus(quad.k_comp)
    return 1.0 / t_from_complementary_modulus(quad.k)


def hyp_half_from_comp(k_comp):
    """
    2F1(1/2, 1/2; 1; 1 - k_comp^2), the hypergeometric factor for the modulus
    whose complement is ``k_comp``.
    """
    k_comp = _check_open_unit("k_comp", k_comp)
    x = (1.0 - k_comp) * (1.0 + k_comp)
    if x <= HYP_SWITCH:
        return hyp2f1(0.5, 0.5, 1.0, x)
    t = t_from_complementary_modulus(k_comp)
    return theta_null_t(3, t) ** 2


def split_temperatures_square(k_comp):
    """
    Coldest and hottest temperature on the square torus whose temperature
    ratio is ``k_comp``: A = k' F, B = F with F = 2F1(1/2, 1/2; 1; 1 - k'^2).
    """
    f = hyp_half_from_comp(k_comp)
    return TemperaturePair(float(k_comp) * f, f)


def rect_temperatures_from_modulus(k_comp):
    """
    Extremal temperatures of the unit-area rectangular torus at time 1,
    parametrized by its complementary modulus::

        A = sqrt(k k' F(k^2) F(k'^2)),   B = sqrt(F(k^2) F(k'^2))

    with F = 2F1(1/2, 1/2; 1; .) and k = sqrt(1 - k'^2).
    """
    kc = _check_open_unit("k_comp", k_comp)
    k = math.sqrt((1.0 - kc) * (1.0 + kc))
    f_k = hyp_half_from_comp(kc)
    f_kc = hyp_half_from_comp(k)
    prod = f_k * f_kc
    return TemperaturePair(math.sqrt(k * kc * prod), math.sqrt(prod))
