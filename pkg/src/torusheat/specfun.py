"""
Scalar special functions on the real line.

Gamma via a Lanczos approximation, the Pochhammer symbol, Gauss'
hypergeometric series 2F1 on [0, 1), and the complete elliptic integral
of the first kind through the arithmetic-geometric mean.

"""

import math
from dataclasses import dataclass

from .errors import ConvergenceError, DomainError, RangeError

# Lanczos coefficients for g = 7, n = 9 (Godfrey).
_LANCZOS_G = 7.0
_LANCZOS_COEF = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_SQRT_2PI = math.sqrt(2.0 * math.pi)
_GAMMA_DIRECT_MAX = 30.0

HYP2F1_REL_TOL = 1e-17
HYP2F1_MAX_TERMS = 100_000
AGM_MAX_ITER = 60


def _lanczos(x):
    # valid for x >= 1/2
    x -= 1.0
    acc = _LANCZOS_COEF[0]
    for i in range(1, len(_LANCZOS_COEF)):
        acc += _LANCZOS_COEF[i] / (x + i)
    s = x + _LANCZOS_G + 0.5
    # split the power to delay overflow
    h = s ** (0.5 * (x + 0.5))
    return _SQRT_2PI * h * (h * math.exp(-s)) * acc


def gamma(x):
    """Euler's gamma function for real ``x > 0``."""
    x = float(x)
    if not x > 0.0 or math.isinf(x):
        raise DomainError(f"gamma requires a finite x > 0, got {x!r}")
    if x < 0.5:
        return _lanczos(x + 1.0) / x
    if x <= _GAMMA_DIRECT_MAX:
        return _lanczos(x)
    n = math.ceil(x - _GAMMA_DIRECT_MAX)
    y = x - n
    val = _lanczos(y)
    for j in range(n):
        val *= y + j
    if math.isinf(val):
        raise RangeError(f"gamma({x}) overflows binary64")
    return val


def pochhammer(z, n):
    """Rising factorial ``(z)_n = z (z+1) ... (z+n-1)``, with ``(z)_0 = 1``."""
    if int(n) != n or n < 0:
        raise DomainError(f"pochhammer needs a non-negative integer n, got {n!r}")
    out = 1.0
    for j in range(int(n)):
        out *= z + j
        if math.isinf(out):
            raise RangeError(f"pochhammer({z}, {n}) overflows binary64")
    return out


@dataclass(frozen=True)
class HypergeometricArgs:
    a: float
    b: float
    c: float
    x: float

    def __post_init__(self):
        if self.c <= 0 and float(self.c).is_integer():
            raise DomainError(f"c must not be zero or a negative integer, got {self.c}")


def hyp2f1(a, b=None, c=None, x=None):
    """
    Gauss' hypergeometric function 2F1(a, b; c; x) for 0 <= x < 1.

    Accepts either four scalars or a single :class:`HypergeometricArgs`.
    The series is summed until the next term falls below 1e-17 of the
    partial sum.

    Raises
    ------
    DomainError
        If x is outside [0, 1) or c is a non-positive integer.
    ConvergenceError
        If 100000 terms do not reach the tolerance.
    """
    if isinstance(a, HypergeometricArgs):
        args = a
    else:
        args = HypergeometricArgs(float(a), float(b), float(c), float(x))
    a, b, c, x = args.a, args.b, args.c, args.x
    if not 0.0 <= x < 1.0:
        raise DomainError(f"hyp2f1 supports 0 <= x < 1, got x={x!r}")
    total = 1.0
    term = 1.0
    for k in range(HYP2F1_MAX_TERMS):
        term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * x
        total += term
        if abs(term) <= HYP2F1_REL_TOL * abs(total):
            return total
    raise ConvergenceError(
        f"hyp2f1({a}, {b}; {c}; {x}) did not converge in {HYP2F1_MAX_TERMS} terms"
    )


def gauss_half_identity_residual(x, y):
    """Difference between 2F1(x, y; (x+y+1)/2; 1/2) and Gauss' gamma closed form."""
    c = 0.5 * (x + y + 1.0)
    lhs = hyp2f1(x, y, c, 0.5)
    rhs = math.sqrt(math.pi) * gamma(c) / (gamma(0.5 * (x + 1.0)) * gamma(0.5 * (y + 1.0)))
    return lhs - rhs


def agm(a, b):
    """Arithmetic-geometric mean of two positive numbers."""
    a, b = float(a), float(b)
    if a <= 0.0 or b <= 0.0:
        raise DomainError(f"agm needs positive arguments, got {a}, {b}")
    for _ in range(AGM_MAX_ITER):
        if abs(a - b) <= 4.0 * math.ulp(a):
            break
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return 0.5 * (a + b)


def elliptic_k(k):
    """Complete elliptic integral of the first kind K(k), modulus 0 <= k < 1."""
    k = float(k)
    if not 0.0 <= k < 1.0:
        raise DomainError(f"elliptic_k needs 0 <= k < 1, got {k!r}")
    kc = math.sqrt((1.0 - k) * (1.0 + k))
    return 0.5 * math.pi / agm(1.0, kc)
