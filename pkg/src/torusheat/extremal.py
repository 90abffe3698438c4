"""
Extremal temperatures (minimum and maximum of the heat kernel) on flat
tori of area 1.

Rectangular and hexagonal tori have closed forms in theta-nulls and cubic
theta functions.  General lattices are handled by a coarse grid followed
by a compass-style pattern search.
"""

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import DomainError
from .lattice import TorusPoint, hexagonal_lattice, heat_kernel, heat_kernel_grid
from .theta import cubic_theta, theta_null_excess_t, theta_null_t

HEX_SCALE = 2.0 / math.sqrt(3.0)

GRID_SIZE = 64
PATTERN_MIN_STEP = 1e-10
MAX_CANDIDATES = 8
TIE_RTOL = 1e-12
SAME_POINT_TOL = 1e-6

LOG_ALPHA_RANGE = (-3.0, 3.0)
PRESCAN_POINTS = 50
FALLBACK_POINTS = 2001
GOLDEN_TOL = 1e-8
_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0

MAXIMIZE_MIN = "maximize_min"
MINIMIZE_MAX = "minimize_max"


@dataclass(frozen=True)
class ExtremalResult:
    value: float
    location: TorusPoint
    argmax_alpha: Optional[float] = None
    diagnostics: dict = field(default_factory=dict, compare=False)


def _positive(name, v):
    v = float(v)
    if not v > 0.0 or math.isinf(v):
        raise DomainError(f"{name} must be a finite positive number, got {v!r}")
    return v


# ---------------------------------------------------------------------------
# closed forms


def rect_min_temp(alpha, t):
    """A(alpha; t) = theta_4(e^{-pi t alpha^2}) theta_4(e^{-pi t / alpha^2}), attained at (1/2, 1/2)."""
    alpha = _positive("alpha", alpha)
    t = _positive("t", t)
    a2 = alpha * alpha
    value = theta_null_t(4, t * a2) * theta_null_t(4, t / a2)
    return ExtremalResult(value, TorusPoint(0.5, 0.5))


def rect_max_temp(alpha, t):
    """B(alpha; t) = theta_3(e^{-pi t alpha^2}) theta_3(e^{-pi t / alpha^2}), attained at the origin."""
    alpha = _positive("alpha", alpha)
    t = _positive("t", t)
    a2 = alpha * alpha
    value = theta_null_t(3, t * a2) * theta_null_t(3, t / a2)
    return ExtremalResult(value, TorusPoint(0.0, 0.0))


def hex_extremal_temps(t):
    """
    Minimum and maximum temperature on the hexagonal torus.

    A = b(q) = c(q*)/t and B = a(q) = a(q*)/t with q = exp(-pi (2/sqrt 3) t)
    and q* = exp(-pi (2/sqrt 3) / t).  The side with the smaller nome is
    reported; the other is kept in ``diagnostics`` as a residual.
    """
    t = _positive("t", t)
    direct = cubic_theta(math.exp(-math.pi * HEX_SCALE * t))
    recip = cubic_theta(math.exp(-math.pi * HEX_SCALE / t))
    a_direct, b_direct = direct.b, direct.a
    a_recip, b_recip = recip.c / t, recip.a / t
    if t >= 1.0:
        a_val, b_val = a_direct, b_direct
    else:
        a_val, b_val = a_recip, b_recip
    diag = {
        "min_reciprocal_residual": a_direct - a_recip,
        "max_reciprocal_residual": b_direct - b_recip,
        "min_locations": [(1.0 / 3.0, 1.0 / 3.0), (2.0 / 3.0, 2.0 / 3.0)],
    }
    lo = ExtremalResult(a_val, TorusPoint(1.0 / 3.0, 1.0 / 3.0), diagnostics=diag)
    hi = ExtremalResult(b_val, TorusPoint(0.0, 0.0), diagnostics=diag)
    return lo, hi


# ---------------------------------------------------------------------------
# general lattices


def general_max_temp(lat, t):
    """B_Lambda(t); the maximum of any torus heat kernel sits at the lattice points."""
    t = _positive("t", t)
    return ExtremalResult(heat_kernel(lat, (0.0, 0.0), t), TorusPoint(0.0, 0.0))


_DIRECTIONS = ((1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1), (1, -1), (-1, 1))


def pattern_search(f, x, y, fx, step, min_step=PATTERN_MIN_STEP):
    """
    Minimize f(x, y) by compass search: try the 8 neighbours at distance
    ``step``, move to the first improvement, otherwise halve the step.
    Returns (x, y, f(x, y), evaluations).
    """
    evals = 0
    while step >= min_step:
        for dx, dy in _DIRECTIONS:
            nx, ny = x + dx * step, y + dy * step
            v = f(nx, ny)
            evals += 1
            if v < fx:
                x, y, fx = nx, ny, v
                break
        else:
            step *= 0.5
    return x, y, fx, evals


def _grid_local_minima(vals):
    is_min = np.ones_like(vals, dtype=bool)
    for dx in (-1, 0, 1):
        for dy in (-1, 0, 1):
            if dx == 0 and dy == 0:
                continue
            is_min &= vals <= np.roll(np.roll(vals, dx, axis=0), dy, axis=1)
    idx = np.argwhere(is_min)
    order = np.argsort(vals[is_min], kind="stable")
    return [tuple(idx[i]) for i in order]


def _torus_distance(p, q):
    d = [abs(a - b) % 1.0 for a, b in zip(p, q)]
    return math.hypot(*(min(v, 1.0 - v) for v in d))


def general_min_temp(lat, t, grid=GRID_SIZE):
    """
    A_Lambda(t) by a grid x grid sweep of [0, 1)^2 and pattern-search
    refinement of the best grid minima.

    Refined minima whose values agree to 1e-12 (relative) are ties; the
    lexicographically smallest location wins and all are listed in
    ``diagnostics['ties']``.
    """
    t = _positive("t", t)
    g = np.arange(grid) / grid
    gx, gy = np.meshgrid(g, g, indexing="ij")
    vals = heat_kernel_grid(lat, gx, gy, t)
    minima = _grid_local_minima(vals)[:MAX_CANDIDATES]

    def f(x, y):
        return heat_kernel(lat, (x, y), t)

    refined = []
    total_evals = grid * grid
    for i, j in minima:
        x, y, v, ev = pattern_search(f, g[i], g[j], vals[i, j], 1.0 / grid)
        total_evals += ev
        p = TorusPoint(x, y)
        if not any(_torus_distance((p.x, p.y), (x_, y_)) < SAME_POINT_TOL for _, x_, y_ in refined):
            refined.append((v, p.x, p.y))
    best = min(v for v, _, _ in refined)
    ties = sorted((x, y, v) for v, x, y in refined if v - best <= TIE_RTOL * abs(best))
    x, y, v = ties[0]
    diag = {
        "grid_min": float(vals.min()),
        "candidates": [(x_, y_, v_) for v_, x_, y_ in refined],
        "ties": ties,
        "evaluations": total_evals,
    }
    return ExtremalResult(v, TorusPoint(x, y), diagnostics=diag)


# ---------------------------------------------------------------------------
# optimization over the rectangular family


def _family_score(objective, t):
    j = 4 if objective == MAXIMIZE_MIN else 3
    sign = 1.0 if objective == MAXIMIZE_MIN else -1.0

    def score(u):
        # product of theta-nulls minus 1, kept small-and-precise for large t
        a2 = math.exp(2.0 * u)
        d1 = theta_null_excess_t(j, t * a2)
        d2 = theta_null_excess_t(j, t / a2)
        return sign * (d1 + d2 + d1 * d2)

    return score


def golden_section_max(f, lo, hi, tol=GOLDEN_TOL, max_iter=200):
    """Maximize a unimodal f on [lo, hi] to a bracket of width tol."""
    x1 = hi - _INV_PHI * (hi - lo)
    x2 = lo + _INV_PHI * (hi - lo)
    f1, f2 = f(x1), f(x2)
    for _ in range(max_iter):
        if hi - lo <= tol:
            break
        if f1 >= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - _INV_PHI * (hi - lo)
            f1 = f(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + _INV_PHI * (hi - lo)
            f2 = f(x2)
    return 0.5 * (lo + hi)


def _is_unimodal(s, peak):
    return bool(np.all(np.diff(s[: peak + 1]) >= 0.0) and np.all(np.diff(s[peak:]) <= 0.0))


def optimize_rect_family(t, objective=MAXIMIZE_MIN):
    """
    Optimize the extremal temperature over rectangular tori alpha^{-1}Z x alpha Z.

    ``maximize_min`` maximizes A(alpha; t), ``minimize_max`` minimizes
    B(alpha; t).  Golden-section search in log(alpha) on [-3, 3] after a
    50-point scan that checks unimodality; a dense grid replaces the scan
    when the check fails.
    """
    t = _positive("t", t)
    if objective not in (MAXIMIZE_MIN, MINIMIZE_MAX):
        raise DomainError(f"objective must be {MAXIMIZE_MIN!r} or {MINIMIZE_MAX!r}, got {objective!r}")
    score = _family_score(objective, t)
    lo, hi = LOG_ALPHA_RANGE
    us = np.linspace(lo, hi, PRESCAN_POINTS)
    s = np.array([score(u) for u in us])
    peak = int(np.argmax(s))
    unimodal = _is_unimodal(s, peak)
    if not unimodal:
        us = np.linspace(lo, hi, FALLBACK_POINTS)
        s = np.array([score(u) for u in us])
        peak = int(np.argmax(s))
    a = us[max(peak - 1, 0)]
    b = us[min(peak + 1, len(us) - 1)]
    u_best = golden_section_max(score, a, b)
    alpha = math.exp(u_best)
    if objective == MAXIMIZE_MIN:
        res = rect_min_temp(alpha, t)
        value = 1.0 + score(u_best)
    else:
        res = rect_max_temp(alpha, t)
        value = 1.0 - score(u_best)
    diag = {"prescan_unimodal": unimodal, "log_alpha": u_best, "objective": objective}
    return ExtremalResult(value, res.location, argmax_alpha=alpha, diagnostics=diag)


# ---------------------------------------------------------------------------
# comparisons with the hexagonal torus


def montgomery_check(lat, t):
    """B_Lambda(t) - B_hex(t); non-negative for every lattice, zero for the hexagonal one."""
    t = _positive("t", t)
    return heat_kernel(lat, (0.0, 0.0), t) - heat_kernel(hexagonal_lattice(), (0.0, 0.0), t)


def conjecture_observations(lattices, t=1.0):
    """
    Compare A_Lambda(t) with the hexagonal minimum for each lattice.

    Returns rows ``(index, A_Lambda, A_hex, A_hex - A_Lambda)``.  Whether the
    hexagonal torus maximizes the minimum is open; this only records data.
    """
    a_hex = hex_extremal_temps(t)[0].value
    rows = []
    for i, lat in enumerate(lattices):
        a = general_min_temp(lat, t).value
        rows.append((i, a, a_hex, a_hex - a))
    return rows
