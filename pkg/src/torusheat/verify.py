"""
Registry of numerical self-checks, grouped into suites.

Each check reduces to a non-negative residual compared against a
tolerance.  Hard checks decide the exit status of ``torusheat verify``;
soft checks record observations (an open conjecture) and never fail.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import constants, extremal, lattice, moduli, specfun, theta

DEFAULT_SEED = 42
N_RANDOM_LATTICES = 20
N_MONTGOMERY_LATTICES = 50
N_CONJECTURE_LATTICES = 10
INJECTED_RESIDUAL = 1.0

Q_GRID = tuple(round(0.05 * i, 2) for i in range(1, 20))
T_MODULAR = (0.2, 0.5, 1.0, 2.0, 5.0)
T_GRID_MODULI = tuple(i / 10 for i in range(1, 101))


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    residual: float
    tol: float
    hard: bool = True

    @property
    def passed(self):
        return bool(self.residual <= self.tol)

    @property
    def qualified_name(self):
        return f"{self.suite}.{self.name}"


def _rel(u, v):
    return abs(u - v) / abs(v)


def random_lattices(seed, n):
    """``n`` random unit-area lattices from a PCG64 stream seeded with ``seed``."""
    rng = np.random.default_rng(seed)
    return [lattice.random_lattice(rng) for _ in range(n)]


# ---------------------------------------------------------------------------
# suites; each yields (name, residual, tol, hard)


def _specfun_checks(seed):
    xs = [i / 10 for i in range(10)]
    yield (
        "elliptic_k_vs_hyp2f1",
        max(
            _rel(specfun.elliptic_k(math.sqrt(x)), 0.5 * math.pi * specfun.hyp2f1(0.5, 0.5, 1.0, x))
            for x in xs
        ),
        1e-12,
        True,
    )
    grid = np.linspace(0.0, 0.95, 100)
    drops = 0
    for a, b in ((0.5, 0.5), (1.0 / 3.0, 2.0 / 3.0)):
        vals = [specfun.hyp2f1(a, b, 1.0, x) for x in grid]
        drops += sum(v1 <= v0 for v0, v1 in zip(vals, vals[1:]))
    yield ("hyp2f1_monotone_violations", float(drops), 0.0, True)
    yield (
        "gamma_recurrence",
        max(
            _rel(specfun.gamma(x + 1.0), x * specfun.gamma(x))
            for x in (i / 10 for i in range(1, 51))
        ),
        1e-13,
        True,
    )
    g = (np.arange(20) + 0.5) / 20
    yield (
        "gauss_half_identity",
        max(abs(specfun.gauss_half_identity_residual(x, y)) for x in g for y in g),
        1e-11,
        True,
    )


def _theta_checks(seed):
    quartic = 0.0
    cubic = 0.0
    for q in Q_GRID:
        n = theta.theta_nulls(q)
        quartic = max(quartic, abs(n.theta2**4 + n.theta4**4 - n.theta3**4) / n.theta3**4)
        c = theta.cubic_theta(q)
        cubic = max(cubic, abs(c.a**3 - c.b**3 - c.c**3) / c.a**3)
    yield ("quartic_identity", quartic, 1e-12, True)
    yield ("cubic_identity", cubic, 1e-12, True)

    rng = np.random.default_rng(seed)
    excess = 0.0
    for q in (0.1, 0.5, 0.9):
        floor = theta.jacobi_theta(3, 0.5, q)
        zs = rng.uniform(0.0, 1.0, 1000)
        lowest = min(theta.jacobi_theta(3, z, q) for z in zs)
        excess = max(excess, (floor - lowest) / floor)
    yield ("theta3_minimum_at_half", max(excess, 0.0), 0.0, True)

    zs = np.arange(50) / 50
    worst = 0.0
    for q in (i / 10 for i in range(1, 10)):
        for z in zs:
            s = theta.jacobi_theta(3, z, q)
            worst = max(worst, _rel(theta.theta3_triple_product(z, q), s))
    yield ("triple_product", worst, 1e-12, True)

    yield (
        "modular_transform",
        max(abs(theta.theta_null_transform_residual(j, t)) for j in (2, 3, 4) for t in T_MODULAR),
        1e-12,
        True,
    )


def _moduli_checks(seed):
    ks = [moduli.modulus_from_t(t) for t in T_GRID_MODULI]
    bad = sum(b.k >= a.k for a, b in zip(ks, ks[1:])) + sum(
        b.k_comp <= a.k_comp for a, b in zip(ks, ks[1:])
    )
    yield ("monotone_violations", float(bad), 0.0, True)
    yield (
        "round_trip",
        max(_rel(moduli.t_from_moduli(m), t) for m, t in zip(ks, T_GRID_MODULI)),
        1e-9,
        True,
    )
    split = 0.0
    for t in (0.5, 1.0, 2.0, 5.0):
        a = extremal.rect_min_temp(1.0, t).value
        b = extremal.rect_max_temp(1.0, t).value
        split = max(split, abs(moduli.modulus_from_t(t).k_comp - a / b))
    yield ("splitting_consistency", split, 1e-12, True)
    magic = 0.0
    for t in (0.5, 1.0, 2.0, 4.0):
        th3 = theta.theta_null_t(3, t)
        magic = max(magic, _rel(specfun.hyp2f1(0.5, 0.5, 1.0, moduli.modulus_from_t(t).m), th3**2))
    yield ("ramanujan_identity", magic, 1e-10, True)
    sym = 0.0
    for x in np.linspace(0.05, 0.95, 19):
        p = moduli.rect_temperatures_from_modulus(x)
        r = moduli.rect_temperatures_from_modulus(math.sqrt((1.0 - x) * (1.0 + x)))
        sym = max(sym, abs(p.min_temp - r.min_temp), abs(p.max_temp - r.max_temp))
    yield ("modulus_swap_symmetry", sym, 1e-12, True)
    prod = 0.0
    for alpha in (1.0, 1.5, 2.0):
        p = moduli.rect_temperatures_from_modulus(moduli.modulus_from_t(alpha * alpha).k_comp)
        prod = max(
            prod,
            _rel(p.min_temp, extremal.rect_min_temp(alpha, 1.0).value),
            _rel(p.max_temp, extremal.rect_max_temp(alpha, 1.0).value),
        )
    yield ("hypergeometric_temperatures", prod, 1e-10, True)


def _lattice_checks(seed):
    rng = np.random.default_rng(seed)
    lats = [lattice.random_lattice(rng) for _ in range(N_RANDOM_LATTICES)]
    pts = rng.uniform(0.0, 1.0, (5, 2))
    poisson = 0.0
    jacobi = 0.0
    above_origin = 0.0
    period = 0.0
    bound = 0.0
    for lat in lats:
        for t in (0.5, 1.0, 2.0):
            sp = lattice.heat_kernel_grid(lat, pts[:, 0], pts[:, 1], t, "spectral")
            pe = lattice.heat_kernel_grid(lat, pts[:, 0], pts[:, 1], t, "periodized")
            poisson = max(poisson, float(np.max(np.abs(sp - pe) / np.abs(pe))))
            p0 = lattice.heat_kernel(lat, (0.0, 0.0), t)
            above_origin = max(above_origin, float(np.max(sp)) - p0)
            shifted = np.maximum(
                np.abs(lattice.heat_kernel_grid(lat, pts[:, 0] + 1.0, pts[:, 1], t) - sp),
                np.abs(lattice.heat_kernel_grid(lat, pts[:, 0], pts[:, 1] + 1.0, t) - sp),
            )
            period = max(period, float(np.max(shifted)))
            g = np.arange(16) / 16
            gx, gy = np.meshgrid(g, g, indexing="ij")
            # the grid minimum bounds A from above
            bound = max(bound, float(lattice.heat_kernel_grid(lat, gx, gy, t).min()) - 1.0)
        jacobi = max(jacobi, *(abs(lattice.jacobi_identity_residual(lat, t)) for t in (0.5, 2.0)))
    yield ("spectral_vs_periodized", poisson, 1e-11, True)
    yield ("jacobi_identity", jacobi, 1e-11, True)
    yield ("maximum_at_origin", max(above_origin, 0.0), 1e-13, True)
    yield ("periodicity", period, 1e-13, True)
    yield ("minimum_at_most_one", max(bound, 0.0), 0.0, True)

    hexl = lattice.hexagonal_lattice()
    grid = extremal.GRID_SIZE
    g = np.arange(grid) / grid
    gx, gy = np.meshgrid(g, g, indexing="ij")
    loc = 0.0
    pair = 0.0
    for t in (0.25, 0.5, 1.0, 2.0, 4.0):
        vals = lattice.heat_kernel_grid(hexl, gx, gy, t)
        i, j = np.unravel_index(np.argmin(vals), vals.shape)
        d = min(
            extremal._torus_distance((g[i], g[j]), (1 / 3, 1 / 3)),
            extremal._torus_distance((g[i], g[j]), (2 / 3, 2 / 3)),
        )
        # grid resolution: half a cell diagonal
        loc = max(loc, d * grid / math.sqrt(0.5))
        v1 = lattice.heat_kernel(hexl, (1 / 3, 1 / 3), t)
        v2 = lattice.heat_kernel(hexl, (2 / 3, 2 / 3), t)
        pair = max(pair, abs(v1 - v2))
    yield ("hex_grid_minimum_location", loc, 1.0, True)
    yield ("hex_barycenters_agree", pair, 1e-13, True)

    congr = 0.0
    for lat in lats:
        adj = lattice.adjoint_lattice(lat)
        congr = max(congr, 0.0 if lattice.gram_congruent(adj.gram, lat.gram) else 1.0)
    dual_hex = lattice.dual_lattice(hexl)
    congr = max(congr, 0.0 if lattice.gram_congruent(dual_hex.gram, hexl.gram) else 1.0)
    yield ("adjoint_and_hex_dual_congruent", congr, 0.0, True)


def _extremal_checks(seed):
    search = 0.0
    for alpha in (0.5, 1.0, 1.3, 2.0):
        lat = lattice.rectangular_lattice(alpha)
        for t in (0.5, 1.0, 2.0):
            found = extremal.general_min_temp(lat, t).value
            search = max(search, abs(found - extremal.rect_min_temp(alpha, t).value))
    yield ("search_vs_closed_form", search, 1e-9, True)

    bad = 0
    for t in (0.5, 1.0, 2.0, 5.0):
        a1 = extremal.rect_min_temp(1.0, t).value
        b1 = extremal.rect_max_temp(1.0, t).value
        for alpha in (0.25 * i for i in range(1, 17)):
            if alpha == 1.0:
                continue
            bad += extremal.rect_min_temp(alpha, t).value >= a1
            bad += extremal.rect_max_temp(alpha, t).value <= b1
    yield ("square_optimality_violations", float(bad), 0.0, True)

    opt = 0.0
    for t in (0.5, 1.0, 2.0, 5.0):
        for obj in (extremal.MAXIMIZE_MIN, extremal.MINIMIZE_MAX):
            opt = max(opt, abs(extremal.optimize_rect_family(t, obj).argmax_alpha - 1.0))
    yield ("rect_family_optimum_at_square", opt, 1e-6, True)

    lo, hi = extremal.hex_extremal_temps(1.0)
    yield ("hex_ratio", abs(lo.value / hi.value - 2.0 ** (-1.0 / 3.0)), 1e-12, True)

    lats = random_lattices(seed, N_MONTGOMERY_LATTICES)
    worst = min(extremal.montgomery_check(lat, t) for lat in lats for t in (0.5, 1.0, 2.0))
    yield ("montgomery_margin", max(-worst, 0.0), 1e-11, True)

    rows = extremal.conjecture_observations(lats[:N_CONJECTURE_LATTICES], 1.0)
    yield ("hex_maximizes_minimum", max(max(-r[3] for r in rows), 0.0), 1e-9, False)


def _constants_checks(seed):
    for c in constants.all_constants():
        yield (f"{c.name}_routes", c.max_residual, 1e-10, True)
    a_hex = extremal.hex_extremal_temps(1.0)[0].value
    chain3 = (
        2.0 * a_hex,
        2.0 ** (2.0 / 3.0) * specfun.hyp2f1(1 / 3, 2 / 3, 1.0, 0.5),
        specfun.gamma(1 / 6) / (specfun.gamma(1 / 3) * specfun.gamma(5 / 6)),
    )
    yield ("signature3_chain", max(_rel(u, v) for u in chain3 for v in chain3), 1e-10, True)
    chain2 = (
        2.0 * extremal.rect_min_temp(1.0, 1.0).value,
        math.sqrt(2.0) * specfun.hyp2f1(0.5, 0.5, 1.0, 0.5),
        specfun.gamma(0.25) / (specfun.gamma(0.5) * specfun.gamma(0.75)),
    )
    yield ("signature2_chain", max(_rel(u, v) for u in chain2 for v in chain2), 1e-11, True)
    c = theta.cubic_theta(constants.HEX_NOME)
    yield (
        "cubic_ramanujan_identity",
        _rel(specfun.hyp2f1(1 / 3, 2 / 3, 1.0, c.s**3), c.a),
        1e-10,
        True,
    )


SUITES = {
    "specfun": _specfun_checks,
    "theta": _theta_checks,
    "moduli": _moduli_checks,
    "lattice": _lattice_checks,
    "extremal": _extremal_checks,
    "constants": _constants_checks,
}


def suite_names():
    return ("all",) + tuple(SUITES)


def run_suite(suite="all", seed=DEFAULT_SEED, inject=None):
    """
    Run one suite (or ``'all'``) and return a list of :class:`CheckResult`.

    ``inject`` names a check (``suite.name`` or bare ``name``) whose residual
    is perturbed by 1.0, to exercise the failure path.
    """
    names = tuple(SUITES) if suite == "all" else (suite,)
    if any(n not in SUITES for n in names):
        raise KeyError(f"unknown suite {suite!r}")
    out = []
    for s in names:
        for name, residual, tol, hard in SUITES[s](seed):
            r = CheckResult(s, name, float(residual), float(tol), hard)
            if inject is not None and inject in (r.name, r.qualified_name):
                r = CheckResult(s, name, r.residual + INJECTED_RESIDUAL, r.tol, hard)
            out.append(r)
    return out


def hard_failures(results):
    return [r for r in results if r.hard and not r.passed]
