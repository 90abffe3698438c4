"""
Named constants tied to the extremal temperatures, each computed along
several independent routes (theta series, hypergeometric series, gamma
function, AGM, heat-kernel sums) so that the routes check one another.

``status`` separates values fixed by proven identities from the value of
the hexagonal minimum, whose extremality among all tori is only conjectured.
"""

import math
from dataclasses import dataclass
from itertools import combinations

from .extremal import HEX_SCALE
from .lattice import heat_kernel, hexagonal_lattice, square_lattice
from .specfun import agm, gamma, hyp2f1
from .theta import cubic_theta, theta_null_t

PROVEN = "proven-identity"
CONJECTURED = "conjectured-extremal"

HEX_NOME = math.exp(-math.pi * HEX_SCALE)


@dataclass(frozen=True)
class NamedConstant:
    name: str
    value: float
    routes: tuple
    max_residual: float
    status: str = PROVEN

    @property
    def reciprocal(self):
        return 1.0 / self.value

    def route(self, label):
        return dict(self.routes)[label]


def _named(name, routes, status=PROVEN):
    routes = tuple(routes)
    value = routes[0][1]
    worst = max(
        (abs(u - v) / abs(value) for (_, u), (_, v) in combinations(routes, 2)), default=0.0
    )
    return NamedConstant(name, value, routes, worst, status)


def gauss_constant():
    """G = theta_4(e^{-pi})^2 = 1/agm(1, sqrt 2), about 0.834627."""
    lemniscate = gamma(0.5) * gamma(0.75) / gamma(0.25)
    return _named(
        "gauss_constant",
        [
            ("theta4_null_squared", theta_null_t(4, 1.0) ** 2),
            ("hyp2f1_half", hyp2f1(0.5, 0.5, 1.0, 0.5) / math.sqrt(2.0)),
            ("gamma", 1.0 / (2.0 * lemniscate)),
            ("agm", 1.0 / agm(1.0, math.sqrt(2.0))),
            ("square_torus_minimum", heat_kernel(square_lattice(), (0.5, 0.5), 1.0)),
        ],
    )


def landau_square_constant():
    """Second lemniscate constant Gamma(1/2)Gamma(3/4)/Gamma(1/4) = 1/(2G), about 0.599070."""
    return _named(
        "landau_square_constant",
        [
            ("gamma", gamma(0.5) * gamma(0.75) / gamma(0.25)),
            ("theta4_null_squared", 1.0 / (2.0 * theta_null_t(4, 1.0) ** 2)),
            ("hyp2f1_half", 1.0 / (math.sqrt(2.0) * hyp2f1(0.5, 0.5, 1.0, 0.5))),
        ],
    )


def landau_upper_constant():
    """Gamma(1/3)Gamma(5/6)/Gamma(1/6) = 1/(2 A_hex(1)), about 0.543259."""
    return _named(
        "landau_upper_constant",
        [
            ("gamma", gamma(1.0 / 3.0) * gamma(5.0 / 6.0) / gamma(1.0 / 6.0)),
            ("cubic_theta_b", 1.0 / (2.0 * cubic_theta(HEX_NOME).b)),
            ("hyp2f1_cubic", 1.0 / (2.0 ** (2.0 / 3.0) * hyp2f1(1.0 / 3.0, 2.0 / 3.0, 1.0, 0.5))),
            (
                "hex_torus_minimum",
                1.0 / (2.0 * heat_kernel(hexagonal_lattice(), (1.0 / 3.0, 1.0 / 3.0), 1.0)),
            ),
        ],
    )


def extremal_constants_t1():
    """
    Hexagonal extremal temperatures at t = 1 as (A, B).

    B is the minimal maximum temperature over all unit-area tori; A is the
    conjectured maximal minimum temperature and carries status
    ``conjectured-extremal``.
    """
    cubic = cubic_theta(HEX_NOME)
    hexl = hexagonal_lattice()
    f_cubic = hyp2f1(1.0 / 3.0, 2.0 / 3.0, 1.0, 0.5)
    a_const = _named(
        "hex_min_temperature_t1",
        [
            ("cubic_theta_b", cubic.b),
            ("cubic_theta_c", cubic.c),
            ("hex_torus_kernel", heat_kernel(hexl, (1.0 / 3.0, 1.0 / 3.0), 1.0)),
            ("hyp2f1_cubic", 2.0 ** (-1.0 / 3.0) * f_cubic),
            ("gamma", gamma(1.0 / 6.0) / (2.0 * gamma(1.0 / 3.0) * gamma(5.0 / 6.0))),
        ],
        status=CONJECTURED,
    )
    b_const = _named(
        "hex_max_temperature_t1",
        [
            ("cubic_theta_a", cubic.a),
            ("hex_torus_kernel", heat_kernel(hexl, (0.0, 0.0), 1.0)),
            ("hyp2f1_cubic", f_cubic),
        ],
    )
    return a_const, b_const


def all_constants():
    a, b = extremal_constants_t1()
    return [gauss_constant(), landau_square_constant(), landau_upper_constant(), a, b]
