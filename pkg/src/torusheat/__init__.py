"""Theta functions, elliptic moduli and extremal temperatures of heat kernels on flat tori."""

from .constants import NamedConstant, all_constants
from .errors import ConvergenceError, DomainError, RangeError
from .extremal import (
    ExtremalResult,
    general_max_temp,
    general_min_temp,
    hex_extremal_temps,
    optimize_rect_family,
    rect_max_temp,
    rect_min_temp,
)
from .kernels import BACKEND
from .lattice import (
    HeatKernelQuery,
    Lattice2D,
    TorusPoint,
    heat_kernel,
    hexagonal_lattice,
    rectangular_lattice,
    square_lattice,
)
from .moduli import (
    ModulusQuadruple,
    TemperaturePair,
    modulus_from_nome,
    modulus_from_t,
    rect_temperatures_from_modulus,
    split_temperatures_square,
    t_from_complementary_modulus,
    t_from_moduli,
)
from .specfun import agm, elliptic_k, gamma, hyp2f1
from .theta import cubic_theta, jacobi_theta, theta_null, theta_nulls

__version__ = "0.1.0"
