"""Generalized Coulomb potential in D dimensions.

A numerical library and CLI for the exactly solvable potential family
that interpolates between the Coulomb and harmonic oscillator
problems: coordinate map, potential and charge density, exact bound
spectrum and wavefunctions, the generalized Coulomb-Sturmian basis,
the tridiagonal J-matrix with its continued-fraction Green's operator,
l = 0 scattering quantities, an SU(1,1) algebra realization, and
independent numerical oracles for all of it.
"""

__version__ = "0.1.0"

from . import errors
from .jgreen import (
    GreenBlock,
    JMatrix,
    find_pole,
    green00,
    green00_above_threshold,
    green_block,
    jmatrix_entry,
    truncated_inverse,
)
from .oracle import EigenResult, numerov_eigenvalues, quadrature, transmission_1d
from .params import CoordinatePoint, PotentialParams, h_of_r, r_of_h, validate
from .potential import (
    OscillatorLimitParams,
    PotentialProfile,
    charge_density,
    dimension_map,
    make_profile,
    v,
    v_tilde,
)
from .scattering import (
    Kinematics,
    bound_state_momentum,
    jost_solution,
    kinematics,
    reflection,
    regular_solution,
    s_matrix,
)
from .spectrum import (
    BoundState,
    OneDState,
    energy,
    energy_tilde,
    one_d_state,
    rho_n,
    rho_tilde,
    wavefunction,
)
from .specfun import (
    gamma_ratio,
    hermite,
    kummer_phi,
    laguerre,
    log_gamma,
    tricomi_psi,
)
from .sturmian import DualWeight, SturmianSpec, gcs, gcs_dual, overlap, residual, weight
from .su11 import (
    AlgebraRep,
    Generators,
    GridOperator,
    algebra_rep,
    build_generators,
    casimir_check,
    commutator_check,
    ladder_check,
)

__all__ = [
    "__version__",
    "errors",
    # params
    "PotentialParams", "CoordinatePoint", "validate", "r_of_h", "h_of_r",
    # specfun
    "log_gamma", "gamma_ratio", "laguerre", "hermite", "kummer_phi", "tricomi_psi",
    # potential
    "PotentialProfile", "OscillatorLimitParams", "v", "v_tilde", "charge_density",
    "dimension_map", "make_profile",
    # spectrum
    "BoundState", "OneDState", "rho_n", "rho_tilde", "energy", "energy_tilde",
    "wavefunction", "one_d_state",
    # sturmian
    "SturmianSpec", "DualWeight", "gcs", "gcs_dual", "weight", "overlap", "residual",
    # jgreen
    "JMatrix", "GreenBlock", "jmatrix_entry", "green00", "green00_above_threshold",
    "green_block", "truncated_inverse", "find_pole",
    # scattering
    "Kinematics", "kinematics", "regular_solution", "jost_solution", "s_matrix",
    "reflection", "bound_state_momentum",
    # su11
    "GridOperator", "AlgebraRep", "Generators", "algebra_rep", "build_generators",
    "ladder_check", "commutator_check", "casimir_check",
    # oracle
    "EigenResult", "numerov_eigenvalues", "quadrature", "transmission_1d",
]
