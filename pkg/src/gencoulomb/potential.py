"""The generalized Coulomb potential, its limits, and the charge density.

In reduced units the radial potential is the five-term expression

    v(r) = -(l + (D-3)/2)(l + (D-1)/2) / r^2
         + (beta - 1/2)(beta - 3/2) C / (4 h (h + theta))
         - q / (h + theta)
         - 3 C / (16 (h + theta)^2)
         + 5 C theta / (16 (h + theta)^3),       h = h(r).

The first term cancels the kinetic centrifugal barrier, so the bound
spectrum depends on (C, theta, q, beta) only.  theta -> 0 with
beta = 2l + D - 1 collapses v to the D-dimensional Coulomb potential
-q C^{-1/2} / r; theta -> infinity at fixed C/theta and q/theta^2
(after the energy shift q/theta) gives the harmonic oscillator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    InvalidParameter,
    NonIntegerDimension,
    SingularOrigin,
    ThetaZero,
    UnsupportedConfiguration,
)
from .params import PotentialParams, _h_grid, h_of_r

__all__ = [
    "PotentialProfile",
    "OscillatorLimitParams",
    "v",
    "v_of_h",
    "v_tilde",
    "charge_density",
    "dimension_map",
    "make_profile",
]


@dataclass(frozen=True)
class PotentialProfile:
    """Sampled potential values on a strictly increasing grid."""

    grid: np.ndarray
    values: np.ndarray
    params: PotentialParams
    variant: str = "radial"  # radial | shifted | one_dimensional

    def __post_init__(self):
        g = np.asarray(self.grid, dtype=float)
        vv = np.asarray(self.values, dtype=float)
        if g.ndim != 1 or g.shape != vv.shape:
            raise InvalidParameter("grid and values must be 1-d arrays of equal length")
        if np.any(np.diff(g) <= 0.0):
            raise InvalidParameter("grid must be strictly increasing")
        if not np.all(np.isfinite(vv)):
            raise InvalidParameter("potential values must be finite on the grid")
        object.__setattr__(self, "grid", g)
        object.__setattr__(self, "values", vv)


@dataclass(frozen=True)
class OscillatorLimitParams:
    """Scaled parameters held fixed in the oscillator limit."""

    C_tilde: float  # C / theta
    q_tilde: float  # q / theta^2

    @classmethod
    def from_params(cls, params: PotentialParams) -> "OscillatorLimitParams":
        if params.theta <= 0.0:
            raise ThetaZero("oscillator-limit parameters need theta > 0")
        return cls(C_tilde=params.C / params.theta, q_tilde=params.q / params.theta**2)

    def reconstruct(self, theta: float) -> tuple[float, float]:
        """Recover (C, q) for a given theta."""
        return self.C_tilde * theta, self.q_tilde * theta**2


def _is_regular_origin(params: PotentialParams) -> bool:
    # Finite v(0) needs both r^{-2} coefficients to vanish and theta > 0.
    gamma = (params.beta - 0.5) * (params.beta - 1.5)
    return params.centrifugal_coeff == 0.0 and gamma == 0.0 and params.theta > 0.0


def v_of_h(h: float, r: float, params: PotentialParams) -> float:
    """Potential value from a precomputed map point (h, r)."""
    th = params.theta
    gamma = (params.beta - 0.5) * (params.beta - 1.5)
    hp = h + th
    terms = [
        -params.q / hp,
        -3.0 * params.C / (16.0 * hp * hp),
        5.0 * params.C * th / (16.0 * hp * hp * hp),
    ]
    # The two r^{-2}-type terms individually diverge at the origin and
    # cancel only in exact limits; sum everything with fsum.
    if gamma != 0.0:
        terms.append(gamma * params.C / (4.0 * h * hp))
    if params.centrifugal_coeff != 0.0:
        terms.append(-params.centrifugal_coeff / (r * r))
    return math.fsum(terms)


def v(r: float, params: PotentialParams) -> float:
    """Evaluate the generalized Coulomb potential at radius r.

    r = 0 is allowed only for the regular configuration (vanishing
    l-term, beta in {1/2, 3/2}, theta > 0), where
    v(0) = -q/theta + C/(8 theta^2); SingularOrigin otherwise.
    """
    if r < 0.0:
        raise InvalidParameter(f"r must be >= 0, got {r}")
    if r == 0.0:
        if not _is_regular_origin(params):
            raise SingularOrigin("v(0) requested for a configuration singular at the origin")
        th = params.theta
        return -params.q / th + params.C / (8.0 * th * th)
    return v_of_h(h_of_r(r, params).h, r, params)


def v_tilde(r: float, params: PotentialParams) -> float:
    """Oscillator-adapted potential v(r) + q/theta.

    Computed directly from the five-term form (the shift only resets
    the energy zero), so the identity v_tilde - v = q/theta is exact.
    """
    if params.theta <= 0.0:
        raise ThetaZero("v_tilde requires theta > 0")
    return v(r, params) + params.q / params.theta


def charge_density(r: float, params: PotentialParams, prefactor: float = 1.0) -> float:
    """Charge density generating v through the 3-d Poisson equation.

    Returns prefactor times the closed-form radial Laplacian of v,
    valid for D = 3, l = 0 and beta in {1/2, 3/2} (the configurations
    with no r^{-2} singularity).  prefactor defaults to 1 and stands in
    for the physical -hbar^2/(8 pi m e), which mixes unit systems and
    is left to the caller.
    """
    if params.D != 3 or params.l != 0:
        raise UnsupportedConfiguration("charge density defined for D = 3, l = 0 only")
    if params.beta not in (0.5, 1.5):
        raise UnsupportedConfiguration("charge density requires beta in {1/2, 3/2}")
    if r <= 0.0:
        raise InvalidParameter(f"r must be > 0, got {r}")
    point = h_of_r(r, params)
    h, th, C, q = point.h, params.theta, params.C, params.q
    hp = h + th
    radial_part = math.fsum(
        [
            -2.0 * q * C / hp**3,
            (20.0 * q * C * th - 9.0 * C * C) / (8.0 * hp**4),
            81.0 * C * C * th / (16.0 * hp**5),
            -135.0 * C * C * th * th / (32.0 * hp**6),
        ]
    )
    gradient_part = (2.0 * math.sqrt(C) / r) * math.sqrt(h / hp) * math.fsum(
        [
            q / hp**2,
            3.0 * C / (8.0 * hp**3),
            -15.0 * C * th / (16.0 * hp**4),
        ]
    )
    return prefactor * (radial_part + gradient_part)


def dimension_map(l_C: int, D_C: int, lam: int = 0) -> tuple[int, int]:
    """Coulomb -> oscillator (angular momentum, dimension) map.

    Matching the Laguerre index of the two limiting wavefunctions
    requires l_O + D_O/2 = 2 l_C + D_C - 1.  With l_O = 2 l_C + lam this
    gives D_O = 2 (D_C - 1 - lam); lam = 0 is the direct map, whose
    (D_C, D_O) pairs are (2,2), (3,4), (4,6), ...
    """
    for name, val in (("l_C", l_C), ("D_C", D_C), ("lam", lam)):
        if not isinstance(val, (int, np.integer)) or isinstance(val, bool):
            raise InvalidParameter(f"{name} must be an integer, got {val!r}")
    if l_C < 0 or D_C < 1 or lam < 0:
        raise InvalidParameter("dimension_map inputs must be non-negative (D_C >= 1)")
    l_O = 2 * l_C + lam
    D_O = 2 * (2 * l_C + D_C - 1 - l_O)
    if D_O < 1:
        raise NonIntegerDimension(f"mapped dimension D_O = {D_O} is not a positive integer")
    return l_O, D_O


def make_profile(params: PotentialParams, grid, variant: str = "radial") -> PotentialProfile:
    """Sample v (or its variant) on a grid, producing a PotentialProfile.

    variant 'radial' evaluates v(r), 'shifted' evaluates v + q/theta,
    'one_dimensional' evaluates the symmetric x-axis extension v(|x|).
    """
    grid = np.asarray(grid, dtype=float)
    if variant not in ("radial", "shifted", "one_dimensional"):
        raise InvalidParameter(f"unknown profile variant {variant!r}")
    radii = np.abs(grid) if variant == "one_dimensional" else grid
    if variant != "one_dimensional" and np.any(radii < 0.0):
        raise InvalidParameter("radial grids must be non-negative")
    if np.any(radii == 0.0) and not _is_regular_origin(params):
        raise SingularOrigin("grid touches r = 0 but the configuration is singular there")
    h, _ = _h_grid(radii, params)
    values = np.array(
        [
            v_of_h(hi, ri, params) if ri > 0.0 else v(0.0, params)
            for hi, ri in zip(h, radii)
        ]
    )
    if variant == "shifted":
        if params.theta <= 0.0:
            raise ThetaZero("shifted profile requires theta > 0")
        values = values + params.q / params.theta
    return PotentialProfile(grid=grid, values=values, params=params, variant=variant)
