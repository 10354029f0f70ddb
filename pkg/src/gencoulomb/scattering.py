"""Scattering quantities: kinematic map, solutions, S-matrix, reflection.

For momentum k the closed forms use

    rho(k) = -2 i k / C^{1/2},
    i nu(k) = rho theta / 4 - q / (C rho),

so that real k > 0 gives purely imaginary rho and real
nu = -(k theta + q/k)/(2 C^{1/2}), while k = i kappa on the positive
imaginary axis makes rho real and positive; the bound-state condition
beta/2 + i nu = -n then reproduces rho = rho_n exactly.

The l = 0 S-matrix is a pure gamma-ratio phase and the one-dimensional
reflection coefficient combines the even (beta = 1/2) and odd
(beta = 3/2) channel phases.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import InvalidParameter, UnsupportedConfiguration, ZeroMomentum
from .params import PotentialParams, h_of_r
from .specfun import kummer_phi, log_gamma, tricomi_psi

__all__ = [
    "Kinematics",
    "kinematics",
    "regular_solution",
    "jost_solution",
    "s_matrix",
    "reflection",
    "bound_state_momentum",
]


@dataclass(frozen=True)
class Kinematics:
    """Momentum k with the derived (rho(k), nu(k)) pair."""

    k: complex
    rho: complex
    nu: complex


def kinematics(k, params: PotentialParams) -> Kinematics:
    """Kinematic map k -> (rho, nu).

    Real k uses the simplified real form of nu to avoid imaginary
    rounding dust.  Raises ZeroMomentum at k = 0.
    """
    k = complex(k)
    if k == 0.0:
        raise ZeroMomentum("kinematics undefined at k = 0")
    sC = params.sqrtC
    rho = -2j * k / sC
    if k.imag == 0.0:
        kr = k.real
        nu = complex(-(kr * params.theta + params.q / kr) / (2.0 * sC), 0.0)
    else:
        i_nu = rho * params.theta / 4.0 - params.q / (params.C * rho)
        nu = i_nu / 1j
    return Kinematics(k=k, rho=rho, nu=nu)


def _profile_prefactor(rho: complex, h: float, theta: float, beta: float) -> complex:
    """(h+theta)^{1/4} h^{(2 beta - 1)/4} exp(-rho h / 2) common to both solutions."""
    power = 0.25 * (2.0 * beta - 1.0)
    if h == 0.0:
        hpow = 1.0 if power == 0.0 else 0.0
    else:
        hpow = h**power
    return (h + theta) ** 0.25 * hpow * cmath.exp(-0.5 * rho * h)


def regular_solution(k, r: float, params: PotentialParams) -> complex:
    """Regular solution of the l = 0 radial equation,

        phi(k, r) = C^{-beta/4} (h+theta)^{1/4} h^{(2 beta-1)/4}
                    e^{-rho h/2} Phi(beta/2 + i nu, beta; rho h).

    Vanishes at the origin like r^{(2 beta - 1)/2} for beta > 1/2.
    """
    if r < 0.0:
        raise InvalidParameter(f"r must be >= 0, got {r}")
    kin = kinematics(k, params)
    h = h_of_r(r, params).h
    a = 0.5 * params.beta + 1j * kin.nu
    phi = kummer_phi(a, params.beta, kin.rho * h)
    return params.C ** (-0.25 * params.beta) * _profile_prefactor(
        kin.rho, h, params.theta, params.beta
    ) * phi


def jost_solution(k, r: float, params: PotentialParams) -> complex:
    """Irregular (Jost-type) solution,

        f(k, r) = rho^{-beta/4} e^{nu pi/2} (h+theta)^{1/4}
                  h^{(2 beta-1)/4} e^{-rho h/2}
                  Psi(beta/2 + i nu, beta; rho h),

    decaying at large r for Im k > 0.  Requires r > 0 and non-integer
    beta (the Psi connection formula degenerates at integer beta).
    """
    if r <= 0.0:
        raise InvalidParameter(f"jost_solution requires r > 0, got {r}")
    kin = kinematics(k, params)
    h = h_of_r(r, params).h
    a = 0.5 * params.beta + 1j * kin.nu
    psi = tricomi_psi(a, params.beta, kin.rho * h)
    amp = cmath.exp(-0.25 * params.beta * cmath.log(kin.rho) + 0.5 * math.pi * kin.nu)
    return amp * _profile_prefactor(kin.rho, h, params.theta, params.beta) * psi


def s_matrix(k: float, params: PotentialParams) -> complex:
    """l = 0 S-matrix S0(k) = e^{i pi (beta/2 + 1)} Gamma(beta/2 + i nu)/Gamma(beta/2 - i nu).

    Unit modulus for real k > 0 (nu real, conjugate gamma ratio).  The
    phase prefactor (-1)^{beta/2+1} is fixed on the principal branch
    exp(i pi (beta/2 + 1)); it reflects the r^{-2}-type term being kept
    inside the potential.
    """
    if not (isinstance(k, (int, float)) and k > 0.0):
        raise InvalidParameter(f"s_matrix requires real k > 0, got {k!r}")
    nu = kinematics(k, params).nu.real
    a = 0.5 * params.beta
    phase = cmath.exp(1j * math.pi * (a + 1.0))
    return phase * cmath.exp(log_gamma(complex(a, nu)) - log_gamma(complex(a, -nu)))


def reflection(k: float, params: PotentialParams) -> complex:
    """One-dimensional reflection coefficient

        R(k) = (e^{-i pi/4}/2) [ Gamma(1/4 + i nu)/Gamma(1/4 - i nu)
                                 - i Gamma(3/4 + i nu)/Gamma(3/4 - i nu) ],

    combining the even and odd channel phases; |R| <= 1 automatically.
    Defined for the D = 1, l = 0 configuration.
    """
    if params.D != 1 or params.l != 0:
        raise UnsupportedConfiguration("reflection requires the 1D configuration (D=1, l=0)")
    if not (isinstance(k, (int, float)) and k > 0.0):
        raise InvalidParameter(f"reflection requires real k > 0, got {k!r}")
    nu = kinematics(k, params).nu.real
    g1 = cmath.exp(log_gamma(complex(0.25, nu)) - log_gamma(complex(0.25, -nu)))
    g3 = cmath.exp(log_gamma(complex(0.75, nu)) - log_gamma(complex(0.75, -nu)))
    return 0.5 * cmath.exp(-0.25j * math.pi) * (g1 - 1j * g3)


def bound_state_momentum(n: int, params: PotentialParams, window: float = 0.5) -> complex:
    """S-matrix pole on the positive imaginary k-axis for quantum number n.

    Root-finds beta/2 + i nu(i kappa) + n = 0 in the real variable
    kappa, bracketing around the analytic estimate (never a blind
    scan).  Returns k = i kappa; the associated energy is -kappa^2.
    """
    from scipy.optimize import brentq

    from .spectrum import rho_n as _rho_n

    kappa0 = 0.5 * params.sqrtC * _rho_n(n, params)

    def g(kappa: float) -> float:
        kin = kinematics(complex(0.0, kappa), params)
        return 0.5 * params.beta + (1j * kin.nu).real + n

    lo, hi = (1.0 - window) * kappa0, (1.0 + window) * kappa0
    if g(lo) * g(hi) > 0.0:
        raise InvalidParameter("bracket around the pole estimate does not straddle a root")
    kappa = brentq(g, lo, hi, xtol=1e-16, rtol=8.9e-16)
    return complex(0.0, kappa)
