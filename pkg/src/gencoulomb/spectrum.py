"""Exact bound-state spectrum and wavefunctions.

Bound states of the generalized Coulomb potential sit at

    epsilon_n = -(C/4) rho_n^2,
    rho_n = (2/theta) [ sqrt((n + beta/2)^2 + q theta / C) - (n + beta/2) ],

with normalized wavefunctions built from associated Laguerre
polynomials in the mapped coordinate h(r).  The same formulas run the
one-dimensional problem, where beta = 1/2 (even states, N = 2n) or
beta = 3/2 (odd states, N = 2n + 1) and the Hermite form applies.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import InvalidParameter, NoBoundStates, ThetaZero, UnsupportedConfiguration
from .params import PotentialParams, _h_grid
from .specfun import hermite, laguerre

__all__ = [
    "BoundState",
    "OneDState",
    "rho_n",
    "rho_tilde",
    "energy",
    "energy_tilde",
    "wavefunction",
    "one_d_state",
]


def _s(n: int, beta: float) -> float:
    return n + 0.5 * beta


def rho_n(n: int, params: PotentialParams) -> float:
    """Inverse-length scale rho_n of the n-th bound state.

    Evaluated in the rationalized form
    rho_n = (2q/C) / [ sqrt((n+beta/2)^2 + q theta/C) + (n+beta/2) ],
    which is cancellation-free as theta -> 0 and reduces there to
    q / (C (n + beta/2)).
    """
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool) or n < 0:
        raise InvalidParameter(f"n must be a non-negative integer, got {n!r}")
    if params.q <= 0.0:
        raise NoBoundStates(f"bound states require q > 0, got q = {params.q}")
    s = _s(n, params.beta)
    if params.theta == 0.0:
        return params.q / (params.C * s)
    disc = math.sqrt(s * s + params.q * params.theta / params.C)
    return (2.0 * params.q / params.C) / (disc + s)


def energy(n: int, params: PotentialParams) -> float:
    """Bound-state energy epsilon_n = -(C/4) rho_n^2 (negative, increasing in n)."""
    r = rho_n(n, params)
    return -0.25 * params.C * r * r


def energy_tilde(n: int, params: PotentialParams) -> float:
    """Oscillator-shifted energy epsilon_n + q/theta, computed without cancellation.

    Algebraically epsilon_n + q/theta = (n + beta/2) C rho_n / theta,
    which converges to (2n + beta) sqrt(C q)/theta = (2n+beta) (C~ q~)^{1/2}
    as theta -> infinity at fixed C~ = C/theta, q~ = q/theta^2.
    """
    if params.theta <= 0.0:
        raise ThetaZero("energy_tilde requires theta > 0")
    return _s(n, params.beta) * params.C * rho_n(n, params) / params.theta


@dataclass(frozen=True)
class BoundState:
    """Index n, scale rho_n, energy epsilon_n and the evaluator psi_n(r)."""

    n: int
    rho: float
    epsilon: float
    params: PotentialParams
    psi: Callable[[np.ndarray], np.ndarray]

    def __call__(self, r):
        return self.psi(r)


@dataclass(frozen=True)
class OneDState:
    """One-dimensional bound state of definite parity."""

    N: int
    parity: str  # 'even' (beta = 1/2) or 'odd' (beta = 3/2)
    rho_tilde: float
    energy: float
    params: PotentialParams
    psi: Callable[[np.ndarray], np.ndarray]

    def __call__(self, x):
        return self.psi(x)


def wavefunction(n: int, params: PotentialParams) -> BoundState:
    """Normalized radial bound-state wavefunction.

    psi_n(r) = C^{1/4} rho_n^{(beta+1)/2}
               sqrt( n! / (Gamma(n+beta) (2n + beta + rho_n theta)) )
               (h + theta)^{1/4} h^{(2 beta - 1)/4}
               exp(-rho_n h / 2) L_n^{(beta-1)}(rho_n h),

    with int_0^inf psi_n^2 dr = 1 exact.  The evaluator accepts scalar
    or array r and has exactly n interior zeros.
    """
    rho = rho_n(n, params)
    beta = params.beta
    lognorm = 0.5 * (
        math.lgamma(n + 1.0)
        - math.lgamma(n + beta)
        - math.log(2.0 * n + beta + rho * params.theta)
    )
    amp = params.C**0.25 * rho ** (0.5 * (beta + 1.0)) * math.exp(lognorm)
    power = 0.25 * (2.0 * beta - 1.0)

    def psi(r):
        scalar = np.isscalar(r)
        rr = np.atleast_1d(np.asarray(r, dtype=float))
        h, _ = _h_grid(rr, params)
        hp = h + params.theta
        with np.errstate(divide="ignore"):
            hpow = np.where(h > 0.0, h**power, 1.0 if power == 0.0 else 0.0)
        out = amp * hp**0.25 * hpow * np.exp(-0.5 * rho * h) * laguerre(n, beta - 1.0, rho * h)
        return float(out[0]) if scalar else out

    return BoundState(n=n, rho=rho, epsilon=energy(n, params), params=params, psi=psi)


def rho_tilde(N: int, params: PotentialParams) -> float:
    """Scale parameter of the N-th one-dimensional state.

    rho~_N = (1/theta)[ sqrt((N+1/2)^2 + 4 q theta / C) - (N+1/2) ],
    rationalized; equals rho_{floor(N/2)} evaluated with the parity's
    beta (1/2 for even N, 3/2 for odd N).
    """
    if not isinstance(N, (int, np.integer)) or isinstance(N, bool) or N < 0:
        raise InvalidParameter(f"N must be a non-negative integer, got {N!r}")
    if params.q <= 0.0:
        raise NoBoundStates(f"bound states require q > 0, got q = {params.q}")
    s = N + 0.5
    if params.theta == 0.0:
        return 2.0 * params.q / (params.C * s)
    disc = math.sqrt(s * s + 4.0 * params.q * params.theta / params.C)
    return (4.0 * params.q / params.C) / (disc + s)


def one_d_state(N: int, params: PotentialParams) -> OneDState:
    """One-dimensional bound state psi_N(x), normalized on (-inf, inf).

    Hermite form for x >= 0,

        psi_N(x) = 2^{-1/2} C^{1/4} rho~_N^{3/4}
                   / [ 2^N sqrt(Gamma((N+1)/2) Gamma(N/2+1)
                                (N + 1/2 + theta rho~_N)) ]
                   (h + theta)^{1/4} exp(-rho~_N h/2)
                   H_N( sqrt(rho~_N h) ),      h = h(|x|),

    extended by parity to x < 0 (even for N = 2n, odd for N = 2n+1).
    The leading 2^{-1/2} accounts for the doubled integration domain;
    without it the Hermite form integrates to 2 (by the
    Laguerre-Hermite identity it coincides with the radial
    wavefunction of the parity's beta for x > 0, up to sign).
    """
    if params.D != 1 or params.l != 0:
        raise UnsupportedConfiguration("one_d_state requires D = 1, l = 0")
    if params.theta <= 0.0:
        raise ThetaZero("one_d_state requires theta > 0")
    rt = rho_tilde(N, params)
    parity = "even" if N % 2 == 0 else "odd"
    lognorm = -0.5 * (
        math.lgamma(0.5 * (N + 1.0))
        + math.lgamma(0.5 * N + 1.0)
        + math.log(N + 0.5 + params.theta * rt)
    ) - N * math.log(2.0) - 0.5 * math.log(2.0)
    amp = params.C**0.25 * rt**0.75 * math.exp(lognorm)
    sign = -1.0 if parity == "odd" else 1.0  # parity factor applied on x < 0

    def psi(x):
        scalar = np.isscalar(x)
        xx = np.atleast_1d(np.asarray(x, dtype=float))
        h, _ = _h_grid(np.abs(xx), params)
        val = amp * (h + params.theta) ** 0.25 * np.exp(-0.5 * rt * h) * hermite(
            N, np.sqrt(rt * h)
        )
        val = np.where(xx < 0.0, sign * val, val)
        return float(val[0]) if scalar else val

    en = -0.25 * params.C * rt * rt
    return OneDState(N=N, parity=parity, rho_tilde=rt, energy=en, params=params, psi=psi)
