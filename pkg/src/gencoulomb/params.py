"""Parameters and the invertible coordinate map h <-> r.

The generalized Coulomb potential is built on a monotone bijection
h(r) of the half axis [0, inf), defined through its inverse

    r(h) = C^{-1/2} [ theta * artanh( sqrt(h/(h+theta)) ) + sqrt(h (h+theta)) ],

which behaves as h ~ C r^2 / (4 theta) near the origin and
h ~ C^{1/2} r at large r.  All closed-form results of the model are
polynomials/exponentials in h, so the map (and its derivative
dh/dr = C^{1/2} sqrt(h/(h+theta))) is needed everywhere.

Reduced units hbar^2/2m = 1 are used throughout: v = 2m V / hbar^2,
epsilon = 2m E / hbar^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    InvalidParameter,
    NegativeTheta,
    NoConvergence,
    NonPositiveBeta,
    NonPositiveC,
)

__all__ = [
    "PotentialParams",
    "CoordinatePoint",
    "validate",
    "r_of_h",
    "h_of_r",
]

# Relative residual target for the map inversion; well below the
# 1e-12 contract so round-trips stay at rounding level.
_INV_RTOL = 5.0e-15
_INV_MAXIT = 80


@dataclass(frozen=True)
class PotentialParams:
    """Validated parameter tuple (C, theta, q, beta) plus (D, l).

    C > 0 sets the length scale (C^{1/2} has units 1/length), theta >= 0
    deforms the Coulomb shape toward the oscillator, q is the Coulomb
    strength (bound states exist iff q > 0) and beta > 0 controls the
    strength of the r^{-2}-type singularity.  D >= 1 and l >= 0 enter
    only through the centrifugal-compensating term.
    """

    C: float
    theta: float
    q: float
    beta: float
    D: int = 3
    l: int = 0

    def __post_init__(self):
        for name in ("C", "theta", "q", "beta"):
            val = getattr(self, name)
            if not isinstance(val, (int, float)) or not math.isfinite(val):
                raise InvalidParameter(f"{name} must be a finite real number, got {val!r}")
            object.__setattr__(self, name, float(val))
        if self.C <= 0.0:
            raise NonPositiveC(f"C must be > 0, got {self.C}")
        if self.theta < 0.0:
            raise NegativeTheta(f"theta must be >= 0, got {self.theta}")
        if self.beta <= 0.0:
            raise NonPositiveBeta(f"beta must be > 0, got {self.beta}")
        for name in ("D", "l"):
            val = getattr(self, name)
            if isinstance(val, bool) or not isinstance(val, (int, np.integer)):
                raise InvalidParameter(f"{name} must be an integer, got {val!r}")
            object.__setattr__(self, name, int(val))
        if self.D < 1:
            raise InvalidParameter(f"D must be >= 1, got {self.D}")
        if self.l < 0:
            raise InvalidParameter(f"l must be >= 0, got {self.l}")

    @property
    def sqrtC(self) -> float:
        return math.sqrt(self.C)

    @property
    def centrifugal_coeff(self) -> float:
        """Coefficient (l + (D-3)/2)(l + (D-1)/2) of the 1/r^2 kinetic term."""
        return (self.l + (self.D - 3) / 2.0) * (self.l + (self.D - 1) / 2.0)


@dataclass(frozen=True)
class CoordinatePoint:
    """A pair (r, h(r)) with the closed-form derivative h'(r)."""

    r: float
    h: float
    dh_dr: float


def validate(C, theta, q, beta, D=3, l=0) -> PotentialParams:
    """Validate a raw parameter tuple, returning PotentialParams.

    Raises NonPositiveC, NegativeTheta, NonPositiveBeta or
    InvalidParameter naming the violated constraint.
    """
    return PotentialParams(C=C, theta=theta, q=q, beta=beta, D=D, l=l)


def r_of_h(h: float, params: PotentialParams) -> float:
    """Evaluate the inverse map r(h) exactly.

    Uses artanh(w) = log1p(w) + log1p(h/theta)/2 with
    w = sqrt(h/(h+theta)), which is free of cancellation for all h.
    For theta = 0 the map collapses to r = h / C^{1/2}.
    """
    if h < 0.0:
        raise InvalidParameter(f"h must be >= 0, got {h}")
    if h == 0.0:
        return 0.0
    if params.theta == 0.0:
        return h / params.sqrtC
    th = params.theta
    w = math.sqrt(h / (h + th))
    atanh = math.log1p(w) + 0.5 * math.log1p(h / th)
    return (th * atanh + math.sqrt(h * (h + th))) / params.sqrtC


def _dr_dh(h: float, params: PotentialParams) -> float:
    # dr/dh = C^{-1/2} sqrt((h+theta)/h); inverse of dh/dr.
    return math.sqrt((h + params.theta) / h) / params.sqrtC


def h_of_r(r: float, params: PotentialParams) -> CoordinatePoint:
    """Invert the coordinate map at a single radius.

    Safeguarded Newton iteration on h, seeded by the two asymptotes
    (h ~ C r^2/(4 theta) when C^{1/2} r < theta, h ~ C^{1/2} r
    otherwise).  Since r(h) is increasing and concave, Newton
    converges monotonically once it lands left of the root; a
    bracket bisection step catches any overshoot.

    The returned point satisfies |r_of_h(h) - r| <= 1e-12 * r.
    """
    if r < 0.0:
        raise InvalidParameter(f"r must be >= 0, got {r}")
    if r == 0.0:
        return CoordinatePoint(r=0.0, h=0.0, dh_dr=params.sqrtC if params.theta == 0.0 else 0.0)
    if params.theta == 0.0:
        return CoordinatePoint(r=r, h=params.sqrtC * r, dh_dr=params.sqrtC)

    th = params.theta
    sC = params.sqrtC
    h = params.C * r * r / (4.0 * th) if sC * r < th else sC * r

    lo, hi = 0.0, h
    while r_of_h(hi, params) < r:
        lo = hi
        hi *= 2.0
        if hi > 1e300:
            raise NoConvergence("bracket expansion failed in h_of_r")

    for _ in range(_INV_MAXIT):
        fr = r_of_h(h, params) - r
        if abs(fr) <= _INV_RTOL * r:
            break
        if fr > 0.0:
            hi = h
        else:
            lo = h
        # Newton step: dh = -(r(h) - r) * dh/dr
        h_new = h - fr * sC * math.sqrt(h / (h + th))
        if not (lo < h_new < hi):
            h_new = 0.5 * (lo + hi)
        if h_new == h:
            break
        h = h_new
    else:
        raise NoConvergence(f"h_of_r did not converge at r={r}")

    return CoordinatePoint(r=r, h=h, dh_dr=sC * math.sqrt(h / (h + th)))


def _h_grid(r: np.ndarray, params: PotentialParams):
    """Vectorized map inversion on an array of radii (internal helper).

    Returns (h, dh_dr) arrays.  Same Newton scheme as h_of_r, run
    simultaneously on all points; the map's concavity makes plain
    Newton from the asymptote seeds monotone after the first step.
    """
    r = np.asarray(r, dtype=float)
    if np.any(r < 0.0):
        raise InvalidParameter("radii must be >= 0")
    sC = params.sqrtC
    th = params.theta
    if th == 0.0:
        return sC * r, np.full_like(r, sC)

    pos = r > 0.0
    h = np.where(sC * r < th, params.C * r * r / (4.0 * th), sC * r)
    h = np.where(pos, h, 0.0)

    def _r_of_h_vec(hv):
        w = np.sqrt(hv / (hv + th))
        atanh = np.log1p(w) + 0.5 * np.log1p(hv / th)
        return (th * atanh + np.sqrt(hv * (hv + th))) / sC

    active = pos.copy()
    for _ in range(_INV_MAXIT):
        if not active.any():
            break
        hv = h[active]
        fr = _r_of_h_vec(hv) - r[active]
        done = np.abs(fr) <= _INV_RTOL * r[active]
        step = fr * sC * np.sqrt(hv / (hv + th))
        h_new = hv - step
        # keep iterates positive; halving guards the rare overshoot
        h_new = np.where(h_new <= 0.0, 0.5 * hv, h_new)
        h[active] = np.where(done, hv, h_new)
        idx = np.flatnonzero(active)
        active[idx[done]] = False
    else:
        # fall back to the scalar safeguarded solver for stragglers
        for i in np.flatnonzero(active):
            h[i] = h_of_r(float(r[i]), params).h

    dh = np.zeros_like(r)
    np.divide(h, h + th, out=dh, where=pos)
    dh = sC * np.sqrt(dh)
    return h, dh
