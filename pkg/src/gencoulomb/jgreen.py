"""Tridiagonal J-matrix and the continued-fraction Green's operator.

On the GCS basis the operator epsilon - H0 (H0 the full generalized
Coulomb Hamiltonian) has the exactly tridiagonal representation

    J_nn   = epsilon (2n + beta + rho theta)/(C^{1/2} rho)
             + q C^{-1/2} - C^{1/2} rho (2n + beta)/4,
    J_n,n+1 = -( epsilon/(C^{1/2} rho) + C^{1/2} rho / 4 )
              sqrt((n+1)(n+beta)),

so the (0,0) element of the Green's operator (dual-basis matrix
element of (epsilon - H0)^{-1}) is the continued fraction

    G00 = 1 / (J_00 - J_01^2 / (J_11 - J_12^2 / (J_22 - ...))),

evaluated by modified Lentz.  Off-diagonal elements follow from the
minimal-solution ratios of the same three-term recurrence.  A direct
banded solve of the truncated system serves as the in-package oracle.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
import scipy.linalg as sla

from .errors import InvalidParameter, NearPole, NoConvergence, SingularTruncation
from .sturmian import SturmianSpec

__all__ = [
    "JMatrix",
    "GreenBlock",
    "jmatrix_entry",
    "green00",
    "green00_above_threshold",
    "green_block",
    "truncated_inverse",
    "find_pole",
]

_LENTZ_TINY = 1e-30
_LENTZ_TOL = 1e-14
_LENTZ_CAP = 100000
_POLE_CAP = 1e-13  # |f| below this times |J_00| counts as on-pole


def _diag(n: int, eps: complex, spec: SturmianSpec, q: float) -> complex:
    sC = math.sqrt(spec.C)
    return (
        eps * (2.0 * n + spec.beta + spec.rho * spec.theta) / (sC * spec.rho)
        + q / sC
        - sC * spec.rho * (2.0 * n + spec.beta) / 4.0
    )


def _off(n: int, eps: complex, spec: SturmianSpec, q: float) -> complex:
    sC = math.sqrt(spec.C)
    return -(eps / (sC * spec.rho) + sC * spec.rho / 4.0) * math.sqrt((n + 1.0) * (n + spec.beta))


@dataclass(frozen=True)
class JMatrix:
    """Coefficient functions of the tridiagonal epsilon - H0 matrix."""

    epsilon: complex
    spec: SturmianSpec
    q: float

    def diag(self, n: int) -> complex:
        return _diag(n, self.epsilon, self.spec, self.q)

    def off(self, n: int) -> complex:
        """Entry (n, n+1) = (n+1, n)."""
        return _off(n, self.epsilon, self.spec, self.q)


@dataclass(frozen=True)
class GreenBlock:
    """size x size window of dual-basis Green's operator matrix elements."""

    epsilon: complex
    size: int
    entries: np.ndarray
    residual: float  # max-norm of J G - I over the window


def jmatrix_entry(n: int, m: int, eps, spec: SturmianSpec, q: float) -> complex:
    """Matrix element <n| epsilon - H0 |m>; zero beyond the tridiagonal band."""
    if n < 0 or m < 0:
        raise InvalidParameter("jmatrix_entry indices must be >= 0")
    eps = complex(eps)
    if n == m:
        return _diag(n, eps, spec, q)
    if abs(n - m) == 1:
        return _off(min(n, m), eps, spec, q)
    return 0.0 + 0.0j


def _cf_inverse(eps: complex, spec: SturmianSpec, q: float) -> complex:
    """The continued fraction f with G00 = 1/f, by modified Lentz."""
    b0 = _diag(0, eps, spec, q)
    f = b0 if b0 != 0.0 else _LENTZ_TINY
    C = f
    D = 0.0 + 0.0j
    for j in range(1, _LENTZ_CAP):
        a = -_off(j - 1, eps, spec, q) ** 2
        b = _diag(j, eps, spec, q)
        D = b + a * D
        if D == 0.0:
            D = _LENTZ_TINY
        C = b + a / C
        if C == 0.0:
            C = _LENTZ_TINY
        D = 1.0 / D
        delta = C * D
        f *= delta
        if abs(delta - 1.0) < _LENTZ_TOL:
            return f
    raise NoConvergence(f"continued fraction did not converge at epsilon = {eps}")


def green00(eps, spec: SturmianSpec, q: float) -> complex:
    """Green's operator element G~_00(epsilon) by continued fraction.

    Converged to ~1e-14 relative.  Raises NearPole when epsilon sits
    on (within rounding of) a discrete eigenvalue, where the fraction
    vanishes and G00 diverges.
    """
    eps = complex(eps)
    f = _cf_inverse(eps, spec, q)
    scale = max(abs(_diag(0, eps, spec, q)), 1.0)
    if abs(f) < _POLE_CAP * scale:
        raise NearPole(f"G00 evaluated on a pole at epsilon = {eps}")
    return 1.0 / f


def green00_above_threshold(eps_real: float, spec: SturmianSpec, q: float, eta: float = 1e-2) -> complex:
    """Boundary value G~_00(eps + i0+) for real eps in the continuum.

    The straight continued fraction stops converging on the cut
    [0, inf); the physical side limit is recovered by evaluating at
    eps + i eta for eta, eta/2, eta/4 and extrapolating with two
    Richardson steps (error O(eta^3)).  A controlled substitute for a
    genuine analytic continuation of the fraction.
    """
    g1 = green00(complex(eps_real, eta), spec, q)
    g2 = green00(complex(eps_real, 0.5 * eta), spec, q)
    g3 = green00(complex(eps_real, 0.25 * eta), spec, q)
    r1 = 2.0 * g2 - g1
    r2 = 2.0 * g3 - g2
    return (4.0 * r2 - r1) / 3.0


def _minimal_ratios(eps: complex, spec: SturmianSpec, q: float, size: int, depth: int):
    """Backward-recurrence ratios R_n = G_{n,0}/G_{n-1,0}, n = 1..size+1.

    Seeded with R = 0 at n_max = size + depth; the seed depth is
    doubled until the returned ratios are insensitive at 1e-10.
    """
    def ratios(nmax: int) -> np.ndarray:
        R = 0.0 + 0.0j
        out = np.zeros(size + 2, dtype=complex)
        for n in range(nmax, 0, -1):
            R = -_off(n - 1, eps, spec, q) / (_diag(n, eps, spec, q) + _off(n, eps, spec, q) * R)
            if n <= size + 1:
                out[n] = R
        return out

    r = ratios(size + depth)
    for _ in range(8):
        r2 = ratios(size + depth + 100)
        if np.max(np.abs(r2 - r)) < 1e-10:
            return r2
        r = r2
        depth *= 2
    raise NoConvergence(f"tail ratios did not stabilize at epsilon = {eps}")


def green_block(eps, spec: SturmianSpec, q: float, size: int, depth: int = 200) -> GreenBlock:
    """size x size window of G~_nm = <n~|(epsilon - H0)^{-1}|m~>.

    Built from the minimal (decaying) solution v_n = prod R_j of the
    three-term recurrence and the dominant solution u_n fixed by the
    n = 0 boundary row:  G_nm = u_min(n,m) v_max(n,m) / K with the
    constant Wronskian K = J_00 + J_01 R_1 (equal to 1/G00).  Symmetric
    by construction; the residual max |J G - I| over the window is
    recorded on the returned block.
    """
    if size < 1:
        raise InvalidParameter("green_block size must be >= 1")
    if size > 200:
        raise InvalidParameter("green_block size capped at 200 (dominant-solution overflow)")
    eps = complex(eps)
    R = _minimal_ratios(eps, spec, q, size, depth)

    d = np.array([_diag(n, eps, spec, q) for n in range(size + 2)])
    c = np.array([_off(n, eps, spec, q) for n in range(size + 2)])

    K = d[0] + c[0] * R[1]
    if abs(K) < _POLE_CAP * max(abs(d[0]), 1.0):
        raise NearPole(f"green_block evaluated on a pole at epsilon = {eps}")

    v = np.ones(size + 2, dtype=complex)
    for n in range(1, size + 2):
        v[n] = v[n - 1] * R[n]
    u = np.ones(size + 2, dtype=complex)
    u[1] = -d[0] / c[0]
    for n in range(1, size + 1):
        u[n + 1] = -(d[n] * u[n] + c[n - 1] * u[n - 1]) / c[n]

    idx = np.arange(size + 1)
    lo = np.minimum.outer(idx, idx)
    hi = np.maximum.outer(idx, idx)
    G_ext = u[lo] * v[hi] / K

    # residual of J G - I over the full window, using the extra row
    col = np.eye(size + 1)[:size]
    JG = (
        d[:size, None] * G_ext[:size, :]
        + c[:size, None] * G_ext[1 : size + 1, :]
        + np.vstack([np.zeros(size + 1), c[: size - 1, None] * G_ext[: size - 1, :]])
    )
    res = float(np.max(np.abs(JG[:, :size] - col[:, :size])))
    return GreenBlock(epsilon=eps, size=size, entries=G_ext[:size, :size], residual=res)


def truncated_inverse(eps, spec: SturmianSpec, q: float, N: int) -> np.ndarray:
    """Oracle: dense inverse of the N x N truncated J-matrix.

    Direct banded LU solve (partial pivoting) against all N unit
    vectors; used only to validate the continued-fraction route.
    """
    if not 1 <= N <= 2000:
        raise InvalidParameter("truncated_inverse needs 1 <= N <= 2000")
    eps = complex(eps)
    ab = np.zeros((3, N), dtype=complex)
    ab[1, :] = [_diag(n, eps, spec, q) for n in range(N)]
    offs = [_off(n, eps, spec, q) for n in range(N - 1)]
    ab[0, 1:] = offs
    ab[2, :-1] = offs
    try:
        inv = sla.solve_banded((1, 1), ab, np.eye(N, dtype=complex))
    except np.linalg.LinAlgError as exc:
        raise SingularTruncation(f"truncated J-matrix singular at epsilon = {eps}") from exc
    if not np.all(np.isfinite(inv)):
        raise SingularTruncation(f"truncated J-matrix singular at epsilon = {eps}")
    return inv


def find_pole(spec: SturmianSpec, q: float, bracket: tuple[float, float]) -> float:
    """Locate a real-axis pole of G~_00 inside a bracket.

    Root-finds the continued fraction f = 1/G00, which crosses zero at
    each discrete eigenvalue.  The bracket is shrunk toward its center
    until the endpoint signs differ (1/G00 also passes through
    infinity once between consecutive poles, so wide brackets can land
    with equal signs).
    """
    from scipy.optimize import brentq

    lo, hi = bracket
    if not lo < hi:
        raise InvalidParameter("bracket must satisfy lo < hi")
    mid = 0.5 * (lo + hi)

    def f(x: float) -> float:
        return _cf_inverse(complex(x, 0.0), spec, q).real

    flo, fhi = f(lo), f(hi)
    for _ in range(60):
        if flo * fhi < 0.0:
            return float(brentq(f, lo, hi, xtol=1e-15, rtol=8.9e-16))
        lo = 0.5 * (lo + mid)
        hi = 0.5 * (hi + mid)
        flo, fhi = f(lo), f(hi)
    raise NoConvergence("find_pole could not bracket a sign change of 1/G00")
