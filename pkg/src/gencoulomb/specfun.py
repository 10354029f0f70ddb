"""Self-contained special functions.

Everything downstream needs exactly four primitives: the principal
branch of log Gamma on the complex plane, associated Laguerre and
(physicists') Hermite polynomials by three-term recurrence, and the
regular (Phi) and irregular (Psi) confluent hypergeometric functions.

Accuracy notes
--------------
log_gamma      : Lanczos (g = 7, 9 terms) with reflection; relative
                 error of exp(log_gamma) below ~1e-13 on the strip
                 used here (|Im z| <= 50).
kummer_phi     : Maclaurin series for |z| <= 20 (after a Kummer
                 transformation when Re z < 0), large-z asymptotics
                 beyond.  Full precision for real arguments of either
                 sign; for purely oscillatory arguments the seam at
                 |z| ~ 20 limits accuracy to ~1e-7 (worse for
                 |Im a| >> 1), far inside every tolerance used by the
                 wavefunction checks.
tricomi_psi    : two-Phi connection formula for |z| <= 30, optimally
                 truncated asymptotic series beyond.  Non-integer c
                 only; the integer-c limit formula is out of scope.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from .errors import IntegerC, InvalidParameter, NoConvergence, PoleArgument

__all__ = [
    "log_gamma",
    "gamma_ratio",
    "laguerre",
    "hermite",
    "kummer_phi",
    "tricomi_psi",
]

# Lanczos approximation, g = 7, n = 9 (Godfrey coefficients).
_LANCZOS_G = 7.0
_LANCZOS_C = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_LOG_SQRT_2PI = 0.91893853320467274178

_PHI_SEAM = 20.0
_PSI_SEAM = 30.0
_SERIES_CAP = 20000


def _is_nonpositive_integer(z: complex, tol: float = 0.0) -> bool:
    if z.imag != 0.0:
        return False
    return z.real <= 0.0 and z.real == round(z.real)


def _log_sin_pi(z: complex) -> complex:
    """log(sin(pi z)), stable for large |Im z|."""
    if abs(z.imag) < 1.0:
        return cmath.log(cmath.sin(cmath.pi * z))
    if z.imag > 0.0:
        return -1j * cmath.pi * z - cmath.log(-2j) + cmath.log(1.0 - cmath.exp(2j * cmath.pi * z))
    return 1j * cmath.pi * z - cmath.log(2j) + cmath.log(1.0 - cmath.exp(-2j * cmath.pi * z))


def log_gamma(z) -> complex:
    """Principal branch of log Gamma(z) for complex z.

    Lanczos rational approximation for Re z >= 1/2; the reflection
    formula log Gamma(z) = log pi - log sin(pi z) - log Gamma(1-z)
    otherwise.  Conjugate symmetric: log_gamma(conj z) = conj(log_gamma(z)).

    Raises PoleArgument at the poles z = 0, -1, -2, ...
    """
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise InvalidParameter(f"log_gamma argument must be finite, got {z}")
    if _is_nonpositive_integer(z):
        raise PoleArgument(f"log_gamma pole at z = {z.real:g}")
    if z.real < 0.5:
        return math.log(math.pi) - _log_sin_pi(z) - log_gamma(1.0 - z)
    zz = z - 1.0
    x = _LANCZOS_C[0]
    for i in range(1, len(_LANCZOS_C)):
        x += _LANCZOS_C[i] / (zz + i)
    t = zz + _LANCZOS_G + 0.5
    return _LOG_SQRT_2PI + (zz + 0.5) * cmath.log(t) - t + cmath.log(x)


def gamma_ratio(num, den) -> complex:
    """Gamma(num)/Gamma(den) via exp of the log difference (no overflow)."""
    return cmath.exp(log_gamma(num) - log_gamma(den))


def laguerre(n: int, alpha: float, x):
    """Associated Laguerre polynomial L_n^{(alpha)}(x) by upward recurrence.

    (k+1) L_{k+1} = (2k+1+alpha-x) L_k - (k+alpha) L_{k-1}.

    x may be a scalar or ndarray; the recurrence is stable for the
    alpha > -1, x >= 0 range used by the basis functions.
    """
    if n < 0:
        raise InvalidParameter(f"n must be >= 0, got {n}")
    scalar = np.isscalar(x)
    x = np.asarray(x, dtype=float)
    L0 = np.ones_like(x)
    if n == 0:
        return float(L0) if scalar else L0
    L1 = 1.0 + alpha - x
    for k in range(1, n):
        L0, L1 = L1, ((2.0 * k + 1.0 + alpha - x) * L1 - (k + alpha) * L0) / (k + 1.0)
    return float(L1) if scalar else L1


def hermite(n: int, y):
    """Physicists' Hermite polynomial H_n(y) by recurrence.

    H_{k+1} = 2 y H_k - 2 k H_{k-1};  scalar or ndarray argument.
    """
    if n < 0:
        raise InvalidParameter(f"n must be >= 0, got {n}")
    scalar = np.isscalar(y)
    y = np.asarray(y, dtype=float)
    H0 = np.ones_like(y)
    if n == 0:
        return float(H0) if scalar else H0
    H1 = 2.0 * y
    for k in range(1, n):
        H0, H1 = H1, 2.0 * y * H1 - 2.0 * k * H0
    return float(H1) if scalar else H1


def _phi_series(a: complex, c: complex, z: complex) -> complex:
    # Maclaurin series with Neumaier-compensated summation.
    term = 1.0 + 0.0j
    s = term
    comp = 0.0 + 0.0j
    for k in range(_SERIES_CAP):
        term = term * (a + k) * z / ((c + k) * (k + 1.0))
        t = s + term
        if abs(s) >= abs(term):
            comp += (s - t) + term
        else:
            comp += (term - t) + s
        s = t
        if abs(term) <= 1e-17 * abs(s) and k > 3:
            return s + comp
    raise NoConvergence("kummer_phi series did not converge")


def _hyp2f0_optimal(a: complex, b: complex, w: complex):
    # Asymptotic sum_k (a)_k (b)_k w^k / k!, truncated at the smallest
    # term.  Returns (sum, magnitude of first omitted term).
    term = 1.0 + 0.0j
    s = term
    k = 0
    while k < 500:
        nxt = term * (a + k) * (b + k) * w / (k + 1.0)
        if abs(nxt) >= abs(term):
            return s, abs(nxt)
        term = nxt
        s += term
        k += 1
        if abs(term) <= 1e-18 * abs(s):
            return s, abs(term)
    return s, abs(term)


def _phi_asymptotic(a: complex, c: complex, z: complex) -> complex:
    # Both dominant (e^z z^{a-c}) and recessive (z^{-a}) branches.
    sgn = 1.0 if z.imag >= 0.0 else -1.0
    f1, _ = _hyp2f0_optimal(a, a - c + 1.0, -1.0 / z)
    f2, _ = _hyp2f0_optimal(c - a, 1.0 - a, 1.0 / z)
    t1 = cmath.exp(log_gamma(c) - log_gamma(c - a) + 1j * math.pi * a * sgn - a * cmath.log(z)) * f1
    t2 = cmath.exp(log_gamma(c) - log_gamma(a) + z + (a - c) * cmath.log(z)) * f2
    return t1 + t2


def kummer_phi(a, c, z) -> complex:
    """Regular confluent hypergeometric function Phi(a, c; z).

    Phi(a, c; 0) = 1; satisfies z w'' + (c - z) w' - a w = 0.
    Raises PoleArgument when c is a non-positive integer.
    """
    a, c, z = complex(a), complex(c), complex(z)
    if _is_nonpositive_integer(c):
        raise PoleArgument(f"kummer_phi undefined for c = {c.real:g}")
    if z == 0.0:
        return 1.0 + 0.0j
    if _is_nonpositive_integer(a):
        # Terminating series: a polynomial of degree -Re a, exact at any z.
        return _phi_series(a, c, z)
    if abs(z) <= _PHI_SEAM:
        if z.real < 0.0:
            # Kummer transformation restores a same-sign series.
            return cmath.exp(z) * _phi_series(c - a, c, -z)
        return _phi_series(a, c, z)
    return _phi_asymptotic(a, c, z)


def tricomi_psi(a, c, z) -> complex:
    """Irregular confluent hypergeometric function Psi(a, c; z).

    Moderate |z|: connection formula

        Psi = Gamma(1-c)/Gamma(a-c+1) Phi(a, c; z)
            + Gamma(c-1)/Gamma(a) z^{1-c} Phi(a-c+1, 2-c; z),

    valid for non-integer c only (IntegerC otherwise).  Large |z|:
    z^{-a} 2F0(a, a-c+1; -1/z) truncated at its smallest term.
    """
    a, c, z = complex(a), complex(c), complex(z)
    if z == 0.0:
        raise InvalidParameter("tricomi_psi requires z != 0")
    if c.imag == 0.0 and c.real == round(c.real):
        raise IntegerC(f"tricomi_psi connection formula degenerate for integer c = {c.real:g}")
    if abs(z) > _PSI_SEAM:
        f, tail = _hyp2f0_optimal(a, a - c + 1.0, -1.0 / z)
        if tail > 1e-8 * abs(f):
            raise NoConvergence("tricomi_psi asymptotic series stalled above tolerance")
        return cmath.exp(-a * cmath.log(z)) * f
    # 1/Gamma vanishes at the poles, killing the corresponding term.
    if _is_nonpositive_integer(a - c + 1.0):
        t1 = 0.0 + 0.0j
    else:
        t1 = cmath.exp(log_gamma(1.0 - c) - log_gamma(a - c + 1.0)) * kummer_phi(a, c, z)
    if _is_nonpositive_integer(a):
        t2 = 0.0 + 0.0j
    else:
        t2 = cmath.exp(log_gamma(c - 1.0) - log_gamma(a) + (1.0 - c) * cmath.log(z)) * kummer_phi(
            a - c + 1.0, 2.0 - c, z
        )
    return t1 + t2
