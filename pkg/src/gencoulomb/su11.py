"""Numerical SU(1,1) algebra on the GCS basis.

The generators act on functions of r as

    J3 = (h + theta)/(C rho) ( -d^2/dr^2 + W(r) ) + rho h / 4,
    J1 = J3 - (rho/2) h,
    J2 = -(i/C^{1/2}) sqrt(h (h+theta)) d/dr - i theta / (4 (h+theta)),

where W collects the multiplicative terms of the GCS defining
operator that do not involve the basis index,

    W = -3C/(16 (h+theta)^2) + 5 C theta/(16 (h+theta)^3)
        + C (beta-1/2)(beta-3/2) / (4 h (h+theta)).

Writing J3 through the defining operator makes its index dependence
cancel, leaving genuine n-free second-order differential operators, so
commutators are well-defined operator statements.  J3 phi_n =
(n + beta/2) phi_n, the ladders J+- = J1 +- i J2 shift n by one, and
the Casimir J3^2 - J1^2 - J2^2 has eigenvalue (beta/2)(beta/2 - 1) =
j(j+1) with j = -beta/2.  The r^{-2} singularity strength is
gamma = (beta-1/2)(beta-3/2) = 4 j (j+1) + 3/4.

All checks run on a log-uniform grid with 4th-order central stencils
in t = ln r; defects are measured on the interior 90% of the grid to
keep stencil edges out.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import GridTooCoarse, InvalidParameter
from .params import _h_grid
from .sturmian import SturmianSpec, gcs

__all__ = [
    "GridOperator",
    "AlgebraRep",
    "Generators",
    "algebra_rep",
    "default_grid",
    "build_generators",
    "ladder_check",
    "commutator_check",
    "casimir_check",
]

_GRID_POINTS = 2**13
_R_MIN = 1e-4


@dataclass(frozen=True)
class AlgebraRep:
    """Representation labels attached to a basis parameter beta."""

    beta: float
    j: float
    casimir: float
    gamma: float

    def m(self, n: int) -> float:
        """Eigenvalue of J3 on phi_n."""
        return n + 0.5 * self.beta


def algebra_rep(beta: float) -> AlgebraRep:
    """Labels j = -beta/2, Casimir j(j+1), singularity strength gamma."""
    j = -0.5 * beta
    return AlgebraRep(beta=beta, j=j, casimir=j * (j + 1.0), gamma=(beta - 0.5) * (beta - 1.5))


@dataclass(frozen=True)
class GridOperator:
    """A linear operator acting on samples over a fixed log-uniform r grid."""

    name: str
    grid: np.ndarray
    action: "callable"

    def __call__(self, f: np.ndarray) -> np.ndarray:
        return self.action(np.asarray(f))


@dataclass(frozen=True)
class Generators:
    """The three generators (plus ladders) realized on one grid."""

    spec: SturmianSpec
    r: np.ndarray
    j1: GridOperator = field(repr=False, default=None)
    j2_times_i: GridOperator = field(repr=False, default=None)
    j3: GridOperator = field(repr=False, default=None)
    j_plus: GridOperator = field(repr=False, default=None)
    j_minus: GridOperator = field(repr=False, default=None)
    coefficients: dict = field(repr=False, default=None)

    def basis_function(self, n: int) -> np.ndarray:
        return gcs(n, self.spec, self.r)

    def interior(self) -> slice:
        m = int(0.05 * self.r.size)
        return slice(m, self.r.size - m)

    def weighted_inner(self, f: np.ndarray, g: np.ndarray) -> float:
        """<f, g> with the GCS weight, trapezoid in t = ln r."""
        w = math.sqrt(self.spec.C) / (self.coefficients["h"] + self.spec.theta)
        t = np.log(self.r)
        integrand = np.conj(f) * g * w * self.r  # dr = r dt
        trapezoid = getattr(np, "trapezoid", np.trapz)
        return float(np.real(trapezoid(integrand, t)))


def default_grid(spec: SturmianSpec, n_max: int = 8, points: int = _GRID_POINTS) -> np.ndarray:
    """Log-uniform grid [1e-4, r_max] with r_max past the basis decay.

    r_max is set where the envelope exp(-rho h/2) with polynomial
    headroom for n <= n_max has fallen below ~1e-12; pushing further
    only coarsens the step, which the stencil errors pay for.
    """
    from .params import r_of_h

    target = (2.0 / spec.rho) * (35.0 + 2.0 * max(0, n_max - 8))
    return np.geomspace(_R_MIN, r_of_h(target, spec.params), points)


def build_generators(spec: SturmianSpec, grid: np.ndarray | None = None) -> Generators:
    """Realize J1, J2, J3 (and ladders) as grid operators.

    Derivatives are 4th-order central stencils in t = ln r
    (d/dr = r^{-1} d/dt, d^2/dr^2 = r^{-2}(d^2/dt^2 - d/dt)); the two
    edge points of each application are padded with the nearest
    interior value and excluded from all defect measures.
    """
    r = default_grid(spec) if grid is None else np.asarray(grid, dtype=float)
    if r.ndim != 1 or r.size < 64:
        raise InvalidParameter("generator grid must be 1-d with at least 64 points")
    t = np.log(r)
    dt = np.diff(t)
    if abs(dt.max() / dt.min() - 1.0) > 1e-8:
        raise InvalidParameter("generator grid must be log-uniform")
    step = float(dt[0])

    h, _ = _h_grid(r, spec.params)
    C, th, rho, beta = spec.C, spec.theta, spec.rho, spec.beta
    hp = h + th

    W = -3.0 * C / (16.0 * hp**2) + 5.0 * C * th / (16.0 * hp**3)
    g = (beta - 0.5) * (beta - 1.5)
    if g != 0.0:
        W = W + g * C / (4.0 * h * hp)

    c_kin = hp / (C * rho)  # coefficient of -d^2/dr^2 in J3
    c_j3 = rho * h / 4.0
    a2 = -np.sqrt(h * hp) / math.sqrt(C)  # J2 = -i a2 d/dr ... sign folded below
    b2 = -th / (4.0 * hp)

    def d_dt(f):
        out = np.empty_like(f)
        out[2:-2] = (-f[4:] + 8.0 * f[3:-1] - 8.0 * f[1:-3] + f[:-4]) / (12.0 * step)
        out[:2] = out[2]
        out[-2:] = out[-3]
        return out

    def d2_dt(f):
        out = np.empty_like(f)
        out[2:-2] = (
            -f[4:] + 16.0 * f[3:-1] - 30.0 * f[2:-2] + 16.0 * f[1:-3] - f[:-4]
        ) / (12.0 * step * step)
        out[:2] = out[2]
        out[-2:] = out[-3]
        return out

    def d_dr(f):
        return d_dt(f) / r

    def d2_dr2(f):
        return (d2_dt(f) - d_dt(f)) / (r * r)

    def act_j3(f):
        return c_kin * (-d2_dr2(f) + W * f) + c_j3 * f

    def act_j1(f):
        return act_j3(f) - 0.5 * rho * h * f

    def act_i_j2(f):
        # i J2 = (1/C^{1/2}) sqrt(h (h+theta)) d/dr + theta/(4(h+theta)),
        # a real operator on real functions.
        return -a2 * d_dr(f) - b2 * f

    def act_j2(f):
        return -1j * act_i_j2(f)

    def act_jp(f):
        return act_j1(f) + act_i_j2(f)

    def act_jm(f):
        return act_j1(f) - act_i_j2(f)

    coeffs = {"h": h, "W": W, "c_kin": c_kin, "c_j3": c_j3, "a2": a2, "b2": b2}
    return Generators(
        spec=spec,
        r=r,
        j1=GridOperator("J1", r, act_j1),
        j2_times_i=GridOperator("iJ2", r, act_i_j2),
        j3=GridOperator("J3", r, act_j3),
        j_plus=GridOperator("J+", r, act_jp),
        j_minus=GridOperator("J-", r, act_jm),
        coefficients=coeffs,
    )


def _defect(gen: Generators, got: np.ndarray, want: np.ndarray, ref: np.ndarray) -> float:
    # relative L2(dr) norm on the interior window; the dr = r dt measure
    # keeps origin-region stencil roundoff (amplified by 1/r^2 against an
    # exact indicial cancellation) from dominating the defect
    sl = gen.interior()
    r = gen.r[sl]
    num = math.sqrt(float(np.sum(np.abs(got - want)[sl] ** 2 * r)))
    den = math.sqrt(float(np.sum(np.abs(ref[sl]) ** 2 * r)))
    return num / den if den > 0.0 else num


def ladder_check(n: int, spec: SturmianSpec, gen: Generators | None = None) -> float:
    """Max normalized defect of the two ladder relations on phi_n.

        J+ phi_n = sqrt((n+1)(n+beta)) phi_{n+1}
        J- phi_n = sqrt(n (n+beta-1)) phi_{n-1}   (annihilates phi_0).
    """
    gen = build_generators(spec) if gen is None else gen
    f = gen.basis_function(n)
    up_target = math.sqrt((n + 1.0) * (n + spec.beta)) * gen.basis_function(n + 1)
    d_up = _defect(gen, gen.j_plus(f), up_target, f)
    if n == 0:
        d_dn = _defect(gen, gen.j_minus(f), np.zeros_like(f), f)
    else:
        dn_target = math.sqrt(n * (n + spec.beta - 1.0)) * gen.basis_function(n - 1)
        d_dn = _defect(gen, gen.j_minus(f), dn_target, f)
    d = max(d_up, d_dn)
    if d > 1e-2:
        raise GridTooCoarse(f"ladder defect {d:.2e} for n={n}; grid does not resolve phi_n")
    return d


def commutator_check(spec: SturmianSpec, gen: Generators | None = None, n_test: int = 6):
    """Defects of the three commutation relations on phi_0..phi_{n_test}.

        [J1, J2] = -i J3,   [J2, J3] = i J1,   [J3, J1] = i J2.

    Returns (d12, d23, d31).  Each relation is applied in both
    orderings through the real operator i J2, e.g. [J1, iJ2] = J3.
    """
    gen = build_generators(spec) if gen is None else gen
    d12 = d23 = d31 = 0.0
    for n in range(n_test + 1):
        f = gen.basis_function(n)
        # [J1, iJ2] = i [J1, J2] = J3
        got = gen.j1(gen.j2_times_i(f)) - gen.j2_times_i(gen.j1(f))
        d12 = max(d12, _defect(gen, got, gen.j3(f), f))
        # [iJ2, J3] = i [J2, J3] = -J1
        got = gen.j2_times_i(gen.j3(f)) - gen.j3(gen.j2_times_i(f))
        d23 = max(d23, _defect(gen, got, -gen.j1(f), f))
        # [J3, J1] = i J2 = iJ2 as a real operator
        got = gen.j3(gen.j1(f)) - gen.j1(gen.j3(f))
        d31 = max(d31, _defect(gen, got, gen.j2_times_i(f), f))
    if max(d12, d23, d31) > 1e-2:
        raise GridTooCoarse("commutator defects dominated by grid resolution")
    return d12, d23, d31


def casimir_check(n: int, spec: SturmianSpec, gen: Generators | None = None) -> float:
    """Defect of (J3^2 - J1^2 - J2^2) phi_n = (beta/2)(beta/2 - 1) phi_n.

    With the real operator iJ2, -J2^2 = +(iJ2)^2.
    """
    gen = build_generators(spec) if gen is None else gen
    f = gen.basis_function(n)
    got = gen.j3(gen.j3(f)) - gen.j1(gen.j1(f)) + gen.j2_times_i(gen.j2_times_i(f))
    want = algebra_rep(spec.beta).casimir * f
    return _defect(gen, got, want, f)
