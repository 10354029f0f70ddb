import math

import numpy as np
import pytest

from gencoulomb import (
    SturmianSpec,
    energy,
    errors,
    find_pole,
    gcs,
    green00,
    green00_above_threshold,
    green_block,
    jmatrix_entry,
    truncated_inverse,
    validate,
)
from gencoulomb.sturmian import x_operator_terms

P_REF = validate(1.0, 1.0, 1.0, 1.5, 3, 0)
SPEC = SturmianSpec(rho=1.0, beta=1.5, params=P_REF)
Q = P_REF.q
EPS_TEST = complex(-0.3, 0.1)


class TestJMatrixEntries:
    def test_band_limit(self):
        for n, m in [(0, 2), (1, 3), (0, 5)]:
            assert jmatrix_entry(n, m, EPS_TEST, SPEC, Q) == 0.0

    def test_symmetry(self):
        for n in range(5):
            assert jmatrix_entry(n, n + 1, EPS_TEST, SPEC, Q) == jmatrix_entry(
                n + 1, n, EPS_TEST, SPEC, Q
            )

    def test_diagonal_energy_point(self):
        # at epsilon = -C rho^2/4 the off-diagonal coefficient vanishes and
        # J is diagonal, so G00 = 1/J_00 exactly.  (With rho = 1 and q = 1
        # that epsilon coincides with the ground state, where G00 has its
        # pole; a detuned basis scale keeps the point regular.)
        spec = SturmianSpec(rho=1.3, beta=1.5, params=P_REF)
        eps = -0.25 * spec.C * spec.rho**2
        assert jmatrix_entry(0, 1, eps, spec, Q) == 0.0
        g = green00(eps, spec, Q)
        assert g == pytest.approx(1.0 / jmatrix_entry(0, 0, eps, spec, Q), rel=1e-12)

    @pytest.mark.parametrize("n,m", [(0, 0), (3, 3), (6, 6), (0, 1), (2, 3), (5, 6)])
    def test_quadrature_match(self, n, m):
        # grid oracle: integrate phi_n (eps - H0) phi_m with a finite
        # difference Hamiltonian (H0 = X-operator kinetic part plus the
        # Coulomb-strength term) and Simpson weights
        eps = -0.3
        grid = np.linspace(1e-5, 60.0, 2**17 + 1)
        step = grid[1] - grid[0]
        phi_m = gcs(m, SPEC, grid)
        phi_n = gcs(n, SPEC, grid)
        # multiplicative part of H0: U_m(r) with the index-dependent and
        # rho^2 pieces removed, minus q/(h+theta)
        from gencoulomb.params import _h_grid

        h, _ = _h_grid(grid, P_REF)
        hp = h + P_REF.theta
        W = -3.0 / (16.0 * hp**2) + 5.0 * P_REF.theta / (16.0 * hp**3)
        pot = W - Q / hp
        d2 = np.zeros_like(phi_m)
        d2[1:-1] = (phi_m[2:] - 2.0 * phi_m[1:-1] + phi_m[:-2]) / (step * step)
        integrand = phi_n * (eps * phi_m + d2 - pot * phi_m)
        # Simpson rule (odd point count)
        simpson = (
            step
            / 3.0
            * (integrand[0] + integrand[-1] + 4.0 * integrand[1:-1:2].sum() + 2.0 * integrand[2:-2:2].sum())
        )
        assert simpson == pytest.approx(
            jmatrix_entry(n, m, eps, SPEC, Q).real, abs=1e-5
        )


class TestGreen00:
    def test_against_truncated_inverse(self):
        g_cf = green00(EPS_TEST, SPEC, Q)
        g_tr = truncated_inverse(EPS_TEST, SPEC, Q, 200)[0, 0]
        assert abs(g_cf - g_tr) <= 1e-8

    def test_pole_brackets_capture_spectrum(self):
        for n in range(2):
            e = energy(n, P_REF)
            gap = 0.25 * abs(energy(n + 1, P_REF) - e)
            pole = find_pole(SPEC, Q, (e - gap, e + gap))
            assert pole == pytest.approx(e, abs=1e-6)

    def test_near_pole_detected(self):
        e0 = find_pole(SPEC, Q, (-0.26, -0.24))
        with pytest.raises(errors.NearPole):
            green00(e0, SPEC, Q)

    def test_herglotz_sign(self):
        for eps in (complex(-0.4, 0.2), complex(-0.1, 0.05), complex(-0.7, -0.15)):
            g = green00(eps, SPEC, Q)
            assert g.imag * eps.imag < 0.0

    def test_analyticity_probe(self):
        # Cauchy-Riemann: dG/d(Re eps) = -i dG/d(Im eps) along a segment
        d = 1e-5
        for eps in (complex(-0.35, 0.12), complex(-0.2, 0.08)):
            dx = (green00(eps + d, SPEC, Q) - green00(eps - d, SPEC, Q)) / (2 * d)
            dy = (green00(eps + 1j * d, SPEC, Q) - green00(eps - 1j * d, SPEC, Q)) / (2 * d)
            assert abs(dx + 1j * dy) <= 1e-4 * abs(dx)

    def test_above_threshold_limit(self):
        # side limit at eps > 0: validated against the truncation oracle at
        # moderate eta, and Im G00(eps + i0+) < 0
        eps = 0.4
        eta = 0.05
        g_eta = green00(complex(eps, eta), SPEC, Q)
        g_tr = truncated_inverse(complex(eps, eta), SPEC, Q, 1200)[0, 0]
        assert abs(g_eta - g_tr) < 1e-6
        g_lim = green00_above_threshold(eps, SPEC, Q, eta=1e-2)
        assert g_lim.imag < 0.0
        g_lim2 = green00_above_threshold(eps, SPEC, Q, eta=5e-3)
        assert abs(g_lim - g_lim2) < 5e-4


class TestGreenBlock:
    def test_window_residual(self):
        block = green_block(EPS_TEST, SPEC, Q, 20)
        assert block.residual <= 1e-8

    def test_symmetry(self):
        block = green_block(EPS_TEST, SPEC, Q, 20)
        assert np.max(np.abs(block.entries - block.entries.T)) <= 1e-10

    def test_against_dense_oracle(self):
        block = green_block(EPS_TEST, SPEC, Q, 20)
        dense = truncated_inverse(EPS_TEST, SPEC, Q, 800)[:20, :20]
        assert np.max(np.abs(block.entries - dense)) <= 1e-7

    def test_first_column_matches_cf(self):
        block = green_block(EPS_TEST, SPEC, Q, 6)
        assert block.entries[0, 0] == pytest.approx(green00(EPS_TEST, SPEC, Q), rel=1e-10)

    def test_size_validation(self):
        with pytest.raises(errors.InvalidParameter):
            green_block(EPS_TEST, SPEC, Q, 0)


class TestTruncatedInverse:
    def test_identity_residual(self):
        N = 120
        inv = truncated_inverse(EPS_TEST, SPEC, Q, N)
        J = np.zeros((N, N), dtype=complex)
        for n in range(N):
            J[n, n] = jmatrix_entry(n, n, EPS_TEST, SPEC, Q)
            if n + 1 < N:
                J[n, n + 1] = J[n + 1, n] = jmatrix_entry(n, n + 1, EPS_TEST, SPEC, Q)
        assert np.max(np.abs(J @ inv - np.eye(N))) <= 1e-12

    def test_truncation_stability(self):
        a = truncated_inverse(complex(-0.3, 0.1), SPEC, Q, 400)[:10, :10]
        b = truncated_inverse(complex(-0.3, 0.1), SPEC, Q, 800)[:10, :10]
        assert np.max(np.abs(a - b)) < 1e-9

    def test_singular_truncation_detected(self):
        # N = 1: the matrix [J_00] is exactly singular where J_00 = 0
        sC = math.sqrt(SPEC.C)
        d0_zero = (
            (sC * SPEC.rho * SPEC.beta / 4.0 - Q / sC)
            * sC
            * SPEC.rho
            / (SPEC.beta + SPEC.rho * SPEC.theta)
        )
        assert abs(jmatrix_entry(0, 0, d0_zero, SPEC, Q)) < 1e-14
        with pytest.raises(errors.SingularTruncation):
            truncated_inverse(d0_zero, SPEC, Q, 1)

    def test_size_cap(self):
        with pytest.raises(errors.InvalidParameter):
            truncated_inverse(EPS_TEST, SPEC, Q, 4000)
