import math

import numpy as np
import pytest

from gencoulomb import errors, numerov_eigenvalues, quadrature, transmission_1d


class TestNumerov:
    def test_radial_oscillator(self):
        # -psi'' + r^2 psi = E psi with psi(0) = 0: E = 3, 7, 11
        res = numerov_eigenvalues(lambda r: r * r, (1e-5, 12.0), 3, points=4000)
        np.testing.assert_allclose(res.energies, [3.0, 7.0, 11.0], rtol=1e-9)
        assert res.node_counts == [0, 1, 2]

    def test_hydrogen_like(self):
        res = numerov_eigenvalues(lambda r: -2.0 / r, (1e-5, 300.0), 3, points=6000)
        np.testing.assert_allclose(res.energies, [-1.0, -0.25, -1.0 / 9.0], rtol=1e-8)

    def test_richardson_order(self):
        # raw (unextrapolated) eigenvalue error must shrink ~16x per halving
        from gencoulomb.oracle import _eigen_on_grid, _origin_exponent

        def v(r):
            return r * r

        s = _origin_exponent(v, 1e-5)
        errs = []
        for npts in (1500, 3000):
            t = np.linspace(math.log(1e-5), math.log(12.0), npts)
            r = np.exp(t)
            vg = v(r)
            errs.append(abs(_eigen_on_grid(vg, r, t, s, 1) - 7.0))
        assert errs[0] / errs[1] > 8.0

    def test_too_few_states(self):
        with pytest.raises(errors.TooFewStatesFound):
            numerov_eigenvalues(lambda r: -2.0 / r, (1e-4, 4.0), 8, points=2000)

    def test_count_validation(self):
        with pytest.raises(errors.InvalidParameter):
            numerov_eigenvalues(lambda r: r * r, (1e-4, 10.0), 11)


class TestQuadrature:
    def test_exponential(self):
        val, err = quadrature(lambda x: math.exp(-x), 0.0, np.inf)
        assert val == pytest.approx(1.0, abs=1e-12)
        assert err < 1e-10

    @pytest.mark.parametrize("n,m", [(0, 0), (3, 3), (2, 5), (7, 7), (0, 1)])
    def test_laguerre_orthogonality(self, n, m):
        from gencoulomb import laguerre

        beta = 1.5

        def f(x):
            return x ** (beta - 1.0) * math.exp(-x) * laguerre(n, beta - 1.0, x) * laguerre(
                m, beta - 1.0, x
            )

        val, _ = quadrature(f, 0.0, np.inf, tol=1e-12)
        expected = math.gamma(n + beta) / math.factorial(n) if n == m else 0.0
        assert val == pytest.approx(expected, abs=1e-10)

    def test_tolerance_not_met(self):
        with pytest.raises(errors.ToleranceNotMet):
            quadrature(lambda x: math.sin(1e4 * x * x), 0.0, 30.0, tol=1e-13, limit=3)


class TestTransmission1D:
    def test_free_particle(self):
        R, T = transmission_1d(lambda x: 0.0, 1.0, x_max=40.0, interpolate=False)
        assert abs(R) < 1e-9
        assert abs(T) == pytest.approx(1.0, abs=1e-9)

    def test_square_barrier(self):
        # v = 2 on [0, 1]: |T|^2 = [1 + sinh^2(kappa)/ (4 E (V0-E)/V0^2)]^{-1}
        V0, width, k = 2.0, 1.0, 1.2
        E = k * k
        kappa = math.sqrt(V0 - E)

        def v(x):
            return V0 if 0.0 <= x <= width else 0.0

        R, T = transmission_1d(v, k, x_max=30.0, interpolate=False, max_step=0.02)
        t2_exact = 1.0 / (1.0 + V0**2 * math.sinh(kappa * width) ** 2 / (4.0 * E * (V0 - E)))
        assert abs(T) ** 2 == pytest.approx(t2_exact, rel=1e-6)
        assert abs(R) ** 2 + abs(T) ** 2 == pytest.approx(1.0, abs=1e-9)

    def test_match_defect_decreases_with_match_radius(self):
        # long-range attractive tail: matching error is set by x_max
        from gencoulomb.oracle import _scattering_amplitudes, match_defect
        from gencoulomb import v as v_model
        from gencoulomb import validate

        p = validate(1.0, 1.0, 2.5, 1.5, 1, 0)

        def v1d(x):
            return v_model(abs(x), p)

        defects = []
        for x_max in (6.0, 30.0, 150.0):
            R, T = _scattering_amplitudes(v1d, 0.36, x_max, 1e-10, np.inf)
            R_half, _ = _scattering_amplitudes(v1d, 0.36, 0.5 * x_max, 1e-10, np.inf)
            defects.append(match_defect(R, T, R_half))
        assert defects[0] > defects[1] > defects[2]

    def test_unitarity_holds_within_defect(self):
        from gencoulomb import v as v_model
        from gencoulomb import validate

        p = validate(1.0, 0.1, 1.0, 1.5, 1, 0)

        def v1d(x):
            return v_model(abs(x), p)

        R, T = transmission_1d(v1d, 2.0, x_max=400.0)
        assert abs(R) ** 2 + abs(T) ** 2 == pytest.approx(1.0, abs=1e-3)

    def test_match_radius_guard(self):
        from gencoulomb import v as v_model
        from gencoulomb import validate

        p = validate(1.0, 1.0, 2.5, 1.5, 1, 0)

        def v1d(x):
            return v_model(abs(x), p)

        with pytest.raises(errors.MatchRadiusTooSmall):
            transmission_1d(v1d, 0.5, x_max=6.0, defect_tol=1e-5)

    def test_momentum_validation(self):
        with pytest.raises(errors.InvalidParameter):
            transmission_1d(lambda x: 0.0, -1.0)
