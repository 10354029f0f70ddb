import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gencoulomb import errors, h_of_r, r_of_h, validate
from gencoulomb.params import _h_grid

P_DEFAULT = validate(1.0, 1.0, 1.0, 1.5)


class TestValidate:
    def test_accepts_reference_tuple(self):
        p = validate(1.0, 1.0, 1.0, 1.5, 3, 0)
        assert (p.C, p.theta, p.q, p.beta, p.D, p.l) == (1.0, 1.0, 1.0, 1.5, 3, 0)

    def test_rejects_nonpositive_C(self):
        with pytest.raises(errors.NonPositiveC):
            validate(-1.0, 1.0, 1.0, 1.5)

    def test_rejects_beta_zero(self):
        # solutions for beta = 0 are undefined, not merely singular
        with pytest.raises(errors.NonPositiveBeta):
            validate(1.0, 1.0, 1.0, 0.0)

    def test_rejects_negative_theta(self):
        with pytest.raises(errors.NegativeTheta):
            validate(1.0, -0.5, 1.0, 1.5)

    def test_rejects_non_finite(self):
        with pytest.raises(errors.InvalidParameter):
            validate(float("nan"), 1.0, 1.0, 1.5)

    def test_rejects_bad_dimensions(self):
        with pytest.raises(errors.InvalidParameter):
            validate(1.0, 1.0, 1.0, 1.5, 0, 0)
        with pytest.raises(errors.InvalidParameter):
            validate(1.0, 1.0, 1.0, 1.5, 3, -1)


class TestMapForward:
    def test_origin(self):
        assert r_of_h(0.0, P_DEFAULT) == 0.0

    def test_unit_point(self):
        # artanh(2^{-1/2}) + 2^{1/2}, frozen from a 50-digit evaluation
        assert r_of_h(1.0, P_DEFAULT) == pytest.approx(2.2955871493926381, rel=1e-15)

    def test_theta_zero_collapses_to_linear(self):
        p = validate(4.0, 0.0, 1.0, 1.5)
        for h in (1e-6, 0.3, 7.0, 1e5):
            assert r_of_h(h, p) == h / 2.0


class TestMapInverse:
    def test_origin(self):
        assert h_of_r(0.0, P_DEFAULT).h == 0.0

    @pytest.mark.parametrize("h", np.geomspace(1e-6, 1e6, 25))
    def test_round_trip_h(self, h):
        r = r_of_h(float(h), P_DEFAULT)
        back = h_of_r(r, P_DEFAULT).h
        assert abs(back - h) <= 1e-12 * h

    def test_round_trip_r(self):
        for r in np.geomspace(1e-6, 1e6, 200):
            r_back = r_of_h(h_of_r(float(r), P_DEFAULT).h, P_DEFAULT)
            assert abs(r_back - r) <= 1e-12 * r

    def test_small_r_quadratic_seed(self):
        # h ~ C r^2 / (4 theta) near the origin
        r = 1e-3
        h = h_of_r(r, P_DEFAULT).h
        assert abs(h - r * r / 4.0) <= 0.01 * h

    def test_large_r_linear_asymptote(self):
        r = 1e4
        h = h_of_r(r, P_DEFAULT).h
        assert abs(h / r - 1.0) <= 1e-2

    @given(
        st.floats(min_value=-6.0, max_value=6.0),
        st.floats(min_value=1e-3, max_value=2.0),
    )
    @settings(max_examples=60, deadline=None)
    def test_monotone(self, log10_r, factor):
        r1 = 10.0**log10_r
        r2 = r1 * (1.0 + factor)
        assert h_of_r(r1, P_DEFAULT).h < h_of_r(r2, P_DEFAULT).h

    @pytest.mark.parametrize("r", [1e-2, 0.3, 1.0, 12.0, 300.0])
    def test_derivative_matches_finite_difference(self, r):
        d = 1e-6 * r
        fd = (h_of_r(r + d, P_DEFAULT).h - h_of_r(r - d, P_DEFAULT).h) / (2.0 * d)
        assert h_of_r(r, P_DEFAULT).dh_dr == pytest.approx(fd, rel=1e-6)

    def test_derivative_closed_form(self):
        pt = h_of_r(2.0, P_DEFAULT)
        expected = math.sqrt(pt.h / (pt.h + 1.0))
        assert pt.dh_dr == pytest.approx(expected, rel=1e-14)


class TestVectorizedGrid:
    def test_matches_scalar_solver(self):
        p = validate(2.0, 0.7, 1.0, 1.5)
        r = np.geomspace(1e-5, 1e3, 400)
        h, dh = _h_grid(r, p)
        for i in (0, 57, 200, 399):
            pt = h_of_r(float(r[i]), p)
            assert h[i] == pytest.approx(pt.h, rel=1e-13)
            assert dh[i] == pytest.approx(pt.dh_dr, rel=1e-13)

    def test_handles_zero(self):
        h, dh = _h_grid(np.array([0.0, 1.0]), P_DEFAULT)
        assert h[0] == 0.0 and dh[0] == 0.0
