# Copyright (C) 2026 Redcar & Cleveland Borough Council
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU Affero General Public License as published by
# the Free Software Foundation, version 3.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU Affero General Public License for more details.
#
# You should have received a copy of the GNU Affero General Public License
# along with this program.  If not, see <https://www.gnu.org/licenses/>.

"""
Tests for multdep/lattice.py
"""

from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from multdep.exceptions import InvalidParams, UnsupportedConstant
from multdep.lattice import (
    approx_biquad,
    approx_lattice_sum,
    kronecker_q,
    kronecker_thresholds,
    verify_kronecker,
)

from .oracles import eisenstein, gaussian, lattice_sum_radius


def lattice_distance(pair, coefficients, z):
    """|a + b*alpha + c*alpha^2 - z| in ordinary 60-digit arithmetic."""
    radix = {"rho": 2, "sigma": 3}[pair]
    a, b, c = coefficients
    with mpmath.workdps(60):
        alpha = mpmath.cbrt(radix) * mpmath.expjpi(mpmath.mpf(2) / 3)
        target = mpmath.mpc(float(z.x), float(z.y)) if hasattr(z, "x") else mpmath.mpf(z)
        return abs(a + b * alpha + c * alpha**2 - target)


def fractional(value):
    return value - mpmath.floor(value)


class TestKronecker:
    """Tests for kronecker_q and verify_kronecker."""

    def test_thresholds(self):
        assert kronecker_thresholds(Fraction(1, 2)) == (
            Fraction(1, 8),
            Fraction(1, 4),
            Fraction(1, 80),
        )

    def test_sqrt2_sqrt3(self):
        eps = Fraction(1, 2)
        certificate = kronecker_q("sqrt2", "sqrt3", eps)
        assert verify_kronecker(certificate, "sqrt2", "sqrt3", eps)
        with mpmath.workdps(50):
            r, s = mpmath.sqrt(2), mpmath.sqrt(3)
            for q in range(1, certificate.q):
                inside = 0.125 < fractional(q * r) < 0.25 and fractional(q * s) < 0.0125
                assert not inside, q
            assert 0.125 < fractional(certificate.q * r) < 0.25
            assert fractional(certificate.q * s) < 0.0125

    def test_as_dict(self):
        data = kronecker_q("sqrt2", "sqrt3", Fraction(1, 2)).as_dict(digits=10)
        assert set(data) == {"q", "floor_qr", "floor_qs", "frac_qr", "frac_qs", "bits"}

    def test_cube_roots(self):
        eps = Fraction(1, 3)
        certificate = kronecker_q("cbrt2", "cbrt4", eps)
        assert verify_kronecker(certificate, "cbrt2", "cbrt4", eps)

    def test_eps_out_of_range(self):
        with pytest.raises(InvalidParams):
            kronecker_q("sqrt2", "sqrt3", 2)

    def test_dependent_inputs(self):
        with pytest.raises(InvalidParams):
            kronecker_q("sqrt2", "sqrt2", Fraction(1, 2))

    def test_unknown_constant(self):
        with pytest.raises(UnsupportedConstant):
            kronecker_q("pi", "sqrt2", Fraction(1, 2))


class TestApproxLatticeSum:
    """Tests for approx_lattice_sum."""

    def test_zero_is_exact(self):
        result = approx_lattice_sum(gaussian(0), Fraction(1, 10))
        assert result.coefficients == (0, 0, 0)
        assert result.method == "exact"
        assert result.as_dict()["distance_upper"] == "0"

    def test_shift_hits_alpha(self):
        result = approx_lattice_sum(gaussian(0), Fraction(1, 10), shift=(1, 0))
        assert result.coefficients == (0, 1, 0)

    def test_direct_search(self):
        z, eps = gaussian(3, Fraction(1, 2)), Fraction(1, 4)
        result = approx_lattice_sum(z, eps)
        assert result.method == "direct"
        assert result.distance2_upper < eps * eps
        assert lattice_distance("rho", result.coefficients, z) < 0.25

    def test_kronecker_construction(self):
        z, eps = gaussian(Fraction(3, 2), Fraction(1, 3)), Fraction(1, 2)
        result = approx_lattice_sum(z, eps, method="kronecker")
        assert result.method == "kronecker"
        assert result.certificate is not None
        assert {"q1", "q2", "tau", "k"} <= set(result.steps)
        assert lattice_distance("rho", result.coefficients, z) < 0.5

    def test_negative_imaginary_target(self):
        z, eps = gaussian(Fraction(-5, 2), Fraction(-7, 4)), Fraction(1, 2)
        result = approx_lattice_sum(z, eps, method="kronecker")
        assert result.steps["tau"] == -1
        assert lattice_distance("rho", result.coefficients, z) < 0.5

    def test_sigma_pair(self):
        z, eps = gaussian(1, 1), Fraction(1, 4)
        result = approx_lattice_sum(z, eps, pair="sigma")
        assert result.pair == "sigma"
        assert lattice_distance("sigma", result.coefficients, z) < 0.25

    def test_unknown_pair(self):
        with pytest.raises(UnsupportedConstant):
            approx_lattice_sum(gaussian(1), Fraction(1, 4), pair="tau")

    def test_unknown_method(self):
        with pytest.raises(InvalidParams):
            approx_lattice_sum(gaussian(1), Fraction(1, 4), method="greedy")

    def test_eisenstein_target(self):
        with pytest.raises(InvalidParams):
            approx_lattice_sum(eisenstein(1, 1), Fraction(1, 4))


UNIT_SQUARE = [
    (Fraction(i, 4), Fraction(j, 4)) for i in range(4) for j in range(4) if i or j
]


class TestLatticeSumAgainstSearch:
    """Tests for approx_lattice_sum against a brute-force search."""

    def check(self, x, y, eps, bound):
        z = gaussian(x, y)
        expected = lattice_sum_radius(x, y, eps, bound=bound)
        result = approx_lattice_sum(z, eps, direct_bound=bound)
        if expected is None:
            assert result.method == "kronecker"
        else:
            assert result.method == "direct"
            assert max(abs(result.coefficients[1]), abs(result.coefficients[2])) == expected
        assert result.distance2_upper < eps * eps
        assert lattice_distance("rho", result.coefficients, z) < float(eps)

    @pytest.mark.parametrize("x,y", UNIT_SQUARE)
    def test_quarter(self, x, y):
        self.check(x, y, Fraction(1, 4), 12)

    @pytest.mark.slow
    @pytest.mark.parametrize("x,y", UNIT_SQUARE)
    def test_tenth(self, x, y):
        self.check(x, y, Fraction(1, 10), 20)

    @pytest.mark.parametrize("eps", [Fraction(1, 2), Fraction(1, 4)])
    def test_half_eps_lands_inside(self, eps):
        z = gaussian(Fraction(3, 2), Fraction(1, 3))
        for current in (eps, eps / 2):
            result = approx_lattice_sum(z, current, method="kronecker")
            assert result.distance2_upper < current * current
            assert lattice_distance("rho", result.coefficients, z) < float(current)


class TestApproxBiquad:
    """Tests for approx_biquad."""

    def test_seven_halves(self):
        result = approx_biquad(Fraction(7, 2), Fraction(1, 10))
        assert result.coefficients == (-5, 6, 0, 0)
        assert result.distance2_upper < Fraction(1, 100)

    def test_zero(self):
        result = approx_biquad(gaussian(0), Fraction(1, 10))
        assert result.coefficients == (0, 0, 0, 0)
        assert result.as_dict()["distance_upper"] == "0"

    def test_complex_target(self):
        z, eps = gaussian(Fraction(1, 3), Fraction(5, 7)), Fraction(1, 20)
        a, b, c, d = approx_biquad(z, eps).coefficients
        with mpmath.workdps(50):
            root2 = mpmath.sqrt(2)
            value = mpmath.mpc(a + b * root2, c + d * root2)
            assert abs(value - mpmath.mpc(mpmath.mpf(1) / 3, mpmath.mpf(5) / 7)) < 0.05

    def test_sqrt2_convergent(self):
        result = approx_biquad(gaussian(0, Fraction(99, 70)), Fraction(1, 100))
        assert result.coefficients == (0, 0, 0, 1)
        assert result.distance2_upper < Fraction(1, 10**4)

    @pytest.mark.parametrize(
        "z",
        [
            gaussian(Fraction(7, 2)),
            gaussian(Fraction(1, 3), Fraction(5, 7)),
            gaussian(-2, Fraction(9, 4)),
        ],
    )
    def test_halving_eps_never_shrinks_coefficients(self, z):
        sizes = []
        for eps in (Fraction(1, 4), Fraction(1, 8), Fraction(1, 16), Fraction(1, 32)):
            result = approx_biquad(z, eps)
            assert result.distance2_upper < eps * eps
            _, b, _, d = result.coefficients
            sizes.append((abs(b), abs(d)))
        for (b1, d1), (b2, d2) in zip(sizes, sizes[1:]):
            assert b2 >= b1 and d2 >= d1

    @settings(max_examples=100, deadline=None)
    @given(
        st.fractions(min_value=-5, max_value=5, max_denominator=12),
        st.fractions(min_value=-5, max_value=5, max_denominator=12),
        st.sampled_from([Fraction(1, 10), Fraction(1, 100)]),
    )
    def test_randomized_targets(self, x, y, eps):
        result = approx_biquad(gaussian(x, y), eps)
        assert result.distance2_upper < eps * eps
        a, b, c, d = result.coefficients
        with mpmath.workdps(50):
            root2 = mpmath.sqrt(2)
            value = mpmath.mpc(a + b * root2, c + d * root2)
            target = mpmath.mpc(
                mpmath.mpf(x.numerator) / x.denominator,
                mpmath.mpf(y.numerator) / y.denominator,
            )
            assert abs(value - target) < float(eps)

    def test_rejects_zero_eps(self):
        with pytest.raises(InvalidParams):
            approx_biquad(gaussian(1), 0)
