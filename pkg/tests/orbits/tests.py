import itertools
import math

import numpy as np
import pytest

from iwasawa.core.exceptions import InvalidElement, NotInPrincipalOrbit, ZeroVector
from iwasawa.groups import SkewHermitian, TriangularS, conj_action, s_multiply
from iwasawa.groups.matrices import frob_norm, skew_defect
from iwasawa.groups.sampling import random_s, random_sign_vector
from iwasawa.orbits import (
    Degenerate,
    SignVector,
    action_jacobian,
    classify_orbit,
    coordinates,
    factor_orbit_point,
    factor_residual,
    from_coordinates,
    orbit_point,
    polar_decompose,
    sample_directions,
    skew_basis,
    sphere_mass,
)
from iwasawa.orbits.sphere import SphereDirection


class SkewBasisTests:
    @pytest.mark.parametrize("p", [1, 2, 3, 4])
    def test_basis_is_orthonormal(self, p):
        basis = skew_basis(p)
        assert len(basis) == p * p
        assert np.allclose(basis.gram(), np.eye(p * p))

    def test_basis_is_skew(self):
        assert np.all(skew_defect(skew_basis(3).elements) < 1e-15)

    def test_coordinates_round_trip(self, rng):
        basis = skew_basis(3)
        x = rng.standard_normal((5, 9))
        assert np.allclose(coordinates(from_coordinates(x, basis), basis), x)

    def test_from_coordinates_checks_length(self):
        with pytest.raises(ValueError):
            from_coordinates(np.zeros(3), skew_basis(2))

    def test_invalid_order(self):
        with pytest.raises(ValueError):
            skew_basis(0)


class SphereTests:
    def test_sphere_mass(self):
        assert sphere_mass(1) == 2.0
        assert sphere_mass(2) == pytest.approx(2 * math.pi**2)
        # unit 8-sphere of R^9
        assert sphere_mass(3) == pytest.approx(2 * math.pi**4.5 / math.gamma(4.5))

    @pytest.mark.parametrize("p", [1, 2, 3])
    def test_directions_are_unit_and_skew(self, p, rng):
        directions = sample_directions(p, 100, rng)
        assert directions.shape == (100, p, p)
        assert np.allclose(frob_norm(directions), 1.0)
        assert np.all(skew_defect(directions) < 1e-14)

    def test_p1_directions_are_two_points(self, rng):
        directions = sample_directions(1, 50, rng)[:, 0, 0]
        assert set(np.round(directions.imag).astype(int)) <= {-1, 1}

    def test_polar_decompose(self):
        r, omega = polar_decompose(SkewHermitian(np.array([[3j, 0], [0, 4j]])))
        assert r == pytest.approx(5.0)
        assert np.allclose(omega.mat, np.array([[0.6j, 0], [0, 0.8j]]))

    def test_zero_has_no_direction(self):
        with pytest.raises(ZeroVector):
            polar_decompose(SkewHermitian.zero(2))

    def test_direction_must_be_unit(self):
        with pytest.raises(InvalidElement):
            SphereDirection(SkewHermitian(np.array([[2j]])))


class ClassifyTests:
    @pytest.mark.parametrize("p", [1, 2, 3, 4])
    def test_classify_round_trip(self, p, rng):
        for eps in itertools.product((1, -1), repeat=p):
            for _ in range(50):
                m = orbit_point(random_s(p, rng), eps)
                assert classify_orbit(m) == SignVector(eps)

    @pytest.mark.parametrize("p", [1, 2, 3, 4])
    def test_label_is_invariant_under_the_action(self, p, rng):
        for _ in range(50):
            eps = random_sign_vector(p, rng)
            m = orbit_point(random_s(p, rng), eps)
            moved = conj_action(random_s(p, rng), m)
            assert classify_orbit(moved) == classify_orbit(m) == SignVector(eps)

    def test_principal_orbit(self):
        m = orbit_point(TriangularS.identity(2), SignVector.principal(2))
        label = classify_orbit(m)
        assert label.is_principal
        assert str(label) == "(+,+)"

    def test_sign_vector_str(self):
        assert str(SignVector((1, -1, 1))) == "(+,-,+)"

    def test_invalid_sign_vector(self):
        with pytest.raises(InvalidElement):
            SignVector((1, 0))
        with pytest.raises(InvalidElement):
            SignVector(())

    def test_zero_is_degenerate(self):
        assert classify_orbit(SkewHermitian.zero(3)) == Degenerate(1)

    def test_degenerate_minor_index(self):
        assert classify_orbit(SkewHermitian(np.diag([1j, 0]))) == Degenerate(1)
        assert classify_orbit(SkewHermitian(np.diag([0, 1j]))) == Degenerate(2)


class FactorTests:
    @pytest.mark.parametrize("p", [1, 2, 3, 4])
    def test_factor_inverts_orbit_point(self, p, rng):
        for _ in range(50):
            s = random_s(p, rng)
            m = orbit_point(s, SignVector.principal(p))
            factored = factor_orbit_point(m)
            assert factor_residual(factored, m) < 1e-10
            assert np.allclose(factored.mat, s.mat)

    @pytest.mark.parametrize("p", [1, 2, 3, 4])
    def test_factor_is_equivariant(self, p, rng):
        for _ in range(50):
            m = orbit_point(random_s(p, rng), SignVector.principal(p))
            s0 = random_s(p, rng)
            moved = factor_orbit_point(conj_action(s0, m))
            expected = s_multiply(factor_orbit_point(m), s0)
            residual = frob_norm(moved.mat - expected.mat) / frob_norm(expected.mat)
            assert residual < 1e-9

    @pytest.mark.parametrize("p", [1, 2, 3])
    def test_jacobian_is_multiplicative(self, p, rng):
        for _ in range(20):
            s1, s2 = random_s(p, rng), random_s(p, rng)
            product = action_jacobian(s_multiply(s1, s2))
            expected = action_jacobian(s1) * action_jacobian(s2)
            assert abs(product - expected) / expected < 1e-8

    def test_outside_principal_orbit(self, rng):
        m = orbit_point(random_s(2, rng), (1, -1))
        with pytest.raises(NotInPrincipalOrbit):
            factor_orbit_point(m)
