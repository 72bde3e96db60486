import math

import numpy as np
import pytest

from iwasawa.core.exceptions import DimensionMismatch
from iwasawa.groups import GroupElementP, SkewHermitian, TriangularS
from iwasawa.groups.sampling import probe_points, random_n, random_p, random_s
from iwasawa.orbits import orbit_point, sample_directions
from iwasawa.representation import (
    Multiplier,
    OrbitFunction,
    apply_group,
    apply_t_n,
    apply_t_s,
    coefficient_b,
    coefficient_c,
    coefficient_relation,
    gaussian,
    homomorphism_residual,
    norm_squared,
    operator_norm_estimate,
    unitarity_report,
    zero,
)
from iwasawa.test.utils import override_settings


class OrbitFunctionTests:
    def test_single_matrix_gives_a_scalar(self):
        f = gaussian(2)
        value = f(np.array([[1j, 0], [0, 0]]))
        assert isinstance(value, complex)
        assert value == pytest.approx(math.exp(-0.5))

    def test_stack(self, rng):
        values = gaussian(2)(probe_points(2, 7, rng))
        assert values.shape == (7,)

    def test_wrong_dimension(self):
        with pytest.raises(DimensionMismatch):
            gaussian(2)(np.zeros((3, 3), dtype=complex))
        with pytest.raises(DimensionMismatch):
            apply_t_n(SkewHermitian.zero(3), gaussian(2))
        with pytest.raises(DimensionMismatch):
            gaussian(2) - gaussian(3)

    def test_arithmetic(self, rng):
        f = gaussian(2)
        points = probe_points(2, 5, rng)
        assert np.allclose((f - f)(points), 0.0)
        assert np.allclose((f + zero(2))(points), f(points))

    def test_provenance(self):
        f = apply_t_n(SkewHermitian.zero(1), gaussian(1, width=2.0))
        assert f.describe() == "T(n) . gaussian(width=2.0)"

    def test_restriction_to_principal_orbit(self, rng):
        f = gaussian(2, width=10.0).restricted()
        inside = probe_points(2, 5, rng)
        assert np.all(np.abs(f(inside)) > 0)
        outside = orbit_point(random_s(2, rng), (1, -1))
        assert f(outside) == 0

    def test_decay_is_propagated(self):
        f = apply_t_s(TriangularS.diag(0.5, 1.0), Multiplier(2.0), gaussian(2))
        assert f.decay == pytest.approx(0.25)
        assert (f - gaussian(2)).decay == pytest.approx(0.25)


class OperatorTests:
    def test_t_n_is_a_phase(self, rng):
        n = random_n(2, rng)
        points = probe_points(2, 10, rng)
        f = gaussian(2)
        assert np.allclose(np.abs(apply_t_n(n, f)(points)), np.abs(f(points)))

    def test_t_s_p1(self):
        """T_a(s) f(m) = s f(s^2 m) for p = 1 and q = 1/2"""
        f = gaussian(1)
        moved = apply_t_s(TriangularS.diag(2.0), Multiplier(0.5), f)
        m = np.array([[0.5j]])
        assert moved(m) == pytest.approx(2.0 * f(np.array([[2j]])))

    def test_identity_acts_trivially(self, rng):
        f = gaussian(3)
        points = probe_points(3, 10, rng)
        g = GroupElementP.identity(3)
        assert np.allclose(apply_group(g, Multiplier(4.5), f)(points), f(points))

    @pytest.mark.parametrize("p", [1, 2, 3])
    def test_homomorphism(self, p, rng):
        a = Multiplier.distinguished(p)
        f = gaussian(p)
        probes = probe_points(p, 50, rng)
        for _ in range(50):
            g1, g2 = random_p(p, rng), random_p(p, rng)
            assert homomorphism_residual(g1, g2, a, f, probes) < 1e-10

    def test_homomorphism_for_other_multipliers(self, rng):
        f = gaussian(2)
        probes = probe_points(2, 20, rng)
        for q in (0.0, 1.0, 3.5):
            g1, g2 = random_p(2, rng), random_p(2, rng)
            assert homomorphism_residual(g1, g2, Multiplier(q), f, probes) < 1e-10


class MultiplierTests:
    def test_value(self):
        assert Multiplier(2.0)(np.array([[3j, 0], [0, 4j]])) == pytest.approx(25.0)

    def test_ratio_is_homogeneous(self, rng):
        s = random_s(2, rng)
        m = probe_points(2, 1, rng)[0]
        a = Multiplier(1.7)
        assert a.ratio(s, 3.0 * m) == pytest.approx(a.ratio(s, m))

    def test_distinguished(self):
        assert Multiplier.distinguished(3).q == 4.5
        assert Multiplier(0.5).is_distinguished(1)
        assert not Multiplier(1.0).is_distinguished(2)


class NormTests:
    def test_gaussian_p1(self, small_spec):
        """int_R exp(-x^2) dx"""
        estimate = norm_squared(gaussian(1), small_spec)
        assert estimate.value == pytest.approx(math.sqrt(math.pi), rel=1e-8)

    def test_gaussian_p2(self, small_spec):
        """int_R^4 exp(-|x|^2) dx = pi^2, the same along every direction"""
        estimate = norm_squared(gaussian(2), small_spec)
        assert estimate.value == pytest.approx(math.pi**2, rel=1e-7)
        assert estimate.std_error < 1e-7

    def test_p1_is_unitary(self, small_spec):
        f = gaussian(1)
        moved = apply_t_s(TriangularS.diag(3.0), Multiplier(0.5), f)
        assert norm_squared(moved, small_spec).value == pytest.approx(
            math.sqrt(math.pi), rel=1e-7
        )

    def test_norm_through_coefficient_c(self, small_spec):
        """||T_a(s0) f||^2 = int |c(m, s0) f(m)|^2 dm"""
        s0 = TriangularS.diag(1.0, 2.0)
        a = Multiplier.distinguished(2)
        f = gaussian(2)
        moved = norm_squared(apply_t_s(s0, a, f), small_spec)
        weighted = norm_squared(
            f.derive(lambda m: coefficient_c(m, s0, a) * f.evaluator(m), "c f"),
            small_spec,
        )
        assert moved.agrees_with(weighted, sigmas=4)


class CoefficientTests:
    @pytest.mark.parametrize("p", [1, 2, 3])
    def test_substitution_relation(self, p, rng):
        s0 = random_s(p, rng)
        relation = coefficient_relation(
            s0, Multiplier.distinguished(p), sample_directions(p, 100, rng)
        )
        assert relation.relation_residual < 1e-12

    def test_b_and_c_differ_for_p2(self, rng):
        relation = coefficient_relation(
            TriangularS.diag(1.0, 2.0),
            Multiplier.distinguished(2),
            sample_directions(2, 100, rng),
        )
        assert relation.max_difference > 1e-3

    def test_p1_coefficients_are_one(self, rng):
        s0 = TriangularS.diag(2.5)
        directions = sample_directions(1, 10, rng)
        a = Multiplier(0.5)
        assert np.allclose(coefficient_b(directions, s0, a), 1.0)
        assert np.allclose(coefficient_c(directions, s0, a), 1.0)


class UnitarityTests:
    def test_p1_unitary(self, small_spec):
        report = unitarity_report(TriangularS.diag(2.0), Multiplier(0.5), small_spec)
        assert report.is_unitary and report.is_bounded

    def test_scalar_s_is_unitary(self, small_spec):
        report = unitarity_report(
            TriangularS.diag(2.0, 2.0), Multiplier.distinguished(2), small_spec
        )
        assert report.is_unitary

    def test_p2_bounded_nonunitary(self, small_spec):
        s0 = TriangularS.diag(1.0, 2.0)
        report = unitarity_report(s0, Multiplier.distinguished(2), small_spec)
        assert not report.is_unitary
        assert report.is_bounded
        assert report.c_min < 1.0 < report.c_max
        assert report.samples == small_spec.sphere_samples

    def test_bounded_below_the_limit(self, small_spec):
        s0 = TriangularS.diag(1.0, 2.0)
        a = Multiplier.distinguished(2)
        c_max = unitarity_report(s0, a, small_spec).c_max
        with override_settings(BOUNDEDNESS_LIMIT=c_max):
            assert not unitarity_report(s0, a, small_spec).is_bounded
        with override_settings(BOUNDEDNESS_LIMIT=2 * c_max):
            assert unitarity_report(s0, a, small_spec).is_bounded

    def test_operator_norm_grows_with_samples(self, small_spec):
        s0 = TriangularS.diag(1.0, 3.0)
        a = Multiplier.distinguished(2)
        small = operator_norm_estimate(s0, a, small_spec.with_samples(100))
        large = operator_norm_estimate(s0, a, small_spec.with_samples(500))
        assert large >= small
        assert math.isfinite(large)


class OrbitFunctionTypeTests:
    def test_orbit_function_fields(self):
        f = OrbitFunction(1, lambda m: np.ones(m.shape[:-2], dtype=complex), ("1",))
        assert f.decay == math.inf
        assert f(np.array([[1j]])) == 1
