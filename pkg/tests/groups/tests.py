import numpy as np
import pytest

from iwasawa.core.exceptions import DimensionMismatch, ImaginaryResidue, InvalidElement
from iwasawa.groups import (
    GroupElementP,
    SkewHermitian,
    TriangularS,
    conj_action,
    frob_norm,
    p_inverse,
    p_product,
    pairing,
    s_multiply,
    theta,
)
from iwasawa.groups.checks import (
    associativity_residual,
    identity_residual,
    inverse_residual,
    pairing_invariance_residual,
    theta_residual,
)
from iwasawa.groups.sampling import probe_points, random_n, random_p, random_s
from iwasawa.orbits.classify import action_jacobian
from iwasawa.test.utils import override_settings


class ElementTests:
    def test_triangular_rejects_upper_entries(self):
        with pytest.raises(InvalidElement):
            TriangularS(np.array([[1, 1], [0, 1]]))

    def test_triangular_rejects_nonpositive_diagonal(self):
        with pytest.raises(InvalidElement):
            TriangularS(np.array([[1, 0], [0.5, -2]]))
        with pytest.raises(InvalidElement):
            TriangularS(np.array([[1j]]))

    def test_triangular_rejects_non_square(self):
        with pytest.raises(InvalidElement):
            TriangularS(np.ones((2, 3)))

    def test_skew_hermitian_rejects_hermitian(self):
        with pytest.raises(InvalidElement):
            SkewHermitian(np.eye(2))

    @override_settings(SKEW_TOLERANCE=1e-3)
    def test_skew_tolerance_is_a_setting(self):
        SkewHermitian(np.array([[1e-4 + 1j]]))

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            GroupElementP(TriangularS.identity(2), SkewHermitian.zero(3))
        with pytest.raises(DimensionMismatch):
            p_product(GroupElementP.identity(1), GroupElementP.identity(2))

    def test_elements_are_read_only(self):
        s = TriangularS.identity(2)
        with pytest.raises(ValueError):
            s.mat[0, 0] = 2.0


class GroupLawTests:
    def test_product_p1(self):
        """(2, i)(3, 2i) = (6, i/9 + 2i)"""
        g1 = GroupElementP(TriangularS.diag(2.0), SkewHermitian(np.array([[1j]])))
        g2 = GroupElementP(TriangularS.diag(3.0), SkewHermitian(np.array([[2j]])))
        g = p_product(g1, g2)
        assert g.s.mat[0, 0] == pytest.approx(6.0)
        assert g.n.mat[0, 0] == pytest.approx(1j / 9 + 2j)

    def test_inverse_formula(self, rng):
        g = random_p(3, rng)
        inverse = p_inverse(g)
        s = g.s.mat
        assert np.allclose(inverse.s.mat @ s, np.eye(3))
        assert np.allclose(inverse.n.mat, -(s @ g.n.mat @ s.conj().T))

    @pytest.mark.parametrize("p", [1, 2, 3, 4])
    def test_group_axioms(self, p, rng):
        worst = 0.0
        for _ in range(100):
            g1, g2, g3 = (random_p(p, rng) for _ in range(3))
            worst = max(
                worst,
                associativity_residual(g1, g2, g3),
                identity_residual(g1),
                inverse_residual(g1),
            )
        assert worst < 1e-12

    @pytest.mark.parametrize("p", [1, 2, 3, 4])
    def test_theta_is_multiplicative(self, p, rng):
        for _ in range(50):
            assert theta_residual(random_s(p, rng), random_s(p, rng)) < 1e-12

    def test_theta(self):
        assert theta(TriangularS.diag(2.0, 3.0, 0.5)) == pytest.approx(3.0)

    def test_s_product_stays_in_s(self, rng):
        product = s_multiply(random_s(3, rng), random_s(3, rng))
        assert np.all(np.triu(product.mat, 1) == 0)

    def test_matmul_operator(self, rng):
        g1, g2 = random_p(2, rng), random_p(2, rng)
        assert np.allclose((g1 @ g2).n.mat, p_product(g1, g2).n.mat)
        assert np.allclose((g1.s @ g2.s).mat, g1.s.mat @ g2.s.mat)


class ActionTests:
    @pytest.mark.parametrize("p", [1, 2, 3])
    def test_jacobian_is_theta_power(self, p, rng):
        for _ in range(50):
            s = random_s(p, rng)
            expected = theta(s) ** (2 * p)
            assert abs(action_jacobian(s) - expected) / expected < 1e-8

    def test_conj_action_composes(self, rng):
        s1, s2 = random_s(3, rng), random_s(3, rng)
        m = SkewHermitian(probe_points(3, 1, rng)[0])
        left = conj_action(s_multiply(s1, s2), m)
        right = conj_action(s2, conj_action(s1, m))
        assert np.allclose(left.mat, right.mat)


class PairingTests:
    def test_pairing_value(self):
        assert pairing(np.array([[2j]]), np.array([[3j]])) == pytest.approx(-6.0)

    def test_pairing_is_real_on_stacks(self, rng):
        n = random_n(3, rng)
        values = pairing(n, probe_points(3, 10, rng))
        assert values.shape == (10,)
        assert values.dtype == float

    def test_non_skew_operand_raises(self, rng):
        m = probe_points(2, 1, rng)[0]
        with pytest.raises(ImaginaryResidue):
            pairing(np.eye(2), m)

    @pytest.mark.parametrize("p", [1, 2, 3])
    def test_pairing_invariance(self, p, rng):
        for m in probe_points(p, 20, rng):
            n, s = random_n(p, rng), random_s(p, rng)
            assert pairing_invariance_residual(n, m, s) < 1e-12

    def test_frob_norm(self):
        assert frob_norm(np.array([[3j, 0], [0, 4j]])) == pytest.approx(5.0)
