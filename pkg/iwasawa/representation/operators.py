# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2026, iwasawa contributors

"""
The operators of the representation of P on functions over N*:

    T(n) f(m)     = exp(i Tr(nm)) f(m)
    T_a(s0) f(m)  = a(s0* m s0) / a(m) f(s0* m s0)
    T((s, n))     = T_a(s) T(n)

Both act fiberwise, so they preserve the principal orbit and every other
open S-orbit.
"""
import numpy as np

from iwasawa.groups.elements import GroupElementP, SkewHermitian, TriangularS
from iwasawa.groups.matrices import asmatrix, congruence, pairing
from iwasawa.representation.functions import OrbitFunction
from iwasawa.representation.multiplier import Multiplier


def apply_t_n(n: SkewHermitian, f: OrbitFunction) -> OrbitFunction:
    f.expect_dim(n.dim)
    n_mat, evaluator = n.mat, f.evaluator

    def phase(m):
        return np.exp(1j * pairing(n_mat, m)) * evaluator(m)

    return f.derive(phase, "T(n)")


def apply_t_s(s0: TriangularS, a: Multiplier, f: OrbitFunction) -> OrbitFunction:
    f.expect_dim(s0.dim)
    s_mat, evaluator = s0.mat, f.evaluator

    def moved(m):
        return a.ratio(s_mat, m) * evaluator(congruence(s_mat, m))

    # |s* w s| >= sigma_min(s)^2 on the unit sphere
    sigma_min = np.linalg.svd(s_mat, compute_uv=False)[-1]
    return f.derive(
        moved, "T_a(s0; q={!r})".format(a.q), decay=f.decay * sigma_min**2
    )


def apply_group(g: GroupElementP, a: Multiplier, f: OrbitFunction) -> OrbitFunction:
    """T((s, n)) f = T_a(s) T(n) f, the order in which T is a homomorphism"""
    return apply_t_s(g.s, a, apply_t_n(g.n, f))


def homomorphism_residual(
    g1: GroupElementP,
    g2: GroupElementP,
    a: Multiplier,
    f: OrbitFunction,
    probes: np.ndarray,
) -> float:
    """
    max over the probe points of |T(g1) T(g2) f(m) - T(g1 g2) f(m)|, relative
    to 1 + |T(g1 g2) f(m)|
    """
    probes = asmatrix(probes)
    composed = apply_group(g1, a, apply_group(g2, a, f))(probes)
    direct = apply_group(g1 @ g2, a, f)(probes)
    return float(np.max(np.abs(composed - direct) / (1.0 + np.abs(direct))))
