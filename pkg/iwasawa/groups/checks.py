# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2026, iwasawa contributors

"""
Residuals of the group axioms of P and of the identities tying theta, the
action on N* and the pairing together. Each residual is relative, so one
tolerance serves every p and every sample size.
"""
from typing import Any

import numpy as np

from iwasawa.groups.elements import GroupElementP, TriangularS, s_multiply, theta
from iwasawa.groups.matrices import asmatrix, congruence, dagger, frob_norm, pairing


def element_distance(g1: GroupElementP, g2: GroupElementP) -> float:
    return frob_norm(g1.s.mat - g2.s.mat) + frob_norm(g1.n.mat - g2.n.mat)


def element_size(g: GroupElementP) -> float:
    return frob_norm(g.s) + frob_norm(g.n)


def _relative(g1: GroupElementP, g2: GroupElementP) -> float:
    return element_distance(g1, g2) / (1.0 + element_size(g1) + element_size(g2))


def associativity_residual(
    g1: GroupElementP, g2: GroupElementP, g3: GroupElementP
) -> float:
    return _relative((g1 @ g2) @ g3, g1 @ (g2 @ g3))


def identity_residual(g: GroupElementP) -> float:
    e = GroupElementP.identity(g.dim)
    return max(_relative(e @ g, g), _relative(g @ e, g))


def inverse_residual(g: GroupElementP) -> float:
    e = GroupElementP.identity(g.dim)
    # e is exact, so scale by the element being inverted
    inverse = g.inv()
    scale = 1.0 + element_size(g) + element_size(inverse)
    distance = max(element_distance(g @ inverse, e), element_distance(inverse @ g, e))
    return distance / scale


def theta_residual(s1: TriangularS, s2: TriangularS) -> float:
    """theta is multiplicative"""
    expected = theta(s1) * theta(s2)
    return abs(theta(s_multiply(s1, s2)) - expected) / expected


def pairing_invariance_residual(n: Any, m: Any, s: TriangularS) -> float:
    """
    <n, s* m s> = <s n s*, m>: the action on N* is the transpose of the
    action on N. Raises ImaginaryResidue when n or m is not skew-Hermitian.
    """
    n, m, s_mat = asmatrix(n), asmatrix(m), s.mat
    left = pairing(n, congruence(s, m))
    right = pairing(s_mat @ n @ dagger(s_mat), m)
    scale = 1.0 + frob_norm(s_mat) ** 2 * frob_norm(n) * frob_norm(m)
    return float(np.max(np.abs(np.asarray(left) - np.asarray(right)) / scale))
