# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2026, iwasawa contributors

"""
The open S-orbits of N* and the triangular factorization of the principal
orbit.

S acts on N* by m -> s* m s. The orbits of maximal dimension are the 2^p
sets N*_eps = {i s* diag(eps) s}. The principal orbit N*_0 is the one with
eps = (+1, ..., +1), and s -> i s* s is a bijection from S onto it.
"""
from __future__ import annotations

import logging

from dataclasses import dataclass
from typing import Any, Optional, Sequence, Tuple, Union

import numpy as np

from iwasawa.conf import settings
from iwasawa.core.exceptions import InvalidElement, NotInPrincipalOrbit
from iwasawa.groups.elements import SkewHermitian, TriangularS
from iwasawa.groups.matrices import asmatrix, congruence, dagger, frob_norm
from iwasawa.orbits.basis import coordinates, skew_basis

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SignVector:
    """Label eps of the orbit N*_eps"""

    eps: Tuple[int, ...]

    def __post_init__(self) -> None:
        eps = tuple(int(e) for e in self.eps)
        if not eps or any(e not in (1, -1) for e in eps):
            raise InvalidElement(
                "A sign vector holds p >= 1 entries equal to +1 or -1, "
                "got {}".format(self.eps)
            )
        object.__setattr__(self, "eps", eps)

    @classmethod
    def principal(cls, p: int) -> SignVector:
        return cls((1,) * p)

    @property
    def dim(self) -> int:
        return len(self.eps)

    @property
    def is_principal(self) -> bool:
        return all(e == 1 for e in self.eps)

    def __str__(self) -> str:
        return "({})".format(",".join("+" if e > 0 else "-" for e in self.eps))


@dataclass(frozen=True)
class Degenerate:
    """m lies on a lower dimensional orbit: the k-th trailing minor vanishes"""

    minor_index: int

    def __str__(self) -> str:
        return "degenerate"


def trailing_minors(h: np.ndarray) -> np.ndarray:
    """det of the bottom-right k x k blocks of h, k = 1..p"""
    p = h.shape[-1]
    return np.array([np.linalg.det(h[p - k :, p - k :]).real for k in range(1, p + 1)])


def classify_orbit(
    m: SkewHermitian, tol: Optional[float] = None
) -> Union[SignVector, Degenerate]:
    """
    Label the orbit of m from the signs of the ratios of consecutive trailing
    principal minors of the Hermitian matrix H = -i m. Congruence by a lower
    triangular s acts on each trailing block separately, so these signs are
    S-invariant.
    """
    tol = settings.DEGENERACY_TOLERANCE if tol is None else tol
    h = -1j * asmatrix(m)
    scale = frob_norm(h)
    if scale == 0.0:
        return Degenerate(1)
    minors = trailing_minors(h)
    for k, minor in enumerate(minors, start=1):
        if abs(minor) < tol * scale**k:
            return Degenerate(k)
    p = h.shape[-1]
    eps = [0] * p
    previous = 1.0
    for k, minor in enumerate(minors, start=1):
        eps[p - k] = 1 if minor / previous > 0 else -1
        previous = minor
    return SignVector(tuple(eps))


def orbit_point(s: TriangularS, eps: Union[SignVector, Sequence[int]]) -> SkewHermitian:
    """i s* diag(eps) s, the point of N*_eps parametrized by s"""
    if not isinstance(eps, SignVector):
        eps = SignVector(tuple(eps))
    signs = np.diag(np.asarray(eps.eps, dtype=complex))
    return SkewHermitian(1j * congruence(s, signs))


def factor_orbit_point(m: SkewHermitian) -> TriangularS:
    """
    The unique s in S with i s* s = m.

    With J the index reversal, J H J = R* R is a Cholesky factorization with
    R upper triangular, and s = J R J.
    """
    h = -1j * asmatrix(m)
    h = (h + dagger(h)) / 2
    try:
        lower = np.linalg.cholesky(h[::-1, ::-1])
    except np.linalg.LinAlgError as e:
        raise NotInPrincipalOrbit(
            "-i m is not positive definite, m is outside the principal orbit"
        ) from e
    s = TriangularS.from_matrix(dagger(lower)[::-1, ::-1], normalize=True)
    residual = factor_residual(s, m)
    if residual > settings.FACTOR_RESIDUAL_TOLERANCE * max(1.0, frob_norm(m)):
        logger.warning(
            "Ill-conditioned orbit point: ||i s*s - m|| = %.3e", residual
        )
    return s


def factor_residual(s: TriangularS, m: Any) -> float:
    """||i s*s - m||"""
    return frob_norm(1j * congruence(s, np.eye(s.dim)) - asmatrix(m))


def action_jacobian(s: TriangularS) -> float:
    """
    |det| of the real-linear map m -> s* m s written in the skew basis. It
    equals theta(s)^(2p).
    """
    basis = skew_basis(s.dim)
    images = congruence(s, basis.elements)
    matrix = coordinates(images, basis)
    return float(abs(np.linalg.det(matrix)))
