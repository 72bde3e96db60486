# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2026, iwasawa contributors

"""
The groups S, N and P = S x N.

S is the group of lower triangular complex matrices with positive diagonal,
N the additive group of skew-Hermitian matrices, and P the pairs (s, n) with

    (s1, n1) . (s2, n2) = (s1 s2, s2^-1 n1 s2*^-1 + n2).

Elements are immutable: the wrapped arrays are read-only copies.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any

import numpy as np

from scipy.linalg import solve_triangular

from iwasawa.conf import settings
from iwasawa.core.exceptions import DimensionMismatch, InvalidElement
from iwasawa.groups.matrices import (
    asmatrix,
    check_dims,
    congruence,
    dagger,
    diagonal_product,
    skew_defect,
)

__all__ = [
    "TriangularS",
    "SkewHermitian",
    "GroupElementP",
    "s_multiply",
    "p_product",
    "p_inverse",
    "theta",
    "conj_action",
]


def _frozen_square(mat: Any, kind: str) -> np.ndarray:
    mat = np.array(asmatrix(mat), dtype=complex)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1] or mat.shape[0] < 1:
        raise InvalidElement(
            "{} expects a square p x p matrix with p >= 1, got shape {}".format(
                kind, mat.shape
            )
        )
    mat.setflags(write=False)
    return mat


@dataclass(frozen=True, eq=False)
class TriangularS:
    """Element of S: lower triangular, real positive diagonal."""

    mat: np.ndarray

    def __post_init__(self) -> None:
        mat = _frozen_square(self.mat, "TriangularS")
        if np.any(np.triu(mat, 1) != 0):
            raise InvalidElement("TriangularS must be lower triangular")
        diag = np.diagonal(mat)
        if np.any(diag.imag != 0) or np.any(diag.real <= 0):
            raise InvalidElement(
                "TriangularS must have a real positive diagonal, got {}".format(diag)
            )
        object.__setattr__(self, "mat", mat)

    @classmethod
    def from_matrix(cls, mat: Any, normalize: bool = False) -> TriangularS:
        """
        Build an element of S. With normalize, roundoff above the diagonal
        and in the imaginary part of the diagonal is dropped first.
        """
        mat = np.array(asmatrix(mat), dtype=complex)
        if normalize:
            mat = np.tril(mat)
            idx = np.diag_indices_from(mat)
            mat[idx] = mat[idx].real
        return cls(mat)

    @classmethod
    def identity(cls, p: int) -> TriangularS:
        return cls(np.eye(p, dtype=complex))

    @classmethod
    def diag(cls, *entries: float) -> TriangularS:
        return cls(np.diag(np.asarray(entries, dtype=complex)))

    @property
    def dim(self) -> int:
        return self.mat.shape[0]

    def inv(self) -> TriangularS:
        inverse = solve_triangular(self.mat, np.eye(self.dim), lower=True)
        return TriangularS.from_matrix(inverse, normalize=True)

    def solve(self, rhs: np.ndarray) -> np.ndarray:
        """s^-1 rhs, broadcasting over a stack of right-hand sides"""
        rhs = asmatrix(rhs)
        if rhs.ndim == 2:
            return solve_triangular(self.mat, rhs, lower=True)
        # solve_triangular does not broadcast, fold the stack into columns
        p = self.dim
        folded = np.moveaxis(rhs, -2, 0).reshape(p, -1)
        solved = solve_triangular(self.mat, folded, lower=True)
        return np.moveaxis(solved.reshape((p,) + rhs.shape[:-2] + (p,)), 0, -2)

    def __matmul__(self, other: TriangularS) -> TriangularS:
        return s_multiply(self, other)

    def __repr__(self) -> str:
        return "TriangularS({})".format(np.array2string(self.mat, precision=6))


@dataclass(frozen=True, eq=False)
class SkewHermitian:
    """Element of N (or of the character group N*): m* = -m."""

    mat: np.ndarray

    def __post_init__(self) -> None:
        mat = _frozen_square(self.mat, "SkewHermitian")
        defect = float(skew_defect(mat))
        if defect > settings.SKEW_TOLERANCE:
            raise InvalidElement(
                "Matrix is not skew-Hermitian: ||m + m^H|| / max(1, ||m||) "
                "= {:.3e}".format(defect)
            )
        object.__setattr__(self, "mat", mat)

    @classmethod
    def zero(cls, p: int) -> SkewHermitian:
        return cls(np.zeros((p, p), dtype=complex))

    @classmethod
    def from_hermitian(cls, h: Any) -> SkewHermitian:
        """i h for Hermitian h"""
        h = asmatrix(h)
        return cls(1j * (h + dagger(h)) / 2)

    @property
    def dim(self) -> int:
        return self.mat.shape[0]

    def __add__(self, other: SkewHermitian) -> SkewHermitian:
        check_dims(self.mat, other.mat)
        return SkewHermitian(self.mat + other.mat)

    def __neg__(self) -> SkewHermitian:
        return SkewHermitian(-self.mat)

    def __mul__(self, scalar: float) -> SkewHermitian:
        return SkewHermitian(float(scalar) * self.mat)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return "SkewHermitian({})".format(np.array2string(self.mat, precision=6))


@dataclass(frozen=True, eq=False)
class GroupElementP:
    """Element (s, n) of the semidirect product P."""

    s: TriangularS
    n: SkewHermitian

    def __post_init__(self) -> None:
        if self.s.dim != self.n.dim:
            raise DimensionMismatch(
                "s is {0}x{0} but n is {1}x{1}".format(self.s.dim, self.n.dim)
            )

    @classmethod
    def identity(cls, p: int) -> GroupElementP:
        return cls(TriangularS.identity(p), SkewHermitian.zero(p))

    @classmethod
    def from_s(cls, s: TriangularS) -> GroupElementP:
        return cls(s, SkewHermitian.zero(s.dim))

    @classmethod
    def from_n(cls, n: SkewHermitian) -> GroupElementP:
        return cls(TriangularS.identity(n.dim), n)

    @property
    def dim(self) -> int:
        return self.s.dim

    def inv(self) -> GroupElementP:
        return p_inverse(self)

    def __matmul__(self, other: GroupElementP) -> GroupElementP:
        return p_product(self, other)

    def __repr__(self) -> str:
        return "GroupElementP(s={!r}, n={!r})".format(self.s, self.n)


def s_multiply(s1: TriangularS, s2: TriangularS) -> TriangularS:
    """Matrix product in S"""
    check_dims(s1.mat, s2.mat)
    # The product of two lower triangular matrices is lower triangular with
    # diagonal s1_ii s2_ii; normalize only clears signed zeros.
    return TriangularS.from_matrix(s1.mat @ s2.mat, normalize=True)


def p_product(g1: GroupElementP, g2: GroupElementP) -> GroupElementP:
    """(s1 s2, s2^-1 n1 s2*^-1 + n2)"""
    if g1.dim != g2.dim:
        raise DimensionMismatch(
            "Cannot multiply elements of P with p={} and p={}".format(g1.dim, g2.dim)
        )
    s2 = g2.s
    left = s2.solve(g1.n.mat)
    # X s2*^-1 = (s2^-1 X*)*
    moved = dagger(s2.solve(dagger(left)))
    return GroupElementP(s_multiply(g1.s, s2), SkewHermitian(moved + g2.n.mat))


def p_inverse(g: GroupElementP) -> GroupElementP:
    """(s^-1, -s n s*)"""
    s = g.s.mat
    return GroupElementP(g.s.inv(), SkewHermitian(-(s @ g.n.mat @ dagger(s))))


def theta(s: TriangularS) -> float:
    """theta(s) = s_11 ... s_pp, a homomorphism S -> R+"""
    return float(diagonal_product(s))


def conj_action(s: TriangularS, m: SkewHermitian) -> SkewHermitian:
    """The action m -> s* m s of S on N*"""
    return SkewHermitian(congruence(s, m))
