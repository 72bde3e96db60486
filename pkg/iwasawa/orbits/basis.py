# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2026, iwasawa contributors

"""
Orthonormal real basis of the p^2-dimensional space of skew-Hermitian
matrices, under the inner product Re Tr(x y*).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Optional

import numpy as np

from iwasawa.groups.matrices import asmatrix, check_dims


@dataclass(frozen=True, eq=False)
class SkewBasis:
    dim: int
    # shape (p^2, p, p)
    elements: np.ndarray

    def __len__(self) -> int:
        return self.elements.shape[0]

    def gram(self) -> np.ndarray:
        """Re Tr(e_a e_b*) for every pair of basis elements"""
        e = self.elements
        return np.einsum("aij,bij->ab", e, np.conj(e)).real


@lru_cache(maxsize=None)
def skew_basis(p: int) -> SkewBasis:
    """
    The p^2 matrices i E_kk, then (E_jk - E_kj)/sqrt(2) and
    i (E_jk + E_kj)/sqrt(2) for j < k.
    """
    if p < 1:
        raise ValueError("skew_basis needs p >= 1, got {}".format(p))
    elements = []
    for k in range(p):
        e = np.zeros((p, p), dtype=complex)
        e[k, k] = 1j
        elements.append(e)
    root = np.sqrt(0.5)
    for j in range(p):
        for k in range(j + 1, p):
            e = np.zeros((p, p), dtype=complex)
            e[j, k], e[k, j] = root, -root
            elements.append(e)
    for j in range(p):
        for k in range(j + 1, p):
            e = np.zeros((p, p), dtype=complex)
            e[j, k] = e[k, j] = 1j * root
            elements.append(e)
    stacked = np.stack(elements)
    stacked.setflags(write=False)
    return SkewBasis(p, stacked)


def coordinates(m: Any, basis: Optional[SkewBasis] = None) -> np.ndarray:
    """Real coordinates Re Tr(m e_a*) of m, or of every matrix in a stack"""
    m = asmatrix(m)
    basis = basis or skew_basis(m.shape[-1])
    check_dims(m, basis.elements[0])
    return np.einsum("...ij,aij->...a", m, np.conj(basis.elements)).real


def from_coordinates(x: Any, basis: SkewBasis) -> np.ndarray:
    """The skew-Hermitian matrix sum_a x_a e_a, broadcasting over x[..., :]"""
    x = np.asarray(x, dtype=float)
    if x.shape[-1] != len(basis):
        raise ValueError(
            "Expected {} coordinates, got {}".format(len(basis), x.shape[-1])
        )
    return np.einsum("...a,aij->...ij", x, basis.elements)
