# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2026, iwasawa contributors

"""
Array kernels shared by every module. All functions accept a single p x p
matrix or a stack of shape (..., p, p) and broadcast over leading axes.
"""
from __future__ import annotations

from typing import Any, Union

import numpy as np

from iwasawa.conf import settings
from iwasawa.core.exceptions import DimensionMismatch, ImaginaryResidue


def asmatrix(x: Any) -> np.ndarray:
    """Return the complex array behind a typed element or an array-like"""
    return np.asarray(getattr(x, "mat", x), dtype=complex)


def scalar_or_array(x: np.ndarray) -> Union[float, np.ndarray]:
    """Unwrap 0-d results so single matrices give plain floats"""
    return float(x) if np.ndim(x) == 0 else x


def dagger(a: np.ndarray) -> np.ndarray:
    """Conjugate transpose over the two trailing axes"""
    return np.conj(np.swapaxes(a, -1, -2))


def check_dims(*arrays: np.ndarray) -> int:
    """Return the common order p of the trailing axes or raise"""
    dims = {a.shape[-1] for a in arrays} | {a.shape[-2] for a in arrays}
    if len(dims) != 1:
        raise DimensionMismatch(
            "Operands have incompatible shapes: {}".format(
                ", ".join(str(a.shape) for a in arrays)
            )
        )
    return dims.pop()


def frob_norm(m: Any) -> Union[float, np.ndarray]:
    """|m| = sqrt(Tr(m m*))"""
    return scalar_or_array(np.linalg.norm(asmatrix(m), axis=(-2, -1)))


def skew_defect(m: Any) -> np.ndarray:
    """||m + m^H|| relative to max(1, ||m||)"""
    m = asmatrix(m)
    return frob_norm(m + dagger(m)) / np.maximum(1.0, frob_norm(m))


def trace_product(n: Any, m: Any) -> np.ndarray:
    """Tr(nm) without any reality check"""
    n, m = asmatrix(n), asmatrix(m)
    check_dims(n, m)
    return np.einsum("...ij,...ji->...", n, m)


def pairing(n: Any, m: Any) -> Union[float, np.ndarray]:
    """
    <n, m> = Tr(nm), real for skew-Hermitian n and m. The imaginary part is
    checked against IMAGINARY_RESIDUE_TOLERANCE * max(1, |n||m|) and then
    discarded.
    """
    trace = trace_product(n, m)
    scale = np.maximum(1.0, frob_norm(n) * frob_norm(m))
    residue = np.abs(trace.imag) / scale
    worst = float(np.max(residue)) if residue.size else 0.0
    if worst >= settings.IMAGINARY_RESIDUE_TOLERANCE:
        raise ImaginaryResidue(
            "Tr(nm) has relative imaginary part {:.3e}; the operands are not "
            "skew-Hermitian".format(worst)
        )
    return scalar_or_array(trace.real)


def congruence(s: Any, m: Any) -> np.ndarray:
    """m -> s* m s"""
    s, m = asmatrix(s), asmatrix(m)
    check_dims(s, m)
    return dagger(s) @ m @ s


def diagonal_product(s: Any) -> Union[float, np.ndarray]:
    """theta(s) = s_11 ... s_pp for lower triangular s with real diagonal"""
    diagonal = np.diagonal(asmatrix(s), axis1=-2, axis2=-1).real
    return scalar_or_array(np.prod(diagonal, axis=-1))
