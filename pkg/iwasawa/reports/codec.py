# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2026, iwasawa contributors

"""
JSON encoding of matrices and group elements.

A complex scalar is [re, im], a matrix a row-major list of rows and an
element of P the object {"s": ..., "n": ...}. Floats are written with repr,
which round-trips exactly.
"""
from typing import Any, List

import numpy as np

from iwasawa.groups.elements import GroupElementP, SkewHermitian, TriangularS
from iwasawa.groups.matrices import asmatrix


def encode_matrix(m: Any) -> List[List[List[float]]]:
    return [[[float(z.real), float(z.imag)] for z in row] for row in asmatrix(m)]


def decode_matrix(data: Any) -> np.ndarray:
    array = np.asarray(data, dtype=float)
    if array.ndim != 3 or array.shape[-1] != 2:
        raise ValueError(
            "A matrix is a list of rows of [re, im] pairs, got shape {}".format(
                array.shape
            )
        )
    return array[..., 0] + 1j * array[..., 1]


def encode_element(g: GroupElementP) -> dict:
    return {"s": encode_matrix(g.s), "n": encode_matrix(g.n)}


def decode_element(data: dict) -> GroupElementP:
    return GroupElementP(
        TriangularS(decode_matrix(data["s"])), SkewHermitian(decode_matrix(data["n"]))
    )


def to_jsonable(obj: Any) -> Any:
    """`default` hook of json.dumps for the value types of iwasawa"""
    if isinstance(obj, GroupElementP):
        return encode_element(obj)
    if isinstance(obj, (TriangularS, SkewHermitian)):
        return encode_matrix(obj)
    if hasattr(obj, "as_dict"):
        return obj.as_dict()
    if isinstance(obj, np.ndarray):
        if np.iscomplexobj(obj):
            return encode_matrix(obj)
        return obj.tolist()
    if isinstance(obj, np.generic):
        return obj.item()
    raise TypeError(
        "Object of type {} is not JSON serializable".format(type(obj).__name__)
    )
