from iwasawa.groups.elements import (
    GroupElementP,
    SkewHermitian,
    TriangularS,
    conj_action,
    p_inverse,
    p_product,
    s_multiply,
    theta,
)
from iwasawa.groups.matrices import frob_norm, pairing

__all__ = [
    "GroupElementP",
    "SkewHermitian",
    "TriangularS",
    "conj_action",
    "frob_norm",
    "p_inverse",
    "p_product",
    "pairing",
    "s_multiply",
    "theta",
]
