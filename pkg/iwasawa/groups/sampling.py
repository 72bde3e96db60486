# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2026, iwasawa contributors

"""
Random elements of S, N and P.

The diagonal of s is exp(U[-1, 1]), strictly lower entries are standard
complex Gaussians and n is i times a Gaussian Hermitian matrix.
"""
import numpy as np

from iwasawa.groups.elements import GroupElementP, SkewHermitian, TriangularS
from iwasawa.groups.matrices import congruence, dagger


def complex_gaussian(rng: np.random.Generator, shape: tuple) -> np.ndarray:
    """Standard complex normal entries, E|z|^2 = 1"""
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2)


def random_s_matrices(p: int, count: int, rng: np.random.Generator) -> np.ndarray:
    """A (count, p, p) stack of elements of S"""
    lower = np.tril(complex_gaussian(rng, (count, p, p)), -1)
    diagonal = np.exp(rng.uniform(-1.0, 1.0, size=(count, p)))
    idx = np.arange(p)
    lower[:, idx, idx] = diagonal
    return lower


def random_s(p: int, rng: np.random.Generator) -> TriangularS:
    return TriangularS(random_s_matrices(p, 1, rng)[0])


def random_n(p: int, rng: np.random.Generator) -> SkewHermitian:
    a = complex_gaussian(rng, (p, p))
    return SkewHermitian.from_hermitian(a + dagger(a))


def random_p(p: int, rng: np.random.Generator) -> GroupElementP:
    return GroupElementP(random_s(p, rng), random_n(p, rng))


def random_sign_vector(p: int, rng: np.random.Generator) -> tuple:
    return tuple(int(x) for x in rng.choice((-1, 1), size=p))


def probe_points(p: int, count: int, rng: np.random.Generator) -> np.ndarray:
    """
    A (count, p, p) stack of points i s*s of the principal orbit, with s
    drawn as in random_s.
    """
    s = random_s_matrices(p, count, rng)
    eye = np.broadcast_to(np.eye(p, dtype=complex), s.shape)
    return 1j * congruence(s, eye)
