# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2026, iwasawa contributors

"""
Counter-based random substreams and their ordered parallel evaluation.

Samples are grouped in blocks of a fixed size. Block b always draws from
Generator(Philox(SeedSequence([seed, b]))), so the sample set depends only
on (seed, block_size, count) and never on how blocks are scheduled. Results
are collected in block order.
"""
import logging
import os

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Optional, TypeVar

import numpy as np

from iwasawa.conf import settings
from iwasawa.core.exceptions import ImproperlyConfigured

logger = logging.getLogger(__name__)

THREADS_ENVIRONMENT_VARIABLE = "IWASAWA_THREADS"

T = TypeVar("T")


def resolve_workers(threads: Optional[int] = None) -> int:
    """
    Number of worker threads: explicit argument, then the IWASAWA_THREADS
    environment variable, then settings.THREADS, then the CPU count.
    """
    if threads is None:
        raw = os.environ.get(THREADS_ENVIRONMENT_VARIABLE)
        if raw:
            try:
                threads = int(raw)
            except ValueError:
                raise ImproperlyConfigured(
                    "{} must be an integer, got {!r}".format(
                        THREADS_ENVIRONMENT_VARIABLE, raw
                    )
                )
        else:
            threads = settings.THREADS
    if threads is None:
        return os.cpu_count() or 1
    if threads < 1:
        raise ImproperlyConfigured("Thread count must be >= 1, got {}".format(threads))
    return threads


def block_generator(seed: int, block: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, block])))


def block_counts(total: int, block_size: int) -> List[int]:
    """Sample counts per block: full blocks then the remainder"""
    full, rest = divmod(total, block_size)
    return [block_size] * full + ([rest] if rest else [])


def map_blocks(
    fn: Callable[[np.random.Generator, int], T],
    total: int,
    seed: int,
    block_size: int,
    threads: Optional[int] = None,
) -> List[T]:
    """
    Call fn(rng, count) once per block and return the results in block
    order. fn must draw a whole block from rng before truncating to count so
    that a larger total extends a smaller one.
    """
    counts = block_counts(total, block_size)
    workers = min(resolve_workers(threads), len(counts)) or 1

    def run(block: int) -> T:
        return fn(block_generator(seed, block), counts[block])

    logger.debug(
        "Evaluating %d samples in %d blocks on %d threads", total, len(counts), workers
    )
    if workers == 1:
        return [run(b) for b in range(len(counts))]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(run, range(len(counts))))
