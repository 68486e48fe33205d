"""
Compensated Pixel Reductions

Million-term sums over the panel use a cascade of error-free TwoSum
transformations: the array is cut into fixed-size row-major chunks, each
chunk is reduced pairwise while the rounding error of every addition is
collected, and the chunk partials are combined by the same pairwise tree.
Chunk boundaries do not depend on the worker count, so the result is
bit-identical for any number of threads.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Tuple

import numpy as np

from ..config.simulation_config_manager import get_simulation_config, resolve_thread_count

logger = logging.getLogger(__name__)


def _two_sum(a: np.ndarray, b: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Elementwise s = fl(a + b) and the exact rounding error e, a + b = s + e"""
    s = a + b
    b_virtual = s - a
    e = (a - (s - b_virtual)) + (b - b_virtual)
    return s, e


def _cascade(values: np.ndarray) -> Tuple[float, float]:
    """Pairwise TwoSum reduction; returns (sum, accumulated error)"""
    level = values
    error = 0.0
    while level.size > 1:
        if level.size % 2:
            level = np.append(level, 0.0)
        level, e = _two_sum(level[0::2], level[1::2])
        error += float(np.sum(e))
    return float(level[0]), error


def compensated_sum(
    values: np.ndarray, threads: Optional[int] = None, chunk_size: Optional[int] = None
) -> float:
    """
    Sum an array with compensated, thread-count-independent accumulation

    Args:
        values: Any array; flattened in row-major order
        threads: Worker count (None -> DQC1SLM_THREADS / configuration)
        chunk_size: Elements per chunk (None -> configuration)

    Returns:
        The sum as a Python float
    """
    flat = np.ascontiguousarray(values, dtype=np.float64).ravel()
    if flat.size == 0:
        return 0.0

    chunk = chunk_size or get_simulation_config().reduction.chunk_size
    chunks: List[np.ndarray] = [flat[start : start + chunk] for start in range(0, flat.size, chunk)]
    workers = min(resolve_thread_count(threads), len(chunks))

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            partials = list(pool.map(_cascade, chunks))
    else:
        partials = [_cascade(part) for part in chunks]

    logger.debug(f"Reduced {flat.size} values in {len(chunks)} chunks on {workers} worker(s)")

    sums = np.array([s for s, _ in partials])
    errors = np.array([e for _, e in partials])
    total, error = _cascade(sums)
    return total + (error + float(np.sum(errors)))
