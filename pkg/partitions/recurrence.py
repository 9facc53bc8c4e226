# partitions/recurrence.py

from functools import lru_cache

import numba as nb
import numpy as np

from config import BATCH_PACKED_THRESHOLD, EXACT_PARTITION_LIMIT
from logs import get_logger
from utils.errors import ExactLimitError

log = get_logger(__name__)


@nb.njit(cache=True)
def _pentagonal_mod4(N):
    p = np.zeros(N + 1, dtype=np.uint8)
    p[0] = 1
    for n in range(1, N + 1):
        acc = 0
        k = 1
        while True:
            g = k * (3 * k - 1) // 2
            if g > n:
                break
            # (-1)^(k+1); a minus sign is multiplication by 3
            w = 1 if k % 2 == 1 else 3
            acc += w * p[n - g]
            g += k
            if g <= n:
                acc += w * p[n - g]
            k += 1
        p[n] = acc & 3
    return p


@nb.njit(cache=True)
def _pentagonal_mod4_packed(N):
    packed = np.zeros(N // 4 + 1, dtype=np.uint8)
    packed[0] = 1
    for n in range(1, N + 1):
        acc = 0
        k = 1
        while True:
            g = k * (3 * k - 1) // 2
            if g > n:
                break
            w = 1 if k % 2 == 1 else 3
            i = n - g
            acc += w * ((packed[i >> 2] >> ((i & 3) << 1)) & 3)
            g += k
            if g <= n:
                i = n - g
                acc += w * ((packed[i >> 2] >> ((i & 3) << 1)) & 3)
            k += 1
        packed[n >> 2] |= np.uint8((acc & 3) << ((n & 3) << 1))
    return packed


def unpack_residues(packed, N):
    """Expand a two-bit packed residue array to one byte per entry."""
    out = np.empty(len(packed) * 4, dtype=np.uint8)
    for j in range(4):
        out[j::4] = (packed >> (2 * j)) & 3
    return out[:N + 1]


def batch_mod4(N, packed=None):
    """
    Residues p(0..N) mod 4 by Euler's pentagonal recurrence.

    Args:
        N (int): Largest argument, N >= 0.
        packed (bool): Run the two-bit packed variant; defaults to N > BATCH_PACKED_THRESHOLD.

    Returns:
        numpy.ndarray: uint8 array of length N + 1.
    """
    if N < 0:
        raise ValueError("N must be nonnegative")
    if packed is None:
        packed = N > BATCH_PACKED_THRESHOLD
    log.debug("batch recurrence mod 4 up to %d (packed=%s)", N, packed)
    if packed:
        return unpack_residues(_pentagonal_mod4_packed(N), N)
    return _pentagonal_mod4(N)


def _generalized_pentagonals(N):
    offsets, signs = [], []
    k = 1
    while k * (3 * k - 1) // 2 <= N:
        sign = 1 if k % 2 else -1
        for g in (k * (3 * k - 1) // 2, k * (3 * k + 1) // 2):
            if g <= N:
                offsets.append(g)
                signs.append(sign)
        k += 1
    return np.array(offsets, dtype=np.int64), np.array(signs, dtype=object)


class _ExactCache:
    """Exact partition numbers, grown on demand and shared across callers."""

    def __init__(self):
        self.values = np.array([1], dtype=object)

    def extend(self, N):
        start = len(self.values)
        if N < start:
            return self.values
        log.debug("exact recurrence from %d to %d", start, N)
        values = np.empty(N + 1, dtype=object)
        values[:start] = self.values
        offsets, signs = _generalized_pentagonals(N)
        for n in range(start, N + 1):
            count = np.searchsorted(offsets, n, side='right')
            values[n] = np.dot(values[n - offsets[:count]], signs[:count])
        self.values = values
        return values


_exact_cache = _ExactCache()


def exact_range(N):
    """Exact p(0..N) as a numpy object array (shared; do not mutate)."""
    if N > EXACT_PARTITION_LIMIT:
        raise ExactLimitError(f"exact recurrence is limited to n <= {EXACT_PARTITION_LIMIT}; use hrr")
    return _exact_cache.extend(N)[:N + 1]


@lru_cache(maxsize=4096)
def exact(n):
    """Exact p(n) for 0 <= n <= EXACT_PARTITION_LIMIT; p(n) = 0 for n < 0."""
    if n < 0:
        return 0
    return int(exact_range(n)[n])
