# quadforms/survey.py

from collections import Counter
from functools import lru_cache

import numba as nb
import numpy as np

from logs import get_logger

log = get_logger(__name__)

_MAX_DIVISORS = 4096


@nb.njit(cache=True)
def smallest_prime_factors(n):
    spf = np.zeros(n + 1, dtype=np.int32)
    for i in range(2, n + 1):
        if spf[i] == 0:
            spf[i] = i
            if i * i <= n:
                for j in range(i * i, n + 1, i):
                    if spf[j] == 0:
                        spf[j] = i
    return spf


@nb.njit(cache=True)
def _count_reduced_forms(D, spf):
    divisors = np.empty(_MAX_DIVISORS, dtype=np.int64)
    h = 0
    b = 1
    while 3 * b * b <= D:
        N = (b * b + D) // 4
        count = 1
        divisors[0] = 1
        m = N
        while m > 1:
            p = spf[m]
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            base = count
            pk = 1
            for _ in range(e):
                pk *= p
                for i in range(base):
                    divisors[count] = divisors[i] * pk
                    count += 1
        for i in range(count):
            a = divisors[i]
            if a >= b and a * a <= N:
                c = N // a
                h += 1
                if b < a and a < c:
                    h += 1
        b += 2
    return h


@nb.njit(cache=True)
def _class_numbers(Ds, spf):
    out = np.empty(len(Ds), dtype=np.int64)
    for i in range(len(Ds)):
        out[i] = _count_reduced_forms(Ds[i], spf)
    return out


def squarefree_mask(t):
    """Boolean array, True at square-free n for 0 <= n <= t (0 is marked False)."""
    mask = np.ones(t + 1, dtype=bool)
    mask[0] = False
    spf = smallest_prime_factors(int(np.sqrt(t)) + 1)
    for p in range(2, len(spf)):
        if spf[p] == p and p * p <= t:
            mask[p * p::p * p] = False
    return mask


def eligible_upto(t, start=0):
    """Sorted eligible discriminants D with start < D <= t."""
    if t < 23:
        return np.zeros(0, dtype=np.int64)
    candidates = np.arange(23, t + 1, 24, dtype=np.int64)
    candidates = candidates[candidates > start]
    if len(candidates) == 0:
        return candidates
    return candidates[squarefree_mask(t)[candidates]]


def class_numbers(Ds):
    """h(-D) for an array of eligible D, counting reduced forms with a shared sieve."""
    Ds = np.asarray(Ds, dtype=np.int64)
    if len(Ds) == 0:
        return np.zeros(0, dtype=np.int64)
    spf = smallest_prime_factors(int(Ds.max()) // 3 + 2)
    return _class_numbers(Ds, spf)


@lru_cache(maxsize=8)
def class_numbers_upto(t, start=0):
    """(Ds, hs) over eligible start < D <= t; arrays are read-only."""
    Ds = eligible_upto(t, start)
    log.info("class numbers for %d eligible discriminants in (%d, %d]", len(Ds), start, t)
    hs = class_numbers(Ds)
    Ds.setflags(write=False)
    hs.setflags(write=False)
    return Ds, hs


def survey(t):
    """Histogram h -> number of eligible D <= t with h(-D) = h."""
    _, hs = class_numbers_upto(t)
    return dict(sorted(Counter(hs.tolist()).items()))
