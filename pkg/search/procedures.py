# search/procedures.py

from math import gcd, pi

import numpy as np
from mpmath import mp
from sympy import primefactors

from config import IMPROVED_BOUND
from congruence.pipeline import DiscriminantSet, sturm_bound
from logs import get_logger
from quadforms import class_numbers_upto, classno_bound, eligible_upto
from utils.errors import InputError

log = get_logger(__name__)


def enumerate_set(t):
    """S(t): every eligible D <= t, with h_S and the Sturm bound."""
    if t < 23:
        raise InputError("the smallest eligible discriminant is 23")
    Ds, hs = class_numbers_upto(t)
    hS = int(hs.max())
    # members come from the square-free sieve, so the eligibility check is skipped
    return DiscriminantSet.model_construct(members=Ds.tolist(), hS=hS, sturm=sturm_bound(hS))


def density(k, l):
    """
    Density of square-free N = l mod k among the integers (gcd(l, k) = 1):
    (1/zeta(2)) (1/k) prod_{p | k} 1/(1 - p^-2).
    """
    if gcd(l, k) != 1:
        raise InputError(f"density needs gcd(l, k) = 1, got l = {l}, k = {k}")
    value = 6 / pi ** 2 / k
    for p in primefactors(k):
        value /= 1 - p ** -2
    return value


def _first_estimate_gap(t):
    return t * density(24, 23) - (12 * classno_bound(t) + 2)


def first_estimate(lo=1e5, hi=1e8, tol=1e-2):
    """
    Root of 12 sqrt(t)(log t + 2)/pi + 2 = t / (16 zeta(2)), by bisection.

    Raises:
        InputError: the bracket does not change sign.
    """
    f_lo, f_hi = _first_estimate_gap(lo), _first_estimate_gap(hi)
    if f_lo * f_hi > 0:
        raise InputError(f"no sign change on [{lo}, {hi}]")
    while hi - lo > tol:
        mid = (lo + hi) / 2
        f_mid = _first_estimate_gap(mid)
        if (f_mid > 0) == (f_hi > 0):
            hi, f_hi = mid, f_mid
        else:
            lo, f_lo = mid, f_mid
    return (lo + hi) / 2


def improved_estimate(start=10 ** 5):
    """
    First D with #S(D) > 12 h_{S(D)} + 2, scanning eligible D upwards.

    Returns:
        tuple: (D, h_S, #S) at that point.
    """
    t = start
    while True:
        Ds, hs = class_numbers_upto(t)
        counts = np.arange(1, len(Ds) + 1)
        running = np.maximum.accumulate(hs)
        hits = np.nonzero(counts > 12 * running + 2)[0]
        if len(hits):
            i = int(hits[0])
            return int(Ds[i]), int(running[i]), int(counts[i])
        log.debug("no improved estimate below %d, doubling", t)
        t *= 2


def class_filter(t2=IMPROVED_BOUND):
    """Minimal h0 with #{D <= t2 : h(-D) <= h0} > 12 h0 + 2; returns (h0, count)."""
    _, hs = class_numbers_upto(t2)
    cumulative = np.cumsum(np.bincount(hs))
    h = np.arange(len(cumulative))
    hits = np.nonzero(cumulative > 12 * h + 2)[0]
    if not len(hits):
        raise InputError(f"class filter has no solution below {t2}")
    h0 = int(hits[0])
    return h0, int(cumulative[h0])


def final_reduction(t2=IMPROVED_BOUND):
    """
    Drop the largest discriminants of the class-filtered set while #S > 12 h_S + 2 survives.

    Returns:
        tuple: (DiscriminantSet, tail) where tail lists the removed discriminants
        together with the new maximum, ascending.
    """
    h0, _ = class_filter(t2)
    Ds, hs = class_numbers_upto(t2)
    keep = hs <= h0
    Ds, hs = Ds[keep].tolist(), hs[keep].tolist()
    removed = []
    while len(Ds) - 1 > 12 * max(hs[:-1]) + 2:
        removed.append(Ds.pop())
        hs.pop()
    hS = max(hs)
    tail = sorted(removed + [Ds[-1]])
    dset = DiscriminantSet.model_construct(members=Ds, hS=hS, sturm=sturm_bound(hS))
    log.info("final reduction removed %d discriminants; #S = %d, max D = %d", len(removed), len(Ds), Ds[-1])
    return dset, tail


def min_classno(a, b):
    """min h(-D) over eligible a < D <= b."""
    if a >= b:
        raise InputError("min_classno needs a < b")
    _, hs = class_numbers_upto(b, a)
    if not len(hs):
        raise InputError(f"no eligible discriminant in ({a}, {b}]")
    return int(hs.min())


def _multipliers(bound):
    m = np.arange(1, bound + 1, dtype=np.int64)
    return m[np.gcd(m, 12) == 1]


def needed_value_count(dset, bound=None):
    """Exact number of distinct arguments (D m^2 + 1)/24, D in S, m <= bound, gcd(m, 12) = 1."""
    bound = dset.sturm if bound is None else bound
    ms = _multipliers(bound)
    args = (np.asarray(dset.members, dtype=np.int64)[:, None] * (ms * ms)[None, :] + 1) // 24
    return int(len(np.unique(args)))


def heuristic_value_count(dset, bound=None):
    """#S * bound / 3: one third of the multipliers are prime to 12."""
    bound = dset.sturm if bound is None else bound
    return dset.size * bound // 3


def largest_needed_argument(dset, bound=None):
    bound = dset.sturm if bound is None else bound
    m = int(_multipliers(bound)[-1])
    return (dset.max_D * m * m + 1) // 24


def digits_of_largest_partition(n):
    """Approximate decimal length of p(n), from log p(n) ~ pi sqrt(2n/3) - log(4 n sqrt 3)."""
    with mp.workdps(30):
        value = mp.pi * mp.sqrt(mp.mpf(2) * n / 3) - mp.log(4 * n * mp.sqrt(3))
        return int(value / mp.log(10)) + 1


def search_stats(stage=None):
    """
    Run one stage of the search-space reduction, or first through final when
    ``stage`` is None; the min-class-number scan to 10^7 runs only on request.

    Returns:
        dict: Stage name to its printed result.
    """
    stages = {}
    if stage in (None, 'first'):
        t1 = first_estimate()
        stages['first'] = {
            't1': round(t1, 2),
            'size': len(eligible_upto(int(np.ceil(t1)))),
            'classno_bound': round(classno_bound(int(np.ceil(t1))), 2),
        }
    if stage in (None, 'improved'):
        stages['improved'] = improved_estimate()
    if stage in (None, 'filter'):
        stages['filter'] = class_filter()
    if stage in (None, 'final'):
        dset, tail = final_reduction()
        stages['final'] = {
            'removed': tail,
            'size': dset.size,
            'max_D': dset.max_D,
            'hS': dset.hS,
            'needed_values': needed_value_count(dset),
            'heuristic_values': heuristic_value_count(dset),
            'largest_argument': largest_needed_argument(dset),
        }
    if stage == 'minh':
        stages['minh'] = min_classno(IMPROVED_BOUND, 10 ** 7)
    if not stages:
        raise InputError(f"unknown stage {stage!r}")
    return stages
