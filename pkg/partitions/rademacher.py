# partitions/rademacher.py

from fractions import Fraction
from math import gcd

import mpmath
from mpmath import mp

from config import HRR_GUARD_DIGITS, HRR_MAX_DOUBLINGS, HRR_TAIL_TARGET
from logs import get_logger
from utils.errors import UncertifiedError

log = get_logger(__name__)


def _twelve_k_dedekind(h, k):
    # 12k * s(h, k) for coprime h, k; an integer by the reciprocity law
    h %= k
    if h == 0:
        return 0
    return (h * h + k * k + 1 - 3 * h * k - k * _twelve_k_dedekind(k % h, h)) // h


def dedekind_sum(h, k):
    """
    Dedekind sum s(h, k) for k >= 1, by the reciprocity law in integers.

    Args:
        h (int): Numerator, any integer.
        k (int): Positive modulus.

    Returns:
        Fraction: The exact value.
    """
    g = gcd(h, k)
    h, k = h // g, k // g
    return Fraction(_twelve_k_dedekind(h, k), 12 * k)


def _sawtooth(x):
    if x.denominator == 1:
        return Fraction(0)
    return x - (x.numerator // x.denominator) - Fraction(1, 2)


def dedekind_sum_direct(h, k):
    """s(h, k) straight from the sawtooth definition; O(k)."""
    return sum((_sawtooth(Fraction(r, k)) * _sawtooth(Fraction(h * r, k)) for r in range(1, k)), Fraction(0))


def kloosterman_a(k, n, direct=False):
    """
    The exponential sum A_k(n) as an mpmath real at the current precision.

    The phase pi * (s(h,k) - 2nh/k) is reduced modulo 2 in integers, over the
    common denominator 12k, before the cosine.
    """
    if k == 1:
        return mp.mpf(1)
    period = 24 * k
    total = mp.mpf(0)
    for h in range(1, k):
        if gcd(h, k) != 1:
            continue
        twelve_k_s = int(12 * k * dedekind_sum_direct(h, k)) if direct else _twelve_k_dedekind(h, k)
        numerator = (twelve_k_s - 24 * n * h) % period
        total += mp.cospi(mp.mpf(numerator) / (12 * k))
    return total


def tail_bound(n, N):
    """Rademacher's bound on the remainder after the first N terms, n >= 2."""
    with mp.workdps(30):
        N = mp.mpf(N)
        first = 44 * mp.pi ** 2 / (225 * mp.sqrt(3)) / mp.sqrt(N)
        second = mp.pi * mp.sqrt(2) / 75 * mp.sqrt(N / (n - 1)) * mp.sinh(mp.pi * mp.sqrt(mp.mpf(2 * n) / 3) / N)
        return first + second


def terms_needed(n, target=HRR_TAIL_TARGET):
    """Smallest N with tail_bound(n, N) < target."""
    hi = 1
    while tail_bound(n, hi) >= target:
        hi *= 2
    lo = hi // 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if tail_bound(n, mid) < target:
            hi = mid
        else:
            lo = mid
    return hi


def estimated_digits(n):
    """Decimal length estimate of p(n): pi*sqrt(2n/3)/ln 10."""
    with mp.workdps(20):
        return int(mp.pi * mp.sqrt(mp.mpf(2 * n) / 3) / mp.log(10)) + 1


def _term_digits(k, n, guard_digits):
    # the k-th term is of size about exp(pi sqrt(2n/3) / k)
    return estimated_digits(n) // k + guard_digits + len(str(n)) + len(str(k))


def _term(k, n, guard_digits):
    with mp.workdps(_term_digits(k, n, guard_digits)):
        x = mp.mpf(n) - mp.mpf(1) / 24
        sqrt_x = mp.sqrt(x)
        c = mp.pi * mp.sqrt(mp.mpf(2) / 3)
        u = c * sqrt_x / k
        bracket = (c / k) * mp.cosh(u) - mp.sinh(u) / sqrt_x
        return kloosterman_a(k, n) * mp.sqrt(k) / (mp.pi * mp.sqrt(2)) * bracket / (2 * x)


def hrr(n, max_doublings=HRR_MAX_DOUBLINGS, guard_digits=HRR_GUARD_DIGITS):
    """
    Exact p(n) from the Hardy-Ramanujan-Rademacher series, certified.

    Each term is evaluated at the precision its own size calls for, so late
    terms are cheap. The partial sum plus the tail bound must sit inside a 0.25
    window around an integer, otherwise the number of terms is doubled; running
    out of doublings raises UncertifiedError rather than returning a guess.
    """
    if n < 0:
        return 0
    if n < 2:
        return 1
    digits = estimated_digits(n) + guard_digits
    N = terms_needed(n)
    log.debug("hrr(%d): %d digits, starting with %d terms", n, digits, N)
    with mp.workdps(digits):
        eps = N * mp.mpf(10) ** (-(guard_digits // 2))
        total = mp.mpf(0)
        done = 0
        for _ in range(max_doublings + 1):
            for k in range(done + 1, N + 1):
                total += _term(k, n, guard_digits)
            done = N
            nearest = mpmath.nint(total)
            dist = abs(total - nearest)
            if dist + tail_bound(n, N) + eps < 0.25:
                return int(nearest)
            log.info("hrr(%d): %d terms not certified (distance %s), doubling", n, N, mpmath.nstr(dist, 5))
            N *= 2
            eps *= 2
    raise UncertifiedError(f"p({n}) could not be certified within {N // 2} terms")
