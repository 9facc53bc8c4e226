# modular/vector_valued.py

from functools import lru_cache

import numpy as np

from modular.named_series import EXACT, MOD4, NamedSeriesId, gen
from partitions.recurrence import exact_range
from quadforms.kronecker import chi_minus12
from series import ExactLaurentSeries, Mod4LaurentSeries

MOCK_F_COMPONENTS = (1, 5, 7, 11)
OMEGA_COMPONENTS = {2: (-1, 1), 4: (-1, -1), 8: (1, 1), 10: (1, -1)}
ZERO_COMPONENTS = (0, 3, 6, 9)


def _f_kernel(N):
    # 1 + 4 sum_{n>=1} (-1)^n q^(n(3n+1)/2) / (1 + q^n), so that f = P * kernel
    g = np.zeros(N + 1, dtype=np.int64)
    g[0] = 1
    n = 1
    while n * (3 * n + 1) // 2 <= N:
        base = n * (3 * n + 1) // 2
        sign = -4 if n % 2 else 4
        g[base::2 * n] += sign
        g[base + n::2 * n] -= sign
        n += 1
    return g


def _omega_kernel(N):
    # sum_{n>=0} (-1)^n q^(3n(n+1)) (1 + q^(2n+1)) / (1 - q^(2n+1)), so that omega = P(q^2) * kernel
    s = np.zeros(N + 1, dtype=np.int64)
    n = 0
    while 3 * n * (n + 1) <= N:
        base = 3 * n * (n + 1)
        d = 2 * n + 1
        sign = -1 if n % 2 else 1
        s[base] += sign
        s[base + d::d] += 2 * sign
        n += 1
    return s


@lru_cache(maxsize=4096)
def f_coefficient(N):
    """Exact coefficient of q^N in the mock theta function f, from f = P(q) * kernel."""
    if N < 0:
        return 0
    p = exact_range(N)
    g = _f_kernel(N)
    return int(np.dot(p, g[::-1].astype(object)))


@lru_cache(maxsize=4096)
def omega_coefficient(t):
    """Exact coefficient of q^t in the mock theta function omega, from omega = P(q^2) * kernel."""
    if t < 0:
        return 0
    half = t // 2
    p = exact_range(half)
    s = _omega_kernel(t)
    return int(np.dot(p, s[t - 2 * np.arange(half + 1)].astype(object)))


def c_r(j, n):
    """
    Exact coefficient C_R(j; n) of q^n in the component R_j.

    Components 1, 5, 7, 11 carry chi_{-12}(j) q^{-1} f(q^24); components 2, 4, 8, 10
    carry 2 q^8 (+-omega(q^12) +- omega(-q^12)); the rest vanish.
    """
    j %= 12
    if j in MOCK_F_COMPONENTS:
        if (n + 1) % 24 or n < -1:
            return 0
        return chi_minus12(j) * f_coefficient((n + 1) // 24)
    if j in OMEGA_COMPONENTS:
        if n < 8 or (n - 8) % 12:
            return 0
        t = (n - 8) // 12
        s1, s2 = OMEGA_COMPONENTS[j]
        return 2 * (s1 + s2 * (-1) ** t) * omega_coefficient(t)
    return 0


def _cache_length(n):
    # nearby discriminants share one cached expansion
    return 1 << max(n, 1).bit_length()


def series_exponents(D, prec, domain=MOD4):
    """
    Exponents C_R(m mod 12; D m^2) for m = 0..prec, read off the defining q-series.

    Unlike ``c_r`` this never asks for a partition number: f and omega are
    expanded from their Eulerian sums. Over MOD4 only f is expanded, since the
    omega components vanish mod 4.

    Args:
        D (int): Eligible discriminant.
        prec (int): Largest multiplier m.
        domain (str): EXACT or MOD4.

    Returns:
        list[int]: Entry m is the exponent, reduced mod 4 over MOD4; entry 0 is 0.
    """
    exponents = [0] * (prec + 1)
    if prec < 1:
        return exponents
    top = D * prec * prec
    if domain == EXACT:
        f = gen(NamedSeriesId.f, (top + 1) // 24 + 1, EXACT)
        omega = gen(NamedSeriesId.omega, max((top - 8) // 12 + 1, 1), EXACT)
    else:
        f = gen(NamedSeriesId.f, _cache_length((top + 1) // 24 + 1), MOD4)
        omega = None
    for m in range(1, prec + 1):
        j, n = m % 12, D * m * m
        if j in MOCK_F_COMPONENTS and (n + 1) % 24 == 0:
            exponents[m] = chi_minus12(j) * f.coefficient((n + 1) // 24)
        elif omega is not None and j in OMEGA_COMPONENTS and n >= 8 and (n - 8) % 12 == 0:
            t = (n - 8) // 12
            s1, s2 = OMEGA_COMPONENTS[j]
            exponents[m] = 2 * (s1 + s2 * (-1) ** t) * omega.coefficient(t)
    if domain == MOD4:
        exponents = [e % 4 for e in exponents]
    return exponents


def r_component(k, prec, domain=MOD4):
    """
    The component R_k of the vector-valued form, truncated at O(q^prec).

    Raises:
        ValueError: k outside 0..11.
    """
    if not 0 <= k <= 11:
        raise ValueError(f"component index {k} outside 0..11")
    zero = (ExactLaurentSeries([], -1, prec) if domain == EXACT
            else Mod4LaurentSeries([], -1, prec))
    if k in ZERO_COMPONENTS:
        return zero
    if k in MOCK_F_COMPONENTS:
        f = gen(NamedSeriesId.f, -(-(prec + 1) // 24), domain)
        return (f.substitute_power(24).shift(-1) * chi_minus12(k)).truncate(prec)
    s1, s2 = OMEGA_COMPONENTS[k]
    inner_prec = max(-(-(prec - 8) // 12), 1)
    omega = gen(NamedSeriesId.omega, inner_prec, domain)
    combined = (omega * s1 + omega.negate_q() * s2).substitute_power(12)
    return (combined * 2).shift(8).truncate(prec)
