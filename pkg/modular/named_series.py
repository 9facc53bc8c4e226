# modular/named_series.py

from enum import Enum
from functools import lru_cache

import numpy as np

from logs import get_logger
from partitions.recurrence import batch_mod4, exact_range
from series import ExactLaurentSeries, Mod4LaurentSeries
from utils.errors import UnsupportedSeriesError

log = get_logger(__name__)

EXACT = 'exact'
MOD4 = 'mod4'


class NamedSeriesId(str, Enum):
    P = 'P'
    f = 'f'
    omega = 'omega'
    Delta = 'Delta'
    E4 = 'E4'
    j = 'j'
    DeltaInvMod4 = 'DeltaInvMod4'


def _zeros(n, domain):
    return np.zeros(n, dtype=object if domain == EXACT else np.int64)


def _reduce(values, domain):
    if domain == EXACT:
        return values
    return values & 3


def _wrap(values, valuation, prec, domain):
    if domain == EXACT:
        return ExactLaurentSeries([int(v) for v in values], valuation, prec)
    return Mod4LaurentSeries(values, valuation, prec)


def _divide_geometric(a, n, sign, domain):
    # a / (1 - sign q^n): running sums down the columns of a reshaped into blocks of n
    blocks = -(-len(a) // n)
    grid = np.zeros(blocks * n, dtype=a.dtype)
    grid[:len(a)] = a
    grid = grid.reshape(blocks, n)
    if sign > 0:
        grid = np.cumsum(grid, axis=0)
    else:
        alternating = np.where(np.arange(blocks) % 2, -1, 1)[:, None]
        grid = alternating * np.cumsum(alternating * grid, axis=0)
    return _reduce(grid.reshape(-1)[:len(a)], domain)


def _divide_one_plus(a, n, domain):
    """a / (1 + q^n)."""
    return _divide_geometric(a, n, -1, domain)


def _divide_one_minus(a, n, domain):
    """a / (1 - q^n)."""
    return _divide_geometric(a, n, 1, domain)


def _partition_series(prec, domain):
    if domain == EXACT:
        return ExactLaurentSeries([int(v) for v in exact_range(prec - 1)], 0, prec)
    return Mod4LaurentSeries(batch_mod4(prec - 1), 0, prec)


def _mock_f(prec, domain):
    # f(q) = sum_{n>=0} q^(n^2) / prod_{k=1}^{n} (1 + q^k)^2
    total = _zeros(prec, domain)
    inv_den = _zeros(prec, domain)
    inv_den[0] = 1
    n = 0
    while n * n < prec:
        if n:
            inv_den = _divide_one_plus(inv_den, n, domain)
            inv_den = _divide_one_plus(inv_den, n, domain)
        total[n * n:] += inv_den[:prec - n * n]
        n += 1
    return _wrap(_reduce(total, domain), 0, prec, domain)


def _mock_omega(prec, domain):
    # omega(q) = sum_{n>=0} q^(2n(n+1)) / prod_{k=0}^{n} (1 - q^(2k+1))^2
    total = _zeros(prec, domain)
    inv_den = _zeros(prec, domain)
    inv_den[0] = 1
    n = 0
    while 2 * n * (n + 1) < prec:
        d = 2 * n + 1
        inv_den = _divide_one_minus(inv_den, d, domain)
        inv_den = _divide_one_minus(inv_den, d, domain)
        e = 2 * n * (n + 1)
        total[e:] += inv_den[:prec - e]
        n += 1
    return _wrap(_reduce(total, domain), 0, prec, domain)


def euler_product(prec, domain=EXACT):
    """prod_{n>=1} (1 - q^n) + O(q^prec) from the pentagonal number theorem."""
    values = _zeros(prec, domain)
    k = 0
    while k * (3 * k - 1) // 2 < prec:
        sign = -1 if k % 2 else 1
        for g in {k * (3 * k - 1) // 2, k * (3 * k + 1) // 2}:
            if g < prec:
                values[g] += sign
        k += 1
    return _wrap(_reduce(values, domain), 0, prec, domain)


def _delta(prec, domain):
    # q * prod (1 - q^n)^24, valuation 1
    if prec <= 1:
        return _wrap([], prec, prec, domain)
    eta24 = euler_product(prec - 1, domain) ** 24
    return eta24.shift(1)


def _e4(prec, domain):
    sigma = np.zeros(prec, dtype=object)
    for d in range(1, prec):
        sigma[d::d] += d ** 3
    values = 240 * sigma
    values[0] = 1
    if domain == EXACT:
        return ExactLaurentSeries([int(v) for v in values], 0, prec)
    return Mod4LaurentSeries([int(v) % 4 for v in values], 0, prec)


def _j(prec, domain):
    e4 = _cached(NamedSeriesId.E4, prec + 1, domain)
    delta = _cached(NamedSeriesId.Delta, prec + 2, domain)
    return ((e4 ** 3) * delta.inverse()).truncate(prec)


def _delta_inv_mod4(prec, domain):
    if domain != MOD4:
        raise UnsupportedSeriesError("DeltaInvMod4 exists only modulo 4")
    return _cached(NamedSeriesId.Delta, prec + 2, MOD4).inverse().truncate(prec)


_BUILDERS = {
    NamedSeriesId.P: _partition_series,
    NamedSeriesId.f: _mock_f,
    NamedSeriesId.omega: _mock_omega,
    NamedSeriesId.Delta: _delta,
    NamedSeriesId.E4: _e4,
    NamedSeriesId.j: _j,
    NamedSeriesId.DeltaInvMod4: _delta_inv_mod4,
}


@lru_cache(maxsize=128)
def _cached(series_id, prec, domain):
    log.debug("generating %s to O(q^%d) over %s", series_id.value, prec, domain)
    return _BUILDERS[series_id](prec, domain)


def gen(series_id, prec, domain=EXACT):
    """
    Named q-expansion truncated at O(q^prec).

    Args:
        series_id (NamedSeriesId | str): One of P, f, omega, Delta, E4, j, DeltaInvMod4.
        prec (int): Exclusive precision, at least 1.
        domain (str): 'exact' or 'mod4'.

    Returns:
        ExactLaurentSeries | Mod4LaurentSeries: Shared cached value; series are immutable.
    """
    if prec < 1:
        raise ValueError("prec must be at least 1")
    if domain not in (EXACT, MOD4):
        raise ValueError(f"unknown domain {domain!r}")
    try:
        series_id = NamedSeriesId(series_id)
    except ValueError:
        raise UnsupportedSeriesError(f"unknown series {series_id!r}") from None
    return _cached(series_id, prec, domain)


@lru_cache(maxsize=64)
def delta_power_mod4(h, prec):
    """Delta^h modulo 4, known through O(q^prec)."""
    delta = gen(NamedSeriesId.Delta, max(prec - h + 1, 2), MOD4)
    return (delta ** h).truncate(prec)
