# classpoly/j_invariant.py

from mpmath import mp

from config import HILBERT_TERM_BUDGET
from utils.errors import CertificationError


def _nome(tau):
    return mp.exp(2j * mp.pi * tau)


def eisenstein_e4(q, eps, budget=HILBERT_TERM_BUDGET):
    """E4 = 1 + 240 sum n^3 q^n / (1 - q^n), summed until the tail is below eps."""
    r = abs(q)
    if r >= 1:
        raise CertificationError("nome outside the unit disc")
    total = mp.mpc(0)
    qn = mp.mpc(1)
    for n in range(1, budget + 1):
        qn *= q
        total += n ** 3 * qn / (1 - qn)
        # remaining terms are bounded by a geometric series in r with ratio below 1/2
        bound = 2 * (n + 1) ** 3 * r ** (n + 1) / (1 - r)
        if bound < eps and (n + 2) ** 3 * r < (n + 1) ** 3 / 2:
            return 1 + 240 * total
    raise CertificationError(f"E4 tail bound not reached within {budget} terms")


def euler_product_value(q, eps, budget=HILBERT_TERM_BUDGET):
    """prod (1 - q^n) via the pentagonal series sum (-1)^k q^(k(3k-1)/2) over all integers k."""
    r = abs(q)
    total = mp.mpc(1)
    for k in range(1, budget + 1):
        sign = -1 if k % 2 else 1
        total += sign * (q ** (k * (3 * k - 1) // 2) + q ** (k * (3 * k + 1) // 2))
        nxt = (k + 1) * (3 * k + 2) // 2
        if 4 * r ** nxt < eps:
            return total
    raise CertificationError(f"eta product tail bound not reached within {budget} terms")


def delta_value(q, eps, budget=HILBERT_TERM_BUDGET):
    return q * euler_product_value(q, eps, budget) ** 24


def j_at(point, digits, budget=HILBERT_TERM_BUDGET):
    """
    j(tau) = E4(tau)^3 / Delta(tau) at a Heegner point.

    Parameters:
    - point: HeegnerPoint (or anything with ``tau(digits)``), imaginary part >= sqrt(3)/2.
    - digits: decimal digits wanted in the result.
    - budget: maximum number of series terms before giving up.

    Returns:
    - mpmath complex at the caller's precision context raised to ``digits``.
    """
    with mp.workdps(digits + 15):
        tau = point.tau() if hasattr(point, 'tau') else mp.mpc(point)
        if tau.imag <= 0:
            raise CertificationError("tau must lie in the upper half-plane")
        q = _nome(tau)
        # relative accuracy: the terms are normalised by the leading 1 in both sums
        eps = mp.mpf(10) ** (-(digits + 10))
        e4 = eisenstein_e4(q, eps, budget)
        delta = delta_value(q, eps, budget)
        value = e4 ** 3 / delta
    with mp.workdps(digits):
        return +value
