# borcherds/product.py

from fractions import Fraction

import numpy as np
from mpmath import mp

from borcherds.quad_irrational import ZERO, BorcherdsLogSeries, QuadIrrational
from congruence.pipeline import twisted_p
from logs import get_logger
from modular.named_series import EXACT, MOD4
from modular.vector_valued import c_r, series_exponents
from quadforms.forms import require_eligible
from quadforms.kronecker import character_values, kronecker
from series import ExactLaurentSeries, Mod4LaurentSeries
from utils.errors import InconsistencyError

log = get_logger(__name__)


def exponent(D, m):
    """C_R(m mod 12; D m^2), the exponent of psi_D(q^m) in Psi_D."""
    return c_r(m % 12, D * m * m)


def psi_log(D, m, prec):
    """
    log psi_D(q^m) = sum_{r>=1} i sqrt(D) chi_{-D}(r) q^(mr) / r + O(q^(prec+1)).

    The Gauss sum sum_b chi_{-D}(b) e^(-2 pi i b r / D) = -chi_{-D}(r) i sqrt(D)
    collapses the finite product over b.
    """
    require_eligible(D)
    if m < 1:
        raise ValueError("m must be positive")
    coeffs = [ZERO] * (prec + 1)
    for r in range(1, prec // m + 1):
        chi = kronecker(-D, r)
        if chi:
            coeffs[m * r] = QuadIrrational(Fraction(0), Fraction(chi, r))
    return BorcherdsLogSeries(D, coeffs, prec + 1)


def gauss_sum_check(D, digits=30, conjugate=False):
    """
    Sum chi_{-D}(b) e^(-2 pi i b / D) over b mod D numerically.

    Raises:
        InconsistencyError: the sum is not within 10^(-digits/2) of -i sqrt(D)
        (+i sqrt(D) when ``conjugate``).
    """
    require_eligible(D)
    sign = 1 if conjugate else -1
    with mp.workdps(digits + 10):
        total = mp.mpc(0)
        for b, chi in enumerate(character_values(-D, D).tolist()):
            if chi:
                total += chi * mp.expjpi(sign * mp.mpf(2 * b) / D)
        target = mp.mpc(0, sign * mp.sqrt(D))
        if abs(total - target) >= mp.mpf(10) ** (-(digits // 2)):
            raise InconsistencyError(f"Gauss sum for D = {D} is {total}, expected {target}")
        return +total


def borcherds_log(D, prec):
    """
    log Psi_D = sum_{m=1}^{prec} C_R(m mod 12; D m^2) log psi_D(q^m), through q^prec.

    Parameters:
    - D: eligible discriminant.
    - prec: last exponent kept.

    Returns:
    - BorcherdsLogSeries known to O(q^(prec+1)).
    """
    total = BorcherdsLogSeries(D, [], prec + 1)
    for m in range(1, prec + 1):
        e = exponent(D, m)
        if e:
            total = total + psi_log(D, m, prec) * e
    return total


def l_via_product(D, prec):
    """L_D = (q d/dq log Psi_D) / (i sqrt(D)), through q^prec, with integral coefficients."""
    log_series = borcherds_log(D, prec)
    if not log_series.is_purely_imaginary():
        raise InconsistencyError(f"log Psi_{D} has a nonzero rational part")
    return log_series.theta().over_root()


def l_expansion(D, prec, domain='exact', exponents=None):
    """
    L_D = sum_m C_R(m mod 12; D m^2) m sum_{gcd(n,D)=1} chi_{-D}(n) q^(mn), through q^prec.

    Args:
        D (int): Eligible discriminant.
        prec (int): Last exponent kept.
        domain (str): 'exact' or 'mod4'.
        exponents (list[int]): C_R(m mod 12; D m^2) indexed by m. Defaults to
            ``exponent`` over 'exact' and to the f q-series mod 4 over 'mod4'.

    Returns:
        ExactLaurentSeries | Mod4LaurentSeries: Known to O(q^(prec+1)).
    """
    require_eligible(D)
    chi = character_values(-D, prec + 1).astype(np.int64)
    if domain == 'exact':
        if exponents is None:
            exponents = [0] + [exponent(D, m) for m in range(1, prec + 1)]
        values = np.zeros(prec + 1, dtype=object)
        for m in range(1, prec + 1):
            e = exponents[m]
            if e:
                values[m::m] += (e * m) * chi[1:prec // m + 1].astype(object)
        return ExactLaurentSeries([int(v) for v in values], 0, prec + 1)
    if exponents is None:
        exponents = series_exponents(D, prec, MOD4)
    values = np.zeros(prec + 1, dtype=np.int64)
    for m in range(1, prec + 1):
        e = exponents[m] % 4
        if e:
            values[m::m] = (values[m::m] + e * m * chi[1:prec // m + 1]) & 3
    return Mod4LaurentSeries(values & 3, 0, prec + 1)


def congruence_check(D, prec, engine=None, exact=False):
    """
    True iff L_D = P(D; q) mod 4 through q^prec.

    The left side takes its exponents from the q-series of the mock theta
    functions and the right side from the partition engine, so neither side
    is derived from the other. With ``exact`` the exponents are the exact
    integers C_R, reduced only after L_D is assembled.
    """
    if exact:
        lhs = l_expansion(D, prec, 'exact', series_exponents(D, prec, EXACT)).reduce()
    else:
        lhs = l_expansion(D, prec, 'mod4')
    rhs = twisted_p(D, prec, engine)
    holds = lhs == rhs
    log.debug("congruence L_%d = P(%d;q) mod 4 through q^%d: %s", D, D, prec, holds)
    return holds
