# classpoly/hilbert.py

from math import ceil, log as ln, log2, pi, sqrt

import mpmath
from mpmath import mp
from pydantic import BaseModel, Field, field_validator, model_validator

from classpoly.j_invariant import j_at
from config import HILBERT_GUARD_DIGITS, HILBERT_MAX_RETRIES, HILBERT_TERM_BUDGET, HILBERT_TOLERANCE
from logs import get_logger
from quadforms.forms import reduced_forms
from utils.errors import CertificationError

log = get_logger(__name__)


class PrecisionPolicy(BaseModel):
    """Working precision for the class polynomial construction."""

    digits: int | None = Field(default=None, ge=16)
    tolerance: float = Field(default=HILBERT_TOLERANCE, gt=0, lt=0.5)
    term_budget: int = HILBERT_TERM_BUDGET
    max_retries: int = HILBERT_MAX_RETRIES


class HilbertClassPolynomial(BaseModel):
    """Monic H_{-D}(X), coefficients leading first."""

    D: int
    coeffs: list[int]
    digits: int = 0

    @field_validator('coeffs')
    @classmethod
    def _monic(cls, coeffs):
        if not coeffs or coeffs[0] != 1:
            raise ValueError("class polynomial must be monic")
        return coeffs

    @model_validator(mode='after')
    def _degree(self):
        if self.degree < 1:
            raise ValueError("class polynomial has positive degree")
        return self

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def mod4(self):
        return [c % 4 for c in self.coeffs]

    def evaluate(self, x):
        result = 0
        for c in self.coeffs:
            result = result * x + c
        return result

    def __str__(self):
        return ' '.join(str(c) for c in self.coeffs)


def precision_estimate(D, forms=None, guard=HILBERT_GUARD_DIGITS):
    """Decimal digits: ceil((pi sqrt(D) / ln 10) * sum 1/a) plus guard digits."""
    forms = reduced_forms(D) if forms is None else forms
    height = pi * sqrt(D) / ln(10) * sum(1.0 / f.a for f in forms)
    return int(ceil(height)) + guard


def _poly_mul(p, r):
    out = [mp.mpf(0)] * (len(p) + len(r) - 1)
    for i, x in enumerate(p):
        for k, y in enumerate(r):
            out[i + k] += x * y
    return out


def _factors(forms, digits, tolerance, budget):
    """Real linear or quadratic factors, one per form or conjugate pair."""
    present = set(forms)
    factors, roots = [], []
    for form in forms:
        if form.b < 0 and (form.a, -form.b, form.c) in present:
            continue
        j = j_at(form.heegner_point(), digits, budget)
        roots.append(j)
        partner = type(form)(form.a, -form.b, form.c)
        if form.b > 0 and partner in present:
            roots.append(mp.conj(j))
            factors.append([mp.mpf(1), -2 * j.real, j.real ** 2 + j.imag ** 2])
        else:
            if abs(j.imag) >= tolerance:
                raise CertificationError(f"j at {form} should be real, imaginary part {mpmath.nstr(j.imag, 5)}")
            factors.append([mp.mpf(1), -j.real])
    return factors, roots


def _attempt(D, forms, digits, policy):
    tolerance = policy.tolerance
    with mp.workdps(digits + 10):
        factors, roots = _factors(forms, digits + 10, tolerance, policy.term_budget)
        poly = [mp.mpf(1)]
        for factor in factors:
            poly = _poly_mul(poly, factor)
        # a coefficient with no fractional bits left cannot be certified by rounding
        bits = int(digits * log2(10))
        coeffs = []
        for c in poly:
            if c and mpmath.mag(c) >= bits:
                raise CertificationError(
                    f"H_-{D}: coefficient of magnitude 2^{mpmath.mag(c)} exceeds {digits} digits of precision"
                )
            nearest = mpmath.nint(c)
            if abs(c - nearest) >= tolerance:
                raise CertificationError(
                    f"H_-{D}: coefficient {mpmath.nstr(c, 20)} is not within {tolerance} of an integer at {digits} digits"
                )
            coeffs.append(int(nearest))
        residual = resubstitution_residual(coeffs, roots)
        if residual >= mp.mpf(10) ** (-(digits // 2)):
            raise CertificationError(f"H_-{D}: re-substitution residual {mpmath.nstr(residual, 5)} too large")
    return coeffs


def resubstitution_residual(coeffs, roots):
    """max over roots of |H(j)| / sum |c_i| |j|^i, at the current precision."""
    worst = mp.mpf(0)
    for j in roots:
        value = mp.mpc(0)
        scale = mp.mpf(0)
        for c in coeffs:
            value = value * j + c
            scale = scale * abs(j) + abs(c)
        worst = max(worst, abs(value) / scale)
    return worst


def hilbert(D, policy=None, db=None):
    """
    Certified Hilbert class polynomial H_{-D}.

    Each coefficient must land within ``policy.tolerance`` of an integer; on
    failure the precision is doubled, up to ``policy.max_retries`` times, and a
    CertificationError is raised rather than rounding blindly.

    Args:
        D (int): Eligible discriminant.
        policy (PrecisionPolicy): Digits, tolerance and retry budget.
        db (DatabaseManager): Optional cache of certified polynomials.

    Returns:
        HilbertClassPolynomial: The rounded, certified polynomial.
    """
    policy = policy or PrecisionPolicy()
    if db is not None:
        cached = db.get_class_polynomial(D)
        if cached is not None:
            return HilbertClassPolynomial(D=D, coeffs=cached)
    forms = reduced_forms(D)
    digits = policy.digits or precision_estimate(D, forms)
    last_error = None
    for _ in range(policy.max_retries + 1):
        try:
            coeffs = _attempt(D, forms, digits, policy)
            break
        except CertificationError as exc:
            last_error = exc
            log.warning("%s; retrying with %d digits", exc, 2 * digits)
            digits *= 2
    else:
        raise CertificationError(f"H_-{D} not certified; try more than {digits // 2} digits") from last_error
    result = HilbertClassPolynomial(D=D, coeffs=coeffs, digits=digits)
    log.debug("H_-%d certified at %d digits (degree %d)", D, digits, result.degree)
    if db is not None:
        db.add_class_polynomial(D, coeffs, digits)
    return result


def stability_check(D, policy=None):
    """True iff doubling the working precision leaves every rounded coefficient unchanged."""
    policy = policy or PrecisionPolicy()
    base = hilbert(D, policy)
    doubled = hilbert(D, policy.model_copy(update={'digits': 2 * base.digits}))
    return base.coeffs == doubled.coeffs
