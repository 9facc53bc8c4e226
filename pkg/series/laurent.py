# series/laurent.py

from fractions import Fraction
from numbers import Integral

import numpy as np

from utils.errors import DomainMismatchError, NotAUnitError, PrecisionError


def _pack(values):
    """Pack residues in {0,1,2,3} four to a byte."""
    n = len(values)
    padded = np.zeros(-(-n // 4) * 4, dtype=np.uint8)
    padded[:n] = values
    quads = padded.reshape(-1, 4)
    return quads[:, 0] | (quads[:, 1] << 2) | (quads[:, 2] << 4) | (quads[:, 3] << 6)


def _unpack(packed, n):
    out = np.empty(len(packed) * 4, dtype=np.uint8)
    out[0::4] = packed & 3
    out[1::4] = (packed >> 2) & 3
    out[2::4] = (packed >> 4) & 3
    out[3::4] = (packed >> 6) & 3
    return out[:n]


def _convolve_exact(a, b, n):
    out = [0] * n
    b = b[:n]
    for i, ai in enumerate(a[:n]):
        if ai:
            for j, bj in enumerate(b[:n - i]):
                if bj:
                    out[i + j] += ai * bj
    return out


class _LaurentSeries:
    """Shape bookkeeping shared by both coefficient domains.

    A series is ``sum(c_i q^(valuation + i)) + O(q^prec)``; indices below the
    valuation are known zeros, indices at or above ``prec`` are unknown.
    """

    domain = None

    @property
    def length(self):
        return self.prec - self.valuation

    def _check_domain(self, other):
        if not isinstance(other, _LaurentSeries) or other.domain != self.domain:
            other_domain = getattr(other, 'domain', type(other).__name__)
            raise DomainMismatchError(f"cannot combine {self.domain} series with {other_domain}")

    def coefficient(self, n):
        if n >= self.prec:
            raise PrecisionError(f"coefficient of q^{n} requested from a series known to O(q^{self.prec})")
        if n < self.valuation:
            return 0
        return self._raw(n - self.valuation)

    def __getitem__(self, n):
        return self.coefficient(n)

    def order(self):
        """Exponent of the first nonzero coefficient, or ``prec`` when none is known."""
        for i, c in enumerate(self.coefficients()):
            if c:
                return self.valuation + i
        return self.prec

    def is_zero(self):
        return self.order() >= self.prec

    def __eq__(self, other):
        if not isinstance(other, _LaurentSeries):
            return NotImplemented
        if other.domain != self.domain:
            return False
        top = min(self.prec, other.prec)
        start = min(self.valuation, other.valuation)
        return all(self.coefficient(n) == other.coefficient(n) for n in range(start, top))

    __hash__ = None

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.values()):
            if not c:
                continue
            n = self.valuation + i
            if n == 0:
                terms.append(f"{c}")
            elif n == 1:
                terms.append(f"{c}*q")
            else:
                terms.append(f"{c}*q^{n}")
            if len(terms) == 8:
                terms.append('...')
                break
        terms.append(f"O(q^{self.prec})")
        return ' + '.join(terms) + f" [{self.domain}]"

    # Operations that only move coefficients around are written once here and
    # rebuilt through ``_like``.

    def truncate(self, prec):
        prec = min(prec, self.prec)
        if prec <= self.valuation:
            return self._like([], prec, prec)
        return self._like(self.coefficients()[:prec - self.valuation], self.valuation, prec)

    def shift(self, k):
        """Multiply by q^k."""
        return self._like(self.coefficients(), self.valuation + k, self.prec + k)

    def normalized(self):
        """Drop leading zero coefficients, raising the valuation."""
        start = self.order()
        return self._like(self.coefficients()[start - self.valuation:], start, self.prec)

    def substitute_power(self, k):
        """The series in q^k; k >= 1."""
        if k < 1:
            raise ValueError("substitution exponent must be positive")
        source = self.values()
        out = self._zeros(k * self.length)
        for i, c in enumerate(source):
            out[k * i] = c
        return self._like(out, k * self.valuation, k * self.prec)

    def negate_q(self):
        """The series in -q."""
        out = self.values()
        for i in range(len(out)):
            if (self.valuation + i) % 2:
                out[i] = -out[i]
        return self._like(out, self.valuation, self.prec)

    def theta(self):
        """Apply q d/dq."""
        return self._like(
            [(self.valuation + i) * c for i, c in enumerate(self.values())],
            self.valuation, self.prec,
        )

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __radd__(self, other):
        return self + other

    def __rmul__(self, other):
        return self * other

    def __add__(self, other):
        if isinstance(other, Integral) or (self.domain == 'exact' and isinstance(other, Fraction)):
            other = self.constant(other, max(self.prec, 1))
        self._check_domain(other)
        v = min(self.valuation, other.valuation)
        p = min(self.prec, other.prec)
        out = self._zeros(p - v)
        for s in (self, other):
            coeffs = s.coefficients()
            lo = s.valuation - v
            hi = min(s.prec, p) - v
            if hi > lo:
                out[lo:hi] = self._add_arrays(out[lo:hi], coeffs[:hi - lo])
        return self._like(out, v, p)

    def __mul__(self, other):
        if isinstance(other, Integral) or (self.domain == 'exact' and isinstance(other, Fraction)):
            return self._scale(other)
        self._check_domain(other)
        v = self.valuation + other.valuation
        p = min(self.valuation + other.prec, other.valuation + self.prec)
        n = p - v
        if n <= 0:
            return self._like([], p, p)
        return self._like(self._convolve(self.coefficients(), other.coefficients(), n), v, p)

    def __pow__(self, e):
        if not isinstance(e, Integral) or e < 0:
            raise ValueError("only nonnegative integer exponents are supported")
        result = self.constant(1, self.length)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def inverse(self):
        a = self.normalized()
        if a.length <= 0:
            raise NotAUnitError("series has no known nonzero coefficient")
        lead = a.coefficients()[0]
        if not self._is_unit(lead):
            raise NotAUnitError(f"leading coefficient {lead} is not a unit in {self.domain}")
        coeffs = self._invert_unit(a.coefficients())
        return self._like(coeffs, -a.valuation, -a.valuation + a.length)


class Mod4LaurentSeries(_LaurentSeries):
    """Truncated Laurent series over Z/4 (or Z/2), coefficients packed two bits each."""

    def __init__(self, coeffs, valuation=0, prec=None, modulus=4):
        if modulus not in (2, 4):
            raise ValueError("modulus must be 2 or 4")
        values = np.asarray(coeffs, dtype=np.int64) if len(coeffs) else np.zeros(0, dtype=np.int64)
        values = np.mod(values, modulus).astype(np.uint8)
        if prec is None:
            prec = valuation + len(values)
        if prec < valuation:
            raise ValueError(f"precision {prec} below valuation {valuation}")
        n = prec - valuation
        if len(values) > n:
            values = values[:n]
        elif len(values) < n:
            values = np.concatenate([values, np.zeros(n - len(values), dtype=np.uint8)])
        self.modulus = modulus
        self.valuation = int(valuation)
        self.prec = int(prec)
        self._packed = _pack(values)
        self._cache = None

    @property
    def domain(self):
        return 'mod4' if self.modulus == 4 else 'mod2'

    @classmethod
    def constant_series(cls, c, prec, modulus=4):
        if prec <= 0:
            return cls([], prec, prec, modulus)
        return cls([c], 0, prec, modulus)

    @classmethod
    def monomial(cls, n, prec, c=1, modulus=4):
        if prec <= n:
            return cls([], prec, prec, modulus)
        return cls([c], n, prec, modulus)

    def constant(self, c, prec):
        return Mod4LaurentSeries.constant_series(c, prec, self.modulus)

    def coefficients(self):
        if self._cache is None:
            self._cache = _unpack(self._packed, self.length)
        return self._cache

    def nbytes(self):
        return self._packed.nbytes

    def values(self):
        return self.coefficients().tolist()

    def _raw(self, i):
        return int(self.coefficients()[i])

    def _like(self, coeffs, valuation, prec):
        return Mod4LaurentSeries(coeffs, valuation, prec, self.modulus)

    def _zeros(self, n):
        return np.zeros(n, dtype=np.int64)

    def _add_arrays(self, a, b):
        return a + b

    def _scale(self, c):
        return self._like(self.coefficients().astype(np.int64) * (int(c) % self.modulus), self.valuation, self.prec)

    def _convolve(self, a, b, n):
        full = np.convolve(a[:n].astype(np.int64), b[:n].astype(np.int64))
        return full[:n] & (self.modulus - 1)

    def _is_unit(self, c):
        return int(c) % 2 == 1

    def _invert_unit(self, a):
        mask = self.modulus - 1
        n_total = len(a)
        a = a.astype(np.int64)
        # odd residues are self-inverse modulo 4
        b = np.array([int(a[0])], dtype=np.int64)
        n = 1
        while n < n_total:
            n = min(2 * n, n_total)
            e = np.convolve(a[:n], b)[:n] & mask
            t = (-e) & mask
            t[0] = (t[0] + 2) & mask
            b = np.convolve(b, t)[:n] & mask
        return b

    def lift(self):
        """Integer series with the representatives 0..3."""
        return ExactLaurentSeries([int(c) for c in self.coefficients()], self.valuation, self.prec)

    def reduce(self, modulus):
        if modulus == self.modulus:
            return self
        if modulus != 2:
            raise DomainMismatchError("a mod-2 series cannot be lifted to mod 4")
        return Mod4LaurentSeries(self.coefficients(), self.valuation, self.prec, 2)

    def halve(self):
        """Divide a series with even coefficients by 2, landing in Z/2."""
        coeffs = self.coefficients()
        if self.modulus != 4 or np.any(coeffs & 1):
            raise NotAUnitError("series is not divisible by 2")
        return Mod4LaurentSeries(coeffs >> 1, self.valuation, self.prec, 2)


class ExactLaurentSeries(_LaurentSeries):
    """Truncated Laurent series with Python integer or Fraction coefficients."""

    domain = 'exact'

    def __init__(self, coeffs, valuation=0, prec=None):
        values = list(coeffs)
        if prec is None:
            prec = valuation + len(values)
        if prec < valuation:
            raise ValueError(f"precision {prec} below valuation {valuation}")
        n = prec - valuation
        if len(values) > n:
            values = values[:n]
        elif len(values) < n:
            values.extend([0] * (n - len(values)))
        self.valuation = int(valuation)
        self.prec = int(prec)
        self._coeffs = [_canonical(c) for c in values]

    @classmethod
    def constant_series(cls, c, prec):
        if prec <= 0:
            return cls([], prec, prec)
        return cls([c], 0, prec)

    @classmethod
    def monomial(cls, n, prec, c=1):
        if prec <= n:
            return cls([], prec, prec)
        return cls([c], n, prec)

    def constant(self, c, prec):
        return ExactLaurentSeries.constant_series(c, prec)

    def coefficients(self):
        return self._coeffs

    def values(self):
        return list(self._coeffs)

    def _raw(self, i):
        return self._coeffs[i]

    def _like(self, coeffs, valuation, prec):
        return ExactLaurentSeries(coeffs, valuation, prec)

    def _zeros(self, n):
        return [0] * n

    def _add_arrays(self, a, b):
        return [x + y for x, y in zip(a, b)]

    def _scale(self, c):
        return self._like([c * x for x in self._coeffs], self.valuation, self.prec)

    def _convolve(self, a, b, n):
        return _convolve_exact(a, b, n)

    def _is_unit(self, c):
        return c != 0

    def _invert_unit(self, a):
        lead = a[0]
        inv_lead = lead if lead in (1, -1) else Fraction(1, 1) / lead
        b = [inv_lead]
        for n in range(1, len(a)):
            acc = 0
            for k in range(1, n + 1):
                if a[k]:
                    acc += a[k] * b[n - k]
            b.append(_canonical(-acc * inv_lead))
        return b

    def is_integral(self):
        return all(isinstance(c, int) for c in self._coeffs)

    def reduce(self, modulus=4):
        """Reduce integer coefficients modulo 2 or 4."""
        if not self.is_integral():
            raise DomainMismatchError("only integer series reduce to Z/4")
        return Mod4LaurentSeries([c % modulus for c in self._coeffs], self.valuation, self.prec, modulus)

    def exact_quotient(self, other):
        """Exact division, valid when the result has integer coefficients."""
        return self * other.inverse()


def _canonical(c):
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, (np.integer,)):
        return int(c)
    return c


def mul(a, b):
    return a * b


def inv(a):
    return a.inverse()


def power(a, e):
    return a ** e


def coefficient(s, n):
    return s.coefficient(n)


def substitute_poly(coeffs, s):
    """
    Evaluate an integer polynomial at a series by Horner's rule.

    Parameters:
    - coeffs: polynomial coefficients, leading coefficient first.
    - s: series to substitute; any valuation.

    Returns:
    - the series H(s), in the domain of s.
    """
    coeffs = [int(c) for c in coeffs]
    while len(coeffs) > 1 and coeffs[0] == 0:
        coeffs = coeffs[1:]
    if not coeffs:
        return s.constant(0, max(s.prec, 1))
    if len(coeffs) == 1:
        return s.constant(coeffs[0], max(s.prec, 1))
    result = s * coeffs[0] + coeffs[1]
    for c in coeffs[2:]:
        result = result * s + c
    return result
