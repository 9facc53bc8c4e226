# borcherds/quad_irrational.py

from dataclasses import dataclass
from fractions import Fraction

from series import ExactLaurentSeries
from utils.errors import InconsistencyError


@dataclass(frozen=True)
class QuadIrrational:
    """u + v * i sqrt(D) with rational u and v; D is fixed by the enclosing series."""

    u: Fraction = Fraction(0)
    v: Fraction = Fraction(0)

    def __add__(self, other):
        return QuadIrrational(self.u + other.u, self.v + other.v)

    def __neg__(self):
        return QuadIrrational(-self.u, -self.v)

    def __mul__(self, c):
        c = Fraction(c)
        return QuadIrrational(self.u * c, self.v * c)

    __rmul__ = __mul__

    def is_zero(self):
        return self.u == 0 and self.v == 0

    def is_pure_imaginary(self):
        return self.u == 0

    def divide_by_root(self):
        """(u + v i sqrt(D)) / (i sqrt(D)), defined here only when u = 0."""
        if self.u:
            raise InconsistencyError(f"rational part {self.u} survives division by i sqrt(D)")
        return self.v


ZERO = QuadIrrational()


class BorcherdsLogSeries:
    """
    A q-series with QuadIrrational coefficients, known to O(q^prec).

    Used for log Psi_D; the constant term is always zero.
    """

    def __init__(self, D, coeffs, prec):
        self.D = D
        self.prec = prec
        self.coeffs = list(coeffs) + [ZERO] * (prec - len(coeffs))

    def coefficient(self, n):
        if n >= self.prec:
            raise IndexError(f"q^{n} beyond O(q^{self.prec})")
        return self.coeffs[n] if n >= 0 else ZERO

    def __add__(self, other):
        if other.D != self.D:
            raise ValueError("log series for different discriminants")
        prec = min(self.prec, other.prec)
        return BorcherdsLogSeries(self.D, [a + b for a, b in zip(self.coeffs[:prec], other.coeffs[:prec])], prec)

    def __mul__(self, c):
        return BorcherdsLogSeries(self.D, [x * c for x in self.coeffs], self.prec)

    __rmul__ = __mul__

    def is_purely_imaginary(self):
        return all(c.is_pure_imaginary() for c in self.coeffs)

    def theta(self):
        """Apply q d/dq."""
        return BorcherdsLogSeries(self.D, [c * n for n, c in enumerate(self.coeffs)], self.prec)

    def over_root(self):
        """Divide every coefficient by i sqrt(D); the result must have integer coefficients."""
        values = []
        for n, c in enumerate(self.coeffs):
            value = c.divide_by_root()
            if value.denominator != 1:
                raise InconsistencyError(f"coefficient of q^{n} is {value}, not an integer (D = {self.D})")
            values.append(int(value))
        return ExactLaurentSeries(values, 0, self.prec)
