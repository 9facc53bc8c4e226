# quadforms/forms.py

from dataclasses import dataclass
from math import isqrt, log, pi, sqrt
from typing import NamedTuple

from mpmath import mp

from quadforms.kronecker import eligible
from utils.errors import IneligibleDiscriminantError


class QuadForm(NamedTuple):
    """Binary quadratic form a x^2 + b x y + c y^2."""

    a: int
    b: int
    c: int

    @property
    def discriminant(self):
        return self.b * self.b - 4 * self.a * self.c

    def is_positive_definite(self):
        return self.a > 0 and self.discriminant < 0

    def is_reduced(self):
        a, b, c = self
        if not (abs(b) <= a <= c):
            return False
        if (abs(b) == a or a == c) and b < 0:
            return False
        return True

    def heegner_point(self):
        return HeegnerPoint(b=self.b, a=self.a, D=-self.discriminant)

    def __repr__(self):
        return f"({self.a},{self.b},{self.c})"


@dataclass(frozen=True)
class HeegnerPoint:
    """tau_Q = (-b + i sqrt(D)) / (2a), the root of Q in the upper half-plane."""

    b: int
    a: int
    D: int

    @property
    def c(self):
        return (self.b * self.b + self.D) // (4 * self.a)

    def tau(self, digits=None):
        """The point as an mpmath complex; digits defaults to the current precision."""
        if digits is None:
            return mp.mpc(mp.mpf(-self.b), mp.sqrt(self.D)) / (2 * self.a)
        with mp.workdps(digits):
            return +(mp.mpc(mp.mpf(-self.b), mp.sqrt(self.D)) / (2 * self.a))

    def real(self, digits=None):
        return self.tau(digits).real

    def imag(self, digits=None):
        return self.tau(digits).imag

    def conjugate_partner(self):
        """Heegner point of the form (a, -b, c); its j-value is the complex conjugate."""
        return HeegnerPoint(b=-self.b, a=self.a, D=self.D)


def require_eligible(D):
    if not eligible(D):
        raise IneligibleDiscriminantError(f"{D} is not a square-free positive integer = 23 mod 24")


def reduced_forms(D):
    """
    All reduced positive-definite forms of discriminant -D.

    Enumerates odd b with 3b^2 <= D, splits (b^2 + D)/4 = ac with b <= a <= c
    and adds the mirror form (a, -b, c) when b < a < c.

    Parameters:
    - D: an eligible discriminant.

    Returns:
    - list of QuadForm, sorted by (a, |b|, -b).
    """
    require_eligible(D)
    forms = []
    b = 1
    while 3 * b * b <= D:
        N = (b * b + D) // 4
        for a in range(b, isqrt(N) + 1):
            if N % a:
                continue
            c = N // a
            forms.append(QuadForm(a, b, c))
            if b < a < c:
                forms.append(QuadForm(a, -b, c))
        b += 2
    forms.sort(key=lambda f: (f.a, abs(f.b), -f.b))
    return forms


def class_number(D):
    """h(-D) by counting reduced forms."""
    return len(reduced_forms(D))


def heegner_points(D):
    return [form.heegner_point() for form in reduced_forms(D)]


def classno_bound(D):
    """The bound sqrt(D) (log D + 2) / pi on h(-D)."""
    return sqrt(D) * (log(D) + 2) / pi
