# quadforms/kronecker.py

from functools import lru_cache

import numpy as np
from sympy import factorint
from sympy.ntheory import jacobi_symbol


def kronecker(d, n):
    """
    Kronecker symbol (d/n) for arbitrary integers.

    Conventions: (d/0) = 1 if |d| = 1 else 0; (d/-1) = -1 for d < 0;
    (d/2) = 0 for even d, +1 for d = +-1 mod 8, -1 for d = +-3 mod 8.
    """
    if n == 0:
        return 1 if abs(d) == 1 else 0
    result = 1
    if n < 0:
        n = -n
        if d < 0:
            result = -result
    twos = 0
    while n % 2 == 0:
        n //= 2
        twos += 1
    if twos:
        if d % 2 == 0:
            return 0
        if twos % 2 and d % 8 in (3, 5):
            result = -result
    if n == 1:
        return result
    return result * int(jacobi_symbol(d % n, n))


@lru_cache(maxsize=1024)
def _table(d, period):
    table = np.array([kronecker(d, r) for r in range(period)], dtype=np.int8)
    table.setflags(write=False)
    return table


def character_table(d):
    """Values of the character n -> (d/n) for n = 0..|d|-1; periodic modulo |d| for fundamental d."""
    return _table(d, abs(d))


def character_values(d, stop):
    """(d/n) for n = 0..stop-1 as an int8 array, tiled from the period table."""
    table = character_table(d)
    reps = -(-stop // len(table))
    return np.tile(table, reps)[:stop]


def chi12(m):
    return kronecker(12, m)


def chi_minus12(m):
    return kronecker(-12, m)


def is_squarefree(n):
    return n > 0 and all(e == 1 for e in factorint(n).values())


def eligible(D):
    """True iff D > 0, D = 23 mod 24 and D is square-free."""
    return D > 0 and D % 24 == 23 and is_squarefree(D)
