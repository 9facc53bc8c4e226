# linalg/howell.py

from collections import deque
from itertools import product

import numpy as np

MODULUS = 4
# unit -> inverse modulo 4
_UNIT_INVERSE = {1: 1, 3: 3}


def as_mod4(M):
    """Copy of M as a 2-D int64 array with entries in 0..3."""
    A = np.array(M, dtype=np.int64)
    if A.ndim == 1:
        A = A.reshape(1, -1)
    if A.ndim != 2:
        raise ValueError("expected a matrix")
    return A & 3


def howell(M):
    """
    Howell normal form of M over Z/4.

    Pivots are 1 or 2; entries above a pivot p are reduced into [0, p); for
    every pivot-2 row r, the row 2r (zero in the pivot column) is fed back to
    the remaining rows so that the form also spans the 2-torsion.

    Parameters:
    - M: matrix with integer entries (reduced mod 4).

    Returns:
    - numpy int64 array whose nonzero rows are the Howell form, zero rows dropped.
    """
    A = as_mod4(M)
    rows = [r for r in A if r.any()]
    ncols = A.shape[1]
    done = []
    for j in range(ncols):
        if not rows:
            break
        unit = next((i for i, r in enumerate(rows) if r[j] & 1), None)
        if unit is not None:
            pivot = rows.pop(unit)
            pivot = (pivot * _UNIT_INVERSE[int(pivot[j])]) & 3
            rows = [(r - r[j] * pivot) & 3 for r in rows]
            done = [(r - r[j] * pivot) & 3 for r in done]
        else:
            two = next((i for i, r in enumerate(rows) if r[j] == 2), None)
            if two is None:
                continue
            pivot = rows.pop(two)
            rows = [(r - pivot) & 3 if r[j] == 2 else r for r in rows]
            done = [(r - (r[j] // 2) * pivot) & 3 for r in done]
            rows.append((2 * pivot) & 3)
        rows = [r for r in rows if r.any()]
        done.append(pivot)
    if not done:
        return np.zeros((0, ncols), dtype=np.int64)
    return np.array(done, dtype=np.int64)


def kernel(M):
    """
    Generators of {v : M v = 0 mod 4}, canonicalised.

    Computed from the Howell form of [M^T | I]: rows vanishing on the M^T part
    carry kernel vectors. The generators are then put in Howell form with the
    column order reversed, so each has a distinct last nonzero index, and sorted
    by that index and lexicographically.

    Returns:
        list[tuple[int, ...]]: Nonzero generators.
    """
    A = as_mod4(M)
    nrows, ncols = A.shape
    augmented = np.hstack([A.T, np.eye(ncols, dtype=np.int64)])
    H = howell(augmented)
    gens = [row[nrows:] for row in H if not row[:nrows].any()]
    return canonical_generators(gens, ncols)


def canonical_generators(gens, ncols):
    """Reversed-column Howell form of a generating set, sorted by last nonzero index then lex."""
    if not len(gens):
        return []
    reduced = howell(np.array(gens, dtype=np.int64)[:, ::-1])[:, ::-1]
    vectors = [tuple(int(x) for x in row) for row in reduced if row.any()]
    return sorted(vectors, key=lambda v: (last_nonzero(v), v))


def last_nonzero(v):
    for i in range(len(v) - 1, -1, -1):
        if v[i]:
            return i
    return -1


def annihilates(M, v, modulus=MODULUS):
    """True iff M v = 0 mod ``modulus``."""
    return not ((as_mod4(M) @ np.asarray(v, dtype=np.int64)) % modulus).any()


def brute_kernel(M):
    """Every v in (Z/4)^n with M v = 0, by enumeration; for small n only."""
    A = as_mod4(M)
    ncols = A.shape[1]
    if ncols > 8:
        raise ValueError("brute-force kernel is limited to 8 columns")
    vectors = np.array(list(product(range(MODULUS), repeat=ncols)), dtype=np.int64).reshape(-1, ncols)
    ok = ~((A @ vectors.T) % MODULUS).any(axis=0)
    return {tuple(int(x) for x in v) for v in vectors[ok]}


def span(gens, ncols):
    """The Z/4-submodule generated by ``gens``, as a set of tuples."""
    zero = (0,) * ncols
    seen = {zero}
    queue = deque([zero])
    gens = [np.asarray(g, dtype=np.int64) for g in gens]
    while queue:
        v = np.asarray(queue.popleft(), dtype=np.int64)
        for g in gens:
            w = tuple(int(x) for x in (v + g) & 3)
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen
