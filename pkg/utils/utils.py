# utils/utils.py

import time
from contextlib import contextmanager


def k_of(D):
    """Return k with D = 24k - 1."""
    return (D + 1) // 24


def d_of(k):
    """Return the discriminant D = 24k - 1."""
    return 24 * k - 1


def format_coefficients(coeffs, start=0):
    """
    Render coefficients as ``n<TAB>c`` lines.

    Args:
        coeffs (iterable): Coefficients in index order.
        start (int): Index of the first coefficient.

    Returns:
        str: One line per coefficient.
    """
    return '\n'.join(f"{start + i}\t{int(c)}" for i, c in enumerate(coeffs))


@contextmanager
def timed(logger, label):
    """Log the wall-clock time of a block at INFO level."""
    start = time.perf_counter()
    logger.info("%s: started", label)
    try:
        yield
    finally:
        logger.info("%s: finished in %.2fs", label, time.perf_counter() - start)
