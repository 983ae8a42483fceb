# This file is part of hkstars: exact star counting for independent sets
# Use of this file is governed by the license in LICENSE.txt.

"""Exact arithmetic on count vectors

A count vector ``c`` is a tuple of Python integers where ``c[k]`` is the
number of independent sets of size ``k`` in some scope. Equivalently it is
the coefficient list of an independence polynomial, so sums of scopes are
coefficient-wise sums and products of disjoint scopes are convolutions.
Python integers never overflow, so all results are exact.

Vectors are kept *trimmed*: no trailing zeros, except that the zero vector
is ``()``.

"""

from math import comb
from typing import Iterable, Optional, Tuple

CountVector = Tuple[int, ...]

ONE = (1,)  # type: CountVector


def trim(vec: Iterable[int]) -> CountVector:
    """Drop trailing zero coefficients

    >>> trim([1, 2, 0, 0])
    (1, 2)
    >>> trim([0, 0])
    ()

    Args:
        vec: Coefficients, lowest degree first

    Returns: The trimmed count vector

    """
    coeffs = list(vec)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def add(a: CountVector, b: CountVector) -> CountVector:
    """Coefficient-wise sum

    >>> add((1, 2), (1, 1, 1))
    (2, 3, 1)

    """
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, coeff in enumerate(b):
        out[i] += coeff
    return trim(out)


def multiply(a: CountVector, b: CountVector,
             k_max: Optional[int] = None) -> CountVector:
    """Convolve two count vectors, optionally truncated

    Truncation at ``k_max`` drops coefficients of degree above ``k_max``.
    It never changes the coefficients that are kept.

    >>> multiply((1, 1), (1, 1))
    (1, 2, 1)
    >>> multiply((1, 2, 1), (1, 2, 1), k_max=2)
    (1, 4, 6)

    Args:
        a: One factor
        b: The other factor
        k_max: Largest degree to keep, or ``None`` for the full product

    Returns: The (truncated) product

    """
    if not a or not b:
        return ()
    length = len(a) + len(b) - 1
    if k_max is not None:
        length = min(length, k_max + 1)
    out = [0] * length
    for i, a_i in enumerate(a):
        if i >= length:
            break
        if a_i == 0:
            continue
        for j in range(min(len(b), length - i)):
            out[i + j] += a_i * b[j]
    return trim(out)


def product(vectors: Iterable[CountVector],
            k_max: Optional[int] = None) -> CountVector:
    """Multiply many count vectors together

    The empty product is :py:const:`ONE`.

    >>> product([(1, 1)] * 3)
    (1, 3, 3, 1)

    """
    result = ONE
    for vec in vectors:
        result = multiply(result, vec, k_max)
    return result


def shift(vec: CountVector, k_max: Optional[int] = None) -> CountVector:
    """Multiply by ``x``: every set gains one fixed vertex

    >>> shift((1, 2, 1))
    (0, 1, 2, 1)
    >>> shift(())
    ()

    """
    if not vec:
        return ()
    out = (0,) + vec
    if k_max is not None:
        out = out[:k_max + 1]
    return trim(out)


def binomial(n: int) -> CountVector:
    """Count vector of the edgeless graph on ``n`` vertices

    >>> binomial(4)
    (1, 4, 6, 4, 1)

    """
    return tuple(comb(n, k) for k in range(n + 1))


def pad(vec: CountVector, length: int) -> CountVector:
    """Extend with zeros (or cut) to exactly ``length`` coefficients

    >>> pad((1, 2), 4)
    (1, 2, 0, 0)

    """
    return tuple(vec[:length]) + (0,) * max(0, length - len(vec))


def coefficient(vec: CountVector, k: int) -> int:
    """Coefficient of degree ``k``, zero when past the end

    >>> coefficient((1, 3), 5)
    0

    """
    if 0 <= k < len(vec):
        return vec[k]
    return 0
