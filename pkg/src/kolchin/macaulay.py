"""Minimizing coefficients, Macaulay constants and the Sit order.

Vectors are stored high index first, matching how they are usually
written: ``b = (b_d, ..., b_0)`` and ``c = (c_{d+1}, ..., c_1)``.  The
constant ``c_0`` is arbitrary in the closed formula and is never stored.
"""
from __future__ import annotations

import enum
from itertools import accumulate
from typing import Sequence

from .numpoly import NumPoly, shift

__all__ = [
    "Order",
    "minimizing_coefficients",
    "macaulay_constants",
    "constants_of",
    "reconstruct",
    "is_kolchin",
    "macaulay_nondecreasing",
    "sit_compare",
]


class Order(enum.Enum):
    LESS = "Less"
    EQUAL = "Equal"
    GREATER = "Greater"

    def __str__(self) -> str:
        return self.value


def minimizing_coefficients(p: NumPoly) -> tuple[int, ...]:
    """Sequence ``(b_d, ..., b_0)`` of minimizing coefficients of ``p``.

    For a constant this is ``(p,)``.  Otherwise, with leading standard
    coefficient ``a`` and degree ``d``, the leading entry is ``a`` and the
    tail is the minimizing sequence of

        v(s) = p(s+a) - C(s+d+1+a, d+1) + C(s+d+1, d+1),

    which has degree below ``d``, left-padded with zeros to length ``d``.

    >>> minimizing_coefficients(NumPoly.from_standard([2, 1]))  # 2s+3
    (2, 2)
    """
    out: list[int] = []
    width = p.degree + 1
    while p.degree > 0:
        d, a = p.degree, p.leading
        top = NumPoly.basis(d + 1)
        v = shift(p, a) - shift(top, a) + top
        assert v.degree < d
        out.append(a)
        out.extend([0] * (d - 1 - v.degree))
        p = v
    out.append(p.coeffs[0])
    assert len(out) == width
    return tuple(out)


def macaulay_constants(b: Sequence[int]) -> tuple[int, ...]:
    """Suffix sums ``c_i = b_{i-1} + ... + b_d`` listed ``(c_{d+1}, ..., c_1)``."""
    return tuple(accumulate(b))


def constants_of(p: NumPoly) -> tuple[int, ...]:
    return macaulay_constants(minimizing_coefficients(p))


def reconstruct(c: Sequence[int]) -> NumPoly:
    """Rebuild the polynomial from its constants ``(c_{d+1}, ..., c_1)``.

    ``p(s) = C(s+d+1, d+1) - 1 - sum_{i=1}^{d+1} C(s+i-1-c_i, i)``; the
    ``i = 0`` term is 1 whatever ``c_0`` is.
    """
    if not c:
        raise ValueError("need at least one Macaulay constant")
    d = len(c) - 1
    result = NumPoly.basis(d + 1) - NumPoly.constant(1)
    # c[0] is c_{d+1}, c[-1] is c_1
    for pos, ci in enumerate(c):
        i = d + 1 - pos
        result = result - shift(NumPoly.basis(i), -1 - ci)
    return result


def is_kolchin(p: NumPoly) -> bool:
    """True iff ``p`` is the dimension polynomial of some lattice set."""
    return all(x >= 0 for x in minimizing_coefficients(p))


def macaulay_nondecreasing(p: NumPoly) -> bool:
    """``0 <= c_{d+1} <= c_d <= ... <= c_1``."""
    c = (0,) + constants_of(p)
    return all(x <= y for x, y in zip(c, c[1:]))


def sit_compare(p: NumPoly, q: NumPoly) -> Order:
    """Lexicographic comparison of zero-left-padded minimizing sequences."""
    bp = minimizing_coefficients(p)
    bq = minimizing_coefficients(q)
    n = max(len(bp), len(bq))
    bp = (0,) * (n - len(bp)) + bp
    bq = (0,) * (n - len(bq)) + bq
    if bp < bq:
        return Order.LESS
    if bp > bq:
        return Order.GREATER
    return Order.EQUAL
