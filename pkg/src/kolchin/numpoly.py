"""Numerical polynomials in the binomial basis C(s+i, i).

Every polynomial taking integer values at integer points is uniquely
``sum(a[i] * C(s+i, i))`` with integer ``a[i]``.  All arithmetic here stays
in that basis, so nothing ever leaves the integers.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "NumPoly",
    "binom_eval",
    "evaluate",
    "shift",
    "nabla",
    "from_samples",
]


def binom_eval(n: int, k: int) -> int:
    """Binomial coefficient extended to any integer ``n`` by the falling factorial.

    ``n (n-1) ... (n-k+1) / k!``.  Agrees with the factorial formula for
    ``n >= k >= 0`` and vanishes for ``0 <= n < k``.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    num = 1
    den = 1
    for i in range(k):
        num *= n - i
        den *= i + 1
    return num // den


@dataclass(frozen=True)
class NumPoly:
    """Numerical polynomial stored by its standard coefficients.

    ``coeffs[i]`` is the coefficient of ``C(s+i, i)`` (lowest index first).
    The stored tuple is canonical: either ``(0,)`` or its last entry is
    non-zero.  Use :meth:`from_standard` to build from the conventional
    high-to-low display order ``(a_d, ..., a_0)``.
    """

    coeffs: tuple[int, ...] = (0,)

    def __post_init__(self) -> None:
        c = [int(x) for x in self.coeffs]
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        if not c:
            c = [0]
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def from_standard(cls, standard: Iterable[int]) -> NumPoly:
        """Build from standard coefficients listed ``a_d, ..., a_0``."""
        return cls(tuple(reversed(tuple(standard))))

    @classmethod
    def basis(cls, i: int) -> NumPoly:
        """The basis element ``C(s+i, i)``."""
        return cls((0,) * i + (1,))

    @classmethod
    def constant(cls, c: int) -> NumPoly:
        return cls((c,))

    @property
    def degree(self) -> int:
        # the zero polynomial reports degree 0
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1]

    @property
    def standard(self) -> tuple[int, ...]:
        """Standard coefficients in display order ``(a_d, ..., a_0)``."""
        return tuple(reversed(self.coeffs))

    def is_zero(self) -> bool:
        return self.coeffs == (0,)

    def __call__(self, s: int) -> int:
        return evaluate(self, s)

    def __add__(self, other: NumPoly) -> NumPoly:
        if not isinstance(other, NumPoly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return NumPoly(tuple(x + y for x, y in zip(a, b)))

    def __neg__(self) -> NumPoly:
        return NumPoly(tuple(-x for x in self.coeffs))

    def __sub__(self, other: NumPoly) -> NumPoly:
        if not isinstance(other, NumPoly):
            return NotImplemented
        return self + (-other)

    def scale(self, k: int) -> NumPoly:
        return NumPoly(tuple(k * x for x in self.coeffs))

    def shift(self, a: int) -> NumPoly:
        return shift(self, a)

    def nabla(self) -> NumPoly:
        return nabla(self)

    def power_coefficients(self) -> list[Fraction]:
        """Rational coefficients in the monomial basis, constant term first.

        Display only; no arithmetic in this basis is offered.
        """
        out = [Fraction(0)] * len(self.coeffs)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            # C(s+i, i) = prod_{j=1..i} (s+j) / i!
            prod = [Fraction(1)]
            for j in range(1, i + 1):
                nxt = [Fraction(0)] * (len(prod) + 1)
                for k, c in enumerate(prod):
                    nxt[k] += c * j
                    nxt[k + 1] += c
                prod = nxt
            fact = 1
            for j in range(2, i + 1):
                fact *= j
            for k, c in enumerate(prod):
                out[k] += a * c / fact
        return out

    def power_form(self, var: str = "s") -> str:
        """Human-readable monomial form, e.g. ``2*s + 3``."""
        terms = []
        for k, c in reversed(list(enumerate(self.power_coefficients()))):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            return "0"
        sign, body = terms[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self) -> str:
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            a = self.coeffs[i]
            if a == 0:
                continue
            if i == 0:
                body = str(abs(a))
            else:
                b = f"C(s+{i},{i})"
                body = b if abs(a) == 1 else f"{abs(a)}·{b}"
            terms.append(("-" if a < 0 else "+", body))
        if not terms:
            return "0"
        sign, body = terms[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


ZERO = NumPoly((0,))


def evaluate(p: NumPoly, s: int) -> int:
    """Exact value of ``p`` at the integer ``s``."""
    total = 0
    # C(s+i, i) built incrementally: C(s+i, i) = C(s+i-1, i-1) * (s+i) / i
    b = 1
    for i, a in enumerate(p.coeffs):
        if i > 0:
            b = b * (s + i) // i
        total += a * b
    return total


def shift(p: NumPoly, a: int) -> NumPoly:
    """Translate the argument: the result evaluates to ``p(s + a)``.

    Shifting by +1 replaces the coefficients by their suffix sums
    (hockey stick), and -1 by adjacent differences.  The ``a``-fold
    composite has the closed form
    ``a'_j = sum_k C(k+a-1, k) * a_{j+k}``, valid for negative ``a`` too.
    """
    if a == 0:
        return p
    c = p.coeffs
    n = len(c)
    weights = [binom_eval(k + a - 1, k) for k in range(n)]
    return NumPoly(tuple(
        sum(weights[k] * c[j + k] for k in range(n - j)) for j in range(n)
    ))


def nabla(p: NumPoly) -> NumPoly:
    """Backward difference ``p(s) - p(s-1)``; lowers every basis index by one."""
    if len(p.coeffs) == 1:
        return ZERO
    return NumPoly(p.coeffs[1:])


def from_samples(base: int, values: Sequence[int]) -> NumPoly:
    """Interpolate integer samples taken at ``base, base+1, ...``.

    Forward differences give the Newton form ``sum D_i * C(s-base, i)``;
    each ``C(s-base, i)`` is the basis element ``C(s+i, i)`` shifted by
    ``-base-i``.  The caller is responsible for checking that the data
    really has degree below ``len(values)``.
    """
    if not values:
        raise ValueError("need at least one sample")
    diffs = []
    row = [int(v) for v in values]
    while row:
        diffs.append(row[0])
        row = [y - x for x, y in zip(row, row[1:])]
    result = ZERO
    for i, d in enumerate(diffs):
        if d:
            result = result + shift(NumPoly.basis(i), -base - i).scale(d)
    return result
