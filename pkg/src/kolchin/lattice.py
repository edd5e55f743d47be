"""Finite subsets of N_0^m and their Kolchin dimension polynomials.

``count_free_points`` is the brute-force ground truth: the number of
points of order at most ``s`` that dominate no element of ``E``.  Three
independent routes turn ``E`` into a :class:`NumPoly`:

* :func:`dimension_polynomial` interpolates oracle counts,
* :func:`dimension_polynomial_rec` splits on a unit-vector pivot,
* :func:`dimension_polynomial_ie` runs inclusion-exclusion over generators.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from itertools import accumulate
from typing import Iterable, Iterator, Sequence

from .errors import InputError, OracleBudgetExceeded, SubsetBlowup, VerificationMismatch
from .numpoly import NumPoly, binom_eval, from_samples, shift

__all__ = [
    "DEFAULT_BUDGET",
    "MAX_IE_ROWS",
    "ExponentSet",
    "order",
    "dominates",
    "minimal_elements",
    "colon",
    "count_free_points",
    "count_table",
    "stabilization_bound",
    "dimension_polynomial",
    "dimension_polynomial_rec",
    "dimension_polynomial_ie",
]

DEFAULT_BUDGET = 10**8
MAX_IE_ROWS = 20
HELD_OUT = 3

Point = tuple[int, ...]


def order(x: Sequence[int]) -> int:
    return sum(x)


def dominates(x: Sequence[int], e: Sequence[int]) -> bool:
    """``e <= x`` componentwise."""
    return all(a >= b for a, b in zip(x, e))


@dataclass(frozen=True)
class ExponentSet:
    """A finite set of points in N_0^m, kept as a sorted tuple of rows."""

    m: int
    rows: tuple[Point, ...] = ()

    def __post_init__(self) -> None:
        if self.m < 0:
            raise InputError(f"dimension must be non-negative, got {self.m}")
        rows = []
        for r in self.rows:
            r = tuple(int(x) for x in r)
            if len(r) != self.m:
                raise InputError(f"row {r} does not have {self.m} coordinates")
            if any(x < 0 for x in r):
                raise InputError(f"row {r} has a negative exponent")
            rows.append(r)
        object.__setattr__(self, "rows", tuple(sorted(set(rows))))

    @classmethod
    def of(cls, rows: Iterable[Sequence[int]], m: int | None = None) -> ExponentSet:
        rows = [tuple(r) for r in rows]
        if m is None:
            if not rows:
                raise InputError("cannot infer the dimension of an empty set")
            m = len(rows[0])
        return cls(m, tuple(rows))

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self) -> Iterator[Point]:
        return iter(self.rows)

    def with_point(self, e: Sequence[int]) -> ExponentSet:
        return ExponentSet(self.m, self.rows + (tuple(e),))

    def permute_coordinates(self, perm: Sequence[int]) -> ExponentSet:
        return ExponentSet(self.m, tuple(tuple(r[k] for k in perm) for r in self.rows))


def minimal_elements(E: ExponentSet) -> ExponentSet:
    """The antichain of minimal rows; it excludes exactly the same points."""
    keep: list[Point] = []
    # sorting by order puts every dominated row after one that dominates it
    for r in sorted(E.rows, key=lambda r: (order(r), r)):
        if not any(dominates(r, g) for g in keep):
            keep.append(r)
    return ExponentSet(E.m, tuple(keep))


def colon(E: ExponentSet, e: Sequence[int]) -> ExponentSet:
    """``E:e``, each row with ``e`` subtracted and clipped at zero."""
    return ExponentSet(E.m, tuple(
        tuple(max(f - x, 0) for f, x in zip(r, e)) for r in E.rows
    ))


def _check_budget(m: int, s: int, budget: int) -> None:
    if s >= 0 and binom_eval(s + m, m) > budget:
        raise OracleBudgetExceeded(
            f"oracle budget exceeded: C({s + m},{m}) points at s={s} > {budget}"
        )


def count_table(E: ExponentSet, s_max: int, budget: int = DEFAULT_BUDGET) -> list[int]:
    """``[count_free_points(E, s) for s in range(s_max + 1)]`` in one sweep.

    Walks every prefix ``(x_1, ..., x_{m-1})`` of order at most ``s_max``,
    keeping the rows not yet beaten on the prefix.  Along the last axis
    the free points are exactly ``x_m < min(g_m)`` over those rows, so each
    prefix contributes one run of consecutive orders.
    """
    if s_max < 0:
        return []
    _check_budget(E.m, s_max, budget)
    gens = minimal_elements(E).rows
    m = E.m
    if m == 0:
        return [0 if gens else 1] * (s_max + 1)
    # difference array: runs[t] counts free points of order exactly t after prefix sums
    runs = [0] * (s_max + 2)

    def walk(k: int, used: int, alive: list[Point]) -> None:
        room = s_max - used
        if k == m - 1:
            length = min([g[k] for g in alive] + [room + 1])
            if length > 0:
                runs[used] += 1
                runs[used + length] -= 1
            return
        for x in range(room + 1):
            walk(k + 1, used + x, [g for g in alive if g[k] <= x])

    walk(0, 0, list(gens))
    per_order = list(accumulate(runs[:s_max + 1]))
    return list(accumulate(per_order))


def count_free_points(E: ExponentSet, s: int, budget: int = DEFAULT_BUDGET) -> int:
    """Card of points ``x`` with ``ord x <= s`` dominating no row of ``E``.

    Zero for negative ``s``.
    """
    if s < 0:
        return 0
    return count_table(E, s, budget)[-1]


def stabilization_bound(E: ExponentSet) -> int:
    """Sum of the coordinatewise maxima of the minimal rows (0 if empty)."""
    rows = minimal_elements(E).rows
    if not rows:
        return 0
    return sum(max(col) for col in zip(*rows))


def dimension_polynomial(E: ExponentSet, budget: int = DEFAULT_BUDGET) -> NumPoly:
    """Interpolate oracle counts from the stabilization bound onwards.

    Samples ``m+1`` consecutive values starting at the bound, then checks
    three more; raises :class:`VerificationMismatch` rather than return a
    polynomial the counts do not support.
    """
    B = stabilization_bound(E)
    table = count_table(E, B + E.m + HELD_OUT, budget)
    p = from_samples(B, table[B:B + E.m + 1])
    for s in range(B + E.m + 1, B + E.m + 1 + HELD_OUT):
        if p(s) != table[s]:
            raise VerificationMismatch(
                f"interpolant {p} gives {p(s)} at s={s}, oracle counts {table[s]}"
            )
    limit = E.m - 1 if E.rows else E.m
    if not p.is_zero() and p.degree > limit:
        raise VerificationMismatch(f"interpolant {p} has degree above {limit}")
    return p


def _pivot(rows: Sequence[Point]) -> int:
    top = max(order(r) for r in rows)
    row = min(r for r in rows if order(r) == top)
    return next(k for k, x in enumerate(row) if x > 0)


@functools.lru_cache(maxsize=4096)
def _rec(m: int, rows: tuple[Point, ...]) -> NumPoly:
    if not rows:
        return NumPoly.basis(m)
    if any(order(r) == 0 for r in rows):
        return NumPoly((0,))
    i = _pivot(rows)
    unit = tuple(int(k == i) for k in range(m))
    # points with x_i = 0: only rows with f_i = 0 can exclude them
    face = ExponentSet(m - 1, tuple(r[:i] + r[i + 1:] for r in rows if r[i] == 0))
    inner = minimal_elements(colon(ExponentSet(m, rows), unit))
    return (_rec(face.m, minimal_elements(face).rows)
            + shift(_rec(m, inner.rows), -1))


def dimension_polynomial_rec(E: ExponentSet) -> NumPoly:
    """Purely algebraic recursion ``w_E(s) = w_{E+e}(s) + w_{E:e}(s-1)``.

    The pivot ``e`` is a unit vector: the first positive coordinate of the
    lexicographically smallest row of maximal order.  ``w_{E+e}`` lives on
    the face ``x_i = 0`` and is computed in ``m-1`` coordinates.
    """
    return _rec(E.m, minimal_elements(E).rows)


def dimension_polynomial_ie(E: ExponentSet, max_rows: int = MAX_IE_ROWS) -> NumPoly:
    """Inclusion-exclusion ``sum_J (-1)^|J| C(s+m-ord(lcm J), m)``."""
    rows = minimal_elements(E).rows
    if len(rows) > max_rows:
        raise SubsetBlowup(
            f"subset blowup: {len(rows)} generators exceeds {max_rows}"
        )
    # accumulate signed multiplicities per order of the lcm first
    weight: dict[int, int] = {}

    def walk(start: int, lcm: Point, sign: int) -> None:
        o = order(lcm)
        weight[o] = weight.get(o, 0) + sign
        for j in range(start, len(rows)):
            walk(j + 1, tuple(max(a, b) for a, b in zip(lcm, rows[j])), -sign)

    walk(0, (0,) * E.m, 1)
    top = NumPoly.basis(E.m)
    result = NumPoly((0,))
    for o, w in sorted(weight.items()):
        if w:
            result = result + shift(top, -o).scale(w)
    return result
