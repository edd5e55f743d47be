"""Differential systems given by leading-exponent sets, and example families.

A system in ``n`` differential indeterminates over ``m`` commuting
derivations is represented by one :class:`ExponentSet` per indeterminate
(the leading derivatives of an already reduced basis).  Its dimension
polynomial is the sum of the members' Kolchin polynomials.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from .errors import InputError
from .lattice import DEFAULT_BUDGET, ExponentSet, dimension_polynomial
from .macaulay import macaulay_constants, minimizing_coefficients
from .numpoly import NumPoly, shift

__all__ = [
    "DifferentialSystem",
    "MinimalCandidate",
    "ReportRow",
    "CoefficientReport",
    "system_dimension_polynomial",
    "single_equation_poly",
    "classify_minimal_candidate",
    "triangular_family",
    "equations_family",
    "ex2_exponents",
    "standard_coefficient_report",
    "PRINTED_STANDARD",
]


@dataclass(frozen=True)
class DifferentialSystem:
    m: int
    sets: tuple[ExponentSet, ...]

    def __post_init__(self) -> None:
        sets = tuple(self.sets)
        if not sets:
            raise InputError("a system needs at least one indeterminate")
        for E in sets:
            if E.m != self.m:
                raise InputError(f"exponent set of dimension {E.m} in a system with m={self.m}")
        object.__setattr__(self, "sets", sets)

    @classmethod
    def single(cls, E: ExponentSet) -> DifferentialSystem:
        return cls(E.m, (E,))


def system_dimension_polynomial(sys: DifferentialSystem,
                                budget: int = DEFAULT_BUDGET) -> NumPoly:
    total = NumPoly()
    for E in sys.sets:
        total = total + dimension_polynomial(E, budget)
    return total


def single_equation_poly(m: int, d: int) -> NumPoly:
    """``C(s+m, m) - C(s+m-d, m)``: one equation of order ``d`` in ``m`` derivations."""
    if m < 1 or d < 0:
        raise InputError(f"need m >= 1 and d >= 0, got m={m}, d={d}")
    top = NumPoly.basis(m)
    return top - shift(top, -d)


@dataclass(frozen=True)
class MinimalCandidate:
    constant_macaulay: bool
    degree_matches: bool
    order: int | None = None


def classify_minimal_candidate(p: NumPoly, m: int) -> MinimalCandidate:
    """Check the two hypotheses of the single-equation criterion.

    Only reports the facts; it cannot decide minimality of an extension.
    """
    c = macaulay_constants(minimizing_coefficients(p))
    constant = c[0] >= 0 and all(x == c[0] for x in c)
    degree_ok = p.degree == m - 1
    return MinimalCandidate(constant, degree_ok, c[0] if constant and degree_ok else None)


def triangular_family(m: int) -> ExponentSet:
    """Rows with 2 on the diagonal, 1 below it and 0 above."""
    if m < 1:
        raise InputError("m must be at least 1")
    return ExponentSet(m, tuple(
        tuple(1 if j < i else 2 if j == i else 0 for j in range(m)) for i in range(m)
    ))


def equations_family(m: int) -> ExponentSet:
    """Leading exponents of the equation list d1^2 d2, d1 d2^2, d1 d2 d3^2, ...

    Differs from :func:`triangular_family` in the first row, (2,1,0,...)
    instead of (2,0,...).
    """
    if m < 2:
        raise InputError("the equation list needs m >= 2")
    first = (2, 1) + (0,) * (m - 2)
    rest = tuple(tuple(1 if j < i else 2 if j == i else 0 for j in range(m))
                 for i in range(1, m))
    return ExponentSet(m, (first,) + rest)


def ex2_exponents(k: int) -> ExponentSet:
    """{(1,2), (k,1)} in N_0^2; defined for k >= 2."""
    if k < 2:
        raise InputError(f"k must be at least 2, got {k}")
    return ExponentSet(2, ((1, 2), (k, 1)))


# Printed standard-coefficient sequences (a_{m-1}, ..., a_0) for the
# triangular family, m = 2, 3, 4, and the printed prefix of the general row.
PRINTED_STANDARD: dict[int, tuple[int, ...]] = {
    2: (1, 1),
    3: (1, 1, 0),
    4: (1, 1, 0, -1),
}
PRINTED_LONG_PREFIX = (1, 1, 0, -1, -1, 0, 1)


@dataclass(frozen=True)
class ReportRow:
    m: int
    poly: NumPoly
    minimizing: tuple[int, ...]
    constants: tuple[int, ...]
    identity_ok: bool | None  # None for m = 1, where no predecessor exists


@dataclass
class CoefficientReport:
    rows: list[ReportRow]
    discrepancies: list[str] = field(default_factory=list)
    equations_rows: list[tuple[int, NumPoly, tuple[int, ...]]] = field(default_factory=list)

    @property
    def identity_holds(self) -> bool:
        return all(r.identity_ok for r in self.rows if r.identity_ok is not None)

    def render(self) -> str:
        lines = ["triangular family (2 on the diagonal, 1 below)",
                 f"{'m':>2}  {'standard a_(m-1)..a_0':<28} {'b':<26} {'c_(d+1)..c_1':<26} a0-identity"]
        for r in self.rows:
            ident = "-" if r.identity_ok is None else ("ok" if r.identity_ok else "FAIL")
            lines.append(f"{r.m:>2}  {str(r.poly.standard):<28} {str(r.minimizing):<26} "
                         f"{str(r.constants):<26} {ident}")
        if self.equations_rows:
            lines.append("")
            lines.append("equation-list variant (first row (2,1,0,...))")
            for m, p, b in self.equations_rows:
                lines.append(f"{m:>2}  {str(p.standard):<28} {str(b):<26}")
        lines.append("")
        if self.discrepancies:
            lines.append("discrepancies against the printed values:")
            lines.extend(f"  - {d}" for d in self.discrepancies)
        else:
            lines.append("no discrepancies against the printed values")
        return "\n".join(lines)


def standard_coefficient_report(m_max: int, budget: int = DEFAULT_BUDGET) -> CoefficientReport:
    """Tabulate the triangular family and compare with the printed claims.

    Every polynomial comes from the counting oracle.  The identity
    ``a_0(w_m) = a_0(w_{m-1}) - a_1(w_{m-1})``, obtained by evaluating
    ``w_m(s) = C(s+m-1, m-1) + w_{m-1}(s-1)`` at ``s = -1``, is checked for
    every ``m >= 2``.  Mismatches with printed values are collected as
    discrepancies, never raised.
    """
    if not 1 <= m_max <= 8:
        raise InputError("m_max must be between 1 and 8")
    rows: list[ReportRow] = []
    prev: NumPoly | None = None
    for m in range(1, m_max + 1):
        p = dimension_polynomial(triangular_family(m), budget)
        b = minimizing_coefficients(p)
        ok = None
        if prev is not None:
            a = prev.coeffs + (0, 0)
            ok = p.coeffs[0] == a[0] - a[1]
        rows.append(ReportRow(m, p, b, macaulay_constants(b), ok))
        prev = p

    notes: list[str] = []
    by_m = {r.m: r for r in rows}
    if 2 in by_m:
        p2 = by_m[2].poly
        if p2.power_form() != "s + 2":
            notes.append(f"m=2: printed w_2 = (s+1)+1 = s + 2; oracle gives {p2.power_form()}")
    for m, claim in PRINTED_STANDARD.items():
        if m in by_m and by_m[m].poly.standard != claim:
            notes.append(f"m={m}: printed standard coefficients {claim}; "
                         f"oracle gives {by_m[m].poly.standard}")
    if m_max >= len(PRINTED_LONG_PREFIX):
        got = by_m[len(PRINTED_LONG_PREFIX)].poly.standard
        if got != PRINTED_LONG_PREFIX:
            notes.append(f"m={len(PRINTED_LONG_PREFIX)}: printed sequence prefix "
                         f"{PRINTED_LONG_PREFIX}...; oracle gives {got}")
    for r in rows:
        if r.m >= 2 and r.minimizing != (1,) * r.m:
            notes.append(f"m={r.m}: printed b = {(1,) * r.m}; oracle gives {r.minimizing}")
        claimed_c = tuple(range(1, r.m + 1))
        if r.m >= 2 and r.constants != claimed_c:
            notes.append(f"m={r.m}: printed Macaulay constants {claimed_c}; "
                         f"oracle gives {r.constants}")
    for m in range(3, m_max + 1):
        cur, pre = by_m[m].poly.standard, by_m[m - 1].poly.standard
        if cur[:-1] != pre:
            notes.append(f"m={m}: printed shift rule a_i(w_m) = a_(i-1)(w_(m-1)) "
                         f"fails: {cur} vs {pre}")
        a = by_m[m].poly.coeffs + (0, 0, 0)
        if a[0] != a[1] - a[2]:
            notes.append(f"m={m}: printed rule a_0(w_m) = a_1(w_m) - a_2(w_m) fails "
                         f"on {by_m[m].poly.standard}")

    claims = dict(PRINTED_STANDARD)
    claims[len(PRINTED_LONG_PREFIX)] = PRINTED_LONG_PREFIX
    offsets = {m: tuple(x - y for x, y in zip(by_m[m].poly.standard, claim))
               for m, claim in claims.items() if m in by_m}
    if offsets and all(off[:-1] == (0,) * (len(off) - 1) for off in offsets.values()):
        gaps = sorted({off[-1] for off in offsets.values()})
        notes.append(f"printed sequences agree with the oracle except in a_0 "
                     f"(oracle minus printed: {gaps}) for m in {sorted(offsets)}")

    eq_rows = []
    for m in range(2, m_max + 1):
        p = dimension_polynomial(equations_family(m), budget)
        eq_rows.append((m, p, minimizing_coefficients(p)))
    return CoefficientReport(rows, notes, eq_rows)
