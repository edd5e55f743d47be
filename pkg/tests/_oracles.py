"""Reference computations sharing no code with the library paths they check."""
from fractions import Fraction
from itertools import product
from math import factorial


def naive_binom(n, k):
    """Generalized binomial via a Fraction product."""
    out = Fraction(1)
    for i in range(k):
        out *= Fraction(n - i, i + 1)
    assert out.denominator == 1
    return int(out)


def naive_eval_standard(a_low_first, s):
    return sum(a * naive_binom(s + i, i) for i, a in enumerate(a_low_first))


def naive_count(rows, m, s):
    """Points of the box [0, s]^m with order <= s dominating no row."""
    if s < 0:
        return 0
    total = 0
    for x in product(range(s + 1), repeat=m):
        if sum(x) > s:
            continue
        if any(all(xk >= ek for xk, ek in zip(x, e)) for e in rows):
            continue
        total += 1
    return total


def fit_standard(f, d, base=0):
    """Solve sum_i a_i C(s+i, i) = f(s) at s = base..base+d by elimination.

    Returns the coefficients a_0..a_d as integers (asserts integrality).
    """
    n = d + 1
    mat = [[Fraction(naive_binom(s + i, i)) for i in range(n)] + [Fraction(f(s))]
           for s in range(base, base + n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if mat[r][col] != 0)
        mat[col], mat[piv] = mat[piv], mat[col]
        for r in range(n):
            if r != col and mat[r][col] != 0:
                factor = mat[r][col] / mat[col][col]
                mat[r] = [x - factor * y for x, y in zip(mat[r], mat[col])]
    sol = [mat[i][n] / mat[i][i] for i in range(n)]
    assert all(x.denominator == 1 for x in sol)
    return [int(x) for x in sol]


def minimizing_by_definition(f, d):
    """Minimizing coefficients straight from the recursive definition.

    ``f`` is any integer-valued callable known to be a polynomial of degree
    at most ``d``; all polynomials are handled as callables and re-fitted.
    """
    a = fit_standard(f, d)
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    deg = len(a) - 1
    if deg == 0:
        return [a[0]]
    lead = a[-1]

    def v(s):
        return (f(s + lead) - naive_binom(s + deg + 1 + lead, deg + 1)
                + naive_binom(s + deg + 1, deg + 1))

    tail = minimizing_by_definition(v, deg - 1)
    return [lead] + [0] * (deg - len(tail)) + tail


def power_value(coeffs_low_first, s):
    """Evaluate via the explicit product formula prod(s+j)/i!."""
    total = Fraction(0)
    for i, a in enumerate(coeffs_low_first):
        prod = Fraction(1)
        for j in range(1, i + 1):
            prod *= s + j
        total += a * prod / factorial(i)
    return total
