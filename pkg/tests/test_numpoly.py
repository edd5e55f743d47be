import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kolchin.numpoly import NumPoly, binom_eval, evaluate, from_samples, nabla, shift

from _oracles import naive_binom, naive_eval_standard, power_value

coeff_lists = st.lists(st.integers(-50, 50), min_size=1, max_size=9)
polys = coeff_lists.map(lambda c: NumPoly(tuple(c)))


@pytest.mark.parametrize("n,k,expected", [(5, 2, 10), (1, 3, 0), (-1, 1, -1), (0, 0, 1), (-3, 2, 6)])
def test_binom_eval_examples(n, k, expected):
    assert binom_eval(n, k) == expected


def test_binom_eval_rejects_negative_k():
    with pytest.raises(ValueError):
        binom_eval(3, -1)


@given(st.integers(-40, 40), st.integers(1, 12))
def test_pascal(n, k):
    assert binom_eval(n, k) == binom_eval(n - 1, k) + binom_eval(n - 1, k - 1)


@given(st.integers(-40, 40), st.integers(0, 12))
def test_binom_matches_fraction_product(n, k):
    assert binom_eval(n, k) == naive_binom(n, k)


def test_canonical_form():
    assert NumPoly((3, 0, 0)).coeffs == (3,)
    assert NumPoly(()).coeffs == (0,)
    assert NumPoly((0, 0)).degree == 0
    assert NumPoly.from_standard([2, 1]).coeffs == (1, 2)


@pytest.mark.parametrize("coeffs,s,expected", [
    ((1, 1), 3, 5),
    ((0, 0, 1), -2, 0),
    ((4 - 2, 2), 10, 24),  # 2s+k at k=4
])
def test_eval_examples(coeffs, s, expected):
    assert evaluate(NumPoly(coeffs), s) == expected


@given(coeff_lists, st.integers(-30, 30))
def test_eval_matches_oracles(c, s):
    p = NumPoly(tuple(c))
    assert p(s) == naive_eval_standard(c, s) == power_value(c, s)


def test_eval_huge_arguments_stay_exact():
    p = NumPoly.basis(30)
    assert p(30) == naive_binom(60, 30)
    assert p(10**6) == naive_binom(10**6 + 30, 30)


def test_add_examples():
    assert NumPoly((1, 1)) + NumPoly((1, 1)) == NumPoly((2, 2))
    p = NumPoly((3, -2, 5))
    assert p + NumPoly() == p
    assert NumPoly((-1, 2)) + NumPoly((1,)) == NumPoly((0, 2))


@given(polys, polys, st.integers(-20, 20))
def test_add_sub_pointwise(p, q, s):
    assert (p + q)(s) == p(s) + q(s)
    assert (p - q)(s) == p(s) - q(s)
    assert (p - p).is_zero()


def test_shift_examples():
    assert shift(NumPoly((0, 1)), 1) == NumPoly((1, 1))
    p = NumPoly((3, -2, 5))
    assert shift(shift(p, 1), -1) == p
    assert shift(NumPoly((1, 1)), 2) == NumPoly((3, 1))


@given(polys, st.integers(-8, 8))
def test_shift_inverse(p, a):
    assert shift(shift(p, a), -a) == p


@given(polys, st.integers(-40, 40), st.integers(-30, 30))
def test_shift_pointwise(p, a, s):
    assert shift(p, a)(s) == p(s + a)


@given(polys, st.integers(-6, 6))
def test_shift_is_composite_of_unit_steps(p, a):
    step = 1 if a > 0 else -1
    q = p
    for _ in range(abs(a)):
        q = shift(q, step)
    assert shift(p, a) == q


def test_shift_unit_step_is_suffix_sum():
    p = NumPoly((4, -1, 7, 2))
    assert shift(p, 1).coeffs == (12, 8, 9, 2)


def test_nabla_examples():
    assert nabla(NumPoly((0, 1, 1))) == NumPoly((1, 1))
    assert nabla(NumPoly((7,))).is_zero()
    assert nabla(NumPoly((1, 1))) == NumPoly((1,))


@given(polys, st.integers(0, 20))
def test_nabla_telescopes(p, s):
    d = nabla(p)
    assert sum(d(t) for t in range(1, s + 1)) == p(s) - p(0)


@given(polys, st.integers(-20, 20))
def test_nabla_is_backward_difference(p, s):
    assert nabla(p)(s) == p(s) - p(s - 1)


def test_from_samples_examples():
    assert from_samples(0, [2, 3, 4]) == NumPoly((1, 1))
    assert from_samples(4, [10, 12]) == NumPoly((0, 2))
    assert from_samples(0, [1, 3, 6]) == NumPoly((0, 0, 1))


@given(polys, st.integers(-15, 15))
def test_from_samples_recovers(p, base):
    values = [p(base + i) for i in range(p.degree + 1)]
    assert from_samples(base, values) == p


def test_display():
    assert str(NumPoly((0, 2))) == "2·C(s+1,1)"
    assert str(NumPoly((-2, 1))) == "C(s+1,1) - 2"
    assert str(NumPoly()) == "0"
    assert NumPoly((2, 2)).power_form() == "2*s + 4"
    assert NumPoly.basis(3).power_form() == "1/6*s^3 + s^2 + 11/6*s + 1"
    assert NumPoly((-1,)).power_form() == "-1"


def test_values_are_immutable():
    p = NumPoly((1, 2))
    with pytest.raises(AttributeError):
        p.coeffs = (3,)
    assert hash(p) == hash(NumPoly((1, 2)))
