import pytest

from kolchin.diffdim import (
    DifferentialSystem,
    MinimalCandidate,
    classify_minimal_candidate,
    equations_family,
    ex2_exponents,
    single_equation_poly,
    standard_coefficient_report,
    system_dimension_polynomial,
    triangular_family,
)
from kolchin.errors import InputError
from kolchin.lattice import ExponentSet, count_free_points, dimension_polynomial, stabilization_bound
from kolchin.macaulay import constants_of, minimizing_coefficients
from kolchin.numpoly import NumPoly

from _oracles import naive_count

std = NumPoly.from_standard


def points_of_order(m, d):
    if m == 1:
        yield (d,)
        return
    for x in range(d + 1):
        for rest in points_of_order(m - 1, d - x):
            yield (x,) + rest


def test_system_examples():
    one = DifferentialSystem.single(ExponentSet(2, ((1, 2), (4, 1))))
    assert system_dimension_polynomial(one).power_form() == "2*s + 4"
    two = DifferentialSystem(2, (ExponentSet(2, ((1, 1),)), ExponentSet(2, ((1, 1),))))
    assert system_dimension_polynomial(two) == std([4, -2])   # 4s+2
    assert system_dimension_polynomial(DifferentialSystem.single(ExponentSet(2))) == NumPoly.basis(2)


def test_system_validation():
    with pytest.raises(InputError):
        DifferentialSystem(2, ())
    with pytest.raises(InputError):
        DifferentialSystem(2, (ExponentSet(3),))


def test_system_sum_matches_pointwise_counts():
    sets = (ExponentSet(3, ((1, 2, 0), (0, 1, 1))), ExponentSet(3, ((2, 2, 2),)), ExponentSet(3))
    sys_ = DifferentialSystem(3, sets)
    p = system_dimension_polynomial(sys_)
    start = max(stabilization_bound(E) for E in sets)
    for s in range(start, start + 5):
        assert p(s) == sum(naive_count(E.rows, 3, s) for E in sets)


def test_single_equation_examples():
    assert single_equation_poly(1, 2) == std([2])
    assert single_equation_poly(2, 3).power_form() == "3*s"
    assert minimizing_coefficients(single_equation_poly(4, 3)) == (3, 0, 0, 0)
    with pytest.raises(InputError):
        single_equation_poly(0, 1)


@pytest.mark.parametrize("m", range(1, 5))
@pytest.mark.parametrize("d", range(0, 5))
def test_single_equation_matches_every_point(m, d):
    expected = single_equation_poly(m, d)
    for e in points_of_order(m, d):
        assert dimension_polynomial(ExponentSet(m, (e,))) == expected


@pytest.mark.parametrize("m", range(1, 6))
@pytest.mark.parametrize("d", range(1, 6))
def test_single_equation_invariants(m, d):
    p = single_equation_poly(m, d)
    assert minimizing_coefficients(p) == (d,) + (0,) * (m - 1)
    assert constants_of(p) == (d,) * m
    assert classify_minimal_candidate(p, m) == MinimalCandidate(True, True, d)


def test_order_zero_equation_is_zero():
    for m in range(1, 5):
        p = single_equation_poly(m, 0)
        assert p.is_zero()
        assert classify_minimal_candidate(p, m).degree_matches is (m == 1)


def test_classify_examples():
    assert classify_minimal_candidate(single_equation_poly(3, 2), 3) == MinimalCandidate(True, True, 2)
    assert classify_minimal_candidate(std([2, -1]), 2) == MinimalCandidate(True, True, 2)   # 2s+1
    assert classify_minimal_candidate(std([2, 1]), 2) == MinimalCandidate(False, True, None)  # 2s+3
    assert classify_minimal_candidate(single_equation_poly(3, 2), 4).degree_matches is False


def test_triangular_family():
    assert triangular_family(1).rows == ((2,),)
    assert set(triangular_family(2).rows) == {(2, 0), (1, 2)}
    assert set(triangular_family(3).rows) == {(2, 0, 0), (1, 2, 0), (1, 1, 2)}
    with pytest.raises(InputError):
        triangular_family(0)


def test_equations_family():
    assert set(equations_family(2).rows) == {(2, 1), (1, 2)}
    assert set(equations_family(3).rows) == {(2, 1, 0), (1, 2, 0), (1, 1, 2)}
    with pytest.raises(InputError):
        equations_family(1)


@pytest.mark.parametrize("k", range(2, 7))
def test_ex2_family(k):
    E = ex2_exponents(k)
    assert E.rows == ((1, 2), (k, 1)) or set(E.rows) == {(1, 2), (k, 1)}
    p = dimension_polynomial(E)
    assert p.power_form() == f"2*s + {k}"
    assert minimizing_coefficients(p) == (2, k - 1)


def test_ex2_rejects_small_k():
    with pytest.raises(InputError):
        ex2_exponents(1)


def test_report_small():
    rep = standard_coefficient_report(3)
    assert [r.m for r in rep.rows] == [1, 2, 3]
    assert rep.rows[0].poly == std([2])
    assert rep.rows[1].poly.power_form() == "s + 3"
    assert rep.rows[1].minimizing == (1, 2)
    a2, a3 = rep.rows[1].poly.coeffs, rep.rows[2].poly.coeffs
    assert a3[0] == a2[0] - a2[1]
    assert rep.identity_holds
    assert any("s + 2" in d for d in rep.discrepancies)
    text = rep.render()
    assert "a0-identity" in text and "discrepancies" in text


def test_report_counts_come_from_oracle():
    rep = standard_coefficient_report(4)
    for r in rep.rows:
        E = triangular_family(r.m)
        B = stabilization_bound(E)
        assert r.poly(B + 1) == count_free_points(E, B + 1)


def test_report_bounds():
    with pytest.raises(InputError):
        standard_coefficient_report(9)
