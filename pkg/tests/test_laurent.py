from fractions import Fraction

import pytest

from qfock.laurent import ONE, V, ZERO, Laurent, bar, divexact, gauss_factorial, gauss_number, specialize

VI = Laurent.monomial(-1)


def test_unit_times_v():
    assert ONE * V == V


def test_difference_of_squares():
    assert (V + VI) * (V - VI) == Laurent({2: 1, -2: -1})


@pytest.mark.parametrize("k", range(0, 8))
def test_gauss_times_v_minus_inverse(k):
    assert gauss_number(k) * (V - VI) == Laurent.monomial(k) - Laurent.monomial(-k)


def test_bar_of_v():
    assert bar(V) == VI


def test_bar_of_one_plus_v_squared():
    assert (ONE + V ** 2).bar() == ONE + Laurent.monomial(-2)


@pytest.mark.parametrize("j", range(0, 10))
def test_gauss_numbers_are_bar_invariant(j):
    assert gauss_number(j).bar() == gauss_number(j)


def test_small_gauss_numbers():
    assert gauss_number(0) == ZERO
    assert gauss_number(1) == ONE
    assert gauss_number(3) == Laurent({-2: 1, 0: 1, 2: 1})


def test_specialize_at_one():
    assert specialize(V + VI, 1) == 2
    assert specialize(gauss_number(3), 1) == 3
    assert specialize(Laurent.monomial(7), 1) == 1


def test_specialize_at_rational():
    assert specialize(V + VI, Fraction(1, 2)) == Fraction(5, 2)


def test_gauss_factorial():
    assert gauss_factorial(3) == gauss_number(1) * gauss_number(2) * gauss_number(3)
    assert gauss_factorial(0) == ONE


def test_divexact_round_trip():
    p = gauss_factorial(4) * (V - 3)
    assert divexact(p, gauss_factorial(4)) == V - 3


def test_divexact_rejects_inexact():
    with pytest.raises(ArithmeticError):
        divexact(V + 1, V + 2)


def test_parse_and_str_round_trip():
    p = Laurent({-3: -1, 0: 2, 1: 1, 5: -7})
    assert Laurent.parse(str(p)) == p
    assert Laurent.parse("0") == ZERO


def test_json_is_sorted_exponent_pairs():
    p = Laurent({3: 1, -1: 2})
    assert p.to_json() == [[-1, 2], [3, 1]]
    assert Laurent.from_json(p.to_json()) == p


def test_positive_and_negative_parts():
    p = Laurent({-2: 1, 0: 5, 3: 4})
    assert p.positive_part() == Laurent({3: 4})
    assert p.negative_part() == Laurent({-2: 1})


def test_substitute_monomial():
    p = Laurent({1: 1, 2: 3})
    # v -> -v^-1
    assert p.substitute_monomial(-1, -1) == Laurent({-1: -1, -2: 3})


def test_big_coefficients_stay_exact():
    big = Laurent({0: 10 ** 40})
    assert (big * big).coefficient(0) == 10 ** 80
