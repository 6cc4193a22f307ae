import random
from fractions import Fraction

import pytest

from duha.exactfield import (
    FieldError,
    FieldSpec,
    NumberField,
    RATIONALS,
    ReducibleModulusError,
    cyclotomic,
    genericity_violation,
    max_root_of_unity_order,
    poly_mul,
    rational_from_string,
    root_of_unity_order,
    totient,
)


def test_rational_from_string():
    assert rational_from_string("3") == Fraction(3)
    assert rational_from_string("-7/2") == Fraction(-7, 2)
    assert rational_from_string(" 1/3 ") == Fraction(1, 3)
    assert rational_from_string("1.5") == Fraction(3, 2)  # exact, not float
    with pytest.raises(ValueError):
        rational_from_string("x")


def test_rationals_field_basics():
    two = RATIONALS.from_rational(2)
    half = RATIONALS.from_rational(Fraction(1, 2))
    assert two * half == RATIONALS.one
    assert (two + half).as_rational() == Fraction(5, 2)
    assert RATIONALS.degree == 1
    assert two.to_json() == "2"


def test_sqrt2_inverse():
    # Q[theta]/(theta^2 - 2): (theta - 1)^-1 = theta + 1
    field = NumberField([-2, 0, 1])
    x = field.theta - field.one
    assert x.inv() == field.theta + field.one
    assert x * x.inv() == field.one
    assert field.theta * field.theta == field.from_rational(2)


def test_zero_inverse_raises():
    field = NumberField([-2, 0, 1])
    with pytest.raises(ZeroDivisionError):
        field.zero.inv()


def test_reducible_modulus_detected():
    # theta^2 - 1 = (theta - 1)(theta + 1): inverting theta - 1 must fail
    field = NumberField([-1, 0, 1])
    with pytest.raises(ReducibleModulusError) as info:
        (field.theta - field.one).inv()
    assert info.value.factor  # the witness factor is reported


def test_field_axioms_random():
    rng = random.Random(20260815)
    field = NumberField(cyclotomic(12))  # degree 4
    scalars = []
    for _ in range(30):
        coeffs = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(4)]
        scalars.append(field.element(coeffs))
    one = field.one
    for _ in range(200):
        a, b, c = (rng.choice(scalars) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        assert a * b == b * a
        if not a.is_zero():
            assert a * a.inv() == one
            assert (a.inv()).inv() == a


def test_pow_matches_repeated_product():
    field = NumberField(cyclotomic(5))
    x = field.theta + field.one
    acc = field.one
    for n in range(8):
        assert x ** n == acc
        acc = acc * x
    assert x ** -2 == (x * x).inv()


def test_cyclotomic_degrees_and_product():
    for n in range(1, 31):
        assert len(cyclotomic(n)) - 1 == totient(n)
    # prod_{d | n} Phi_d = t^n - 1
    for n in (1, 2, 6, 12, 30):
        prod = [Fraction(1)]
        for d in range(1, n + 1):
            if n % d == 0:
                prod = poly_mul(prod, cyclotomic(d))
        expected = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]
        assert prod == expected


def test_totient_small():
    assert [totient(n) for n in range(1, 13)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]


def test_root_of_unity_order():
    field = NumberField(cyclotomic(6))
    bound = max_root_of_unity_order(field)
    assert root_of_unity_order(field.theta, bound) == 6
    assert root_of_unity_order(-field.theta, bound) == 3
    assert root_of_unity_order(field.one, bound) == 1
    assert root_of_unity_order(field.from_rational(-1), bound) == 2
    assert root_of_unity_order(field.from_rational(2), bound) is None
    assert root_of_unity_order(field.theta + field.one, bound) is None


def test_max_root_of_unity_order_grows_with_degree():
    # orders m with totient(m) <= degree are the only candidates
    assert max_root_of_unity_order(RATIONALS) == 2
    assert max_root_of_unity_order(NumberField(cyclotomic(4))) >= 4
    assert max_root_of_unity_order(NumberField(cyclotomic(12))) >= 12


def test_fieldspec_derives_alpha_beta():
    spec = FieldSpec(RATIONALS, 2, 3)
    assert spec.alpha.as_rational() == 5
    assert spec.beta.as_rational() == -6
    with pytest.raises(FieldError):
        FieldSpec(RATIONALS, 0, 3)


def test_genericity_violation():
    spec = FieldSpec(RATIONALS, 2, 3)
    assert genericity_violation(spec, 16) is None
    bad = FieldSpec(RATIONALS, 2, Fraction(1, 4))  # r1^2 * r2 = 1, beta = -1/2
    assert genericity_violation(bad, 16) == (2, 1)


def test_element_json_round_trip():
    from duha.exactfield import FieldElement

    field = NumberField(cyclotomic(8))
    x = field.element([Fraction(1, 2), Fraction(-3), Fraction(0), Fraction(7, 5)])
    assert FieldElement.from_json(field, x.to_json()) == x
