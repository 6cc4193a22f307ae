import random
from fractions import Fraction

import pytest

from duha.exactfield import FieldSpec, NumberField, RATIONALS, cyclotomic
from duha.pbw import (
    F1,
    F2_NONROOT,
    F2_ROOT,
    Monomial,
    UnsupportedCaseError,
    apply_sigma,
    classify_case,
    dim_total,
    graded_basis,
    sdeg_range,
    word_expansion,
)


def case_f1():
    return classify_case(FieldSpec(RATIONALS, 2, 3))


def case_nonroot():
    return classify_case(FieldSpec(RATIONALS, 2, Fraction(1, 2)))


def case_root(n):
    if n == 1:
        return classify_case(FieldSpec(RATIONALS, 1, 1))
    if n == 2:
        return classify_case(FieldSpec(RATIONALS, -1, -1))
    field = NumberField(cyclotomic(n))
    return classify_case(FieldSpec(field, field.theta, field.theta ** (n - 1)))


def test_classification():
    assert case_f1().family == F1
    assert case_nonroot().family == F2_NONROOT
    for n in (1, 2, 3, 4, 6):
        case = case_root(n)
        assert case.family == F2_ROOT
        assert case.n == n
        assert case.is_cy()
    with pytest.raises(UnsupportedCaseError):
        classify_case(FieldSpec(RATIONALS, 2, Fraction(1, 4)))  # r1^2 r2 = 1


def test_phi_values():
    case = case_f1()  # r1=2, r2=3
    # phi(p) = sum r1^i r2^(p-i) = 3^(p+1) - 2^(p+1)
    assert case.phi(-1).is_zero()
    for p in range(6):
        assert case.phi(p).as_rational() == 3 ** (p + 1) - 2 ** (p + 1)


def test_du_rewrites():
    case = case_f1()
    u, w, d = case.gens()
    # du = (w - beta*ud)/r1 = (1/2) w + 3 ud
    du = d * u
    assert du.terms == {
        Monomial(0, 1, 0): case.field.from_rational(Fraction(1, 2)),
        Monomial(1, 0, 1): case.field.from_rational(3),
    }
    # du^2 = (phi(1)/r1) u w + r2^2 u^2 d = (5/2) u w + 9 u^2 d
    du2 = d * (u * u)
    assert du2.terms == {
        Monomial(1, 1, 0): case.field.from_rational(Fraction(5, 2)),
        Monomial(2, 0, 1): case.field.from_rational(9),
    }


def test_exchange_rules():
    for case in (case_f1(), case_nonroot(), case_root(3)):
        u, w, d = case.gens()
        r1 = case.field.one * case.r1
        assert w * u == (u * w).scale(r1)
        assert d * w == (w * d).scale(r1)


def test_defining_relations():
    # d^2 u = alpha dud + beta ud^2 and du^2 = alpha udu + beta u^2 d
    for case in (case_f1(), case_nonroot(), case_root(2), case_root(4)):
        u, w, d = case.gens()
        alpha, beta = case.alpha, case.beta
        lhs1 = d * d * u
        rhs1 = (d * u * d).scale(alpha) + (u * d * d).scale(beta)
        assert lhs1 == rhs1
        lhs2 = d * u * u
        rhs2 = (u * d * u).scale(alpha) + (u * u * d).scale(beta)
        assert lhs2 == rhs2


def test_graded_dims():
    case = case_f1()
    assert [dim_total(case, n) for n in range(8)] == [1, 2, 4, 6, 9, 12, 16, 20]
    for deg in range(8):
        per_sdeg = sum(len(graded_basis(case, (deg, s))) for s in sdeg_range(deg))
        assert per_sdeg == dim_total(case, deg)
    assert [m for m in graded_basis(case, (2, 0))] == [Monomial(0, 1, 0), Monomial(1, 0, 1)]
    assert graded_basis(case, (3, 5)) == []


def test_bigraded_recurrence():
    # a_n(s) = (s + 1/s)(a_(n-1) - a_(n-3)) + a_(n-4) as bivariate dicts
    case = case_nonroot()
    layers = []
    for deg in range(17):
        layers.append({s: len(graded_basis(case, (deg, s))) for s in sdeg_range(deg)})
    for n in range(1, 17):
        prev = [layers[n - k] if n - k >= 0 else {} for k in (1, 3, 4)]
        for s in range(-n, n + 1):
            shift = (
                prev[0].get(s - 1, 0)
                + prev[0].get(s + 1, 0)
                - prev[1].get(s - 1, 0)
                - prev[1].get(s + 1, 0)
            )
            assert layers[n].get(s, 0) == shift + prev[2].get(s, 0)


def test_associativity_random():
    rng = random.Random(99)
    cases = [case_f1(), case_nonroot(), case_root(3)]
    for case in cases:
        pool = []
        for _ in range(12):
            terms = {}
            for _ in range(rng.randint(1, 3)):
                m = (rng.randint(0, 2), rng.randint(0, 2), rng.randint(0, 2))
                terms[m] = Fraction(rng.randint(-3, 3), rng.randint(1, 2))
            pool.append(case.element(terms))
        for _ in range(70):
            a, b, c = (rng.choice(pool) for _ in range(3))
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c


def test_sigma_is_homomorphism_and_fixes_w():
    rng = random.Random(7)
    case = case_root(3)
    u, w, d = case.gens()
    assert apply_sigma(w) == w
    assert apply_sigma(u) == u.scale(-case.beta.inv())
    assert apply_sigma(d) == d.scale(-case.beta)
    pool = [u, w, d, u * d, d * u, w * w + u.scale(2)]
    for _ in range(50):
        a, b = rng.choice(pool), rng.choice(pool)
        assert apply_sigma(a * b) == apply_sigma(a) * apply_sigma(b)


def test_word_expansion_of_w_squared():
    case = case_f1()  # beta = -6, r1 = 2
    words = word_expansion(case, Monomial(0, 2, 0))
    assert words == {
        "udud": case.field.from_rational(36),
        "uddu": case.field.from_rational(-12),
        "duud": case.field.from_rational(-12),
        "dudu": case.field.from_rational(4),
    }


def test_monomial_bidegree_and_str():
    m = Monomial(2, 1, 0)
    assert m.deg == 4 and m.sdeg == 2
    assert m.bidegree() == (4, 2)
    assert str(m) == "u^2 w"
    assert str(Monomial(0, 0, 0)) == "1"
