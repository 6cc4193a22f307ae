from fractions import Fraction

import pytest

from duha.exactfield import FieldSpec, NumberField, RATIONALS, cyclotomic
from duha.pbw import classify_case
from duha.series import (
    LaurentSeries,
    RationalFunction,
    WindowError,
    catalog_cohomology,
    catalog_homology,
    euler_log_sum,
    goodwillie,
    hilbert_series_algebra,
    igusa_chi,
    log_series,
)


def ints(series, lo, hi):
    return [int(series.coeff(n)) for n in range(lo, hi + 1)]


def case_for(name):
    if name == "f1":
        return classify_case(FieldSpec(RATIONALS, 2, 3))
    if name == "nonroot":
        return classify_case(FieldSpec(RATIONALS, 2, Fraction(1, 2)))
    if name == "n1":
        return classify_case(FieldSpec(RATIONALS, 1, 1))
    if name == "n2":
        return classify_case(FieldSpec(RATIONALS, -1, -1))
    n = int(name[1:])
    field = NumberField(cyclotomic(n))
    return classify_case(FieldSpec(field, field.theta, field.theta ** (n - 1)))


def test_algebra_hilbert_series():
    a = hilbert_series_algebra().expand(0, 10)
    assert ints(a, 0, 10) == [1, 2, 4, 6, 9, 12, 16, 20, 25, 30, 36]


def test_rational_function_canonical_form():
    # t^4/(1-t^8) * (1+t^4) = t^4/(1-t^4), detected by canonical equality
    q8 = RationalFunction([0, 0, 0, 0, 1], [1, 0, 0, 0, 0, 0, 0, 0, -1])
    q4 = RationalFunction([0, 0, 0, 0, 1], [1, 0, 0, 0, -1])
    assert q8 * RationalFunction([1, 0, 0, 0, 1]) == q4
    assert q8 != q4
    assert (q4 - q8).expand(0, 12).coeff(8) == 1


def test_f1_catalog():
    case = case_for("f1")
    assert ints(catalog_homology(case, 0).expand(0, 12), 0, 12) == [1, 2, 3, 2, 3, 2, 3, 2, 3, 2, 3, 2, 3]
    assert ints(catalog_homology(case, 1).expand(0, 12), 0, 12) == [0, 2, 3, 2, 3, 2, 3, 2, 3, 2, 3, 2, 3]
    assert catalog_homology(case, 2).is_zero()
    assert catalog_homology(case, 3).is_zero()


def test_nonroot_catalog_corrected_and_compact():
    case = case_for("nonroot")
    # one class w1^i w2^i in every degree 4i + 4
    assert ints(catalog_homology(case, 3).expand(0, 12), 0, 12) == [0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1]
    assert ints(catalog_homology(case, 2).expand(0, 12), 0, 12) == [0, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 2]
    assert ints(catalog_homology(case, 1).expand(0, 8), 0, 8) == [0, 2, 3, 2, 4, 2, 3, 2, 4]
    # the compact variant keeps only even powers of w1 w2
    assert ints(catalog_homology(case, 3, compact=True).expand(0, 12), 0, 12) == [0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1]
    assert catalog_homology(case, 0) == catalog_homology(case, 0, compact=True)


def test_root_case_catalog_n3():
    case = case_for("f3")
    assert ints(catalog_homology(case, 0).expand(0, 12), 0, 12) == [1, 2, 3, 2, 3, 2, 4, 4, 3, 6, 6, 4, 9]
    assert ints(catalog_homology(case, 1).expand(0, 12), 0, 12) == [0, 2, 3, 2, 4, 2, 5, 8, 4, 10, 13, 8, 16]
    assert ints(catalog_homology(case, 3).expand(0, 12), 0, 12) == [0, 0, 0, 0, 1, 0, 0, 2, 1, 0, 4, 2, 1]
    # compact variant diverges first at degree 6
    compact0 = catalog_homology(case, 0, compact=True).expand(0, 6)
    assert ints(compact0, 0, 6) == [1, 2, 3, 2, 3, 2, 3]


def test_root_case_catalog_n4():
    case = case_for("f4")
    assert ints(catalog_homology(case, 0).expand(0, 12), 0, 12) == [1, 2, 3, 2, 3, 2, 3, 2, 7, 2, 3, 2, 13]
    assert int(catalog_homology(case, 0, compact=True).expand(0, 8).coeff(8)) == 6


def test_root_case_catalog_n1_n2():
    n1 = case_for("n1")
    assert ints(catalog_homology(n1, 0).expand(0, 6), 0, 6) == [1, 2, 3, 4, 5, 6, 7]
    assert ints(catalog_homology(n1, 3).expand(0, 8), 0, 8) == [0, 0, 0, 0, 1, 0, 1, 0, 1]
    n2 = case_for("n2")
    assert ints(catalog_homology(n2, 3).expand(0, 12), 0, 12) == [0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1]
    # {u^2i d^2k} + {u^odd, d^odd} + {w^odd}: 1,2,3,2,3,2,5 on [0,6]
    assert ints(catalog_homology(n2, 0).expand(0, 6), 0, 6) == [1, 2, 3, 2, 3, 2, 5]


def test_cohomology_catalog_f1_only():
    case = case_for("f1")
    assert ints(catalog_cohomology(case, 0).expand(0, 4), 0, 4) == [1, 0, 0, 0, 0]
    assert ints(catalog_cohomology(case, 1).expand(0, 4), 0, 4) == [2, 0, 0, 0, 0]
    hh2 = catalog_cohomology(case, 2).expand(-2, 6)
    assert ints(hh2, -2, 6) == [1, 0, 2, 0, 1, 0, 1, 0, 1]
    hh3 = catalog_cohomology(case, 3).expand(-4, 4)
    assert ints(hh3, -4, 4) == [1, 0, 1, 0, 1, 0, 1, 0, 1]
    from duha.pbw import UnsupportedCaseError

    with pytest.raises(UnsupportedCaseError):
        catalog_cohomology(case_for("nonroot"), 0)


def test_goodwillie_identities_against_catalog():
    # HH_1 = 2 HH0bar + HH_3 - s1 and HH_2 = HH0bar + 2 HH_3 - s1 per degree
    for name in ("f1", "nonroot", "n1", "n2", "f3", "f4", "f6"):
        case = case_for(name)
        hh0bar = (catalog_homology(case, 0) - RationalFunction([1])).expand(0, 12)
        hh3 = catalog_homology(case, 3).expand(0, 12)
        derived = goodwillie(hh0bar, hh3)
        assert derived["HH_1"].agrees(catalog_homology(case, 1).expand(0, 12), 0, 12)
        assert derived["HH_2"].agrees(catalog_homology(case, 2).expand(0, 12), 0, 12)
        assert derived["HCbar_2"] == hh3


def test_igusa_chi_equals_s1():
    chi = igusa_chi(12)
    assert ints(chi, 1, 12) == [2, 3, 2, 3, 2, 3, 2, 3, 2, 3, 2, 3]
    assert chi.coeff(0) == 0


def test_euler_log_sum():
    total = euler_log_sum(10)
    assert ints(total, 0, 10) == [0] + [-1] * 10


def test_log_series_of_geometric():
    # log(1/(1-t)) = sum t^n/n
    inv = RationalFunction([1], [1, -1]).expand(0, 6)
    logs = log_series(inv)
    assert [logs.coeff(n) for n in range(0, 5)] == [0, 1, Fraction(1, 2), Fraction(1, 3), Fraction(1, 4)]


def test_window_errors_are_loud():
    s = LaurentSeries.from_list(0, [1, 2, 3])
    with pytest.raises(WindowError):
        s.coeff(3)
    with pytest.raises(WindowError):
        s.agrees(LaurentSeries.zero(0, 1), 0, 2)
    with pytest.raises(WindowError):
        LaurentSeries(0, 2, {5: 1})
    short = hilbert_series_algebra().expand(0, 2)
    assert (s * short).hi == 2  # products shrink to the reliable window


def test_series_json_round_trip():
    s = LaurentSeries(-2, 4, {-2: Fraction(1, 2), 0: 3, 4: -1})
    assert LaurentSeries.from_json(s.to_json()) == s
