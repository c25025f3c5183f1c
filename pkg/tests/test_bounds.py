from fractions import Fraction
from math import factorial

import pytest

from supermat.bounds import (
    PUBLISHED,
    bound_B,
    bound_B_from_total,
    bound_Bprime,
    bound_C,
    bound_I,
    bound_L,
    bound_S,
    bounds_row,
    bounds_table,
    is_prime,
    cycle_ratio_window,
    prime_B_closed_form,
    prime_B_expanded,
    published_discrepancies,
    ratio_report,
    totient_sum,
)
from supermat.census import census_formula

PRIMES_TO_23 = [2, 3, 5, 7, 11, 13, 17, 19, 23]


@pytest.mark.parametrize("fn, n, expected", [
    (bound_I, 1, 1), (bound_I, 4, 9), (bound_I, 8, 5047),
    (bound_S, 1, 1), (bound_S, 5, 97), (bound_S, 8, 35281),
    (bound_B, 4, 13), (bound_B, 5, 49), (bound_B, 8, 8881),
    (bound_C, 3, 5), (bound_C, 4, 11), (bound_C, 5, 35),
    (bound_L, 1, 1), (bound_L, 4, 3), (bound_L, 5, 8),
])
def test_examples(fn, n, expected):
    assert fn(n) == expected


def test_bprime_examples():
    assert totient_sum(4) == Fraction(9, 2)
    assert bound_Bprime(4) == 16
    assert bound_Bprime(1) == 1


def test_row_six():
    row = bounds_row(6)
    assert (row.I, row.C, row.B, row.S) == (125, 148, 217, 601)


def test_table_against_published():
    rows = bounds_table(8)
    for row in rows:
        I, C, _, B, S = PUBLISHED[row.n]
        assert row.I == I
        assert row.S == S or (row.n, row.S) == (8, 35281)
        # B(2) and C(7) are misprinted in the table; the formula gives 2 and 833
        assert row.B == B or (row.n, row.B) == (2, 2)
        assert row.C == C or (row.n, row.C) == (7, 833)


def test_discrepancy_notes():
    notes = published_discrepancies(bounds_table(8))
    assert len(notes) == 3
    assert any(n.startswith("B(2) = 2") for n in notes)
    assert any(n.startswith("C(7) = 833") for n in notes)
    assert any(n.startswith("S(8) = 35281") for n in notes)


def test_c7_from_census():
    # 6! + 7 - 2 + L(7), with L(7) = 6 + 102
    assert census_formula(7).total == 108
    assert bound_C(7) == 720 + 5 + 108


def test_best_found_is_carried():
    rows = bounds_table(5, best={5: (38, True)})
    assert rows[4].best_found == 38 and rows[4].best_optimal
    assert rows[3].best_found is None
    assert rows[4].as_dict()["Bprime"] == f"{rows[4].Bprime.numerator}/{rows[4].Bprime.denominator}"


def test_table_rejects_empty():
    with pytest.raises(ValueError):
        bounds_table(0)
    with pytest.raises(ValueError):
        bound_I(0)


@pytest.mark.parametrize("n", range(3, 13))
def test_chain(n):
    assert bound_I(n) <= bound_C(n) <= bound_B(n) <= bound_S(n)
    assert bound_B(n) <= bound_Bprime(n)


@pytest.mark.parametrize("n", range(1, 13))
def test_total_form_identity(n):
    assert bound_B(n) == bound_B_from_total(n)


@pytest.mark.parametrize("p", PRIMES_TO_23)
def test_prime_forms(p):
    assert prime_B_closed_form(p) == prime_B_expanded(p) == bound_B(p)


def test_prime_forms_reject_composites():
    assert not is_prime(1) and not is_prime(9) and is_prime(23)
    with pytest.raises(ValueError):
        prime_B_closed_form(9)
    with pytest.raises(ValueError):
        prime_B_expanded(4)


@pytest.mark.parametrize("n", range(3, 21))
def test_cycle_ratio_squeeze(n):
    lo, hi = cycle_ratio_window(n)
    ratio = Fraction(bound_L(n), factorial(n - 2))
    assert lo <= ratio <= hi


def test_bprime_dominates_up_to_20():
    for n in range(1, 21):
        assert bound_B(n) <= bound_Bprime(n)


def test_convergence_evidence():
    for n in range(6, 21):
        r = bound_Bprime(n) / factorial(n - 1)
        assert 1 < r <= Fraction(12, 5)
    gaps = [abs(bound_Bprime(p) / factorial(p - 1) - 2) for p in (7, 11, 13, 17, 19)]
    assert gaps == sorted(gaps, reverse=True) and len(set(gaps)) == len(gaps)


def test_ratio_report():
    report = {e.n: e for e in ratio_report(23)}
    assert report[4].B_ratio == Fraction(13, 6)
    assert abs(float(report[11].B_ratio) - 1.818) < 1e-3
    assert all(e.B_ratio > 0 and e.Bprime_ratio > 0 and e.L_ratio > 0 for e in report.values())
    big_primes = [report[p].B_ratio for p in (7, 11, 13, 17, 19, 23)]
    assert big_primes == sorted(big_primes) and len(set(big_primes)) == 6
    with pytest.raises(ValueError):
        ratio_report(2)


def test_prime_ratio_not_monotone_from_five():
    # B(5)/4! exceeds B(7)/6!, so the prime sequence only starts increasing at 7
    assert Fraction(bound_B(5), 24) > Fraction(bound_B(7), 720)
