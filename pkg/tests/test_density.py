import random
import warnings
from fractions import Fraction

import pytest

from potequiv.density import (
    DensityReport,
    UndefinedDensity,
    check_stabilization,
    density_report,
    prime_sieve,
    trial_division_count,
)
from potequiv.frobenius import cm_pair_table, cyclotomic_pair_table, table_verdicts


def test_small_sieves():
    assert prime_sieve(10) == [2, 3, 5, 7]
    assert prime_sieve(2) == [2]
    assert prime_sieve(3) == [2, 3]


def test_sieve_against_trial_division():
    assert len(prime_sieve(10_000)) == trial_division_count(10_000) == 1229


@pytest.mark.parametrize("X", [2, 3, 4, 29, 30, 31, 97, 100, 1000, 7919])
def test_sieve_boundaries(X):
    assert len(prime_sieve(X)) == trial_division_count(X)


def test_large_sieve_count():
    assert len(prime_sieve(10**7)) == 664579


def test_cm_density_at_10k():
    r = density_report(table_verdicts(cm_pair_table(10_000)), Fraction(1, 2), 10_000)
    assert abs(r.observed - Fraction(1, 2)) <= Fraction(3, 100)
    assert r.deviation == abs(r.observed - Fraction(1, 2))


def test_cyclotomic_densities():
    same = density_report(table_verdicts(cyclotomic_pair_table(1000, 1, 1)), 1)
    assert same.observed == 1 and same.deviation == 0
    diff = density_report(table_verdicts(cyclotomic_pair_table(1000, 1, 2)), 0)
    assert diff.observed == 0 and diff.deviation == 0


def test_order_invariance():
    v = table_verdicts(cm_pair_table(500))
    shuffled = list(v)
    random.Random(3).shuffle(shuffled)
    assert density_report(v).observed == density_report(shuffled).observed


def test_empty_is_undefined():
    with pytest.raises(UndefinedDensity):
        density_report([])


def test_kv_lines_shape():
    r = DensityReport(50, 14, 8, Fraction(4, 7), Fraction(1, 2))
    lines = r.kv_lines()
    assert all(line.startswith("@") and "=" in line for line in lines)
    assert "@observed=4/7" in lines


def test_stabilization_soft_warning():
    a = DensityReport(10, 10, 5, Fraction(1, 2), Fraction(1, 2))
    b = DensityReport(100, 10, 9, Fraction(9, 10), Fraction(1, 2))
    with pytest.warns(UserWarning):
        assert not check_stabilization([a, b])
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        assert check_stabilization([b, a])
