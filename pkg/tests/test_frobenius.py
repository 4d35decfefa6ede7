import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from potequiv.algebra import RatPoly
from potequiv.core import SemisimpleClass
from potequiv.density import prime_sieve
from potequiv.frobenius import (
    CM_CURVE,
    LEVEL11_CURVE,
    APTable,
    ECModel,
    ExcludedPrime,
    FrobeniusTable,
    InsufficientData,
    PrimeRecord,
    TableEntry,
    TableError,
    TableFormatError,
    ap_table_from_curve,
    cm_entry,
    cm_pair_table,
    count_points,
    count_points_naive,
    cyclotomic_pair_table,
    detect_twist_character,
    format_ap_table,
    format_frobenius_table,
    is_prime,
    kronecker_character,
    legendre,
    parse_ap_text,
    parse_frobenius_text,
    table_verdicts,
    twist_ap_table,
)

SMALL_PRIMES = [p for p in prime_sieve(400) if p > 2]


# --- curves ----------------------------------------------------------------

def test_discriminants():
    assert CM_CURVE.discriminant == 64
    assert LEVEL11_CURVE.discriminant == -161051


def test_is_prime_against_sieve():
    primes = set(prime_sieve(5000))
    assert all(is_prime(n) == (n in primes) for n in range(5000))


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13, 101])
def test_legendre_by_squares(p):
    squares = {x * x % p for x in range(1, p)}
    for a in range(1, p):
        assert legendre(a, p) == (1 if a in squares else -1)


@pytest.mark.parametrize("curve", [CM_CURVE, LEVEL11_CURVE, ECModel(1, -1, 0, 4, 3), ECModel.short(2, 7)])
def test_count_points_matches_brute_force(curve):
    for p in SMALL_PRIMES[:40]:
        try:
            fast = count_points(curve, p)
        except ExcludedPrime:
            assert curve.discriminant % p == 0
            continue
        assert fast == count_points_naive(curve, p)


def test_bad_prime_excluded():
    with pytest.raises(ExcludedPrime):
        count_points(LEVEL11_CURVE, 11)


def test_level11_known_values():
    # a_p of the level-11 newform q prod (1-q^n)^2 (1-q^11n)^2, expanded independently
    N = 30
    coeffs = [0] * (N + 1)
    coeffs[1] = 1
    for n in range(1, N + 1):
        for step in (n, n, 11 * n, 11 * n):
            for i in range(N, step - 1, -1):
                coeffs[i] -= coeffs[i - step]
    for p in (3, 5, 7, 13, 17, 19, 23, 29):
        assert count_points(LEVEL11_CURVE, p) == coeffs[p]


def test_hasse_and_supersingularity_up_to_10k():
    for p in prime_sieve(10_000):
        if p == 2:
            continue
        a = count_points(CM_CURVE, p)
        assert a * a <= 4 * p
        if p % 4 == 3:
            assert a == 0


# --- tables ----------------------------------------------------------------

def test_cm_entries():
    e = cm_entry(7)
    assert e.record.tags["class"] == "inert"
    assert e.charpoly2.charpoly == RatPoly.from_high([1, 0, 49])
    e = cm_entry(5)
    a = e.record.tags["a_p"]
    assert e.charpoly2.charpoly == RatPoly.from_high([1, -(a * a - 10), 25])


def test_cm_table_counts_at_100():
    T = cm_pair_table(100)
    inert = [e.p for e in T.entries if e.record.tags["class"] == "inert"]
    split = [e.p for e in T.entries if e.record.tags["class"] == "split"]
    # direct count of odd primes <= 100 by residue mod 4, 2 being the only bad prime
    assert len(inert) == sum(1 for p in range(3, 101) if is_prime(p) and p % 4 == 3) == 13
    assert len(split) == sum(1 for p in range(3, 101) if is_prime(p) and p % 4 == 1) == 11
    assert T.excluded == [(2, "characteristic 2 excluded")]


def test_cm_table_weight_consistency():
    for e in cm_pair_table(2000).entries:
        g = e.charpoly2.charpoly
        assert g[0] == e.p**2


def test_table_validation():
    e5, e3 = cm_entry(5), cm_entry(3)
    with pytest.raises(TableError):
        FrobeniusTable("a", "b", [e5, e3], [])
    with pytest.raises(TableError):
        FrobeniusTable("a", "b", [e3, e3], [])
    with pytest.raises(TableError):
        bad = TableEntry(PrimeRecord(7, {}), SemisimpleClass(RatPoly.from_high([1, -7])), cm_entry(7).charpoly2)
        FrobeniusTable("a", "b", [bad], [])
    with pytest.raises(ValueError):
        cm_pair_table(5)


def test_verdict_order_and_workers():
    T = cm_pair_table(200)
    serial = table_verdicts(T)
    assert [p for p, _ in serial] == T.primes
    parallel = table_verdicts(T, workers=2)
    assert [(p, v.equivalent, v.minimal_exponent) for p, v in serial] == \
        [(p, v.equivalent, v.minimal_exponent) for p, v in parallel]


def test_cyclotomic_tables():
    same = table_verdicts(cyclotomic_pair_table(500, 1, 1))
    assert all(v.equivalent and v.minimal_exponent == 1 for _, v in same)
    diff = table_verdicts(cyclotomic_pair_table(500, 1, 2))
    assert not any(v.equivalent for _, v in diff)


# --- file formats ----------------------------------------------------------

def test_frobenius_round_trip():
    T = cm_pair_table(300)
    text = format_frobenius_table(T)
    U = parse_frobenius_text(text)
    assert format_frobenius_table(U) == text
    assert [(e.p, e.charpoly1, e.charpoly2, e.record.tags) for e in U.entries] == \
        [(e.p, e.charpoly1, e.charpoly2, e.record.tags) for e in T.entries]
    assert U.excluded == T.excluded


def test_frobenius_round_trip_rational_coefficients():
    e = TableEntry(
        PrimeRecord(3, {}),
        SemisimpleClass(RatPoly([Fraction(1, 3), 1])),
        SemisimpleClass(RatPoly([Fraction(-5, 2), 0, 1])),
    )
    T = FrobeniusTable("x", "y", [TableEntry(e.record, e.charpoly1, SemisimpleClass(RatPoly([Fraction(-5, 2), 1])))], [])
    assert format_frobenius_table(parse_frobenius_text(format_frobenius_table(T))) == format_frobenius_table(T)


def test_frobenius_record_layout():
    text = "#degree=2\n7;1 -14 49;1 0 49\n"
    T = parse_frobenius_text(text)
    assert T.entries[0].charpoly1.charpoly == RatPoly.from_high([1, -14, 49])
    assert T.entries[0].charpoly2.charpoly == RatPoly.from_high([1, 0, 49])


@pytest.mark.parametrize(
    "text, line",
    [
        ("#degree=2\n7;1 -14 49;1 0 49\n7;1 -14 49;1 0 49\n", 3),
        ("#degree=2\n7;1 -14 49;1 0 49\n5;1 -10 25;1 0 25\n", 3),
        ("#degree=2\n7;1 -14 49;1 0\n", 2),
        ("#degree=2\n7;1 -14 49\n", 2),
        ("#degree=2\n7;1 -14 x;1 0 49\n", 2),
        ("7;1 -14 49;1 0 49\n", 1),
    ],
)
def test_frobenius_parse_errors_carry_line(text, line):
    with pytest.raises(TableFormatError) as exc:
        parse_frobenius_text(text)
    assert exc.value.line == line
    assert f"line {line}" in str(exc.value)


def test_empty_frobenius_file():
    assert parse_frobenius_text("#degree=2\n").entries == []


def test_ap_round_trip():
    A = ap_table_from_curve(LEVEL11_CURVE, 500, 11, "11a")
    B = parse_ap_text(format_ap_table(A))
    assert (B.label, B.ap, B.weight, B.level) == (A.label, A.ap, A.weight, A.level)


@given(st.dictionaries(st.sampled_from(SMALL_PRIMES), st.integers(-40, 40), max_size=30))
def test_ap_round_trip_property(ap):
    A = APTable("t", dict(sorted(ap.items())), 2, 7)
    assert parse_ap_text(format_ap_table(A)).ap == A.ap


# --- twists ----------------------------------------------------------------

@pytest.fixture(scope="module")
def level11():
    return ap_table_from_curve(LEVEL11_CURVE, 2000, 11, "11a")


def test_kronecker_character_mod8():
    assert kronecker_character(8, 8) == {1: 1, 3: -1, 5: -1, 7: 1}
    assert kronecker_character(-4, 4) == {1: 1, 3: -1}


def test_ramanujan_bound(level11):
    assert level11.ramanujan_violations() == []
    assert APTable("x", {5: 5, 7: 7}, 2, 1).ramanujan_violations() == [7]


@pytest.mark.parametrize("D, q", [(8, 8), (-4, 4), (-8, 8), (5, 5), (-3, 3)])
def test_recovers_planted_quadratic_twist(level11, D, q):
    chi = kronecker_character(D, q)
    A = twist_ap_table(level11, chi, q)
    found = detect_twist_character(A, level11, q)
    assert found is not None
    assert found.values == chi


def test_identity_gives_trivial_character(level11):
    found = detect_twist_character(level11, level11, 1)
    assert found.values == {0: 1}


def test_symmetry_up_to_conjugation(level11):
    A = twist_ap_table(level11, kronecker_character(8, 8), 8)
    ab = detect_twist_character(A, level11, 8)
    ba = detect_twist_character(level11, A, 8)
    assert ba == ab.conjugate()


def test_corrupted_sign_rejected(level11):
    A = twist_ap_table(level11, kronecker_character(8, 8), 8)
    p = next(p for p in sorted(A.ap) if A.ap[p] != 0 and p > 500)
    A.ap[p] = -A.ap[p]
    assert detect_twist_character(A, level11, 8) is None


def test_non_root_of_unity_ratio_rejected(level11):
    A = APTable("doubled", {p: 2 * a for p, a in level11.ap.items()}, 2, 11)
    assert detect_twist_character(A, level11, 8) is None


def test_insufficient_data(level11):
    small = APTable("s", {p: a for p, a in level11.ap.items() if p < 30}, 2, 11)
    with pytest.raises(InsufficientData) as exc:
        detect_twist_character(small, small, 8)
    assert set(exc.value.missing) <= {1, 3, 5, 7} and exc.value.missing


def test_weight_mismatch_flagged(level11):
    A = APTable("w", dict(level11.ap), 4, 11)
    assert detect_twist_character(A, level11, 1).weight_mismatch
