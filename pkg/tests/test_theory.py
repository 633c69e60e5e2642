from itertools import product
from math import gcd

import pytest
from hypothesis import given, strategies as st

from palintiple import (
    BadParameters,
    CarryNotMultiple,
    DigitString,
    InvalidRSequence,
    NotDivisible,
    PairClass,
    PalintipleClass,
    RSequence,
    build_shifted_symmetric,
    choose_n_for_composite,
    congruence_solutions,
    enumerate_r_sequences,
    generate_symmetric,
    pair_class,
    recover_r_sequence,
    verify_palintiple,
)
from palintiple.theory import check_r_sequence

from oracles import brute_palintiples, from_base


@pytest.mark.parametrize(
    "n,b,expected",
    [
        (9, 10, PairClass.SYMMETRIC),
        (2, 5, PairClass.SHIFTED_SYMMETRIC),
        (5, 8, PairClass.ASYMMETRIC_CANDIDATE),
    ],
)
def test_pair_class(n, b, expected):
    assert pair_class(n, b) is expected


def test_pair_class_rejects_bad_parameters():
    with pytest.raises(BadParameters):
        pair_class(1, 10)
    with pytest.raises(BadParameters):
        pair_class(10, 10)


def test_congruence_solutions_examples():
    assert congruence_solutions(2, 5) == [1]
    assert congruence_solutions(9, 10) == []
    assert congruence_solutions(4, 13) == []


def test_trichotomy_and_congruence_exhaustive():
    for b in range(3, 201):
        for n in range(2, b):
            g = gcd(b - n, n * n - 1)
            sym = b % (n + 1) == 0
            shifted = g >= n + 1
            assert not (sym and shifted), (n, b)
            brute = [c for c in range(1, n) if (b - n) * c % (n * n - 1) == 0]
            assert congruence_solutions(n, b) == brute
            assert bool(brute) == shifted
            assert (pair_class(n, b) is PairClass.SHIFTED_SYMMETRIC) == shifted


@pytest.mark.parametrize(
    "m,expected",
    [(2, "3.1"), (3, "3.4.1"), (5, "3.4.4.4.1")],
)
def test_build_shifted_symmetric_examples(m, expected):
    rec = build_shifted_symmetric(2, 5, 1, m)
    assert str(rec.digits) == expected
    assert rec.cls is PalintipleClass.SHIFTED_SYMMETRIC


def test_build_shifted_symmetric_values():
    assert from_base([3, 1], 5) == 16 == 2 * 8
    assert from_base([3, 4, 1], 5) == 96 == 2 * 48


def test_build_shifted_symmetric_soundness():
    count = 0
    for b in range(3, 101):
        for n in range(2, b):
            for c in congruence_solutions(n, b):
                for m in range(2, 13):
                    rec = build_shifted_symmetric(n, b, c, m)
                    assert rec.carries.carries == (0,) + (c,) * (m - 1) + (0,)
                    count += 1
    assert count > 1000


def test_build_shifted_symmetric_rejects_non_solution():
    with pytest.raises(ValueError):
        build_shifted_symmetric(9, 10, 1, 2)


@pytest.mark.parametrize(
    "n,b,bits,expected",
    [
        (9, 10, (0, 1, 1, 0), "9.8.0.1"),
        (4, 10, (0, 1, 1, 1, 0), "8.7.9.1.2"),
        (2, 3, (0, 1, 1, 0), "2.1.0.1"),
    ],
)
def test_generate_symmetric_examples(n, b, bits, expected):
    rec = generate_symmetric(n, b, RSequence(bits))
    assert str(rec.digits) == expected
    assert rec.cls is PalintipleClass.SYMMETRIC


def test_generate_symmetric_errors():
    with pytest.raises(NotDivisible):
        generate_symmetric(2, 5, RSequence((0, 1, 1, 0)))
    with pytest.raises(InvalidRSequence):
        generate_symmetric(9, 10, RSequence((0, 1, 0, 1, 1, 0)))


def test_generator_soundness_and_carries():
    for b in range(3, 101):
        for n in range(2, b):
            if b % (n + 1):
                continue
            for m in range(4, 13):
                rs = enumerate_r_sequences(m - 1)
                assert rs, (b, m)
                for r in rs:
                    rec = generate_symmetric(n, b, r)
                    assert len(rec.digits) == m
                    assert rec.carries.carries == tuple((n - 1) * x for x in r.bits) + (0,)


def _brute_r_sequences(k):
    out = []
    for bits in product((0, 1), repeat=k + 1):
        try:
            out.append(check_r_sequence(bits))
        except InvalidRSequence:
            pass
    return out


@pytest.mark.parametrize("k", range(1, 14))
def test_enumerate_r_sequences_matches_exhaustive_scan(k):
    assert enumerate_r_sequences(k) == _brute_r_sequences(k)


def test_enumerate_r_sequences_examples():
    assert enumerate_r_sequences(2) == []
    assert enumerate_r_sequences(3) == [RSequence((0, 1, 1, 0))]
    assert enumerate_r_sequences(4) == [RSequence((0, 1, 1, 1, 0))]


def test_recover_r_sequence():
    p = verify_palintiple(DigitString.parse("9.8.0.1", 10), 9)
    assert recover_r_sequence(p).bits == (0, 1, 1, 0)
    p = verify_palintiple(DigitString.parse("8.7.9.1.2", 10), 4)
    assert recover_r_sequence(p).bits == (0, 1, 1, 1, 0)


def test_recover_r_sequence_degenerate_n2():
    # Every carry is a multiple of n - 1 = 1; the quotient (0, 1) is not a
    # palindromic r-sequence, so the record is rejected with the bits attached.
    p = verify_palintiple(DigitString.parse("3.1", 5), 2)
    with pytest.raises(InvalidRSequence) as exc:
        recover_r_sequence(p)
    assert exc.value.bits == (0, 1)


def test_recover_r_sequence_flags_non_multiple():
    p = verify_palintiple(DigitString.parse("4.9.6.1", 11), 3)
    assert p.cls is PalintipleClass.SHIFTED_SYMMETRIC
    with pytest.raises(CarryNotMultiple) as exc:
        recover_r_sequence(p)
    assert exc.value.index == 1


def test_symmetric_generator_completeness_small():
    # Every 4..5-digit palintiple of a (n+1) | b pair comes from an r-sequence.
    for b in range(3, 13):
        found = brute_palintiples(b, 5)
        for n in range(2, b):
            if b % (n + 1):
                continue
            made = {
                generate_symmetric(n, b, r).digits.msd_first()
                for m in (4, 5)
                for r in enumerate_r_sequences(m - 1)
            }
            assert made == {d for nn, d in found if nn == n and len(d) >= 4}


@pytest.mark.parametrize("b,expected", [(5, 2), (10, None), (14, 2), (7, 3), (20, 2), (22, None)])
def test_choose_n_for_composite(b, expected):
    assert choose_n_for_composite(b) == expected


@given(st.integers(4, 5000))
def test_choose_n_for_composite_property(b):
    n = choose_n_for_composite(b)
    if n is None:
        assert all((b + 1) % f for f in range(2, b + 1))
    else:
        assert 1 < n < b and (b + 1) % (n + 1) == 0
        assert all((b + 1) % (m + 1) for m in range(2, n))
