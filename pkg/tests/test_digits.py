import pytest
from hypothesis import given, settings, strategies as st

from palintiple import (
    BadParameters,
    CarrySequence,
    DigitOutOfRange,
    DigitString,
    LeadingZero,
    NonIntegralDigit,
    NotAMultiple,
    PalintipleClass,
    classify_carries,
    concatenate,
    digits_from_carries,
    enumerate_palintiples,
    reverse_digits,
    schoolbook_multiply,
    verify_palintiple,
)
from palintiple.errors import PalintipleError

from oracles import brute_palintiples, from_base, longhand_carries, to_base

D = DigitString.parse


def test_parse_and_format_round_trip():
    d = D("105.0.233", 420)
    assert d.digits == (233, 0, 105)
    assert str(d) == "105.0.233"
    assert d.k == 2


def test_parse_rejects_out_of_range_digit():
    with pytest.raises(DigitOutOfRange):
        D("9.10", 10)
    with pytest.raises(PalintipleError):
        D("9.x", 10)


@pytest.mark.parametrize(
    "text,b,expected",
    [("9.8.0.1", 10, "1.0.8.9"), ("3.4.1", 5, "1.4.3"), ("7", 10, "7")],
)
def test_reverse_digits(text, b, expected):
    assert str(reverse_digits(D(text, b))) == expected


@pytest.mark.parametrize(
    "text,b,n,product,carries",
    [
        ("1.0.8.9", 10, 9, "9.8.0.1", (0, 8, 8, 0, 0)),
        ("2.1.9.7.8", 10, 4, "8.7.9.1.2", (0, 3, 3, 3, 0, 0)),
        ("1.3", 5, 2, "3.1", (0, 1, 0)),
    ],
)
def test_schoolbook_multiply(text, b, n, product, carries):
    out, cs = schoolbook_multiply(D(text, b), n)
    assert str(out) == product
    assert cs.carries == carries


@given(st.integers(3, 40).flatmap(lambda b: st.tuples(st.just(b), st.integers(2, b - 1), st.integers(0, 10**12))))
def test_schoolbook_matches_integer_product(args):
    b, n, value = args
    d = DigitString.from_int(value, b)
    out, cs = schoolbook_multiply(d, n)
    assert out.to_int() == n * value
    assert list(cs.carries) == longhand_carries(to_base(value, b), n, b)


def test_verify_worked_examples():
    rec = verify_palintiple(D("8.7.9.1.2", 10), 4)
    assert rec.cls is PalintipleClass.SYMMETRIC
    assert rec.carries.carries == (0, 3, 3, 3, 0, 0)
    assert verify_palintiple(D("9.8.9.0.1", 10), 9).cls is PalintipleClass.SYMMETRIC
    rec = verify_palintiple(D("3.1", 5), 2)
    assert rec.carries.carries == (0, 1, 0)
    assert rec.cls is PalintipleClass.SHIFTED_SYMMETRIC


def test_verify_errors():
    with pytest.raises(NotAMultiple):
        verify_palintiple(D("8.7.9.1.3", 10), 4)
    with pytest.raises(NotAMultiple):
        verify_palintiple(D("8.7.1.1", 10), 4)
    with pytest.raises(LeadingZero):
        verify_palintiple(D("8.7.1.0", 10), 4)
    with pytest.raises(LeadingZero):
        verify_palintiple(D("0.8.7.1.2", 10), 4)
    with pytest.raises(BadParameters):
        verify_palintiple(D("8.7.1.2", 10), 1)
    with pytest.raises(BadParameters):
        verify_palintiple(D("8.7.1.2", 10), 10)
    with pytest.raises(BadParameters):
        verify_palintiple(D("1.1", 2), 1)


@pytest.mark.parametrize(
    "carries,n,b,expected",
    [((0, 8, 8, 0, 0), 9, 10, "9.8.0.1"), ((0, 3, 3, 3, 0, 0), 4, 10, "8.7.9.1.2")],
)
def test_digits_from_carries(carries, n, b, expected):
    assert str(digits_from_carries(CarrySequence(carries, n), b)) == expected


def test_digits_from_carries_errors():
    with pytest.raises(NonIntegralDigit):
        digits_from_carries(CarrySequence((0, 1, 0, 0, 0), 4), 10)
    with pytest.raises(PalintipleError):
        digits_from_carries(CarrySequence((1, 0, 0), 2), 5)
    with pytest.raises(LeadingZero):
        digits_from_carries(CarrySequence((0, 0, 0, 0), 2), 5)


def test_classify_carries():
    assert classify_carries(CarrySequence((0, 3, 3, 3, 0, 0), 4), 4) is PalintipleClass.SYMMETRIC
    assert classify_carries(CarrySequence((0, 1, 1, 0), 2), 2) is PalintipleClass.SHIFTED_SYMMETRIC
    assert classify_carries(CarrySequence((0, 1, 2, 0, 0), 3)) is PalintipleClass.ASYMMETRIC


def test_concatenate_examples():
    p = verify_palintiple(D("8.7.1.2", 10), 4)
    assert str(concatenate(p, 2).digits) == "8.7.1.2.8.7.1.2"
    assert from_base([8, 7, 1, 2] * 2, 10) == 4 * from_base([2, 1, 7, 8] * 2, 10)
    assert concatenate(p, 1) is p
    q = verify_palintiple(D("9.8.0.1", 10), 9)
    assert str(concatenate(q, 3).digits) == "9.8.0.1.9.8.0.1.9.8.0.1"


def _all_small_palintiples():
    out = []
    for b in range(3, 13):
        for n, digits in sorted(brute_palintiples(b, 5)):
            out.append(verify_palintiple(DigitString.from_msd(digits, b), n))
    return out


SMALL = _all_small_palintiples()


def test_record_invariants_on_every_small_palintiple():
    assert len(SMALL) > 50
    for p in SMALL:
        n, b, k = p.n, p.base, p.k
        d, c = p.digits.digits, p.carries.carries
        assert digits_from_carries(p.carries, b) == p.digits
        for j in range(k + 1):
            assert b * c[j + 1] - c[j] == n * d[k - j] - d[j]
        assert d[k] == n * d[0] + c[k]
        assert max(c) <= n - 1
        assert c[0] == c[k + 1] == 0
        assert any(c)
        for m in range(1, 5):
            assert concatenate(p, m).digits.digits == d * m


@settings(max_examples=50, deadline=None)
@given(st.sampled_from(SMALL), st.integers(1, 4))
def test_concatenation_closure(p, m):
    q = concatenate(p, m)
    assert q.digits.to_int() == p.n * reverse_digits(q.digits).to_int()


def test_verify_agrees_with_brute_force_for_small_bases():
    # Every p < b**5 either verifies or is rejected, matching the integer test.
    for b in range(3, 8):
        expected = brute_palintiples(b, 5)
        got = set()
        for value in range(b, b**5):
            d = DigitString.from_int(value, b)
            for n in range(2, b):
                try:
                    verify_palintiple(d, n)
                except (NotAMultiple, LeadingZero):
                    continue
                got.add((n, d.msd_first()))
        assert got == expected, b


def test_enumerated_records_match_verify():
    for p in enumerate_palintiples(4, 10, 8):
        assert verify_palintiple(p.digits, 4) == p
