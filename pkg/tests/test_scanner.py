import json

import pytest

from palintiple import (
    BadParameters,
    CheckpointCorrupt,
    PalintipleClass,
    build_shifted_symmetric,
    choose_n_for_composite,
    congruence_solutions,
)
from palintiple.scanner import (
    CONGRUENCE,
    BaseReport,
    base_report,
    enumerate_mode,
    figure1_csv,
    figure1_dataset,
    is_prime,
    load_checkpoint,
    scan_bases,
)


def test_is_prime():
    assert is_prime(11)
    assert not is_prime(6)
    assert [m for m in range(30) if is_prime(m)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


@pytest.mark.parametrize(
    "b,symmetric,strong",
    [(5, True, False), (8, False, False), (4, True, True), (10, True, True), (3, True, True)],
)
def test_base_report_examples(b, symmetric, strong):
    rep = base_report(b)
    assert rep.is_symmetric_base is symmetric
    assert rep.is_strongly_symmetric is strong
    assert [r.n for r in rep.rows] == list(range(2, b))


def test_base_report_invariants():
    for b in range(3, 40):
        rep = base_report(b)
        asym = [r for r in rep.rows if r.pair_class.value == "asymmetric-candidate" and r.exists]
        shifted = [r for r in rep.rows if r.pair_class.value == "shifted-symmetric" and r.exists]
        assert rep.is_symmetric_base == (not asym)
        assert rep.is_strongly_symmetric == (not asym and not shifted)


def test_base_report_rejects_small_base():
    with pytest.raises(BadParameters):
        base_report(2)
    with pytest.raises(BadParameters):
        base_report(10, "fancy")


def test_early_exit_truncates_rows():
    full = base_report(20)
    short = base_report(20, early_exit=True)
    assert short.witness.n == full.witness.n
    assert short.rows == full.rows[: len(short.rows)]
    assert short.complete is False
    assert short.is_symmetric_base == full.is_symmetric_base is False


def test_scan_base_lists():
    s = scan_bases(3, 20)
    assert s.asymmetric_bases == [8, 11, 14, 15, 17, 18, 19, 20]
    assert s.symmetric_bases == [3, 4, 5, 6, 7, 9, 10, 12, 13, 16]
    assert s.strongly_symmetric_bases == [3, 4, 6, 10, 12, 16]
    assert s.theorem6_violations == []
    notes = "\n".join(s.notes)
    for b in (10, 12, 16):
        assert f"base {b}:" in notes and "conjectured" in notes


def test_mode_agreement():
    a = scan_bases(3, 20, CONGRUENCE, early_exit=False)
    b = scan_bases(3, 20, enumerate_mode(8), early_exit=False)
    for x, y in zip(a.reports, b.reports):
        assert (x.is_symmetric_base, x.is_strongly_symmetric) == (y.is_symmetric_base, y.is_strongly_symmetric)
        assert not y.disagreements
    rows = {r.n: r for r in b.reports[5].rows}  # base 8
    assert PalintipleClass.ASYMMETRIC in rows[5].observed


def test_checkpoint_resume_determinism(tmp_path):
    whole = scan_bases(3, 30, checkpoint_path=tmp_path / "a.jsonl")
    ck = tmp_path / "b.jsonl"
    first = scan_bases(3, 17, checkpoint_path=ck)
    resumed = scan_bases(3, 30, checkpoint_path=ck)
    assert [r.to_dict() for r in resumed.reports] == [r.to_dict() for r in whole.reports]
    assert (tmp_path / "a.jsonl").read_text() == ck.read_text()
    assert len(first.reports) == 15


def test_resume_skips_done_bases(tmp_path, monkeypatch):
    ck = tmp_path / "c.jsonl"
    scan_bases(3, 10, checkpoint_path=ck)
    import palintiple.scanner as sc

    calls = []
    real = sc.base_report
    monkeypatch.setattr(sc, "base_report", lambda b, *a: calls.append(b) or real(b, *a))
    scan_bases(3, 12, checkpoint_path=ck)
    assert calls == [11, 12]


def test_parallel_matches_serial(tmp_path):
    serial = scan_bases(3, 60)
    par = scan_bases(3, 60, parallelism=3, checkpoint_path=tmp_path / "p.jsonl")
    assert [r.to_dict() for r in par.reports] == [r.to_dict() for r in serial.reports]
    lines = (tmp_path / "p.jsonl").read_text().splitlines()
    assert [json.loads(l)["base"] for l in lines] == list(range(3, 61))


def test_corrupt_checkpoint(tmp_path):
    ck = tmp_path / "bad.jsonl"
    ck.write_text('{"base": 3}\nnot json\n')
    with pytest.raises(CheckpointCorrupt):
        scan_bases(3, 5, checkpoint_path=ck)


def test_checkpoint_mode_mismatch(tmp_path):
    ck = tmp_path / "m.jsonl"
    scan_bases(3, 5, checkpoint_path=ck)
    with pytest.raises(CheckpointCorrupt):
        scan_bases(3, 6, enumerate_mode(6), checkpoint_path=ck)


def test_partial_trailing_line_is_dropped(tmp_path):
    ck = tmp_path / "t.jsonl"
    scan_bases(3, 8, checkpoint_path=ck)
    text = ck.read_text()
    ck.write_text(text + text.splitlines()[0][:20])
    assert sorted(load_checkpoint(ck)) == list(range(3, 9))
    assert ck.read_text() == text
    assert scan_bases(3, 9, checkpoint_path=ck).symmetric_bases == [3, 4, 5, 6, 7, 9]


def test_report_round_trip():
    rep = base_report(12, enumerate_mode(6))
    again = BaseReport.from_dict(json.loads(json.dumps(rep.to_dict())))
    assert again.to_dict() == rep.to_dict()


def test_scan_csv():
    text = scan_bases(7, 9).to_csv()
    assert text.splitlines() == [
        "base,is_symmetric,is_strongly_symmetric,witness_n,witness_min_digits",
        "7,true,false,,",
        "8,false,false,5,4",
        "9,true,false,,",
    ]


def test_contrapositive_construction():
    for b in range(4, 120):
        if is_prime(b + 1):
            assert choose_n_for_composite(b) is None
            continue
        n = choose_n_for_composite(b)
        c = congruence_solutions(n, b)[0]
        assert build_shifted_symmetric(n, b, c, 2).cls is PalintipleClass.SHIFTED_SYMMETRIC
        assert not base_report(b).is_strongly_symmetric


def test_figure1_rows():
    rows = figure1_dataset(3, 10)
    keyed = {(r.base, r.n, r.digits): r for r in rows}
    r = keyed[(10, 9, "9.8.0.1")]
    assert (r.digit_count, r.d0, r.dk) == (4, 1, 9)
    r = keyed[(10, 4, "8.7.1.2")]
    assert (r.digit_count, r.d0, r.dk) == (4, 2, 8)
    r = keyed[(5, 2, "3.1")]
    assert (r.digit_count, r.d0, r.dk) == (2, 1, 3)
    for r in rows:
        assert r.dk == r.n * r.d0 + r.ck
        assert 0 <= r.ck <= r.n - 1
    csv_text = figure1_csv(rows)
    assert csv_text.splitlines()[0] == "base,n,digit_count,d0,dk,digits"
    assert "10,9,4,1,9,9.8.0.1" in csv_text.splitlines()
