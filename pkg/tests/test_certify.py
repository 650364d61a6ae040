import json
from decimal import Decimal

import pytest
from mpmath import mpf

import oracle as O
from hypvol.certify import (
    PRINTED_TABLES,
    Certificate,
    LemmaId,
    Piece,
    Status,
    bisection_certificate,
    certify_lemma,
    certify_noboundarycross,
    certify_tail,
    certify_window,
    check,
    evaluate_row,
    floor3,
    parse_kind,
    replay,
    verify_table,
)
from hypvol.interval import Interval, numeric_config


def test_parse_kind_and_check():
    assert parse_kind("km_volume>6.89")[0:2] == ("km_volume", ">")
    assert parse_kind("t1.muffin>=5.303")[0] == "t1.muffin"
    with pytest.raises(ValueError):
        parse_kind("nonsense")
    iv = Interval(1.0, 2.0)
    assert check(iv, ">", parse_kind("x>0.5")[2]) is True
    assert check(iv, ">", parse_kind("x>2")[2]) is False
    assert check(iv, ">", parse_kind("x>1.5")[2]) is None
    assert check(iv, "<", parse_kind("x<3")[2]) is True


def test_floor3_truncates():
    assert floor3(6.9089) == Decimal("6.908")
    assert floor3(0.6299999) == Decimal("0.629")


@pytest.mark.parametrize("table_id", [1, 2])
def test_tables_certified(table_id):
    rows, cert = verify_table(table_id)
    assert cert.status is Status.CERTIFIED
    assert len(rows) == len(PRINTED_TABLES[table_id])
    for row, entry in zip(rows, PRINTED_TABLES[table_id]):
        assert row.ok, row.failing()
        assert row.printed_label in row.H.label.split(",")
        # every printed value is reproduced exactly after truncation
        assert str(row.muffin_lb) == entry[2]
        assert str(row.area_lb) == entry[3]
        assert str(row.vol_lb) == entry[6]


def test_table_rows_vs_oracle():
    # the row bound is below the pointwise oracle value everywhere in the row
    for table_id, fams in ((1, ("EF",)), (2, ("LM",))):
        for entry in PRINTED_TABLES[table_id]:
            box = Interval.from_decimal(entry[0], entry[1])
            ev = evaluate_row(table_id, box)
            for x in (entry[0], entry[1]):
                m = mpf(x)
                assert mpf(ev.volume.lo) <= O.km_volume(m, fams)
                assert mpf(ev.muffin.lo) <= O.muffin(m)


def test_table_certificate_replays():
    _, cert = verify_table(1)
    again = Certificate.from_json(json.loads(cert.dumps()))
    assert again.to_json() == cert.to_json()
    assert replay(again) is Status.CERTIFIED


def test_tampered_table_certificate_fails_replay():
    _, cert = verify_table(2)
    d = cert.to_json()
    d["pieces"][0]["kind"] = "t2.muffin>=9.0"
    assert replay(d) is Status.FALSIFIED


def test_window_certified_and_replayed():
    cert = certify_window("6.89", "1.215", "1.439")
    assert cert.status is Status.CERTIFIED
    assert len(cert.pieces) <= 10**4
    los = [p.lo for p in cert.pieces]
    assert los == sorted(los)
    assert all(a.hi == b.lo for a, b in zip(cert.pieces, cert.pieces[1:]))
    assert replay(cert) is Status.CERTIFIED
    assert cert.pieces[0].lo <= 1.215 and cert.pieces[-1].hi >= 1.439


def test_window_7_2_falsified():
    cert = certify_window("7.2", "1.215", "1.439")
    assert cert.status is Status.FALSIFIED
    assert replay(cert) is Status.FALSIFIED


def test_window_depth_limited_is_inconclusive():
    # true minimum is about 6.94; a target just below needs deep refinement
    cert = certify_window("6.93", "1.215", "1.439", max_depth=2)
    assert cert.status is Status.INCONCLUSIVE


def test_window_below_floor_rejected():
    with pytest.raises(ValueError):
        certify_window("6.89", "1.1", "1.2")


def test_window_threads_deterministic():
    a = certify_window("6.89", "1.215", "1.439", threads=1)
    b = certify_window("6.89", "1.215", "1.439", threads=4)
    assert a.to_json() == b.to_json()


def test_config_digest_depends_on_numeric_config():
    a = certify_window("6.89", "1.215", "1.25")
    with numeric_config(slack_steps=4):
        b = certify_window("6.89", "1.215", "1.25")
    assert a.config_digest != b.config_digest
    assert b.status is Status.CERTIFIED


def test_tail():
    cert, ws = certify_tail()
    assert cert.status is Status.CERTIFIED
    by_name = {w.name: w for w in ws}
    assert by_name["V_combined(1.439)"].value.lo > 7.0
    r = by_name["cosh_R(1.439)"].value
    assert 1.4 < r.lo and r.hi < 1.5
    assert replay(cert) is Status.CERTIFIED


def test_noboundarycross():
    cert = certify_noboundarycross()
    assert cert.status is Status.CERTIFIED
    assert cert.pieces[0].lo <= 1.001
    # the gap vanishes at d = 0, so a sweep starting at 1 cannot certify
    assert certify_noboundarycross(lo="1", max_depth=8).status is not Status.CERTIFIED


@pytest.mark.parametrize("lemma", list(LemmaId))
def test_every_lemma_certifies(lemma):
    rep = certify_lemma(lemma)
    assert rep.verdict is Status.CERTIFIED, [w for w in rep.witnesses if not w.holds]
    json.dumps(rep.to_json())


def test_bisection_generic_and_piece_json():
    cert = bisection_certificate("demo", "cosh_R<2", Interval(1.2, 3.0), max_depth=5)
    assert cert.status is Status.CERTIFIED
    p = cert.pieces[0]
    assert Piece.from_json(p.to_json()) == p
