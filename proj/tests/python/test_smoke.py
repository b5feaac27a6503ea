import math

import pytest

import cacforge


def test_common_mode_delay():
    tau = 8 / math.pi**2 * 1.42
    assert cacforge.pattern_delay("UUUUU", 2) == pytest.approx(tau * math.log(8 / math.pi), rel=1e-6)


def test_classify_middle():
    rows = cacforge.classify("middle")
    assert len(rows) == 25
    assert {r["cls"] for r in rows} == set(range(7))
    assert any("UDUDU" in r["patterns"] for r in rows if r["cls"] == 6)


def test_seeds_and_sizes():
    c0, c1 = cacforge.seed_codebooks("C2,1C")
    assert c0 == [0, 3, 15, 24, 30, 31]
    assert c1 == [0, 1, 7, 16, 28, 31]
    assert len(cacforge.build("C3,1C", 10)) == 28
    assert len(cacforge.classic("olc", 10)) == 28
    assert len(cacforge.iolc(10)) == 12
    assert cacforge.codebook_size("C4,2C", 60) == 2 * 2504730781961  # 2 F_61


def test_recursion_report():
    r = cacforge.recursion("C3,1C")
    assert r["identity_ok"] and r["recursion_ok"]
    assert r["sizes"][:3] == [7, 9, 12]


def test_worst_delay_ordering():
    iolc = cacforge.worst_delay(cacforge.iolc(10), 10)["worst_ps"]
    c21 = cacforge.worst_delay(cacforge.build("C2,1C", 10), 10)["worst_ps"]
    olc = cacforge.worst_delay(cacforge.classic("olc", 10), 10)["worst_ps"]
    assert iolc < c21 < olc


def test_codec_round_trip():
    t = cacforge.RankTable("C3,1C", 16)
    assert t.total == 151
    assert t.data_bits == 7
    for x in range(1 << t.data_bits):
        assert t.decode(t.encode(x)) == x
    with pytest.raises(ValueError):
        t.encode(1 << t.data_bits)
    with pytest.raises(ValueError):
        t.decode(0b0101010101010101)


def test_errors():
    with pytest.raises(ValueError):
        cacforge.build("C0,0C", 8)
    with pytest.raises(ValueError):
        cacforge.classify("nowhere")
