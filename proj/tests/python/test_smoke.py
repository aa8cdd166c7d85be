import json
import pathlib

import pytest

import adequacy

CORPUS = pathlib.Path(__file__).resolve().parents[2] / "corpus"

SL2_7 = {"field": {"prime": 7}, "dimension": 2, "generators": [[[1, 1], [0, 1]], [[1, 0], [1, 1]]], "label": "sl2-l7"}


def test_sl2_report():
    r = adequacy.report(SL2_7)
    assert r["order"] == 336
    assert r["d"] == 2
    assert r["adequate"] is True
    assert r["hypothesis-met"] is True
    assert r["condition-c"]["by-span"]["dim-Z"] == 4
    assert list(r)[:3] == ["label", "l", "n"]


def test_report_accepts_text():
    assert adequacy.report(json.dumps(SL2_7))["order"] == 336


def test_corpus_expected_verdicts():
    files = sorted(CORPUS.glob("*.json"))
    assert len(files) >= 10
    for path in files:
        r = adequacy.report(path.read_text())
        assert r["expected-mismatches"] == [], path.name
        assert r["theorem-consistent"], path.name


def test_spec_error_position():
    text = '{\n  "field": {"prime": 4},\n  "dimension": 2,\n  "generators": []\n}'
    with pytest.raises(adequacy.SpecError) as info:
        adequacy.report(text)
    assert info.value.line == 2
    assert info.value.column == 22
    assert isinstance(info.value, adequacy.AdequacyError)


def test_cap_error():
    with pytest.raises(adequacy.CapError):
        adequacy.closure(SL2_7, cap_order=100)
    with pytest.raises(adequacy.CapError):
        adequacy.cohomology(SL2_7, "ad0", cap_unknowns=10)


def test_closure_and_cohomology():
    c = adequacy.closure(SL2_7)
    assert c["order"] == 336
    assert c["order-core"] == 336
    h = adequacy.cohomology(SL2_7, "ad0")
    assert (h["h0"], h["h1"]) == (0, 0)
    transvection = {"field": {"prime": 5}, "dimension": 2, "generators": [[[1, 1], [0, 1]]]}
    assert adequacy.cohomology(transvection, "trivial")["h1"] == 1


def test_condition_c_and_meataxe():
    s3 = next(s for s in adequacy.zoo("negative") if s["label"] == "s3-perm-l5")
    m = adequacy.meataxe(s3)
    assert m["irreducible"] is False
    assert len(m["witness"]["basis"]) in (1, 2)
    assert adequacy.report(s3)["reducibility-witness"]["basis"] == [[1, 1, 1]]
    pm = next(s for s in adequacy.zoo("negative") if s["label"] == "pm-transvection-l7")
    c = adequacy.condition_c(pm)
    assert c["holds"] is False
    assert c["dim-Z"] == 1
    assert adequacy.condition_c(SL2_7)["holds"] is True


def test_exp_log_roundtrip():
    x = [[0, 1, 0], [0, 0, 1], [0, 0, 0]]
    u = adequacy.exp_nilpotent(5, x)
    assert u == [[1, 1, 3], [0, 1, 1], [0, 0, 1]]
    assert adequacy.log_unipotent(5, u) == x


def test_bounded_characters():
    v = adequacy.bounded_characters(7, [[1, 0], [0, 1]], [[1, 0], [0, 1]])
    assert v["holds"] is True
    assert v["region-points"] > 0


def test_zoo_and_tensor():
    specs = adequacy.zoo("prime-to-l")
    assert len(specs) >= 15
    assert adequacy.normalize_spec(specs[0]) == specs[0]
    d8 = next(s for s in specs if s["label"] == "d8-l7")
    assert adequacy.tensor_condition_c(d8, d8) is True
