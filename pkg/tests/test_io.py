import json

import pytest
from hypothesis import given, strategies as st

from nonrep import (ClassifyConfig, Morphism, Property, classify, load_fixture,
                    parse_morphism, parse_word, render_morphism, render_word)
from nonrep import io
from nonrep.search import search_uniform_squarefree

morphisms = st.integers(2, 4).flatmap(lambda k: st.lists(
    st.lists(st.integers(0, k - 1), min_size=1, max_size=6), min_size=k, max_size=k)
).map(lambda rs: Morphism.from_raw([bytes(r) for r in rs]))


@given(morphisms)
def test_morphism_text_roundtrip(m):
    assert parse_morphism(render_morphism(m)) == m
    assert parse_morphism(render_morphism(m, ", ")) == m


def test_fixture_roundtrip():
    for name in io.fixture_names():
        obj = load_fixture(name)
        if isinstance(obj, Morphism):
            assert parse_morphism(render_morphism(obj)) == obj
        elif isinstance(obj, list):
            assert io.parse_census_table(io.fixture_text(name)) == obj
        else:
            assert parse_word(render_word(obj), obj.alphabet) == obj


def test_parse_examples():
    tm = parse_morphism("1 -> 10\n0 -> 01")
    assert tm.alphabet.size == 2 and str(tm.images[1]) == "10"
    assert parse_morphism("1 -> 121\n2 -> 232\n3 -> 313") == load_fixture("rank3")
    assert parse_morphism("a ⟶ abcab, b → acabcb, c -> acbcacb") == load_fixture("thue_1912")
    assert parse_word("abc") == parse_word("123")
    for bad in ("1 -> \n2 -> 2\n3 -> 3", "1 -> 1\n1 -> 2", "1 -> 14\n2 -> 2\n3 -> 3",
                "1 = 2", "", "12 -> 1"):
        with pytest.raises(ValueError):
            parse_morphism(bad)


def test_census_table():
    table = io.emit_census_table(search_uniform_squarefree(11))
    assert table == io.fixture_text("appendix_b")
    assert table.splitlines()[1] == "12131232123 13212321323 13213121323"
    assert io.emit_census_table(search_uniform_squarefree(5)) == "phi(1) phi(2) phi(3)\n"


def test_fixture_checksums(monkeypatch):
    assert len(load_fixture("appendix_b")) == 144
    assert len(load_fixture("leech").images[0]) == 13
    with pytest.raises(io.FixtureError):
        load_fixture("nonexistent")
    real = io._manifest()
    tampered = {k: dict(v) for k, v in real.items()}
    tampered["leech"]["sha256"] = "0" * 64
    monkeypatch.setattr(io, "_manifest", lambda: tampered)
    with pytest.raises(io.FixtureError):
        load_fixture("leech")
    assert load_fixture("rank3")


def test_fixture_files_are_clean():
    for name in io.fixture_names():
        text = io.fixture_text(name)
        assert "\r" not in text
        assert all(line == line.rstrip() for line in text.splitlines())
        assert io.fixture_info(name)["citation"]


def test_report_json_roundtrip():
    for name in ("rank3", "rank4", "thue_morse"):
        report = classify(load_fixture(name), ClassifyConfig(6, 2000))
        d = json.loads(io.dumps(io.morphism_report_to_dict(report)))
        back = io.morphism_report_from_dict(d)
        assert back.morphism == report.morphism
        assert back.decisions == report.decisions
        assert back.thue_status == report.thue_status
        for item in d["decisions"]:
            if item["verdict"] == "refuted_by":
                w = io.witness_from_dict(item["witness"])
                pre = report[Property(item["property"])].verdict.preimage
                assert w.check(report.morphism(pre))
    with pytest.raises(ValueError):
        io.morphism_report_from_dict({**d, "schema_version": 99})


def test_search_json():
    d = io.search_report_to_dict(search_uniform_squarefree(11))
    assert d["count"] == 144 and d["schema_version"] == io.SCHEMA_VERSION
    assert [c["size"] for c in d["orbit_classes"]] == [72, 72]
    assert "wall_time_ms" in d and "refutations" not in d
