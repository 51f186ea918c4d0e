import itertools

import pytest
from hypothesis import given, settings, strategies as st

from nonrep import BINARY, TERNARY, Alphabet, Property, Word, load_fixture, parse_word
from nonrep.avoid import (AvoidanceQuery, ExhaustedAt, ForbiddenOccurrence, OpenAt,
                          admissible_words, avoidance_by_morphism, explored_tree,
                          max_avoiding, tree_to_dot, verify_avoidance)

from oracles import SQUARE, all_words, clean, contains_factor, regex_first

PROPS = {Property.SQUAREFREE: SQUARE}


def brute_admissible(k, n, forbidden, kinds):
    return [w for w in all_words(k, n)
            if clean(w, kinds) and not any(contains_factor(w, f) for f in forbidden)]


@pytest.mark.parametrize("forbidden", [(), ("12",), ("123",), ("121", "232")])
def test_tree_matches_generate_and_filter(forbidden):
    q = AvoidanceQuery(TERNARY, forbidden)
    raw = [f.letters for f in q.forbidden]
    for n in range(11):
        assert [w.letters for w in admissible_words(q, n)] == brute_admissible(3, n, raw, [SQUARE])


def test_maximum_without_12():
    out = max_avoiding(AvoidanceQuery(TERNARY, ("12",)))
    assert out.status.max_len == 13
    assert parse_word("bcbacbcacbaca", TERNARY) in out.status.witnesses
    # brute force agrees there is nothing of length 14
    assert brute_admissible(3, 14, [b"\x00\x01"], [SQUARE]) == []


def test_maximum_without_123():
    out = max_avoiding(AvoidanceQuery(TERNARY, ("123",)))
    assert isinstance(out.status, ExhaustedAt)
    assert out.status.max_len == 29 <= 36


def test_binary_cubefree_weakly_squarefree():
    q = AvoidanceQuery(BINARY, (), (Property.CUBEFREE, Property.WEAKLY_SQUAREFREE))
    st_ = max_avoiding(q).status
    assert st_ == ExhaustedAt(5, (parse_word("12121", BINARY), parse_word("21212", BINARY)))


def test_aba_type_stays_open():
    out = max_avoiding(AvoidanceQuery(TERNARY, ("121",), budget=300))
    assert isinstance(out.status, OpenAt) and out.status.budget == 300


def test_open_tree():
    out = max_avoiding(AvoidanceQuery(Alphabet(4), ("12",), budget=200))
    assert isinstance(out.status, OpenAt) and len(out.status.witness) == 200
    ok, _ = verify_avoidance(out.status.witness, AvoidanceQuery(Alphabet(4), ("12",)))
    assert ok


@pytest.mark.parametrize("forbidden", ["12", "21", "13", "123", "132"])
def test_witnesses_are_maximal_and_valid(forbidden):
    q = AvoidanceQuery(TERNARY, (forbidden,))
    st_ = max_avoiding(q).status
    for w in st_.witnesses:
        assert len(w) == st_.max_len
        assert verify_avoidance(w, q) == (True, None)
        for c in range(3):
            assert not verify_avoidance(Word(w.letters + bytes((c,)), TERNARY), q)[0]


def test_relabeling_invariance():
    lengths = set()
    for a, b in itertools.permutations("123", 2):
        lengths.add(max_avoiding(AvoidanceQuery(TERNARY, (a + b,))).status.max_len)
    assert lengths == {13}
    lengths = {max_avoiding(AvoidanceQuery(TERNARY, ("".join(p),))).status.max_len
               for p in itertools.permutations("123")}
    assert lengths == {29}


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(st.integers(1, 3), min_size=2, max_size=3).map(
    lambda s: "".join(map(str, s))), min_size=1, max_size=3))
def test_monotonicity(forbidden):
    base = max_avoiding(AvoidanceQuery(TERNARY, ("12",), budget=200)).status
    more = max_avoiding(AvoidanceQuery(TERNARY, tuple(forbidden) + ("12",), budget=200)).status
    assert more.max_len <= base.max_len


def test_verify_avoidance_examples():
    q = AvoidanceQuery(TERNARY, ("aba",))
    assert verify_avoidance(parse_word("aba", TERNARY), q) == (
        False, ForbiddenOccurrence(parse_word("aba", TERNARY), 1))
    assert verify_avoidance(Word(b"", TERNARY), q) == (True, None)
    ok, why = verify_avoidance(parse_word("1313", TERNARY), AvoidanceQuery(TERNARY))
    assert not ok and why.start == 1 and why.period == 2


def test_word718():
    w = load_fixture("word718")
    assert len(w) == 718
    assert regex_first(w.letters, SQUARE) is None
    assert verify_avoidance(w, AvoidanceQuery(w.alphabet, ("aba",))) == (True, None)
    ok, why = verify_avoidance(w, AvoidanceQuery(w.alphabet, ("aba", "bab")))
    # the printed word does contain bab
    assert not ok and str(why.factor) == "bab" and why.start == 24


def test_avoidance_by_morphism():
    r = avoidance_by_morphism(load_fixture("thue_1912"), 0, (), 100_000)
    assert r.clean and r.prefix_length >= 100_000
    r = avoidance_by_morphism(load_fixture("thue_1912_abc"), 0, ("aba",), 10_000)
    assert not r.clean and str(r.violation.factor) == "aba"
    r = avoidance_by_morphism(load_fixture("thue_1912"), 0, ("1",), 1)
    assert r.prefix_length == 1 and not r.clean
    r = avoidance_by_morphism(load_fixture("thue_1912"), 0, ("2",), 1)
    assert r.clean
    with pytest.raises(ValueError):
        avoidance_by_morphism(load_fixture("thue_1912"), 1, (), 10)


def test_dot_export():
    q = AvoidanceQuery(TERNARY, ("12",))
    nodes = explored_tree(q, 10_000)
    admissible = {w for w, good in nodes if good}
    assert max(len(w) for w in admissible) == 13
    dot = tree_to_dot(q, 100)
    assert dot.startswith("digraph avoidance {") and dot.rstrip().endswith("}")
    assert '"1" -> "12"' in dot


def test_query_validation():
    with pytest.raises(ValueError):
        AvoidanceQuery(TERNARY, ("",))
    with pytest.raises(ValueError):
        AvoidanceQuery(TERNARY, budget=0)
    with pytest.raises(ValueError):
        AvoidanceQuery(TERNARY, ("14",))
