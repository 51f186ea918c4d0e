import random

import pytest
from hypothesis import given, strategies as st

from nonrep import (BINARY, TERNARY, Alphabet, Property, Word, enumerate_words,
                    find_cube, find_overlap, find_square, find_weak_square,
                    fixed_point_prefix, is_decreasing, is_increasing, load_fixture,
                    parse_word, shift)
from nonrep import _scan
from nonrep.words import Kind, find_all_kinds, is_free

from oracles import all_words, brute_clean_words, naive_first, regex_first

FINDERS = {Kind.SQUARE: find_square, Kind.CUBE: find_cube,
           Kind.OVERLAP: find_overlap, Kind.WEAK_SQUARE: find_weak_square}


def as_pair(witness):
    return None if witness is None else (witness.start - 1, witness.period)


@pytest.mark.parametrize("k,max_n", [(2, 12), (3, 8)])
def test_detectors_match_naive_oracle_exhaustively(k, max_n):
    alphabet = Alphabet(k)
    for n in range(max_n + 1):
        for w in all_words(k, n):
            word = Word(w, alphabet)
            for kind, find in FINDERS.items():
                assert as_pair(find(word)) == naive_first(w, kind), (list(w), kind)


def test_detectors_match_oracle_on_random_words():
    rng = random.Random(7)
    for _ in range(10_000):
        k = rng.choice((2, 3, 4))
        w = bytes(rng.randrange(k) for _ in range(rng.randrange(0, 40)))
        for kind in Kind:
            assert _scan.first(w, kind) == regex_first(w, kind), (list(w), kind)


def _planted(rng, base, kind):
    """A long repetition-poor word with one repetition planted late."""
    cut = rng.randrange(len(base) // 2, len(base) - 40)
    x = base[cut:cut + rng.randrange(1, 30)]
    a = base[cut - 1:cut]
    piece = {Kind.SQUARE: x + x, Kind.CUBE: x * 3,
             Kind.OVERLAP: a + x + a + x + a, Kind.WEAK_SQUARE: a + x + x + a}[kind]
    return base[:cut] + piece + base[cut:]


def test_long_scanner_matches_oracle():
    rng = random.Random(11)
    leech = fixed_point_prefix(load_fixture("leech"), 0, 3000).letters
    tm = fixed_point_prefix(load_fixture("thue_morse"), 1, 4096).letters
    for _ in range(60):
        base = rng.choice((leech[:rng.randrange(400, 3000)], tm[:rng.randrange(400, 4096)]))
        kinds = list(Kind)
        w = _planted(rng, base, rng.choice(kinds))
        hits = _scan.first_long(w, kinds)
        for kind in kinds:
            assert hits[kind] == regex_first(w, kind), kind


def test_long_scanner_on_clean_words():
    leech = fixed_point_prefix(load_fixture("leech"), 0, 5000).letters
    hits = _scan.first_long(leech, [Kind.SQUARE, Kind.CUBE, Kind.OVERLAP])
    assert hits == {Kind.SQUARE: None, Kind.CUBE: None, Kind.OVERLAP: None}


def test_examples():
    assert str(find_overlap(parse_word("212321232"))) == "overlap at 1 period 3"
    assert find_square(parse_word("1212")).start == 1
    assert find_weak_square(parse_word("11")).period == 0
    assert find_cube(parse_word("123123")) is None
    assert find_square(Word(b"", TERNARY)) is None


words = st.integers(2, 4).flatmap(
    lambda k: st.lists(st.integers(0, k - 1), max_size=30).map(lambda s: Word(bytes(s), Alphabet(k))))


@given(words)
def test_witness_rechecks(w):
    for kind, hit in find_all_kinds(w).items():
        if hit is not None:
            assert hit.check(w)
            assert hit.total_length == kind.total_length(hit.period)


@given(words, st.data())
def test_freeness_closed_under_factors(w, data):
    i = data.draw(st.integers(0, len(w)))
    j = data.draw(st.integers(i, len(w)))
    sub = Word(w.letters[i:j], w.alphabet)
    for prop in (Property.SQUAREFREE, Property.CUBEFREE, Property.OVERLAP_FREE,
                 Property.WEAKLY_SQUAREFREE):
        if is_free(w, prop):
            assert is_free(sub, prop)


def test_kind_implications():
    # a cube contains an overlap, an overlap contains a square
    for w in all_words(3, 9):
        word = Word(w, TERNARY)
        if find_cube(word):
            assert find_overlap(word)
        if find_overlap(word):
            assert find_square(word)


@pytest.mark.parametrize("k,n", [(2, 10), (3, 9)])
@pytest.mark.parametrize("props", [Property.SQUAREFREE, (Property.CUBEFREE,),
                                   (Property.CUBEFREE, Property.WEAKLY_SQUAREFREE)])
def test_enumeration_matches_brute_force(k, n, props):
    kinds = [props.kind] if isinstance(props, Property) else [p.kind for p in props]
    got = [w.letters for w in enumerate_words(Alphabet(k), n, props)]
    assert got == brute_clean_words(k, n, kinds)


def test_squarefree_counts():
    counts = [len(enumerate_words(TERNARY, n, Property.SQUAREFREE)) for n in range(12)]
    assert counts == [1, 3, 6, 12, 18, 30, 42, 60, 78, 108, 144, 204]


@given(st.lists(st.integers(0, 2), max_size=30))
def test_shift_is_a_bijection(s):
    w = Word(bytes(s), TERNARY)
    assert shift(shift(w, 1), -1) == w
    assert shift(shift(shift(w, 1), 1), 1) == w
    for prop in (Property.SQUAREFREE, Property.OVERLAP_FREE):
        assert is_free(shift(w, 1), prop) == is_free(w, prop)


def test_monotone_words():
    assert is_increasing(parse_word("1231"))
    assert is_decreasing(parse_word("1321"))
    assert not is_increasing(parse_word("121"))
    with pytest.raises(ValueError):
        shift(Word(b"\x00", BINARY), 1)


def test_word_accessors():
    w = parse_word("12321")
    assert w.letter(1) == 0 and w.letter(5) == 0
    assert str(w.factor(2, 3)) == "232"
    assert w.contains(parse_word("32"))
    with pytest.raises(IndexError):
        w.letter(6)
    with pytest.raises(ValueError):
        Word(b"\x03", TERNARY)
