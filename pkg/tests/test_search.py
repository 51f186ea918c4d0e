import itertools
import random

import pytest
from hypothesis import given, strategies as st

from nonrep import Morphism, audit_refutation, decide_squarefree, load_fixture
from nonrep.search import (TransformGroup, orbit_reduce, search_cyclic_squarefree,
                           search_triple_property, search_uniform_squarefree,
                           search_weakly_squarefree_thue, squarefree_pool)
from nonrep.io import emit_census_table

from oracles import SQUARE, brute_clean_words, brute_morphism_free, image, regex_first

GROUP = TransformGroup.full(3)

morphisms = st.lists(st.lists(st.integers(0, 2), min_size=1, max_size=4),
                     min_size=3, max_size=3).map(lambda rs: Morphism.from_raw([bytes(r) for r in rs]))


def test_group_is_closed():
    assert len(GROUP) == 72
    raws = {g: g for g in GROUP}
    probe = load_fixture("phi1_rank11")
    table = {g.apply_raw(probe.raw): g for g in GROUP}
    assert len(table) == 72
    for g, h in itertools.product(GROUP, repeat=2):
        gh = g.then(h)
        assert gh in raws
        assert gh.apply_raw(probe.raw) == h.apply_raw(g.apply_raw(probe.raw))


@given(morphisms)
def test_orbit_size_divides_group_order(m):
    assert 72 % len(GROUP.orbit(m)) == 0


@given(morphisms, st.sampled_from(GROUP.elements))
def test_transforms_preserve_squarefreeness(m, g):
    assert decide_squarefree(g(m)).proven == decide_squarefree(m).proven


def _brute_uniform(rank):
    pool = brute_clean_words(3, rank, [SQUARE])
    return sorted(raw for raw in itertools.product(pool, repeat=3)
                  if brute_morphism_free(raw, SQUARE, 3))


@pytest.mark.parametrize("rank", range(2, 6))
def test_census_matches_brute_force(rank):
    got = sorted(m.raw for m in search_uniform_squarefree(rank).survivors)
    assert got == _brute_uniform(rank)


@pytest.mark.parametrize("rank", range(2, 8))
def test_pruning_is_exact(rank):
    a = search_uniform_squarefree(rank)
    b = search_uniform_squarefree(rank, prune=False)
    assert a.survivors == b.survivors


def test_census_rank_11_and_12():
    r11 = search_uniform_squarefree(11)
    assert len(r11.survivors) == 144
    classes = r11.orbit_classes
    assert [c.size for c in classes] == [72, 72] and all(c.closed for c in classes)
    assert load_fixture("phi1_rank11") in classes[0].members + classes[1].members
    # survivors are genuinely squarefree, by the brute-force test
    for m in random.Random(3).sample(r11.survivors, 10):
        assert brute_morphism_free(m.raw, SQUARE, 6)
    assert len(search_uniform_squarefree(12).survivors) == 216


def test_workers_give_identical_tables():
    one = search_uniform_squarefree(11, workers=1)
    two = search_uniform_squarefree(11, workers=2)
    assert emit_census_table(one) == emit_census_table(two)


def test_orbit_reduce_partitions():
    ms = search_uniform_squarefree(11).survivors
    classes = orbit_reduce(ms)
    assert sorted(m.key() for c in classes for m in c.members) == sorted(m.key() for m in ms)
    for c in classes:
        assert c.representative.key() == min(Morphism.from_raw(r).key()
                                             for r in GROUP.orbit(c.members[0]))


def test_cyclic_census():
    for rank in range(2, 13):
        assert search_cyclic_squarefree(rank).survivors == []
    survivors = search_cyclic_squarefree(13).survivors
    assert load_fixture("leech") in survivors and len(survivors) == 6


@pytest.mark.parametrize("k,rank", [(3, 2), (3, 3), (2, 2), (2, 4), (2, 5)])
def test_weak_thue_sweep_refutes_everything(k, rank):
    rep = search_weakly_squarefree_thue(rank, k, test_len=6, prefix_len=2000)
    assert rep.survivors == []
    assert len(rep.refutations) == rep.candidate_pool_size
    for m, d in rep.refutations:
        assert audit_refutation(m, d)
        assert regex_first(image(m.raw, d.verdict.preimage.letters), d.property.kind) is not None


def test_triple_sweep():
    rep = search_triple_property(11)
    assert rep.survivors == [] and len(rep.refutations) == 144
    for m, d in rep.refutations:
        assert audit_refutation(m, d) and len(d.verdict.preimage) <= 8
    rep = search_triple_property(13, prefix_len=3000)
    assert load_fixture("leech") in rep.survivors


def test_rank_guard():
    with pytest.raises(ValueError):
        search_uniform_squarefree(1)
    with pytest.raises(ValueError):
        search_uniform_squarefree(14)
    assert len(squarefree_pool(5)) == 30
