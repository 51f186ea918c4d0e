"""Exhaustive searches over uniform morphisms, with orbit reduction.

The squarefree census prunes on pairs: phi(ab) is a factor of the image of a
squarefree word of length 3 (``aba`` or ``abc``), so a pair of images whose
concatenation (either way round) has a square can never occur in a squarefree
morphism.  ``prune=False`` runs the plain length-3 test on every triple.
"""
from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

from . import _scan
from ._scan import Kind
from .classify import (PropertyDecision, RefutedBy, check_bounded, decide_squarefree,
                       shared_end_refutation)
from .morphisms import Morphism, apply_raw
from .words import Alphabet, Property, RepetitionWitness, Word, clean_levels

MAX_RANK = 13


@dataclass(frozen=True)
class Transform:
    """phi -> [reverse o] post o phi o pre, for letter permutations."""

    post: tuple[int, ...]
    pre: tuple[int, ...]
    reverse: bool = False

    def apply_raw(self, raw):
        table = bytes(self.post) + bytes(range(len(self.post), 256))
        out = []
        for x in range(len(raw)):
            img = raw[self.pre[x]].translate(table)
            out.append(img[::-1] if self.reverse else img)
        return tuple(out)

    def __call__(self, m: Morphism) -> Morphism:
        return Morphism.from_raw(self.apply_raw(m.raw), m.alphabet)

    def then(self, outer: "Transform") -> "Transform":
        """``outer`` applied after ``self``."""
        return Transform(
            post=tuple(outer.post[c] for c in self.post),
            pre=tuple(self.pre[outer.pre[x]] for x in range(len(self.pre))),
            reverse=self.reverse != outer.reverse,
        )


class TransformGroup:
    """Transforms built from pre/post letter permutations and reversal."""

    def __init__(self, elements):
        self.elements = list(elements)

    @classmethod
    def full(cls, k: int = 3) -> "TransformGroup":
        perms = list(itertools.permutations(range(k)))
        return cls(Transform(s1, s2, rev) for rev in (False, True)
                   for s1 in perms for s2 in perms)

    @classmethod
    def trivial(cls, k: int = 3) -> "TransformGroup":
        ident = tuple(range(k))
        return cls([Transform(ident, ident, False)])

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def orbit(self, m: Morphism) -> set:
        return {g.apply_raw(m.raw) for g in self.elements}


@dataclass
class OrbitClass:
    representative: Morphism
    members: list
    full_orbit_size: int

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def closed(self) -> bool:
        return self.size == self.full_orbit_size


def _key(raw) -> str:
    return "|".join("".join(str(c + 1) for c in img) for img in raw)


def orbit_reduce(morphisms, group: TransformGroup | None = None) -> list[OrbitClass]:
    """Partition ``morphisms`` into orbits; the representative is the
    lex-least serialization over the whole orbit."""
    morphisms = list(morphisms)
    if not morphisms:
        return []
    group = group or TransformGroup.full(morphisms[0].alphabet.size)
    classes: dict[tuple, OrbitClass] = {}
    for m in morphisms:
        orbit = group.orbit(m)
        canon = min(orbit, key=_key)
        cls = classes.get(canon)
        if cls is None:
            cls = classes[canon] = OrbitClass(Morphism.from_raw(canon, m.alphabet), [], len(orbit))
        cls.members.append(m)
    return sorted(classes.values(), key=lambda c: c.representative.key())


class RefutationLog:
    """Compact store of (morphism, refutation) pairs for large sweeps."""

    def __init__(self, alphabet: Alphabet):
        self.alphabet = alphabet
        self._rows = []

    def add(self, raw, prop: Property, preimage: bytes, start: int, period: int):
        self._rows.append((raw, prop, preimage, start, period))

    def add_decision(self, m: Morphism, d: PropertyDecision):
        v = d.verdict
        self.add(m.raw, d.property, v.preimage.letters, v.witness.start, v.witness.period)

    def __len__(self):
        return len(self._rows)

    def __iter__(self):
        for raw, prop, pre, start, period in self._rows:
            m = Morphism.from_raw(raw, self.alphabet)
            w = RepetitionWitness(prop.kind, start, period)
            yield m, PropertyDecision(prop, RefutedBy(Word(pre, self.alphabet), w))

    def counts(self) -> dict:
        out = {}
        for row in self._rows:
            out[row[1].value] = out.get(row[1].value, 0) + 1
        return out


@dataclass
class SearchReport:
    rank: int
    property_filter: str
    alphabet_size: int
    candidate_pool_size: int
    survivors: list
    orbit_classes: list = field(default_factory=list)
    wall_time: float = 0.0
    refutations: RefutationLog | list = field(default_factory=list)
    partial: bool = False
    notes: dict = field(default_factory=dict)


def _check_rank(rank: int, allow_large_rank: bool, low: int = 2):
    if rank < low or (rank > MAX_RANK and not allow_large_rank):
        raise ValueError(f"rank must be in {low}..{MAX_RANK} (got {rank})")


@lru_cache(maxsize=None)
def squarefree_pool(rank: int, k: int = 3) -> tuple[bytes, ...]:
    *_, level = clean_levels(k, rank, Property.SQUAREFREE)
    return tuple(level)


@lru_cache(maxsize=4)
def _compat(rank: int) -> tuple[frozenset, ...]:
    pool = squarefree_pool(rank)
    r = rank
    ok = [[False] * len(pool) for _ in pool]
    for i, a in enumerate(pool):
        for j, b in enumerate(pool):
            ok[i][j] = not _scan.ends_after(a + b, Kind.SQUARE, r)
    return tuple(frozenset(j for j in range(len(pool)) if j != i and ok[i][j] and ok[j][i])
                 for i in range(len(pool)))


_TEST3 = tuple(bytes(w) for w in itertools.product(range(3), repeat=3)
               if w[0] != w[1] and w[1] != w[2])


def _triples_pruned(rank: int, outer) -> list:
    pool = squarefree_pool(rank)
    compat = _compat(rank)
    span = 2 * rank
    out = []
    for i in outer:
        for j in sorted(compat[i]):
            for k in sorted(compat[i] & compat[j]):
                raw = (pool[i], pool[j], pool[k])
                if all(not _scan.ends_after(apply_raw(raw, t), Kind.SQUARE, span) for t in _TEST3):
                    out.append(raw)
    return out


def _triples_unpruned(rank: int, outer) -> list:
    pool = squarefree_pool(rank)
    out = []
    for i in outer:
        for b in pool:
            for c in pool:
                raw = (pool[i], b, c)
                if all(_scan.first_short(apply_raw(raw, t), Kind.SQUARE) is None for t in _TEST3):
                    out.append(raw)
    return out


def _squarefree_chunk(args):
    rank, prune, outer = args
    return (_triples_pruned if prune else _triples_unpruned)(rank, outer)


def search_uniform_squarefree(rank: int, prune: bool = True, workers: int = 1,
                              allow_large_rank: bool = False,
                              time_budget: float | None = None) -> SearchReport:
    """All uniform squarefree ternary morphisms of the given rank."""
    _check_rank(rank, allow_large_rank)
    t0 = time.perf_counter()
    pool = squarefree_pool(rank)
    outer = list(range(len(pool)))
    chunks = [(rank, prune, outer[i:i + 4]) for i in range(0, len(outer), 4)]
    found, partial = [], False
    if workers > 1:
        with ProcessPoolExecutor(workers) as ex:
            for part in ex.map(_squarefree_chunk, chunks):
                found.extend(part)
    else:
        for chunk in chunks:
            if time_budget is not None and time.perf_counter() - t0 > time_budget:
                partial = True
                break
            found.extend(_squarefree_chunk(chunk))
    found.sort(key=_key)
    survivors = [Morphism.from_raw(raw, Alphabet(3)) for raw in found]
    return SearchReport(
        rank=rank, property_filter="Squarefree", alphabet_size=3,
        candidate_pool_size=len(pool) ** 3, survivors=survivors,
        orbit_classes=orbit_reduce(survivors), wall_time=time.perf_counter() - t0,
        partial=partial, notes={"image_pool": len(pool), "pruned": prune},
    )


def search_cyclic_squarefree(rank: int, allow_large_rank: bool = False) -> SearchReport:
    """Cyclic squarefree morphisms: phi(2), phi(3) are forced shifts of phi(1)."""
    _check_rank(rank, allow_large_rank)
    t0 = time.perf_counter()
    pool = squarefree_pool(rank)
    survivors = []
    for w in pool:
        raw = tuple(bytes((c + s) % 3 for c in w) for s in range(3))
        m = Morphism.from_raw(raw, Alphabet(3))
        if decide_squarefree(m).proven:
            survivors.append(m)
    survivors.sort(key=Morphism.key)
    return SearchReport(rank, "Cyclic+Squarefree", 3, len(pool), survivors,
                        orbit_reduce(survivors), time.perf_counter() - t0)


def _structural_witness_raw(raw):
    """(property, preimage) from the structural necessary conditions, or None."""
    first_of, last_of = {}, {}
    for a, r in enumerate(raw):
        if r[0] in first_of:
            b = first_of[r[0]]
            return Property.OVERLAP_FREE, bytes((b, b, a))
        first_of[r[0]] = a
    for a, r in enumerate(raw):
        if r[-1] in last_of:
            return Property.OVERLAP_FREE, bytes((last_of[r[-1]], a, a))
        last_of[r[-1]] = a
    for a, r in enumerate(raw):
        if len(r) >= 2 and r[-1] == r[-2]:
            return Property.CUBEFREE, bytes((a, first_of[r[-1]]))
        if len(r) >= 2 and r[0] == r[1]:
            return Property.CUBEFREE, bytes((last_of[r[0]], a))
    for a, r in enumerate(raw):
        if r[0] != r[-1]:
            return Property.WEAKLY_SQUAREFREE, bytes((a, first_of[r[-1]]))
    return None


def search_weakly_squarefree_thue(rank: int, alphabet_size: int = 3,
                                  test_len: int = 8, prefix_len: int = 10_000,
                                  max_rank: int = 6) -> SearchReport:
    """Uniform morphisms with a fixed point that are not refuted as
    cubefree, overlap-free or weakly squarefree.

    Survivors are candidates carrying only bounded verification.
    """
    if not 1 <= rank <= max_rank:
        raise ValueError(f"rank must be in 1..{max_rank}")
    t0 = time.perf_counter()
    k = alphabet_size
    alphabet = Alphabet(k)
    words = [bytes(w) for w in itertools.product(range(k), repeat=rank)]
    log = RefutationLog(alphabet)
    survivors, pool_size = [], 0
    by_structure = 0
    for raw in itertools.product(words, repeat=k):
        if not any(r[0] == a and len(r) >= 2 for a, r in enumerate(raw)):
            continue
        pool_size += 1
        if k == 3:
            hit = _structural_witness_raw(raw)
            if hit is not None:
                prop, pre = hit
                loc = _scan.first(apply_raw(raw, pre), prop.kind)
                assert loc is not None and _scan.first(pre, prop.kind) is None
                log.add(raw, prop, pre, loc[0] + 1, loc[1])
                by_structure += 1
                continue
        m = Morphism.from_raw(raw, alphabet)
        for prop in (Property.OVERLAP_FREE, Property.CUBEFREE, Property.WEAKLY_SQUAREFREE):
            d = check_bounded(m, prop, test_len, prefix_len)
            if d.refuted:
                log.add_decision(m, d)
                break
        else:
            survivors.append(m)
    survivors.sort(key=Morphism.key)
    return SearchReport(
        rank=rank, property_filter="WeaklySquarefree+Thue", alphabet_size=k,
        candidate_pool_size=pool_size, survivors=survivors,
        wall_time=time.perf_counter() - t0, refutations=log,
        notes={"refuted_by_structure": by_structure, "test_len": test_len,
               "prefix_len": prefix_len},
    )


def search_triple_property(rank: int, test_len: int = 8, prefix_len: int = 10_000,
                           allow_large_rank: bool = False) -> SearchReport:
    """Squarefree morphisms of the rank that are not refuted as overlap-free
    or cubefree.  Every refutation is logged with its witness.

    Images sharing a first or last letter are refuted outright by a
    length-3 preimage, independently of ``test_len``.
    """
    base = search_uniform_squarefree(rank, allow_large_rank=allow_large_rank)
    t0 = time.perf_counter()
    log = RefutationLog(Alphabet(3))
    survivors, decisions = [], {}
    for m in base.survivors:
        found = shared_end_refutation(m)
        checks = []
        for prop in (Property.OVERLAP_FREE, Property.CUBEFREE):
            if found is not None:
                break
            d = check_bounded(m, prop, test_len, prefix_len)
            checks.append(d)
            if d.refuted:
                found = d
                break
        if found is not None:
            log.add_decision(m, found)
        else:
            survivors.append(m)
            decisions[m.key()] = checks
    return SearchReport(
        rank=rank, property_filter="Squarefree+Cubefree+OverlapFree", alphabet_size=3,
        candidate_pool_size=len(base.survivors), survivors=survivors,
        orbit_classes=orbit_reduce(survivors),
        wall_time=base.wall_time + time.perf_counter() - t0, refutations=log,
        notes={"decisions": decisions, "test_len": test_len, "prefix_len": prefix_len},
    )
