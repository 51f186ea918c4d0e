"""One-shot reproduction of the published results, claim by claim.

Each claim re-derives a result with the library and checks it against an
expectation, using its own brute-force oracle where one is cheap enough.
"""
from __future__ import annotations

import difflib
import itertools
import random
import re
import time
import traceback
from dataclasses import dataclass

from . import _scan
from ._scan import Kind
from .avoid import (AvoidanceQuery, ExhaustedAt, avoidance_by_morphism, max_avoiding,
                    verify_avoidance)
from .classify import (ClassifyConfig, ProvenTrue, RefutedBy, VerifiedUpTo,
                       audit_refutation, check_bounded, classify, decide_squarefree,
                       refutation_from)
from .io import emit_census_table, fixture_text, load_fixture, parse_word
from .morphisms import Morphism, apply, apply_raw, fixed_point_prefix, is_cyclic
from .search import (search_cyclic_squarefree, search_triple_property,
                     search_uniform_squarefree, search_weakly_squarefree_thue,
                     squarefree_pool)
from .words import BINARY, TERNARY, Property, Word, clean_levels, shift

# Exact maximum for forbidding "123", found by exhaustive search and pinned.
MAX_AVOIDING_123 = 29


@dataclass(frozen=True)
class Bounds:
    test_len: int = 8
    prefix_len: int = 10_000
    fixture_prefix_len: int = 15_625


@dataclass
class ClaimResult:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float


class _Fail(Exception):
    pass


def _expect(cond, msg):
    if not cond:
        raise _Fail(msg)


# independent oracles

_PATTERNS = {
    Kind.SQUARE: re.compile(rb"(.+?)\1", re.S),
    Kind.CUBE: re.compile(rb"(.+?)\1\1", re.S),
    Kind.OVERLAP: re.compile(rb"(.)(.*?)\1\2\1", re.S),
    Kind.WEAK_SQUARE: re.compile(rb"(.)(.*?)\2\1", re.S),
}


def regex_first(w: bytes, kind: Kind):
    """Leftmost-then-shortest occurrence via backreference regexes."""
    m = _PATTERNS[kind].search(w)
    if m is None:
        return None
    x = m.group(1) if kind in (Kind.SQUARE, Kind.CUBE) else m.group(2)
    return m.start(), len(x)


def _has_square(w: bytes) -> bool:
    return _PATTERNS[Kind.SQUARE].search(w) is not None


def _brute_squarefree(m: Morphism, max_len: int) -> bool:
    """Images of every squarefree word of length <= max_len are squarefree."""
    raw = m.raw
    frontier = [(b"", b"")]
    for _ in range(max_len):
        nxt = []
        for w, img in frontier:
            for c in range(3):
                v = w + bytes((c,))
                if _has_square(v):
                    continue
                vi = img + raw[c]
                if _has_square(vi):
                    return False
                nxt.append((v, vi))
        frontier = nxt
    return True


# claims

def claim_census(bounds: Bounds, workers: int = 1) -> str:
    for rank in range(2, 11):
        n = len(search_uniform_squarefree(rank, workers=workers).survivors)
        _expect(n == 0, f"rank {rank}: {n} survivors, expected 0")
    report = search_uniform_squarefree(11, workers=workers)
    table = emit_census_table(report)
    fixture = fixture_text("appendix_b")
    if table != fixture:
        diff = "".join(itertools.islice(difflib.unified_diff(
            fixture.splitlines(True), table.splitlines(True), "fixture", "computed"), 40))
        raise _Fail(f"rank 11 table differs from fixture:\n{diff}")
    return f"ranks 2-10: 0; rank 11: {len(report.survivors)} rows, identical to fixture"


def claim_orbits(bounds: Bounds, workers: int = 1) -> str:
    report = search_uniform_squarefree(11, workers=workers)
    classes = report.orbit_classes
    _expect(len(classes) == 2, f"{len(classes)} orbit classes, expected 2")
    _expect(all(c.size == 72 and c.closed for c in classes), "orbit sizes are not 72")
    phis = [load_fixture("phi1_rank11"), load_fixture("phi2_rank11")]
    where = [next(i for i, c in enumerate(classes) if p in c.members) for p in phis]
    _expect(sorted(where) == [0, 1], "phi1 and phi2 are not in distinct orbits")
    return "2 orbits of 72; representatives " + ", ".join(
        c.representative.key() for c in classes)


def claim_crochemore(bounds: Bounds, workers: int = 1) -> str:
    checked = disagreements = 0
    for rank in range(1, 7):
        pool = squarefree_pool(rank)
        for raw in itertools.product(pool, repeat=3):
            m = Morphism.from_raw(raw, TERNARY)
            fast = decide_squarefree(m).proven
            slow = _brute_squarefree(m, 10)
            checked += 1
            disagreements += fast != slow
    _expect(disagreements == 0, f"{disagreements} disagreements")
    return f"{checked} morphisms, 0 disagreements"


def claim_negative_sweeps(bounds: Bounds, workers: int = 1) -> str:
    parts = []
    for k, ranks in ((3, range(2, 5)), (2, range(2, 7))):
        for rank in ranks:
            rep = search_weakly_squarefree_thue(rank, k, bounds.test_len, bounds.prefix_len)
            _expect(not rep.survivors,
                    f"k={k} rank {rank}: {len(rep.survivors)} unrefuted candidates")
            _expect(len(rep.refutations) == rep.candidate_pool_size,
                    f"k={k} rank {rank}: missing refutations")
            for m, d in rep.refutations:
                _expect(audit_refutation(m, d), f"bad witness for {m.key()}")
            parts.append(f"k={k} r={rank}: {rep.candidate_pool_size}")
    return "all refuted and audited (" + ", ".join(parts) + ")"


def claim_cyclic(bounds: Bounds, workers: int = 1) -> str:
    for rank in range(2, 13):
        n = len(search_cyclic_squarefree(rank).survivors)
        _expect(n == 0, f"rank {rank}: {n} cyclic squarefree morphisms")
    rep = search_cyclic_squarefree(13)
    _expect(load_fixture("leech") in rep.survivors, "Leech morphism missing at rank 13")
    return f"ranks 2-12: 0; rank 13: {len(rep.survivors)} incl. Leech"


def claim_triple(bounds: Bounds, workers: int = 1) -> str:
    counts = []
    for rank in range(2, 13):
        rep = search_triple_property(rank, bounds.test_len, bounds.prefix_len)
        _expect(not rep.survivors, f"rank {rank}: {len(rep.survivors)} survivors")
        for m, d in rep.refutations:
            _expect(d.property in (Property.CUBEFREE, Property.OVERLAP_FREE), "wrong property")
            _expect(len(d.verdict.preimage) <= 8, f"long witness for {m.key()}")
            _expect(audit_refutation(m, d), f"bad witness for {m.key()}")
        if rep.candidate_pool_size:
            counts.append(f"r={rank}: {rep.candidate_pool_size}")
    leech = load_fixture("leech")
    _expect(decide_squarefree(leech).proven, "Leech squarefreeness not proven")
    expected = VerifiedUpTo(bounds.test_len, bounds.prefix_len)
    for prop in (Property.CUBEFREE, Property.OVERLAP_FREE):
        v = check_bounded(leech, prop, bounds.test_len, bounds.prefix_len).verdict
        _expect(v == expected, f"Leech {prop.value}: {v}")
    return ("all squarefree survivors refuted (" + ", ".join(counts) +
            f"); Leech: squarefree proven, VerifiedUpTo({bounds.test_len}, {bounds.prefix_len})")


def _kind_is(decision, cls, prop):
    _expect(isinstance(decision.verdict, cls), f"{prop}: got {decision}")


def _refutes(m, prop, preimage):
    d = refutation_from(m, prop, parse_word(preimage, m.alphabet))
    _expect(d is not None and audit_refutation(m, d),
            f"{prop.value}: {preimage} does not refute")


def claim_fixture_reports(bounds: Bounds, workers: int = 1) -> str:
    r5 = classify(load_fixture("rank5"), ClassifyConfig(bounds.test_len, bounds.fixture_prefix_len))
    for prop in (Property.CUBEFREE, Property.WEAKLY_SQUAREFREE):
        v = r5[prop].verdict
        _expect(v == VerifiedUpTo(bounds.test_len, bounds.fixture_prefix_len),
                f"rank 5 {prop.value}: {v}")
    _kind_is(r5[Property.HAS_FIXED_POINT], ProvenTrue, "rank 5 HasFixedPoint")
    _kind_is(r5[Property.OVERLAP_FREE], RefutedBy, "rank 5 OverlapFree")
    _refutes(r5.morphism, Property.OVERLAP_FREE, "212")

    r4 = classify(load_fixture("rank4"), ClassifyConfig(bounds.test_len, bounds.prefix_len))
    _expect(r4.thue_status, "rank 4 is not Thue")
    for prop in (Property.SQUAREFREE, Property.WEAKLY_SQUAREFREE):
        d = r4[prop]
        _kind_is(d, RefutedBy, f"rank 4 {prop.value}")
        _expect(len(d.verdict.preimage) == 1, f"rank 4 {prop.value}: {d}")

    r3 = classify(load_fixture("rank3"), ClassifyConfig(bounds.test_len, bounds.prefix_len))
    _kind_is(r3[Property.CUBEFREE], VerifiedUpTo, "rank 3 Cubefree")
    for prop, pre in ((Property.SQUAREFREE, "12"), (Property.WEAKLY_SQUAREFREE, "123"),
                      (Property.OVERLAP_FREE, "212")):
        _kind_is(r3[prop], RefutedBy, f"rank 3 {prop.value}")
        _refutes(r3.morphism, prop, pre)
    return ("rank 5 overlap witness " + str(r5[Property.OVERLAP_FREE].verdict.preimage) +
            ", rank 3 witnesses " + "/".join(
                str(r3[p].verdict.preimage) for p in (Property.SQUAREFREE,
                                                      Property.WEAKLY_SQUAREFREE,
                                                      Property.OVERLAP_FREE)) +
            "; named preimages 12, 123, 212 confirmed")


def claim_thue_morse(bounds: Bounds, workers: int = 1) -> str:
    m = load_fixture("thue_morse")
    one = m.alphabet.symbols.index("1")
    w = fixed_point_prefix(m, one, 1 << 16)
    _expect(len(w) == 1 << 16, f"prefix length {len(w)}")
    hits = _scan.first_long(w.letters, [Kind.CUBE, Kind.OVERLAP])
    _expect(hits[Kind.CUBE] is None and hits[Kind.OVERLAP] is None, f"repetition {hits}")
    short = str(fixed_point_prefix(m, one, 16))
    _expect(short == "1001011001101001", f"16-letter prefix {short}")
    _expect(short == str(load_fixture("thue_morse_prefix16")), "fixture mismatch")
    return "65536-letter prefix cube- and overlap-free; prefix16 = " + short


def claim_avoidance(bounds: Bounds, workers: int = 1) -> str:
    o = max_avoiding(AvoidanceQuery(TERNARY, ("12",)))
    _expect(isinstance(o.status, ExhaustedAt) and o.status.max_len == 13, f"forbid 12: {o.status}")
    target = parse_word("bcbacbcacbaca", TERNARY)
    _expect(target in o.status.witnesses, "bcbacbcacbaca not among maxima")
    o3 = max_avoiding(AvoidanceQuery(TERNARY, ("123",)))
    _expect(isinstance(o3.status, ExhaustedAt), f"forbid 123: {o3.status}")
    _expect(o3.status.max_len == MAX_AVOIDING_123 <= 36, f"forbid 123: {o3.status.max_len}")
    ob = max_avoiding(AvoidanceQuery(BINARY, (), (Property.CUBEFREE, Property.WEAKLY_SQUAREFREE)))
    _expect(isinstance(ob.status, ExhaustedAt) and ob.status.max_len == 5, f"binary: {ob.status}")
    return f"13 / {o3.status.max_len} / 5"


def claim_fixture_words(bounds: Bounds, workers: int = 1) -> str:
    failures, notes = [], []
    w = load_fixture("word718")
    _expect(len(w) == 718, "word718 has the wrong length")
    ok, why = verify_avoidance(w, AvoidanceQuery(w.alphabet, ("aba", "bab")))
    (notes if ok else failures).append(f"word718 vs {{aba,bab}}: {'ok' if ok else why}")
    r = avoidance_by_morphism(load_fixture("thue_1912"), 0, (), 100_000)
    (notes if r.clean else failures).append(
        f"thue_1912 {r.prefix_length}-prefix squarefree: {'ok' if r.clean else r.violation}")
    r = avoidance_by_morphism(load_fixture("thue_1912_abc"), 0, ("cbc",), 100_000)
    (notes if r.clean else failures).append(
        f"abc morphism {r.prefix_length}-prefix vs cbc: {'ok' if r.clean else r.violation}")
    if failures:
        raise _Fail("; ".join(failures + notes))
    return "; ".join(notes)


def claim_properties(bounds: Bounds, workers: int = 1) -> str:
    n = 0
    for k, top in ((2, 12), (3, 12)):
        for length in range(top + 1):
            for t in itertools.product(range(k), repeat=length):
                w = bytes(t)
                for kind in Kind:
                    _expect(_scan.first(w, kind) == regex_first(w, kind), f"{kind.name} on {t}")
                n += 1
    rng = random.Random(1912)
    for _ in range(10_000):
        k = rng.choice((2, 3))
        w = bytes(rng.randrange(k) for _ in range(rng.randrange(1, 60)))
        for kind in Kind:
            _expect(_scan.first(w, kind) == regex_first(w, kind), f"{kind.name} on {list(w)}")
    for _ in range(1_000):
        m = Morphism.from_raw([bytes(rng.randrange(3) for _ in range(rng.randrange(1, 6)))
                               for _ in range(3)])
        u, v = (Word(bytes(rng.randrange(3) for _ in range(rng.randrange(8))), TERNARY)
                for _ in range(2))
        _expect(apply(m, u + v) == apply(m, u) + apply(m, v), "homomorphism law")
        seeds = [a for a, r in enumerate(m.raw) if r[0] == a and len(r) > 1]
        if seeds:
            a = fixed_point_prefix(m, seeds[0], 50).letters
            _expect(apply_raw(m.raw, a).startswith(a), "prefix stability")
    for m in search_cyclic_squarefree(13).survivors:
        _expect(is_cyclic(m), "cyclic census member is not cyclic")
        for _ in range(50):
            w = Word(bytes(rng.randrange(3) for _ in range(10)), TERNARY)
            _expect(apply(m, shift(w, 1)) == shift(apply(m, w), 1), "cyclic transport")
    for rank in range(2, 8):
        a = search_uniform_squarefree(rank).survivors
        b = search_uniform_squarefree(rank, prune=False).survivors
        _expect(a == b, f"pruning changes rank {rank}")
    for length in range(9):
        *_, level = clean_levels(3, length, Property.SQUAREFREE)
        brute = [bytes(t) for t in itertools.product(range(3), repeat=length)
                 if not _has_square(bytes(t))]
        _expect(level == brute, f"enumeration at length {length}")
    return f"{n} exhaustive words + 10000 random; morphism laws; pruning equivalence"


CLAIMS = [
    (1, "census ranks 2-11 vs table", claim_census),
    (2, "rank-11 orbit structure", claim_orbits),
    (3, "k=3 test vs brute force", claim_crochemore),
    (4, "weakly squarefree Thue sweeps", claim_negative_sweeps),
    (5, "cyclic census", claim_cyclic),
    (6, "triple-property sweep", claim_triple),
    (7, "fixture morphism reports", claim_fixture_reports),
    (8, "Thue-Morse prefix", claim_thue_morse),
    (9, "avoidance maxima", claim_avoidance),
    (10, "fixture words", claim_fixture_words),
    (11, "property corroborations", claim_properties),
]


def run_claim(number: int, bounds: Bounds = Bounds(), workers: int = 1) -> ClaimResult:
    _, title, fn = CLAIMS[number - 1]
    t0 = time.perf_counter()
    try:
        detail, passed = fn(bounds, workers), True
    except _Fail as exc:
        detail, passed = str(exc), False
    except Exception:
        detail, passed = traceback.format_exc(limit=3), False
    return ClaimResult(number, title, passed, detail, time.perf_counter() - t0)


def run_claims(bounds: Bounds = Bounds(), only=None, workers: int = 1, progress=None):
    results = []
    for number, _, _ in CLAIMS:
        if only and number not in only:
            continue
        res = run_claim(number, bounds, workers)
        if progress:
            progress(res)
        results.append(res)
    return results


def format_row(r: ClaimResult) -> str:
    status = "PASS" if r.passed else "FAIL"
    return f"{r.number:>2}  {status}  {r.seconds:8.2f}s  {r.title}: {r.detail}"
