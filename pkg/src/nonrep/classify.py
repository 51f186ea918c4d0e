"""Per-morphism decisions for the repetition-freeness properties.

Squarefreeness of a ternary morphism is decided exactly by testing images of
short squarefree words.  Cubefreeness, overlap-freeness and weak
squarefreeness get a sound refutation search plus a bounded check; a bounded
check that finds nothing is reported as ``VerifiedUpTo``, never as a proof.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from . import _scan
from .morphisms import (Morphism, apply_raw, fixed_point_seeds, is_cyclic,
                        uniform_rank)
from .words import (FREENESS, Property, RepetitionWitness, Word, clean_levels,
                    find_repetition)

DEFAULT_TEST_LEN = 8
DEFAULT_PREFIX_LEN = 10_000


@dataclass(frozen=True)
class ProvenTrue:
    criterion: str


@dataclass(frozen=True)
class ProvenFalse:
    reason: str


@dataclass(frozen=True)
class RefutedBy:
    """``preimage`` is property-clean but its image contains ``witness``."""

    preimage: Word
    witness: RepetitionWitness


@dataclass(frozen=True)
class VerifiedUpTo:
    """No refutation among clean words of length <= ``test_word_length`` and
    fixed-point prefixes of length >= ``prefix_length``.  Not a proof."""

    test_word_length: int
    prefix_length: int
    scanned_length: int = field(default=0, compare=False)


Verdict = Union[ProvenTrue, ProvenFalse, RefutedBy, VerifiedUpTo]


@dataclass(frozen=True)
class PropertyDecision:
    property: Property
    verdict: Verdict

    @property
    def refuted(self) -> bool:
        return isinstance(self.verdict, RefutedBy)

    @property
    def proven(self) -> bool:
        return isinstance(self.verdict, ProvenTrue)

    def __str__(self):
        v = self.verdict
        if isinstance(v, ProvenTrue):
            text = f"proven ({v.criterion})"
        elif isinstance(v, ProvenFalse):
            text = f"false ({v.reason})"
        elif isinstance(v, RefutedBy):
            text = f"refuted by image of {v.preimage}: {v.witness}"
        else:
            text = (f"verified up to test length {v.test_word_length}, "
                    f"prefix {v.prefix_length} (not a proof)")
        return f"{self.property.value}: {text}"


@dataclass(frozen=True)
class ClassifyConfig:
    test_len: int = DEFAULT_TEST_LEN
    prefix_len: int = DEFAULT_PREFIX_LEN


@dataclass(frozen=True)
class MorphismReport:
    morphism: Morphism
    decisions: dict
    thue_status: bool
    thue_bounds: tuple | None = None

    def __getitem__(self, prop: Property) -> PropertyDecision:
        return self.decisions[prop]


def _refuted(m: Morphism, prop: Property, preimage: bytes, image: bytes) -> PropertyDecision:
    witness = find_repetition(Word(image, m.alphabet), prop.kind)
    assert witness is not None
    return PropertyDecision(prop, RefutedBy(Word(preimage, m.alphabet), witness))


def first_refutation(m: Morphism, prop: Property, max_len: int) -> PropertyDecision | None:
    """Shortest (then lex-least) ``prop``-clean word of length <= max_len
    whose image is not ``prop``-clean, as a decision; None if there is none."""
    kind = prop.kind
    raw = m.raw
    images = {b"": b""}
    for n, level in enumerate(clean_levels(m.alphabet.size, max_len, prop)):
        if n == 0:
            continue
        nxt = {}
        for w in level:
            parent = images[w[:-1]]
            img = parent + raw[w[-1]]
            if _scan.ends_after(img, kind, len(parent)):
                return _refuted(m, prop, w, img)
            nxt[w] = img
        images = nxt
    return None


def decide_squarefree(m: Morphism, config: ClassifyConfig = ClassifyConfig()) -> PropertyDecision:
    """Exact for ternary morphisms: images of all squarefree words of length
    <= 3 (uniform) or <= 5 (general) must be squarefree."""
    if m.alphabet.size != 3:
        return check_bounded(m, Property.SQUAREFREE, config.test_len, config.prefix_len)
    uniform = uniform_rank(m) is not None
    hit = first_refutation(m, Property.SQUAREFREE, 3 if uniform else 5)
    if hit is not None:
        return hit
    return PropertyDecision(Property.SQUAREFREE,
                            ProvenTrue("crochemore-k3" if uniform else "crochemore-k5"))


def fixed_point_refutation(m: Morphism, prop: Property, prefix_len: int):
    """Scan fixed-point iterates A_{n+1} = phi(A_n) from every seed until
    they reach ``prefix_len`` letters.

    A_0 is a single letter, hence clean, so the first dirty iterate has a
    clean preimage.  Returns ``(decision_or_None, scanned_length)``.
    """
    scanned = 0
    for seed in fixed_point_seeds(m):
        a = bytes((seed,))
        while True:
            img = apply_raw(m.raw, a)
            scanned = max(scanned, len(img))
            if _scan.first(img, prop.kind) is not None:
                return _refuted(m, prop, a, img), scanned
            if len(img) >= prefix_len:
                break
            a = img
    return None, scanned


def check_bounded(m: Morphism, prop: Property, test_len: int = DEFAULT_TEST_LEN,
                  prefix_len: int = DEFAULT_PREFIX_LEN) -> PropertyDecision:
    """Apply ``m`` to every ``prop``-clean word of length <= test_len and to
    fixed-point prefixes; any dirty image is a definitive refutation."""
    if prop not in FREENESS:
        raise ValueError(f"{prop.value} cannot be checked by image scanning")
    hit = first_refutation(m, prop, test_len)
    if hit is not None:
        return hit
    hit, scanned = fixed_point_refutation(m, prop, prefix_len)
    if hit is not None:
        return hit
    has_seed = bool(fixed_point_seeds(m))
    return PropertyDecision(prop, VerifiedUpTo(test_len, prefix_len if has_seed else 0, scanned))


NECESSARY_CONDITIONS = (
    "distinct_first_and_last_letters",
    "no_doubled_letter_at_image_ends",
    "image_starts_and_ends_alike",
)


def thue_necessary_conditions(m: Morphism) -> list[tuple[str, bool]]:
    """Structural conditions every weakly squarefree Thue morphism over the
    ternary alphabet satisfies.  Any failure rules the morphism out."""
    if m.alphabet.size != 3:
        raise ValueError("conditions are stated for the ternary alphabet")
    raw = m.raw
    firsts = {r[0] for r in raw}
    lasts = {r[-1] for r in raw}
    return [
        (NECESSARY_CONDITIONS[0], len(firsts) == 3 and len(lasts) == 3),
        (NECESSARY_CONDITIONS[1], all(len(r) < 2 or (r[0] != r[1] and r[-1] != r[-2])
                                      for r in raw)),
        (NECESSARY_CONDITIONS[2], all(r[0] == r[-1] for r in raw)),
    ]


def shared_end_refutation(m: Morphism) -> PropertyDecision | None:
    """Overlap refutation when two images share a first or a last letter.

    Holds over any alphabet: phi(b) = xU, phi(a) = xW gives xUxUx inside
    phi(bba); a shared last letter gives the mirror case inside phi(baa).
    """
    raw = m.raw
    seen = {}
    for a, r in enumerate(raw):
        if r[0] in seen:
            b = seen[r[0]]
            return _checked(m, Property.OVERLAP_FREE, bytes((b, b, a)))
        seen[r[0]] = a
    seen = {}
    for a, r in enumerate(raw):
        if r[-1] in seen:
            return _checked(m, Property.OVERLAP_FREE, bytes((seen[r[-1]], a, a)))
        seen[r[-1]] = a
    return None


def necessary_condition_refutation(m: Morphism) -> PropertyDecision | None:
    """Concrete refutation for the first failing necessary condition.

    * two images share a first letter x: phi(aab) holds the overlap xUxUx;
      sharing a last letter: phi(abb) holds xWxWx
    * phi(a) ends in xx: phi(ab), with phi(b) starting by x, holds the cube
      xxx (symmetrically when phi(a) starts with xx)
    * phi(a) = x..y with x != y: phi(ab), with phi(b) starting by y, holds yy
    """
    hit = shared_end_refutation(m)
    if hit is not None:
        return hit
    raw = m.raw
    first_of = {r[0]: a for a, r in enumerate(raw)}
    last_of = {r[-1]: a for a, r in enumerate(raw)}
    if len(first_of) < 3 or len(last_of) < 3:
        return None
    for a, r in enumerate(raw):
        if len(r) >= 2 and r[-1] == r[-2]:
            return _checked(m, Property.CUBEFREE, bytes((a, first_of[r[-1]])))
        if len(r) >= 2 and r[0] == r[1]:
            return _checked(m, Property.CUBEFREE, bytes((last_of[r[0]], a)))
    for a, r in enumerate(raw):
        if r[0] != r[-1]:
            return _checked(m, Property.WEAKLY_SQUAREFREE, bytes((a, first_of[r[-1]])))
    return None


def _checked(m: Morphism, prop: Property, preimage: bytes) -> PropertyDecision:
    decision = _refuted(m, prop, preimage, apply_raw(m.raw, preimage))
    assert audit_refutation(m, decision)
    return decision


def refutation_from(m: Morphism, prop: Property, preimage: Word) -> PropertyDecision | None:
    """The refutation carried by a given preimage, if it is one."""
    if preimage.alphabet != m.alphabet:
        raise ValueError("preimage and morphism use different alphabets")
    if _scan.first(preimage.letters, prop.kind) is not None:
        return None
    image = apply_raw(m.raw, preimage.letters)
    if _scan.first(image, prop.kind) is None:
        return None
    return _refuted(m, prop, preimage.letters, image)


def audit_refutation(m: Morphism, decision: PropertyDecision) -> bool:
    """Re-validate a refutation: clean preimage, witness present in image."""
    v = decision.verdict
    if not isinstance(v, RefutedBy):
        return False
    kind = decision.property.kind
    if v.witness.kind != kind or v.preimage.alphabet != m.alphabet:
        return False
    if _scan.first(v.preimage.letters, kind) is not None:
        return False
    image = Word(apply_raw(m.raw, v.preimage.letters), m.alphabet)
    return v.witness.check(image)


def decide_fixed_point(m: Morphism) -> PropertyDecision:
    seeds = fixed_point_seeds(m)
    if seeds:
        return PropertyDecision(Property.HAS_FIXED_POINT, ProvenTrue("fixed-point-seed"))
    return PropertyDecision(Property.HAS_FIXED_POINT,
                            ProvenFalse("no image starts with its own letter"))


def decide_cyclic(m: Morphism) -> PropertyDecision:
    if m.alphabet.size != 3:
        return PropertyDecision(Property.CYCLIC, ProvenFalse("alphabet is not ternary"))
    if is_cyclic(m):
        return PropertyDecision(Property.CYCLIC, ProvenTrue("finite-check"))
    return PropertyDecision(Property.CYCLIC, ProvenFalse("phi(p+1) != phi(p)+1"))


def classify(m: Morphism, config: ClassifyConfig = ClassifyConfig()) -> MorphismReport:
    decisions = {Property.SQUAREFREE: decide_squarefree(m, config)}
    for prop in (Property.CUBEFREE, Property.OVERLAP_FREE, Property.WEAKLY_SQUAREFREE):
        decisions[prop] = check_bounded(m, prop, config.test_len, config.prefix_len)
    decisions[Property.HAS_FIXED_POINT] = decide_fixed_point(m)
    decisions[Property.CYCLIC] = decide_cyclic(m)

    cube = decisions[Property.CUBEFREE]
    over = decisions[Property.OVERLAP_FREE]
    thue = (decisions[Property.HAS_FIXED_POINT].proven
            and not cube.refuted and not over.refuted)
    bounds = None
    if thue:
        weak = [d.verdict for d in (cube, over) if isinstance(d.verdict, VerifiedUpTo)]
        if weak:
            bounds = (min(v.test_word_length for v in weak), min(v.prefix_length for v in weak))
    return MorphismReport(m, decisions, thue, bounds)
