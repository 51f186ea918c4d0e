"""Morphisms of the free monoid: application, structure, fixed points."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .words import Alphabet, Word, shift


@dataclass(frozen=True)
class Morphism:
    """A non-erasing morphism given by the image of each letter."""

    images: tuple[Word, ...]
    raw: tuple[bytes, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        images = tuple(self.images)
        if not images:
            raise ValueError("a morphism needs at least one letter")
        alphabet = images[0].alphabet
        if len(images) != alphabet.size:
            raise ValueError(f"expected {alphabet.size} images, got {len(images)}")
        for a, img in enumerate(images):
            if img.alphabet != alphabet:
                raise ValueError("images over different alphabets")
            if not img.letters:
                raise ValueError(f"empty image for letter {alphabet.symbols[a]}")
        object.__setattr__(self, "images", images)
        object.__setattr__(self, "raw", tuple(img.letters for img in images))

    @classmethod
    def from_raw(cls, raw: Sequence[bytes], alphabet: Alphabet | None = None) -> "Morphism":
        alphabet = alphabet or Alphabet(len(raw))
        return cls(tuple(Word(bytes(r), alphabet) for r in raw))

    @property
    def alphabet(self) -> Alphabet:
        return self.images[0].alphabet

    def __call__(self, w: Word) -> Word:
        return apply(self, w)

    def __str__(self):
        from .io import render_morphism
        return render_morphism(self, sep=", ")

    def key(self) -> str:
        """Serialization ``phi(1)|phi(2)|...``; orders morphisms canonically."""
        return "|".join(str(img) for img in self.images)


def apply_raw(raw: Sequence[bytes], w: bytes) -> bytes:
    return b"".join([raw[c] for c in w])


def apply(m: Morphism, w: Word) -> Word:
    """The image of ``w``: concatenation of the letter images in order."""
    if w.alphabet != m.alphabet:
        raise ValueError("word and morphism use different alphabets")
    return Word(apply_raw(m.raw, w.letters), m.alphabet)


def uniform_rank(m: Morphism) -> int | None:
    lengths = {len(r) for r in m.raw}
    return lengths.pop() if len(lengths) == 1 else None


def is_cyclic(m: Morphism) -> bool:
    """True iff phi(p + 1) = phi(p) + 1 for every letter p (ternary only)."""
    if m.alphabet.size != 3:
        raise ValueError("cyclicity is defined on the ternary alphabet only")
    return all(m.images[(a + 1) % 3] == shift(m.images[a], 1) for a in range(3))


def fixed_point_seeds(m: Morphism) -> list[int]:
    """Letters u with phi(u) = uV and V nonempty."""
    return [a for a, r in enumerate(m.raw) if r[0] == a and len(r) >= 2]


class FixedPointStream:
    """Growing prefix of the fixed point phi^oo(seed).

    Single-owner and mutable; clone with :meth:`copy` before sharing.
    """

    def __init__(self, m: Morphism, seed: int):
        if seed not in fixed_point_seeds(m):
            raise ValueError(f"letter {seed} does not seed a fixed point")
        self.morphism = m
        self.seed = seed
        self.generated = bytes((seed,))

    def copy(self) -> "FixedPointStream":
        other = FixedPointStream(self.morphism, self.seed)
        other.generated = self.generated
        return other

    def iterates(self):
        """Yield A_0 = seed, A_1 = phi(A_0), ... indefinitely (raw bytes)."""
        a = bytes((self.seed,))
        while True:
            yield a
            nxt = apply_raw(self.morphism.raw, a)
            if not nxt.startswith(a):
                raise AssertionError("fixed-point iterates are not prefix-stable")
            a = nxt
            if len(a) > len(self.generated):
                self.generated = a

    def extend_to(self, min_len: int) -> Word:
        """Iterate until the prefix has at least ``min_len`` letters.

        The whole last iterate is returned, so the result may be longer.
        """
        if len(self.generated) < min_len:
            for a in self.iterates():
                if len(a) >= min_len:
                    break
        return Word(self.generated, self.morphism.alphabet)


def fixed_point_prefix(m: Morphism, seed: int, min_len: int) -> Word:
    return FixedPointStream(m, seed).extend_to(min_len)


@dataclass(frozen=True)
class FragmentDecomposition:
    """phi(source) cut into the images of the letters of ``source``."""

    source: Word
    image: Word
    boundaries: tuple[int, ...]

    @property
    def fragments(self) -> list[Word]:
        cuts = (0,) + self.boundaries + (len(self.image),)
        if not self.source.letters:
            return []
        return [Word(self.image.letters[cuts[i]:cuts[i + 1]], self.image.alphabet)
                for i in range(len(self.source))]


def canonical_fragments(m: Morphism, w: Word) -> FragmentDecomposition:
    """Decompose phi(w); ``boundaries`` are the interior cut offsets."""
    cuts = []
    pos = 0
    for c in w.letters:
        pos += len(m.raw[c])
        cuts.append(pos)
    return FragmentDecomposition(w, apply(m, w), tuple(cuts[:-1]))


def compose(outer: Morphism, inner: Morphism) -> Morphism:
    """outer o inner."""
    return Morphism(tuple(apply(outer, img) for img in inner.images))
