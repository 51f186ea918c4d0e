"""Alphabets, words, repetition detectors and clean-word enumeration."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from . import _scan
from ._scan import Kind

_DEFAULT_SYMBOLS = "123456789"


@dataclass(frozen=True)
class Alphabet:
    """A k-letter alphabet; letters are the integers ``0..k-1``.

    ``symbols`` only affects rendering (``'1'..'9'`` by default) and is
    ignored by equality.
    """

    size: int
    symbols: str = field(default="", compare=False)

    def __post_init__(self):
        if not 1 <= self.size <= 9:
            raise ValueError(f"alphabet size must be in 1..9, got {self.size}")
        if not self.symbols:
            object.__setattr__(self, "symbols", _DEFAULT_SYMBOLS[:self.size])
        if len(self.symbols) != self.size or len(set(self.symbols)) != self.size:
            raise ValueError(f"bad symbol table {self.symbols!r}")

    @property
    def letters(self) -> range:
        return range(self.size)


BINARY = Alphabet(2)
TERNARY = Alphabet(3)


class Property(enum.Enum):
    """Properties of words and morphisms."""

    SQUAREFREE = "Squarefree"
    CUBEFREE = "Cubefree"
    OVERLAP_FREE = "OverlapFree"
    WEAKLY_SQUAREFREE = "WeaklySquarefree"
    HAS_FIXED_POINT = "HasFixedPoint"
    CYCLIC = "Cyclic"

    @property
    def kind(self) -> Kind:
        """The repetition kind whose absence defines this property."""
        try:
            return _AVOIDS[self]
        except KeyError:
            raise ValueError(f"{self.value} is not a repetition-freeness property") from None


_AVOIDS = {
    Property.SQUAREFREE: Kind.SQUARE,
    Property.CUBEFREE: Kind.CUBE,
    Property.OVERLAP_FREE: Kind.OVERLAP,
    Property.WEAKLY_SQUAREFREE: Kind.WEAK_SQUARE,
}
FREENESS = tuple(_AVOIDS)


@dataclass(frozen=True)
class Word:
    """An immutable word.  ``letters`` holds 0-based letter codes."""

    letters: bytes
    alphabet: Alphabet

    def __post_init__(self):
        if not isinstance(self.letters, bytes):
            object.__setattr__(self, "letters", bytes(self.letters))
        if self.letters and max(self.letters) >= self.alphabet.size:
            raise ValueError("letter outside alphabet")

    def __len__(self):
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __add__(self, other: "Word") -> "Word":
        if other.alphabet != self.alphabet:
            raise ValueError("cannot concatenate words over different alphabets")
        return Word(self.letters + other.letters, self.alphabet)

    def __lt__(self, other: "Word"):
        return self.letters < other.letters

    def __str__(self):
        from .io import render_word
        return render_word(self)

    def __repr__(self):
        return f"Word({str(self)!r})"

    def letter(self, i: int) -> int:
        """The i-th letter, 1-based."""
        if not 1 <= i <= len(self.letters):
            raise IndexError(i)
        return self.letters[i - 1]

    def factor(self, start: int, length: int) -> "Word":
        """The factor of ``length`` letters beginning at 1-based ``start``."""
        if start < 1 or length < 0 or start - 1 + length > len(self.letters):
            raise IndexError((start, length))
        return Word(self.letters[start - 1:start - 1 + length], self.alphabet)

    def contains(self, other: "Word") -> bool:
        return other.letters in self.letters


@dataclass(frozen=True)
class RepetitionWitness:
    """Occurrence of a repetition; ``start`` is 1-based, ``period`` is |X|."""

    kind: Kind
    start: int
    period: int

    @property
    def total_length(self) -> int:
        return self.kind.total_length(self.period)

    def check(self, w: Word) -> bool:
        """Re-extract the factor from ``w`` and pattern-match it."""
        return _scan.matches_at(w.letters, self.kind, self.start - 1, self.period)

    def __str__(self):
        name = self.kind.name.lower().replace("_", " ")
        return f"{name} at {self.start} period {self.period}"


def _find(w: Word, kind: Kind) -> RepetitionWitness | None:
    hit = _scan.first(w.letters, kind)
    if hit is None:
        return None
    return RepetitionWitness(kind, hit[0] + 1, hit[1])


def find_square(w: Word) -> RepetitionWitness | None:
    """Leftmost (then shortest) factor XX with X nonempty."""
    return _find(w, Kind.SQUARE)


def find_cube(w: Word) -> RepetitionWitness | None:
    return _find(w, Kind.CUBE)


def find_overlap(w: Word) -> RepetitionWitness | None:
    """Leftmost (then shortest) factor aXaXa; X may be empty."""
    return _find(w, Kind.OVERLAP)


def find_weak_square(w: Word) -> RepetitionWitness | None:
    """Leftmost (then shortest) factor aXXa; X may be empty."""
    return _find(w, Kind.WEAK_SQUARE)


def find_repetition(w: Word, kind: Kind) -> RepetitionWitness | None:
    return _find(w, Kind(kind))


def find_all_kinds(w: Word) -> dict[Kind, RepetitionWitness | None]:
    """All four detectors at once; long words share one index build."""
    if len(w) <= _scan.SHORT_LIMIT:
        return {k: _find(w, k) for k in Kind}
    hits = _scan.first_long(w.letters, list(Kind))
    return {k: None if h is None else RepetitionWitness(k, h[0] + 1, h[1])
            for k, h in hits.items()}


def is_free(w: Word, prop: Property) -> bool:
    return _scan.first(w.letters, prop.kind) is None


def _require_ternary(w: Word):
    if w.alphabet.size != 3:
        raise ValueError("operation is defined on the ternary alphabet only")


def shift(w: Word, delta: int) -> Word:
    """Add ``delta`` (+1 or -1) to every letter, cyclically 1 -> 2 -> 3 -> 1."""
    _require_ternary(w)
    if delta not in (1, -1):
        raise ValueError("delta must be +1 or -1")
    return Word(bytes((c + delta) % 3 for c in w.letters), w.alphabet)


def is_increasing(w: Word) -> bool:
    _require_ternary(w)
    s = w.letters
    return all(s[i + 1] == (s[i] + 1) % 3 for i in range(len(s) - 1))


def is_decreasing(w: Word) -> bool:
    _require_ternary(w)
    s = w.letters
    return all(s[i + 1] == (s[i] - 1) % 3 for i in range(len(s) - 1))


def _kinds_of(filter) -> tuple[Kind, ...]:
    if filter is None:
        return ()
    if isinstance(filter, Property):
        return (filter.kind,)
    return tuple(p.kind for p in filter)


def clean_levels(k: int, max_len: int, filter=None) -> Iterator[list[bytes]]:
    """Yield, for n = 0..max_len, the lex-ordered list of raw words of
    length n avoiding every kind in ``filter``.

    Prefix pruning is exact because each kind is closed under factors.
    """
    kinds = _kinds_of(filter)
    level = [b""]
    yield level
    for n in range(1, max_len + 1):
        nxt = []
        for w in level:
            for c in range(k):
                v = w + bytes((c,))
                if not any(_scan.ends_after(v, kd, n - 1) for kd in kinds):
                    nxt.append(v)
        level = nxt
        yield level


def enumerate_words(alphabet: Alphabet, n: int, filter=None) -> list[Word]:
    """All words of length ``n`` over ``alphabet`` satisfying ``filter``.

    ``filter`` is None (all words), a freeness :class:`Property`, or an
    iterable of them (conjunction).  The result is in lexicographic order.
    """
    if n < 0:
        raise ValueError("length must be non-negative")
    for level in clean_levels(alphabet.size, n, filter):
        pass
    return [Word(w, alphabet) for w in level]


def iter_clean_words(k: int, max_len: int, filter=None) -> Iterable[bytes]:
    """Clean raw words of lengths 1..max_len, ordered by length then lex."""
    for n, level in enumerate(clean_levels(k, max_len, filter)):
        if n:
            yield from level
