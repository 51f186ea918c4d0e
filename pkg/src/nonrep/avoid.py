"""Longest words that stay repetition-free while avoiding given factors.

The search tree holds every property-clean word with no forbidden factor;
children extend by one letter, tried in ascending order.  Because all the
properties and factor containment are closed under factors, a finite tree
gives the exact maximum.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Union

from . import _scan
from .morphisms import Morphism, apply_raw, fixed_point_seeds
from .words import Alphabet, Property, RepetitionWitness, Word


@dataclass(frozen=True)
class AvoidanceQuery:
    """Forbidden factors may be given as strings in the alphabet's symbols.

    ``properties`` is one freeness property or a conjunction of them; the
    empty conjunction allows every word.
    """

    alphabet: Alphabet
    forbidden: tuple = ()
    properties: tuple = (Property.SQUAREFREE,)
    budget: int = 1000

    def __post_init__(self):
        from .io import parse_word
        words = []
        for f in self.forbidden:
            w = f if isinstance(f, Word) else parse_word(f, self.alphabet)
            if w.alphabet != self.alphabet:
                raise ValueError("forbidden factor over a different alphabet")
            if not w.letters:
                raise ValueError("forbidden factors must be nonempty")
            words.append(w)
        object.__setattr__(self, "forbidden", tuple(sorted(set(words))))
        props = self.properties
        if isinstance(props, Property):
            props = (props,)
        props = tuple(dict.fromkeys(props))
        for p in props:
            p.kind
        object.__setattr__(self, "properties", props)
        if self.budget < 1:
            raise ValueError("budget must be at least 1")


@dataclass(frozen=True)
class ExhaustedAt:
    """The tree is finite; ``witnesses`` are all words of length max_len."""

    max_len: int
    witnesses: tuple


@dataclass(frozen=True)
class OpenAt:
    """Some word reached the depth budget; the tree may be infinite."""

    budget: int
    witness: Word


@dataclass(frozen=True)
class AvoidanceOutcome:
    status: Union[ExhaustedAt, OpenAt]
    nodes_visited: int

    @property
    def exhausted(self) -> bool:
        return isinstance(self.status, ExhaustedAt)


@dataclass(frozen=True)
class ForbiddenOccurrence:
    """``factor`` occurs at 1-based ``start``."""

    factor: Word
    start: int

    def __str__(self):
        return f"forbidden factor {self.factor} at {self.start}"


Violation = Union[RepetitionWitness, ForbiddenOccurrence]


class _Extender:
    def __init__(self, query: AvoidanceQuery):
        self.kinds = [p.kind for p in query.properties]
        self.forbidden = [f.letters for f in query.forbidden]
        self.k = query.alphabet.size

    def ok(self, v: bytes) -> bool:
        """Is ``v`` still admissible, given that ``v[:-1]`` is?"""
        for f in self.forbidden:
            if v.endswith(f):
                return False
        n = len(v) - 1
        return not any(_scan.ends_after(v, kind, n) for kind in self.kinds)


def max_avoiding(query: AvoidanceQuery) -> AvoidanceOutcome:
    """Depth-first search of the admissible tree, letters ascending.

    Returns ExhaustedAt with every maximum-length word (lex order), or
    OpenAt with the first word that reaches the budget.
    """
    ext = _Extender(query)
    best = 0
    best_words: list = [b""]
    nodes = 1
    stack = [(b"", 0)]
    while stack:
        w, c = stack.pop()
        if c >= ext.k:
            continue
        stack.append((w, c + 1))
        v = w + bytes((c,))
        if not ext.ok(v):
            continue
        nodes += 1
        n = len(v)
        if n >= query.budget:
            return AvoidanceOutcome(OpenAt(query.budget, Word(v, query.alphabet)), nodes)
        if n > best:
            best, best_words = n, [v]
        elif n == best:
            best_words.append(v)
        stack.append((v, 0))
    witnesses = tuple(Word(w, query.alphabet) for w in best_words)
    return AvoidanceOutcome(ExhaustedAt(best, witnesses), nodes)


def admissible_words(query: AvoidanceQuery, n: int) -> list[Word]:
    """All admissible words of length exactly ``n`` (level-by-level)."""
    ext = _Extender(query)
    level = [b""]
    for _ in range(n):
        level = [v for w in level for c in range(ext.k) if ext.ok(v := w + bytes((c,)))]
    return [Word(w, query.alphabet) for w in level]


def verify_avoidance(word: Word, query: AvoidanceQuery) -> tuple[bool, Violation | None]:
    """Check ``word`` from scratch.  The reported violation is the first
    forbidden occurrence, else the first repetition in property order."""
    if word.alphabet != query.alphabet:
        raise ValueError("word and query use different alphabets")
    s = word.letters
    hits = []
    for f in query.forbidden:
        i = s.find(f.letters)
        if i >= 0:
            hits.append((i, f))
    if hits:
        i, f = min(hits, key=lambda h: (h[0], len(h[1])))
        return False, ForbiddenOccurrence(f, i + 1)
    for p in query.properties:
        hit = _scan.first(s, p.kind)
        if hit is not None:
            return False, RepetitionWitness(p.kind, hit[0] + 1, hit[1])
    return True, None


@dataclass(frozen=True)
class MorphismAvoidanceReport:
    """Result of checking one fixed-point prefix; clean means only
    'verified up to prefix_length', never a statement about the infinite word."""

    morphism: Morphism
    seed: int
    prefix_length: int
    violation: Violation | None = field(default=None)

    @property
    def clean(self) -> bool:
        return self.violation is None


def avoidance_by_morphism(m: Morphism, seed: int, forbidden: Iterable = (),
                          prefix_len: int = 10_000,
                          properties=(Property.SQUAREFREE,)) -> MorphismAvoidanceReport:
    """Check the fixed-point prefix phi^n(seed) for the least n giving at
    least ``prefix_len`` letters.  ``seed`` is a 0-based letter code."""
    if seed not in fixed_point_seeds(m):
        raise ValueError(f"letter {seed} does not seed a fixed point")
    query = AvoidanceQuery(m.alphabet, tuple(forbidden), properties)
    a = bytes((seed,))
    while len(a) < prefix_len:
        a = apply_raw(m.raw, a)
    _, violation = verify_avoidance(Word(a, m.alphabet), query)
    return MorphismAvoidanceReport(m, seed, len(a), violation)


# tree export

def explored_tree(query: AvoidanceQuery, max_nodes: int = 2000) -> list[tuple[bytes, bool]]:
    """Nodes in DFS order as ``(word, admissible)``; rejected children are
    included as dead leaves.  Stops after ``max_nodes`` entries."""
    ext = _Extender(query)
    out = [(b"", True)]
    stack = [b""]
    while stack and len(out) < max_nodes:
        w = stack.pop()
        if len(w) >= query.budget:
            continue
        kids = []
        for c in range(ext.k):
            v = w + bytes((c,))
            good = ext.ok(v)
            out.append((v, good))
            if good:
                kids.append(v)
            if len(out) >= max_nodes:
                break
        stack.extend(reversed(kids))
    return out


def tree_to_dot(query: AvoidanceQuery, max_nodes: int = 2000) -> str:
    """Graphviz text for :func:`explored_tree`; dead leaves are boxed."""
    symbols = query.alphabet.symbols

    def name(w):
        return '"' + ("".join(symbols[c] for c in w) or "eps") + '"'

    lines = ["digraph avoidance {", "  node [shape=plaintext];"]
    for w, good in explored_tree(query, max_nodes):
        if not good:
            lines.append(f"  {name(w)} [shape=box, fontcolor=gray];")
        if w:
            lines.append(f"  {name(w[:-1])} -> {name(w)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
