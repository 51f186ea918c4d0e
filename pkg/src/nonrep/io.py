"""Text and JSON formats, and the checksummed fixture store.

Morphism text is one ``<letter> -> <image>`` line per letter.  Letters are
digits (``1..9``, or ``0..8`` when ``0`` is used) or lowercase letters
(``a..i``); ``a`` and ``1`` denote the same letter in a 1-based alphabet.
"""
from __future__ import annotations

import hashlib
import json
from importlib import resources

from .classify import (MorphismReport, PropertyDecision, ProvenFalse, ProvenTrue,
                       RefutedBy, VerifiedUpTo)
from .morphisms import Morphism
from .words import Alphabet, Kind, Property, RepetitionWitness, Word

SCHEMA_VERSION = 1
CENSUS_HEADER = "phi(1) phi(2) phi(3)"

_DIGITS1 = "123456789"
_DIGITS0 = "012345678"
_LETTERS = "abcdefghi"


def _scheme_for(chars: set) -> str:
    if chars <= set(_LETTERS):
        return _LETTERS
    if chars <= set(_DIGITS0 + _DIGITS1):
        return _DIGITS0 if "0" in chars else _DIGITS1
    if chars <= set(_LETTERS + _DIGITS1):
        return _DIGITS1
    raise ValueError(f"unknown letters: {''.join(sorted(chars))!r}")


def _decoder(alphabet: Alphabet) -> dict:
    table = {ch: i for i, ch in enumerate(alphabet.symbols)}
    # a <-> 1, b <-> 2, ... when the alphabet is 1-based or alphabetic
    if alphabet.symbols == _DIGITS1[:alphabet.size]:
        table.update({ch: i for i, ch in enumerate(_LETTERS[:alphabet.size])})
    elif alphabet.symbols == _LETTERS[:alphabet.size]:
        table.update({ch: i for i, ch in enumerate(_DIGITS1[:alphabet.size])})
    return table


def parse_word(text: str, alphabet: Alphabet | None = None) -> Word:
    """Parse a word; whitespace is ignored.

    Without an explicit alphabet the symbol scheme is inferred and the size
    is the largest letter used, but at least 3 for 1-based or alphabetic
    words and at least 2 for 0-based ones.
    """
    text = "".join(text.split())
    if alphabet is None:
        scheme = _scheme_for(set(text)) if text else _DIGITS1
        if scheme is _DIGITS0:
            size = max([2] + [scheme.index(ch) + 1 for ch in text])
        else:
            size = max([3] + [_DIGITS1.index(ch) + 1 if ch in _DIGITS1
                              else _LETTERS.index(ch) + 1 for ch in text])
        alphabet = Alphabet(size, scheme[:size])
    table = _decoder(alphabet)
    try:
        return Word(bytes(table[ch] for ch in text), alphabet)
    except KeyError as exc:
        raise ValueError(f"letter {exc.args[0]!r} is not in alphabet "
                         f"{alphabet.symbols!r}") from None


def render_word(w: Word) -> str:
    symbols = w.alphabet.symbols
    return "".join(symbols[c] for c in w.letters)


def parse_morphism(text: str) -> Morphism:
    """Parse morphism text; the alphabet is inferred from the left-hand
    letters.  Lines may also be separated by commas."""
    pairs = []
    for line in text.replace(",", "\n").splitlines():
        line = line.strip()
        if not line:
            continue
        for arrow in ("->", "⟶", "→"):
            if arrow in line:
                lhs, rhs = line.split(arrow, 1)
                break
        else:
            raise ValueError(f"expected '<letter> -> <word>', got {line!r}")
        lhs, rhs = lhs.strip(), "".join(rhs.split())
        if len(lhs) != 1:
            raise ValueError(f"left-hand side must be one letter, got {lhs!r}")
        if not rhs:
            raise ValueError(f"empty image for letter {lhs!r}")
        pairs.append((lhs, rhs))
    if not pairs:
        raise ValueError("no morphism lines")
    letters = [lhs for lhs, _ in pairs]
    if len(set(letters)) != len(letters):
        raise ValueError("duplicate letter on the left-hand side")
    scheme = _scheme_for(set(letters))
    k = len(letters)
    symbols = scheme[:k]
    if set(letters) != set(symbols):
        raise ValueError(f"left-hand letters must be exactly {symbols!r}")
    alphabet = Alphabet(k, symbols)
    images = dict((symbols.index(lhs), parse_word(rhs, alphabet)) for lhs, rhs in pairs)
    return Morphism(tuple(images[a] for a in range(k)))


def render_morphism(m: Morphism, sep: str = "\n") -> str:
    symbols = m.alphabet.symbols
    return sep.join(f"{symbols[a]} -> {img}" for a, img in enumerate(m.images))


def ternary_morphism(*images: str) -> Morphism:
    """Shorthand: ``ternary_morphism("121", "232", "313")``."""
    alphabet = Alphabet(len(images))
    return Morphism(tuple(parse_word(s, alphabet) for s in images))


# census tables

def census_row(m: Morphism) -> str:
    return " ".join(str(img) for img in m.images)


def census_header(k: int = 3) -> str:
    return " ".join(f"phi({a})" for a in range(1, k + 1))


def emit_census_table(report) -> str:
    """Header plus one ``phi(1) phi(2) phi(3)`` row per survivor, sorted."""
    rows = sorted(census_row(m) for m in report.survivors)
    return "\n".join([census_header(report.alphabet_size)] + rows) + "\n"


def parse_census_table(text: str) -> list[Morphism]:
    lines = text.splitlines()
    if not lines or lines[0] != CENSUS_HEADER:
        raise ValueError("missing census header")
    return [ternary_morphism(*line.split()) for line in lines[1:] if line.strip()]


# fixtures

class FixtureError(Exception):
    pass


def _manifest() -> dict:
    return json.loads(resources.files("nonrep.data").joinpath("fixtures.json").read_text())


def fixture_names() -> list[str]:
    return sorted(_manifest())


def fixture_text(name: str) -> str:
    """Raw fixture content after checksum validation."""
    manifest = _manifest()
    if name not in manifest:
        raise FixtureError(f"unknown fixture {name!r}")
    entry = manifest[name]
    data = resources.files("nonrep.data").joinpath(entry["file"]).read_bytes()
    digest = hashlib.sha256(data).hexdigest()
    if digest != entry["sha256"]:
        raise FixtureError(f"checksum mismatch for fixture {name!r}")
    return data.decode("utf-8")


def fixture_info(name: str) -> dict:
    manifest = _manifest()
    if name not in manifest:
        raise FixtureError(f"unknown fixture {name!r}")
    return dict(manifest[name])


def load_fixture(name: str):
    """A checksum-validated fixture as a Word, Morphism or list of Morphism."""
    kind = fixture_info(name)["kind"]
    text = fixture_text(name)
    if kind == "word":
        return parse_word(text)
    if kind == "morphism":
        return parse_morphism(text)
    return parse_census_table(text)


# JSON

def witness_to_dict(w: RepetitionWitness) -> dict:
    return {"kind": w.kind.name.lower(), "start": w.start, "period": w.period,
            "total_length": w.total_length}


def witness_from_dict(d: dict) -> RepetitionWitness:
    w = RepetitionWitness(Kind[d["kind"].upper()], int(d["start"]), int(d["period"]))
    if "total_length" in d and d["total_length"] != w.total_length:
        raise ValueError("inconsistent witness length")
    return w


def decision_to_dict(d: PropertyDecision) -> dict:
    v = d.verdict
    out = {"property": d.property.value}
    if isinstance(v, ProvenTrue):
        out.update(verdict="proven_true", criterion=v.criterion)
    elif isinstance(v, ProvenFalse):
        out.update(verdict="proven_false", reason=v.reason)
    elif isinstance(v, RefutedBy):
        out.update(verdict="refuted_by", preimage=str(v.preimage),
                   witness=witness_to_dict(v.witness))
    else:
        out.update(verdict="verified_up_to",
                   bounds={"test_word_length": v.test_word_length,
                           "prefix_length": v.prefix_length,
                           "scanned_length": v.scanned_length})
    return out


def decision_from_dict(d: dict, alphabet: Alphabet) -> PropertyDecision:
    prop = Property(d["property"])
    tag = d["verdict"]
    if tag == "proven_true":
        v = ProvenTrue(d["criterion"])
    elif tag == "proven_false":
        v = ProvenFalse(d["reason"])
    elif tag == "refuted_by":
        v = RefutedBy(parse_word(d["preimage"], alphabet), witness_from_dict(d["witness"]))
    elif tag == "verified_up_to":
        b = d["bounds"]
        v = VerifiedUpTo(b["test_word_length"], b["prefix_length"], b.get("scanned_length", 0))
    else:
        raise ValueError(f"unknown verdict {tag!r}")
    return PropertyDecision(prop, v)


def morphism_report_to_dict(r: MorphismReport) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "morphism": render_morphism(r.morphism),
        "decisions": [decision_to_dict(d) for d in r.decisions.values()],
        "thue_status": r.thue_status,
        "thue_bounds": list(r.thue_bounds) if r.thue_bounds else None,
    }


def morphism_report_from_dict(d: dict) -> MorphismReport:
    if d.get("schema_version") != SCHEMA_VERSION:
        raise ValueError("unsupported schema version")
    m = parse_morphism(d["morphism"])
    decisions = {}
    for item in d["decisions"]:
        dec = decision_from_dict(item, m.alphabet)
        decisions[dec.property] = dec
    bounds = tuple(d["thue_bounds"]) if d.get("thue_bounds") else None
    return MorphismReport(m, decisions, d["thue_status"], bounds)


def search_report_to_dict(r, with_refutations: bool = False) -> dict:
    """``refutations`` rows are included only on request; sweeps can
    refute hundreds of thousands of candidates."""
    counts = r.refutations.counts() if hasattr(r.refutations, "counts") else {}
    out = {
        "schema_version": SCHEMA_VERSION,
        "rank": r.rank,
        "property_filter": r.property_filter,
        "alphabet_size": r.alphabet_size,
        "candidate_pool_size": r.candidate_pool_size,
        "count": len(r.survivors),
        "survivors": [census_row(m) for m in r.survivors],
        "orbit_classes": [{"representative": census_row(c.representative),
                           "size": c.size, "full_orbit_size": c.full_orbit_size}
                          for c in r.orbit_classes],
        "refutation_counts": counts,
        "partial": r.partial,
        "wall_time_ms": round(r.wall_time * 1000, 3),
    }
    if with_refutations:
        out["refutations"] = [{"morphism": census_row(m), **decision_to_dict(d)}
                              for m, d in r.refutations]
    return out


def dumps(obj: dict) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"
