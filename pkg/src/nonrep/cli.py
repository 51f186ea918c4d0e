"""Command-line interface: ``nonrep <subcommand> ...``.

Exit codes: 0 success, 1 a reproduction claim failed, 2 usage error.
"""
from __future__ import annotations

import argparse
import os
import sys

from . import io
from .avoid import AvoidanceQuery, ExhaustedAt, max_avoiding, tree_to_dot
from .classify import ClassifyConfig, classify
from .morphisms import apply, fixed_point_prefix
from .words import Alphabet, Property, find_all_kinds

_PROPERTY_NAMES = {
    "square": Property.SQUAREFREE, "squarefree": Property.SQUAREFREE,
    "cube": Property.CUBEFREE, "cubefree": Property.CUBEFREE,
    "overlap": Property.OVERLAP_FREE, "overlap-free": Property.OVERLAP_FREE,
    "weak-square": Property.WEAKLY_SQUAREFREE,
    "weakly-squarefree": Property.WEAKLY_SQUAREFREE,
}


class UsageError(Exception):
    pass


def _properties(text: str | None, default=tuple(_PROPERTY_NAMES[n] for n in
                                               ("square", "cube", "overlap", "weak-square"))):
    if not text:
        return default
    out = []
    for name in text.split(","):
        name = name.strip().lower()
        if name not in _PROPERTY_NAMES:
            raise UsageError(f"unknown property {name!r}; choose from "
                             + ", ".join(sorted(_PROPERTY_NAMES)))
        out.append(_PROPERTY_NAMES[name])
    return tuple(dict.fromkeys(out))


def _alphabet(args) -> Alphabet | None:
    return Alphabet(args.alphabet) if args.alphabet else None


def _word(text: str, alphabet: Alphabet | None):
    return io.parse_word(text, alphabet)


def _morphism(source: str):
    """A morphism file, or the name of a bundled fixture."""
    if os.path.exists(source):
        with open(source, encoding="utf-8") as fh:
            return io.parse_morphism(fh.read())
    if source in io.fixture_names():
        m = io.load_fixture(source)
        if hasattr(m, "images"):
            return m
    raise UsageError(f"no morphism file or fixture named {source!r}")


def _letter(m, text: str) -> int:
    try:
        return io.parse_word(text, m.alphabet).letters[0]
    except (ValueError, IndexError):
        raise UsageError(f"bad seed letter {text!r}") from None


# subcommands; each returns (text, json-able object, exit code)

def run_check_word(args):
    w = _word(args.word, _alphabet(args))
    props = _properties(args.properties)
    hits = find_all_kinds(w)
    lines, rows = [], []
    for p in props:
        hit = hits[p.kind]
        name = p.kind.name.lower().replace("_", " ")
        lines.append(str(hit) if hit else f"no {name}")
        rows.append({"property": p.value, "holds": hit is None,
                     "witness": io.witness_to_dict(hit) if hit else None})
    return "\n".join(lines), {"schema_version": io.SCHEMA_VERSION, "word": str(w),
                              "checks": rows}, 0


def run_apply(args):
    m = _morphism(args.morphism)
    image = apply(m, _word(args.word, m.alphabet))
    return str(image), {"schema_version": io.SCHEMA_VERSION, "morphism": io.render_morphism(m),
                        "word": args.word, "image": str(image)}, 0


def run_fixed_point(args):
    m = _morphism(args.morphism)
    seed = _letter(m, args.seed)
    if args.length < 1:
        raise UsageError("--length must be positive")
    w = fixed_point_prefix(m, seed, args.length).factor(1, args.length)
    return str(w), {"schema_version": io.SCHEMA_VERSION, "morphism": io.render_morphism(m),
                    "seed": args.seed, "prefix": str(w)}, 0


def run_classify(args):
    m = _morphism(args.morphism)
    report = classify(m, ClassifyConfig(args.bound_K, args.bound_L))
    lines = [f"morphism: {m}"] + [str(d) for d in report.decisions.values()]
    thue = "yes" if report.thue_status else "no"
    if report.thue_status and report.thue_bounds:
        thue += " (cubefree/overlap-free verified up to test length {}, prefix {})".format(
            *report.thue_bounds)
    lines.append(f"Thue: {thue}")
    return "\n".join(lines), io.morphism_report_to_dict(report), 0


def run_search(args):
    from . import search
    kind, rank = args.kind, args.rank
    if kind == "squarefree":
        rep = search.search_uniform_squarefree(rank, prune=not args.no_prune,
                                               workers=args.threads)
    elif kind == "cyclic":
        rep = search.search_cyclic_squarefree(rank)
    elif kind == "triple":
        rep = search.search_triple_property(rank, args.bound_K, args.bound_L)
    else:
        rep = search.search_weakly_squarefree_thue(rank, args.alphabet or 3,
                                                   args.bound_K, args.bound_L)
    text = io.emit_census_table(rep).rstrip("\n")
    return text, io.search_report_to_dict(rep, args.witnesses), 0


def run_avoid(args):
    alphabet = Alphabet(args.alphabet or 3)
    props = _properties(args.properties, default=(Property.SQUAREFREE,))
    query = AvoidanceQuery(alphabet, tuple(args.forbid), props, args.budget)
    out = max_avoiding(query)
    st = out.status
    if isinstance(st, ExhaustedAt):
        lines = [f"max length {st.max_len}"] + [str(w) for w in st.witnesses]
        obj = {"status": "exhausted", "max_length": st.max_len,
               "witnesses": [str(w) for w in st.witnesses]}
    else:
        lines = [f"open at budget {st.budget}", str(st.witness)]
        obj = {"status": "open", "budget": st.budget, "witness": str(st.witness)}
    lines.append(f"nodes visited: {out.nodes_visited}")
    obj.update(schema_version=io.SCHEMA_VERSION, nodes_visited=out.nodes_visited,
               forbidden=[str(f) for f in query.forbidden],
               properties=[p.value for p in props])
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(tree_to_dot(query))
    return "\n".join(lines), obj, 0


def run_reproduce(args):
    from .reproduce import Bounds, format_row, run_claims
    only = None
    if args.claims:
        try:
            only = {int(x) for x in args.claims.split(",")}
        except ValueError:
            raise UsageError("--claims takes comma-separated numbers") from None
    bounds = Bounds(args.bound_K, args.bound_L)
    stream = args.format == "text" and not args.out
    results = run_claims(bounds, only, args.threads,
                         progress=(lambda r: print(format_row(r), flush=True)) if stream else None)
    failed = [r for r in results if not r.passed]
    summary = f"{len(results) - len(failed)}/{len(results)} claims PASS"
    text = summary if stream else "\n".join([format_row(r) for r in results] + [summary])
    obj = {"schema_version": io.SCHEMA_VERSION,
           "claims": [{"number": r.number, "title": r.title,
                       "status": "PASS" if r.passed else "FAIL",
                       "detail": r.detail, "seconds": round(r.seconds, 3)} for r in results]}
    return text, obj, 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--alphabet", type=int, help="alphabet size (default: inferred, or 3)")
    shared.add_argument("--bound-K", dest="bound_K", type=int, default=8,
                        help="longest test word for bounded checks (default 8)")
    shared.add_argument("--bound-L", dest="bound_L", type=int, default=10_000,
                        help="fixed-point prefix length for bounded checks (default 10000)")
    shared.add_argument("--threads", type=int, default=1, help="worker processes for searches")
    shared.add_argument("--no-prune", action="store_true", help="disable search pruning")
    shared.add_argument("--format", choices=("text", "json"), default="text")
    shared.add_argument("--out", help="write output to this file")

    parser = argparse.ArgumentParser(prog="nonrep", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-word", parents=[shared], help="find repetitions in a word")
    p.add_argument("word")
    p.add_argument("--properties", help="comma list: square,cube,overlap,weak-square")
    p.set_defaults(func=run_check_word)

    p = sub.add_parser("apply", parents=[shared], help="apply a morphism to a word")
    p.add_argument("morphism", help="morphism file or fixture name")
    p.add_argument("word")
    p.set_defaults(func=run_apply)

    p = sub.add_parser("fixed-point", parents=[shared], help="prefix of a fixed point")
    p.add_argument("morphism", help="morphism file or fixture name")
    p.add_argument("--seed", default="1")
    p.add_argument("--length", type=int, default=100)
    p.set_defaults(func=run_fixed_point)

    p = sub.add_parser("classify", parents=[shared], help="decide morphism properties")
    p.add_argument("morphism", help="morphism file or fixture name")
    p.set_defaults(func=run_classify)

    p = sub.add_parser("search", parents=[shared], help="exhaustive uniform-morphism searches")
    p.add_argument("kind", choices=("squarefree", "cyclic", "triple", "weak-thue"))
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--witnesses", action="store_true",
                   help="include every refutation in JSON output")
    p.set_defaults(func=run_search)

    p = sub.add_parser("avoid", parents=[shared], help="longest words avoiding factors")
    p.add_argument("--forbid", action="append", default=[], help="forbidden factor (repeatable)")
    p.add_argument("--properties", help="comma list, conjunction (default square)")
    p.add_argument("--budget", type=int, default=1000, help="depth budget")
    p.add_argument("--dot", help="write the explored tree as Graphviz")
    p.set_defaults(func=run_avoid)

    p = sub.add_parser("reproduce", parents=[shared], help="re-derive every published claim")
    p.add_argument("--claims", help="comma-separated claim numbers (default all)")
    p.set_defaults(func=run_reproduce)
    return parser


def _validate(args):
    if args.alphabet is not None and not 1 <= args.alphabet <= 9:
        raise UsageError("--alphabet must be in 1..9")
    if args.bound_K < 1 or args.bound_L < 1:
        raise UsageError("--bound-K and --bound-L must be positive")
    if args.threads < 1:
        raise UsageError("--threads must be positive")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _validate(args)
        text, obj, code = args.func(args)
    except (UsageError, ValueError, io.FixtureError) as exc:
        print(f"nonrep: error: {exc}", file=sys.stderr)
        return 2
    output = io.dumps(obj) if args.format == "json" else text + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(output)
    else:
        sys.stdout.write(output)
    return code


if __name__ == "__main__":
    sys.exit(main())
