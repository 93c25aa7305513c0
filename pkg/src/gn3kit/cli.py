"""Command-line front end.

    gn3kit map --via tilde-phi --n 3 "b[1,2]"
    gn3kit invariant --n 3 --triple 1,2,3 "b[1,2]^-1 b[1,3]^-1 b[1,2] b[1,3]"
    gn3kit cancellable --n 3 "b[1,2] b[1,3] b[1,2]^-1"
    gn3kit explore --n 4 --mode connect --allow-insertions W1 W2
    gn3kit relators --n 4
    gn3kit indices --n 3 --triple 1,2,3 "b[1,2]"

A word argument of ``-`` is read from stdin.  Exit status: 0 on success,
1 on a domain error (bad word, failed verification), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import cancellability, explorer, homomorphisms, invariants, presentations
from .words import WordError, parse


def _triple(text: str) -> tuple[int, int, int]:
    try:
        t = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad triple {text!r}") from None
    if len(t) != 3:
        raise argparse.ArgumentTypeError("triple needs three comma-separated indices")
    return t


def _read(text: str) -> str:
    return sys.stdin.read() if text == "-" else text


def _emit(args, payload, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


# map ---------------------------------------------------------------------

_MAP_INPUT = {"phi": "braid", "tilde-phi": "braid", "f": "braid", "pr": "tilde", "pi": "tilde", "i": "gn3"}


def cmd_map(args) -> int:
    w = parse(_read(args.word), _MAP_INPUT[args.via], args.n)
    if args.via == "f":
        if args.triple is None:
            raise WordError("map --via f needs --triple")
        out = homomorphisms.f_ijk(w, args.triple)
    elif args.via == "i":
        out = homomorphisms.embed_i(w)
    else:
        out = homomorphisms.MAPS[args.via](w)
    _emit(args, {"via": args.via, "n": out.n, "kind": out.kind, "word": str(out)}, str(out))
    return 0


# invariant / indices -------------------------------------------------------

def _g3_word(args):
    """The G^3 word whose a_{ijk} letters are indexed, per --source."""
    w = parse(_read(args.word), args.source, args.n)
    if args.source == "braid":
        if args.via == "phi":
            return homomorphisms.phi(w)
        return homomorphisms.pi(homomorphisms.tilde_phi(w))
    if args.source == "tilde":
        return homomorphisms.pi(w)
    return w


def cmd_invariant(args) -> int:
    g = _g3_word(args)
    sel = invariants.TripleSelector(*args.triple, g.n)
    raw = invariants.w_invariant(g, sel, args.convention)
    red = invariants.reduce(raw)
    payload = {
        "selector": list(sel.triple),
        "bound": g.n,
        "letters": [str(x) for x in raw],
        "reduced": [str(x) for x in red],
        "trivial": not red.letters,
    }
    text = "\n".join([
        f"selector: {sel} (bound {g.n})",
        f"letters: {raw}",
        f"reduced: {red}",
        f"trivial: {str(not red.letters).lower()}",
    ])
    _emit(args, payload, text)
    return 0


def cmd_indices(args) -> int:
    g = _g3_word(args)
    sel = invariants.TripleSelector(*args.triple, g.n)
    occ = invariants.occurrence_indices(g, sel, args.convention)
    payload = {
        "selector": list(sel.triple),
        "bound": g.n,
        "domain": list(sel.complement),
        "word": str(g),
        "occurrences": [{"position": o.position, "index": str(o.index)} for o in occ],
    }
    text = "\n".join(f"{o.position}: {o.index}" for o in occ) or "(no occurrences)"
    _emit(args, payload, text)
    return 0


# cancellable -------------------------------------------------------------

def cmd_cancellable(args) -> int:
    w = parse(_read(args.word), "braid", args.n)
    reports = cancellability.analyse(w)
    lines = []
    for r in reports:
        p = r.pair
        certs = ", ".join(
            c.kind + (f" k={c.k}" if c.kind == "parity" else "")
            + (f" {c.selector}: {c.reduced}" if c.kind == "invariant-obstruction" else "")
            for c in r.certificates
        )
        lines.append(f"b[{p.i},{p.j}] at ({p.left},{p.right}): {r.verdict} [{certs}]")
    _emit(args, [r.to_json() for r in reports], "\n".join(lines) or "(no pairs)")
    return 0


# explore -----------------------------------------------------------------

def cmd_explore(args) -> int:
    words = [parse(_read(t), args.kind, args.n) for t in args.words]
    if args.mode == "rigid":
        reps = [explorer.is_locally_rigid(w) for w in words]
        payload = [dict(word=str(w), **r.to_json()) for w, r in zip(words, reps)]
        text = "\n".join(f"{w}: {'rigid' if r.rigid else 'not rigid'}" for w, r in zip(words, reps))
        _emit(args, payload, text)
        return 0 if all(r.rigid for r in reps) else 1
    if args.mode == "chain":
        rep = explorer.verify_chain(words)
        lines = [
            f"{t}: " + ("equal" if s is None else f"rule {s.rule} {s.direction} at {s.position}")
            for t, s in enumerate(rep.steps, start=1)
        ]
        lines.append("verified" if rep.ok else f"no single step links pair {rep.failed_at}")
        _emit(args, rep.to_json(), "\n".join(lines))
        return 0 if rep.ok else 1
    if len(words) != 2:
        raise WordError("explore --mode connect takes exactly two words")
    cfg = explorer.SearchConfig(args.max_length, args.max_states, args.max_depth, args.allow_insertions)
    res = explorer.bfs_connect(words[0], words[1], cfg)
    if isinstance(res, explorer.RewritePath):
        text = "\n".join(
            [str(res.start)]
            + [f"  -[{s.rule} {s.direction} @{s.position}]-> {s.result}" for s in res.steps]
        )
        _emit(args, res.to_json(), text)
        return 0
    _emit(args, res.to_json(),
          f"not found within bounds (explored {res.explored}, depth {res.depth_reached})")
    return 1


# relators ----------------------------------------------------------------

def cmd_relators(args) -> int:
    rels = presentations.pb_relators(args.n)
    text = "\n".join(f"{r.family} {r.params}: {r.word}" for r in rels)
    _emit(args, [r.to_json() for r in rels], text or "(none)")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gn3kit", description=__doc__.split("\n")[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("--n", type=int, required=True, help="strand count / index bound")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.set_defaults(func=func)
        return p

    p = add("map", cmd_map, "apply phi, tilde-phi, pr, pi, i or f_ijk")
    p.add_argument("--via", choices=sorted(_MAP_INPUT), required=True)
    p.add_argument("--triple", type=_triple, help="triple for --via f")
    p.add_argument("word")

    for name, func, help in (
        ("invariant", cmd_invariant, "w / w~ invariant for a triple"),
        ("indices", cmd_indices, "index of every occurrence of a_ijk"),
    ):
        p = add(name, func, help)
        p.add_argument("--triple", type=_triple, required=True)
        p.add_argument("--source", choices=("braid", "tilde", "gn3"), default="braid")
        p.add_argument("--via", choices=("tilde-phi", "phi"), default="tilde-phi",
                       help="map for braid input (tilde-phi indexes over n+1)")
        p.add_argument("--convention", choices=invariants.CONVENTIONS, default="example")
        p.add_argument("word")

    p = add("cancellable", cmd_cancellable, "non-cancellability certificates for all pairs")
    p.add_argument("word")

    p = add("explore", cmd_explore, "rewrite search, chain verification, rigidity")
    p.add_argument("--mode", choices=("connect", "chain", "rigid"), default="connect")
    p.add_argument("--kind", choices=("gn3", "tilde"), default="gn3")
    p.add_argument("--max-length", type=int, default=8)
    p.add_argument("--max-states", type=int, default=1_000_000)
    p.add_argument("--max-depth", type=int, default=64)
    p.add_argument("--allow-insertions", action="store_true")
    p.add_argument("words", nargs="+")

    add("relators", cmd_relators, "PB_n relators")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (WordError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
