"""PB_n relators and single-step rewriting in G_n^3 and G~_n^3.

Rule identifiers.  G_n^3 words: ``1`` (a^2 = 1), ``2`` (far commutation),
``3`` (tetrahedron).  G~_n^3 words: ``a`` .. ``i`` as in the presentation,
``f^-1`` .. ``i^-1`` for the same relations with both sides inverted, and
``free`` for sigma^e sigma^-e = 1.

Direction ``forward`` rewrites a left-hand side into the right-hand side.
For the symmetric rules (2/b, d, 3/c) every match is simultaneously an
instance of both sides, so one canonical direction is reported: forward when
the first swapped letter precedes the second (bitmask order), and for the
tetrahedron when the omitted index of the first letter exceeds that of the
last.  A step and its undo always carry opposite directions.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Union

from . import kernels
from .words import (
    BraidLetter,
    BraidWord,
    Gn3Word,
    SigmaLetter,
    TildeWord,
    TriLetter,
)

FORWARD = "forward"
BACKWARD = "backward"

RELATOR_FAMILIES = ("commuting", "conjugate-s", "conjugate-rs-equal", "conjugate-general")


@dataclass(frozen=True)
class Relator:
    word: BraidWord
    family: str
    params: tuple[int, int, int, int]

    def to_json(self) -> dict:
        i, j, r, s = self.params
        return {"family": self.family, "i": i, "j": j, "r": r, "s": s, "word": str(self.word)}


def _relator_rhs(family: str, i: int, j: int, r: int, s: int) -> list[tuple[int, int, int]]:
    if family == "commuting":
        return [(i, j, 1)]
    if family == "conjugate-s":
        return [(i, s, -1), (i, j, 1), (i, s, 1)]
    if family == "conjugate-rs-equal":
        return [(i, j, -1), (i, r, -1), (i, j, 1), (i, r, 1), (i, j, 1)]
    return [(i, s, -1), (i, r, -1), (i, s, 1), (i, r, 1), (i, j, 1),
            (i, r, -1), (i, s, -1), (i, r, 1), (i, s, 1)]


def _families(i: int, j: int, r: int, s: int):
    if s < i or j < r:
        yield "commuting"
    if i < j == r < s:
        yield "conjugate-s"
    if i < j < r == s:
        yield "conjugate-rs-equal"
    if i < j < r < s:
        yield "conjugate-general"


def pb_relators(n: int) -> list[Relator]:
    """Relators b_rs b_ij b_rs^-1 (RHS)^-1, one per (branch, i, j, r, s).

    The branch conditions are applied exactly as printed, so a tuple may
    satisfy two of them (i < j < r < s also has j < r) and the third branch
    can never fire because r < s.
    """
    if n < 2:
        raise ValueError("pb_relators needs n >= 2")
    out = []
    pairs = list(combinations(range(1, n + 1), 2))
    for i, j in pairs:
        for r, s in pairs:
            for family in _families(i, j, r, s):
                rhs = BraidWord(n, tuple(BraidLetter(*x) for x in _relator_rhs(family, i, j, r, s)))
                lhs = BraidWord(n, (BraidLetter(r, s), BraidLetter(i, j), BraidLetter(r, s, -1)))
                out.append(Relator(lhs + rhs.inverse(), family, (i, j, r, s)))
    return out


@dataclass(frozen=True)
class RewriteStep:
    position: int
    rule: str
    direction: str
    result: Union[Gn3Word, TildeWord]

    def to_json(self) -> dict:
        return {
            "position": self.position,
            "rule": self.rule,
            "direction": self.direction,
            "result": str(self.result),
        }


def gn3_alphabet(n: int) -> tuple[TriLetter, ...]:
    return tuple(TriLetter(*t) for t in combinations(range(1, n + 1), 3))


def sigma_alphabet(n: int) -> tuple[SigmaLetter, ...]:
    return tuple(
        SigmaLetter(i, j, e)
        for i, j in permutations(range(1, n + 1), 2)
        for e in (1, -1)
    )


_DIR = {1: FORWARD, -1: BACKWARD}


def _gn3_steps(w: Gn3Word, allow_insertions: bool) -> list[RewriteStep]:
    alphabet = tuple(x.mask for x in gn3_alphabet(w.n))
    return [
        RewriteStep(p, str(rule), _DIR[d], Gn3Word.from_masks(w.n, res))
        for p, rule, d, res in kernels.gn3_successors(w.masks, alphabet, allow_insertions)
    ]


# (f)-(i): left-hand sides with the a-letter as "A" and sigma letters as index
# pairs into the ordered triple (i, j, k).  Each right-hand side is the
# reversed left-hand side.
_TEMPLATES = {
    "f": ("A", (0, 1), (0, 2), (1, 2)),
    "g": ((0, 1), "A", (0, 2), (1, 2)),
    "h": ((0, 1), (0, 2), "A", (1, 2)),
    "i": ((0, 1), (0, 2), (1, 2), "A"),
}


def _unify(template, window) -> bool:
    bound: list = [None, None, None]
    tri = None
    for sym, x in zip(template, window):
        if sym == "A":
            if not isinstance(x, TriLetter):
                return False
            tri = x
            continue
        if not isinstance(x, SigmaLetter):
            return False
        for slot, val in zip(sym, (x.i, x.j)):
            if bound[slot] is None:
                bound[slot] = val
            elif bound[slot] != val:
                return False
    return len(set(bound)) == 3 and tri is not None and tri.support == set(bound)


def _mixed_steps(window: tuple) -> list[tuple[str, str]]:
    """Rules (f)-(i) and their inverted forms matching a 4-letter window."""
    sigmas = [x for x in window if isinstance(x, SigmaLetter)]
    if len(sigmas) != 3:
        return []
    signs = {x.sign for x in sigmas}
    if len(signs) != 1:
        return []
    out = []
    if signs == {1}:
        for rule, lhs in _TEMPLATES.items():
            if _unify(lhs, window):
                out.append((rule, FORWARD))
            if _unify(lhs[::-1], window):
                out.append((rule, BACKWARD))
    else:
        # (LHS)^-1 = (RHS)^-1 reads  reversed(LHS)^- = LHS^-.
        for rule, lhs in _TEMPLATES.items():
            if _unify(lhs[::-1], window):
                out.append((rule + "^-1", FORWARD))
            if _unify(lhs, window):
                out.append((rule + "^-1", BACKWARD))
    return out


def _tetra(window) -> int:
    """+1/-1 if four a-letters form a tetrahedron window, else 0."""
    if not all(isinstance(x, TriLetter) for x in window):
        return 0
    masks = [x.mask for x in window]
    u = masks[0] | masks[1] | masks[2] | masks[3]
    if bin(u).count("1") != 4 or len(set(masks)) != 4:
        return 0
    first = (u & ~masks[0]).bit_length()
    last = (u & ~masks[3]).bit_length()
    return 1 if first > last else -1


def _tilde_steps(w: TildeWord, allow_insertions: bool) -> list[RewriteStep]:
    letters = w.letters
    n = len(letters)
    out: list[RewriteStep] = []

    def emit(p, rule, direction, new):
        out.append(RewriteStep(p, rule, direction, TildeWord(w.n, new)))

    ins_a = gn3_alphabet(w.n) if allow_insertions else ()
    ins_s = sigma_alphabet(w.n) if allow_insertions else ()
    for p in range(n + 1):
        pair = letters[p:p + 2]
        head, tail = letters[:p], letters[p + 2:]
        if len(pair) == 2:
            x, y = pair
            if isinstance(x, TriLetter) and x == y:
                emit(p, "a", FORWARD, head + tail)
            if isinstance(x, SigmaLetter) and x.inverse() == y:
                emit(p, "free", FORWARD, head + tail)
        for z in ins_a:
            emit(p, "a", BACKWARD, letters[:p] + (z, z) + letters[p:])
        for z in ins_s:
            emit(p, "free", BACKWARD, letters[:p] + (z, z.inverse()) + letters[p:])
        if len(pair) == 2:
            x, y = pair
            swapped = head + (y, x) + tail
            if isinstance(x, TriLetter) and isinstance(y, TriLetter):
                if len(x.support & y.support) < 2:
                    emit(p, "b", FORWARD if x.mask < y.mask else BACKWARD, swapped)
            elif isinstance(x, SigmaLetter) and isinstance(y, SigmaLetter):
                if not x.support & y.support:
                    emit(p, "d", FORWARD if x < y else BACKWARD, swapped)
            elif len(x.support & y.support) < 2:
                emit(p, "e", FORWARD if isinstance(x, SigmaLetter) else BACKWARD, swapped)
        if p + 4 <= n:
            window = letters[p:p + 4]
            flipped = head + window[::-1] + letters[p + 4:]
            t = _tetra(window)
            if t:
                emit(p, "c", _DIR[t], flipped)
            for rule, direction in _mixed_steps(window):
                emit(p, rule, direction, flipped)
    return out


def rewrite_steps(
    w: Union[Gn3Word, TildeWord], allow_insertions: bool = False
) -> list[RewriteStep]:
    """Every single relation application to ``w``.

    Deletions of a^2 (and of sigma sigma^-1) are always listed; insertions
    of such pairs only with ``allow_insertions``.
    """
    if isinstance(w, Gn3Word):
        return _gn3_steps(w, allow_insertions)
    if isinstance(w, TildeWord):
        return _tilde_steps(w, allow_insertions)
    raise TypeError(f"rewrite_steps takes G_n^3 or G~_n^3 words, got {type(w).__name__}")

