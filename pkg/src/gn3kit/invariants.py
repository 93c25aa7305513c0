"""Occurrence indices and the Z2 free-product invariants w_(i,j,k), w~_ijk.

For an occurrence c of a_{ijk} in a G^3 word and l outside {i,j,k}, let
N_T be the number of a_T letters strictly before c.  The index is

    example:   i_c(l) = (N_jkl + N_ijl, N_ikl + N_jkl)  mod 2   (default)
    section3:  i_c(l) = (N_jkl + N_ijl, N_ikl + N_ijl)  mod 2

Both make w a homomorphism to the free product; they differ by a relabelling
of Z2 x Z2.  The default is the one that reproduces the worked commutator
example.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Literal, Union

from . import kernels
from .homomorphisms import pi
from .words import (
    FreeProductWord,
    Gn3Word,
    IndexLetter,
    SigmaLetter,
    TildeWord,
    TriLetter,
    WordError,
)

Convention = Literal["example", "section3"]
CONVENTIONS = ("example", "section3")


@dataclass(frozen=True)
class TripleSelector:
    """Ordered triple (i, j, k) inside 1..m; the order fixes the index labels."""

    i: int
    j: int
    k: int
    m: int

    def __post_init__(self):
        t = (self.i, self.j, self.k)
        if len(set(t)) != 3 or min(t) < 1 or max(t) > self.m:
            raise WordError(f"selector {t} is not 3 distinct indices in 1..{self.m}")

    @property
    def triple(self) -> tuple[int, int, int]:
        return (self.i, self.j, self.k)

    @property
    def letter(self) -> TriLetter:
        return TriLetter(self.i, self.j, self.k)

    @property
    def complement(self) -> tuple[int, ...]:
        return tuple(l for l in range(1, self.m + 1) if l not in self.triple)

    def __str__(self) -> str:
        return "{},{},{}".format(*self.triple)


def all_selectors(m: int) -> list[TripleSelector]:
    """Ascending selectors for every 3-subset of 1..m."""
    return [TripleSelector(i, j, k, m) for i, j, k in combinations(range(1, m + 1), 3)]


@dataclass(frozen=True)
class OccurrenceIndex:
    position: int
    index: IndexLetter


def _selector(sel, m: int) -> TripleSelector:
    if isinstance(sel, TripleSelector):
        if sel.m != m:
            raise WordError(f"selector bound {sel.m} does not match word bound {m}")
        return sel
    return TripleSelector(*sel, m)


@lru_cache(maxsize=1024)
def _plan(sel: TripleSelector, convention: str):
    """Letter-mask -> kernel code table and the flat watch list."""
    if convention not in CONVENTIONS:
        raise WordError(f"unknown index convention {convention!r}")
    i, j, k = sel.triple
    codes = {sel.letter.mask: 0}

    def code(*t):
        return codes.setdefault(TriLetter(*t).mask, len(codes))

    watch = []
    for l in sel.complement:
        ijl, jkl, ikl = code(i, j, l), code(j, k, l), code(i, k, l)
        if convention == "example":
            watch += [jkl, ijl, ikl, jkl]
        else:
            watch += [jkl, ijl, ikl, ijl]
    return codes, tuple(watch)


@lru_cache(maxsize=65536)
def _letter(sel: TripleSelector, row: bytes) -> IndexLetter:
    return IndexLetter(sel.triple, sel.complement, tuple((b >> 1, b & 1) for b in row))


def occurrence_indices(
    w: Gn3Word, sel, convention: Convention = "example"
) -> list[OccurrenceIndex]:
    """Indices of every a_{ijk} occurrence, in one left-to-right scan."""
    sel = _selector(sel, w.n)
    codes, watch = _plan(sel, convention)
    seq = [codes.get(x.mask, -1) for x in w]
    return [
        OccurrenceIndex(p, _letter(sel, row))
        for p, row in kernels.occurrence_indices(seq, watch)
    ]


def occurrence_index(
    w: Gn3Word, pos: int, sel, convention: Convention = "example"
) -> IndexLetter:
    sel = _selector(sel, w.n)
    if not 0 <= pos < len(w) or w[pos] != sel.letter:
        raise WordError(f"letter at position {pos} is not {sel.letter}")
    return occurrence_indices(w[: pos + 1], sel, convention)[-1].index


def w_invariant(w: Gn3Word, sel, convention: Convention = "example") -> FreeProductWord:
    """w_(i,j,k): the unreduced word of occurrence indices."""
    return FreeProductWord(tuple(o.index for o in occurrence_indices(w, sel, convention)))


def tilde_w_invariant(
    w: TildeWord, sel, convention: Convention = "example"
) -> FreeProductWord:
    """w~_ijk = w_(i,j,k) o pi; ``sel`` lives over n + 1."""
    return w_invariant(pi(w), sel, convention)


def reduce(w: FreeProductWord) -> FreeProductWord:
    return FreeProductWord(tuple(kernels.reduce_involutions(w.letters)))


def is_trivial(w: FreeProductWord) -> bool:
    return not reduce(w).letters


@dataclass(frozen=True)
class AbelianProfile:
    """Odd a-letter counts and nonzero net sigma_ij exponents (zeros omitted)."""

    parities: dict[TriLetter, int] = field(default_factory=dict)
    exponents: dict[tuple[int, int], int] = field(default_factory=dict)

    @property
    def is_trivial(self) -> bool:
        return not any(self.parities.values()) and not any(self.exponents.values())


def abelian_profile(w: Union[Gn3Word, TildeWord]) -> AbelianProfile:
    counts: Counter = Counter()
    exps: Counter = Counter()
    for x in w:
        if isinstance(x, SigmaLetter):
            exps[(x.i, x.j)] += x.sign
        else:
            counts[x] += 1
    return AbelianProfile(
        {x: 1 for x, c in sorted(counts.items()) if c % 2},
        {p: e for p, e in sorted(exps.items()) if e},
    )
