"""Maps between PB_n, G_n^3 and G~_n^3.

Products over an index range always expand in ascending order and skip the
index that would make a letter degenerate (``a_{iki}``).  A negative braid
letter maps to the formal inverse of its generator's image.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Literal

from .words import (
    BraidLetter,
    BraidWord,
    Gn3Word,
    SigmaLetter,
    TildeWord,
    TriLetter,
    WordError,
)

Variant = Literal["c_ij", "cbar_ij", "c_ji", "cbar_ji"]


def _check_pair(i: int, j: int, n: int) -> None:
    if not 1 <= i < j <= n:
        raise WordError(f"need 1 <= i < j <= n, got i={i}, j={j}, n={n}")


def _a_block(i: int, j: int, lo: int, hi: int) -> list[TriLetter]:
    return [TriLetter(i, j, l) for l in range(lo, hi + 1) if l != i and l != j]


def c_gn3(i: int, k: int, n: int) -> Gn3Word:
    """c_{i,k}: a_{ikl} for l = k+1..n, then l = 1..k-1 (l != i)."""
    _check_pair(i, k, n)
    return Gn3Word(n, _a_block(i, k, k + 1, n) + _a_block(i, k, 1, k - 1))


@dataclass(frozen=True)
class CWordSpec:
    i: int
    j: int
    variant: Variant
    n: int

    def __post_init__(self):
        _check_pair(self.i, self.j, self.n)
        if self.variant not in ("c_ij", "cbar_ij", "c_ji", "cbar_ji"):
            raise WordError(f"unknown c-word variant {self.variant!r}")


_SIGMA = {
    "c_ij": (False, -1),
    "cbar_ij": (False, 1),
    "c_ji": (True, -1),
    "cbar_ji": (True, 1),
}


def tilde_c(spec: CWordSpec) -> TildeWord:
    i, j, n = spec.i, spec.j, spec.n
    swapped, sign = _SIGMA[spec.variant]
    sigma = SigmaLetter(j, i, sign) if swapped else SigmaLetter(i, j, sign)
    return TildeWord(n, _a_block(i, j, j + 1, n) + [sigma] + _a_block(i, j, 1, j - 1))


@lru_cache(maxsize=4096)
def _phi_gen(i: int, j: int, n: int) -> tuple[TriLetter, ...]:
    out: list[TriLetter] = []
    for k in range(i + 1, j):
        out += reversed(c_gn3(i, k, n).letters)
    out += c_gn3(i, j, n).letters * 2
    for k in range(j - 1, i, -1):
        out += c_gn3(i, k, n).letters
    return tuple(out)


@lru_cache(maxsize=4096)
def _tilde_phi_gen(i: int, j: int, n: int) -> tuple:
    out: list = []
    for k in range(i + 1, j):
        out += tilde_c(CWordSpec(i, k, "c_ij", n)).inverse().letters
    out += tilde_c(CWordSpec(i, j, "cbar_ij", n)).letters
    out += tilde_c(CWordSpec(i, j, "cbar_ji", n)).letters
    for k in range(j - 1, i, -1):
        out += tilde_c(CWordSpec(i, k, "c_ij", n)).letters
    return tuple(out)


def _map_braid(w: BraidWord, gen, cls):
    out: list = []
    for x in w:
        img = gen(x.i, x.j, w.n)
        if x.sign > 0:
            out += img
        else:
            out += (y.inverse() for y in reversed(img))
    return cls(w.n, tuple(out))


def phi(w: BraidWord) -> Gn3Word:
    """PB_n -> G_n^3."""
    return _map_braid(w, _phi_gen, Gn3Word)


def tilde_phi(w: BraidWord) -> TildeWord:
    """PB_n -> G~_n^3: phi with the sigma letters read off at the fixed point."""
    return _map_braid(w, _tilde_phi_gen, TildeWord)


def pr(w: TildeWord) -> Gn3Word:
    """Forget the sigma letters."""
    return Gn3Word(w.n, tuple(x for x in w if isinstance(x, TriLetter)))


def embed_i(w: Gn3Word) -> TildeWord:
    return TildeWord(w.n, w.letters)


def pi(w: TildeWord) -> Gn3Word:
    """G~_n^3 -> G_{n+1}^3, sigma_ij^{+-1} and sigma_ji^{+-1} -> a_{i,j,n+1}."""
    top = w.n + 1
    return Gn3Word(
        top,
        tuple(x if isinstance(x, TriLetter) else TriLetter(x.i, x.j, top) for x in w),
    )


def f_ijk(w: BraidWord, triple) -> BraidWord:
    """Keep b_st^{+-1} with exactly two indices in ``triple``, drop the rest."""
    t = frozenset(triple)
    if len(t) != 3 or not t <= set(range(1, w.n + 1)):
        raise WordError(f"triple must be 3 distinct indices in 1..{w.n}, got {triple!r}")
    return BraidWord(w.n, tuple(x for x in w if len(x.support & t) == 2))


MAPS = {
    "phi": phi,
    "tilde-phi": tilde_phi,
    "pr": pr,
    "pi": pi,
    "f": f_ijk,
}


def generator_image(i: int, j: int, n: int, tilde: bool = True):
    """Image of the single generator b_ij."""
    w = BraidWord(n, (BraidLetter(i, j),))
    return tilde_phi(w) if tilde else phi(w)
