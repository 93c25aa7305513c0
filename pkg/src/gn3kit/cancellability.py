"""Sufficient conditions for a pair b_ij ... b_ij^-1 to be non-cancellable.

For beta = A b_ij B b_ij^-1 C two certificates are offered:

* parity: B has no b_ij^{+-1} and, for some k, an odd total number of
  b_ik^{+-1} and b_jk^{+-1} letters;
* invariant obstruction: for some k the reduced w~_ijk of tilde_phi(f_ijk(B))
  is nonempty (selector ascending, bound n + 1).

Neither certificate is necessary; "inconclusive" means nothing was proven.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Optional

from .homomorphisms import f_ijk, tilde_phi
from .invariants import TripleSelector, reduce, tilde_w_invariant
from .words import BraidWord, FreeProductWord

Kind = Literal["parity", "invariant-obstruction", "inconclusive"]


@dataclass(frozen=True)
class CandidatePair:
    left: int
    right: int
    i: int
    j: int
    between: BraidWord

    def to_json(self) -> dict:
        return {"left": self.left, "right": self.right, "i": self.i, "j": self.j}


@dataclass(frozen=True)
class Certificate:
    kind: Kind
    k: Optional[int] = None
    selector: Optional[TripleSelector] = None
    reduced: Optional[FreeProductWord] = None

    @property
    def conclusive(self) -> bool:
        return self.kind != "inconclusive"

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.kind == "parity":
            out["k"] = self.k
        elif self.kind == "invariant-obstruction":
            out["selector"] = list(self.selector.triple)
            out["reduced"] = [str(x) for x in self.reduced]
        return out


INCONCLUSIVE = Certificate("inconclusive")


def find_pairs(w: BraidWord) -> list[CandidatePair]:
    """Every (left, right) with the same generator and opposite signs."""
    out = []
    for p, x in enumerate(w):
        for q in range(p + 1, len(w)):
            y = w[q]
            if (y.i, y.j) == (x.i, x.j) and y.sign == -x.sign:
                out.append(CandidatePair(p, q, x.i, x.j, w[p + 1:q]))
    return out


def _others(pair: CandidatePair, n: int) -> list[int]:
    return [k for k in range(1, n + 1) if k not in (pair.i, pair.j)]


def parity_count(between: BraidWord, i: int, j: int, k: int) -> int:
    """Number of b_ik^{+-1} and b_jk^{+-1} letters."""
    return sum(1 for x in between if x.support in ({i, k}, {j, k}))


def theorem42_check(pair: CandidatePair, n: int) -> Certificate:
    """Parity certificate with the smallest witnessing k, else inconclusive."""
    if any((x.i, x.j) == (pair.i, pair.j) for x in pair.between):
        return INCONCLUSIVE
    for k in _others(pair, n):
        if parity_count(pair.between, pair.i, pair.j, k) % 2:
            return Certificate("parity", k=k)
    return INCONCLUSIVE


def obstruction_for(between: BraidWord, i: int, j: int, k: int, n: int) -> FreeProductWord:
    """Reduced w~_ijk(tilde_phi(f_ijk(B))) for the ascending selector."""
    sel = TripleSelector(*sorted((i, j, k)), n + 1)
    image = tilde_phi(f_ijk(between, (i, j, k)))
    return reduce(tilde_w_invariant(image, sel))


def invariant_obstruction(pair: CandidatePair, n: int) -> Certificate:
    for k in _others(pair, n):
        r = obstruction_for(pair.between, pair.i, pair.j, k, n)
        if r.letters:
            sel = TripleSelector(*sorted((pair.i, pair.j, k)), n + 1)
            return Certificate("invariant-obstruction", k=k, selector=sel, reduced=r)
    return INCONCLUSIVE


def validate(cert: Certificate, pair: CandidatePair, n: int) -> bool:
    """Recompute a certificate from its witness."""
    if cert.kind == "parity":
        return (
            not any((x.i, x.j) == (pair.i, pair.j) for x in pair.between)
            and parity_count(pair.between, pair.i, pair.j, cert.k) % 2 == 1
        )
    if cert.kind == "invariant-obstruction":
        r = obstruction_for(pair.between, pair.i, pair.j, cert.k, n)
        return bool(r.letters) and r == cert.reduced
    return True


@dataclass(frozen=True)
class PairReport:
    pair: CandidatePair
    certificates: tuple[Certificate, ...]

    @property
    def verdict(self) -> str:
        if any(c.conclusive for c in self.certificates):
            return "non-cancellable"
        return "inconclusive"

    def to_json(self) -> dict:
        return {
            "pair": self.pair.to_json(),
            "certificates": [c.to_json() for c in self.certificates],
            "verdict": self.verdict,
        }


def analyse(w: BraidWord) -> list[PairReport]:
    return [
        PairReport(p, (theorem42_check(p, w.n), invariant_obstruction(p, w.n)))
        for p in find_pairs(w)
    ]
