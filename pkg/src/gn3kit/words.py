"""Letters and words for PB_n, G_n^3, the extended group G~_n^3 and F_n^3.

Every value here is immutable.  Words carry their index bound ``n`` (for a
:class:`Gn3Word` obtained through ``pi`` this is the strand count plus one)
and are validated on construction.

Text grammar, whitespace separated::

    b[i,j]  b[i,j]^-1      pure braid generator, i < j
    a[i,j,k]               involutive letter, any order on input
    s[i,j]  s[i,j]^-1      ordered sigma letter, i != j
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import ClassVar, Iterator, Union


class WordError(ValueError):
    """Invalid letter or word."""


class ParseError(WordError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at offset {position})")
        self.position = position


def _check_sign(sign: int) -> None:
    if sign not in (1, -1):
        raise WordError(f"sign must be +1 or -1, got {sign!r}")


@dataclass(frozen=True, order=True)
class BraidLetter:
    """The generator b_ij (sign +1) or its inverse (sign -1)."""

    i: int
    j: int
    sign: int = 1

    def __post_init__(self):
        if not 1 <= self.i < self.j:
            raise WordError(f"braid letter needs 1 <= i < j, got ({self.i},{self.j})")
        _check_sign(self.sign)

    @property
    def support(self) -> frozenset[int]:
        return frozenset((self.i, self.j))

    def inverse(self) -> BraidLetter:
        return BraidLetter(self.i, self.j, -self.sign)

    def __str__(self) -> str:
        return f"b[{self.i},{self.j}]" + ("^-1" if self.sign < 0 else "")


@dataclass(frozen=True, order=True)
class TriLetter:
    """The involution a_{ijk}; the index triple is stored sorted."""

    idx: tuple[int, int, int]

    def __init__(self, *indices):
        if len(indices) == 1 and not isinstance(indices[0], int):
            indices = tuple(indices[0])
        if len(indices) != 3:
            raise WordError(f"a-letter needs exactly 3 indices, got {indices!r}")
        if len(set(indices)) != 3:
            raise WordError(f"repeated index in a-letter {indices!r}")
        if min(indices) < 1:
            raise WordError(f"indices are 1-based, got {indices!r}")
        object.__setattr__(self, "idx", tuple(sorted(indices)))

    @property
    def support(self) -> frozenset[int]:
        return frozenset(self.idx)

    @property
    def mask(self) -> int:
        return (1 << self.idx[0]) | (1 << self.idx[1]) | (1 << self.idx[2])

    @classmethod
    def from_mask(cls, mask: int) -> TriLetter:
        return cls(*(b for b in range(mask.bit_length()) if mask >> b & 1))

    def inverse(self) -> TriLetter:
        return self

    def __str__(self) -> str:
        return "a[{},{},{}]".format(*self.idx)


@dataclass(frozen=True, order=True)
class SigmaLetter:
    """sigma_ij (ordered pair) or its inverse."""

    i: int
    j: int
    sign: int = 1

    def __post_init__(self):
        if self.i == self.j or min(self.i, self.j) < 1:
            raise WordError(f"sigma letter needs distinct 1-based indices, got ({self.i},{self.j})")
        _check_sign(self.sign)

    @property
    def support(self) -> frozenset[int]:
        return frozenset((self.i, self.j))

    def inverse(self) -> SigmaLetter:
        return SigmaLetter(self.i, self.j, -self.sign)

    def __str__(self) -> str:
        return f"s[{self.i},{self.j}]" + ("^-1" if self.sign < 0 else "")


Letter = Union[BraidLetter, TriLetter, SigmaLetter]


def tri(i: int, j: int, k: int) -> TriLetter:
    return TriLetter(i, j, k)


@dataclass(frozen=True)
class _Word:
    n: int
    letters: tuple = ()

    kind: ClassVar[str] = ""
    allowed: ClassVar[tuple[type, ...]] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        if self.n < 1:
            raise WordError(f"bound must be positive, got {self.n}")
        for x in self.letters:
            if not isinstance(x, self.allowed):
                raise WordError(f"{type(x).__name__} not allowed in a {self.kind} word")
            if max(x.support) > self.n:
                raise WordError(f"letter {x} exceeds bound n={self.n}")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator:
        return iter(self.letters)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return type(self)(self.n, self.letters[item])
        return self.letters[item]

    def __add__(self, other):
        return concat(self, other)

    def __str__(self) -> str:
        return " ".join(map(str, self.letters))

    def inverse(self):
        return type(self)(self.n, tuple(x.inverse() for x in reversed(self.letters)))

    def replace(self, letters) -> _Word:
        return type(self)(self.n, tuple(letters))


@dataclass(frozen=True)
class BraidWord(_Word):
    kind: ClassVar[str] = "braid"
    allowed: ClassVar[tuple[type, ...]] = (BraidLetter,)


@dataclass(frozen=True)
class Gn3Word(_Word):
    kind: ClassVar[str] = "gn3"
    allowed: ClassVar[tuple[type, ...]] = (TriLetter,)

    @property
    def masks(self) -> tuple[int, ...]:
        return tuple(x.mask for x in self.letters)

    @classmethod
    def from_masks(cls, n: int, masks) -> Gn3Word:
        return cls(n, tuple(TriLetter.from_mask(x) for x in masks))


@dataclass(frozen=True)
class TildeWord(_Word):
    kind: ClassVar[str] = "tilde"
    allowed: ClassVar[tuple[type, ...]] = (TriLetter, SigmaLetter)


Word = Union[BraidWord, Gn3Word, TildeWord]

_KINDS = {"braid": BraidWord, "gn3": Gn3Word, "tilde": TildeWord}

_TOKEN = re.compile(r"\s*(?:([abs])\[([^\]]*)\](\^-1)?)")


def parse(text: str, kind: str, n: int) -> Word:
    """Parse ``text`` into a word of the given kind over bound ``n``."""
    try:
        cls = _KINDS[kind]
    except KeyError:
        raise WordError(f"unknown word kind {kind!r}") from None
    letters = []
    pos = 0
    end = len(text.rstrip())
    while pos < end:
        m = _TOKEN.match(text, pos)
        if m is None:
            start = len(text) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected input {text[start:start + 10]!r}", start)
        head, body, inv = m.groups()
        at = m.start(1)
        try:
            idx = tuple(int(t) for t in body.split(","))
        except ValueError:
            raise ParseError(f"bad index list {body!r}", at) from None
        sign = -1 if inv else 1
        try:
            if head == "a":
                if inv:
                    raise ParseError("a-letters take no exponent", at)
                letter = TriLetter(*idx)
            elif len(idx) != 2:
                raise ParseError(f"{head}-letter needs two indices", at)
            elif head == "b":
                letter = BraidLetter(idx[0], idx[1], sign)
            else:
                letter = SigmaLetter(idx[0], idx[1], sign)
        except ParseError:
            raise
        except WordError as exc:
            raise ParseError(str(exc), at) from None
        if not isinstance(letter, cls.allowed):
            raise ParseError(f"{head}-letter not allowed in a {kind} word", at)
        if max(letter.support) > n:
            raise ParseError(f"index out of range for n={n}", at)
        letters.append(letter)
        pos = m.end()
    return cls(n, tuple(letters))


def format_word(w: Word) -> str:
    return str(w)


def inverse(w: Word) -> Word:
    return w.inverse()


def concat(w1: Word, w2: Word) -> Word:
    """Juxtapose two words of the same kind and bound; nothing is reduced."""
    if type(w1) is not type(w2):
        raise WordError(f"cannot concatenate {w1.kind} and {w2.kind} words")
    if w1.n != w2.n:
        raise WordError(f"bound mismatch: {w1.n} vs {w2.n}")
    return type(w1)(w1.n, w1.letters + w2.letters)


def commutator(x: Word, y: Word) -> Word:
    """[x, y] = x^-1 y^-1 x y."""
    return x.inverse() + y.inverse() + x + y


# --- free products of Z2 -------------------------------------------------


@dataclass(frozen=True)
class IndexLetter:
    """A generator of F^3: a map from the complement of ``triple`` to Z2 x Z2.

    ``triple`` is the ordered selector (i, j, k); ``domain`` lists the
    complement in ascending order and ``values[t]`` is the pair at
    ``domain[t]``.  The all-zero map is a generator like any other.
    """

    triple: tuple[int, int, int]
    domain: tuple[int, ...]
    values: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if len(self.domain) != len(self.values):
            raise WordError("index letter domain and values differ in length")

    def __call__(self, l: int) -> tuple[int, int]:
        return self.values[self.domain.index(l)]

    def __str__(self) -> str:
        pairs = [f"({x},{y})" for x, y in self.values]
        if len(pairs) == 1:
            return pairs[0]
        return "(" + ",".join(pairs) + ")"


@dataclass(frozen=True)
class FreeProductWord:
    letters: tuple[IndexLetter, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[IndexLetter]:
        return iter(self.letters)

    def __getitem__(self, item):
        return self.letters[item]

    def __str__(self) -> str:
        return "".join(map(str, self.letters)) if self.letters else "1"

    @property
    def is_reduced(self) -> bool:
        return all(x != y for x, y in zip(self.letters, self.letters[1:]))
