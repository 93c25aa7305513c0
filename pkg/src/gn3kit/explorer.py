"""Bounded breadth-first search over the rewrite graph of G^3 words.

States are exact letter sequences.  Successors come from
:func:`gn3kit.presentations.rewrite_steps` in its fixed order (position,
then rule), so results are deterministic.  Failing to connect two words
within the bounds says nothing about whether they are equal in the group.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

from . import kernels
from .presentations import (
    BACKWARD,
    FORWARD,
    RewriteStep,
    gn3_alphabet,
    rewrite_steps,
)
from .words import Gn3Word, TildeWord, WordError

G3Word = Union[Gn3Word, TildeWord]


@dataclass(frozen=True)
class SearchConfig:
    max_length: int = 8
    max_states: int = 1_000_000
    max_depth: int = 64
    allow_insertions: bool = False

    def __post_init__(self):
        if min(self.max_length, self.max_states, self.max_depth) < 1:
            raise ValueError("search bounds must be positive")


@dataclass(frozen=True)
class RewritePath:
    start: G3Word
    steps: tuple[RewriteStep, ...]
    end: G3Word

    def __len__(self) -> int:
        return len(self.steps)

    def words(self) -> list[G3Word]:
        return [self.start] + [s.result for s in self.steps]

    def replay(self) -> bool:
        """Check every step is a legal rewrite of its predecessor."""
        cur = self.start
        for step in self.steps:
            if step not in rewrite_steps(cur, allow_insertions=True):
                return False
            cur = step.result
        return cur == self.end

    def to_json(self) -> dict:
        return {
            "found": True,
            "start": str(self.start),
            "end": str(self.end),
            "length": len(self.steps),
            "steps": [s.to_json() for s in self.steps],
        }


@dataclass(frozen=True)
class NotFound:
    """No path within the configured bounds."""

    explored: int
    depth_reached: int
    truncated: bool

    def to_json(self) -> dict:
        return {
            "found": False,
            "explored": self.explored,
            "depth_reached": self.depth_reached,
            "truncated": self.truncated,
        }


_DIRS = {1: FORWARD, -1: BACKWARD}


def _gn3_connect(w1: Gn3Word, w2: Gn3Word, cfg: SearchConfig):
    alphabet = tuple(x.mask for x in gn3_alphabet(w1.n))
    found, parents, explored, depth, truncated = kernels.gn3_bfs(
        w1.masks, w2.masks, alphabet, cfg.allow_insertions,
        cfg.max_length, cfg.max_states, cfg.max_depth,
    )
    if not found:
        return NotFound(explored, depth, truncated)
    steps = []
    state = w2.masks
    while parents[state] is not None:
        prev, pos, rule, d = parents[state]
        steps.append(RewriteStep(pos, str(rule), _DIRS[d], Gn3Word.from_masks(w1.n, state)))
        state = prev
    return RewritePath(w1, tuple(reversed(steps)), w2)


def _generic_connect(w1: G3Word, w2: G3Word, cfg: SearchConfig):
    parents: dict = {w1: None}
    frontier = deque([(w1, 0)])
    depth = 0
    truncated = False
    while frontier:
        w, d = frontier.popleft()
        depth = max(depth, d)
        if d >= cfg.max_depth:
            truncated = True
            continue
        ins = cfg.allow_insertions and len(w) <= cfg.max_length - 2
        for step in rewrite_steps(w, allow_insertions=ins):
            res = step.result
            if len(res) > cfg.max_length or res in parents:
                continue
            if len(parents) >= cfg.max_states:
                truncated = True
                continue
            parents[res] = (w, step)
            if res == w2:
                steps = []
                cur = res
                while parents[cur] is not None:
                    cur, s = parents[cur]
                    steps.append(s)
                return RewritePath(w1, tuple(reversed(steps)), w2)
            frontier.append((res, d + 1))
    return NotFound(len(parents), depth, truncated)


def bfs_connect(w1: G3Word, w2: G3Word, cfg: Optional[SearchConfig] = None):
    """Shortest rewrite path from ``w1`` to ``w2`` within ``cfg``, or NotFound."""
    cfg = cfg or SearchConfig()
    if type(w1) is not type(w2) or w1.n != w2.n:
        raise WordError("bfs_connect needs two words of the same kind and bound")
    if w1 == w2:
        return RewritePath(w1, (), w2)
    if isinstance(w1, Gn3Word):
        return _gn3_connect(w1, w2, cfg)
    return _generic_connect(w1, w2, cfg)


@dataclass(frozen=True)
class RigidityReport:
    rigid: bool
    steps: tuple[RewriteStep, ...] = field(default=())

    def to_json(self) -> dict:
        return {"rigid": self.rigid, "applicable": [s.to_json() for s in self.steps]}


def is_locally_rigid(w: G3Word) -> RigidityReport:
    """Rigid: no relation applies except inserting a new square."""
    steps = tuple(rewrite_steps(w, allow_insertions=False))
    return RigidityReport(not steps, steps)


@dataclass(frozen=True)
class ChainReport:
    ok: bool
    steps: tuple[Optional[RewriteStep], ...]
    failed_at: Optional[int] = None

    def to_json(self) -> dict:
        return {
            "verified": self.ok,
            "failed_at": self.failed_at,
            "steps": [None if s is None else s.to_json() for s in self.steps],
        }


def verify_chain(words: Sequence[G3Word]) -> ChainReport:
    """Check each adjacent pair is one relation application apart.

    ``failed_at`` is the 1-based number of the first unconnected pair.
    Equal neighbours count as a zero-step link (``None``).
    """
    if len(words) < 2:
        raise ValueError("verify_chain needs at least two words")
    steps: list[Optional[RewriteStep]] = []
    for t, (u, v) in enumerate(zip(words, words[1:]), start=1):
        if u == v:
            steps.append(None)
            continue
        if type(u) is not type(v) or u.n != v.n:
            return ChainReport(False, tuple(steps), t)
        match = next(
            (s for s in rewrite_steps(u, allow_insertions=len(v) > len(u)) if s.result == v),
            None,
        )
        if match is None:
            return ChainReport(False, tuple(steps), t)
        steps.append(match)
    return ChainReport(True, tuple(steps))
