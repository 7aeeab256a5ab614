"""Blowup / blowdown calculus on integer words.

A blowdown at an entry equal to 1 removes it and lowers each neighbour by one;
a blowup inserts a 1 and raises each neighbour. Zero continued fractions are
exactly the words reachable from ``(0)`` by blowups, which gives both a
certificate (a blowdown sequence back to ``(0)``) and a generator.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from .cf import Word, as_word

ZERO: Word = (0,)


@dataclass(frozen=True)
class BlowdownStep:
    index: int  # 1-based


@dataclass(frozen=True)
class Witness:
    """Ordered blowdown positions (1-based) taking a word to ``(0)``."""

    steps: Tuple[BlowdownStep, ...]

    @property
    def indices(self) -> List[int]:
        return [st.index for st in self.steps]

    def replay(self, w: Sequence[int]) -> Word:
        w = as_word(w)
        for st in self.steps:
            w = blowdown(w, st.index)
        return w

    def rebuild(self) -> Word:
        """Blow up ``(0)`` along the reversed steps."""
        w = ZERO
        for st in reversed(self.steps):
            w = blowup(w, st.index)
        return w

    @classmethod
    def from_indices(cls, indices: Iterable[int]) -> "Witness":
        return cls(tuple(BlowdownStep(int(i)) for i in indices))


def blowdown(w: Sequence[int], s: int) -> Word:
    """Remove the 1 at position ``s`` (1-based) and lower its neighbours."""
    w = list(w)
    k = len(w)
    if k < 2:
        raise ValueError("blowdown needs a word of length >= 2")
    if not 1 <= s <= k:
        raise ValueError(f"position {s} out of range 1..{k}")
    if w[s - 1] != 1:
        raise ValueError(f"entry at position {s} is {w[s - 1]}, not 1")
    i = s - 1
    if i > 0:
        w[i - 1] -= 1
    if i < k - 1:
        w[i + 1] -= 1
    del w[i]
    return tuple(w)


def blowup(w: Sequence[int], pos: int) -> Word:
    """Insert a 1 at position ``pos`` (1..len+1) and raise its neighbours."""
    w = list(w)
    k = len(w)
    if not 1 <= pos <= k + 1:
        raise ValueError(f"position {pos} out of range 1..{k + 1}")
    i = pos - 1
    if i > 0:
        w[i - 1] += 1
    if i < k:
        w[i] += 1
    w.insert(i, 1)
    return tuple(w)


def reduce_to_zero(w: Sequence[int]) -> Optional[Witness]:
    """Search for a blowdown sequence from ``w`` to ``(0)``.

    Backtracks over every entry equal to 1. Intermediate words of length >= 2
    must stay positive, since every word on a blowup path from ``(0)`` is.
    Returns None when no sequence exists.
    """
    w = as_word(w)
    if w == ZERO:
        return Witness(())
    if len(w) < 2 or min(w) < 1:
        return None

    dead: Set[Word] = set()
    path: List[int] = []

    def search(u: Word) -> bool:
        if u == ZERO:
            return True
        if len(u) < 2 or u in dead:
            return False
        if len(u) > 2 and min(u) < 1:
            dead.add(u)
            return False
        for i, x in enumerate(u):
            if x != 1:
                continue
            path.append(i + 1)
            if search(blowdown(u, i + 1)):
                return True
            path.pop()
        dead.add(u)
        return False

    if search(w):
        return Witness.from_indices(path)
    return None


def _children(w: Word) -> Iterable[Word]:
    for pos in range(1, len(w) + 2):
        yield blowup(w, pos)


def enumerate_zero_words(k: int) -> List[Word]:
    """All length-``k`` zero continued fractions, sorted.

    Generated by ``k - 1`` rounds of blowups from ``(0)``; there are
    Catalan(k - 1) of them.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    level: Set[Word] = {ZERO}
    for _ in range(k - 1):
        level = {c for w in level for c in _children(w)}
    return sorted(level)


class _Embedder:
    """Subsequence-domination test against a fixed bounds word.

    ``w`` embeds if some increasing choice of bound positions j_1 < ... < j_m
    has ``w_i <= bounds[j_i]``. Greedy leftmost matching decides this.
    """

    def __init__(self, bounds: Word):
        self.bounds = bounds
        self.k = len(bounds)
        self._next: Dict[int, List[int]] = {}

    def nxt(self, v: int) -> List[int]:
        # nxt(v)[i] = least j >= i with bounds[j] >= v, else k
        table = self._next.get(v)
        if table is None:
            k = self.k
            table = [k] * (k + 1)
            for j in range(k - 1, -1, -1):
                table[j] = j if self.bounds[j] >= v else table[j + 1]
            self._next[v] = table
        return table

    def left(self, w: Word) -> List[int]:
        """Leftmost greedy match positions of each prefix (k on failure)."""
        out = []
        pos = -1
        k = self.k
        for x in w:
            pos = self.nxt(x)[pos + 1] if pos + 1 <= k else k
            if pos >= k:
                pos = k
            out.append(pos)
        return out

    def right(self, w: Word) -> List[int]:
        """Rightmost greedy match positions of each suffix (-1 on failure)."""
        b = self.bounds
        out = [0] * len(w)
        pos = self.k
        for i in range(len(w) - 1, -1, -1):
            pos -= 1
            while pos >= 0 and b[pos] < w[i]:
                pos -= 1
            out[i] = pos
        return out

    def embeds(self, w: Word) -> bool:
        return not w or self.left(w)[-1] < self.k


def enumerate_zero_words_bounded(bounds: Sequence[int]) -> List[Word]:
    """Zero words ``n`` of length ``len(bounds)`` with ``0 <= n_i <= bounds_i``.

    Blowup-tree search from ``(0)``. A blowup only raises entries and inserts
    new ones, so a partial word with no order-preserving embedding under the
    bounds has no admissible descendant and is pruned.
    """
    bounds = as_word(bounds)
    k = len(bounds)
    if k == 0:
        return []
    emb = _Embedder(bounds)
    if not emb.embeds(ZERO):
        return []
    level: Set[Word] = {ZERO}
    for _ in range(k - 1):
        nxt_level: Set[Word] = set()
        for w in level:
            j = len(w)
            left = emb.left(w)
            right = emb.right(w)
            for i in range(j + 1):
                # blowup inserting before w[i]: w[i-1]+1, 1, w[i]+1
                start = left[i - 2] if i >= 2 else -1
                mid = []
                if i >= 1:
                    mid.append(w[i - 1] + 1)
                mid.append(1)
                if i < j:
                    mid.append(w[i] + 1)
                pos = start
                for v in mid:
                    if pos + 1 > k:
                        pos = k
                        break
                    pos = emb.nxt(v)[pos + 1]
                    if pos >= k:
                        break
                if pos >= k:
                    continue
                limit = right[i + 1] if i + 1 < j else k
                if pos >= limit:
                    continue
                nxt_level.add(w[: max(i - 1, 0)] + tuple(mid) + w[i + 1:])
        level = nxt_level
        if not level:
            return []
    return sorted(level)
