"""Reference computations kept independent of the blowup generator.

* ``nested_eval`` evaluates a word right to left with ``Fraction``.
* ``box_zero_words`` tries every word inside a pointwise box.
* ``triangulation_zero_words`` walks triangulations of a (k+1)-gon with
  vertex-degree pruning and reads off triangle counts at vertices 1..k
  (the Conway-Coxeter quiddity description of zero continued fractions).

Every hit is confirmed with ``naive_is_zero``. A zero word here has value 0
*and* every denominator positive. Only asking that no denominator vanish lets
in words like (2, 1, 1, 1, 1, 2) or (1, 0, 0, 1), which are not blowups of (0).
"""
from __future__ import annotations

from fractions import Fraction
from math import prod
from typing import Iterator, List, Optional, Sequence

from .cf import Word, as_word

BOX_LIMIT = 500_000


def nested_values(w: Sequence[int]) -> Optional[List[Fraction]]:
    """Suffix values ``[x_1, ..., x_k]`` evaluated right to left with
    ``x_k = w_k`` and ``x_j = w_j - 1/x_{j+1}``; None on a zero denominator."""
    if not w:
        return None
    xs = [Fraction(w[-1])]
    for a in reversed(w[:-1]):
        if xs[-1] == 0:
            return None
        xs.append(a - 1 / xs[-1])
    return xs[::-1]


def nested_eval(w: Sequence[int]) -> Optional[Fraction]:
    xs = nested_values(w)
    return None if xs is None else xs[0]


def naive_is_zero(w: Sequence[int], strict: bool = True) -> bool:
    """Value 0; with ``strict`` every denominator x_2..x_k must also be > 0."""
    xs = nested_values(w)
    if xs is None or xs[0] != 0:
        return False
    return not strict or all(x > 0 for x in xs[1:])


def box_zero_words(bounds: Sequence[int], lower: int = 0, strict: bool = True) -> List[Word]:
    """Every word with ``lower <= n_i <= bounds_i`` that evaluates to 0.

    Exhaustive: suffixes are extended right to left, dropping a branch only
    when a denominator vanishes (or, with ``strict``, is negative). Hits are
    re-checked with ``naive_is_zero``.
    """
    bounds = as_word(bounds)
    k = len(bounds)
    if k == 0:
        return []
    out: List[Word] = []
    word = [0] * k

    def extend(j: int, s1: int, s2: int) -> None:
        # s1/s2 is the value of word[j+1:]; s1 is a denominator when j >= 0
        if j < 0:
            if s1 == 0:
                w = tuple(word)
                if naive_is_zero(w, strict):
                    out.append(w)
            return
        if s1 == 0 or (strict and s1 < 0):
            return
        for x in range(lower, bounds[j] + 1):
            word[j] = x
            extend(j - 1, x * s1 - s2, s1)

    for x in range(lower, bounds[-1] + 1):
        word[-1] = x
        extend(k - 2, x, 1)
    return sorted(out)


def _triangulations(bounds: Word) -> Iterator[Word]:
    k = len(bounds)
    cap = [k + 1] + list(bounds)  # vertex 0 never binds
    deg = [0] * (k + 1)

    def bump(vs, d) -> bool:
        ok = True
        for v in vs:
            deg[v] += d
            if deg[v] > cap[v]:
                ok = False
        return ok

    def fill(i: int, j: int) -> Iterator[None]:
        # sub-polygon i..j on chord (i, j); the triangle on (i, j) is
        # already counted at i and j by the caller
        for m in range(i + 1, j):
            touched = [m]
            if m - i >= 2:
                touched += [i, m]
            if j - m >= 2:
                touched += [m, j]
            if bump(touched, 1):
                for _ in (fill(i, m) if m - i >= 2 else iter((None,))):
                    for _ in (fill(m, j) if j - m >= 2 else iter((None,))):
                        yield None
            bump(touched, -1)

    if k == 1:
        # degenerate 2-gon: the single word (0)
        yield (0,)
        return
    if bump([0, k], 1):
        for _ in fill(0, k):
            yield tuple(deg[1:])


def triangulation_zero_words(bounds: Sequence[int]) -> List[Word]:
    """Zero words under ``bounds`` via bounded polygon triangulations."""
    bounds = as_word(bounds)
    if not bounds:
        return []
    found = set()
    for w in _triangulations(bounds):
        if all(0 <= x <= b for x, b in zip(w, bounds)) and naive_is_zero(w):
            found.add(w)
    return sorted(found)


def brute_force_bounded(bounds: Sequence[int]) -> List[Word]:
    """Exhaustive box search when the box is small, else triangulations.

    Denominators are required to be positive, which for length >= 2 already
    forces every entry to be >= 1, so the box starts at 1 there.
    """
    bounds = as_word(bounds)
    lower = 0 if len(bounds) == 1 else 1
    if prod(b - lower + 1 for b in bounds) <= BOX_LIMIT:
        return box_zero_words(bounds, lower=lower)
    return triangulation_zero_words(bounds)
