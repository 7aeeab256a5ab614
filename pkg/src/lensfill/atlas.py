"""Filling classification for a lens space L(p, q).

The index set Z(p, q) is the set of zero continued fractions bounded pointwise
by the b-string (the expansion of p/(p - q)). Each member n labels one filling
W(n) with no exceptional spheres; every other filling is a blowup of one of
these. The rank of H_2(W(n)) is sum(b_i - n_i) - 1.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import gcd
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from .blowup import Witness, enumerate_zero_words_bounded, reduce_to_zero
from .cf import Word, as_word, hj_expand, is_zero_word


@dataclass(frozen=True)
class LensSpace:
    p: int
    q: int
    b_string: Word
    a_string: Word

    @property
    def k(self) -> int:
        return len(self.b_string)

    @property
    def h(self) -> int:
        return len(self.a_string)

    @property
    def artin_word(self) -> Word:
        return artin_word(self.k)


def make_lens(p: int, q: int) -> LensSpace:
    """Validate ``(p, q)`` and attach both expansions.

    >>> make_lens(9, 2).b_string
    (2, 2, 2, 3)
    """
    if isinstance(p, bool) or isinstance(q, bool) or not isinstance(p, int) or not isinstance(q, int):
        raise TypeError("p and q must be integers")
    if not p > q >= 1:
        raise ValueError(f"need p > q >= 1, got p={p}, q={q}")
    if gcd(p, q) != 1:
        raise ValueError(f"p={p} and q={q} are not coprime")
    b = hj_expand(p, p - q)
    a = hj_expand(p, q)
    return LensSpace(p, q, b, a)


def artin_word(k: int) -> Word:
    if k < 1:
        raise ValueError("k must be >= 1")
    if k == 1:
        return (0,)
    return (1,) + (2,) * (k - 2) + (1,)


def rank_h2(n: Sequence[int], b: Sequence[int]) -> int:
    """Second Betti number of W(n) for a member n of Z with bounds b."""
    n, b = as_word(n), as_word(b)
    if len(n) != len(b) or any(not 0 <= x <= y for x, y in zip(n, b)):
        raise ValueError(f"{n} is not bounded by {b}")
    if not is_zero_word(n):
        raise ValueError(f"{n} is not a zero continued fraction")
    return sum(b) - sum(n) - 1


@dataclass(frozen=True)
class FillingDescriptor:
    n: Word
    rank_h2: int
    is_artin: bool
    is_rational_homology_ball: bool
    witness: Witness

    @property
    def label(self) -> str:
        tags = []
        if self.is_artin:
            tags.append("Artin / canonical resolution")
        if self.is_rational_homology_ball:
            tags.append("rational homology ball")
        return ", ".join(tags)


def describe(n: Sequence[int], lens: LensSpace) -> FillingDescriptor:
    n = as_word(n)
    r = rank_h2(n, lens.b_string)
    w = reduce_to_zero(n)
    if w is None:
        raise ValueError(f"{n} has no blowdown witness")
    return FillingDescriptor(n, r, n == lens.artin_word, r == 0, w)


def enumerate_fillings(lens: LensSpace) -> List[FillingDescriptor]:
    return [describe(n, lens) for n in enumerate_zero_words_bounded(lens.b_string)]


def kollar_condition(lens: LensSpace) -> bool:
    """True when every entry of the expansion of p/q is at least 5."""
    return all(a >= 5 for a in lens.a_string)


def nrs_word(r: int, s: int) -> Word:
    return (1,) + (2,) * r + (3,) + (2,) * s + (1, s + 2)


def nrs_hypotheses(lens: LensSpace) -> bool:
    b, k = lens.b_string, lens.k
    return k >= 4 and all(x >= 3 for x in b[1 : k - 2]) and b[-1] >= k - 2


def nrs_family(lens: LensSpace) -> List[Word]:
    """The k - 3 words n(r, s), r + s = k - 4, when the b-string allows them."""
    if not nrs_hypotheses(lens):
        return []
    b = lens.b_string
    out = []
    for s in range(lens.k - 3):
        w = nrs_word(lens.k - 4 - s, s)
        if any(x > y for x, y in zip(w, b)) or not is_zero_word(w):
            raise AssertionError(f"n(r,s)={w} falls outside Z for b={b}")
        out.append(w)
    return sorted(out)


@dataclass(frozen=True)
class Atlas:
    lens: LensSpace
    fillings: Tuple[FillingDescriptor, ...]
    unique_up_to_blowup: bool
    kollar_certified: bool
    nrs_members: Tuple[Word, ...]
    filling_count_lower_bound: int

    @property
    def z_set(self) -> List[Word]:
        return [f.n for f in self.fillings]

    def filling(self, n: Sequence[int]) -> Optional[FillingDescriptor]:
        n = as_word(n)
        for f in self.fillings:
            if f.n == n:
                return f
        return None

    @property
    def has_rational_ball(self) -> bool:
        return any(f.is_rational_homology_ball for f in self.fillings)


def build_atlas(lens: LensSpace) -> Atlas:
    fillings = tuple(enumerate_fillings(lens))
    nrs = tuple(nrs_family(lens))
    ranks = {rank_h2(n, lens.b_string) for n in nrs + (lens.artin_word,)}
    return Atlas(
        lens=lens,
        fillings=fillings,
        unique_up_to_blowup=len(fillings) == 1,
        kollar_certified=kollar_condition(lens),
        nrs_members=nrs,
        filling_count_lower_bound=max(1, len(ranks)),
    )


def atlas(p: int, q: int) -> Atlas:
    return build_atlas(make_lens(p, q))


FILTERS: Dict[str, Callable[[Atlas], bool]] = {
    "all": lambda a: True,
    "unique": lambda a: a.unique_up_to_blowup,
    "multiple": lambda a: len(a.fillings) > 1,
    "kollar": lambda a: a.kollar_certified,
    "qhb-present": lambda a: a.has_rational_ball,
}


def coprime_pairs(p_max: int, p_min: int = 2) -> Iterator[Tuple[int, int]]:
    for p in range(p_min, p_max + 1):
        for q in range(1, p):
            if gcd(p, q) == 1:
                yield p, q


def _atlas_cell(pq: Tuple[int, int]) -> Atlas:
    return atlas(*pq)


def sweep(
    p_max: int,
    predicate: Callable[[Atlas], bool] | str = "all",
    jobs: int = 1,
    p_min: int = 2,
) -> Iterator[Atlas]:
    """Atlases for every coprime (p, q) with p_min <= p <= p_max, ascending.

    ``jobs > 1`` farms cells out to worker processes; output order does not
    depend on scheduling.
    """
    if p_max < 2:
        raise ValueError("p_max must be >= 2")
    pred = FILTERS[predicate] if isinstance(predicate, str) else predicate
    pairs = coprime_pairs(p_max, p_min)
    if jobs <= 1:
        for pq in pairs:
            a = _atlas_cell(pq)
            if pred(a):
                yield a
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for a in pool.map(_atlas_cell, pairs, chunksize=64):
            if pred(a):
                yield a
