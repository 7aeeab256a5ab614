"""Negative (Hirzebruch-Jung) continued fractions over exact integers.

A word ``w = (w_1, ..., w_k)`` denotes the nested fraction

    w_1 - 1/(w_2 - 1/(... - 1/w_k))

Everything here is computed through suffix continuants, so no floating point
and no partial evaluation is ever involved.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence, Tuple, Union

Word = Tuple[int, ...]
Rational = Fraction


@dataclass(frozen=True)
class Admissible:
    value: Fraction


@dataclass(frozen=True)
class NotAdmissible:
    """Evaluation hits a zero denominator.

    ``index`` is the largest j >= 2 with S_j == 0, i.e. the first vanishing
    denominator met when the fraction is evaluated from the right.
    """
    index: int


CFValue = Union[Admissible, NotAdmissible]


def as_word(w: Sequence[int]) -> Word:
    return tuple(int(x) for x in w)


def suffix_continuants(w: Sequence[int]) -> Tuple[int, ...]:
    """Return ``(S_1, ..., S_{k+1})`` with S_{k+1} = 1, S_{k+2} = 0 and
    S_j = w_j * S_{j+1} - S_{j+2}.

    >>> suffix_continuants((2, 2, 2))
    (4, 3, 2, 1)
    """
    k = len(w)
    s = [0] * (k + 2)
    s[k] = 1
    for j in range(k - 1, -1, -1):
        s[j] = w[j] * s[j + 1] - s[j + 2]
    return tuple(s[: k + 1])


def cf_eval(w: Sequence[int]) -> CFValue:
    """Value of the negative continued fraction ``[w_1, ..., w_k]``.

    The empty word evaluates to ``S_1/S_2 = 1/0`` and is reported as
    ``NotAdmissible(1)``; it never arises from the expansion routines.
    """
    s = suffix_continuants(w)
    k = len(w)
    if k == 0:
        return NotAdmissible(1)
    for j in range(k, 1, -1):
        if s[j - 1] == 0:
            return NotAdmissible(j)
    return Admissible(Fraction(s[0], s[1]))


def has_positive_denominators(w: Sequence[int]) -> bool:
    """All of S_2, ..., S_k are > 0, i.e. every tail [w_j, ..., w_k] with
    j >= 2 is positive."""
    s = suffix_continuants(w)
    return all(x > 0 for x in s[1 : len(w)])


def is_zero_word(w: Sequence[int]) -> bool:
    """Value 0 with every denominator positive.

    This is the class generated from (0) by blowups. Merely non-vanishing
    denominators are not enough: (2, 1, 1, 1, 1, 2) evaluates to 0 through
    a negative tail and is not a blowup of (0).
    """
    if len(w) == 0:
        return False
    return suffix_continuants(w)[0] == 0 and has_positive_denominators(w)


def hj_expand(num: int, den: int) -> Word:
    """Greedy ceiling expansion of ``num/den`` with every entry >= 2.

    >>> hj_expand(9, 7)
    (2, 2, 2, 3)
    """
    if not (isinstance(num, int) and isinstance(den, int)):
        raise TypeError("hj_expand needs integers")
    if den < 1 or num <= den:
        raise ValueError(f"need num > den >= 1, got {num}/{den}")
    if gcd(num, den) != 1:
        raise ValueError(f"{num} and {den} are not coprime")
    out = []
    while den:
        b = -(-num // den)
        out.append(b)
        num, den = den, b * den - num
    return tuple(out)


def reverse(w: Sequence[int]) -> Word:
    return tuple(reversed(tuple(w)))


def leading_continuant(w: Sequence[int]) -> int:
    return suffix_continuants(w)[0]


def format_word(w: Sequence[int]) -> str:
    return "(" + ",".join(str(x) for x in w) + ")"


def parse_word(text: str) -> Word:
    text = text.strip().strip("()[]")
    if not text:
        return ()
    return tuple(int(tok) for tok in text.split(","))
