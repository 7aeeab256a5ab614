"""Invariant suites runnable at a chosen scale (``lensfill verify <suite>``)."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb
from typing import Callable, Dict, Optional

from . import oracles
from .atlas import (
    coprime_pairs, enumerate_fillings, kollar_condition, make_lens,
    nrs_family, nrs_hypotheses, rank_h2,
)
from .blowup import enumerate_zero_words, enumerate_zero_words_bounded, reduce_to_zero
from .cf import Admissible, cf_eval, hj_expand, is_zero_word
from .topology import verify_s1s2


@dataclass
class SuiteResult:
    name: str
    checked: int
    counterexample: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def __str__(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{self.name}: {status} ({self.checked} checks)"
        if self.counterexample:
            line += f"\n  counterexample: {self.counterexample}"
        return line


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def lemma_zero_seq(max_k: int = 6, max_entry: int = 6, literal: bool = False) -> SuiteResult:
    """Positive words: zero value <=> blowdown-reducible to (0).

    By default a zero value means value 0 with positive denominators. With
    ``literal`` it only asks that no denominator vanish, which is false from
    length 6 on, e.g. (2, 1, 1, 1, 1, 2).
    """
    name = "lemma-zero-seq" + (" (literal)" if literal else "")
    checked = 0
    for k in range(1, max_k + 1):
        for w in product(range(1, max_entry + 1), repeat=k):
            if literal:
                zero = cf_eval(w) == Admissible(Fraction(0))
            else:
                zero = is_zero_word(w)
            wit = reduce_to_zero(w)
            checked += 1
            if zero != (wit is not None):
                return SuiteResult(name, checked, f"{w}: zero={zero}, witness={wit}")
            if wit is not None and wit.replay(w) != (0,):
                return SuiteResult(name, checked, f"{w}: witness {wit.indices} does not replay")
    return SuiteResult(name, checked)


def oracle_equivalence(max_p: int = 60) -> SuiteResult:
    checked = 0
    for p, q in coprime_pairs(max_p):
        b = hj_expand(p, p - q)
        fast = enumerate_zero_words_bounded(b)
        slow = oracles.brute_force_bounded(b)
        tri = oracles.triangulation_zero_words(b)
        checked += 1
        if not fast == slow == tri:
            return SuiteResult("oracle-equivalence", checked,
                               f"(p,q)=({p},{q}) b={b}: pruned={fast} brute={slow} triangulations={tri}")
    return SuiteResult("oracle-equivalence", checked)


def kollar(max_p: int = 400) -> SuiteResult:
    checked = 0
    for p, q in coprime_pairs(max_p):
        lens = make_lens(p, q)
        if not kollar_condition(lens):
            continue
        z = [f.n for f in enumerate_fillings(lens)]
        checked += 1
        if z != [lens.artin_word]:
            return SuiteResult("kollar", checked, f"(p,q)=({p},{q}) a={lens.a_string}: Z={z}")
    return SuiteResult("kollar", checked)


def rank_formula(max_p: int = 400) -> SuiteResult:
    checked = 0
    for p, q in coprime_pairs(max_p):
        lens = make_lens(p, q)
        if not nrs_hypotheses(lens):
            continue
        b, k = lens.b_string, lens.k
        z = {f.n: f for f in enumerate_fillings(lens)}
        ranks = []
        for s in range(k - 3):
            w = (1,) + (2,) * (k - 4 - s) + (3,) + (2,) * s + (1, s + 2)
            checked += 1
            if w not in z:
                return SuiteResult("rank-formula", checked, f"({p},{q}) b={b}: {w} not in Z")
            expected = sum(b) - 2 * k - s
            if z[w].rank_h2 != expected or rank_h2(w, b) != expected:
                return SuiteResult("rank-formula", checked,
                                   f"({p},{q}) b={b}: rank{w}={z[w].rank_h2}, expected {expected}")
            ranks.append(expected)
        if len(set(ranks)) != k - 3 or sorted(nrs_family(lens)) != sorted(
            (1,) + (2,) * (k - 4 - s) + (3,) + (2,) * s + (1, s + 2) for s in range(k - 3)
        ):
            return SuiteResult("rank-formula", checked, f"({p},{q}) b={b}: ranks {ranks}")
        if len(z) < k - 3:
            return SuiteResult("rank-formula", checked, f"({p},{q}): |Z|={len(z)} < k-3")
    return SuiteResult("rank-formula", checked)


def catalan_counts(max_k: int = 10, brute_k: int = 7) -> SuiteResult:
    checked = 0
    for k in range(1, max_k + 1):
        words = enumerate_zero_words(k)
        checked += 1
        if len(words) != catalan(k - 1):
            return SuiteResult("catalan", checked, f"k={k}: {len(words)} != Catalan({k - 1})")
        if k <= brute_k:
            # every entry of a zero word of length k is at most k - 1; box to k
            box = oracles.box_zero_words((k,) * k, lower=1 if k > 1 else 0)
            if box != words:
                return SuiteResult("catalan", checked, f"k={k}: brute force differs")
    return SuiteResult("catalan", checked)


def duality(max_p: int = 500) -> SuiteResult:
    checked = 0
    for p, q in coprime_pairs(max_p):
        a = hj_expand(p, q)
        b = hj_expand(p, p - q)
        h, k = len(a), len(b)
        checked += 1
        if not sum(x - 1 for x in a) == sum(x - 1 for x in b) == h + k - 1:
            return SuiteResult("duality", checked, f"({p},{q}): a={a} b={b}")
        if cf_eval(a) != Admissible(Fraction(p, q)) or cf_eval(b) != Admissible(Fraction(p, p - q)):
            return SuiteResult("duality", checked, f"({p},{q}): round trip failed")
        if min(b) < 2 or k > p - 1 or ((k == p - 1) != (q == 1)):
            return SuiteResult("duality", checked, f"({p},{q}): b={b} violates shape bounds")
    return SuiteResult("duality", checked)


def s1s2(max_p: int = 200) -> SuiteResult:
    checked = 0
    for p, q in coprime_pairs(max_p):
        lens = make_lens(p, q)
        for f in enumerate_fillings(lens):
            checked += 1
            if not verify_s1s2(f.n):
                return SuiteResult("s1s2", checked, f"({p},{q}): n={f.n}")
    return SuiteResult("s1s2", checked)


SUITES: Dict[str, Callable[..., SuiteResult]] = {
    "lemma-zero-seq": lemma_zero_seq,
    "oracle-equivalence": oracle_equivalence,
    "kollar": kollar,
    "rank-formula": rank_formula,
    "catalan": catalan_counts,
    "duality": duality,
    "s1s2": s1s2,
}
