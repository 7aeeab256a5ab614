"""Combinatorial classification of symplectic fillings of lens spaces.

For coprime p > q >= 1 the minimal fillings of L(p, q) with its standard
quotient contact structure are indexed by the zero continued fractions that
sit pointwise under the Hirzebruch-Jung expansion of p/(p - q).

>>> from lensfill import atlas
>>> [f.n for f in atlas(4, 1).fillings]
[(1, 2, 1), (2, 1, 2)]
"""
__version__ = "0.1.0"

from .cf import (
    Admissible,
    NotAdmissible,
    cf_eval,
    has_positive_denominators,
    hj_expand,
    is_zero_word,
    reverse,
    suffix_continuants,
)
from .blowup import (
    BlowdownStep,
    Witness,
    blowdown,
    blowup,
    enumerate_zero_words,
    enumerate_zero_words_bounded,
    reduce_to_zero,
)
from .atlas import (
    Atlas,
    FillingDescriptor,
    LensSpace,
    atlas,
    build_atlas,
    enumerate_fillings,
    kollar_condition,
    make_lens,
    nrs_family,
    rank_h2,
    sweep,
)
from .topology import ChainResult, chain_boundary, plumbing_boundary, verify_s1s2

__all__ = [
    "Admissible", "NotAdmissible", "cf_eval", "has_positive_denominators", "hj_expand",
    "is_zero_word", "reverse", "suffix_continuants",
    "BlowdownStep", "Witness", "blowdown", "blowup", "enumerate_zero_words",
    "enumerate_zero_words_bounded", "reduce_to_zero",
    "Atlas", "FillingDescriptor", "LensSpace", "atlas", "build_atlas", "enumerate_fillings",
    "kollar_condition", "make_lens", "nrs_family", "rank_h2", "sweep",
    "ChainResult", "chain_boundary", "plumbing_boundary", "verify_s1s2",
]
