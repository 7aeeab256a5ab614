"""Three-manifolds presented by linear chains of framed unknots.

Surgery on a linear chain of unknots with framings w_1, ..., w_k gives a
manifold determined by the continuants of ``w``: with S_1, S_2 the leading
suffix continuants, the result is S^1 x S^2 when S_1 = 0, S^3 when
|S_1| = 1, and otherwise the lens space L(|S_1|, S_2 mod |S_1|).

Orientation convention: the continuant pair is reported as is, so a consumer
using the opposite sign convention can re-normalise from ``raw``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence, Tuple

from .cf import Admissible, cf_eval, suffix_continuants

S1XS2 = "S1xS2"
S3 = "S3"
LENS = "Lens"


@dataclass(frozen=True)
class ChainResult:
    kind: str
    P: Optional[int] = None
    Q: Optional[int] = None
    raw: Tuple[int, int] = field(default=(0, 0), compare=False)

    def __str__(self) -> str:
        if self.kind == LENS:
            return f"L({self.P},{self.Q})"
        return self.kind


def s1xs2() -> ChainResult:
    return ChainResult(S1XS2)


def s3() -> ChainResult:
    return ChainResult(S3)


def lens(P: int, Q: int) -> ChainResult:
    return ChainResult(LENS, P, Q)


def chain_boundary(framings: Sequence[int]) -> ChainResult:
    s = suffix_continuants(framings)
    s1 = s[0]
    s2 = s[1] if len(s) > 1 else 0
    P = abs(s1)
    if P == 0:
        return ChainResult(S1XS2, raw=(s1, s2))
    if P == 1:
        return ChainResult(S3, raw=(s1, s2))
    return ChainResult(LENS, P, s2 % P, raw=(s1, s2))


def verify_s1s2(n: Sequence[int]) -> bool:
    """Whether the chain with framings ``n`` presents S^1 x S^2."""
    return chain_boundary(n).kind == S1XS2


def plumbing_boundary(a_string: Sequence[int]) -> ChainResult:
    """Boundary L(p, q) of the linear plumbing of spheres with Euler numbers -a_i."""
    if not a_string or min(a_string) < 2:
        raise ValueError("plumbing needs a non-empty string with entries >= 2")
    v = cf_eval(a_string)
    assert isinstance(v, Admissible)
    p, q = v.value.numerator, v.value.denominator
    return ChainResult(LENS, p, q, raw=(p, q))
