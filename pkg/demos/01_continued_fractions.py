"""
Negative continued fractions and continuants
============================================

Every rational p/q > 1 has exactly one expansion
p/q = b_1 - 1/(b_2 - 1/(... - 1/b_k)) with all b_i >= 2.
"""
from fractions import Fraction

from lensfill.cf import cf_eval, hj_expand, reverse, suffix_continuants

# expand, then evaluate back
for p, q in [(4, 3), (9, 7), (29, 5), (144, 55)]:
    b = hj_expand(p, q)
    print(f"{p}/{q} = {list(b)}  ->  {cf_eval(b)}")

# the suffix continuants carry the whole computation: S_1/S_2 is the value
print(suffix_continuants((2, 2, 2, 3)))

# words with a vanishing denominator are reported, not raised
print(cf_eval((0, 0, 0)))
print(cf_eval((1, 1, 1)))

# the numerator is unchanged by reversal
w = (5, 1, 3, 2)
print(suffix_continuants(w)[0], suffix_continuants(reverse(w))[0])

# p/q and p/(p-q) are dual: sum(a_i - 1) = sum(b_j - 1) = h + k - 1
p, q = 37, 10
a, b = hj_expand(p, q), hj_expand(p, p - q)
print(a, b, sum(x - 1 for x in a), sum(x - 1 for x in b), len(a) + len(b) - 1)
assert cf_eval(a).value == Fraction(p, q)
