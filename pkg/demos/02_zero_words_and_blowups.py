"""
Zero continued fractions and the blowup calculus
================================================

Starting from (0), a blowup inserts a 1 and raises its neighbours. The words
reached this way are exactly the zero continued fractions, and a blowdown
sequence back to (0) certifies membership.
"""
from lensfill.blowup import (
    blowdown, blowup, enumerate_zero_words, enumerate_zero_words_bounded, reduce_to_zero,
)
from lensfill.cf import cf_eval, is_zero_word
from lensfill.verify import catalan

w = (0,)
for pos in (1, 2, 2):
    w = blowup(w, pos)
    print("blowup at", pos, "->", w, cf_eval(w))

print(blowdown((2, 1, 3, 1), 2))

wit = reduce_to_zero((3, 1, 2, 2))
print("witness:", wit.indices, "rebuilds", wit.rebuild())

# Catalan many words of each length
for k in range(1, 9):
    print(k, len(enumerate_zero_words(k)), catalan(k - 1))

# Positive denominators matter. (2,1,1,1,1,2) evaluates to 0 with no vanishing
# denominator, but a tail goes negative, and it is not a blowup of (0).
w = (2, 1, 1, 1, 1, 2)
print(w, cf_eval(w), is_zero_word(w), reduce_to_zero(w))

# bounded generation prunes words that cannot fit under the bounds
print(enumerate_zero_words_bounded((2, 2, 2, 3)))
print(len(enumerate_zero_words_bounded((2,) * 300)))
