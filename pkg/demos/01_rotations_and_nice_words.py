"""
Rotations, borders and nice words
=================================

A walk through the string primitives everything else builds on.
"""

from superstring import (
    is_primitive,
    is_w_string,
    longest_border,
    maximal_rotation,
    min_period,
    minimal_rotation,
    nice_rotation,
    overlap,
    prefix_part,
    w_string_prefix,
)

# A string is primitive when it is not a power of a shorter string.
print(is_primitive("aabab"))   # True
print(is_primitive("abab"))    # False: ("ab")^2

# Among all rotations of a primitive string there is a lexicographically
# smallest and a largest one; both are unbordered.
w = "aabab"
print(minimal_rotation(w), maximal_rotation(w))   # aabab babaa
print(repr(longest_border(maximal_rotation(w))))  # ''

# Writing w_min = pmin + pmax and w_max = pmax + pmin, the *nice rotation*
# is w_max when |pmax| <= |pmin| and w_min otherwise.  The short piece's
# length alpha is at most half the word.
nice = nice_rotation(w)
print(nice.word, nice.kind.value, nice.p_min, nice.p_max, nice.alpha)
# -> aabab MinRotation aa bab 2

# Prefixes of the infinite repetition of a nice word are its "repetition
# prefixes"; they inherit the word's period.
x = w_string_prefix(nice, 9)
print(x, is_w_string(x, nice), min_period(x))     # aababaaba True 5

# Overlap and prefix-part decompose one string against the next:
# u == prefix_part(u, v) + overlap(u, v).
u, v = "aab", "aba"
print(overlap(u, v), prefix_part(u, v))           # ab a
