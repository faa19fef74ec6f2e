"""The word problem in the braid group via left-greedy normal forms.

Every braid is uniquely Delta^m p_1 ... p_k with permutation-braid factors
p_t, adjacent factors left-weighted.  Equality of braids reduces to
equality of normal forms, and the sign of the infimum of x^-1 y decides
whether x is a prefix of y.
"""

from braidsigma import (
    BraidWord,
    braids_equal,
    concat,
    delta_word,
    gcd_with_delta,
    normal_form,
    parse_braid_word,
    perm_braid_word,
    prefix_leq,
    sandwich,
)

# The defining relation s1 s2 s1 = s2 s1 s2 holds:
print("s1 s2 s1 == s2 s1 s2:", braids_equal(
    parse_braid_word("1 2 1", 3), parse_braid_word("2 1 2", 3)
))

# A mixed word and its normal form (negative infimum <=> not positive):
w = parse_braid_word("1 -2", 3)
nf = normal_form(w)
print(f"nf(s1 s2^-1) = Delta^{nf.inf} * {list(nf.factors)}")

# Normal forms are canonical: any representative word gives the same one.
assert normal_form(nf.to_word()) == nf

# Prefix order: s1 left-divides s1 s2, and everything it reaches within
# one Delta is "sandwiched".
x, y = parse_braid_word("1", 3), parse_braid_word("1 2", 3)
print("s1 <= s1 s2:", prefix_leq(x, y))
print("s1 <= s1 s2 <= s1 Delta:", sandwich(x, y))

# The greatest permutation-braid prefix of a positive word:
p = parse_braid_word("2 2 1", 3)
print("gcd(s2 s2 s1, Delta) has permutation", gcd_with_delta(p))

# Every strand pair crosses once in Delta, so Delta^2 is central:
d = delta_word(4)
dd = concat(d, d)
for i in range(1, 4):
    s = BraidWord(4, (i,))
    assert braids_equal(concat(s, dd), concat(dd, s))
print("Delta^2 is central in B_4: checked")
