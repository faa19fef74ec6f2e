"""Crossing invariants of braid words.

A braid word is a sequence of signed generator indices; +i crosses the
strand at position i in front of position i+1, -i is the inverse crossing.
Tracking top labels through the crossings yields three exact invariants:
the underlying permutation (bracket notation: top labels read off in
bottom-position order), the signed crossing count kappa, and the doubled
pairwise winding numbers 2*omega_{i,j}.
"""

from braidsigma import (
    BraidWord,
    concat,
    delta_word,
    erase_strands,
    invariants_of,
    parse_braid_word,
)


def show(title, w):
    inv = invariants_of(w)
    print(f"{title}: {list(w.letters)}")
    print(f"  perm = {inv.perm}, kappa = {inv.kappa}")
    pairs = ", ".join(
        f"2w[{i},{j}]={v}" for (i, j), v in sorted(inv.twice_windings.items())
    )
    print(f"  {pairs}")


# A 3-strand braid where strand pairs wind by different amounts.
x = parse_braid_word("2 2 1 -2", 3)
show("x", x)

# The half twist Delta: every pair of strands crosses exactly once.
show("Delta(4)", delta_word(4))

# Windings are additive along concatenation after relabeling strands.
y = parse_braid_word("1 -2 1", 3)
show("x y", concat(x, y))

# Erasing strands keeps the pairwise windings of the survivors.
kept = erase_strands(x, {1, 3})
show("x with strand 2 erased", kept)
assert invariants_of(kept).twice_winding(1, 2) == invariants_of(x).twice_winding(1, 3)

# The crossing count is always the sum of all doubled windings.
inv = invariants_of(x)
assert sum(inv.twice_windings.values()) == inv.kappa
print("\nsum of doubled windings equals kappa: checked")
