"""Topology of the weak Bruhat lattice and its reversing subcomplexes.

PW_n is the order complex of the weak order on S_n with both extremes
removed; Rev_n(i,j) is its full subcomplex on permutations that reverse
the label pair (i,j).  Exact integral homology distinguishes the two
homotopy types: Rev_n(1,n) is an (n-3)-sphere, every other Rev_n(i,j) is
contractible, and the nerve of the star cover explains why.
"""

from braidsigma import (
    join,
    maximal_vertices,
    meet,
    minimal_vertices,
    nerve_of_stars,
    order_complex,
    pw_vertices,
    reduced_homology,
    rev_vertices,
    weak_leq,
)

pairs = [(3, 1, 3), (3, 1, 2), (4, 1, 4), (4, 1, 2), (5, 1, 5)]
for n, i, j in pairs:
    vertices = rev_vertices(n, i, j)
    profile = reduced_homology(order_complex(vertices, weak_leq))
    print(f"Rev_{n}({i},{j}): {len(vertices)} vertices, homology {profile}")

# The ambient proper part itself is a sphere one dimension lower:
for n in (3, 4):
    profile = reduced_homology(order_complex(pw_vertices(n), weak_leq))
    print(f"PW_{n}: homology {profile}")

# Star covers: over Rev_n(1,n) the maximal-vertex stars form the boundary
# of an (n-2)-simplex; over a contractible Rev the minimal-vertex stars
# overlap in a common point, so their nerve is a full simplex.
n = 5
nerve = nerve_of_stars(maximal_vertices(pw_vertices(n)), rev_vertices(n, 1, n), "max")
print(f"nerve over Rev_{n}(1,{n}): boundary of a simplex? {nerve.is_simplex_boundary()}")

mins = minimal_vertices(rev_vertices(4, 2, 3))
nerve = nerve_of_stars(mins, rev_vertices(4, 2, 3), "min")
print(f"nerve over Rev_4(2,3): full simplex? {nerve.is_full_simplex()}")

# The closed-form join/meet witnesses used in those two arguments:
print("join of minimal vertices of Rev_4(2,3):", join(mins))
vs = maximal_vertices(pw_vertices(4))
print("meet of two maximal vertices of PW_4:", meet(vs[:2]))
