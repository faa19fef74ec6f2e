"""The symmetric group in bracket notation, with the weak Bruhat order.

A permutation sigma is stored as its bracket [k_1, ..., k_n]: sigma sends i
to the position j with k_j = i.  Reading a braid diagram top to bottom with
strands labeled 1..n at the top, the bracket is the left-to-right order of
the labels at the bottom, so (i)sigma is the final position of label i.
Permutations act on the right, and compose(sigma, tau) applies sigma first.

The weak Bruhat order compares inversion sets: sigma <= tau iff every label
pair reversed by sigma is also reversed by tau.  This makes S_n a lattice;
join and meet are found by brute-force scan over S_n, which is perfectly
adequate for n <= 8.  The module also provides the proper part PW_n, the
reversing vertex sets Rev_n(i,j), and the nerve-of-stars construction used
to identify their homotopy types.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from .complexes import SimplicialComplex


@dataclass(frozen=True)
class Permutation:
    bracket: tuple[int, ...]

    def __post_init__(self):
        n = len(self.bracket)
        if sorted(self.bracket) != list(range(1, n + 1)):
            raise ValueError(f"not a bracket for S_{n}: {list(self.bracket)}")

    @classmethod
    def from_bracket(cls, bracket: Iterable[int]) -> "Permutation":
        return cls(tuple(bracket))

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def longest(cls, n: int) -> "Permutation":
        """The longest element w_0 = [n, ..., 1]."""
        return cls(tuple(range(n, 0, -1)))

    @property
    def n(self) -> int:
        return len(self.bracket)

    def act(self, i: int) -> int:
        """(i)sigma: the final position of label i."""
        return self.bracket.index(i) + 1

    def is_identity(self) -> bool:
        return all(k == i + 1 for i, k in enumerate(self.bracket))

    def compose(self, other: "Permutation") -> "Permutation":
        """self followed by other (right action: (i)(self*other) = ((i)self)other)."""
        if other.n != self.n:
            raise ValueError("mismatched strand counts")
        result = [0] * self.n
        for label in range(1, self.n + 1):
            result[other.act(self.act(label)) - 1] = label
        return Permutation(tuple(result))

    def inverse(self) -> "Permutation":
        return Permutation(tuple(self.act(p) for p in range(1, self.n + 1)))

    def append_swap(self, t: int) -> "Permutation":
        """Swap bracket positions t, t+1 (right multiplication by s_t)."""
        b = list(self.bracket)
        b[t - 1], b[t] = b[t], b[t - 1]
        return Permutation(tuple(b))

    def swap_values(self, i: int) -> "Permutation":
        """Exchange the images of labels i and i+1 (left multiplication by s_i)."""
        b = [i + 1 if k == i else i if k == i + 1 else k for k in self.bracket]
        return Permutation(tuple(b))

    def __repr__(self) -> str:
        return f"[{','.join(map(str, self.bracket))}]"


@lru_cache(maxsize=None)
def inversion_set(sigma: Permutation) -> frozenset[tuple[int, int]]:
    """All label pairs i < j with (i)sigma > (j)sigma."""
    pos = {label: p for p, label in enumerate(sigma.bracket)}
    n = sigma.n
    return frozenset(
        (i, j)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
        if pos[i] > pos[j]
    )


def coxeter_length(sigma: Permutation) -> int:
    return len(inversion_set(sigma))


def weak_leq(sigma: Permutation, tau: Permutation) -> bool:
    if sigma.n != tau.n:
        raise ValueError("mismatched strand counts")
    return inversion_set(sigma) <= inversion_set(tau)


@lru_cache(maxsize=None)
def symmetric_group(n: int) -> tuple[Permutation, ...]:
    """All of S_n, sorted by bracket lexicographic order."""
    return tuple(
        Permutation(b) for b in sorted(itertools.permutations(range(1, n + 1)))
    )


def _bound(perms: Sequence[Permutation], upper: bool) -> Permutation:
    if not perms:
        raise ValueError("join/meet of the empty set")
    n = perms[0].n
    if n > 8:
        raise ValueError("brute-force join/meet limited to n <= 8")
    if any(p.n != n for p in perms):
        raise ValueError("mismatched strand counts")
    if upper:
        candidates = [
            t for t in symmetric_group(n) if all(weak_leq(p, t) for p in perms)
        ]
        best = min(candidates, key=coxeter_length)
        witness_ok = all(weak_leq(best, t) for t in candidates)
    else:
        candidates = [
            t for t in symmetric_group(n) if all(weak_leq(t, p) for p in perms)
        ]
        best = max(candidates, key=coxeter_length)
        witness_ok = all(weak_leq(t, best) for t in candidates)
    if not witness_ok:
        raise AssertionError("weak order failed to be a lattice; convention bug")
    return best


def join(perms: Sequence[Permutation]) -> Permutation:
    """Least upper bound in the weak Bruhat lattice."""
    return _bound(list(perms), upper=True)


def meet(perms: Sequence[Permutation]) -> Permutation:
    """Greatest lower bound in the weak Bruhat lattice."""
    return _bound(list(perms), upper=False)


def pw_vertices(n: int) -> list[Permutation]:
    """Vertices of the proper part PW_n: everything but the two extremes."""
    if n < 2:
        raise ValueError("proper part needs n >= 2")
    lo, hi = Permutation.identity(n), Permutation.longest(n)
    return [p for p in symmetric_group(n) if p not in (lo, hi)]


def rev_vertices(n: int, i: int, j: int) -> list[Permutation]:
    """Vertices of Rev_n(i,j): proper-part permutations reversing the pair (i,j)."""
    if not 1 <= i < j <= n:
        raise ValueError(f"need 1 <= i < j <= n, got ({i},{j}) with n={n}")
    return [p for p in pw_vertices(n) if p.act(i) > p.act(j)]


def minimal_vertices(vertexlist: Sequence[Permutation]) -> list[Permutation]:
    vs = list(vertexlist)
    return [
        v
        for v in vs
        if not any(w != v and weak_leq(w, v) for w in vs)
    ]


def maximal_vertices(vertexlist: Sequence[Permutation]) -> list[Permutation]:
    vs = list(vertexlist)
    return [
        v
        for v in vs
        if not any(w != v and weak_leq(v, w) for w in vs)
    ]


def nerve_of_stars(
    centers: Sequence[Permutation],
    ambient: Callable[[Permutation], bool] | Iterable[Permutation],
    mode: str,
) -> SimplicialComplex:
    """Nerve of the covering of an ambient vertex set by stars of the centers.

    In an upward-closed ambient set, stars of minimal vertices intersect in
    the star of their join; dually for maximal vertices and meets.  A subset
    of centers therefore spans a simplex iff its join (mode="min") or meet
    (mode="max") lies in the ambient set.
    """
    if mode not in ("min", "max"):
        raise ValueError(f"mode must be 'min' or 'max', not {mode!r}")
    if not callable(ambient):
        ambient_set = set(ambient)
        ambient = ambient_set.__contains__
    cs = sorted(set(centers), key=lambda p: p.bracket)
    if len(cs) > 20:
        raise ValueError("nerve enumeration capped at 20 centers")
    bound = join if mode == "min" else meet
    spanning = [
        subset
        for size in range(1, len(cs) + 1)
        for subset in itertools.combinations(range(len(cs)), size)
        if ambient(bound([cs[t] for t in subset]))
    ]
    spans = set(spanning)
    for s in spanning:
        if len(s) > 1 and any(s[:t] + s[t + 1:] not in spans for t in range(len(s))):
            raise AssertionError("star intersections not closed under faces")
    return SimplicialComplex.from_simplices(cs, spanning)
