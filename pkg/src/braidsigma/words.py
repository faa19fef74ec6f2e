"""Braid words and their exact crossing invariants.

A braid word on n strands is a list of signed generator indices: +i is the
positive crossing s_i (strand at position i crosses in front of position
i+1), -i its inverse.  Strands are labeled 1..n at the top; all invariants
are computed by simulating the strand positions top to bottom:

* perm       -- the underlying permutation, in bracket notation;
* kappa      -- the signed crossing count;
* 2*omega_{i,j} -- the signed number of crossings between the strands
                labeled i and j (a half-integer doubled, so everything
                stays in exact integer arithmetic).

No free reduction or normalization happens implicitly; all invariants are
reduction-independent anyway.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping

from .perms import Permutation


@dataclass(frozen=True)
class BraidWord:
    n: int
    letters: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"strand count must be >= 1, got {self.n}")
        for e in self.letters:
            if not 1 <= abs(e) <= self.n - 1:
                raise ValueError(f"letter {e} out of range for n={self.n}")

    def __len__(self) -> int:
        return len(self.letters)

    def __repr__(self) -> str:
        return f"BraidWord(n={self.n}, letters={list(self.letters)})"


@dataclass(frozen=True)
class BraidInvariants:
    """perm, kappa and the symmetric matrix of doubled winding numbers."""

    perm: Permutation
    kappa: int
    twice_windings: Mapping[tuple[int, int], int]

    def twice_winding(self, i: int, j: int) -> int:
        if i == j:
            raise ValueError("winding needs two distinct strands")
        return self.twice_windings[(min(i, j), max(i, j))]


_TOKEN = re.compile(r"^(?:(-?\d+)|s(\d+)(\^-1)?)$")


def parse_braid_word(text: str, n: int) -> BraidWord:
    """Parse whitespace-separated letters: signed integers, s<i>, or s<i>^-1."""
    letters = []
    for token in text.split():
        m = _TOKEN.match(token)
        if not m:
            raise ValueError(f"malformed braid letter {token!r}")
        if m.group(1) is not None:
            e = int(m.group(1))
            if e == 0:
                raise ValueError("generator index 0 is not allowed")
        else:
            e = int(m.group(2))
            if m.group(3):
                e = -e
        if not 1 <= abs(e) <= n - 1:
            raise ValueError(f"letter {token!r} out of range for n={n}")
        letters.append(e)
    return BraidWord(n, tuple(letters))


def word_to_text(w: BraidWord) -> str:
    return " ".join(str(e) for e in w.letters)


def delta_word(n: int) -> BraidWord:
    """The half twist Delta = s_1..s_{n-1} s_1..s_{n-2} ... s_1."""
    if n < 1:
        raise ValueError(f"strand count must be >= 1, got {n}")
    letters = [i for k in range(n - 1, 0, -1) for i in range(1, k + 1)]
    return BraidWord(n, tuple(letters))


def mirror(w: BraidWord) -> BraidWord:
    """Mirror image: every crossing's sign flipped, order kept."""
    return BraidWord(w.n, tuple(-e for e in w.letters))


def concat(x: BraidWord, y: BraidWord) -> BraidWord:
    if x.n != y.n:
        raise ValueError("mismatched strand counts")
    return BraidWord(x.n, x.letters + y.letters)


def inverse_word(x: BraidWord) -> BraidWord:
    return BraidWord(x.n, tuple(-e for e in reversed(x.letters)))


def free_reduce(w: BraidWord) -> BraidWord:
    """Cancel adjacent s_i s_i^-1 pairs (plumbing only; never required)."""
    out: list[int] = []
    for e in w.letters:
        if out and out[-1] == -e:
            out.pop()
        else:
            out.append(e)
    return BraidWord(w.n, tuple(out))


def invariants_of(w: BraidWord) -> BraidInvariants:
    """Strand simulation: track top labels through every crossing."""
    n = w.n
    labels = list(range(1, n + 1))  # labels[p] is the label at position p+1
    tw = {
        (i, j): 0 for i in range(1, n + 1) for j in range(i + 1, n + 1)
    }
    for e in w.letters:
        t = abs(e)
        u, v = labels[t - 1], labels[t]
        tw[(min(u, v), max(u, v))] += 1 if e > 0 else -1
        labels[t - 1], labels[t] = v, u
    return BraidInvariants(
        perm=Permutation(tuple(labels)),
        kappa=sum(1 if e > 0 else -1 for e in w.letters),
        twice_windings=tw,
    )


def erase_strands(w: BraidWord, keep: Iterable[int]) -> BraidWord:
    """Erase every strand whose top label is outside ``keep``.

    A crossing survives exactly when both of its strands carry kept labels;
    it is emitted at the position of the lower retained strand, counting
    retained strands only.  Pairwise windings among kept labels are
    preserved.
    """
    kept = set(keep)
    if not kept:
        raise ValueError("cannot erase every strand")
    if any(not 1 <= a <= w.n for a in kept):
        raise ValueError(f"labels out of range for n={w.n}: {sorted(kept)}")
    labels = list(range(1, w.n + 1))
    out: list[int] = []
    for e in w.letters:
        t = abs(e)
        u, v = labels[t - 1], labels[t]
        if u in kept and v in kept:
            pos = sum(1 for label in labels[: t - 1] if label in kept) + 1
            out.append(pos if e > 0 else -pos)
        labels[t - 1], labels[t] = v, u
    return BraidWord(len(kept), tuple(out))
