"""Characters of the pure braid group and ascending-link classification.

A character is an exact rational combination chi = sum a_{i,j} w_{i,j} of
the pairwise winding numbers.  Viewed as a function on all braids (not just
pure ones), chi is a twisted homomorphism: chi(xy) = chi(x) + chi^x(y),
where chi^x relabels the index pairs by the permutation of x.

The Morse pair (chi, kappa-with-reordered-outputs) makes the vertex links
of the Cayley-type complex interesting only when chi(Delta) = 0 and
kappa(x) <= 0 < kappa(x Delta); in that window the possibly non-trivial
part of the ascending link depends only on (chi^x, kappa(x)) and is the
full subcomplex of the proper weak-order part on the vertices p with
chi^x(p) > 0, or chi^x(p) = 0 and kappa(p) <= k (k = -kappa(x)).  The
classification sweep computes the reduced homology of that subcomplex for
every permutation and every k in the window.
"""

from __future__ import annotations

import concurrent.futures
import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .complexes import HomologyProfile, order_complex, reduced_homology
from .perms import Permutation, coxeter_length, inversion_set, pw_vertices, symmetric_group, weak_leq
from .words import BraidWord, invariants_of


@dataclass(frozen=True)
class Character:
    """Rational coefficient vector (a_{i,j})_{i<j}; zero entries are dropped."""

    n: int
    coefficients: tuple[tuple[tuple[int, int], Fraction], ...]

    def __post_init__(self):
        for (i, j), a in self.coefficients:
            if not (1 <= i < j <= self.n):
                raise ValueError(f"pair ({i},{j}) out of range for n={self.n}")
            if a == 0:
                raise ValueError("zero coefficients must be omitted")

    @classmethod
    def from_dict(cls, n: int, coeffs: Mapping[tuple[int, int], Fraction | int]) -> "Character":
        canon: dict[tuple[int, int], Fraction] = {}
        for (i, j), a in coeffs.items():
            if i == j:
                raise ValueError("winding numbers need two distinct strands")
            key = (min(i, j), max(i, j))
            canon[key] = canon.get(key, Fraction(0)) + Fraction(a)
        items = tuple(sorted((k, a) for k, a in canon.items() if a != 0))
        return cls(n, items)

    def coefficient(self, i: int, j: int) -> Fraction:
        key = (min(i, j), max(i, j))
        return dict(self.coefficients).get(key, Fraction(0))

    def support(self) -> list[tuple[int, int]]:
        return [pair for pair, _ in self.coefficients]

    def is_zero(self) -> bool:
        return not self.coefficients

    def __neg__(self) -> "Character":
        return Character(self.n, tuple((pair, -a) for pair, a in self.coefficients))

    def to_text(self) -> str:
        if not self.coefficients:
            return "0"
        parts = []
        for (i, j), a in self.coefficients:
            term = f"w[{i},{j}]" if abs(a) == 1 else f"{abs(a)}*w[{i},{j}]"
            parts.append(("-" if a < 0 else ("+" if parts else "")) + term)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Character({self.n}, {self.to_text()})"


_TERM = re.compile(
    r"\s*(?P<sign>[+-]?)\s*(?:(?P<coef>\d+(?:/\d+)?)\s*\*\s*)?w\[\s*(?P<i>\d+)\s*,\s*(?P<j>\d+)\s*\]\s*"
)


def parse_character(text: str, n: int) -> Character:
    """Parse a +/- separated sum of terms ``c*w[i,j]`` (c rational, default 1)."""
    coeffs: dict[tuple[int, int], Fraction] = {}
    pos = 0
    stripped = text.strip()
    while pos < len(stripped):
        m = _TERM.match(stripped, pos)
        if not m:
            raise ValueError(f"malformed character term at {stripped[pos:]!r}")
        if pos > 0 and m.group("sign") == "":
            raise ValueError(f"missing sign before {stripped[pos:]!r}")
        a = Fraction(m.group("coef") or 1)
        if m.group("sign") == "-":
            a = -a
        i, j = int(m.group("i")), int(m.group("j"))
        if i == j or not (1 <= i <= n and 1 <= j <= n):
            raise ValueError(f"pair ({i},{j}) out of range for n={n}")
        key = (min(i, j), max(i, j))
        coeffs[key] = coeffs.get(key, Fraction(0)) + a
        pos = m.end()
    return Character.from_dict(n, coeffs)


def chi_m_n(m: int, n: int) -> Character:
    """The separating character: +1 on every pair inside {1..m} except (1,2),
    which carries -(C(m,2)-1); pairs touching labels above m are zero."""
    if not 3 <= m <= n:
        raise ValueError(f"need 3 <= m <= n, got m={m}, n={n}")
    coeffs: dict[tuple[int, int], Fraction] = {
        (i, j): Fraction(1)
        for i in range(1, m + 1)
        for j in range(i + 1, m + 1)
        if (i, j) != (1, 2)
    }
    coeffs[(1, 2)] = -Fraction(m * (m - 1) // 2 - 1)
    return Character.from_dict(n, coeffs)


def delta_value(chi: Character) -> Fraction:
    """chi(Delta) = half the coefficient sum, since every pair winds by 1/2."""
    return sum((a for _, a in chi.coefficients), Fraction(0)) / 2


def eval_on_braid(chi: Character, w: BraidWord) -> Fraction:
    if chi.n != w.n:
        raise ValueError("mismatched strand counts")
    inv = invariants_of(w)
    return sum(
        (a * inv.twice_winding(i, j) for (i, j), a in chi.coefficients),
        Fraction(0),
    ) / 2


def eval_on_perm(chi: Character, tau: Permutation) -> Fraction:
    """chi on the permutation braid of tau: half the sum over tau's inversions."""
    if chi.n != tau.n:
        raise ValueError("mismatched strand counts")
    inv = inversion_set(tau)
    return sum(
        (a for pair, a in chi.coefficients if pair in inv), Fraction(0)
    ) / 2


def twist(chi: Character, sigma: Permutation) -> Character:
    """chi^x for any x with permutation sigma: relabel index pairs by sigma."""
    if chi.n != sigma.n:
        raise ValueError("mismatched strand counts")
    return Character.from_dict(
        chi.n,
        {(sigma.act(i), sigma.act(j)): a for (i, j), a in chi.coefficients},
    )


def _kdot_key(a: int) -> tuple[int, int]:
    return (0, -a) if a > 0 else (1, a)


def kdot_less(a: int, b: int) -> bool:
    """The reordering of the integers ... 3 < 2 < 1 < ... < -2 < -1 < 0."""
    return _kdot_key(a) < _kdot_key(b)


@dataclass(frozen=True)
class AscendingLinkSpec:
    """Parameters (chi^x untwisted, pi(x), -kappa(x)) of a positive ascending link.

    Only the window kappa(x) <= 0 < kappa(x Delta) is representable; outside
    it the link is contractible and never needs computing.
    """

    chi: Character
    sigma: Permutation
    k: int

    def __post_init__(self):
        if self.chi.n != self.sigma.n:
            raise ValueError("mismatched strand counts")
        if delta_value(self.chi) != 0:
            raise ValueError(
                "character does not vanish on Delta; the ascending link is "
                "contractible and is not computed"
            )
        top = self.chi.n * (self.chi.n - 1) // 2
        if not 0 <= self.k < top:
            raise ValueError(f"k must lie in [0, {top}), got {self.k}")


def ascending_link_vertices(spec: AscendingLinkSpec) -> list[Permutation]:
    """Vertices p of the proper weak-order part with twisted chi(p) > 0, or
    twisted chi(p) = 0 and coxeter_length(p) <= k."""
    chi_x = twist(spec.chi, spec.sigma)
    out = []
    for p in pw_vertices(spec.chi.n):
        value = eval_on_perm(chi_x, p)
        if value > 0 or (value == 0 and coxeter_length(p) <= spec.k):
            out.append(p)
    return out


@dataclass(frozen=True)
class OnePositivePair:
    """The distinguished coefficient pair of a one-positive character."""

    pair: tuple[int, int]
    negated: bool  # found after replacing chi by -chi
    strict: bool  # no zero coefficients among pairs inside the support footprint
    generic: bool | None  # no proper nonempty coefficient subset sums to zero


def one_positive_pair(chi: Character) -> OnePositivePair | None:
    """Detect the single positive (or single negative) coefficient pair.

    Requires coefficient sum zero.  ``strict`` reports whether every pair of
    labels inside the support footprint carries a nonzero coefficient;
    ``generic`` enumerates coefficient subsets (None if there are too many).
    """
    if chi.is_zero() or sum(a for _, a in chi.coefficients) != 0:
        return None
    values = [a for _, a in chi.coefficients]
    positives = [pair for pair, a in chi.coefficients if a > 0]
    negatives = [pair for pair, a in chi.coefficients if a < 0]
    if len(positives) == 1:
        pair, negated = positives[0], False
    elif len(negatives) == 1:
        pair, negated = negatives[0], True
    else:
        return None
    footprint = sorted({label for i, j in chi.support() for label in (i, j)})
    strict = all(
        chi.coefficient(i, j) != 0 for i, j in itertools.combinations(footprint, 2)
    )
    if len(values) <= 16:
        generic = not any(
            sum(subset) == 0
            for size in range(1, len(values))
            for subset in itertools.combinations(values, size)
        )
    else:
        generic = None
    return OnePositivePair(pair=pair, negated=negated, strict=strict, generic=generic)


@dataclass(frozen=True)
class LinkCell:
    sigma: Permutation
    k: int
    vertex_count: int
    profile: HomologyProfile

    def to_json(self) -> dict:
        return {
            "sigma": list(self.sigma.bracket),
            "k": self.k,
            "vertices": self.vertex_count,
            "profile": self.profile.to_json(),
        }


@dataclass(frozen=True)
class ClassificationReport:
    character: Character
    n: int
    cells: tuple[LinkCell, ...]

    def grouped(self) -> list[tuple[HomologyProfile, list[LinkCell]]]:
        groups: dict[HomologyProfile, list[LinkCell]] = {}
        for cell in self.cells:
            groups.setdefault(cell.profile, []).append(cell)
        return sorted(groups.items(), key=lambda kv: (-len(kv[1]), kv[0].betti))

    def to_json(self) -> dict:
        return {
            "character": self.character.to_text(),
            "n": self.n,
            "cells": [c.to_json() for c in self.cells],
            "profiles": [
                {
                    "profile": profile.to_json(),
                    "count": len(cells),
                    "representative": cells[0].to_json(),
                }
                for profile, cells in self.grouped()
            ],
        }


def _link_cell(
    chi: Character, sigma: Permutation, k: int, max_degree: int | None
) -> LinkCell:
    spec = AscendingLinkSpec(chi, sigma, k)
    vertices = ascending_link_vertices(spec)
    cx = order_complex(vertices, weak_leq)
    profile = reduced_homology(cx, max_degree=max_degree)
    return LinkCell(sigma=sigma, k=k, vertex_count=len(vertices), profile=profile)


def classify_links(
    chi: Character,
    *,
    k_values: Sequence[int] | None = None,
    sigmas: Iterable[Permutation] | None = None,
    max_degree: int | None = None,
    jobs: int = 1,
) -> ClassificationReport:
    """Sweep (sigma, k) cells and group them by reduced-homology profile.

    Defaults: all of S_n and every k in [0, n(n-1)/2).  Cells are pure and
    independent, so ``jobs > 1`` distributes them over processes; the report
    order is deterministic regardless.
    """
    if chi.is_zero():
        raise ValueError("the trivial character has no ascending links")
    if delta_value(chi) != 0:
        raise ValueError("character does not vanish on Delta; nothing to classify")
    n = chi.n
    if k_values is None:
        k_values = range(n * (n - 1) // 2)
    if sigmas is None:
        sigmas = symmetric_group(n)
    tasks = [
        (sigma, k)
        for sigma in sorted(sigmas, key=lambda p: p.bracket)
        for k in sorted(set(k_values))
    ]
    if jobs > 1 and len(tasks) > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
            cells = list(
                pool.map(
                    _link_cell,
                    itertools.repeat(chi),
                    (s for s, _ in tasks),
                    (k for _, k in tasks),
                    itertools.repeat(max_degree),
                    chunksize=max(1, len(tasks) // (4 * jobs)),
                )
            )
    else:
        cells = [_link_cell(chi, s, k, max_degree) for s, k in tasks]
    return ClassificationReport(character=chi, n=n, cells=tuple(cells))
