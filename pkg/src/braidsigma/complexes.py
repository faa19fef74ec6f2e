"""Finite simplicial complexes and exact reduced integral homology.

Complexes are abstract: a tuple of vertex objects plus, per dimension, the
strictly increasing index tuples spanning a simplex.  Homology is computed
from sparse integer boundary matrices via Smith normal form with Python's
arbitrary-precision ints, so Betti numbers and torsion are exact.  Reduced
conventions throughout: the chain complex is augmented in degree 0, and the
empty complex reports betti_{-1} = 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Callable, Hashable, Iterable, Mapping, Sequence


@dataclass(frozen=True)
class SimplicialComplex:
    """Abstract simplicial complex on an indexed vertex list.

    ``simplices[d]`` holds the d-simplices as sorted tuples of vertex
    indices, in lexicographic order.  The complex is closed under faces.
    """

    vertices: tuple
    simplices: tuple[tuple[tuple[int, ...], ...], ...]

    def __post_init__(self):
        seen = {s for dim in self.simplices for s in dim}
        for d, dim_simplices in enumerate(self.simplices):
            for s in dim_simplices:
                if len(s) != d + 1 or list(s) != sorted(set(s)):
                    raise ValueError(f"bad {d}-simplex {s}")
                if any(not 0 <= v < len(self.vertices) for v in s):
                    raise ValueError(f"vertex index out of range in {s}")
                if d > 0:
                    for t in range(d + 1):
                        if s[:t] + s[t + 1:] not in seen:
                            raise ValueError(f"complex not closed under faces at {s}")

    @classmethod
    def from_simplices(cls, vertices: Sequence, simplices: Iterable[tuple[int, ...]]) -> "SimplicialComplex":
        """Close the given simplices under faces and canonically sort."""
        closed: set[tuple[int, ...]] = set()
        stack = [tuple(sorted(set(s))) for s in simplices]
        while stack:
            s = stack.pop()
            if not s or s in closed:
                continue
            closed.add(s)
            if len(s) > 1:
                stack.extend(s[:t] + s[t + 1:] for t in range(len(s)))
        top = max((len(s) for s in closed), default=0)
        by_dim = tuple(
            tuple(sorted(s for s in closed if len(s) == d + 1)) for d in range(top)
        )
        return cls(tuple(vertices), by_dim)

    @property
    def dim(self) -> int:
        """Dimension, or -1 for the empty complex."""
        return len(self.simplices) - 1

    def simplex_count(self, d: int) -> int:
        if 0 <= d <= self.dim:
            return len(self.simplices[d])
        return 0

    def counts(self) -> dict[int, int]:
        return {d: len(s) for d, s in enumerate(self.simplices)}

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * len(s) for d, s in enumerate(self.simplices))

    def relabeled(self, new_index: Sequence[int]) -> "SimplicialComplex":
        """Rename vertex i to new_index[i] (a bijection); re-sorts all tuples."""
        verts = list(self.vertices)
        permuted = list(verts)
        for old, new in enumerate(new_index):
            permuted[new] = verts[old]
        simplices = [
            tuple(sorted(new_index[v] for v in s))
            for dim in self.simplices
            for s in dim
        ]
        return SimplicialComplex.from_simplices(permuted, simplices)

    def is_full_simplex(self) -> bool:
        n = len(self.vertices)
        return n > 0 and self.simplex_count(n - 1) == 1

    def is_simplex_boundary(self) -> bool:
        """True iff this is the boundary of the (n-1)-simplex on all vertices."""
        n = len(self.vertices)
        if n < 2 or self.dim != n - 2:
            return False
        from math import comb

        return all(self.simplex_count(d) == comb(n, d + 1) for d in range(n - 1))

    def to_json(self) -> dict:
        return {"dims": {str(d): len(s) for d, s in enumerate(self.simplices)}}


def order_complex(vertices: Sequence, leq: Callable[[object, object], bool]) -> SimplicialComplex:
    """Order complex of a finite poset: simplices are the nonempty chains.

    ``leq`` must restrict to a partial order on ``vertices``; an antisymmetry
    violation (two distinct comparable-both-ways elements) raises ValueError.
    """
    verts = list(vertices)
    m = len(verts)
    above: list[list[int]] = [[] for _ in range(m)]
    for a in range(m):
        for b in range(m):
            if a == b:
                continue
            if leq(verts[a], verts[b]):
                if leq(verts[b], verts[a]):
                    raise ValueError(
                        f"antisymmetry violated between {verts[a]!r} and {verts[b]!r}"
                    )
                above[a].append(b)

    chains: list[tuple[int, ...]] = []

    def extend(chain: list[int]) -> None:
        chains.append(tuple(chain))
        for b in above[chain[-1]]:
            chain.append(b)
            extend(chain)
            chain.pop()

    for a in range(m):
        extend([a])
    # Chains are automatically index-unsorted; from_simplices re-sorts tuples.
    return SimplicialComplex.from_simplices(verts, chains)


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced integral homology: free ranks plus torsion per degree.

    Only nonzero entries are stored, so equal profiles compare equal and can
    key grouping.  Degree -1 appears only for the empty complex.
    """

    betti: tuple[tuple[int, int], ...]
    torsion: tuple[tuple[int, tuple[int, ...]], ...]

    @classmethod
    def build(cls, betti: Mapping[int, int], torsion: Mapping[int, Iterable[int]]) -> "HomologyProfile":
        b = tuple(sorted((d, r) for d, r in betti.items() if r))
        t = tuple(
            sorted((d, tuple(sorted(ts))) for d, ts in torsion.items() if tuple(ts))
        )
        for _, ts in t:
            if any(x <= 1 for x in ts):
                raise ValueError("torsion coefficients must exceed 1")
        return cls(b, t)

    @classmethod
    def trivial(cls) -> "HomologyProfile":
        return cls((), ())

    @classmethod
    def sphere(cls, d: int) -> "HomologyProfile":
        """Reduced homology of S^d (d = -1 gives the empty complex)."""
        return cls(((d, 1),), ())

    def betti_number(self, d: int) -> int:
        return dict(self.betti).get(d, 0)

    def torsion_in(self, d: int) -> tuple[int, ...]:
        return dict(self.torsion).get(d, ())

    def is_trivial(self) -> bool:
        return not self.betti and not self.torsion

    def to_json(self) -> dict:
        return {
            "betti": {str(d): r for d, r in self.betti},
            "torsion": {str(d): list(ts) for d, ts in self.torsion},
        }


def smith_normal_form(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Invariant factors d_1 | d_2 | ... of an integer matrix.

    Returns the nonzero invariant factors in divisibility order; the rank is
    their count.  Exact arbitrary-precision arithmetic, smallest-pivot
    elimination.
    """
    entries = {
        (r, c): int(v)
        for r, row in enumerate(matrix)
        for c, v in enumerate(row)
        if v
    }
    return _invariant_factors(entries)


def _invariant_factors(entries: Mapping[tuple[int, int], int]) -> list[int]:
    rows: dict[int, dict[int, int]] = {}
    cols: dict[int, dict[int, int]] = {}
    for (r, c), v in entries.items():
        if v:
            rows.setdefault(r, {})[c] = v
            cols.setdefault(c, {})[r] = v

    def set_entry(r: int, c: int, v: int) -> None:
        if v:
            rows.setdefault(r, {})[c] = v
            cols.setdefault(c, {})[r] = v
        else:
            if r in rows and c in rows[r]:
                del rows[r][c]
                if not rows[r]:
                    del rows[r]
                del cols[c][r]
                if not cols[c]:
                    del cols[c]

    def add_row(dst: int, src: int, mult: int) -> None:
        for c, v in list(rows.get(src, {}).items()):
            set_entry(dst, c, rows.get(dst, {}).get(c, 0) + mult * v)

    def add_col(dst: int, src: int, mult: int) -> None:
        for r, v in list(cols.get(src, {}).items()):
            set_entry(r, dst, rows.get(r, {}).get(dst, 0) + mult * v)

    diagonal: list[int] = []
    while rows:
        # Smallest-magnitude pivot, tie-broken by least expected fill.
        pr, pc = min(
            ((r, c) for r, row in rows.items() for c in row),
            key=lambda rc: (
                abs(rows[rc[0]][rc[1]]),
                len(rows[rc[0]]) * len(cols[rc[1]]),
                rc,
            ),
        )
        while True:
            v = rows[pr][pc]
            moved = False
            for r in [r for r in cols[pc] if r != pr]:
                q = rows[r][pc] // v
                add_row(r, pr, -q)
                if rows.get(r, {}).get(pc):
                    pr, pc = r, pc  # strictly smaller remainder becomes pivot
                    moved = True
                    break
            if moved:
                continue
            v = rows[pr][pc]
            for c in [c for c in rows[pr] if c != pc]:
                q = rows[pr][c] // v
                add_col(c, pc, -q)
                if rows.get(pr, {}).get(c):
                    pr, pc = pr, c
                    moved = True
                    break
            if not moved:
                break
        v = rows[pr][pc]
        diagonal.append(abs(v))
        set_entry(pr, pc, 0)
    return _divisibility_normalize(diagonal)


def _divisibility_normalize(diagonal: Sequence[int]) -> list[int]:
    ds = [abs(d) for d in diagonal if d]
    changed = True
    while changed:
        changed = False
        for i in range(len(ds)):
            for j in range(i + 1, len(ds)):
                if ds[j] % ds[i]:
                    g = gcd(ds[i], ds[j])
                    ds[i], ds[j] = g, ds[i] * ds[j] // g
                    changed = True
    return sorted(ds)


def _boundary_entries(
    faces: Sequence[tuple[int, ...]], cells: Sequence[tuple[int, ...]]
) -> dict[tuple[int, int], int]:
    index = {f: i for i, f in enumerate(faces)}
    entries: dict[tuple[int, int], int] = {}
    for c, cell in enumerate(cells):
        for t in range(len(cell)):
            face = cell[:t] + cell[t + 1:]
            entries[(index[face], c)] = (-1) ** t
    return entries


def reduced_homology(cx: SimplicialComplex, max_degree: int | None = None) -> HomologyProfile:
    """Reduced integral homology of a finite simplicial complex.

    ``max_degree`` truncates the computation above that degree (the reported
    degrees <= max_degree are still exact).
    """
    if not cx.vertices or cx.dim < 0:
        if len(cx.vertices) == 0:
            return HomologyProfile.build({-1: 1}, {})
        # Vertices given but no simplices listed: treat vertices as 0-simplices.
        raise ValueError("complex with vertices must list them as 0-simplices")
    top = cx.dim if max_degree is None else min(cx.dim, max_degree)
    invariants: dict[int, list[int]] = {0: [1]}  # augmentation row of ones
    for d in range(1, top + 2):
        if d > cx.dim:
            invariants[d] = []
            continue
        entries = _boundary_entries(cx.simplices[d - 1], cx.simplices[d])
        invariants[d] = _invariant_factors(entries)
    betti = {
        d: cx.simplex_count(d) - len(invariants[d]) - len(invariants[d + 1])
        for d in range(top + 1)
    }
    torsion = {
        d: [f for f in invariants[d + 1] if f > 1] for d in range(top + 1)
    }
    if any(r < 0 for r in betti.values()):
        raise AssertionError("negative Betti number; boundary ranks inconsistent")
    return HomologyProfile.build(betti, torsion)
