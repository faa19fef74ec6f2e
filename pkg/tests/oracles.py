"""Independent brute-force oracles, used only at desk scale by the tests.

``positive_class`` enumerates every positive word obtainable from a given
one by the defining relations (far commutations and the length-3 braid
relation).  Positive-word equality and left divisibility defined this way
are the textbook monoid notions, with no Garside machinery involved, so
they cross-check the normal-form engine from first principles.
"""

from __future__ import annotations

from collections import deque

from braidsigma import BraidWord


def positive_class(w: BraidWord) -> frozenset[tuple[int, ...]]:
    """All positive words equal to ``w`` in the braid monoid."""
    if any(e < 0 for e in w.letters):
        raise ValueError("oracle handles positive words only")
    start = w.letters
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for t in range(len(u) - 1):
            a, b = u[t], u[t + 1]
            if abs(a - b) >= 2:
                v = u[:t] + (b, a) + u[t + 2 :]
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
        for t in range(len(u) - 2):
            a, b, c = u[t], u[t + 1], u[t + 2]
            if a == c and abs(a - b) == 1:
                v = u[:t] + (b, a, b) + u[t + 3 :]
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
    return frozenset(seen)


def positive_words_equal(x: BraidWord, y: BraidWord) -> bool:
    if x.n != y.n:
        raise ValueError("mismatched strand counts")
    if len(x.letters) != len(y.letters):
        return False
    return y.letters in positive_class(x)


def positive_left_divides(d: BraidWord, p: BraidWord) -> bool:
    """d | p on the left: some rewriting of p starts with a rewriting of d."""
    if len(d.letters) > len(p.letters):
        return False
    prefixes = positive_class(d)
    k = len(d.letters)
    return any(u[:k] in prefixes for u in positive_class(p))


def snf_diagonal(matrix) -> list[int]:
    """Nonzero Smith invariant factors via sympy, as an independent engine."""
    import sympy
    from sympy.matrices.normalforms import smith_normal_form

    m = sympy.Matrix(matrix)
    if m.rows == 0 or m.cols == 0 or m.rank() == 0:
        return []
    s = smith_normal_form(m)
    diag = [abs(int(s[i, i])) for i in range(min(s.rows, s.cols))]
    return [d for d in diag if d != 0]
