"""Garside structure of the braid group: normal forms and the prefix order.

Every braid has a unique left-greedy normal form Delta^m p_1 ... p_k where
each p_t is a permutation braid (a positive braid in which any two strands
cross at most once, so p_t is determined by its permutation) and adjacent
factors are left-weighted.  Comparing normal forms decides braid equality,
and the sign of the infimum m of x^-1 y decides the prefix order x <= y.

Factor arithmetic is done entirely with permutations and Coxeter lengths:

* starting set S(p) = generators left-dividing p  = {i : (i)p > (i+1)p};
* finishing set F(p) = generators right-dividing p = descents of the bracket;
* (a, b) is left-weighted iff S(b) is contained in F(a).

Negative letters are removed via s_i^-1 = Delta^-1 (Delta s_i^-1), after
which every Delta^-1 migrates to the left through the index-flip
automorphism coming from s_i Delta = Delta s_{n-i}.
"""

from __future__ import annotations

from dataclasses import dataclass

from .perms import Permutation
from .words import BraidWord, concat, delta_word, inverse_word


def starting_set(p: Permutation) -> set[int]:
    """Generators s_i with s_i <= p in the prefix order."""
    return {i for i in range(1, p.n) if p.act(i) > p.act(i + 1)}


def finishing_set(p: Permutation) -> set[int]:
    """Generators s_i with p s_i^-1 still positive."""
    return {i for i in range(1, p.n) if p.bracket[i - 1] > p.bracket[i]}


def left_weighted(a: Permutation, b: Permutation) -> bool:
    return starting_set(b) <= finishing_set(a)


def perm_braid_word(sigma: Permutation) -> BraidWord:
    """The lexicographically smallest reduced word for sigma's permutation braid.

    Repeatedly peels the smallest left descent, so the word has length
    exactly coxeter_length(sigma).
    """
    letters: list[int] = []
    p = sigma
    while True:
        s = starting_set(p)
        if not s:
            break
        i = min(s)
        letters.append(i)
        p = p.swap_values(i)
    return BraidWord(sigma.n, tuple(letters))


@dataclass(frozen=True)
class NormalForm:
    """Left-greedy decomposition Delta^inf p_1 ... p_k."""

    n: int
    inf: int
    factors: tuple[Permutation, ...]

    def __post_init__(self):
        w0 = Permutation.longest(self.n)
        for t, f in enumerate(self.factors):
            if f.is_identity() or f == w0:
                raise ValueError("factors must lie strictly between 1 and Delta")
            if t + 1 < len(self.factors) and not left_weighted(f, self.factors[t + 1]):
                raise ValueError(f"factors {t} and {t + 1} are not left-weighted")

    @property
    def sup(self) -> int:
        return self.inf + len(self.factors)

    def to_word(self) -> BraidWord:
        """Some braid word representing this normal form."""
        d = delta_word(self.n)
        w = BraidWord(self.n, ())
        for _ in range(abs(self.inf)):
            w = concat(w, d if self.inf > 0 else inverse_word(d))
        for f in self.factors:
            w = concat(w, perm_braid_word(f))
        return w

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "inf": self.inf,
            "factors": [list(f.bracket) for f in self.factors],
        }


def _flip(p: Permutation) -> Permutation:
    """Conjugation by Delta: s_i -> s_{n-i} at the permutation level."""
    w0 = Permutation.longest(p.n)
    return w0.compose(p).compose(w0)


def _left_weight_pass(factors: list[Permutation]) -> bool:
    """One sweep of the local sliding algorithm; True if anything moved."""
    changed = False
    t = 0
    while t < len(factors) - 1:
        a, b = factors[t], factors[t + 1]
        moved = False
        while True:
            movable = starting_set(b) - finishing_set(a)
            if not movable:
                break
            i = min(movable)
            a = a.append_swap(i)
            b = b.swap_values(i)
            moved = True
        if moved:
            changed = True
            factors[t] = a
            if b.is_identity():
                del factors[t + 1]
            else:
                factors[t + 1] = b
            t = max(t - 1, 0)  # the grown factor may unsettle the previous pair
        else:
            t += 1
    return changed


def normal_form(w: BraidWord) -> NormalForm:
    """Left-greedy normal form of an arbitrary braid word."""
    n = w.n
    w0 = Permutation.longest(n)
    shift = 0
    factors: list[Permutation] = []
    for e in w.letters:
        i = abs(e)
        if e > 0:
            factors.append(Permutation.identity(n).append_swap(i))
        else:
            # s_i^-1 = Delta^-1 (Delta s_i^-1); migrate Delta^-1 leftward.
            factors = [_flip(f) for f in factors]
            shift -= 1
            f = w0.append_swap(i)
            if not f.is_identity():  # n=2: Delta s_1^-1 is trivial
                factors.append(f)
    while _left_weight_pass(factors):
        pass
    while factors and factors[0] == w0:
        factors.pop(0)
        shift += 1
    return NormalForm(n, shift, tuple(factors))


def braids_equal(x: BraidWord, y: BraidWord) -> bool:
    if x.n != y.n:
        raise ValueError("mismatched strand counts")
    return normal_form(x) == normal_form(y)


def prefix_leq(x: BraidWord, y: BraidWord) -> bool:
    """x <= y iff x^-1 y is a positive braid."""
    if x.n != y.n:
        raise ValueError("mismatched strand counts")
    return normal_form(concat(inverse_word(x), y)).inf >= 0


def sandwich(x: BraidWord, y: BraidWord) -> bool:
    """x <= y <= x Delta."""
    return prefix_leq(x, y) and prefix_leq(y, concat(x, delta_word(x.n)))


def left_divides(sigma: Permutation, p: BraidWord) -> bool:
    """Does the permutation braid of sigma left-divide the positive word p?"""
    if any(e < 0 for e in p.letters):
        raise ValueError("left divisibility is tested against positive words")
    return prefix_leq(perm_braid_word(sigma), p)


def gcd_with_delta(p: BraidWord) -> Permutation:
    """The permutation of the greatest common prefix of p and Delta.

    Greedy ascent through weak-order covers: the permutation-braid left
    divisors of p form a down- and join-closed subset of the weak order, so
    the maximum is reached by repeatedly adding any single admissible
    inversion.
    """
    if any(e < 0 for e in p.letters):
        raise ValueError("gcd with Delta needs a positive word")
    n = p.n
    sigma = Permutation.identity(n)
    improved = True
    while improved:
        improved = False
        for t in range(1, n):
            if sigma.bracket[t - 1] < sigma.bracket[t]:  # cover: one new inversion
                cover = sigma.append_swap(t)
                if left_divides(cover, p):
                    sigma = cover
                    improved = True
                    break
    return sigma
