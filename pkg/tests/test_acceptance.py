"""Acceptance gate: one test (or test group) per numbered criterion.

The conftest terminal summary folds these into one PASS/FAIL line per
criterion.  Criterion 9 is implemented exactly as stated; see the test's
docstring for why it is expected to stay red.
"""

import itertools
import random
from math import comb

import pytest

from braidsigma import (
    AscendingLinkSpec,
    BraidWord,
    HomologyProfile,
    Permutation,
    ascending_link_vertices,
    braids_equal,
    chi_m_n,
    concat,
    delta_value,
    delta_word,
    eval_on_perm,
    invariants_of,
    join,
    maximal_vertices,
    meet,
    minimal_vertices,
    nerve_of_stars,
    normal_form,
    order_complex,
    perm_braid_word,
    prefix_leq,
    pw_vertices,
    reduced_homology,
    rev_vertices,
    symmetric_group,
    twist,
    weak_leq,
)


def _random_word(rng, n, length):
    return BraidWord(
        n,
        tuple(
            rng.randrange(1, n) * (1 if rng.random() < 0.5 else -1)
            for _ in range(length)
        ),
    )


def test_criterion_1_winding_sum_and_twisted_homomorphism():
    rng = random.Random(1001)
    for _ in range(1000):
        n = rng.randrange(2, 8)
        w = _random_word(rng, n, rng.randrange(0, 41))
        inv = invariants_of(w)
        assert sum(inv.twice_windings.values()) == inv.kappa
    for _ in range(1000):
        n = rng.randrange(2, 8)
        x = _random_word(rng, n, rng.randrange(0, 21))
        y = _random_word(rng, n, rng.randrange(0, 21))
        ix, iy, ixy = invariants_of(x), invariants_of(y), invariants_of(concat(x, y))
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                assert ixy.twice_winding(i, j) == ix.twice_winding(i, j) + (
                    iy.twice_winding(ix.perm.act(i), ix.perm.act(j))
                )


def test_criterion_2_relations_and_rewriting_invariance():
    for n in range(2, 7):
        d = delta_word(n)
        dd = concat(d, d)
        for i in range(1, n):
            for j in range(i + 1, n):
                si, sj = BraidWord(n, (i,)), BraidWord(n, (j,))
                if j - i >= 2:
                    assert braids_equal(concat(si, sj), concat(sj, si))
                else:
                    assert braids_equal(
                        BraidWord(n, (i, j, i)), BraidWord(n, (j, i, j))
                    )
        for i in range(1, n):
            si, s_flip = BraidWord(n, (i,)), BraidWord(n, (n - i,))
            assert braids_equal(concat(si, d), concat(d, s_flip))
            assert braids_equal(concat(si, dd), concat(dd, si))

    rng = random.Random(1002)
    for _ in range(10):
        n = rng.randrange(2, 6)
        w = _random_word(rng, n, rng.randrange(0, 15))
        nf = normal_form(w)
        letters = list(w.letters)
        for _ in range(100):
            kind = rng.randrange(3)
            if kind == 0:  # free insertion s_i s_i^-1
                i = rng.randrange(1, n)
                ins = [i, -i] if rng.random() < 0.5 else [-i, i]
            elif kind == 1 and n >= 3:  # braid relator
                i = rng.randrange(1, n - 1)
                ins = [i, i + 1, i, -(i + 1), -i, -(i + 1)]
            elif kind == 2 and n >= 4:  # far commutation relator
                i = rng.randrange(1, n - 2)
                j = rng.randrange(i + 2, n)
                ins = [i, j, -i, -j]
            else:
                ins = []
            pos = rng.randrange(len(letters) + 1)
            letters[pos:pos] = ins
        assert normal_form(BraidWord(n, tuple(letters))) == nf


def test_criterion_3_prefix_order_matches_weak_order():
    for n in range(2, 6):
        words = {s: perm_braid_word(s) for s in symmetric_group(n)}
        for sigma, ws in words.items():
            for tau, wt in words.items():
                assert prefix_leq(ws, wt) == weak_leq(sigma, tau)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_criterion_4_close_pairs_are_acyclic(n):
    for i in range(1, n):
        for j in range(i + 1, n + 1):
            if (i, j) == (1, n):
                continue
            cx = order_complex(rev_vertices(n, i, j), weak_leq)
            assert reduced_homology(cx) == HomologyProfile.trivial(), (n, i, j)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_criterion_5_far_pair_is_a_sphere(n):
    cx = order_complex(rev_vertices(n, 1, n), weak_leq)
    assert reduced_homology(cx) == HomologyProfile.sphere(n - 3)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_criterion_6_nerves_and_lattice_formulas(n):
    nerve = nerve_of_stars(
        maximal_vertices(pw_vertices(n)), rev_vertices(n, 1, n), "max"
    )
    assert nerve.is_simplex_boundary()
    assert len(nerve.vertices) == n - 1

    for i in range(1, n):
        for j in range(i + 1, n + 1):
            if (i, j) == (1, n):
                continue
            minimals = minimal_vertices(rev_vertices(n, i, j))
            small_nerve = nerve_of_stars(minimals, rev_vertices(n, i, j), "min")
            assert small_nerve.is_full_simplex()
            expect = (
                tuple(range(1, i))
                + tuple(range(j, i - 1, -1))
                + tuple(range(j + 1, n + 1))
            )
            assert join(minimals) == Permutation(expect)

    vs = maximal_vertices(pw_vertices(n))
    for i in range(1, n):
        v_i = Permutation(
            tuple(range(n, i + 1, -1)) + (i, i + 1) + tuple(range(i - 1, 0, -1))
        )
        rest = [v for v in vs if v != v_i]
        expect = tuple(range(i + 1, n + 1)) + tuple(range(1, i + 1))
        assert meet(rest) == Permutation(expect)


def _check_one_positive_reduction(m):
    chi = chi_m_n(m, m).__neg__()
    homology_cache: dict[frozenset, HomologyProfile] = {}
    for sigma in symmetric_group(m):
        p, q = sorted((sigma.act(1), sigma.act(2)))
        expected_vertices = set(rev_vertices(m, p, q))
        chi_x = twist(chi, sigma)
        assert all(eval_on_perm(chi_x, t) != 0 for t in pw_vertices(m))  # no flat part
        for k in range(comb(m, 2)):
            spec = AscendingLinkSpec(chi, sigma, k)
            vertices = set(ascending_link_vertices(spec))
            assert vertices == expected_vertices, (sigma, k)
        key = frozenset(expected_vertices)
        if key not in homology_cache:
            homology_cache[key] = reduced_homology(
                order_complex(sorted(expected_vertices, key=lambda s: s.bracket), weak_leq)
            )
        want = (
            HomologyProfile.sphere(m - 3)
            if (p, q) == (1, m)
            else HomologyProfile.trivial()
        )
        assert homology_cache[key] == want, (sigma, p, q)


@pytest.mark.parametrize("m", [3, 4])
def test_criterion_7_one_positive_reduction(m):
    _check_one_positive_reduction(m)


@pytest.mark.slow
def test_criterion_7_one_positive_reduction_m5():
    _check_one_positive_reduction(5)


def test_criterion_8_chi_structure():
    for m in range(3, 7):
        for n in range(m, 7):
            chi = chi_m_n(m, n)
            coeffs = [a for _, a in chi.coefficients]
            assert sum(coeffs) == 0
            assert sum(1 for a in coeffs if a < 0) == 1
            assert delta_value(chi) == 0


@pytest.mark.parametrize("n", [3, 4])
def test_criterion_9_ambient_sphere_sanity(n):
    """Asserts the stated target: PW_n has the homology of S^{n-2}.

    This is expected to FAIL.  Direct computation (and the classical
    homotopy type of the proper part of the weak order on a rank n-1
    Coxeter group) gives an (n-3)-sphere: two disjoint edges for n=3 and a
    circle for n=4.  The criterion is kept verbatim so the discrepancy
    stays visible rather than being papered over.
    """
    cx = order_complex(pw_vertices(n), weak_leq)
    assert reduced_homology(cx) == HomologyProfile.sphere(n - 2)
