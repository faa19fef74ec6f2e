"""Order complexes, Smith normal form, and exact reduced homology.

Note: the weak-order proper part on three letters is two disjoint edges
(four vertices, two comparable pairs), i.e. a 0-sphere.  The frozen values
here were re-derived by hand from inversion-set containment and are
cross-checked against an independent Smith-normal-form engine.
"""

import random

import pytest

from braidsigma import (
    HomologyProfile,
    SimplicialComplex,
    order_complex,
    pw_vertices,
    reduced_homology,
    rev_vertices,
    smith_normal_form,
    weak_leq,
)

from oracles import snf_diagonal


class TestOrderComplex:
    def test_pw3(self):
        cx = order_complex(pw_vertices(3), weak_leq)
        assert cx.counts() == {0: 4, 1: 2}

    def test_antichain(self):
        cx = order_complex([1, 2, 3], lambda a, b: a == b)
        assert cx.counts() == {0: 3}

    def test_chain(self):
        cx = order_complex([1, 2, 3, 4], lambda a, b: a <= b)
        assert cx.is_full_simplex()
        assert cx.counts() == {0: 4, 1: 6, 2: 4, 3: 1}

    def test_rejects_non_antisymmetric(self):
        with pytest.raises(ValueError):
            order_complex([1, 2], lambda a, b: True)

    def test_faces_closed(self):
        cx = order_complex(pw_vertices(4), weak_leq)
        simplices = {s for dim in cx.simplices for s in dim}
        for s in simplices:
            if len(s) > 1:
                for t in range(len(s)):
                    assert s[:t] + s[t + 1 :] in simplices


class TestSmithNormalForm:
    def test_identity(self):
        assert smith_normal_form([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == [1, 1, 1]

    def test_divisibility_normalization(self):
        assert smith_normal_form([[2, 0], [0, 3]]) == [1, 6]

    def test_zero_matrix(self):
        assert smith_normal_form([[0, 0], [0, 0]]) == []

    def test_hollow_triangle_boundary(self):
        # degree-1 boundary of the triangle's three edges: rank 2, no torsion
        d1 = [[-1, -1, 0], [1, 0, -1], [0, 1, 1]]
        assert smith_normal_form(d1) == [1, 1]

    def test_against_sympy(self):
        r = random.Random(99)
        for _ in range(40):
            rows, cols = r.randrange(1, 6), r.randrange(1, 6)
            m = [[r.randrange(-5, 6) for _ in range(cols)] for _ in range(rows)]
            assert smith_normal_form(m) == snf_diagonal(m)


class TestReducedHomology:
    def test_pw3_is_a_zero_sphere(self):
        cx = order_complex(pw_vertices(3), weak_leq)
        assert reduced_homology(cx) == HomologyProfile.sphere(0)

    def test_rev3_13(self):
        cx = order_complex(rev_vertices(3, 1, 3), weak_leq)
        assert reduced_homology(cx) == HomologyProfile.sphere(0)

    def test_full_simplex_is_acyclic(self):
        cx = order_complex([1, 2, 3, 4], lambda a, b: a <= b)
        assert reduced_homology(cx) == HomologyProfile.trivial()

    def test_empty_complex(self):
        cx = SimplicialComplex.from_simplices((), ())
        assert reduced_homology(cx) == HomologyProfile.sphere(-1)

    def test_hollow_triangle_is_a_circle(self):
        cx = SimplicialComplex.from_simplices("abc", ((0, 1), (0, 2), (1, 2)))
        assert reduced_homology(cx) == HomologyProfile.sphere(1)

    def test_projective_plane_torsion(self):
        # minimal 6-vertex triangulation of RP^2: H_1 = Z/2, everything else 0
        triangles = [
            (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 1, 5),
            (1, 2, 4), (1, 3, 4), (1, 3, 5), (2, 3, 5), (2, 4, 5),
        ]
        cx = SimplicialComplex.from_simplices(tuple(range(6)), triangles)
        assert reduced_homology(cx) == HomologyProfile.build({}, {1: [2]})

    def test_euler_characteristic_matches_betti(self):
        cx = order_complex(pw_vertices(4), weak_leq)
        profile = reduced_homology(cx)
        alt = sum((-1) ** d * c for d, c in cx.counts().items())
        betti_alt = 1 + sum((-1) ** d * r for d, r in profile.betti)
        assert alt == betti_alt

    def test_max_degree_cap(self):
        cx = order_complex(pw_vertices(4), weak_leq)
        full = reduced_homology(cx)
        capped = reduced_homology(cx, max_degree=1)
        assert capped.betti_number(1) == full.betti_number(1)
