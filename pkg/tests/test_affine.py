from fractions import Fraction as F

import pytest

from gradedlie.affine import (
    AffineIsometry,
    alcove_vertices,
    boundary_face,
    conjugating_element,
    crossings,
    enumerate_alcoves,
    facet_of,
    fundamental_alcove,
    reduce_to_fundamental,
    reflection,
    same_facet,
    walls_of_alcove,
)
from gradedlie.errors import NotConjugate
from gradedlie.rootdata import build_root_datum


def test_isometry_algebra():
    d = build_root_datum("A", 2)
    s = reflection(d, 0, 0)
    assert s.compose(s) == AffineIsometry.identity_map(2)
    t = reflection(d, 1, 1)
    w = s.compose(t)
    assert w.inverse().compose(w) == AffineIsometry.identity_map(2)
    y = (F(1, 3), F(2, 7))
    assert w.apply(t.inverse().apply(s.apply(y))) == s.apply(s.apply(y))


def test_facet_stability_on_witness():
    d = build_root_datum("G", 2)
    for y in [(F(0), F(0)), (F(1, 5), F(1, 7)), (F(1, 2), F(3))]:
        f = facet_of(d, y)
        assert same_facet(d, y, f.witness)
        assert facet_of(d, f.witness) == f


def test_reduce_to_fundamental():
    d = build_root_datum("A", 2)
    a0 = fundamental_alcove(d)
    for y in [(F(7, 3), F(-1, 5)), (F(-4), F(9, 2)), (F(0), F(0))]:
        w, y0, word = reduce_to_fundamental(d, y)
        assert w.apply(y) == y0
        from gradedlie.affine import bounding_affine_roots

        assert all(d.eval_affine(ar, y0) >= 0 for ar in bounding_affine_roots(d, a0))
        rebuilt = AffineIsometry.identity_map(2)
        for ar in word:
            rebuilt = reflection(d, *ar).compose(rebuilt)
        assert rebuilt == w


def test_alcove_counts():
    d = build_root_datum("A", 2)
    assert [len(enumerate_alcoves(d, k)) for k in range(4)] == [1, 4, 10, 19]
    g = build_root_datum("G", 2)
    assert [len(enumerate_alcoves(g, k)) for k in range(5)] == [1, 4, 9, 16, 25]


def test_nonreduced_alcove_geometry():
    # A2 with the order-2 twist restricts to a BC1 apartment: the
    # fundamental alcove is the interval (0, 1/4).
    d = build_root_datum("A", 2, e=2)
    a0 = fundamental_alcove(d)
    verts = alcove_vertices(d, a0)[1]
    assert sorted(verts) == [(F(0),), (F(1, 4),)]
    assert [len(enumerate_alcoves(d, k)) for k in range(4)] == [1, 3, 5, 7]


def test_crossings_count_walls():
    d = build_root_datum("A", 2)
    a0 = fundamental_alcove(d)
    y = a0.witness
    z = reflection(d, 0, 0).apply(y)
    assert len(crossings(d, y, z)) == 1
    assert not crossings(d, y, y)


def test_walls_and_faces():
    d = build_root_datum("A", 2)
    a0 = fundamental_alcove(d)
    walls = walls_of_alcove(d, a0)
    assert len(walls) == 3
    face = boundary_face(d, a0, (0, 1))
    assert face.witness == (F(0), F(0))
    verts_walls, verts = alcove_vertices(d, a0)
    assert len(verts) == 3
    assert (F(0), F(0)) in verts


def test_conjugating_element():
    d = build_root_datum("A", 2)
    origin = facet_of(d, (F(0), F(0)))
    # pairings (1, 1) name a coroot-lattice point, hence a translate of 0
    shifted = facet_of(d, (F(1), F(1)))
    w = conjugating_element(d, origin, shifted)
    assert w.apply((F(0), F(0))) == (F(1), F(1))
    # a fundamental coweight vertex is not in the 0-vertex orbit
    with pytest.raises(NotConjugate):
        conjugating_element(d, origin, facet_of(d, (F(1), F(0))))
    with pytest.raises(NotConjugate):
        conjugating_element(d, origin, facet_of(d, (F(1, 2), F(0))))
