from fractions import Fraction as F

import pytest

from gradedlie.affine import boundary_face, facet_of, fundamental_alcove, walls_of_alcove
from gradedlie.cuspidal import TORUS_DATUM, CuspidalDatum
from gradedlie.errors import ZeroDimensional
from gradedlie.relweyl import coxeter_order_direct, rel_weyl_group, xi_classes
from gradedlie.rootdata import build_root_datum

# Coxeter matrices of the full-alcove relative groups; None marks an
# infinite order between parallel walls.
PRINCIPAL_COXETER = {
    ("A", 1): ((1, None), (None, 1)),
    ("A", 2): ((1, 3, 3), (3, 1, 3), (3, 3, 1)),
    ("C", 2): ((1, 4, 2), (4, 1, 4), (2, 4, 1)),
    ("G", 2): ((1, 6, 3), (6, 1, 2), (3, 2, 1)),
}


def test_principal_coxeter_matrices():
    for (series, rank), expected in PRINCIPAL_COXETER.items():
        d = build_root_datum(series, rank)
        rw = rel_weyl_group(d, fundamental_alcove(d), cusp=TORUS_DATUM)
        assert rw.coxeter == expected
        assert all(w.c == 2 for w in rw.walls)


def test_a1_levi_inside_a2():
    d = build_root_datum("A", 2)
    datum = CuspidalDatum(levi_type="A1", orbit_marks=(2,), system_label="A1")
    f = facet_of(d, (F(0), F(1, 3)))
    rw = rel_weyl_group(d, f, cusp=datum)
    assert len(rw.walls) == 2
    assert all(w.c == 3 for w in rw.walls)
    assert rw.coxeter == ((1, None), (None, 1))


def test_edge_facets_of_c2_alcove():
    d = build_root_datum("C", 2)
    a0 = fundamental_alcove(d)
    for i in range(len(walls_of_alcove(d, a0))):
        rw = rel_weyl_group(d, boundary_face(d, a0, (i,)))
        assert rw.coxeter == ((1, None), (None, 1))


def test_vertex_facet_is_rejected():
    d = build_root_datum("C", 2)
    with pytest.raises(ZeroDimensional):
        rel_weyl_group(d, facet_of(d, (F(0), F(0))))


def test_coxeter_order_direct():
    from gradedlie.affine import AffineIsometry

    flip = AffineIsometry(mat=((F(-1),),), trans=(F(0),))
    shift = AffineIsometry(mat=((F(-1),),), trans=(F(1),))
    ident = AffineIsometry.identity_map(1)
    assert coxeter_order_direct(flip, flip) == 1
    assert coxeter_order_direct(flip, shift) is None
    assert coxeter_order_direct(ident.compose(flip), flip) == 1


def test_xi_class_counts():
    a1 = build_root_datum("A", 1)
    a0 = fundamental_alcove(a1)
    assert len(xi_classes(a1, facet_of(a1, (F(0),)), a0)) == 2
    a2 = build_root_datum("A", 2)
    b0 = fundamental_alcove(a2)
    assert len(xi_classes(a2, facet_of(a2, (F(0), F(0))), b0)) == 6
    assert len(xi_classes(a2, b0, b0)) == 1
    c2 = build_root_datum("C", 2)
    c0 = fundamental_alcove(c2)
    assert len(xi_classes(c2, facet_of(c2, (F(0), F(0))), c0)) == 8


def test_wall_data_fields():
    d = build_root_datum("A", 2)
    rw = rel_weyl_group(d, fundamental_alcove(d), cusp=TORUS_DATUM)
    for w in rw.walls:
        # reflection fixes the wall and pairs the restriction with its coroot
        a, c = w.function
        img = w.reflection
        assert img.compose(img).mat == tuple(
            tuple(F(1) if i == j else F(0) for j in range(2)) for i in range(2)
        )
