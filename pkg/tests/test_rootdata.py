from fractions import Fraction as F

import pytest

from gradedlie.chevalley import bracket_apply
from gradedlie.cyc import root_of_unity
from gradedlie.errors import InvalidTwist
from gradedlie.rootdata import build_root_datum, cartan_class_vectors, class_vector, hyperplane_key


def test_twist_validation():
    with pytest.raises(InvalidTwist):
        build_root_datum("A", 1, 2)
    with pytest.raises(InvalidTwist):
        build_root_datum("C", 2, 2)
    with pytest.raises(InvalidTwist):
        build_root_datum("A", 3, 3)
    build_root_datum("D", 4, 3)


def test_untwisted_a2():
    d = build_root_datum("A", 2, 1)
    assert d.restricted_rank == 2
    assert len(d.roots) == 6
    assert all(cls == (0,) for cls in d.classes_by_root)
    assert d.cartan_graded_dims == {0: 2}


def test_a2_twist_is_bc1():
    d = build_root_datum("A", 2, 2)
    assert d.restricted_rank == 1
    # non-reduced: alpha and 2 alpha both present
    covs = set(d.roots)
    assert (1,) in covs and (2,) in covs
    assert d.killing == ((12,),)
    # the doubled root lives only in the odd class
    idx2 = d.root_index((2,))
    assert d.classes_by_root[idx2] == (1,)
    total = sum(d.cartan_graded_dims.values()) + len(d.graded_support)
    assert total == 8


def test_a3_twist_is_c2():
    d = build_root_datum("A", 3, 2)
    assert d.restricted_rank == 2
    assert len(d.roots) == 8
    assert sum(d.cartan_graded_dims.values()) + len(d.graded_support) == 15


def test_d4_triality_is_g2_shaped():
    d = build_root_datum("D", 4, 3)
    assert d.restricted_rank == 2
    assert len(d.roots) == 12
    assert sum(d.cartan_graded_dims.values()) + len(d.graded_support) == 28
    assert d.cartan_graded_dims == {0: 2, 1: 1, 2: 1}


def test_e6_twist_is_f4():
    d = build_root_datum("E", 6, 2)
    assert d.restricted_rank == 4
    assert len(d.roots) == 48
    assert sum(d.cartan_graded_dims.values()) + len(d.graded_support) == 78


def test_class_vector_is_eigenvector():
    for series, rank, e in [("A", 2, 2), ("A", 3, 2), ("D", 4, 3)]:
        d = build_root_datum(series, rank, e)
        from gradedlie.chevalley import apply_automorphism

        for idx, cls in d.graded_support[:6]:
            v = class_vector(d, idx, cls)
            img = apply_automorphism(d._auto, v)
            want = {lab: root_of_unity(e, cls) * c for lab, c in v.items()}
            assert img == want


def test_cartan_class_vectors_count():
    d = build_root_datum("D", 4, 3)
    for cls, dim in d.cartan_graded_dims.items():
        assert len(cartan_class_vectors(d, cls)) == dim


def test_class_vectors_bracket_into_class_sums():
    d = build_root_datum("A", 2, 2)
    idx1 = d.root_index((1,))
    v = class_vector(d, idx1, 0)
    w = class_vector(d, idx1, 1)
    out = bracket_apply(d._alg, v, w)
    # lands in the class-1 piece over the doubled root
    img = {lab: root_of_unity(2, 1) * c for lab, c in out.items()}
    from gradedlie.chevalley import apply_automorphism

    assert apply_automorphism(d._auto, out) == img


def test_hyperplane_key_identifies_opposite_roots():
    d = build_root_datum("A", 2, 2)
    idx1 = d.root_index((1,))
    neg1 = d.root_index((-1,))
    assert hyperplane_key(d, idx1, 2) == hyperplane_key(d, neg1, -2)
    idx2 = d.root_index((2,))
    # the doubled root's walls interleave the reduced root's walls
    assert hyperplane_key(d, idx1, 2) != hyperplane_key(d, idx2, 1)
