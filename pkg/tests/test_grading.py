from fractions import Fraction as F

import pytest

from gradedlie.affine import facet_of, fundamental_alcove
from gradedlie.errors import UsageError
from gradedlie.grading import (
    GradingDatum,
    block_facets,
    extended_stabilizer,
    graded_piece,
    grading_element,
    s_weight,
    spiral_of_facet,
    splitting_of_facet,
)
from gradedlie.pseudolevi import span_of_facet
from gradedlie.rootdata import build_root_datum


def test_datum_validation():
    with pytest.raises(UsageError):
        GradingDatum(x=(F(1),), m=0, eta=1)
    with pytest.raises(UsageError):
        GradingDatum(x=(F(1),), m=2, eta=0)
    with pytest.raises(UsageError):
        GradingDatum(x=(F(1, 2),), m=2, eta=1)
    g = GradingDatum(x=(F(1),), m=2, eta=-1)
    assert g.epsilon == -1
    assert g.point() == (F(1, 2),)


def test_graded_pieces_a1():
    d = build_root_datum("A", 1)
    g = GradingDatum(x=(F(1),), m=2, eta=1)
    # degree 0 is the Cartan, degree 1 carries both root lines
    assert graded_piece(d, g, 0) == ((), 1)
    labels, cartan = graded_piece(d, g, 1)
    assert cartan == 0 and len(labels) == 2
    # period-2 repetition
    assert graded_piece(d, g, 3) == graded_piece(d, g, 1)


def test_spiral_interior_alcove_a1():
    d = build_root_datum("A", 1)
    g = GradingDatum(x=(F(1),), m=2, eta=1)
    f = facet_of(d, (F(1, 4),))
    sp = spiral_of_facet(d, g, f, window=3)
    assert sp[1] == ((), 0)
    assert sp[0] == ((), 1)
    labels, cartan = sp[-1]
    assert cartan == 0 and len(labels) == 2


def test_spiral_dimension_matches_facet_dimension():
    # spiral support at degree 0 grows with the facet's pseudo-Levi
    d = build_root_datum("A", 2)
    g = GradingDatum(x=(F(0), F(0)), m=3, eta=1)
    vertex = facet_of(d, (F(0), F(0)))
    sp = spiral_of_facet(d, g, vertex, window=1)
    labels, cartan = sp[0]
    assert len(labels) + cartan == 8  # all of sl3 sits in degree 0 here


def test_splitting_at_special_vertex():
    d = build_root_datum("A", 1)
    g = GradingDatum(x=(F(0),), m=2, eta=1)
    v = facet_of(d, (F(0),))
    spl = splitting_of_facet(d, g, v)
    assert spl.pseudo_levi.cartan_type == "A1"
    assert spl.cartan_dim == 1
    assert set(spl.levels) == {0}
    assert len(spl.levels[0]) == 2


def test_grading_element_pairings_are_integral():
    d = build_root_datum("A", 1)
    g = GradingDatum(x=(F(0),), m=2, eta=1)
    sub = span_of_facet(d, facet_of(d, (F(0),)))
    j, pairings = grading_element(d, g, sub)
    assert j == (F(0),)
    assert all(v.denominator == 1 for v in map(F, pairings.values()))


def test_s_weight_congruence():
    d = build_root_datum("A", 1)
    g = GradingDatum(x=(F(1),), m=2, eta=1)
    f = facet_of(d, (F(1, 4),))
    for n in range(-6, 7):
        sp = spiral_of_facet(d, g, f, window=6)
        labels, cartan = sp[n]
        if cartan:
            w = s_weight(d, g, f, None, n)
            assert (w["total"] - (n - g.eta)) % g.m == 0
        for lab in labels:
            w = s_weight(d, g, f, lab, n)
            assert (w["total"] - (n - g.eta)) % g.m == 0


def test_extended_stabilizer_sizes():
    d = build_root_datum("A", 1)
    assert len(extended_stabilizer(d, (F(0),))) == 2
    # 1/2 is fixed by the extended group's extra reflection only
    assert len(extended_stabilizer(d, (F(1, 2),))) == 2
    assert len(extended_stabilizer(d, (F(1, 4),))) == 1


def test_block_classes_a1():
    d = build_root_datum("A", 1)
    g = GradingDatum(x=(F(1),), m=2, eta=1)
    v = facet_of(d, (F(1, 2),))
    classes = block_facets(d, g, v, depth=2)
    summary = sorted((c.eigen_point[0], len(c.members)) for c in classes)
    assert summary == [(F(-1, 2), 2), (F(1, 2), 1), (F(5, 2), 2)]


def test_block_single_class_at_origin():
    d = build_root_datum("A", 1)
    g = GradingDatum(x=(F(0),), m=2, eta=1)
    classes = block_facets(d, g, facet_of(d, (F(0),)), depth=2)
    assert len(classes) == 1 and classes[0].eigen_point == (F(0),)
