from fractions import Fraction as F

from gradedlie.chevalley import (
    apply_automorphism,
    bracket_apply,
    build_algebra,
    is_distinguished,
    jordan_profile,
    orbit_representative,
    pinned_automorphism,
)
from gradedlie.errors import OddGrading
import pytest


def _elements(alg):
    return [{lab: F(1)} for lab in range(alg.dim)]


def check_jacobi(alg):
    basis = _elements(alg)
    for a in basis:
        for b in basis:
            for c in basis:
                total = {}
                for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
                    term = bracket_apply(alg, x, bracket_apply(alg, y, z))
                    for lab, v in term.items():
                        total[lab] = total.get(lab, F(0)) + v
                assert all(v == 0 for v in total.values())


def test_jacobi_small_types():
    for series, rank in [("A", 2), ("C", 2), ("G", 2)]:
        check_jacobi(build_algebra(series, rank))


def test_structure_constants_a2():
    alg = build_algebra("A", 2)
    # [e_alpha, e_{-alpha}] = coroot, positively normalized
    for ri in range(alg.npos):
        h = bracket_apply(
            alg, {alg.root_label(ri): F(1)}, {alg.root_label(alg.neg[ri]): F(1)}
        )
        root = alg.roots[ri]
        for i in range(alg.rank):
            acc = sum(h.get(j, F(0)) * alg.cartan[i][j] for j in range(alg.rank))
            assert acc == sum(root[j] * alg.cartan[i][j] for j in range(alg.rank))


def test_folded_algebra_dimensions():
    assert build_algebra("B", 3).dim == 21
    assert build_algebra("C", 3).dim == 21
    assert build_algebra("G", 2).dim == 14
    assert build_algebra("F", 4).dim == 52


def test_pinned_automorphism_order():
    for series, rank, order in [("A", 2, 2), ("A", 3, 2), ("D", 4, 3), ("E", 6, 2)]:
        alg = build_algebra(series, rank)
        auto = pinned_automorphism(alg, order)
        for lab in range(alg.dim):
            cur = {lab: F(1)}
            for _ in range(order):
                cur = apply_automorphism(auto, cur)
            assert cur == {lab: F(1)}


def test_automorphism_respects_bracket():
    alg = build_algebra("A", 2)
    auto = pinned_automorphism(alg, 2)
    for a in range(alg.dim):
        for b in range(alg.dim):
            x, y = {a: F(1)}, {b: F(1)}
            lhs = apply_automorphism(auto, bracket_apply(alg, x, y))
            rhs = bracket_apply(
                alg, apply_automorphism(auto, x), apply_automorphism(auto, y)
            )
            assert lhs == rhs


def test_a2_theta_sign():
    # the pinned order-2 twist of A2 negates the highest root vector
    alg = build_algebra("A", 2)
    auto = pinned_automorphism(alg, 2)
    theta = alg.root_index((1, 1))
    img = apply_automorphism(auto, {alg.root_label(theta): F(1)})
    assert img == {alg.root_label(theta): F(-1)}


def test_distinguished_and_representative():
    alg = build_algebra("A", 1)
    roots = [0, 1]
    assert is_distinguished(alg, roots, [F(2)])
    rep = orbit_representative(alg, roots, [F(2)])
    assert rep == {0: F(1)}
    with pytest.raises(OddGrading):
        is_distinguished(alg, roots, [F(1)])


def test_jordan_profile_regular_a2():
    alg = build_algebra("A", 2)
    e = {alg.root_label(0): F(1), alg.root_label(1): F(1)}
    # the two simple root vectors close up to the length-2 string through
    # the highest root, giving blocks (2, 1)
    profile = jordan_profile(alg, e, [alg.root_label(0), alg.root_label(1)])
    assert profile == (2, 1)
