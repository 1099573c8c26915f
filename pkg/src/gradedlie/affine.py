"""Facets and alcoves of the apartment under the affine root hyperplanes.

A facet is identified by a canonical combinatorial key: for every
positive restricted root, either the exact wall the point lies on, or
the nearest valid wall strictly below its value.  Two points share a
facet exactly when their keys agree, which makes facets hashable and
the dedup in alcove walks exact.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import EmptyFace, InternalError, NotConjugate
from .linalg import identity, mat_mul, mat_vec, solve, vec_add, vec_scale
from .rootdata import hyperplane_key


def positive_root_indices(d):
    return [i for i, p in enumerate(d.positive) if p]


def _on_wall_level(d, idx, value):
    """The valid level n with value + n/e = 0, or None."""
    n = -value * d.e
    if n.denominator != 1:
        return None
    n = int(n)
    return n if n % d.e in d.classes_by_root[idx] else None


def _level_below(d, idx, value):
    """Smallest valid level n whose wall -n/e lies strictly below ``value``."""
    scaled = -Fraction(value) * d.e
    n = scaled.numerator // scaled.denominator + 1  # floor + 1: least integer > scaled
    while n % d.e not in d.classes_by_root[idx]:
        n += 1
    return n


def _level_above(d, idx, value):
    """Largest valid level n whose wall -n/e lies strictly above ``value``."""
    scaled = -Fraction(value) * d.e
    n = -((-scaled).numerator // (-scaled).denominator) - 1  # ceil - 1: greatest integer < scaled
    while n % d.e not in d.classes_by_root[idx]:
        n -= 1
    return n


def facet_key(d, y):
    key = []
    for idx in positive_root_indices(d):
        v = d.pairing(idx, y)
        on = _on_wall_level(d, idx, v)
        if on is not None:
            key.append((idx, "on", on))
        else:
            key.append((idx, "b", _level_below(d, idx, v)))
    return tuple(key)


@dataclass(frozen=True)
class Facet:
    datum: object
    witness: tuple
    key: tuple

    @property
    def vanishing(self):
        """One affine root per hyperplane through the facet."""
        return tuple((idx, n) for idx, kind, n in self.key if kind == "on")

    def __eq__(self, other):
        return isinstance(other, Facet) and self.key == other.key

    def __hash__(self):
        return hash(self.key)


def facet_of(d, y):
    y = tuple(Fraction(c) for c in y)
    return Facet(d, y, facet_key(d, y))


def same_facet(d, y1, y2):
    return facet_key(d, y1) == facet_key(d, y2)


@dataclass(frozen=True)
class AffineIsometry:
    mat: tuple
    trans: tuple

    def apply(self, y):
        return vec_add(mat_vec(self.mat, y), self.trans)

    def compose(self, other):
        """self after other."""
        return AffineIsometry(
            mat_mul(self.mat, other.mat),
            vec_add(mat_vec(self.mat, other.trans), self.trans),
        )

    def inverse(self):
        from .linalg import inverse as minv

        mi = minv(self.mat)
        return AffineIsometry(mi, vec_scale(Fraction(-1), mat_vec(mi, self.trans)))

    @staticmethod
    def identity_map(n):
        return AffineIsometry(identity(n), tuple(Fraction(0) for _ in range(n)))


def reflection(d, idx, level):
    """Reflection across the hyperplane of the affine root (idx, level)."""
    r = d.restricted_rank
    cor = d.coroots[idx]
    alpha = d.roots[idx]
    mat = tuple(
        tuple((1 if i == j else 0) - cor[i] * alpha[j] for j in range(r)) for i in range(r)
    )
    trans = tuple(-Fraction(level, d.e) * c for c in cor)
    return AffineIsometry(mat, trans)


def _anchor_point(d):
    h = max(sum(v) for v in d.roots) + 1
    t = Fraction(1, 2 * h + 1)
    return tuple(t for _ in range(d.restricted_rank))


def fundamental_alcove(d):
    """The alcove whose closure contains t * rho-vee for small t > 0."""
    a0 = facet_of(d, _anchor_point(d))
    if a0.vanishing:
        raise InternalError("anchor point landed on a wall")
    return a0


def bounding_affine_roots(d, alcove):
    """Affine roots nonnegative on the alcove closure (slab bounds, may be redundant)."""
    out = []
    y = alcove.witness
    for idx in positive_root_indices(d):
        v = d.pairing(idx, y)
        out.append((idx, _level_below(d, idx, v)))
        out.append((d.neg[idx], -_level_above(d, idx, v)))
    return out


def reduce_to_fundamental(d, y):
    """(w, y0, word): w in the affine Weyl group with w(y) = y0 in the
    closed fundamental alcove, as a composition of wall reflections."""
    y = tuple(Fraction(c) for c in y)
    a0 = fundamental_alcove(d)
    bounds = bounding_affine_roots(d, a0)
    w = AffineIsometry.identity_map(d.restricted_rank)
    word = []
    guard = 0
    cur = y
    while True:
        hit = None
        for ar in bounds:
            if d.eval_affine(ar, cur) < 0:
                hit = ar
                break
        if hit is None:
            return w, cur, tuple(word)
        refl = reflection(d, *hit)
        cur = refl.apply(cur)
        w = refl.compose(w)
        word.append(hit)
        guard += 1
        if guard > 100000:
            raise InternalError("alcove reduction did not terminate")


def crossings(d, y, z):
    """Hyperplanes strictly separating y from z (as canonical keys)."""
    out = set()
    for idx in positive_root_indices(d):
        a = d.pairing(idx, y)
        b = d.pairing(idx, z)
        lo, hi = (a, b) if a <= b else (b, a)
        n = _level_below(d, idx, hi)
        # walls between the two values: -n/e in (lo, hi)
        while Fraction(-n, d.e) > lo:
            if n % d.e in d.classes_by_root[idx]:
                va = a + Fraction(n, d.e)
                vb = b + Fraction(n, d.e)
                if (va > 0 > vb) or (vb > 0 > va):
                    out.add(hyperplane_key(d, idx, n))
            n += 1
    return out


def walls_of_alcove(d, alcove):
    """Bounding affine roots that support a codimension-one face."""
    seen = set()
    walls = []
    for ar in bounding_affine_roots(d, alcove):
        hk = hyperplane_key(d, *ar)
        if hk in seen:
            continue
        seen.add(hk)
        mirror = reflection(d, *ar).apply(alcove.witness)
        if len(crossings(d, alcove.witness, mirror)) == 1:
            walls.append(ar)
    return walls


def enumerate_alcoves(d, depth):
    """Alcoves within the given gallery depth of the fundamental alcove."""
    start = fundamental_alcove(d)
    layers = [[start]]
    seen = {start}
    for _ in range(depth):
        nxt = []
        for alc in layers[-1]:
            for ar in walls_of_alcove(d, alc):
                neigh = facet_of(d, reflection(d, *ar).apply(alc.witness))
                if neigh not in seen:
                    seen.add(neigh)
                    nxt.append(neigh)
        layers.append(nxt)
    return [a for layer in layers for a in layer]


def alcove_vertices(d, alcove):
    """Vertices of the (simplex) alcove, one per omitted wall."""
    walls = walls_of_alcove(d, alcove)
    r = d.restricted_rank
    if len(walls) != r + 1:
        raise InternalError("apartment alcove is not a simplex")
    verts = []
    for omit in range(len(walls)):
        rows = []
        rhs = []
        for j, (idx, n) in enumerate(walls):
            if j == omit:
                continue
            rows.append(list(d.roots[idx]))
            rhs.append(-Fraction(n, d.e))
        sol = solve(rows, rhs)
        if sol is None:
            raise InternalError("alcove walls are degenerate")
        verts.append(sol)
    return walls, verts


def boundary_face(d, alcove, wall_indices):
    """The face of the closed alcove cut out by the given wall subset.

    ``wall_indices`` index into ``walls_of_alcove``.  The face witness is
    the barycenter of the vertices not omitted by the subset.
    """
    walls, verts = alcove_vertices(d, alcove)
    wall_set = set(wall_indices)
    if not wall_set:
        return alcove
    if any(j >= len(walls) for j in wall_set):
        raise EmptyFace("wall index out of range")
    keep = [verts[j] for j in range(len(walls)) if j not in wall_set]
    if not keep:
        raise EmptyFace("the full wall set cuts out the empty face")
    r = d.restricted_rank
    acc = tuple(Fraction(0) for _ in range(r))
    for v in keep:
        acc = vec_add(acc, v)
    bary = vec_scale(Fraction(1, len(keep)), acc)
    face = facet_of(d, bary)
    face_planes = {hyperplane_key(d, *ar) for ar in face.vanishing}
    for j in wall_set:
        if hyperplane_key(d, *walls[j]) not in face_planes:
            raise InternalError("face does not lie on a requested wall")
    return face


def canonical_form(d, facet):
    """(fundamental-domain facet, reducing isometry, word)."""
    w, y0, word = reduce_to_fundamental(d, facet.witness)
    return facet_of(d, y0), w, word


def conjugating_element(d, source, target):
    """An affine Weyl element carrying ``source`` onto ``target``."""
    f1, w1, _ = canonical_form(d, source)
    f2, w2, _ = canonical_form(d, target)
    if f1 != f2:
        raise NotConjugate("facets lie in different affine Weyl orbits")
    w = w2.inverse().compose(w1)
    if not same_facet(d, w.apply(source.witness), target.witness):
        raise InternalError("conjugator failed to map the facet")
    return w
