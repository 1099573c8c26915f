"""Alcove geometry relative to an affine subspace E of the apartment.

Working coordinates are taken along a basis of E's direction space;
the restriction of the Killing form supplies the inner product, and the
affine root functions restrict to a finite family of hyperplane
functions near any bounded region.  Distinct ambient hyperplanes can
restrict to the same hyperplane of E, so all wall bookkeeping is keyed
by the normalized restricted affine function.
"""

import math
from fractions import Fraction

from .affine import AffineIsometry, facet_of, _level_above, _level_below
from .errors import EmptyFace, InternalError, ZeroDimensional
from .linalg import dot, inverse, mat_vec, nullspace, solve, vec_add, vec_scale, vec_sub


def normalize_affine(a, c):
    """Canonical form of the affine function a . t + c, up to positive
    scaling and overall sign."""
    lead = next((x for x in a if x != 0), None)
    if lead is None:
        raise ZeroDimensional("affine function has zero linear part")
    denom = 1
    for x in list(a) + [c]:
        denom = denom * Fraction(x).denominator // math.gcd(denom, Fraction(x).denominator)
    ints = [int(Fraction(x) * denom) for x in a]
    cint = Fraction(c) * denom
    g = 0
    for x in ints:
        g = math.gcd(g, abs(x))
    g = math.gcd(g, abs(cint.numerator)) if cint != 0 else g
    if g == 0:
        g = 1
    sign = 1 if lead > 0 else -1
    return (tuple(Fraction(sign * x, g) for x in ints), Fraction(sign, g) * cint)


class ESpace:
    """Coordinates, metric, and hyperplanes of an affine subspace."""

    def __init__(self, d, sub):
        self.datum = d
        self.sub = sub
        self.base = tuple(Fraction(c) for c in sub.base)
        self.dirs = tuple(tuple(Fraction(c) for c in u) for u in sub.directions)
        self.dim = len(self.dirs)
        if self.dim == 0:
            raise ZeroDimensional("subspace has no directions")
        k = d.killing
        self.gram = tuple(
            tuple(dot(u, mat_vec(k, v)) for v in self.dirs) for u in self.dirs
        )
        self.gram_inv = inverse(self.gram)
        # restricted linear parts of the root covectors
        self._lin = [tuple(dot(d.roots[idx], u) for u in self.dirs) for idx in range(len(d.roots))]
        self._base_val = [d.pairing(idx, self.base) for idx in range(len(d.roots))]

    def lin(self, idx):
        return self._lin[idx]

    def from_coords(self, t):
        p = self.base
        for c, u in zip(t, self.dirs):
            p = vec_add(p, vec_scale(Fraction(c), u))
        return p

    def to_coords(self, y):
        rows = [[u[i] for u in self.dirs] for i in range(len(y))]
        rhs = list(vec_sub(tuple(Fraction(c) for c in y), self.base))
        t = solve(rows, rhs)
        if t is None:
            raise InternalError("point does not lie on the subspace")
        return t

    def contains(self, y):
        rows = [[u[i] for u in self.dirs] for i in range(len(y))]
        rhs = list(vec_sub(tuple(Fraction(c) for c in y), self.base))
        return solve(rows, rhs) is not None

    def project(self, y):
        """Killing-orthogonal projection of an ambient point onto E."""
        k = self.datum.killing
        diff = vec_sub(tuple(Fraction(c) for c in y), self.base)
        rhs = [dot(u, mat_vec(k, diff)) for u in self.dirs]
        t = mat_vec(self.gram_inv, rhs)
        return self.from_coords(t)

    def value(self, idx, level, t):
        """Affine root value at the E-point with coordinates t."""
        return self._base_val[idx] + dot(self._lin[idx], t) + Fraction(level, self.datum.e)

    def affine_function(self, idx, level):
        """(a, c) with a . t + c the restriction of the affine root."""
        return self._lin[idx], self._base_val[idx] + Fraction(level, self.datum.e)

    def reflection_from_function(self, a, c):
        """Reflection of E across {a . t + c = 0}, orthogonal for the
        restricted Killing form."""
        dual = mat_vec(self.gram_inv, a)
        norm = dot(a, dual)
        coef = Fraction(2) / norm
        mat = tuple(
            tuple((1 if i == j else 0) - coef * dual[i] * a[j] for j in range(self.dim))
            for i in range(self.dim)
        )
        trans = tuple(-coef * c * x for x in dual)
        return AffineIsometry(mat, trans)

    def crossings(self, t1, t2):
        """Normalized E-hyperplanes strictly separating two E-points."""
        d = self.datum
        out = set()
        for idx in range(len(d.roots)):
            if not d.positive[idx] or all(x == 0 for x in self._lin[idx]):
                continue
            a = self._base_val[idx] + dot(self._lin[idx], t1)
            b = self._base_val[idx] + dot(self._lin[idx], t2)
            lo, hi = (a, b) if a <= b else (b, a)
            n = _level_below(d, idx, hi)
            while Fraction(-n, d.e) > lo:
                if n % d.e in d.classes_by_root[idx]:
                    va = a + Fraction(n, d.e)
                    vb = b + Fraction(n, d.e)
                    if (va > 0 > vb) or (vb > 0 > va):
                        out.add(normalize_affine(*self.affine_function(idx, n)))
                n += 1
        return out

    def bounding_functions(self, t):
        """Candidate wall data around the E-point t: a list of
        (normalized key, ambient affine root, oriented (a, c) positive at t)."""
        d = self.datum
        out = []
        seen = set()
        for idx in range(len(d.roots)):
            if not d.positive[idx] or all(x == 0 for x in self._lin[idx]):
                continue
            v = self._base_val[idx] + dot(self._lin[idx], t)
            for ar_idx, n in ((idx, _level_below(d, idx, v)), (d.neg[idx], -_level_above(d, idx, v))):
                a, c = self.affine_function(ar_idx, n)
                key = normalize_affine(a, c)
                if key in seen:
                    continue
                seen.add(key)
                out.append((key, (ar_idx, n), (a, c)))
        return out

    def walls_of_alcove(self, t):
        """Walls of the E-alcove containing t.

        A bounding hyperplane is a wall when the open segment from t to
        its mirror image crosses exactly that one hyperplane of E.
        """
        walls = []
        for key, ar, (a, c) in self.bounding_functions(t):
            mirror = self.reflection_from_function(a, c).apply(t)
            if self.crossings(t, mirror) == {key}:
                walls.append((key, ar, (a, c)))
        return walls

    def alcove_facet(self, t):
        return facet_of(self.datum, self.from_coords(t))

    def enumerate_alcoves(self, t0, depth):
        """E-alcoves within gallery depth of the one containing t0.

        Returns a list of (t-coordinates, ambient Facet), breadth first.
        """
        start = (tuple(Fraction(c) for c in t0), self.alcove_facet(t0))
        seen = {start[1]}
        layers = [[start]]
        for _ in range(depth):
            nxt = []
            for t, _facet in layers[-1]:
                for _key, _ar, (a, c) in self.walls_of_alcove(t):
                    t2 = self.reflection_from_function(a, c).apply(t)
                    f2 = self.alcove_facet(t2)
                    if f2 not in seen:
                        seen.add(f2)
                        nxt.append((t2, f2))
            layers.append(nxt)
        return [item for layer in layers for item in layer]

    def wall_subspace(self, a, c):
        """The ambient affine subspace H = {a . t + c = 0} inside E."""
        from .pseudolevi import RelevantSubspace

        t0 = solve([list(a)], [-c])
        if t0 is None:
            raise InternalError("degenerate wall function")
        dirs_t = nullspace([list(a)], self.dim)
        base = self.from_coords(t0)
        dirs = tuple(
            tuple(sum(Fraction(tc) * u[i] for tc, u in zip(dt, self.dirs)) for i in range(len(base)))
            for dt in dirs_t
        )
        return RelevantSubspace(base, dirs)

    def alcove_vertices(self, t):
        """Vertices of the E-alcove simplex around t (requires dim+1 walls)."""
        walls = self.walls_of_alcove(t)
        if len(walls) != self.dim + 1:
            raise InternalError("subspace alcove is not a simplex")
        verts = []
        for omit in range(len(walls)):
            rows = [list(a) for j, (_k, _ar, (a, c)) in enumerate(walls) if j != omit]
            rhs = [-c for j, (_k, _ar, (a, c)) in enumerate(walls) if j != omit]
            v = solve(rows, rhs)
            if v is None:
                raise InternalError("alcove walls are degenerate")
            verts.append(v)
        return walls, verts

    def boundary_face(self, t, wall_indices):
        """The ambient facet of the face cut out by the given walls."""
        walls, verts = self.alcove_vertices(t)
        wall_set = set(wall_indices)
        keep = [verts[j] for j in range(len(walls)) if j not in wall_set]
        if not keep:
            raise EmptyFace("the full wall set cuts out the empty face")
        acc = tuple(Fraction(0) for _ in range(self.dim))
        for v in keep:
            acc = vec_add(acc, v)
        bary = vec_scale(Fraction(1, len(keep)), acc)
        return facet_of(self.datum, self.from_coords(bary))


def full_apartment(d):
    """The whole apartment as an ESpace."""
    from .linalg import identity
    from .pseudolevi import RelevantSubspace

    r = d.restricted_rank
    return ESpace(d, RelevantSubspace(tuple(Fraction(0) for _ in range(r)), tuple(identity(r))))
