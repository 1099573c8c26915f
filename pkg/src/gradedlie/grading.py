"""Torsion gradings of the twisted Lie algebra and their spirals.

A grading is specified by an integral cocharacter x, a positive period
m, and a nonzero integer weight eta for the dilation action.  The
graded pieces are indexed mod m; a facet of the apartment at level x/m
determines a spiral (a filtration-like family of label sets) and a
splitting whose terms recover the root system of the facet's
pseudo-Levi subalgebra.
"""

from dataclasses import dataclass
from fractions import Fraction

from .affine import conjugating_element, facet_of
from .errors import IntegralityFailure, LabelNotInSpiral, UsageError
from .espace import ESpace
from .linalg import vec_scale, vec_sub
from .pseudolevi import pseudo_levi_of, span_of_facet


@dataclass(frozen=True)
class GradingDatum:
    x: tuple        # integral cocharacter, apartment coordinates
    m: int          # period of the grading
    eta: int        # dilation weight, nonzero

    def __post_init__(self):
        if self.m <= 0:
            raise UsageError("grading period must be positive")
        if self.eta == 0:
            raise UsageError("dilation weight must be nonzero")
        for c in self.x:
            if Fraction(c).denominator != 1:
                raise UsageError("cocharacter coordinates must be integers")

    @property
    def epsilon(self):
        return 1 if self.eta > 0 else -1

    def point(self):
        """The rational point x/m of the apartment."""
        return tuple(Fraction(c, self.m) for c in self.x)


def _label_in_degree(d, g, idx, cls, n):
    """Whether the (root, class) label lands in the degree-n piece mod m."""
    return (Fraction(d.pairing(idx, g.x) - n, g.m) + Fraction(cls, d.e)).denominator == 1


def _cartan_class_in_degree(d, g, cls, n):
    return (Fraction(n, g.m) - Fraction(cls, d.e)).denominator == 1


def graded_piece(d, g, n):
    """Labels and Cartan dimension of the degree-n piece (n taken mod m)."""
    labels = [
        (idx, cls)
        for (idx, cls) in d.graded_support
        if _label_in_degree(d, g, idx, cls, n)
    ]
    cartan = sum(
        dim for cls, dim in d.cartan_graded_dims.items() if _cartan_class_in_degree(d, g, cls, n)
    )
    return tuple(labels), cartan


def spiral_of_facet(d, g, facet, window):
    """Spiral degrees n in [-window, window] attached to a facet.

    Returns a dict n -> (labels, cartan dimension): the degree-n piece
    cut down to weights at least epsilon * n for the cocharacter
    epsilon * (x - m * y), with y the facet's witness.
    """
    y = facet.witness
    return {n: _spiral_degree(d, g, y, n) for n in range(-window, window + 1)}


def _spiral_degree(d, g, y, n):
    eps = g.epsilon
    labels = []
    for (idx, cls) in d.graded_support:
        if not _label_in_degree(d, g, idx, cls, n):
            continue
        w = d.pairing(idx, g.x) - g.m * d.pairing(idx, y)
        if eps * w >= eps * n:
            labels.append((idx, cls))
    cartan = 0
    if eps * n <= 0:
        cartan = sum(
            dim
            for cls, dim in d.cartan_graded_dims.items()
            if _cartan_class_in_degree(d, g, cls, n)
        )
    return (tuple(labels), cartan)


@dataclass(frozen=True)
class SplittingDatum:
    levels: dict          # n -> tuple of labels (plus Cartan dimension at 0)
    cartan_dim: int       # Cartan contribution, sitting in degree 0
    pseudo_levi: object
    element: tuple        # grading element, apartment coordinates
    pairings: dict        # label -> integer pairing with the element


def splitting_of_facet(d, g, facet):
    """The splitting attached to a facet: degree-n parts consist of the
    labels of exact cocharacter weight epsilon * n.

    The labels appearing across all degrees, together with the degree-0
    Cartan classes, recover the facet's pseudo-Levi root system.
    """
    y = facet.witness
    eps = g.epsilon
    levels = {}
    for (idx, cls) in d.graded_support:
        w = d.pairing(idx, g.x) - g.m * d.pairing(idx, y)
        if w.denominator != 1:
            continue
        n = eps * int(w)
        if not _label_in_degree(d, g, idx, cls, n):
            continue
        levels.setdefault(n, []).append((idx, cls))
    cartan = sum(
        dim for cls, dim in d.cartan_graded_dims.items() if _cartan_class_in_degree(d, g, cls, 0)
    )
    levi = pseudo_levi_of(d, facet)
    got = {lab for labs in levels.values() for lab in labs}
    if got != set(levi.labels):
        raise IntegralityFailure("splitting labels do not match the pseudo-Levi roots")
    element, pairings = grading_element(d, g, levi.subspace)
    return SplittingDatum(
        levels={n: tuple(sorted(labs)) for n, labs in sorted(levels.items())},
        cartan_dim=cartan,
        pseudo_levi=levi,
        element=element,
        pairings=pairings,
    )


def grading_element(d, g, sub):
    """The semisimple grading element x - m * p(x/m), with p the
    Killing-orthogonal projection onto the subspace.

    Its pairings with the subspace's root labels must be integers.
    """
    if len(sub.directions) == 0:
        p = tuple(Fraction(c) for c in sub.base)
    else:
        p = ESpace(d, sub).project(g.point())
    j = vec_sub(tuple(Fraction(c) for c in g.x), vec_scale(Fraction(g.m), p))
    levi = pseudo_levi_of(d, sub)
    pairings = {}
    for (idx, cls) in levi.labels:
        v = d.pairing(idx, j)
        if v.denominator != 1:
            raise IntegralityFailure(
                "grading element pairs non-integrally with a pseudo-Levi root"
            )
        pairings[(idx, cls)] = int(v)
    return j, pairings


def s_weight(d, g, facet, label, n):
    """Weight of a spiral label under the combined torus action.

    The label must belong to degree n of the facet's spiral (label None
    selects the Cartan part, allowed when the degree-n Cartan dimension
    is positive).  Returns a dict with the torus, rotation, and dilation
    contributions; their sum is always n - eta.
    """
    labels, cartan = _spiral_degree(d, g, facet.witness, n)
    if label is None:
        if cartan == 0:
            raise LabelNotInSpiral("spiral has no Cartan part in this degree")
        torus = Fraction(0)
    else:
        if tuple(label) not in labels:
            raise LabelNotInSpiral("label does not occur in this spiral degree")
        torus = Fraction(d.pairing(label[0], g.x))
    rot = Fraction(d.e * (n - torus), g.m)
    if rot.denominator != 1:
        raise IntegralityFailure("rotation weight is not an integer")
    total = torus + Fraction(g.m, d.e) * rot - g.eta
    return {
        "torus": torus,
        "rotation": int(rot),
        "dilation": -g.eta,
        "total": total,
    }


def point_stabilizer_reflections(d, point):
    """Affine reflections fixing the point (generators of its little
    Weyl group inside the affine Weyl group)."""
    from .affine import _on_wall_level, positive_root_indices, reflection

    gens = []
    for idx in positive_root_indices(d):
        lvl = _on_wall_level(d, idx, d.pairing(idx, point))
        if lvl is not None:
            gens.append(reflection(d, idx, lvl))
    return gens


def extended_stabilizer(d, point, bound=200000):
    """Elements of the extended affine Weyl group fixing the point.

    Each element is a finite Weyl part paired with the translation by
    point - w(point), which must be integral.  The finite Weyl group is
    generated by the simple restricted reflections.
    """
    from .affine import AffineIsometry, reflection
    from .errors import GroupTooLarge

    r = d.restricted_rank
    simples = [reflection(d, d.root_index(tuple(1 if j == i else 0 for j in range(r))), 0).mat
               for i in range(r)]
    group = {tuple(map(tuple, m)) for m in simples}
    group.add(tuple(tuple(1 if i == j else 0 for j in range(r)) for i in range(r)))
    frontier = list(group)
    while frontier:
        if len(group) > bound:
            raise GroupTooLarge("finite Weyl group exceeds the enumeration bound")
        nxt = []
        for mkey in frontier:
            for s in simples:
                prod = tuple(
                    tuple(sum(s[i][k] * mkey[k][j] for k in range(r)) for j in range(r))
                    for i in range(r)
                )
                if prod not in group:
                    group.add(prod)
                    nxt.append(prod)
        frontier = nxt
    out = []
    pt = tuple(Fraction(c) for c in point)
    for mkey in group:
        img = tuple(sum(mkey[i][j] * pt[j] for j in range(r)) for i in range(r))
        tau = vec_sub(pt, img)
        if all(c.denominator == 1 for c in tau):
            out.append(AffineIsometry(mkey, tau))
    return out


@dataclass(frozen=True)
class BlockClass:
    representative: object   # Facet
    members: tuple           # Facets in the orbit, representative first
    eigen_point: tuple       # apartment coordinates, transported to the base span


def block_facets(d, g, base_facet, depth, bound=200000):
    """Alcoves of the base facet's span within the given gallery depth,
    partitioned into orbits under the stabilizer of x/m in the extended
    affine Weyl group.

    Each orbit carries an eigen-point: the Killing projection of x/m
    onto the representative's span, transported back to the base span.
    The transported point is checked to be constant across the orbit.
    """
    sub = span_of_facet(d, base_facet)
    if len(sub.directions) == 0:
        eigen = tuple(Fraction(c) for c in sub.base)
        return [BlockClass(base_facet, (base_facet,), eigen)]
    E = ESpace(d, sub)
    t0 = E.to_coords(base_facet.witness)
    alcoves = E.enumerate_alcoves(t0, depth)
    stab = extended_stabilizer(d, g.point(), bound=bound)
    # restrict the stabilizer to isometries preserving the span
    restricted = []
    for w in stab:
        img_base = w.apply(E.base)
        if not E.contains(img_base):
            continue
        ok = True
        for u in E.dirs:
            if not E.contains(w.apply(tuple(b + c for b, c in zip(E.base, u)))):
                ok = False
                break
        if ok:
            restricted.append(w)

    facets = {f.key: (t, f) for t, f in alcoves}
    unassigned = dict(facets)
    classes = []
    order = [f.key for _t, f in alcoves]
    for key in order:
        if key not in unassigned:
            continue
        _t_rep, rep = unassigned.pop(key)
        members = [rep]
        orbit_maps = {key: None}
        for w in restricted:
            img = facet_of(d, w.apply(rep.witness))
            if img.key in unassigned:
                _ti, f2 = unassigned.pop(img.key)
                members.append(f2)
                orbit_maps[img.key] = w
            elif img.key in facets and img.key not in orbit_maps:
                orbit_maps[img.key] = w
        rep_proj = ESpace(d, span_of_facet(d, rep)).project(g.point())
        transport = conjugating_element(d, rep, base_facet)
        eigen = transport.apply(rep_proj)
        for f2 in members[1:]:
            w = orbit_maps[f2.key]
            proj2 = ESpace(d, span_of_facet(d, f2)).project(g.point())
            alt = transport.compose(w.inverse()).apply(proj2)
            if alt != eigen:
                raise IntegralityFailure("eigen-point is not constant on the orbit")
        classes.append(BlockClass(rep, tuple(members), eigen))
    return classes
