"""Restricted root data for a pinned automorphism of a simple algebra.

Points of the apartment are tuples of rationals in the basis dual to
the simple restricted roots; in these coordinates the coweight lattice
of the adjoint group is exactly the integer points, so lattice tests
are integrality tests.  Restricted roots are integer covectors, and an
affine root is a pair (root index, level n) for the function
``<root, .> + n/e`` with n running over the residues supported by the
graded decomposition.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import chevalley, rootsystems
from .cyc import root_of_unity
from .errors import InvalidTwist
from .linalg import dot, inverse

VALID_TWISTS = {1, 2, 3}


def _validate_twist(series, rank, e):
    rootsystems.validate_type(series, rank)
    if e == 1:
        return
    if e == 2 and ((series == "A" and rank >= 2) or series == "D" or (series, rank) == ("E", 6)):
        return
    if e == 3 and (series, rank) == ("D", 4):
        return
    raise InvalidTwist(f"type {series}{rank} admits no twist of order {e}")


@dataclass
class RootDatum:
    series: str
    rank: int
    e: int
    restricted_rank: int
    roots: tuple                 # integer covectors over the dual basis
    neg: tuple
    positive: tuple              # bool per root
    classes_by_root: tuple       # tuple of sorted class tuples
    graded_support: tuple        # sorted (root index, class) pairs
    cartan_graded_dims: dict
    killing: tuple
    killing_inv: tuple
    coroots: tuple               # point vectors with s(y) = y - <a,y> a^vee
    ambient_dim: int
    _alg: object = field(repr=False, default=None)
    _auto: dict = field(repr=False, default=None)
    _orbit: tuple = field(repr=False, default=None)   # per root: ambient root orbit
    _wrap: tuple = field(repr=False, default=None)    # per root: wrap sign

    def pairing(self, idx, y):
        return dot(self.roots[idx], y)

    def eval_affine(self, affine_root, y):
        idx, level = affine_root
        return self.pairing(idx, y) + Fraction(level, self.e)

    def killing_pairing(self, x, y):
        return dot(x, tuple(dot(row, y) for row in self.killing))

    def dual_vector(self, covector):
        """The Killing-dual point of a covector."""
        return tuple(dot(row, covector) for row in self.killing_inv)

    def support_has(self, idx, level):
        return level % self.e in self.classes_by_root[idx]

    def root_index(self, covector):
        return self._lookup[tuple(covector)]

    def __post_init__(self):
        self._lookup = {v: i for i, v in enumerate(self.roots)}


def _is_positive(vec):
    for c in vec:
        if c != 0:
            return c > 0
    return False


def build_root_datum(series, rank, e=1):
    """Restricted root datum of the order-e pinned twist of type ``series rank``."""
    _validate_twist(series, rank, e)
    alg = chevalley.build_algebra(series, rank)
    auto = chevalley.pinned_automorphism(alg, e)
    node_perm = tuple(auto[i][0] for i in range(alg.rank))
    node_orbits = chevalley._orbits(node_perm, alg.rank)
    node_to_orbit = {}
    for s, orb in enumerate(node_orbits):
        for i in orb:
            node_to_orbit[i] = s
    rrank = len(node_orbits)

    def restrict(vec):
        out = [0] * rrank
        for i, c in enumerate(vec):
            out[node_to_orbit[i]] += c
        return tuple(out)

    groups = {}
    for ri in range(len(alg.roots)):
        groups.setdefault(restrict(alg.roots[ri]), []).append(ri)
    covectors = sorted(
        groups, key=lambda v: (not _is_positive(v), sum(abs(c) for c in v), v)
    )
    orbit_data = []
    classes = []
    for cv in covectors:
        members = set(groups[cv])
        orb, wrap = chevalley.automorphism_orbit(auto, alg.root_label(min(members)))
        orb_roots = tuple(alg.root_of_label(l) for l in orb)
        if set(orb_roots) != members:
            raise InvalidTwist("restriction fibers are not automorphism orbits")
        k = len(orb_roots)
        cls = tuple(i for i in range(e) if root_of_unity(e, i * k) == wrap)
        orbit_data.append((orb_roots, wrap))
        classes.append(cls)
    lookup = {v: i for i, v in enumerate(covectors)}
    neg = tuple(lookup[tuple(-c for c in v)] for v in covectors)
    positive = tuple(_is_positive(v) for v in covectors)
    support = tuple(
        sorted((idx, c) for idx, cls in enumerate(classes) for c in cls)
    )
    cartan_dims = {}
    for orb in node_orbits:
        k = len(orb)
        for i in range(e):
            if (i * k) % e == 0:
                cartan_dims[i] = cartan_dims.get(i, 0) + 1
    killing = tuple(
        tuple(
            sum(covectors[idx][i] * covectors[idx][j] for idx, _ in support)
            for j in range(rrank)
        )
        for i in range(rrank)
    )
    killing_inv = inverse(killing)
    coroots = []
    for v in covectors:
        dual = tuple(dot(row, v) for row in killing_inv)
        norm = dot(v, dual)
        coroots.append(tuple(2 * x / norm for x in dual))
    datum = RootDatum(
        series=series,
        rank=rank,
        e=e,
        restricted_rank=rrank,
        roots=tuple(covectors),
        neg=neg,
        positive=positive,
        classes_by_root=tuple(classes),
        graded_support=support,
        cartan_graded_dims=cartan_dims,
        killing=killing,
        killing_inv=killing_inv,
        coroots=tuple(coroots),
        ambient_dim=alg.dim,
        _alg=alg,
        _auto=auto,
        _orbit=tuple(od[0] for od in orbit_data),
        _wrap=tuple(od[1] for od in orbit_data),
    )
    total = sum(cartan_dims.values()) + len(support)
    if total != alg.dim:
        raise InvalidTwist("graded dimensions do not add up to the ambient dimension")
    return datum


def class_vector(d, idx, cls):
    """Eigenvector spanning the class-``cls`` piece over restricted root idx.

    A sparse element of the ambient algebra; scalars are rational except
    for the order-3 twist, where they live in Q(w).
    """
    if cls not in d.classes_by_root[idx]:
        raise InvalidTwist(f"class {cls} not supported on root {idx}")
    orb = d._orbit[idx]
    alg = d._alg
    out = {}
    cur = {alg.root_label(orb[0]): Fraction(1)}
    for s in range(len(orb)):
        scale = root_of_unity(d.e, (-cls * s) % d.e)
        for lab, c in cur.items():
            out[lab] = out.get(lab, 0) + scale * c
        cur = chevalley.apply_automorphism(d._auto, cur)
    return out


def cartan_class_vectors(d, cls):
    """Basis of the class-``cls`` piece of the ambient Cartan subalgebra."""
    alg = d._alg
    node_perm = tuple(d._auto[i][0] for i in range(alg.rank))
    out = []
    for orb in chevalley._orbits(node_perm, alg.rank):
        k = len(orb)
        if (cls * k) % d.e != 0:
            continue
        vec = {}
        cur = orb[0]
        for s in range(k):
            vec[cur] = root_of_unity(d.e, (-cls * s) % d.e)
            cur = node_perm[cur]
        out.append(vec)
    return out


def hyperplane_key(d, idx, level):
    """Canonical key of the affine hyperplane {<root idx, .> + level/e = 0}.

    Proportional affine functions (e.g. from a root and its double in a
    non-reduced system, or from opposite roots) share a key.
    """
    vec = d.roots[idx]
    offset = Fraction(level, d.e)
    g = 0
    lead = 0
    for c in vec:
        g = math.gcd(g, abs(c))
        if lead == 0:
            lead = c
    scale = Fraction(1 if lead > 0 else -1, g)
    return (tuple(c * scale for c in vec), offset * scale)


def lattice_point(d, y):
    """Whether y lies in the coweight lattice of the adjoint group."""
    return all(Fraction(c).denominator == 1 for c in y)
