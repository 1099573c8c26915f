"""Relative affine Weyl groups of relevant subspaces.

The hyperplanes of a subspace E are the restrictions of the ambient
affine-root walls.  Each wall of an E-alcove carries a shortest weight
covector, a coroot, a reflection of E, and (given a cuspidal datum) a
positive integer parameter read off from a Jordan block.  Orders of
products of wall reflections are computed both by a root-counting
formula and by direct iteration; disagreement is a hard error.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import chevalley
from .affine import AffineIsometry, facet_of
from .errors import (
    GroupTooLarge,
    InternalError,
    OrderMismatch,
    ZeroDimensional,
)
from .espace import ESpace
from .linalg import dot, nullspace, solve, vec_sub
from .pseudolevi import RelevantSubspace, pseudo_levi_of, span_of_facet
from .rootdata import class_vector


@dataclass(frozen=True)
class WallData:
    key: tuple            # normalized affine function on E
    function: tuple       # (a, c), positive on the base alcove
    affine_root: tuple    # ambient (root index, level) representative
    alpha: tuple          # shortest weight covector on E's directions
    alpha_affine: tuple   # (alpha, const), vanishing on the wall, positive on A
    coroot: tuple         # vector in E coordinates with <alpha, coroot> = 2
    reflection: object    # AffineIsometry of E coordinates
    n_plus: tuple         # (root index, class) labels on the positive side
    subspace: object      # RelevantSubspace spanned by the wall
    ell: Fraction         # half the root count of the wall's subsystem
    c: object = None      # parameter, filled in when a cuspidal datum is given


def _wall_levels(d, labels, base):
    """Affine level of each relevant label on a subspace through ``base``."""
    out = []
    for idx, cls in labels:
        n = -d.e * d.pairing(idx, base)
        if n.denominator != 1:
            raise InternalError("relevant label has non-integral level")
        out.append((idx, cls, int(n)))
    return out


def wall_data(d, E, wall, witness_t, levi_E):
    """Wall data for one wall of the E-alcove around ``witness_t``."""
    key, ar, (a, c) = wall
    sub = E.wall_subspace(a, c)
    levi_H = pseudo_levi_of(d, sub)
    y0 = E.from_coords(witness_t)
    in_E = set(levi_E.labels)
    n_plus = []
    for idx, cls, n in _wall_levels(d, levi_H.labels, sub.base):
        if (idx, cls) in in_E:
            continue
        if d.eval_affine((idx, n), y0) > 0:
            n_plus.append((idx, cls, n))
    if not n_plus:
        raise InternalError("wall has an empty positive nilradical")
    # restrictions of the positive labels are positive multiples of the
    # wall function; the shortest one is the wall's weight covector
    ratios = []
    lead = next(i for i, x in enumerate(a) if x != 0)
    for idx, cls, n in n_plus:
        lin = E.lin(idx)
        r = Fraction(lin[lead], a[lead])
        if r <= 0 or any(lin[i] != r * a[i] for i in range(E.dim)):
            raise InternalError("nilradical weight is not a positive multiple of the wall")
        ratios.append(r)
    r0 = min(ratios)
    for r in ratios:
        if (r / r0).denominator != 1:
            raise InternalError("nilradical weight ratios are not integers")
    alpha = tuple(r0 * x for x in a)
    alpha_const = r0 * c
    refl = E.reflection_from_function(a, c)
    fval = dot(alpha, witness_t) + alpha_const
    coroot = tuple(x / fval for x in vec_sub(witness_t, refl.apply(witness_t)))
    if dot(alpha, coroot) != 2:
        raise InternalError("wall coroot fails the pairing normalization")
    return WallData(
        key=key,
        function=(a, c),
        affine_root=ar,
        alpha=alpha,
        alpha_affine=(alpha, alpha_const),
        coroot=coroot,
        reflection=refl,
        n_plus=tuple((idx, cls) for idx, cls, _ in n_plus),
        subspace=sub,
        ell=levi_H.ell,
    )


def walls_of_alcove_in_E(d, E, witness_t, levi_E=None):
    """Wall data (without parameters) for the E-alcove around a point."""
    if levi_E is None:
        levi_E = pseudo_levi_of(d, E.sub)
    return [wall_data(d, E, w, witness_t, levi_E) for w in E.walls_of_alcove(witness_t)]


def coxeter_order_direct(w1, w2, cap=12):
    """Order of the composite of two reflections; None for infinite."""
    dim = len(w1.mat)
    prod = w1.compose(w2)
    ident = AffineIsometry.identity_map(dim)
    cur = prod
    for k in range(1, cap + 1):
        if cur == ident:
            return k
        cur = cur.compose(prod)
    return None


def coxeter_order_formula(d, E, wall1, wall2, ell_E):
    """Order of r_H r_H' from half-root counts of the nested subsystems."""
    a1, c1 = wall1.function
    a2, c2 = wall2.function
    if wall1.key == wall2.key:
        return 1
    # parallel restricted hyperplanes never meet: infinite order
    from .linalg import rank

    rows = [list(a1), list(a2)]
    if rank(rows) < 2:
        return None
    t0 = solve(rows, [-c1, -c2])
    if t0 is None:
        raise InternalError("intersecting walls with no common point")
    dirs_t = nullspace(rows, E.dim)
    base = E.from_coords(t0)
    dirs = tuple(
        tuple(
            sum(Fraction(tc) * u[i] for tc, u in zip(dt, E.dirs))
            for i in range(len(base))
        )
        for dt in dirs_t
    )
    levi_12 = pseudo_levi_of(d, RelevantSubspace(base, dirs))
    num = 2 * (levi_12.ell - ell_E)
    den = wall1.ell + wall2.ell - 2 * ell_E
    m = Fraction(num, den)
    if m.denominator != 1:
        raise OrderMismatch("root-count formula gives a non-integer order")
    return int(m)


@dataclass(frozen=True)
class RelWeylGroup:
    espace: object
    base_alcove: object       # ambient Facet of the base E-alcove
    walls: tuple              # WallData per simple wall
    coxeter: tuple            # matrix; entries int, None meaning infinite
    params: tuple             # c per wall, or None when no datum given


def rel_weyl_group(d, facet, cusp=None, registry=None):
    """The relative affine Weyl group of the span of an E-alcove facet.

    ``facet`` must be open in its span.  With a cuspidal datum (or a
    registry to pick it from by pseudo-Levi type) the wall parameters
    are filled in.
    """
    sub = span_of_facet(d, facet)
    if sub.dim == 0:
        raise ZeroDimensional("zero-dimensional span has no wall combinatorics")
    E = ESpace(d, sub)
    t = E.to_coords(facet.witness)
    levi_E = pseudo_levi_of(d, sub)
    walls = walls_of_alcove_in_E(d, E, t, levi_E)
    n = len(walls)
    coxeter = [[1] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            formula = coxeter_order_formula(d, E, walls[i], walls[j], levi_E.ell)
            direct = coxeter_order_direct(walls[i].reflection, walls[j].reflection)
            if formula != direct:
                raise OrderMismatch(
                    f"formula order {formula} != direct order {direct} for walls {i},{j}"
                )
            coxeter[i][j] = coxeter[j][i] = formula
    params = None
    if cusp is None and registry is not None:
        from .cuspidal import datum_for_type

        cusp = datum_for_type(registry, levi_E.cartan_type)
    if cusp is not None:
        from .cuspidal import validate_datum

        cert = validate_datum(d, cusp, sub)
        rep = cert["representative"]
        params = tuple(_wall_parameter(d, rep, w) for w in walls)
        walls = tuple(
            WallData(**{**w.__dict__, "c": p}) for w, p in zip(walls, params)
        )
    return RelWeylGroup(
        espace=E,
        base_alcove=facet,
        walls=tuple(walls),
        coxeter=tuple(tuple(row) for row in coxeter),
        params=params,
    )


def _wall_parameter(d, rep, wall):
    """1 + the largest Jordan block of ad(rep) on the wall's nilradical."""
    basis = [class_vector(d, idx, cls) for idx, cls in wall.n_plus]
    if not rep:
        return 2
    mat = chevalley.ad_in_span(d._alg, rep, basis)
    blocks = chevalley.nilpotent_block_sizes(mat)
    return 1 + (blocks[0] if blocks else 1)


def _close_group(gens, dim, bound):
    """All products of the given affine isometries (must generate a
    finite group)."""
    ident = AffineIsometry.identity_map(dim)
    group = {ident}
    frontier = [ident]
    while frontier:
        if len(group) > bound:
            raise GroupTooLarge("reflection group exceeds the enumeration bound")
        nxt = []
        for w in frontier:
            for s in gens:
                prod = s.compose(w)
                if prod not in group:
                    group.add(prod)
                    nxt.append(prod)
        frontier = nxt
    return group


def xi_classes(d, face, ref_alcove, bound=200000):
    """The orbit of a reference alcove under the reflections through a
    boundary face.

    Returns the list of alcove facets; the orbit size times the order of
    the pointwise stabilizer of the reference span equals the order of
    the face's reflection group.
    """
    from .affine import reflection

    gens = []
    seen = set()
    for (idx, lvl) in face.vanishing:
        from .rootdata import hyperplane_key

        k = hyperplane_key(d, idx, lvl)
        if k in seen:
            continue
        seen.add(k)
        gens.append(reflection(d, idx, lvl))
    group = _close_group(gens, d.restricted_rank, bound)
    orbit = {}
    for w in group:
        f = facet_of(d, w.apply(ref_alcove.witness))
        orbit.setdefault(f.key, f)
    w_a = pseudo_levi_of(d, span_of_facet(d, ref_alcove)).weyl_order
    if len(orbit) * w_a != len(group):
        raise InternalError("face orbit count violates the transitive-action formula")
    return list(orbit.values())


def wx_subgroup_orbits(d, g, base_facet, depth, bound=200000):
    """Orbit partition of windowed E-alcoves under the stabilizer of x/m.

    Convenience wrapper around the grading module's block enumeration;
    returns the list of orbit classes.
    """
    from .grading import block_facets

    return block_facets(d, g, base_facet, depth, bound=bound)
